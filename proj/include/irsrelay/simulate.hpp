// SPDX-License-Identifier: Apache-2.0
//
// Monte-Carlo reference for the closed forms. Each trial draws a full
// channel realization, aligns both surfaces to the direct-path phase,
// quantizes (or perturbs) the phases and evaluates the realized end-to-end
// SNR. Continuous and quantized configurations share the realization of a
// trial, so quantization is the only difference between them.

#pragma once

#include "irsrelay/analytic.hpp"
#include "irsrelay/channels.hpp"
#include "irsrelay/params.hpp"
#include "irsrelay/quantizer.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace irsrelay {

enum class BetaModel {
    instantaneous, ///< relay normalizes by its realized receive power
    averaged,      ///< relay gain from the closed-form mean amplitude
};

std::string_view to_string(ErrorModel m);
std::string_view to_string(BetaModel m);
ErrorModel parse_error_model(std::string_view text);
BetaModel parse_beta_model(std::string_view text);

struct McConfig {
    std::int64_t trials = 10000;
    std::uint64_t seed = 42;
    ErrorModel error_model = ErrorModel::grid;
    BetaModel beta_model = BetaModel::instantaneous;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Continuous phases applied by each surface.
struct IrsPhases {
    std::vector<double> first;  // N entries, [0, 2*pi)
    std::vector<double> second; // M entries, [0, 2*pi)
};

/// Realized effective amplitudes |y| / sqrt(P) of both hops.
struct RealizedAmplitudes {
    double a_npl = 0.0;
    double a_pl = 0.0;
    double b_npl = 0.0;
    double b_pl = 0.0;
    /// Sums of cos(delta) over the elements of each surface.
    double cos_error_sum_first = 0.0;
    double cos_error_sum_second = 0.0;
};

struct TrialOutcome {
    RealizedAmplitudes amplitudes;
    double snr_npl = 0.0;
    double snr_pl = 0.0;
    double rate_npl = 0.0;
    double rate_pl = 0.0;
};

struct MeanWithError {
    double mean = 0.0;
    double std_error = 0.0;
};

struct McEstimate {
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    ErrorModel error_model = ErrorModel::grid;
    BetaModel beta_model = BetaModel::instantaneous;

    MeanWithError snr_npl;
    MeanWithError snr_pl;
    MeanWithError rate_npl;
    MeanWithError rate_pl;

    /// 10 log10(mean snr_npl / mean snr_pl), with a paired delta-method
    /// standard error.
    MeanWithError snr_ratio_loss_db;

    /// Loss obtained by feeding the Monte-Carlo mean amplitudes through the
    /// end-to-end SNR expression. This is the quantity the closed forms
    /// approximate (they replace every magnitude by its mean), so it is the
    /// estimate compared against them.
    MeanWithError loss_db;

    MeanWithError a_npl;
    MeanWithError a_pl;
    MeanWithError b_npl;
    MeanWithError b_pl;

    /// Mean of cos(delta) per surface, pooled over elements and trials.
    MeanWithError cos_error_first;
    MeanWithError cos_error_second;

    /// Set when trials < 2: standard errors are reported as 0.
    bool low_confidence = false;
};

/// Phases aligning every reflected path with the direct path:
/// phi_n = -phase(h_sr) + phase(h_ir(n)) - phase(h_si(n)), and likewise for
/// IRS-2 against h_rd.
IrsPhases ideal_phases(const ChannelRealization& r);

/// |sqrt(g_direct) h_direct + sqrt(g_cascade) sum_n h_out(n)^* e^{j theta_n} h_in(n)|
/// with the conjugated taps written in polar form. `incoming` reaches the
/// surface, `outgoing` leaves it.
double coherent_amplitude(double sqrt_g_direct, const Tap& direct, double sqrt_g_cascade,
                          std::span<const Tap> incoming, std::span<const Tap> outgoing,
                          std::span<const double> surface_phases);

/// |sqrt(g_direct) m_direct + sqrt(g_cascade) sum_n products(n) e^{j delta_n}|:
/// the aligned sum with explicit residual phase errors.
double amplitude_with_errors(double sqrt_g_direct, double direct_magnitude, double sqrt_g_cascade,
                             std::span<const double> products, std::span<const double> errors);

RealizedAmplitudes realized_amplitudes(const ChannelRealization& r, const SystemParams& p, const LinkGains& g,
                                       ErrorModel error_model, RandomStream& rng);

/// Two-hop AF SNR for given hop amplitudes and relay gain.
double end_to_end_snr(const SystemParams& p, double a, double b, double beta);

TrialOutcome trial_snr(const ChannelRealization& r, const SystemParams& p, const LinkGains& g, const McConfig& config,
                       RandomStream& rng);

/// Runs one trial from its (seed, index) substream.
TrialOutcome run_trial(const SystemParams& p, const LinkGains& g, const McConfig& config, std::uint64_t index);

McEstimate mc_estimate(const SystemParams& p, const LinkGains& g, const McConfig& config);

} // namespace irsrelay
