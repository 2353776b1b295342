// SPDX-License-Identifier: Apache-2.0
//
// Closed-form destination SNR, SNR loss and achievable rate of the
// double-IRS amplify-and-forward link.
//
// Both hops are reduced to deterministic effective amplitudes by replacing
// each sum of independent Rayleigh magnitude products with N times its
// mean. With F(k) the coherent-gain attenuation of a k-bit phase shifter,
//
//   A = sqrt(pi/2 g_sr) a_sr + sqrt(g_sir) N F(k1) (pi/2) a_ir a_si
//   B = sqrt(pi/2 g_rd) a_rd + sqrt(g_rid) M F(k2) (pi/2) a_id a_ri
//   beta = sqrt(P_r) / sqrt(P_s A^2 + s_r^2)
//   SNR  = beta^2 P_r P_s (A B)^2 / (beta^2 P_r B^2 s_r^2 + s_d^2)
//
// The three modes differ only in F: 1 (no loss), sin(x)/x (quantization
// loss) and 1 - x^2/6 (Taylor approximation), x = pi/2^k.

#pragma once

#include "irsrelay/params.hpp"

#include <array>
#include <string_view>

namespace irsrelay {

enum class Mode {
    npl, ///< continuous phases, no performance loss
    pl,  ///< k-bit quantization, sinc attenuation
    apl, ///< k-bit quantization, Taylor-approximated attenuation
};

inline constexpr std::array<Mode, 3> kAllModes{Mode::npl, Mode::pl, Mode::apl};

std::string_view to_string(Mode m);

/// F(k) for the given mode; 1 for Mode::npl regardless of k.
double attenuation(Mode m, Bits k);

/// The v/u/q quadruple: the three reflected-path signal terms and the
/// forwarded-plus-destination noise power.
struct CompositeTerms {
    double t1 = 0.0; ///< IRS-1 path times the direct second hop
    double t2 = 0.0; ///< direct first hop times the IRS-2 path
    double t3 = 0.0; ///< IRS-1 path times the IRS-2 path
    double t4 = 0.0; ///< beta^2 P_r B^2 sigma_r^2 + sigma_d^2
};

struct AnalyticResult {
    Mode mode = Mode::npl;
    double a_first_hop = 0.0;
    double b_second_hop = 0.0;
    double beta = 0.0;
    CompositeTerms terms;
    double snr = 0.0;
    double snr_db = 0.0;
    double rate = 0.0;
};

struct LossReport {
    double loss_pl_db = 0.0;
    double loss_apl_db = 0.0;
    double rate_loss_pl = 0.0;
    double rate_loss_apl = 0.0;
};

double mean_amplitude_first_hop(Mode m, const SystemParams& p, const LinkGains& g);
double mean_amplitude_second_hop(Mode m, const SystemParams& p, const LinkGains& g);

/// AF amplification factor. With `normalized_relay` the numerator is 1
/// instead of sqrt(P_r).
double relay_gain(Mode m, const SystemParams& p, const LinkGains& g);

/// sqrt(g_sr g_rd) (pi/2) a_rd a_sr: the purely direct two-hop term.
double direct_term(const SystemParams& p, const LinkGains& g);

CompositeTerms composite_terms(Mode m, const SystemParams& p, const LinkGains& g);

double snr_destination(Mode m, const SystemParams& p, const LinkGains& g);

/// Per-hop SNRs: relay = P_s A^2 / s_r^2 and destination = P_r B^2 / s_d^2
/// (times the gain numerator). The destination SNR equals
/// relay * destination / (1 + relay + destination), so scaling both noise
/// powers by c scales it by 1/c only up to the trailing 1.
struct HopSnrs {
    double relay = 0.0;
    double destination = 0.0;
};

HopSnrs hop_snrs(Mode m, const SystemParams& p, const LinkGains& g);

/// log2(1 + snr); no half-duplex prefactor.
double rate_from_snr(double snr);

double achievable_rate(Mode m, const SystemParams& p, const LinkGains& g);

AnalyticResult evaluate(Mode m, const SystemParams& p, const LinkGains& g);

LossReport snr_loss(const SystemParams& p, const LinkGains& g);

} // namespace irsrelay
