// SPDX-License-Identifier: Apache-2.0

#include "irsrelay/analytic.hpp"

#include "irsrelay/quantizer.hpp"

#include <cmath>
#include <numbers>

namespace irsrelay {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// The relay re-radiates with sqrt(P_r) in the second-hop signal; the gain
// numerator repeats it unless the relay output is normalized.
double gain_numerator_sq(const SystemParams& p) { return p.normalized_relay ? 1.0 : p.pr_mw(); }

} // namespace

std::string_view to_string(Mode m) {
    switch (m) {
    case Mode::npl:
        return "npl";
    case Mode::pl:
        return "pl";
    case Mode::apl:
        return "apl";
    }
    return "?";
}

double attenuation(Mode m, Bits k) {
    switch (m) {
    case Mode::npl:
        return 1.0;
    case Mode::pl:
        return sinc_factor(k);
    case Mode::apl:
        return taylor_factor(k);
    }
    return 1.0;
}

double mean_amplitude_first_hop(Mode m, const SystemParams& p, const LinkGains& g) {
    return std::sqrt(kHalfPi * g.g_sr) * p.alpha_sr +
           std::sqrt(g.g_sir) * p.n_elements * attenuation(m, p.k1_bits) * kHalfPi * p.alpha_ir * p.alpha_si;
}

double mean_amplitude_second_hop(Mode m, const SystemParams& p, const LinkGains& g) {
    return std::sqrt(kHalfPi * g.g_rd) * p.alpha_rd +
           std::sqrt(g.g_rid) * p.m_elements * attenuation(m, p.k2_bits) * kHalfPi * p.alpha_id * p.alpha_ri;
}

double relay_gain(Mode m, const SystemParams& p, const LinkGains& g) {
    const double a = mean_amplitude_first_hop(m, p, g);
    return std::sqrt(gain_numerator_sq(p)) / std::sqrt(p.ps_mw() * a * a + p.sigma_r2_mw());
}

double direct_term(const SystemParams& p, const LinkGains& g) {
    return std::sqrt(g.g_sr * g.g_rd) * kHalfPi * p.alpha_rd * p.alpha_sr;
}

CompositeTerms composite_terms(Mode m, const SystemParams& p, const LinkGains& g) {
    const double f1 = attenuation(m, p.k1_bits);
    const double f2 = attenuation(m, p.k2_bits);
    const double half_pi_32 = std::pow(kHalfPi, 1.5);
    const double n = p.n_elements;
    const double mm = p.m_elements;

    CompositeTerms t;
    t.t1 = std::sqrt(g.g_sir * g.g_rd) * n * half_pi_32 * p.alpha_rd * p.alpha_ir * p.alpha_si * f1;
    t.t2 = std::sqrt(g.g_sr * g.g_rid) * mm * half_pi_32 * p.alpha_id * p.alpha_ri * p.alpha_sr * f2;
    t.t3 = std::sqrt(g.g_sir * g.g_rid) * mm * n * (std::numbers::pi * std::numbers::pi / 4.0) * p.alpha_id *
           p.alpha_ri * p.alpha_ir * p.alpha_si * f1 * f2;

    const double beta = relay_gain(m, p, g);
    const double b = mean_amplitude_second_hop(m, p, g);
    t.t4 = beta * beta * p.pr_mw() * b * b * p.sigma_r2_mw() + p.sigma_d2_mw();
    return t;
}

double snr_destination(Mode m, const SystemParams& p, const LinkGains& g) {
    const CompositeTerms t = composite_terms(m, p, g);
    const double beta = relay_gain(m, p, g);
    const double signal = direct_term(p, g) + t.t1 + t.t2 + t.t3;
    return beta * beta * p.pr_mw() * p.ps_mw() * signal * signal / t.t4;
}

HopSnrs hop_snrs(Mode m, const SystemParams& p, const LinkGains& g) {
    const double a = mean_amplitude_first_hop(m, p, g);
    const double b = mean_amplitude_second_hop(m, p, g);
    return {p.ps_mw() * a * a / p.sigma_r2_mw(), gain_numerator_sq(p) * p.pr_mw() * b * b / p.sigma_d2_mw()};
}

double rate_from_snr(double snr) { return std::log2(1.0 + snr); }

double achievable_rate(Mode m, const SystemParams& p, const LinkGains& g) {
    return rate_from_snr(snr_destination(m, p, g));
}

AnalyticResult evaluate(Mode m, const SystemParams& p, const LinkGains& g) {
    AnalyticResult r;
    r.mode = m;
    r.a_first_hop = mean_amplitude_first_hop(m, p, g);
    r.b_second_hop = mean_amplitude_second_hop(m, p, g);
    r.beta = relay_gain(m, p, g);
    r.terms = composite_terms(m, p, g);
    r.snr = snr_destination(m, p, g);
    r.snr_db = linear_to_db(r.snr);
    r.rate = rate_from_snr(r.snr);
    return r;
}

LossReport snr_loss(const SystemParams& p, const LinkGains& g) {
    const double snr_npl = snr_destination(Mode::npl, p, g);
    const double snr_pl = snr_destination(Mode::pl, p, g);
    const double snr_apl = snr_destination(Mode::apl, p, g);

    LossReport r;
    r.loss_pl_db = linear_to_db(snr_npl / snr_pl);
    r.loss_apl_db = linear_to_db(snr_npl / snr_apl);
    r.rate_loss_pl = rate_from_snr(snr_npl) - rate_from_snr(snr_pl);
    r.rate_loss_apl = rate_from_snr(snr_npl) - rate_from_snr(snr_apl);
    return r;
}

} // namespace irsrelay
