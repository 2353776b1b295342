// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include "irsrelay/analytic.hpp"
#include "irsrelay/experiments.hpp"
#include "irsrelay/quantizer.hpp"
#include "irsrelay/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace irsrelay;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

SystemParams at(int n, int m, Bits k) {
    SystemParams p;
    p.n_elements = n;
    p.m_elements = m;
    p.k1_bits = k;
    p.k2_bits = k;
    return p;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome loss_bound_at_four_bits() {
    Outcome o;
    double worst = 0.0;
    for (int n : default_element_sweep()) {
        const SystemParams p = at(n, n, Bits(4));
        worst = std::max(worst, snr_loss(p, link_gains(p)).loss_pl_db);
    }
    o.pass = worst < 0.06;

    // The bound must not depend on the unknown noise floor.
    double worst_any_noise = 0.0;
    for (double sigma = -130.0; sigma <= -60.0; sigma += 10.0) {
        for (int n : default_element_sweep()) {
            SystemParams p = at(n, n, Bits(4));
            p.sigma_r_dbm = p.sigma_d_dbm = sigma;
            worst_any_noise = std::max(worst_any_noise, snr_loss(p, link_gains(p)).loss_pl_db);
        }
    }
    o.pass = o.pass && worst_any_noise < 0.06;

    // Common noise scaling leaves the loss unchanged once the per-hop SNR
    // cross term is negligible.
    double drift = 0.0;
    for (int n : default_element_sweep()) {
        SystemParams p = at(n, n, Bits(4));
        p.sigma_r_dbm = p.sigma_d_dbm = -160.0;
        const double base = snr_loss(p, link_gains(p)).loss_pl_db;
        for (double shift : {-20.0, 10.0}) {
            SystemParams q = p;
            q.sigma_r_dbm += shift;
            q.sigma_d_dbm += shift;
            const double l = snr_loss(q, link_gains(q)).loss_pl_db;
            drift = std::max(drift, std::abs(db_to_linear(l) / db_to_linear(base) - 1.0));
        }
    }
    o.pass = o.pass && drift < 1e-9;
    o.detail = fmt("max loss %.4f dB at -90 dBm, %.4f dB over -130..-60 dBm, scale drift %.2e", worst,
                   worst_any_noise, drift);
    return o;
}

Outcome rate_gap_at_1024() {
    Outcome o;
    const SystemParams p2 = at(1024, 1024, Bits(2));
    const SystemParams p3 = at(1024, 1024, Bits(3));
    const double d2 = snr_loss(p2, link_gains(p2)).rate_loss_pl;
    const double d3 = snr_loss(p3, link_gains(p3)).rate_loss_pl;
    o.pass = d2 >= 0.10 && d2 <= 0.20 && d3 >= 0.01 && d3 <= 0.05;
    o.detail = fmt("rate gap %.4f b/s/Hz at k=2, %.4f at k=3", d2, d3);
    return o;
}

Outcome approximation_gap() {
    Outcome o;
    double worst = 0.0;
    for (int k = 2; k <= 16; ++k) {
        for (int n : default_element_sweep()) {
            const SystemParams p = at(n, n, Bits(k));
            const LossReport r = snr_loss(p, link_gains(p));
            worst = std::max(worst, std::abs(r.loss_pl_db - r.loss_apl_db));
        }
    }
    o.pass = worst < 0.02;
    o.detail = fmt("max |loss_pl - loss_apl| = %.4f dB for k >= 2", worst);
    return o;
}

Outcome asymmetric_surfaces() {
    Outcome o;
    int violations = 0;
    double min_margin = 1e9;
    for (int k = 1; k <= 6; ++k) {
        const SystemParams big_first = at(1024, 128, Bits(k));
        const SystemParams big_second = at(128, 1024, Bits(k));
        for (Mode m : kAllModes) {
            const double a = achievable_rate(m, big_first, link_gains(big_first));
            const double b = achievable_rate(m, big_second, link_gains(big_second));
            min_margin = std::min(min_margin, a - b);
            violations += a > b ? 0 : 1;
        }
    }
    o.pass = violations == 0;
    o.detail = fmt("min rate margin %.4f b/s/Hz, %g violations", min_margin, violations);
    return o;
}

Outcome monotonicity() {
    Outcome o;
    int violations = 0;
    int checks = 0;
    const auto ns = default_element_sweep();
    for (int n : ns) {
        double prev_pl = 1e9;
        double prev_apl = 1e9;
        for (int k = 1; k <= 12; ++k) {
            const SystemParams p = at(n, n, Bits(k));
            const LossReport r = snr_loss(p, link_gains(p));
            violations += r.loss_pl_db <= prev_pl ? 0 : 1;
            violations += r.loss_apl_db <= prev_apl ? 0 : 1;
            checks += 2;
            prev_pl = r.loss_pl_db;
            prev_apl = r.loss_apl_db;
        }
    }
    for (int k = 1; k <= 12; ++k) {
        double prev_pl = -1.0;
        double prev_apl = -1.0;
        for (int n : ns) {
            const SystemParams p = at(n, n, Bits(k));
            const LossReport r = snr_loss(p, link_gains(p));
            violations += r.loss_pl_db >= prev_pl ? 0 : 1;
            violations += r.loss_apl_db >= prev_apl ? 0 : 1;
            checks += 2;
            prev_pl = r.loss_pl_db;
            prev_apl = r.loss_apl_db;
        }
    }
    o.pass = violations == 0;
    o.detail = fmt("%g checks, %g violations", checks, violations);
    return o;
}

Outcome monte_carlo_agreement() {
    Outcome o;
    McConfig c;
    c.trials = 10000;
    c.seed = 42;
    c.error_model = ErrorModel::grid;
    std::string lines;
    for (int n : {256, 1024}) {
        for (int k = 1; k <= 4; ++k) {
            const SystemParams p = at(n, n, Bits(k));
            const LinkGains g = link_gains(p);
            const McEstimate e = mc_estimate(p, g, c);
            const double analytic = snr_loss(p, g).loss_pl_db;
            const double tol = std::max(0.02, 3 * e.loss_db.std_error);
            const bool ok = std::abs(e.loss_db.mean - analytic) <= tol;
            o.pass = o.pass && ok;
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "\n       N=M=%d k=%d analytic %.4f mc %.4f +- %.4f tol %.4f %s (ratio of mean SNRs %.4f)",
                          n, k, analytic, e.loss_db.mean, e.loss_db.std_error, tol, ok ? "ok" : "MISS",
                          e.snr_ratio_loss_db.mean);
            lines += buf;
        }
    }
    o.detail = "10^4 trials, seed 42, grid errors" + lines;
    return o;
}

Outcome factorization() {
    Outcome o;
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> alpha(0.05, 3.0);
    std::uniform_real_distribution<double> dist(5.0, 300.0);
    std::uniform_real_distribution<double> gamma(1.6, 5.5);
    std::uniform_int_distribution<int> elems(1, 4096);
    std::uniform_int_distribution<int> bits(0, 10);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        SystemParams p;
        p.n_elements = elems(rng);
        p.m_elements = elems(rng);
        const int k1 = bits(rng);
        const int k2 = bits(rng);
        p.k1_bits = k1 == 0 ? Bits::continuous() : Bits(k1);
        p.k2_bits = k2 == 0 ? Bits::continuous() : Bits(k2);
        for (double* a : {&p.alpha_sr, &p.alpha_si, &p.alpha_ir, &p.alpha_ri, &p.alpha_id, &p.alpha_rd}) {
            *a = alpha(rng);
        }
        for (double* d : {&p.geometry.d_si, &p.geometry.d_ri, &p.geometry.d_sr, &p.geometry.d_rd}) {
            *d = dist(rng);
        }
        for (double* y : {&p.geometry.gamma_sr, &p.geometry.gamma_si, &p.geometry.gamma_ir, &p.geometry.gamma_ri,
                          &p.geometry.gamma_id, &p.geometry.gamma_rd}) {
            *y = gamma(rng);
        }
        const LinkGains g = link_gains(p);
        for (Mode m : kAllModes) {
            const CompositeTerms t = composite_terms(m, p, g);
            const double lhs = direct_term(p, g) + t.t1 + t.t2 + t.t3;
            const double rhs = mean_amplitude_first_hop(m, p, g) * mean_amplitude_second_hop(m, p, g);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
    }
    o.pass = worst <= 1e-12;
    o.detail = fmt("max relative residual %.3e over 1000 configurations", worst);
    return o;
}

Outcome quantizer_statistics() {
    Outcome o;
    constexpr int samples = 1000000;
    std::string lines;
    for (ErrorModel em : {ErrorModel::grid, ErrorModel::uniform}) {
        for (int k = 1; k <= 4; ++k) {
            RandomStream rng(1000 + k + (em == ErrorModel::uniform ? 100 : 0));
            double s = 0.0;
            double s2 = 0.0;
            for (int i = 0; i < samples; ++i) {
                const double e = em == ErrorModel::grid
                                     ? quantize_phase(rng.uniform(0.0, 2 * std::numbers::pi), Bits(k)).error
                                     : sample_phase_error(Bits(k), rng);
                const double c = std::cos(e);
                s += c;
                s2 += c * c;
            }
            const double mean = s / samples;
            const double sigma = std::sqrt((s2 / samples - mean * mean) / samples);
            const double z = std::abs(mean - sinc_factor(Bits(k))) / sigma;
            o.pass = o.pass && z <= 3.0;
            char buf[160];
            std::snprintf(buf, sizeof buf, "\n       %s k=%d mean cos %.6f sinc %.6f z %.2f",
                          std::string(to_string(em)).c_str(), k, mean, sinc_factor(Bits(k)), z);
            lines += buf;
        }
    }
    int strict_in_double = 0;
    for (int k = 1; k <= 16; ++k) {
        const double t = taylor_factor(Bits(k));
        const double s = sinc_factor(Bits(k));
        o.pass = o.pass && t <= s && taylor_deficit(Bits(k)) > 0.0;
        strict_in_double += t < s ? 1 : 0;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "\n       taylor < sinc for k=1..16 by series deficit; %d of 16 also strict in double arithmetic",
                  strict_in_double);
    o.detail = "10^6 samples per point" + lines + buf;
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1 loss below 0.06 dB at k=4", loss_bound_at_four_bits},
        {"AC2 rate gap at N=M=1024 for k=2,3", rate_gap_at_1024},
        {"AC3 Taylor approximation gap for k>=2", approximation_gap},
        {"AC4 larger first surface beats larger second", asymmetric_surfaces},
        {"AC5 loss monotone in k and N", monotonicity},
        {"AC6 Monte-Carlo matches closed-form loss", monte_carlo_agreement},
        {"AC7 composite terms factorize", factorization},
        {"AC8 quantizer statistics", quantizer_statistics},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
