// SPDX-License-Identifier: Apache-2.0

#include "irsrelay/simulate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace irsrelay {

namespace {

using cplx = std::complex<double>;

struct HopInputs {
    double sqrt_g_direct;
    const Tap& direct;
    double sqrt_g_cascade;
    std::span<const Tap> incoming;
    std::span<const Tap> outgoing;
    Bits bits;
};

struct HopResult {
    double npl = 0.0;
    double pl = 0.0;
    double cos_sum = 0.0;
};

HopResult realize_hop(const HopInputs& hop, std::span<const double> ideal, ErrorModel model, RandomStream& rng) {
    HopResult out;
    out.npl = coherent_amplitude(hop.sqrt_g_direct, hop.direct, hop.sqrt_g_cascade, hop.incoming, hop.outgoing, ideal);

    std::vector<double> applied(ideal.size());
    for (std::size_t n = 0; n < ideal.size(); ++n) {
        double delta = 0.0;
        if (model == ErrorModel::grid) {
            const QuantizedPhase q = quantize_phase(ideal[n], hop.bits);
            applied[n] = q.value;
            delta = q.error;
        } else {
            delta = sample_phase_error(hop.bits, rng);
            applied[n] = ideal[n] + delta;
        }
        out.cos_sum += std::cos(delta);
    }
    out.pl = coherent_amplitude(hop.sqrt_g_direct, hop.direct, hop.sqrt_g_cascade, hop.incoming, hop.outgoing, applied);
    return out;
}

MeanWithError mean_and_error(std::span<const double> xs) {
    MeanWithError r;
    const auto n = xs.size();
    if (n == 0) {
        return r;
    }
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    r.mean = sum / static_cast<double>(n);
    if (n < 2) {
        return r;
    }
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - r.mean) * (x - r.mean);
    }
    r.std_error = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
    return r;
}

double sample_covariance(std::span<const double> xs, double mx, std::span<const double> ys, double my) {
    double s = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (xs[i] - mx) * (ys[i] - my);
    }
    return s / static_cast<double>(xs.size() - 1);
}

double gain_from_amplitude(const SystemParams& p, double a) {
    const double num = p.normalized_relay ? 1.0 : p.pr_mw();
    return std::sqrt(num) / std::sqrt(p.ps_mw() * a * a + p.sigma_r2_mw());
}

// 10 log10 of the SNR ratio obtained by plugging mean hop amplitudes into
// the two-hop expression, the relay gain following the first-hop amplitude.
double plug_in_loss_db(const SystemParams& p, const std::array<double, 4>& m) {
    const double snr_npl = end_to_end_snr(p, m[0], m[2], gain_from_amplitude(p, m[0]));
    const double snr_pl = end_to_end_snr(p, m[1], m[3], gain_from_amplitude(p, m[1]));
    return 10.0 * std::log10(snr_npl / snr_pl);
}

} // namespace

std::string_view to_string(ErrorModel m) { return m == ErrorModel::grid ? "grid" : "uniform"; }

std::string_view to_string(BetaModel m) { return m == BetaModel::instantaneous ? "instantaneous" : "averaged"; }

ErrorModel parse_error_model(std::string_view text) {
    if (text == "grid") {
        return ErrorModel::grid;
    }
    if (text == "uniform") {
        return ErrorModel::uniform;
    }
    throw InvalidParameter("error_model", "expected 'grid' or 'uniform', got '" + std::string(text) + "'");
}

BetaModel parse_beta_model(std::string_view text) {
    if (text == "instantaneous") {
        return BetaModel::instantaneous;
    }
    if (text == "averaged") {
        return BetaModel::averaged;
    }
    throw InvalidParameter("beta_model", "expected 'instantaneous' or 'averaged', got '" + std::string(text) + "'");
}

IrsPhases ideal_phases(const ChannelRealization& r) {
    IrsPhases out;
    out.first.resize(r.h_si.size());
    for (std::size_t n = 0; n < r.h_si.size(); ++n) {
        out.first[n] = wrap_to_two_pi(-r.h_sr.phase + r.h_ir[n].phase - r.h_si[n].phase);
    }
    out.second.resize(r.h_ri.size());
    for (std::size_t m = 0; m < r.h_ri.size(); ++m) {
        out.second[m] = wrap_to_two_pi(-r.h_rd.phase + r.h_id[m].phase - r.h_ri[m].phase);
    }
    return out;
}

double coherent_amplitude(double sqrt_g_direct, const Tap& direct, double sqrt_g_cascade,
                          std::span<const Tap> incoming, std::span<const Tap> outgoing,
                          std::span<const double> surface_phases) {
    if (incoming.size() != outgoing.size() || incoming.size() != surface_phases.size()) {
        throw std::invalid_argument("coherent_amplitude: tap and phase counts differ");
    }
    cplx reflected{0.0, 0.0};
    for (std::size_t n = 0; n < incoming.size(); ++n) {
        const double phase = -outgoing[n].phase + surface_phases[n] + incoming[n].phase;
        reflected += std::polar(outgoing[n].magnitude * incoming[n].magnitude, phase);
    }
    const cplx total = std::polar(sqrt_g_direct * direct.magnitude, -direct.phase) + sqrt_g_cascade * reflected;
    return std::abs(total);
}

double amplitude_with_errors(double sqrt_g_direct, double direct_magnitude, double sqrt_g_cascade,
                             std::span<const double> products, std::span<const double> errors) {
    if (products.size() != errors.size()) {
        throw std::invalid_argument("amplitude_with_errors: product and error counts differ");
    }
    cplx reflected{0.0, 0.0};
    for (std::size_t n = 0; n < products.size(); ++n) {
        reflected += std::polar(products[n], errors[n]);
    }
    return std::abs(sqrt_g_direct * direct_magnitude + sqrt_g_cascade * reflected);
}

RealizedAmplitudes realized_amplitudes(const ChannelRealization& r, const SystemParams& p, const LinkGains& g,
                                       ErrorModel error_model, RandomStream& rng) {
    const IrsPhases ideal = ideal_phases(r);

    const HopInputs first{std::sqrt(g.g_sr), r.h_sr, std::sqrt(g.g_sir), r.h_si, r.h_ir, p.k1_bits};
    const HopInputs second{std::sqrt(g.g_rd), r.h_rd, std::sqrt(g.g_rid), r.h_ri, r.h_id, p.k2_bits};

    const HopResult a = realize_hop(first, ideal.first, error_model, rng);
    const HopResult b = realize_hop(second, ideal.second, error_model, rng);

    RealizedAmplitudes out;
    out.a_npl = a.npl;
    out.a_pl = a.pl;
    out.b_npl = b.npl;
    out.b_pl = b.pl;
    out.cos_error_sum_first = a.cos_sum;
    out.cos_error_sum_second = b.cos_sum;
    return out;
}

double end_to_end_snr(const SystemParams& p, double a, double b, double beta) {
    const double pr = p.pr_mw();
    const double b2 = beta * beta;
    const double noise = b2 * pr * b * b * p.sigma_r2_mw() + p.sigma_d2_mw();
    return b2 * pr * p.ps_mw() * a * a * b * b / noise;
}

TrialOutcome trial_snr(const ChannelRealization& r, const SystemParams& p, const LinkGains& g, const McConfig& config,
                       RandomStream& rng) {
    TrialOutcome out;
    out.amplitudes = realized_amplitudes(r, p, g, config.error_model, rng);
    const RealizedAmplitudes& amp = out.amplitudes;

    double beta_npl = 0.0;
    double beta_pl = 0.0;
    if (config.beta_model == BetaModel::instantaneous) {
        beta_npl = gain_from_amplitude(p, amp.a_npl);
        beta_pl = gain_from_amplitude(p, amp.a_pl);
    } else {
        beta_npl = relay_gain(Mode::npl, p, g);
        beta_pl = relay_gain(Mode::pl, p, g);
    }
    out.snr_npl = end_to_end_snr(p, amp.a_npl, amp.b_npl, beta_npl);
    out.snr_pl = end_to_end_snr(p, amp.a_pl, amp.b_pl, beta_pl);
    out.rate_npl = std::log2(1.0 + out.snr_npl);
    out.rate_pl = std::log2(1.0 + out.snr_pl);
    return out;
}

TrialOutcome run_trial(const SystemParams& p, const LinkGains& g, const McConfig& config, std::uint64_t index) {
    RandomStream rng = RandomStream::substream(config.seed, index);
    const ChannelRealization r = sample_realization(p, rng);
    return trial_snr(r, p, g, config, rng);
}

McEstimate mc_estimate(const SystemParams& p, const LinkGains& g, const McConfig& config) {
    if (config.trials < 1) {
        throw InvalidParameter("trials", "must be >= 1");
    }
    const auto trials = static_cast<std::size_t>(config.trials);
    std::vector<TrialOutcome> outcomes(trials);

    unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, trials));
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < trials; i += workers) {
                    outcomes[i] = run_trial(p, g, config, i);
                }
            });
        }
    }

    // Reduce in trial order so the result does not depend on scheduling.
    std::vector<double> snr_npl(trials), snr_pl(trials), rate_npl(trials), rate_pl(trials);
    std::array<std::vector<double>, 4> amps;
    for (auto& v : amps) {
        v.resize(trials);
    }
    std::vector<double> cos_first(trials), cos_second(trials);
    const double n_first = std::max(p.n_elements, 1);
    const double n_second = std::max(p.m_elements, 1);
    for (std::size_t i = 0; i < trials; ++i) {
        const TrialOutcome& t = outcomes[i];
        snr_npl[i] = t.snr_npl;
        snr_pl[i] = t.snr_pl;
        rate_npl[i] = t.rate_npl;
        rate_pl[i] = t.rate_pl;
        amps[0][i] = t.amplitudes.a_npl;
        amps[1][i] = t.amplitudes.a_pl;
        amps[2][i] = t.amplitudes.b_npl;
        amps[3][i] = t.amplitudes.b_pl;
        cos_first[i] = t.amplitudes.cos_error_sum_first / n_first;
        cos_second[i] = t.amplitudes.cos_error_sum_second / n_second;
    }

    McEstimate e;
    e.trials = config.trials;
    e.seed = config.seed;
    e.error_model = config.error_model;
    e.beta_model = config.beta_model;
    e.low_confidence = trials < 2;
    e.snr_npl = mean_and_error(snr_npl);
    e.snr_pl = mean_and_error(snr_pl);
    e.rate_npl = mean_and_error(rate_npl);
    e.rate_pl = mean_and_error(rate_pl);
    e.a_npl = mean_and_error(amps[0]);
    e.a_pl = mean_and_error(amps[1]);
    e.b_npl = mean_and_error(amps[2]);
    e.b_pl = mean_and_error(amps[3]);
    e.cos_error_first = mean_and_error(cos_first);
    e.cos_error_second = mean_and_error(cos_second);

    constexpr double db_per_neper = 10.0 / std::numbers::ln10;
    e.snr_ratio_loss_db.mean = 10.0 * std::log10(e.snr_npl.mean / e.snr_pl.mean);

    const std::array<double, 4> means{e.a_npl.mean, e.a_pl.mean, e.b_npl.mean, e.b_pl.mean};
    e.loss_db.mean = plug_in_loss_db(p, means);

    if (trials >= 2) {
        // Delta method on the paired means.
        const double m0 = e.snr_npl.mean;
        const double m1 = e.snr_pl.mean;
        const double n = static_cast<double>(trials);
        const double var_log = (sample_covariance(snr_npl, m0, snr_npl, m0) / (m0 * m0) +
                                sample_covariance(snr_pl, m1, snr_pl, m1) / (m1 * m1) -
                                2.0 * sample_covariance(snr_npl, m0, snr_pl, m1) / (m0 * m1)) /
                               n;
        e.snr_ratio_loss_db.std_error = db_per_neper * std::sqrt(std::max(var_log, 0.0));

        std::array<double, 4> grad{};
        for (std::size_t j = 0; j < 4; ++j) {
            const double h = 1e-6 * std::max(std::abs(means[j]), 1e-300);
            auto up = means;
            auto down = means;
            up[j] += h;
            down[j] -= h;
            grad[j] = (plug_in_loss_db(p, up) - plug_in_loss_db(p, down)) / (2.0 * h);
        }
        double var = 0.0;
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t l = 0; l < 4; ++l) {
                var += grad[j] * grad[l] * sample_covariance(amps[j], means[j], amps[l], means[l]);
            }
        }
        e.loss_db.std_error = std::sqrt(std::max(var / n, 0.0));
        if (p.k1_bits.is_continuous() && p.k2_bits.is_continuous()) {
            e.loss_db.std_error = 0.0;
        }
    }
    return e;
}

} // namespace irsrelay
