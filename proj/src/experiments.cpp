// SPDX-License-Identifier: Apache-2.0

#include "irsrelay/experiments.hpp"

#include "irsrelay/analytic.hpp"

#include <algorithm>
#include <thread>

namespace irsrelay {

namespace {

struct Point {
    int n;
    int m;
    Bits k1;
    Bits k2;
};

std::vector<SweepRow> evaluate_points(const SystemParams& base, const std::vector<Point>& points,
                                      const std::optional<McConfig>& mc) {
    std::vector<SweepRow> rows(points.size());
    if (points.empty()) {
        return rows;
    }
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const auto workers = static_cast<unsigned>(std::min<std::size_t>(hw, points.size()));

    std::optional<McConfig> inner = mc;
    if (inner && workers > 1) {
        inner->threads = 1;
    }
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < points.size(); i += workers) {
                    const Point& pt = points[i];
                    rows[i] = evaluate_point(base, pt.n, pt.m, pt.k1, pt.k2, inner);
                }
            });
        }
    }
    return rows;
}

} // namespace

std::vector<int> default_element_sweep() { return {16, 32, 64, 128, 256, 512, 1024}; }

SweepRow evaluate_point(const SystemParams& base, int n, int m, Bits k1, Bits k2, const std::optional<McConfig>& mc) {
    SystemParams p = base;
    p.n_elements = n;
    p.m_elements = m;
    p.k1_bits = k1;
    p.k2_bits = k2;
    p.validate();
    const LinkGains g = link_gains(p);

    const double snr_npl = snr_destination(Mode::npl, p, g);
    const double snr_pl = snr_destination(Mode::pl, p, g);
    const double snr_apl = snr_destination(Mode::apl, p, g);
    const LossReport loss = snr_loss(p, g);

    SweepRow row;
    row.n = n;
    row.m = m;
    row.k1 = k1;
    row.k2 = k2;
    row.snr_npl_db = linear_to_db(snr_npl);
    row.snr_pl_db = linear_to_db(snr_pl);
    row.snr_apl_db = linear_to_db(snr_apl);
    row.loss_pl_db = loss.loss_pl_db;
    row.loss_apl_db = loss.loss_apl_db;
    row.rate_npl = rate_from_snr(snr_npl);
    row.rate_pl = rate_from_snr(snr_pl);
    row.rate_apl = rate_from_snr(snr_apl);

    if (mc && mc->trials > 0) {
        const McEstimate e = mc_estimate(p, g, *mc);
        row.mc = McColumns{e.loss_db.mean, e.loss_db.std_error, e.trials, e.seed, e.snr_ratio_loss_db.mean};
    }
    return row;
}

std::vector<SweepRow> sweep_elements(const SystemParams& base, const std::vector<int>& n_values,
                                     const std::vector<Bits>& k_values, const std::optional<McConfig>& mc) {
    std::vector<Point> points;
    for (Bits k : k_values) {
        for (int n : n_values) {
            points.push_back({n, n, k, k});
        }
    }
    return evaluate_points(base, points, mc);
}

std::vector<SweepRow> sweep_bits(const SystemParams& base, const std::vector<Bits>& k_values,
                                 const std::vector<std::pair<int, int>>& nm_pairs, const std::optional<McConfig>& mc) {
    std::vector<Point> points;
    for (const auto& [n, m] : nm_pairs) {
        for (Bits k : k_values) {
            points.push_back({n, m, k, k});
        }
    }
    return evaluate_points(base, points, mc);
}

} // namespace irsrelay
