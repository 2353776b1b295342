// SPDX-License-Identifier: Apache-2.0
//
// Parameter sweeps over surface sizes and quantizer resolutions, with
// optional Monte-Carlo columns.

#pragma once

#include "irsrelay/params.hpp"
#include "irsrelay/simulate.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace irsrelay {

struct McColumns {
    double loss_db = 0.0;
    double std_error = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double snr_ratio_loss_db = 0.0;

    friend bool operator==(const McColumns&, const McColumns&) = default;
};

struct SweepRow {
    int n = 0;
    int m = 0;
    Bits k1 = Bits::continuous();
    Bits k2 = Bits::continuous();
    double snr_npl_db = 0.0;
    double snr_pl_db = 0.0;
    double snr_apl_db = 0.0;
    double loss_pl_db = 0.0;
    double loss_apl_db = 0.0;
    double rate_npl = 0.0;
    double rate_pl = 0.0;
    double rate_apl = 0.0;
    std::optional<McColumns> mc;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Powers of two 16..1024.
std::vector<int> default_element_sweep();

/// Analytic row for one (N, M, k1, k2) point; `mc` adds Monte-Carlo columns
/// when its trial count is positive.
SweepRow evaluate_point(const SystemParams& base, int n, int m, Bits k1, Bits k2,
                        const std::optional<McConfig>& mc = std::nullopt);

/// Rows for every (N, k) with M = N and k1 = k2 = k, ordered by k then N.
std::vector<SweepRow> sweep_elements(const SystemParams& base, const std::vector<int>& n_values,
                                     const std::vector<Bits>& k_values,
                                     const std::optional<McConfig>& mc = std::nullopt);

/// Rows for every (N, M) pair and k in `k_values`, ordered by pair then k.
std::vector<SweepRow> sweep_bits(const SystemParams& base, const std::vector<Bits>& k_values,
                                 const std::vector<std::pair<int, int>>& nm_pairs,
                                 const std::optional<McConfig>& mc = std::nullopt);

} // namespace irsrelay
