// SPDX-License-Identifier: Apache-2.0

#include "irsrelay/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace irsrelay {

namespace {

void require_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw InvalidParameter("alpha", "Rayleigh scale must be finite and > 0");
    }
}

} // namespace

RandomStream::RandomStream(std::uint64_t seed) : engine_(seed) {}

RandomStream RandomStream::substream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return RandomStream(seq);
}

double RandomStream::uniform() {
    // 53 random mantissa bits; never returns 1.0.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double rayleigh_from_uniform(double alpha, double u) {
    require_alpha(alpha);
    return alpha * std::sqrt(-2.0 * std::log1p(-u));
}

double sample_rayleigh(double alpha, RandomStream& rng) { return rayleigh_from_uniform(alpha, rng.uniform()); }

std::vector<Tap> sample_channel_vector(int count, double alpha, RandomStream& rng) {
    require_alpha(alpha);
    std::vector<Tap> taps(static_cast<std::size_t>(std::max(count, 0)));
    for (Tap& t : taps) {
        t.magnitude = sample_rayleigh(alpha, rng);
        t.phase = 2.0 * std::numbers::pi * (1.0 - rng.uniform());
    }
    return taps;
}

ChannelRealization sample_realization(const SystemParams& p, RandomStream& rng) {
    ChannelRealization r;
    r.h_sr = sample_channel_vector(1, p.alpha_sr, rng).front();
    r.h_rd = sample_channel_vector(1, p.alpha_rd, rng).front();
    r.h_si = sample_channel_vector(p.n_elements, p.alpha_si, rng);
    r.h_ir = sample_channel_vector(p.n_elements, p.alpha_ir, rng);
    r.h_ri = sample_channel_vector(p.m_elements, p.alpha_ri, rng);
    r.h_id = sample_channel_vector(p.m_elements, p.alpha_id, rng);
    return r;
}

double rayleigh_mean(double alpha) {
    require_alpha(alpha);
    return alpha * std::sqrt(std::numbers::pi / 2.0);
}

double rayleigh_product_mean(double alpha1, double alpha2) {
    require_alpha(alpha1);
    require_alpha(alpha2);
    return std::numbers::pi / 2.0 * alpha1 * alpha2;
}

} // namespace irsrelay
