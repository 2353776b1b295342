// SPDX-License-Identifier: Apache-2.0
//
// Rayleigh fading taps and the seeded random streams that drive them.

#pragma once

#include "irsrelay/params.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace irsrelay {

/// Seeded uniform source. Monte-Carlo trials draw from
/// `RandomStream::substream(seed, trial)` so every trial is reproducible on
/// its own, independent of scheduling.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    static RandomStream substream(std::uint64_t seed, std::uint64_t index);

    /// Uniform on [0, 1).
    double uniform();

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    explicit RandomStream(std::seed_seq& seq) : engine_(seq) {}
    std::mt19937_64 engine_;
};

/// One fading coefficient in polar form; phase in (0, 2*pi].
struct Tap {
    double magnitude = 0.0;
    double phase = 0.0;
};

struct ChannelRealization {
    Tap h_sr;
    Tap h_rd;
    std::vector<Tap> h_si; // N
    std::vector<Tap> h_ir; // N
    std::vector<Tap> h_ri; // M
    std::vector<Tap> h_id; // M
};

/// Inverse CDF of the Rayleigh law: alpha * sqrt(-2 ln(1 - u)).
double rayleigh_from_uniform(double alpha, double u);

double sample_rayleigh(double alpha, RandomStream& rng);

/// Rayleigh magnitudes with independent phases uniform on (0, 2*pi].
std::vector<Tap> sample_channel_vector(int count, double alpha, RandomStream& rng);

/// Draws every link of one trial. Order of consumption: h_sr, h_rd, h_si,
/// h_ir, h_ri, h_id.
ChannelRealization sample_realization(const SystemParams& p, RandomStream& rng);

/// E|h| = alpha * sqrt(pi / 2).
double rayleigh_mean(double alpha);

/// E|h1||h2| = (pi / 2) * alpha1 * alpha2 for independent taps.
double rayleigh_product_mean(double alpha1, double alpha2);

} // namespace irsrelay
