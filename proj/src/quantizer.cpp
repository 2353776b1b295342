// SPDX-License-Identifier: Apache-2.0

#include "irsrelay/quantizer.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace irsrelay {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Distances within this band count as equidistant (a few ulps of 2*pi).
constexpr double kTieTolerance = 1e-12;

double circular_distance(double a, double b) {
    const double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

} // namespace

double half_step(Bits k) { return k.is_continuous() ? 0.0 : std::ldexp(kPi, -k.value()); }

double wrap_to_two_pi(double phase) {
    double r = std::fmod(phase, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round up to exactly 2*pi.
    return r >= kTwoPi ? 0.0 : r;
}

double wrap_to_pi(double phase) {
    return wrap_to_two_pi(phase + kPi) - kPi;
}

std::vector<double> phase_set(Bits k) {
    if (k.is_continuous()) {
        throw InvalidParameter("bits", "a continuous quantizer has no finite phase set");
    }
    if (k.value() > 30) {
        throw InvalidParameter("bits", "phase set too large to enumerate");
    }
    const std::size_t levels = std::size_t{1} << k.value();
    const double half = half_step(k);
    std::vector<double> out(levels);
    for (std::size_t i = 0; i < levels; ++i) {
        out[i] = static_cast<double>(2 * i + 1) * half;
    }
    return out;
}

QuantizedPhase quantize_phase(double phi, Bits k) {
    if (k.is_continuous()) {
        return {phi, 0.0};
    }
    const double reduced = wrap_to_two_pi(phi);
    const double half = half_step(k);
    const double step = 2.0 * half;
    const long long levels = 1LL << k.value();

    // The cell [i*step, (i+1)*step) is centred on grid point i; check the
    // neighbours as well so rounding at cell edges resolves by distance.
    const long long cell = std::min(static_cast<long long>(std::floor(reduced / step)), levels - 1);
    const std::array<long long, 3> candidates{(cell + levels - 1) % levels, cell, (cell + 1) % levels};

    double best_value = 0.0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (long long i : candidates) {
        const double value = static_cast<double>(2 * i + 1) * half;
        const double dist = circular_distance(value, reduced);
        const bool tie = std::abs(dist - best_dist) <= kTieTolerance;
        if ((!tie && dist < best_dist) || (tie && value < best_value)) {
            best_dist = dist;
            best_value = value;
        }
    }
    return {best_value, wrap_to_pi(best_value - reduced)};
}

double sample_phase_error(Bits k, RandomStream& rng) {
    if (k.is_continuous()) {
        return 0.0;
    }
    const double half = half_step(k);
    return rng.uniform(-half, half);
}

double sinc_factor(Bits k) {
    if (k.is_continuous()) {
        return 1.0;
    }
    const double x = half_step(k);
    if (x > 0.1) {
        return std::sin(x) / x;
    }
    return taylor_factor(k) + taylor_deficit(k);
}

double taylor_factor(Bits k) {
    if (k.is_continuous()) {
        return 1.0;
    }
    const double x = half_step(k);
    return 1.0 - x * x / 6.0;
}

double taylor_deficit(Bits k) {
    if (k.is_continuous()) {
        return 0.0;
    }
    const double x = half_step(k);
    if (x > 0.1) {
        return std::sin(x) / x - (1.0 - x * x / 6.0);
    }
    // Alternating series sum_{n>=2} (-1)^n x^(2n) / (2n+1)!; terms shrink by
    // at least x^2/42 < 1e-3, so a handful reach full precision.
    const double x2 = x * x;
    double term = x2 * x2 / 120.0;
    double sum = 0.0;
    for (int n = 2; n < 10; ++n) {
        sum += term;
        term *= -x2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
    }
    return sum;
}

} // namespace irsrelay
