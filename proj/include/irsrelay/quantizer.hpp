// SPDX-License-Identifier: Apache-2.0
//
// k-bit discrete phase shifter model.
//
// The feasible set holds 2^k phases at odd multiples of pi/2^k, so the grid
// spacing is 2*pi/2^k and nearest-point rounding leaves an error in
// [-pi/2^k, pi/2^k]. Under a uniform error the mean coherent gain cos(delta)
// is sin(x)/x with x = pi/2^k; the second-order Taylor expansion of the
// cosine gives the cheaper 1 - x^2/6.

#pragma once

#include "irsrelay/channels.hpp"
#include "irsrelay/params.hpp"

#include <vector>

namespace irsrelay {

/// How phase errors are produced in simulation.
enum class ErrorModel {
    grid,    ///< round the realized ideal phase to the nearest grid point
    uniform, ///< draw the error directly from U[-pi/2^k, pi/2^k]
};

struct QuantizedPhase {
    double value; ///< chosen phase, in (0, 2*pi) for finite k
    double error; ///< value - ideal, wrapped to [-pi, pi)
};

/// Half of the grid spacing, pi/2^k; 0 for the continuous sentinel.
double half_step(Bits k);

/// Wraps to [-pi, pi).
double wrap_to_pi(double phase);

/// Wraps to [0, 2*pi).
double wrap_to_two_pi(double phase);

/// Strictly increasing grid {(2i - 1) pi / 2^k : i = 1..2^k}. Throws
/// InvalidParameter for the continuous sentinel.
std::vector<double> phase_set(Bits k);

/// Nearest grid point by circular distance; ties go to the smaller phase.
/// The continuous sentinel passes `phi` through with zero error.
QuantizedPhase quantize_phase(double phi, Bits k);

double sample_phase_error(Bits k, RandomStream& rng);

/// sin(x)/x, x = pi/2^k (unnormalized sinc); 1 when continuous.
double sinc_factor(Bits k);

/// 1 - x^2/6, x = pi/2^k; 1 when continuous.
double taylor_factor(Bits k);

/// sinc_factor(k) - taylor_factor(k) evaluated without cancellation
/// (x^4/120 - x^6/5040 + ... for small x). Positive for every finite k even
/// where both factors round to the same double.
double taylor_deficit(Bits k);

} // namespace irsrelay
