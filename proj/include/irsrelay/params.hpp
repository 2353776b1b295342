// SPDX-License-Identifier: Apache-2.0
//
// System configuration of the double-IRS amplify-and-forward relay link:
// transmit/noise powers, surface sizes, quantizer resolutions, Rayleigh
// scales and the placement geometry used for path loss.
// ------------------------------------------------------------------------

#pragma once

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace irsrelay {

/// Raised when a configuration value violates its domain. `key()` names the
/// offending field so callers can report it verbatim.
class InvalidParameter : public std::invalid_argument {
public:
    InvalidParameter(std::string key, const std::string& what)
        : std::invalid_argument(key + ": " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Phase quantizer resolution: a finite bit count k >= 1, or continuous
/// (k = infinity, no quantization).
class Bits {
public:
    static constexpr Bits continuous() noexcept { return Bits(); }

    explicit Bits(int k);

    constexpr bool is_continuous() const noexcept { return k_ == 0; }

    /// Throws std::logic_error for the continuous sentinel.
    int value() const;

    /// "inf" for continuous, otherwise the decimal bit count.
    std::string to_string() const;

    /// Accepts a positive integer or one of "inf", "continuous".
    static Bits parse(std::string_view text);

    friend constexpr bool operator==(Bits, Bits) noexcept = default;

private:
    constexpr Bits() noexcept = default;
    int k_ = 0;
};

struct Geometry {
    double d_si = 50.0;
    double d_ri = 50.0;
    double d_sr = 150.0;
    double d_rd = 150.0;

    double theta_si = std::numbers::pi / 4.0;
    double theta_ri = std::numbers::pi / 4.0;
    double theta_sr = std::numbers::pi / 2.0;
    double theta_rd = std::numbers::pi / 2.0;

    double gamma_sr = 3.5;
    double gamma_si = 2.6;
    double gamma_ir = 2.6;
    double gamma_ri = 2.6;
    double gamma_id = 2.6;
    double gamma_rd = 3.5;

    /// Path loss at the 1 m reference distance.
    double pl0_db = -30.0;

    void validate() const;
};

struct SystemParams {
    double ps_dbm = 30.0;
    double pr_dbm = 35.0;
    double sigma_r_dbm = -90.0;
    double sigma_d_dbm = -90.0;

    int n_elements = 256;
    int m_elements = 256;

    Bits k1_bits = Bits(4);
    Bits k2_bits = Bits(4);

    double alpha_sr = 0.5;
    double alpha_si = 0.5;
    double alpha_ir = 0.5;
    double alpha_ri = 0.5;
    double alpha_id = 0.5;
    double alpha_rd = 0.5;

    /// When set, the relay gain is normalized to unit output power instead
    /// of carrying sqrt(P_r) in both the gain and the second-hop signal.
    bool normalized_relay = false;

    Geometry geometry;

    /// Throws InvalidParameter naming the first field out of range.
    void validate() const;

    double ps_mw() const;
    double pr_mw() const;
    double sigma_r2_mw() const;
    double sigma_d2_mw() const;
};

/// Linear power gains of the six links; products are the cascaded
/// IRS links S->IRS-1->RS and RS->IRS-2->D.
struct LinkGains {
    double g_sr = 1.0;
    double g_si = 1.0;
    double g_ir = 1.0;
    double g_ri = 1.0;
    double g_id = 1.0;
    double g_rd = 1.0;
    double g_sir = 1.0;
    double g_rid = 1.0;
};

struct DerivedDistances {
    double d_ir;
    double d_id;
};

double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

/// 10^((pl0_db - 10 * exponent * log10(distance / 1 m)) / 10).
double path_loss_linear(double distance_m, double exponent, double pl0_db);

/// Surface-to-relay and surface-to-destination distances by the law of
/// cosines. Throws InvalidParameter when the geometry collapses a surface
/// onto the relay or destination.
DerivedDistances derive_geometry(const Geometry& g);

LinkGains link_gains(const SystemParams& p);

} // namespace irsrelay
