// SPDX-License-Identifier: Apache-2.0

#include "irsrelay/params.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace irsrelay {

Bits::Bits(int k) : k_(k) {
    if (k < 1) {
        throw InvalidParameter("bits", "quantizer resolution must be >= 1, got " + std::to_string(k));
    }
}

int Bits::value() const {
    if (is_continuous()) {
        throw std::logic_error("continuous quantizer has no finite bit count");
    }
    return k_;
}

std::string Bits::to_string() const { return is_continuous() ? "inf" : std::to_string(k_); }

Bits Bits::parse(std::string_view text) {
    if (text == "inf" || text == "continuous" || text == "Inf" || text == "INF") {
        return continuous();
    }
    int k = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidParameter("bits", "expected a positive integer or 'inf', got '" + std::string(text) + "'");
    }
    return Bits(k);
}

namespace {

void require_positive_distance(const char* key, double d) {
    if (!std::isfinite(d) || d <= 0.0) {
        throw InvalidParameter(key, "distance must be finite and > 0");
    }
}

void require_exponent(const char* key, double gamma) {
    if (!(gamma >= 1.5 && gamma <= 6.0)) {
        throw InvalidParameter(key, "path-loss exponent must lie in [1.5, 6]");
    }
}

void require_finite(const char* key, double v) {
    if (!std::isfinite(v)) {
        throw InvalidParameter(key, "must be finite");
    }
}

void require_alpha(const char* key, double a) {
    if (!std::isfinite(a) || a <= 0.0) {
        throw InvalidParameter(key, "Rayleigh scale must be finite and > 0");
    }
}

} // namespace

void Geometry::validate() const {
    require_positive_distance("d_si", d_si);
    require_positive_distance("d_ri", d_ri);
    require_positive_distance("d_sr", d_sr);
    require_positive_distance("d_rd", d_rd);
    require_finite("theta_si", theta_si);
    require_finite("theta_ri", theta_ri);
    require_finite("theta_sr", theta_sr);
    require_finite("theta_rd", theta_rd);
    require_exponent("gamma_sr", gamma_sr);
    require_exponent("gamma_si", gamma_si);
    require_exponent("gamma_ir", gamma_ir);
    require_exponent("gamma_ri", gamma_ri);
    require_exponent("gamma_id", gamma_id);
    require_exponent("gamma_rd", gamma_rd);
    require_finite("pl0_db", pl0_db);
}

void SystemParams::validate() const {
    require_finite("ps_dbm", ps_dbm);
    require_finite("pr_dbm", pr_dbm);
    require_finite("sigma_r_dbm", sigma_r_dbm);
    require_finite("sigma_d_dbm", sigma_d_dbm);
    if (n_elements < 1) {
        throw InvalidParameter("n_elements", "must be >= 1");
    }
    if (m_elements < 1) {
        throw InvalidParameter("m_elements", "must be >= 1");
    }
    require_alpha("alpha_sr", alpha_sr);
    require_alpha("alpha_si", alpha_si);
    require_alpha("alpha_ir", alpha_ir);
    require_alpha("alpha_ri", alpha_ri);
    require_alpha("alpha_id", alpha_id);
    require_alpha("alpha_rd", alpha_rd);
    geometry.validate();
    derive_geometry(geometry);
}

double SystemParams::ps_mw() const { return dbm_to_mw(ps_dbm); }
double SystemParams::pr_mw() const { return dbm_to_mw(pr_dbm); }
double SystemParams::sigma_r2_mw() const { return dbm_to_mw(sigma_r_dbm); }
double SystemParams::sigma_d2_mw() const { return dbm_to_mw(sigma_d_dbm); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
double dbm_to_mw(double dbm) { return db_to_linear(dbm); }
double mw_to_dbm(double mw) { return linear_to_db(mw); }

double path_loss_linear(double distance_m, double exponent, double pl0_db) {
    if (!(distance_m > 0.0) || !std::isfinite(distance_m)) {
        throw InvalidParameter("distance", "must be finite and > 0");
    }
    return db_to_linear(pl0_db - 10.0 * exponent * std::log10(distance_m));
}

DerivedDistances derive_geometry(const Geometry& g) {
    auto side = [](double a, double b, double angle) {
        return std::sqrt(std::max(0.0, a * a + b * b - 2.0 * a * b * std::cos(angle)));
    };
    const double d_ir = side(g.d_si, g.d_sr, g.theta_sr - g.theta_si);
    const double d_id = side(g.d_ri, g.d_rd, g.theta_rd - g.theta_ri);
    // Coincident points: a surface sitting on top of the relay/destination.
    constexpr double min_distance = 1e-9;
    if (d_ir < min_distance) {
        throw InvalidParameter("d_ir", "degenerate geometry: IRS-1 coincides with the relay");
    }
    if (d_id < min_distance) {
        throw InvalidParameter("d_id", "degenerate geometry: IRS-2 coincides with the destination");
    }
    return {d_ir, d_id};
}

LinkGains link_gains(const SystemParams& p) {
    const Geometry& g = p.geometry;
    g.validate();
    const auto [d_ir, d_id] = derive_geometry(g);

    LinkGains out;
    out.g_sr = path_loss_linear(g.d_sr, g.gamma_sr, g.pl0_db);
    out.g_si = path_loss_linear(g.d_si, g.gamma_si, g.pl0_db);
    out.g_ir = path_loss_linear(d_ir, g.gamma_ir, g.pl0_db);
    out.g_ri = path_loss_linear(g.d_ri, g.gamma_ri, g.pl0_db);
    out.g_id = path_loss_linear(d_id, g.gamma_id, g.pl0_db);
    out.g_rd = path_loss_linear(g.d_rd, g.gamma_rd, g.pl0_db);
    out.g_sir = out.g_si * out.g_ir;
    out.g_rid = out.g_ri * out.g_id;
    return out;
}

} // namespace irsrelay
