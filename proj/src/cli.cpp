// SPDX-License-Identifier: Apache-2.0

#include "irsrelay/cli.hpp"

#include "irsrelay/analytic.hpp"
#include "irsrelay/config.hpp"
#include "irsrelay/csv.hpp"
#include "irsrelay/experiments.hpp"
#include "irsrelay/simulate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#ifndef IRSRELAY_VERSION
#define IRSRELAY_VERSION "unknown"
#endif

namespace irsrelay {

namespace {

struct Options {
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 42;
    std::optional<std::int64_t> trials;
    std::string k_list;
    std::string n_list;
    std::string m_list = "same";
    std::string error_model = "grid";
    std::string beta_model = "instantaneous";
    std::vector<std::string> settings;
    unsigned threads = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
    std::vector<int> out;
    for (const std::string& s : split_list(text)) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used != s.size() || v < 1) {
                throw std::invalid_argument(s);
            }
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(std::string("invalid value '") + s + "' for " + flag + ": expected positive integers");
        }
    }
    if (out.empty()) {
        throw UsageError(std::string(flag) + " needs at least one value");
    }
    return out;
}

std::vector<Bits> parse_bits_list(const std::string& text) {
    std::vector<Bits> out;
    for (const std::string& s : split_list(text)) {
        try {
            out.push_back(Bits::parse(s));
        } catch (const InvalidParameter&) {
            throw UsageError("invalid value '" + s + "' for --k: expected positive integers or 'inf'");
        }
    }
    if (out.empty()) {
        throw UsageError("--k needs at least one value");
    }
    return out;
}

std::vector<Bits> bits_range(int lo, int hi) {
    std::vector<Bits> out;
    for (int k = lo; k <= hi; ++k) {
        out.emplace_back(k);
    }
    return out;
}

SystemParams load_params(const Options& opt, std::vector<std::string>& metadata) {
    SystemParams p;
    std::string path = opt.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') {
            path = env;
        }
    }
    if (!path.empty()) {
        p = load_config(path);
        metadata.push_back("config: " + path);
    } else {
        metadata.emplace_back("config: built-in defaults");
    }
    for (const std::string& s : opt.settings) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(s, "--set expects key=value, got '" + s + "'");
        }
        apply_setting(p, s.substr(0, eq), s.substr(eq + 1));
        metadata.push_back("override: " + s);
    }
    try {
        p.validate();
    } catch (const InvalidParameter& ex) {
        throw ConfigError(ex.key(), std::string("invalid parameter ") + ex.what());
    }
    return p;
}

std::optional<McConfig> mc_config(const Options& opt, std::int64_t default_trials) {
    const std::int64_t trials = opt.trials.value_or(default_trials);
    if (trials < 0) {
        throw UsageError("--trials must be >= 0");
    }
    if (trials == 0) {
        return std::nullopt;
    }
    McConfig mc;
    mc.trials = trials;
    mc.seed = opt.seed;
    mc.error_model = parse_error_model(opt.error_model);
    mc.beta_model = parse_beta_model(opt.beta_model);
    mc.threads = opt.threads;
    return mc;
}

std::vector<std::pair<int, int>> element_pairs(const std::vector<int>& ns, const std::string& m_list) {
    std::vector<std::pair<int, int>> pairs;
    if (m_list == "same") {
        for (int n : ns) {
            pairs.emplace_back(n, n);
        }
        return pairs;
    }
    const std::vector<int> ms = parse_int_list(m_list, "--m");
    for (int n : ns) {
        for (int m : ms) {
            pairs.emplace_back(n, m);
        }
    }
    return pairs;
}

void echo_flags(const Options& opt, std::vector<std::string>& metadata) {
    if (opt.trials) {
        metadata.push_back("override: trials=" + std::to_string(*opt.trials));
    }
    if (!opt.k_list.empty()) {
        metadata.push_back("override: k=" + opt.k_list);
    }
    if (!opt.n_list.empty()) {
        metadata.push_back("override: n=" + opt.n_list);
    }
    if (opt.m_list != "same") {
        metadata.push_back("override: m=" + opt.m_list);
    }
}

void append_params(const SystemParams& p, std::vector<std::string>& metadata) {
    for (const auto& [key, value] : config_entries(p)) {
        metadata.push_back("param: " + key + " = " + value);
    }
}

void emit(const Options& opt, const std::vector<SweepRow>& rows, const std::vector<std::string>& metadata,
          std::ostream& out) {
    if (opt.out_path.empty()) {
        write_csv(out, rows, metadata);
        return;
    }
    std::ofstream file(opt.out_path);
    if (!file) {
        throw UsageError("cannot write output file '" + opt.out_path + "'");
    }
    write_csv(file, rows, metadata);
}

int run_sweep_command(const std::string& command, const Options& opt, std::ostream& out) {
    std::vector<std::string> metadata{std::string("irsrelay ") + IRSRELAY_VERSION, "command: " + command};
    const SystemParams base = load_params(opt, metadata);
    echo_flags(opt, metadata);
    const std::optional<McConfig> mc = mc_config(opt, 0);
    if (mc) {
        metadata.push_back("mc: seed=" + std::to_string(mc->seed) + " error_model=" +
                           std::string(to_string(mc->error_model)) +
                           " beta_model=" + std::string(to_string(mc->beta_model)));
    }
    append_params(base, metadata);

    const std::vector<int> ns = opt.n_list.empty() ? default_element_sweep() : parse_int_list(opt.n_list, "--n");
    std::vector<SweepRow> rows;
    if (command == "fig4") {
        const std::vector<Bits> ks = opt.k_list.empty() ? bits_range(1, 6) : parse_bits_list(opt.k_list);
        std::vector<std::pair<int, int>> pairs;
        if (opt.n_list.empty() && opt.m_list == "same") {
            pairs = {{128, 128}, {1024, 128}, {128, 1024}, {1024, 1024}};
        } else {
            pairs = element_pairs(ns, opt.m_list);
        }
        rows = sweep_bits(base, ks, pairs, mc);
    } else {
        const std::vector<Bits> ks = opt.k_list.empty() ? bits_range(1, 4) : parse_bits_list(opt.k_list);
        if (opt.m_list == "same") {
            rows = sweep_elements(base, ns, ks, mc);
        } else {
            rows = sweep_bits(base, ks, element_pairs(ns, opt.m_list), mc);
        }
    }
    emit(opt, rows, metadata, out);
    return kExitOk;
}

int run_validate(const Options& opt, std::ostream& out, std::ostream& err) {
    std::vector<std::string> metadata{std::string("irsrelay ") + IRSRELAY_VERSION, "command: validate"};
    const SystemParams base = load_params(opt, metadata);
    echo_flags(opt, metadata);
    const std::optional<McConfig> mc = mc_config(opt, 10000);
    if (!mc) {
        throw UsageError("validate needs --trials >= 1");
    }
    metadata.push_back("mc: seed=" + std::to_string(mc->seed) + " error_model=" +
                       std::string(to_string(mc->error_model)) +
                       " beta_model=" + std::string(to_string(mc->beta_model)));
    append_params(base, metadata);

    const std::vector<int> ns = opt.n_list.empty() ? std::vector<int>{256, 1024} : parse_int_list(opt.n_list, "--n");
    const std::vector<Bits> ks = opt.k_list.empty() ? bits_range(1, 4) : parse_bits_list(opt.k_list);

    constexpr double loss_floor_db = 0.02;
    constexpr double amplitude_rel_tol = 0.01;
    constexpr double sigmas = 3.0;

    std::ostream& log = opt.out_path.empty() ? err : out;
    bool all_ok = true;
    std::vector<SweepRow> rows;
    for (const auto& [n, m] : element_pairs(ns, opt.m_list)) {
        for (Bits k : ks) {
            SystemParams p = base;
            p.n_elements = n;
            p.m_elements = m;
            p.k1_bits = k;
            p.k2_bits = k;
            const LinkGains g = link_gains(p);
            const McEstimate e = mc_estimate(p, g, *mc);
            const double analytic_loss = snr_loss(p, g).loss_pl_db;
            const double a_pl = mean_amplitude_first_hop(Mode::pl, p, g);
            const double b_pl = mean_amplitude_second_hop(Mode::pl, p, g);

            const double tol = std::max(loss_floor_db, sigmas * e.loss_db.std_error);
            const bool loss_ok = std::abs(e.loss_db.mean - analytic_loss) <= tol;
            const bool amp_ok = std::abs(e.a_pl.mean / a_pl - 1.0) <= amplitude_rel_tol &&
                                std::abs(e.b_pl.mean / b_pl - 1.0) <= amplitude_rel_tol;
            const bool ok = loss_ok && amp_ok;
            all_ok = all_ok && ok;

            log << (ok ? "PASS" : "FAIL") << " n=" << n << " m=" << m << " k=" << k.to_string()
                << " analytic_loss_db=" << format_real(analytic_loss) << " mc_loss_db=" << format_real(e.loss_db.mean)
                << " stderr=" << format_real(e.loss_db.std_error) << " tol=" << format_real(tol)
                << " a_rel_err=" << format_real(e.a_pl.mean / a_pl - 1.0)
                << " b_rel_err=" << format_real(e.b_pl.mean / b_pl - 1.0)
                << " snr_ratio_loss_db=" << format_real(e.snr_ratio_loss_db.mean) << '\n';

            SweepRow row = evaluate_point(p, n, m, k, k);
            row.mc = McColumns{e.loss_db.mean, e.loss_db.std_error, e.trials, e.seed, e.snr_ratio_loss_db.mean};
            rows.push_back(row);
        }
    }
    if (!opt.out_path.empty()) {
        emit(opt, rows, metadata, out);
    }
    log << (all_ok ? "validate: all checks passed" : "validate: FAILED") << '\n';
    return all_ok ? kExitOk : kExitValidationFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-form and Monte-Carlo performance of a double-IRS amplify-and-forward relay link", "irsrelay"};
    app.set_version_flag("--version", std::string("irsrelay ") + IRSRELAY_VERSION);
    app.require_subcommand(1);

    Options opt;
    app.add_option("--config", opt.config_path, "key = value parameter file (default: $IRSRELAY_CONFIG)");
    app.add_option("--out", opt.out_path, "CSV output path (default: stdout)");
    app.add_option("--seed", opt.seed, "Monte-Carlo seed");
    app.add_option("--trials", opt.trials, "Monte-Carlo trials per point (0 = analytic only)");
    app.add_option("--k", opt.k_list, "comma-separated quantizer bits, 'inf' for continuous");
    app.add_option("--n", opt.n_list, "comma-separated IRS-1 sizes");
    app.add_option("--m", opt.m_list, "comma-separated IRS-2 sizes, or 'same' to follow --n");
    app.add_option("--error-model", opt.error_model, "grid | uniform");
    app.add_option("--beta-model", opt.beta_model, "instantaneous | averaged");
    app.add_option("--set", opt.settings, "override one config key, key=value (repeatable)");
    app.add_option("--threads", opt.threads, "worker threads (0 = hardware concurrency)");

    const std::vector<std::pair<const char*, const char*>> commands{
        {"fig2", "SNR loss versus N (M = N) for k = 1..4"},
        {"fig3", "achievable rate versus N (M = N) for k = 1..4"},
        {"fig4", "achievable rate versus k = 1..6 for several (N, M)"},
        {"sweep", "generic sweep over --n, --m, --k"},
        {"validate", "Monte-Carlo versus closed-form checks"},
    };
    for (const auto& [name, help] : commands) {
        app.add_subcommand(name, help)->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "validate") {
            return run_validate(opt, out, err);
        }
        return run_sweep_command(command, opt, out);
    } catch (const ConfigError& e) {
        err << "config error [" << e.key() << "]: " << e.what() << '\n';
    } catch (const InvalidParameter& e) {
        err << "invalid parameter [" << e.key() << "]: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const CsvError& e) {
        err << "csv error: " << e.what() << '\n';
    }
    return kExitUsage;
}

} // namespace irsrelay
