// SPDX-License-Identifier: Apache-2.0

#include "irsrelay/csv.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace irsrelay {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

template <class T>
T parse_number(const std::string& text, const char* column, std::size_t line_no) {
    T v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw CsvError("line " + std::to_string(line_no) + ": bad value '" + text + "' in column " + column);
    }
    return v;
}

} // namespace

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, const std::vector<std::string>& metadata) {
    for (const std::string& m : metadata) {
        out << "# " << m << '\n';
    }
    out << kCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        out << r.n << ',' << r.m << ',' << r.k1.to_string() << ',' << r.k2.to_string() << ','
            << format_real(r.snr_npl_db) << ',' << format_real(r.snr_pl_db) << ',' << format_real(r.snr_apl_db) << ','
            << format_real(r.loss_pl_db) << ',' << format_real(r.loss_apl_db) << ',' << format_real(r.rate_npl) << ','
            << format_real(r.rate_pl) << ',' << format_real(r.rate_apl) << ',';
        if (r.mc) {
            out << format_real(r.mc->loss_db) << ',' << format_real(r.mc->std_error) << ',' << r.mc->trials << ','
                << r.mc->seed << ',' << format_real(r.mc->snr_ratio_loss_db);
        } else {
            out << ",,,,";
        }
        out << '\n';
    }
}

CsvDocument read_csv(std::istream& in) {
    CsvDocument doc;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            doc.metadata.push_back(line.size() > 2 && line[1] == ' ' ? line.substr(2) : line.substr(1));
            continue;
        }
        if (!header_seen) {
            if (line != kCsvHeader) {
                throw CsvError("line " + std::to_string(line_no) + ": unexpected header");
            }
            header_seen = true;
            continue;
        }
        const auto f = split(line);
        if (f.size() != 17) {
            throw CsvError("line " + std::to_string(line_no) + ": expected 17 columns, got " +
                           std::to_string(f.size()));
        }
        SweepRow r;
        r.n = parse_number<int>(f[0], "n", line_no);
        r.m = parse_number<int>(f[1], "m", line_no);
        r.k1 = Bits::parse(f[2]);
        r.k2 = Bits::parse(f[3]);
        r.snr_npl_db = parse_number<double>(f[4], "snr_npl_db", line_no);
        r.snr_pl_db = parse_number<double>(f[5], "snr_pl_db", line_no);
        r.snr_apl_db = parse_number<double>(f[6], "snr_apl_db", line_no);
        r.loss_pl_db = parse_number<double>(f[7], "loss_pl_db", line_no);
        r.loss_apl_db = parse_number<double>(f[8], "loss_apl_db", line_no);
        r.rate_npl = parse_number<double>(f[9], "rate_npl", line_no);
        r.rate_pl = parse_number<double>(f[10], "rate_pl", line_no);
        r.rate_apl = parse_number<double>(f[11], "rate_apl", line_no);
        if (!f[12].empty()) {
            McColumns mc;
            mc.loss_db = parse_number<double>(f[12], "mc_loss_db", line_no);
            mc.std_error = parse_number<double>(f[13], "mc_stderr", line_no);
            mc.trials = parse_number<std::int64_t>(f[14], "trials", line_no);
            mc.seed = parse_number<std::uint64_t>(f[15], "seed", line_no);
            mc.snr_ratio_loss_db = parse_number<double>(f[16], "mc_snr_ratio_loss_db", line_no);
            r.mc = mc;
        }
        doc.rows.push_back(r);
    }
    if (!header_seen) {
        throw CsvError("missing CSV header");
    }
    return doc;
}

} // namespace irsrelay
