// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "irsrelay/csv.hpp"
#include "irsrelay/experiments.hpp"

#include <cmath>
#include <sstream>

using namespace irsrelay;

namespace {

std::vector<Bits> bits(std::initializer_list<int> ks) {
    std::vector<Bits> out;
    for (int k : ks) {
        out.emplace_back(k);
    }
    return out;
}

const SweepRow& find_row(const std::vector<SweepRow>& rows, int n, int m, int k) {
    for (const SweepRow& r : rows) {
        if (r.n == n && r.m == m && !r.k1.is_continuous() && r.k1.value() == k) {
            return r;
        }
    }
    throw std::runtime_error("row not found");
}

} // namespace

TEST_CASE("default element sweep") {
    const auto ns = default_element_sweep();
    REQUIRE(ns.front() == 16);
    REQUIRE(ns.back() == 1024);
    for (std::size_t i = 1; i < ns.size(); ++i) {
        CHECK(ns[i] > ns[i - 1]);
    }
}

TEST_CASE("continuous phases give zero loss across the sweep") {
    const auto rows = sweep_elements(SystemParams{}, default_element_sweep(), {Bits::continuous()});
    REQUIRE(rows.size() == default_element_sweep().size());
    for (const SweepRow& r : rows) {
        CHECK(r.loss_pl_db == 0.0);
        CHECK(r.loss_apl_db == 0.0);
        CHECK(r.rate_pl == r.rate_npl);
        CHECK_FALSE(r.mc.has_value());
    }
}

TEST_CASE("element sweep ordering and loss properties") {
    const auto ns = default_element_sweep();
    const auto rows = sweep_elements(SystemParams{}, ns, bits({1, 2, 3, 4}));
    REQUIRE(rows.size() == 4 * ns.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].k1.value() == static_cast<int>(i / ns.size()) + 1);
        CHECK(rows[i].n == ns[i % ns.size()]);
        CHECK(rows[i].m == rows[i].n);
    }
    double gap = -1.0;
    for (int n : ns) {
        CHECK(find_row(rows, n, n, 4).loss_pl_db < 0.06);
        CHECK(find_row(rows, n, n, 3).rate_npl - find_row(rows, n, n, 3).rate_pl < 0.05);
        const SweepRow& r1 = find_row(rows, n, n, 1);
        const double g = r1.loss_apl_db - r1.loss_pl_db;
        CHECK(g > gap);
        gap = g;
    }
}

TEST_CASE("bit sweep over element pairs") {
    const std::vector<std::pair<int, int>> pairs{{128, 128}, {1024, 128}, {128, 1024}, {1024, 1024}};
    const auto rows = sweep_bits(SystemParams{}, bits({1, 2, 3, 4, 5, 6}), pairs);
    REQUIRE(rows.size() == 24);
    CHECK(rows[0].n == 128);
    CHECK(rows[0].k1.value() == 1);
    CHECK(rows[6].n == 1024);
    CHECK(rows[6].m == 128);
    for (const auto& [n, m] : pairs) {
        CHECK(std::abs(find_row(rows, n, m, 6).rate_pl - find_row(rows, n, m, 6).rate_npl) < 0.005);
    }
    for (int k = 1; k <= 6; ++k) {
        CHECK(find_row(rows, 1024, 128, k).rate_pl > find_row(rows, 128, 1024, k).rate_pl);
    }
    for (const auto& [n, m] : pairs) {
        const SweepRow& r = find_row(rows, n, m, 3);
        const double gap = r.rate_npl - r.rate_pl;
        if (n == 128) {
            CHECK(gap < 0.04);
        } else {
            // At N = 1024 the high-SNR gap approaches loss_pl_db / (10 log10 2),
            // about 0.045 b/s/Hz at k = 3.
            CHECK(gap > 0.01);
            CHECK(gap < 0.05);
        }
    }
}

TEST_CASE("large bit counts are supported") {
    const auto rows = sweep_bits(SystemParams{}, bits({9, 12}), {{64, 64}});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].loss_pl_db >= 0.0);
    CHECK(rows[0].loss_pl_db < 1e-4);
}

TEST_CASE("evaluate_point validates and attaches Monte-Carlo columns") {
    CHECK_THROWS_AS(evaluate_point(SystemParams{}, 0, 16, Bits(2), Bits(2)), InvalidParameter);
    McConfig c;
    c.trials = 50;
    c.seed = 3;
    c.threads = 1;
    const SweepRow r = evaluate_point(SystemParams{}, 32, 32, Bits(2), Bits(2), c);
    REQUIRE(r.mc.has_value());
    CHECK(r.mc->trials == 50);
    CHECK(r.mc->seed == 3);
    CHECK(r.mc->std_error > 0.0);
    CHECK(std::abs(r.mc->loss_db - r.loss_pl_db) < 0.5);
}

TEST_CASE("CSV round trip is exact") {
    McConfig c;
    c.trials = 20;
    c.threads = 1;
    auto rows = sweep_elements(SystemParams{}, {16, 64}, {Bits(1), Bits::continuous()});
    rows.push_back(evaluate_point(SystemParams{}, 48, 16, Bits(3), Bits(5), c));

    std::stringstream ss;
    write_csv(ss, rows, {"irsrelay test", "param: n_elements = 16"});
    const std::string text = ss.str();
    CHECK(text.rfind("# irsrelay test\n", 0) == 0);
    CHECK(text.find(std::string(kCsvHeader) + "\n") != std::string::npos);

    const CsvDocument doc = read_csv(ss);
    REQUIRE(doc.metadata.size() == 2);
    CHECK(doc.metadata[1] == "param: n_elements = 16");
    REQUIRE(doc.rows.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(doc.rows[i] == rows[i]);
    }
}

TEST_CASE("read_csv rejects malformed input") {
    std::stringstream bad_header("a,b,c\n1,2,3\n");
    CHECK_THROWS_AS(read_csv(bad_header), CsvError);
    std::stringstream short_row(std::string(kCsvHeader) + "\n1,2,3\n");
    CHECK_THROWS_AS(read_csv(short_row), CsvError);
}
