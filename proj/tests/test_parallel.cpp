#include <doctest.h>

#include <cstring>
#include <vector>

#include "oracle.hpp"
#include "splab/errors.hpp"
#include "splab/parallel.hpp"
#include "splab/search.hpp"
#include "splab/spectral.hpp"

using namespace splab;

TEST_SUITE_BEGIN("parallel");

namespace {

bool rows_identical(const std::vector<SweepRow>& a, const std::vector<SweepRow>& b) {
    if (a.size() != b.size()) return false;
    return std::memcmp(a.data(), b.data(), a.size() * sizeof(SweepRow)) == 0;
}

} // namespace

TEST_CASE("parallel sweep is bit-identical to the serial reference") {
    const ModelParams p = resolve_params(ParamSpec{}, 40);
    const auto grid = oracle::linspace(0.0, 1.0, 51);
    const auto serial = sweep_b_serial(p, 1.0, 1.0, grid);
    for (int threads : {1, 2, 8}) {
        const auto par = sweep_b(p, 1.0, 1.0, grid, threads);
        CHECK(rows_identical(serial, par));
    }
}

TEST_CASE("parallel path profile is bit-identical to the serial reference") {
    const ModelParams p = resolve_params(ParamSpec{}, 30);
    const auto grid = oracle::linspace(0.0, 1.0, 41);
    const auto serial = path_gap_profile_serial(p, 3.0, 0.5, grid);
    for (int threads : {2, 8}) {
        const auto par = path_gap_profile(p, 3.0, 0.5, grid, threads);
        REQUIRE(par.points.size() == serial.points.size());
        CHECK(std::memcmp(par.points.data(), serial.points.data(),
                          par.points.size() * sizeof(GapPoint)) == 0);
        CHECK(par.min_gap == serial.min_gap);
        CHECK(par.argmin_s == serial.argmin_s);
    }
}

TEST_CASE("min_gap does not depend on the thread budget") {
    std::vector<MinGapResult> results[2];
    int slot = 0;
    for (int threads : {1, 8}) {
        GapSearchOptions opt;
        opt.b_lo = 0.6;
        opt.b_hi = 0.8;
        opt.tol = 1e-12;
        opt.threads = threads;
        results[slot++] = min_gap(resolve_params(ParamSpec{}, 40), 1.0, 1.0, opt);
    }
    REQUIRE(results[0].size() == results[1].size());
    for (size_t i = 0; i < results[0].size(); ++i) {
        CHECK(results[0][i].b_min == results[1][i].b_min);
        CHECK(results[0][i].gap_min == results[1][i].gap_min);
    }
}

TEST_CASE("exceptions from worker bodies surface in index order") {
    const auto run = [](int threads) {
        std::vector<int> out(16, 0);
        parallel_for_index(16, threads, [&](int i) {
            if (i == 5 || i == 11) throw domain_error("boom at " + std::to_string(i));
            out[static_cast<size_t>(i)] = i;
        });
    };
    for (int threads : {1, 4}) {
        CHECK_THROWS_WITH_AS(run(threads), doctest::Contains("boom at 5"), domain_error);
    }
}

TEST_CASE("resolve_threads falls back to the OpenMP pool") {
    CHECK(resolve_threads(3) == 3);
    CHECK(resolve_threads(0) >= 1);
}

TEST_SUITE_END();
