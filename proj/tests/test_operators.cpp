#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracle.hpp"
#include "splab/errors.hpp"
#include "splab/operators.hpp"
#include "splab/spectral.hpp"

using namespace splab;

TEST_SUITE_BEGIN("operators");

TEST_CASE("x_matrix small cases") {
    const Matrix x1 = x_matrix(1);
    CHECK(x1(0, 1) == doctest::Approx(1.0));
    const EigenSystem e1 = eigensolve(x1);
    CHECK(e1.values(0) == doctest::Approx(-1.0));
    CHECK(e1.values(1) == doctest::Approx(1.0));

    const Matrix x2 = x_matrix(2);
    CHECK(x2(0, 1) == doctest::Approx(std::sqrt(2.0)));
    CHECK(x2(1, 2) == doctest::Approx(std::sqrt(2.0)));
    const EigenSystem e2 = eigensolve(x2);
    CHECK(e2.values(0) == doctest::Approx(-2.0));
    CHECK(std::abs(e2.values(1)) < 1e-12);
    CHECK(e2.values(2) == doctest::Approx(2.0));
}

TEST_CASE("x spectrum is n - 2k") {
    for (int n : {5, 17, 40}) {
        const EigenSystem es = eigensolve(x_matrix(n));
        for (int i = 0; i <= n; ++i)
            CHECK(std::abs(es.values(i) - (2.0 * i - n)) < 1e-9);
    }
}

TEST_CASE("x ground sector agrees with the full-space operator") {
    // -X in the 2^n space: lowest symmetric levels are -n, -n+2
    ModelParams p{10, 10.0, 2.5, -2.5, 0.0};
    p.v_max = 1e-30;  // effectively zero potential without tripping validation
    p.delta_v = 1e-31;
    const oracle::FullSpace ref = oracle::brute_force_k1(p, 1.0, 1.0);
    CHECK(ref.e0 == doctest::Approx(-10.0).epsilon(1e-12));
    CHECK(ref.e1_sym == doctest::Approx(-8.0).epsilon(1e-12));
}

TEST_CASE("psi_plus amplitudes and eigenvector property") {
    const Vector v2 = psi_plus(2);
    CHECK(v2(0) == doctest::Approx(0.5));
    CHECK(v2(1) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(v2(2) == doctest::Approx(0.5));

    for (int n : {10, 50, 80}) {
        const Vector v = psi_plus(n);
        CHECK(std::abs(v.norm() - 1.0) < 1e-12);
        CHECK((x_matrix(n) * v - double(n) * v).norm() < 1e-10);
        CHECK(v.minCoeff() > 0.0);
    }
}

TEST_CASE("driver reduces to b X at k = 1") {
    const Matrix d = driver_matrix(12, DriverSpec{1.0, 0.8, 1.0});
    CHECK((d - 0.8 * x_matrix(12)).norm() < 1e-10);
}

TEST_CASE("driver k = 2 on two qubits is X^2 / 2") {
    const Matrix d = driver_matrix(2, DriverSpec{2.0, 1.0, 1.0});
    Matrix ref(3, 3);
    ref << 1, 0, 1, 0, 2, 0, 1, 0, 1;
    CHECK((d - ref).norm() < 1e-12);
    const EigenSystem es = eigensolve(d);
    CHECK(std::abs(es.values(0)) < 1e-12);
    CHECK(es.values(1) == doctest::Approx(2.0));
    CHECK(es.values(2) == doctest::Approx(2.0));
}

TEST_CASE("integer-k driver equals the scaled matrix power") {
    const int n = 20;
    const Matrix x = x_matrix(n);
    const DriverSpec d2{2.0, 0.7, 0.9};
    const Matrix ref2 = d2.s * d2.b * (x * x) / double(n);
    CHECK((driver_matrix(n, d2) - ref2).norm() / ref2.norm() < 1e-9);
    const DriverSpec d3{3.0, 0.7, 0.9};
    const Matrix ref3 = d3.s * d3.b * (x * x * x) / double(n * n);
    CHECK((driver_matrix(n, d3) - ref3).norm() / ref3.norm() < 1e-9);
}

TEST_CASE("non-integer k maps eigenvalues through |lambda|^k") {
    const int n = 8;
    const DriverSpec d{2.5, 0.6, 1.0};
    const EigenSystem es = eigensolve(driver_matrix(n, d));
    std::vector<double> expected;
    for (int i = 0; i <= n; ++i)
        expected.push_back(d.s * d.b * std::pow(std::abs(2.0 * i - n), d.k) /
                           std::pow(double(n), d.k - 1.0));
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i <= n; ++i)
        CHECK(es.values(i) == doctest::Approx(expected[static_cast<size_t>(i)]).epsilon(1e-9));
}

TEST_CASE("k = 2 ground space of -driver is doubly degenerate") {
    const Matrix d = driver_matrix(8, DriverSpec{2.0, 1.0, 1.0});
    const EigenSystem es = eigensolve(Matrix(-d));
    CHECK(es.values(0) == doctest::Approx(-8.0).epsilon(1e-12));
    CHECK(es.values(1) == doctest::Approx(-8.0).epsilon(1e-12));
    CHECK(es.values(2) > es.values(1) + 1.0);
}

TEST_CASE("hamiltonian diagonal limits") {
    const ModelParams p{10, 10.0, 2.5, -2.5, 0.0};
    auto sorted_potential = potential_vector(p);
    std::sort(sorted_potential.begin(), sorted_potential.end());

    for (const DriverSpec d : {DriverSpec{1.0, 0.0, 1.0}, DriverSpec{1.0, 0.9, 0.0}}) {
        const EigenSystem es = eigensolve(hamiltonian(p, d));
        for (int i = 0; i <= p.n; ++i)
            CHECK(es.values(i) ==
                  doctest::Approx(sorted_potential[static_cast<size_t>(i)]).epsilon(1e-12));
    }
}

TEST_CASE("hamiltonian is exactly symmetric") {
    const ModelParams p = resolve_params(ParamSpec{}, 30);
    const Matrix h = hamiltonian(p, DriverSpec{2.7, 0.8, 0.6});
    CHECK((h - h.transpose()).norm() == 0.0);
}

TEST_CASE("symmetric-sector ground energy matches brute force") {
    const ModelParams p = resolve_params(ParamSpec{}, 10);
    const oracle::FullSpace ref = oracle::brute_force_k1(p, 0.9, 1.0);
    const EigenSystem es = eigensolve(hamiltonian(p, DriverSpec{1.0, 0.9, 1.0}));
    CHECK(std::abs(es.values(0) - ref.e0) < 1e-9);
}

TEST_CASE("driver spec validation") {
    CHECK_THROWS_AS(validate_driver(DriverSpec{0.0, 0.5, 1.0}), config_error);
    CHECK_THROWS_AS(validate_driver(DriverSpec{1.0, -0.1, 1.0}), config_error);
    CHECK_THROWS_AS(validate_driver(DriverSpec{1.0, 0.5, 1.5}), config_error);
}

TEST_SUITE_END();
