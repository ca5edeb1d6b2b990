// Closed-form sphere integrals, the product quadrature rules, and the
// Monte Carlo oracle.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "elwave/rng.hpp"
#include "elwave/spherical.hpp"

using namespace elwave;
using model::MultiIndex;

TEST_CASE("surface areas and even monomials have the known values") {
    const double pi = model::pi;
    CHECK(spherical::surface_area(1) == Catch::Approx(2.0).epsilon(1e-15));
    CHECK(spherical::surface_area(2) == Catch::Approx(2 * pi).epsilon(1e-15));
    CHECK(spherical::surface_area(3) == Catch::Approx(4 * pi).epsilon(1e-15));
    CHECK(spherical::surface_area(4) ==
          Catch::Approx(2 * pi * pi).epsilon(1e-15));
    CHECK(spherical::sphere_monomial_integral(2, {2, 0}) ==
          Catch::Approx(pi).epsilon(1e-14));
    CHECK(spherical::sphere_monomial_integral(3, {2, 0, 0}) ==
          Catch::Approx(4 * pi / 3).epsilon(1e-14));
    CHECK(spherical::sphere_monomial_integral(3, {2, 2, 0}) ==
          Catch::Approx(4 * pi / 15).epsilon(1e-14));
    CHECK(spherical::sphere_monomial_integral(3, {2, 2, 2}) ==
          Catch::Approx(4 * pi / 105).epsilon(1e-14));
    CHECK(spherical::sphere_monomial_integral(4, {2, 0, 0, 0}) ==
          Catch::Approx(pi * pi / 2).epsilon(1e-14));
    // Any odd exponent kills the integral exactly.
    CHECK(spherical::sphere_monomial_integral(3, {1, 2, 0}) == 0.0);
    CHECK(spherical::sphere_monomial_integral(2, {3, 2}) == 0.0);
}

TEST_CASE("closed forms match product quadrature for random indices") {
    const rng::CounterRng gen(41);
    std::uint64_t ctr = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 2 + rep % 3;
        MultiIndex beta(n, 0);
        int order = 0;
        for (int d = 0; d < n; ++d) {
            beta[d] = static_cast<int>(4.0 * gen.uniform_pos(ctr++)) % 4;
            order += beta[d];
            if (order > 6) {
                order -= beta[d];
                beta[d] = 0;
            }
        }
        const double closed = spherical::sphere_monomial_integral(n, beta);
        const auto rule = spherical::make_sphere_rule(n, std::max(6, order));
        const double quad = spherical::integrate_sphere(rule, [&](const double* w) {
            double v = 1.0;
            for (int d = 0; d < n; ++d)
                for (int e = 0; e < beta[d]; ++e) v *= w[d];
            return v;
        });
        CAPTURE(n, rep);
        CHECK(std::abs(quad - closed) <=
              1e-12 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("one-dimensional sphere is the two-point set") {
    const auto rule = spherical::make_sphere_rule(1, 8);
    REQUIRE(rule.size() == 2);
    const double total = spherical::integrate_sphere(
        rule, [](const double* w) { return w[0] * w[0]; });
    CHECK(total == Catch::Approx(2.0).epsilon(1e-15));
    CHECK(spherical::sphere_monomial_integral(1, {2}) ==
          Catch::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("vector sphere integrals match their definitions") {
    const rng::CounterRng gen(43);
    std::uint64_t ctr = 0;
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 2 + rep % 3;
        std::vector<double> M(n);
        for (auto& v : M) v = 2.0 * gen.uniform_pos(ctr++) - 1.0;
        const int k = rep % n;
        const auto closed = spherical::sphere_vector_integrals(n, M, k);
        const auto rule = spherical::make_sphere_rule(n, 6);
        const double lin = spherical::integrate_sphere(rule, [&](const double* w) {
            double dot = 0.0;
            for (int d = 0; d < n; ++d) dot += w[d] * M[d];
            return w[k] * dot;
        });
        const double quad = spherical::integrate_sphere(rule, [&](const double* w) {
            double dot = 0.0;
            for (int d = 0; d < n; ++d) dot += w[d] * M[d];
            return w[k] * w[k] * dot * dot;
        });
        CHECK(closed.linear == Catch::Approx(lin).margin(1e-12));
        CHECK(closed.quadratic == Catch::Approx(quad).margin(1e-12));
        // Known special case: the linear integral is |S|/n times M_k.
        CHECK(closed.linear ==
              Catch::Approx(spherical::surface_area(n) / n * M[k]).margin(1e-12));
    }
    // Spot value: n = 2, M = (1, 0), first component -> pi.
    const auto vi = spherical::sphere_vector_integrals(2, {1.0, 0.0}, 0);
    CHECK(vi.linear == Catch::Approx(model::pi).epsilon(1e-14));
}

TEST_CASE("quadratic first-moment integrals: closed form vs quadrature") {
    const rng::CounterRng gen(47);
    std::uint64_t ctr = 0;
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 2 + rep % 3;
        std::vector<std::vector<double>> P(n, std::vector<double>(n));
        for (auto& row : P)
            for (auto& v : row) v = 2.0 * gen.uniform_pos(ctr++) - 1.0;
        const int N = rep % n;
        const auto closed = spherical::k_integrals(n, N, P);
        const auto rule = spherical::make_sphere_rule(n, 6);
        const auto quad = spherical::k_integrals_quadrature(n, N, P, rule);
        CAPTURE(n, N, rep);
        CHECK(closed.k1 == Catch::Approx(quad.k1).margin(1e-12));
        CHECK(closed.k2 == Catch::Approx(quad.k2).margin(1e-12));
        CHECK(closed.k3 == Catch::Approx(quad.k3).margin(1e-12));
    }
    // Single nonzero entry in 2-D: pi, 3 pi/4, 5 pi/8.
    std::vector<std::vector<double>> P{{1.0, 0.0}, {0.0, 0.0}};
    const auto K = spherical::k_integrals(2, 0, P);
    CHECK(K.k1 == Catch::Approx(model::pi).epsilon(1e-14));
    CHECK(K.k2 == Catch::Approx(0.75 * model::pi).epsilon(1e-14));
    CHECK(K.k3 == Catch::Approx(0.625 * model::pi).epsilon(1e-14));
}

TEST_CASE("time-averaged quadratic combinations stay nonnegative") {
    // Both wave-speed-weighted combinations of the quadratic integrals are
    // sphere integrals of time-averaged squares, hence nonnegative for
    // every admissible pair of speeds.
    const rng::CounterRng gen(53);
    std::uint64_t ctr = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 2 + rep % 2;
        std::vector<std::vector<double>> P(n, std::vector<double>(n));
        double scale = 0.0;
        for (auto& row : P)
            for (auto& v : row) {
                v = 2.0 * gen.uniform_pos(ctr++) - 1.0;
                scale += v * v;
            }
        const auto K = spherical::k_integrals(n, rep % n, P);
        CHECK(K.k1 >= -1e-12 * scale);
        CHECK(K.k3 >= -1e-12 * scale);
        // cosine-family average <(T + Delta)^2> with <T^2>=1/2, <T D>=-1/2,
        // <D^2>=1.
        CHECK(0.5 * K.k1 - K.k2 + K.k3 >= -1e-11 * scale);
        for (const auto [a1, a2] : {std::pair{2.0, 1.0}, std::pair{1.3, 0.4}}) {
            const double sine_comb =
                0.5 / (a2 * a2) * (K.k1 - 2.0 * K.k2 + K.k3) +
                0.5 / (a1 * a1) * K.k3;
            CHECK(sine_comb >= -1e-11 * scale);
        }
    }
}

TEST_CASE("Monte Carlo oracle brackets a known integral") {
    const auto est = spherical::sphere_mc_oracle(
        3,
        [](const double* w) { return w[0] * w[0] * w[1] * w[1]; },
        100000, 12345);
    const double truth = 4.0 * model::pi / 15.0;
    CHECK(std::abs(est.value - truth) <= 5.0 * est.std_error);
    CHECK(est.std_error > 0.0);
    CHECK(est.samples == 100000);
    CHECK_THROWS_AS(spherical::sphere_mc_oracle(
                        2, [](const double*) { return 1.0; }, 10, 1),
                    std::invalid_argument);
}

TEST_CASE("Monte Carlo oracle is deterministic and thread-count invariant") {
    auto f = [](const double* w) { return w[0] * w[0]; };
    const auto a = spherical::sphere_mc_oracle(2, f, 50000, 777, 1);
    const auto b = spherical::sphere_mc_oracle(2, f, 50000, 777, 4);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    const auto c = spherical::sphere_mc_oracle(2, f, 50000, 778, 1);
    CHECK(a.value != c.value);
}
