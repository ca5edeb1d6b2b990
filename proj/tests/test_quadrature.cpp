// Gauss-Legendre construction, Gaussian radial moments, the tail bound,
// and oscillatory radial integration.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "elwave/quadrature.hpp"

using namespace elwave;
using quadrature::QuadratureSpec;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
    for (const int m : {2, 5, 8, 16}) {
        const auto gl = quadrature::gauss_legendre(m);
        REQUIRE(gl.nodes.size() == static_cast<std::size_t>(m));
        for (int k = 0; k <= 2 * m - 1; ++k) {
            double s = 0.0;
            for (int i = 0; i < m; ++i)
                s += gl.weights[i] * std::pow(gl.nodes[i], k);
            const double exact = (k % 2 == 0) ? 2.0 / (k + 1.0) : 0.0;
            CAPTURE(m, k);
            CHECK(s == Catch::Approx(exact).margin(1e-13));
        }
    }
    const auto one = quadrature::gauss_legendre(1);
    CHECK(one.nodes[0] == Catch::Approx(0.0).margin(1e-16));
    CHECK(one.weights[0] == Catch::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(quadrature::gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("Gaussian radial moments match the gamma-function values") {
    CHECK(quadrature::gaussian_radial_moment(1.0, 1.0) ==
          Catch::Approx(0.5).epsilon(1e-15));
    CHECK(quadrature::gaussian_radial_moment(1.0, 0.0) ==
          Catch::Approx(0.5 * std::sqrt(model::pi)).epsilon(1e-15));
    CHECK(quadrature::gaussian_radial_moment(1.0, 2.0) ==
          Catch::Approx(0.25 * std::sqrt(model::pi)).epsilon(1e-15));
    CHECK(quadrature::gaussian_radial_moment(2.0, 3.0) ==
          Catch::Approx(0.125).epsilon(1e-15));
    CHECK_THROWS_AS(quadrature::gaussian_radial_moment(0.0, 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(quadrature::gaussian_radial_moment(1.0, -1.0),
                    std::invalid_argument);
}

TEST_CASE("tail radius really bounds the discarded mass") {
    // Evaluate the tail integral with a fine shifted rule and compare
    // against the promised fraction of the whole integral.
    const auto gl = quadrature::gauss_legendre(64);
    for (const auto [c, q, tol] :
         {std::tuple{1.0, 2.0, 1e-14}, std::tuple{0.5, 5.0, 1e-12},
          std::tuple{4.0, 1.0, 1e-10}}) {
        const double R = quadrature::tail_radius(c, q, tol);
        const double total = quadrature::gaussian_radial_moment(c, q);
        const double reach = 14.0 / std::sqrt(c);
        double tail = 0.0;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double r = R + 0.5 * reach * (gl.nodes[i] + 1.0);
            tail += 0.5 * reach * gl.weights[i] * std::exp(-c * r * r) *
                    std::pow(r, q);
        }
        CAPTURE(c, q, tol, R);
        CHECK(tail <= tol * total * (1.0 + 1e-10));
    }
}

TEST_CASE("radial rule integrates smooth and oscillatory profiles") {
    const QuadratureSpec spec;
    // No oscillation: integral_0^inf exp(-r^2) r^2 dr = sqrt(pi)/4.
    {
        const auto rq = quadrature::make_radial_quadrature(1.0, 2.0, 0.0, spec);
        const double v = quadrature::integrate(
            rq, [](double r) { return std::exp(-r * r) * r * r; });
        CHECK(v == Catch::Approx(0.25 * std::sqrt(model::pi)).epsilon(1e-13));
    }
    // integral_0^inf exp(-r^2) cos(w r) dr = (sqrt(pi)/2) exp(-w^2/4).
    for (const double w : {0.0, 2.0}) {
        const auto rq = quadrature::make_radial_quadrature(1.0, 0.0, w, spec);
        const double v = quadrature::integrate(
            rq, [w](double r) { return std::exp(-r * r) * std::cos(w * r); });
        const double exact =
            0.5 * std::sqrt(model::pi) * std::exp(-0.25 * w * w);
        CAPTURE(w);
        CHECK(v == Catch::Approx(exact).epsilon(1e-12));
    }
    // Strong cancellation: value ~ 1e-7, checked to absolute accuracy.
    {
        const double w = 8.0;
        const auto rq = quadrature::make_radial_quadrature(1.0, 0.0, w, spec);
        const double v = quadrature::integrate(
            rq, [w](double r) { return std::exp(-r * r) * std::cos(w * r); });
        const double exact =
            0.5 * std::sqrt(model::pi) * std::exp(-0.25 * w * w);
        CHECK(v == Catch::Approx(exact).margin(1e-13));
        // The panel count must track the requested frequency.
        CHECK(rq.panels >= static_cast<int>(rq.r_max * w / model::pi));
    }
    // Odd polynomial with sine: integral e^{-r^2} sin(w r) r dr
    // = (sqrt(pi)/4) w exp(-w^2/4).
    {
        const double w = 3.0;
        const auto rq = quadrature::make_radial_quadrature(1.0, 1.0, w, spec);
        const double v = quadrature::integrate(rq, [w](double r) {
            return std::exp(-r * r) * std::sin(w * r) * r;
        });
        const double exact =
            0.25 * std::sqrt(model::pi) * w * std::exp(-0.25 * w * w);
        CHECK(v == Catch::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("refined spec multiplies only the per-panel node count") {
    const QuadratureSpec base;
    const QuadratureSpec fine = base.refined(3);
    CHECK(fine.radial_nodes_per_panel == 3 * base.radial_nodes_per_panel);
    CHECK(fine.tail_tolerance == base.tail_tolerance);
    CHECK(fine.angular_degree == base.angular_degree);
    const auto rq = quadrature::make_radial_quadrature(1.0, 2.0, 1.0, fine);
    CHECK(rq.nodes_per_panel == fine.radial_nodes_per_panel);
}

TEST_CASE("stable sinc agrees with the naive quotient") {
    CHECK(quadrature::sincx(0.0) == 1.0);
    CHECK(quadrature::sincx(2.5) ==
          Catch::Approx(std::sin(2.5) / 2.5).epsilon(1e-15));
    CHECK(quadrature::sincx(-2.5) == quadrature::sincx(2.5));
    // Continuity across the series/quotient switch at |x| = 1e-4.
    const double lo = quadrature::sincx(0.99999e-4);
    const double hi = quadrature::sincx(1.00001e-4);
    CHECK(std::abs(lo - hi) < 1e-13);
    CHECK(quadrature::sincx(1e-6) ==
          Catch::Approx(1.0 - 1e-12 / 6.0).epsilon(1e-15));
}
