// Fourier-side solution values, the moment decomposition, damped norms,
// plateau closed forms, and the scalar-wave norm oracle.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "elwave/rng.hpp"
#include "elwave/spectral.hpp"

using namespace elwave;
using model::GaussianPolyAtom;
using model::GaussianPolyData;
using spectral::Solution;
using spectral::TermKind;
using spectral::TimePart;

namespace {

GaussianPolyAtom atom(double coeff, model::MultiIndex gamma, double width) {
    GaussianPolyAtom a;
    a.coeff = coeff;
    a.gamma = std::move(gamma);
    a.width = width;
    return a;
}

// Generic two-dimensional data with every moment in play.
Solution generic_2d() {
    GaussianPolyData d;
    d.dim = 2;
    d.f0 = {{atom(1.0, {0, 0}, 1.0)},
            {atom(0.6, {0, 1}, 0.8)}};
    d.f1 = {{atom(-0.9, {1, 0}, 1.2)},
            {atom(0.7, {0, 0}, 1.0), atom(0.3, {1, 1}, 0.9)}};
    return spectral::make_solution(d, model::make_lame(1.0, 1.0));
}

// The three-dimensional mixed data used by the plateau regressions:
// f0[0] = f1[0] = g + x_1 g.
Solution mixed_3d() {
    GaussianPolyData d;
    d.dim = 3;
    d.f0 = {{atom(1.0, {0, 0, 0}, 1.0), atom(1.0, {1, 0, 0}, 1.0)}, {}, {}};
    d.f1 = d.f0;
    return spectral::make_solution(d, model::make_lame(1.0, 1.0));
}

std::vector<double> random_xi(const rng::CounterRng& gen, std::uint64_t& ctr,
                              int dim) {
    std::vector<double> xi(dim);
    for (;;) {
        double r2 = 0.0;
        for (int d = 0; d < dim; ++d) {
            xi[d] = 3.0 * (2.0 * gen.uniform_pos(ctr++) - 1.0);
            r2 += xi[d] * xi[d];
        }
        if (r2 >= 1e-2) return xi;
    }
}

} // namespace

TEST_CASE("trig factors: product form equals the naive difference") {
    const auto lp = model::make_lame(1.0, 1.0);
    const rng::CounterRng gen(61);
    std::uint64_t ctr = 0;
    for (int rep = 0; rep < 50; ++rep) {
        const double t = 10.0 * gen.uniform_pos(ctr++);
        const double r = 4.0 * gen.uniform_pos(ctr++);
        const auto tv = spectral::trig_values(lp, t, r);
        CHECK(tv.c2 == Catch::Approx(std::cos(t * lp.alpha2 * r)).margin(1e-15));
        CHECK(tv.dc == Catch::Approx(std::cos(t * lp.alpha1 * r) -
                                     std::cos(t * lp.alpha2 * r))
                           .margin(1e-14));
        CHECK(tv.ds == Catch::Approx(t * quadrature::sincx(t * lp.alpha1 * r) -
                                     t * quadrature::sincx(t * lp.alpha2 * r))
                           .margin(1e-14));
    }
    // Equal speeds kill both difference factors identically.
    const auto eq = model::make_lame(-1.0, 1.0);
    const auto tv = spectral::trig_values(eq, 3.7, 2.2);
    CHECK(tv.dc == 0.0);
    CHECK(tv.ds == 0.0);
}

TEST_CASE("moment decomposition sums back to the full symbol") {
    const rng::CounterRng gen(67);
    std::uint64_t ctr = 0;
    for (const auto& sol : {generic_2d(), mixed_3d()}) {
        const int n = sol.data.dim;
        for (int rep = 0; rep < 50; ++rep) {
            const auto xi = random_xi(gen, ctr, n);
            const double t = 5.0 * gen.uniform_pos(ctr++);
            const int N = rep % n;
            for (const auto part :
                 {TimePart::cosine, TimePart::sine, TimePart::combined}) {
                const auto full =
                    spectral::term_value(sol, TermKind::full, part, t, xi, N);
                const auto zer =
                    spectral::term_value(sol, TermKind::zeroth, part, t, xi, N);
                const auto zrem = spectral::term_value(
                    sol, TermKind::zeroth_remainder, part, t, xi, N);
                const auto fir =
                    spectral::term_value(sol, TermKind::first, part, t, xi, N);
                const auto frem = spectral::term_value(
                    sol, TermKind::first_remainder, part, t, xi, N);
                const double scale =
                    1.0 + std::abs(full) + std::abs(zer) + std::abs(fir);
                CAPTURE(n, rep, N, spectral::part_name(part));
                CHECK(std::abs(full - (zer + zrem)) <= 1e-12 * scale);
                CHECK(std::abs(zrem - (fir + frem)) <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("the symbol satisfies the initial conditions") {
    const auto sol = generic_2d();
    const rng::CounterRng gen(71);
    std::uint64_t ctr = 0;
    for (int rep = 0; rep < 30; ++rep) {
        const auto xi = random_xi(gen, ctr, 2);
        const int N = rep % 2;
        const auto at0 = spectral::uhat_component(sol, 0.0, xi, N);
        const auto f0hat = model::sum_fourier(sol.data.f0[N], xi);
        CHECK(std::abs(at0 - f0hat) <= 1e-13 * (1.0 + std::abs(f0hat)));
        // Central difference in time recovers the velocity transform.
        const double h = 1e-4;
        const auto dplus = spectral::uhat_component(sol, h, xi, N);
        const auto dminus = spectral::uhat_component(sol, -h, xi, N);
        const auto dt = (dplus - dminus) / (2.0 * h);
        const auto f1hat = model::sum_fourier(sol.data.f1[N], xi);
        CHECK(std::abs(dt - f1hat) <= 1e-6 * (1.0 + std::abs(f1hat)));
    }
}

TEST_CASE("the symbol equals the two-speed projection assembly") {
    const auto sol = spectral::make_solution(generic_2d().data,
                                             model::make_lame(0.7, 1.3));
    const rng::CounterRng gen(73);
    std::uint64_t ctr = 0;
    for (int rep = 0; rep < 40; ++rep) {
        const auto xi = random_xi(gen, ctr, 2);
        const double t = 4.0 * gen.uniform_pos(ctr++);
        const double r = std::hypot(xi[0], xi[1]);
        const double w[2] = {xi[0] / r, xi[1] / r};
        const double c1 = std::cos(t * sol.lame.alpha1 * r);
        const double c2 = std::cos(t * sol.lame.alpha2 * r);
        const double s1 = t * quadrature::sincx(t * sol.lame.alpha1 * r);
        const double s2 = t * quadrature::sincx(t * sol.lame.alpha2 * r);
        for (int N = 0; N < 2; ++N) {
            std::complex<double> expect(0.0, 0.0);
            for (int k = 0; k < 2; ++k) {
                const double delta = (k == N) ? 1.0 : 0.0;
                const double shear = delta - w[N] * w[k];
                const double press = w[N] * w[k];
                expect += (c2 * shear + c1 * press) *
                          model::sum_fourier(sol.data.f0[k], xi);
                expect += (s2 * shear + s1 * press) *
                          model::sum_fourier(sol.data.f1[k], xi);
            }
            const auto got = spectral::uhat_component(sol, t, xi, N);
            CAPTURE(rep, N, t);
            CHECK(std::abs(got - expect) <=
                  1e-12 * (1.0 + std::abs(expect)) * (1.0 + t));
        }
    }
}

TEST_CASE("equal wave speeds decouple the components exactly") {
    const auto sol = spectral::make_solution(generic_2d().data,
                                             model::make_lame(-1.0, 1.0));
    REQUIRE(model::is_scalar_reduction(sol.lame));
    const rng::CounterRng gen(79);
    std::uint64_t ctr = 0;
    for (int rep = 0; rep < 30; ++rep) {
        const auto xi = random_xi(gen, ctr, 2);
        const double t = 6.0 * gen.uniform_pos(ctr++);
        const double r = std::hypot(xi[0], xi[1]);
        for (int N = 0; N < 2; ++N) {
            const std::complex<double> expect =
                std::cos(t * sol.lame.alpha2 * r) *
                    model::sum_fourier(sol.data.f0[N], xi) +
                t * quadrature::sincx(t * sol.lame.alpha2 * r) *
                    model::sum_fourier(sol.data.f1[N], xi);
            const auto got = spectral::uhat_component(sol, t, xi, N);
            CHECK(std::abs(got - expect) <=
                  1e-13 * (1.0 + std::abs(expect)) * (1.0 + t));
        }
    }
}

TEST_CASE("input validation on terms and norms") {
    const auto sol = generic_2d();
    CHECK_THROWS_WITH(
        spectral::term_value(sol, TermKind::full, TimePart::combined, 1.0,
                             {0.0, 0.0}, 0),
        Catch::Matchers::ContainsSubstring("xi = 0"));
    CHECK_THROWS_AS(spectral::term_value(sol, TermKind::full,
                                         TimePart::combined, 1.0, {1.0}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(spectral::decomposition_norm(sol, TermKind::zeroth,
                                                 TimePart::cosine, 2, 1.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_WITH(
        spectral::decomposition_norm(sol, TermKind::zeroth, TimePart::cosine,
                                     0, 0.0, 1.0),
        Catch::Matchers::ContainsSubstring("Gaussian damping factor"));
    CHECK_THROWS_AS(spectral::decomposition_norm(sol, TermKind::full,
                                                 TimePart::combined, 0, -1.0,
                                                 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(spectral::decomposition_norm(sol, TermKind::full,
                                                 TimePart::combined, 0, 0.0,
                                                 -2.0),
                    std::invalid_argument);
    CHECK_THROWS_WITH(
        spectral::zeroth_plateau(sol, TimePart::combined, 0, 1.0),
        Catch::Matchers::ContainsSubstring("per data family"));
    // Sine-family zeroth term in dimension two with nonzero mean velocity:
    // no finite limit.
    CHECK_THROWS_AS(spectral::zeroth_plateau(sol, TimePart::sine, 1, 1.0),
                    std::domain_error);
}

TEST_CASE("damped norms: pinned plateau values in three dimensions") {
    const auto sol = mixed_3d();
    const double beta = 2.0;
    struct Pin {
        TimePart part;
        int N;
        double zeroth;
        double first;
    };
    const Pin pins[] = {
        {TimePart::cosine, 0, 2.813053134, 0.470741112},
        {TimePart::cosine, 1, 1.199489886, 0.2404328675},
        {TimePart::sine, 0, 7.196939319, 0.5779286881},
        {TimePart::sine, 1, 2.770103235, 0.3205771567},
    };
    for (const auto& pin : pins) {
        CAPTURE(spectral::part_name(pin.part), pin.N);
        CHECK(spectral::zeroth_plateau(sol, pin.part, pin.N, beta) ==
              Catch::Approx(pin.zeroth).epsilon(1e-8));
        CHECK(spectral::first_plateau(sol, pin.part, pin.N, beta) ==
              Catch::Approx(pin.first).epsilon(1e-8));
    }
    // The time-dependent norms settle onto the closed forms.
    const double t = 4000.0;
    CHECK(spectral::decomposition_norm(sol, TermKind::zeroth, TimePart::cosine,
                                       0, beta, t) ==
          Catch::Approx(spectral::zeroth_plateau(sol, TimePart::cosine, 0,
                                                 beta))
              .epsilon(1e-6));
    CHECK(spectral::decomposition_norm(sol, TermKind::first, TimePart::sine, 0,
                                       beta, t) ==
          Catch::Approx(spectral::first_plateau(sol, TimePart::sine, 0, beta))
              .epsilon(1e-6));
    CHECK(spectral::decomposition_norm(sol, TermKind::first, TimePart::cosine,
                                       1, beta, t) ==
          Catch::Approx(spectral::first_plateau(sol, TimePart::cosine, 1,
                                                beta))
              .epsilon(1e-6));
    CHECK(spectral::decomposition_norm(sol, TermKind::zeroth, TimePart::sine,
                                       1, beta, t) ==
          Catch::Approx(spectral::zeroth_plateau(sol, TimePart::sine, 1, beta))
              .epsilon(1e-6));
    // Families are asymptotically orthogonal: the combined limit is the
    // root-sum-square of the per-family limits.
    const double csq =
        std::pow(spectral::zeroth_plateau(sol, TimePart::cosine, 0, beta), 2) +
        std::pow(spectral::zeroth_plateau(sol, TimePart::sine, 0, beta), 2);
    CHECK(spectral::decomposition_norm(sol, TermKind::zeroth,
                                       TimePart::combined, 0, beta, t) ==
          Catch::Approx(std::sqrt(csq)).epsilon(1e-6));
}

TEST_CASE("family cross term closes the Pythagorean identity and decays") {
    const auto sol = mixed_3d();
    const double beta = 2.0;
    for (const double t : {3.0, 10.0}) {
        const double comb = spectral::decomposition_norm(
            sol, TermKind::zeroth, TimePart::combined, 0, beta, t);
        const double cosn = spectral::decomposition_norm(
            sol, TermKind::zeroth, TimePart::cosine, 0, beta, t);
        const double sinn = spectral::decomposition_norm(
            sol, TermKind::zeroth, TimePart::sine, 0, beta, t);
        const double cross = spectral::zeroth_cross_term(sol, 0, beta, t);
        CAPTURE(t);
        CHECK(comb * comb == Catch::Approx(cosn * cosn + sinn * sinn +
                                           2.0 * cross)
                                 .epsilon(1e-10));
    }
    CHECK(std::abs(spectral::zeroth_cross_term(sol, 0, beta, 10.0)) > 0.01);
    CHECK(std::abs(spectral::zeroth_cross_term(sol, 0, beta, 100.0)) < 1e-10);
    CHECK(std::abs(spectral::zeroth_cross_term(sol, 0, beta, 1000.0)) < 1e-10);
}

TEST_CASE("norms obey the triangle inequality between terms") {
    const auto sol = generic_2d();
    const double beta = 1.0;
    for (const double t : {0.5, 2.0, 9.0}) {
        for (const auto part : {TimePart::cosine, TimePart::sine}) {
            const double full = spectral::decomposition_norm(
                sol, TermKind::full, part, 0, beta, t);
            const double zer = spectral::decomposition_norm(
                sol, TermKind::zeroth, part, 0, beta, t);
            const double rem = spectral::decomposition_norm(
                sol, TermKind::zeroth_remainder, part, 0, beta, t);
            CAPTURE(t, spectral::part_name(part));
            CHECK(full >= zer - rem - 1e-12);
            CHECK(full <= zer + rem + 1e-12);
        }
    }
}

TEST_CASE("physical norm matches a Cartesian frequency-grid oracle") {
    const auto sol = generic_2d();
    const double t = 2.0;
    const auto gl = quadrature::gauss_legendre(96);
    const double L = 8.0;
    for (int N = 0; N < 2; ++N) {
        double total = 0.0;
        std::vector<double> xi(2);
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            xi[0] = L * gl.nodes[i];
            double row = 0.0;
            for (std::size_t j = 0; j < gl.nodes.size(); ++j) {
                xi[1] = L * gl.nodes[j];
                row += L * gl.weights[j] *
                       std::norm(spectral::uhat_component(sol, t, xi, N));
            }
            total += L * gl.weights[i] * row;
        }
        const double oracle =
            model::inverse_ft_norm_factor(2) * std::sqrt(total);
        CHECK(spectral::component_l2_norm(sol, t, N) ==
              Catch::Approx(oracle).epsilon(1e-8));
    }
}

TEST_CASE("scalar wave norm: exact at t = 0 and under the reduction") {
    const model::AtomSum w0{atom(1.0, {0, 0}, 1.0), atom(-0.4, {1, 1}, 0.7)};
    const model::AtomSum w1{atom(0.8, {1, 0}, 1.1)};
    CHECK(spectral::wave_scalar_norm(w0, {}, 1.3, 2, 0.0) ==
          Catch::Approx(model::exact_l2_norm(w0, 2)).epsilon(1e-12));
    // One-dimensional data at t = 0 as well.
    const model::AtomSum v0{atom(0.9, {2}, 1.0)};
    CHECK(spectral::wave_scalar_norm(v0, {}, 1.0, 1, 0.0) ==
          Catch::Approx(model::exact_l2_norm(v0, 1)).epsilon(1e-12));

    // Under the scalar reduction each elastic component solves the scalar
    // wave equation with its own data.
    GaussianPolyData d;
    d.dim = 2;
    d.f0 = {w0, {}};
    d.f1 = {w1, {atom(0.5, {0, 0}, 1.0)}};
    const auto sol = spectral::make_solution(d, model::make_lame(-1.0, 1.0));
    const double alpha = sol.lame.alpha2;
    for (const double t : {1.0, 4.0}) {
        CHECK(spectral::component_l2_norm(sol, t, 0) ==
              Catch::Approx(spectral::wave_scalar_norm(d.f0[0], d.f1[0],
                                                       alpha, 2, t))
                  .epsilon(1e-10));
        CHECK(spectral::component_l2_norm(sol, t, 1) ==
              Catch::Approx(spectral::wave_scalar_norm(d.f0[1], d.f1[1],
                                                       alpha, 2, t))
                  .epsilon(1e-10));
    }
    CHECK_THROWS_AS(spectral::wave_scalar_norm(w0, w1, 0.0, 2, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(spectral::wave_scalar_norm(w0, w1, 1.0, 0, 1.0),
                    std::invalid_argument);
}
