// Zeroth and first moments of the data, including the aggregate
// first-moment sizes used by the remainder bounds.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "elwave/moments.hpp"
#include "elwave/quadrature.hpp"
#include "elwave/rng.hpp"

using namespace elwave;
using model::AtomSum;
using model::GaussianPolyAtom;
using model::GaussianPolyData;
using model::MultiIndex;

namespace {

// Brute-force moment oracle: integral of (-x)^beta-ish... precisely,
// zeroth: integral of f; first (index l): -integral of x_l f.
double moment_oracle(const AtomSum& sum, const MultiIndex& beta, int dim) {
    const auto gl = quadrature::gauss_legendre(120);
    const double L = 8.0;
    double total = 0.0;
    std::vector<double> x(dim);
    std::vector<std::size_t> idx(dim, 0);
    const std::size_t m = gl.nodes.size();
    std::size_t count = 1;
    for (int d = 0; d < dim; ++d) count *= m;
    for (std::size_t flat = 0; flat < count; ++flat) {
        std::size_t rem = flat;
        double w = 1.0;
        for (int d = 0; d < dim; ++d) {
            const std::size_t i = rem % m;
            rem /= m;
            x[d] = L * gl.nodes[i];
            w *= L * gl.weights[i];
        }
        double poly = 1.0;
        for (int d = 0; d < dim; ++d)
            for (int e = 0; e < beta[d]; ++e) poly *= x[d];
        total += w * poly * model::sum_value(sum, x.data());
    }
    int order = 0;
    for (int b : beta) order += b;
    return (order % 2 == 1 ? -1.0 : 1.0) * total;
}

} // namespace

TEST_CASE("single-atom moments have the advertised closed forms") {
    // x1 e^(-|x|^2) in 2-D: zero mean, first moment (-pi/2, 0).
    const GaussianPolyAtom dipole{1.0, {1, 0}, 1.0};
    CHECK(moments::atom_moment(dipole, {0, 0}) == 0.0);
    CHECK(moments::atom_moment(dipole, {1, 0}) ==
          Catch::Approx(-model::pi / 2.0).epsilon(1e-14));
    CHECK(moments::atom_moment(dipole, {0, 1}) == 0.0);
    // plain Gaussian in 2-D: mean pi.
    const GaussianPolyAtom monopole{1.0, {0, 0}, 1.0};
    CHECK(moments::atom_moment(monopole, {0, 0}) ==
          Catch::Approx(model::pi).epsilon(1e-14));
    CHECK_THROWS_WITH(moments::atom_moment(monopole, {1, 1}),
                      Catch::Matchers::ContainsSubstring("order > 1"));
}

TEST_CASE("moments agree with brute-force integration") {
    const rng::CounterRng gen(99);
    std::uint64_t ctr = 0;
    for (int rep = 0; rep < 8; ++rep) {
        AtomSum sum;
        const int atoms = 1 + static_cast<int>(2.0 * gen.uniform_pos(ctr++));
        for (int a = 0; a < atoms; ++a) {
            GaussianPolyAtom atom;
            atom.coeff = 2.0 * gen.uniform_pos(ctr++) - 1.0;
            atom.width = 0.5 + gen.uniform_pos(ctr++);
            atom.gamma = {static_cast<int>(3.0 * gen.uniform_pos(ctr++)),
                          static_cast<int>(3.0 * gen.uniform_pos(ctr++))};
            sum.push_back(atom);
        }
        for (const MultiIndex beta : {MultiIndex{0, 0}, MultiIndex{1, 0},
                                      MultiIndex{0, 1}}) {
            const double got = moments::sum_moment(sum, beta);
            const double want = moment_oracle(sum, beta, 2);
            CAPTURE(rep, beta[0], beta[1]);
            CHECK(got == Catch::Approx(want).margin(1e-9));
        }
    }
}

TEST_CASE("moment assembly fills the vector structure") {
    GaussianPolyData data;
    data.dim = 2;
    data.f0.assign(2, {});
    data.f1.assign(2, {});
    data.f1[0].push_back({1.0, {0, 0}, 1.0}); // mean pi in component 1
    data.f0[1].push_back({1.0, {1, 0}, 1.0}); // first moment -pi/2
    const auto mom = moments::assemble_moments(data);
    CHECK(mom.m[1][0] == Catch::Approx(model::pi).epsilon(1e-14));
    CHECK(mom.m[1][1] == 0.0);
    CHECK(mom.m[0][0] == 0.0);
    CHECK(mom.p[0][1][0] == Catch::Approx(-model::pi / 2.0).epsilon(1e-14));
    CHECK(mom.m_euclid(1) == Catch::Approx(model::pi).epsilon(1e-14));
    CHECK_FALSE(mom.zeroth_vanish(1));
    CHECK(mom.zeroth_vanish(0));
    CHECK(mom.first_vanish(1));
    CHECK_FALSE(mom.first_vanish(0));
}

TEST_CASE("aggregate first-moment sizes combine row and coupling terms") {
    GaussianPolyData data;
    data.dim = 2;
    data.f0.assign(2, {});
    data.f1.assign(2, {});
    data.f1[0].push_back({1.0, {1, 0}, 1.0}); // p[1][0] = (-pi/2, 0)
    const auto mom = moments::assemble_moments(data);
    const double q = model::pi / 2.0;
    // Row size of component 1.
    CHECK(mom.P_abs[1][0] == Catch::Approx(q).epsilon(1e-14));
    CHECK(mom.P_abs[1][1] == 0.0);
    // Aggregate for component 1: row + column 1 entries + diagonal.
    CHECK(mom.PP_abs[1][0] == Catch::Approx(3.0 * q).epsilon(1e-13));
    // Component 2 sees the same matrix through the couplings.
    CHECK(mom.PP_abs[1][1] == Catch::Approx(q).epsilon(1e-13));
}

TEST_CASE("absolute sizes bound the signed moments") {
    GaussianPolyData data;
    data.dim = 3;
    data.f0.assign(3, {});
    data.f1.assign(3, {});
    data.f1[0].push_back({1.5, {0, 0, 0}, 0.8});
    data.f1[1].push_back({-0.7, {1, 0, 0}, 1.2});
    data.f0[2].push_back({0.4, {0, 0, 1}, 1.0});
    const auto mom = moments::assemble_moments(data);
    for (int j = 0; j < 2; ++j) {
        double sum_abs = 0.0;
        for (double v : mom.m[j]) sum_abs += std::abs(v);
        CHECK(sum_abs <= mom.M_abs[j] + 1e-14);
        for (int k = 0; k < 3; ++k) {
            double row = 0.0;
            for (double v : mom.p[j][k]) row += std::abs(v);
            CHECK(row <= mom.P_abs[j][k] + 1e-14);
        }
    }
}
