// Growth portrait: how the component L2 norms evolve for spreading waves.
//
// Part 1 follows the scalar wave equation with Gaussian velocity data in
// dimensions 1, 2 and 3: the norm grows like sqrt(t), like
// sqrt(log(t + 2)), and stays bounded, respectively.
// Part 2 follows the planar elastic system with mean-carrying velocity
// data, whose two components grow logarithmically with different sharp
// slopes. All slopes are compared against their closed-form targets.
#include <cstdio>

#include "elwave/experiments.hpp"

using namespace elwave;

int main() {
    const auto ts = growth::log_spaced_grid(10.0, 1000.0, 4);

    std::printf("== scalar wave, Gaussian velocity data, speed 1 ==\n");
    std::printf("%10s", "t");
    for (int dim = 1; dim <= 3; ++dim) std::printf("   norm(dim=%d)", dim);
    std::printf("\n");

    std::array<std::vector<double>, 3> series;
    for (const double t : ts) {
        std::printf("%10.2f", t);
        for (int dim = 1; dim <= 3; ++dim) {
            model::AtomSum w1{{1.0, model::MultiIndex(dim, 0), 1.0}};
            const double v = spectral::wave_scalar_norm({}, w1, 1.0, dim, t);
            series[dim - 1].push_back(v);
            std::printf("  %12.6f", v);
        }
        std::printf("\n");
    }

    const double m1 = std::pow(model::pi, 0.5);  // integral of the data, 1-D
    const double m2 = model::pi;                 // 2-D
    struct Row {
        int dim;
        growth::GrowthModel model;
        double target; // slope of norm^2 vs the regressor
    };
    const Row rows[] = {
        {1, growth::GrowthModel::sqrt_t,
         experiments::scalar_slope_target(1, m1, 1.0)},
        {2, growth::GrowthModel::sqrt_log,
         experiments::scalar_slope_target(2, m2, 1.0)},
        {3, growth::GrowthModel::constant, 0.0},
    };
    for (const auto& row : rows) {
        const auto fit = growth::fit_growth(ts, series[row.dim - 1], row.model);
        if (row.model == growth::GrowthModel::constant) {
            std::printf("dim %d: bounded, mean squared norm %.6f\n", row.dim,
                        fit.coefficient);
        } else {
            std::printf(
                "dim %d: %s slope %.6f (closed form %.6f), R^2 = %.6f\n",
                row.dim, growth::model_name(row.model), fit.coefficient,
                row.target, fit.r_squared);
        }
    }

    std::printf("\n== planar elastic system, velocity data (g, 0) ==\n");
    model::GaussianPolyData d;
    d.dim = 2;
    d.f0 = {{}, {}};
    d.f1 = {{{1.0, {0, 0}, 1.0}}, {}};
    const auto sol = spectral::make_solution(d, model::make_lame(1.0, 1.0));

    std::printf("%10s  %12s  %12s\n", "t", "norm(u1)", "norm(u2)");
    std::array<std::vector<double>, 2> comp;
    for (const double t : ts) {
        std::printf("%10.2f", t);
        for (int N = 0; N < 2; ++N) {
            const double v = spectral::component_l2_norm(sol, t, N);
            comp[N].push_back(v);
            std::printf("  %12.6f", v);
        }
        std::printf("\n");
    }
    for (int N = 0; N < 2; ++N) {
        const auto fit =
            growth::fit_growth(ts, comp[N], growth::GrowthModel::sqrt_log);
        const double target = experiments::log_slope_target(sol, N);
        std::printf(
            "u%d: log slope %.6f (closed form %.6f = pi/%d), R^2 = %.6f\n",
            N + 1, fit.coefficient, target, N == 0 ? 8 : 24, fit.r_squared);
    }
    std::printf("\nBoth components grow like sqrt(log t); the component\n"
                "carrying the data mean grows three times faster in the\n"
                "squared norm, exactly as the closed forms predict.\n");
    return 0;
}
