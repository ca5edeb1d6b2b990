// Radial quadrature for integrals of the form
//   integral_0^inf exp(-c r^2) * poly(r) * (trig factors of frequency <= w) dr.
// Panels are sized so the fastest oscillation advances at most a fixed phase
// per panel; the upper limit comes from an explicit Gaussian tail bound.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "model.hpp"

namespace elwave::quadrature {

/** Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1],
 *  computed by Newton iteration on the Legendre polynomial. */
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline GaussLegendre gauss_legendre(int m) {
    if (m < 1) throw std::invalid_argument("quadrature order < 1");
    GaussLegendre rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        // Tricomi initial guess for the i-th positive root.
        double x = std::cos(model::pi * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_m and P_m' by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= m; ++k) {
                const double p2 =
                    ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[m - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[m - 1 - i] = w;
    }
    if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
    return rule;
}

/** integral_0^inf exp(-c r^2) r^q dr in closed form. */
inline double gaussian_radial_moment(double c, double q) {
    if (!(c > 0.0)) throw std::invalid_argument("decay rate <= 0");
    if (!(q > -1.0)) throw std::invalid_argument("radial power <= -1");
    return 0.5 * std::tgamma(0.5 * (q + 1.0)) * std::pow(c, -0.5 * (q + 1.0));
}

/** Accuracy knobs shared by every radial integral in the library. */
struct QuadratureSpec {
    int radial_nodes_per_panel = 8;
    double tail_tolerance = 1e-14; // relative to the un-oscillated integral
    int angular_degree = 8;        // polynomial degree integrated exactly

    QuadratureSpec refined(int factor) const {
        QuadratureSpec s = *this;
        s.radial_nodes_per_panel *= factor;
        return s;
    }
};

/** A concrete radial rule on [0, r_max]: uniform panels, Gauss-Legendre
 *  nodes inside each panel. */
struct RadialQuadrature {
    double r_max = 0.0;
    int panels = 0;
    int nodes_per_panel = 0;
    double oscillation_freq = 0.0; // fastest trig frequency handled exactly
    std::vector<double> nodes;
    std::vector<double> weights;
};

/** Truncation radius R with
 *    integral_R^inf exp(-c r^2) r^q dr <= tol * integral_0^inf,
 *  from the bound integral_R^inf <= R^(q-1) exp(-c R^2) / c for
 *  R >= sqrt(q / c). */
inline double tail_radius(double c, double q, double rel_tol) {
    if (!(c > 0.0))
        throw std::invalid_argument("tail decay rate <= 0");
    const double total = gaussian_radial_moment(c, q);
    double r = std::max(
        {std::sqrt(std::max(q, 1.0) / c), 1.0 / std::sqrt(c), 1.0});
    const double target = std::max(rel_tol, 1e-300) * total;
    const double step = 0.25 / std::sqrt(c);
    for (int iter = 0; iter < 2000000; ++iter) {
        const double bound = std::pow(r, q - 1.0) * std::exp(-c * r * r) / c;
        if (bound <= target) return r;
        r += step;
    }
    throw std::runtime_error(
        "radial tail bound not met within the scan range (rate " +
        std::to_string(c) + ", power " + std::to_string(q) + ")");
}

/** Builds the radial rule for decay rate c (the factor exp(-c r^2)),
 *  polynomial power q (tail estimate), and fastest trig frequency w
 *  (largest |d phase / dr| among the oscillatory factors, with squared
 *  trig counted twice). Panels are at most pi / w long, so the 8-node
 *  default resolves each panel to near machine precision. */
inline RadialQuadrature make_radial_quadrature(double c, double q, double w,
                                               const QuadratureSpec& spec) {
    RadialQuadrature rq;
    rq.r_max = tail_radius(c, q, spec.tail_tolerance);
    rq.oscillation_freq = w;
    const double max_panel_width =
        (w > 0.0) ? model::pi / w : rq.r_max / 32.0;
    rq.panels = std::max(
        32, static_cast<int>(std::ceil(rq.r_max / max_panel_width)));
    rq.nodes_per_panel = spec.radial_nodes_per_panel;
    const auto gl = gauss_legendre(rq.nodes_per_panel);
    const double h = rq.r_max / rq.panels;
    rq.nodes.reserve(static_cast<std::size_t>(rq.panels) * rq.nodes_per_panel);
    rq.weights.reserve(rq.nodes.capacity());
    for (int p = 0; p < rq.panels; ++p) {
        const double a = p * h, mid = a + 0.5 * h;
        for (int i = 0; i < rq.nodes_per_panel; ++i) {
            rq.nodes.push_back(mid + 0.5 * h * gl.nodes[i]);
            rq.weights.push_back(0.5 * h * gl.weights[i]);
        }
    }
    return rq;
}

template <typename Fn>
double integrate(const RadialQuadrature& rq, Fn&& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < rq.nodes.size(); ++i)
        s += rq.weights[i] * f(rq.nodes[i]);
    return s;
}

/** sin(x)/x, stable near zero. */
inline double sincx(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

} // namespace elwave::quadrature
