// Gaussian-damped propagation kernels and their L2 norms.
//
// In Fourier variables the kernels are
//   cosine:  exp(-beta |xi|^2) cos(t alpha |xi|) (i xi)^gamma
//   sine:    exp(-beta |xi|^2) sin(t alpha |xi|) / (alpha |xi|) (i xi)^gamma
// optionally multiplied by the projection symbol xi_N xi_k / |xi|^2.
// Norms are taken on the Fourier side; angular and radial parts separate.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "model.hpp"
#include "quadrature.hpp"
#include "spherical.hpp"

namespace elwave::kernels {

using model::MultiIndex;

enum class KernelKind {
    cosine,           // cos(t alpha |xi|)
    sine,             // sin(t alpha |xi|) / (alpha |xi|)
    cosine_projected, // cosine times xi_N xi_k / |xi|^2
    sine_projected,   // sine   times xi_N xi_k / |xi|^2
};

inline bool is_sine(KernelKind k) {
    return k == KernelKind::sine || k == KernelKind::sine_projected;
}

inline bool is_projected(KernelKind k) {
    return k == KernelKind::cosine_projected ||
           k == KernelKind::sine_projected;
}

struct KernelSpec {
    KernelKind kind = KernelKind::cosine;
    int dim = 1;
    double alpha = 1.0;  // wave speed
    double beta = 1.0;   // Gaussian damping rate
    MultiIndex deriv;    // derivative multi-index gamma (empty = order zero)
    int comp_N = 0;      // projection indices (projected kinds only)
    int comp_k = 0;

    int order() const {
        int s = 0;
        for (int g : deriv) s += g;
        return s;
    }
};

inline void validate(const KernelSpec& spec) {
    if (spec.dim < 1) throw std::invalid_argument("dimension < 1");
    if (!(spec.alpha > 0.0)) throw std::invalid_argument("speed alpha <= 0");
    if (!(spec.beta > 0.0)) throw std::invalid_argument("damping beta <= 0");
    if (!spec.deriv.empty() &&
        static_cast<int>(spec.deriv.size()) != spec.dim)
        throw std::invalid_argument(
            "derivative index length does not match dimension");
    for (int g : spec.deriv)
        if (g < 0) throw std::invalid_argument("derivative index < 0");
    if (is_projected(spec.kind)) {
        if (spec.comp_N < 0 || spec.comp_N >= spec.dim ||
            spec.comp_k < 0 || spec.comp_k >= spec.dim)
            throw std::invalid_argument("projection index out of range");
    }
}

/** True when the L2 norm grows without bound as t -> infinity instead of
 *  approaching a finite limit (sine kernels with dim + 2*order <= 2). */
inline bool grows_in_time(const KernelSpec& spec) {
    return is_sine(spec.kind) && spec.dim + 2 * spec.order() <= 2;
}

/** Angular part of the squared norm:
 *  integral over the sphere of omega^(2 gamma), including the projection
 *  factor omega_N^2 omega_k^2 for projected kinds. */
inline double angular_factor(const KernelSpec& spec) {
    validate(spec);
    MultiIndex expo(spec.dim, 0);
    for (std::size_t j = 0; j < spec.deriv.size(); ++j)
        expo[j] = 2 * spec.deriv[j];
    if (is_projected(spec.kind)) {
        expo[spec.comp_N] += 2;
        expo[spec.comp_k] += 2;
    }
    return spherical::sphere_monomial_integral(spec.dim, expo);
}

/** Exact L2 norm of the kernel at time t, via the separated radial
 *  integral. The projection symbol is homogeneous of degree zero, so it
 *  only contributes to the angular factor. */
inline double kernel_l2_norm(const KernelSpec& spec, double t,
                             const quadrature::QuadratureSpec& qspec = {}) {
    validate(spec);
    if (t < 0.0) throw std::invalid_argument("time < 0");
    const double ang = angular_factor(spec);
    const int k = spec.order();
    const double power = spec.dim + 2 * k - 1;
    const double freq = 2.0 * t * spec.alpha; // squared trig doubles it
    const auto rq =
        quadrature::make_radial_quadrature(2.0 * spec.beta, power, freq, qspec);
    const bool sine = is_sine(spec.kind);
    const double radial = quadrature::integrate(rq, [&](double r) {
        const double phase = t * spec.alpha * r;
        const double trig =
            sine ? t * quadrature::sincx(phase) : std::cos(phase);
        return std::exp(-2.0 * spec.beta * r * r) * trig * trig *
               std::pow(r, power);
    });
    return std::sqrt(std::max(0.0, ang * radial));
}

/** Large-time limit of the kernel L2 norm in closed form.
 *  Throws std::domain_error when the norm grows instead (sine kinds with
 *  dim + 2*order <= 2); use growth_reference for those. */
inline double kernel_norm_asymptote(const KernelSpec& spec) {
    validate(spec);
    const double ang = angular_factor(spec);
    const int k = spec.order();
    const double nk = spec.dim + 2.0 * k;
    if (!is_sine(spec.kind)) {
        // Time-average of cos^2 is 1/2; the limit does not involve alpha.
        return std::pow(2.0, -0.25 * nk - 1.0) *
               std::sqrt(ang * std::tgamma(0.5 * nk)) *
               std::pow(spec.beta, -0.25 * nk);
    }
    if (nk <= 2.0)
        throw std::domain_error(
            "large-time limit does not exist: the norm grows without bound "
            "when dim + 2*order <= 2");
    // Time-average of sin^2 is 1/2 and the symbol carries 1/(alpha |xi|).
    return (1.0 / spec.alpha) * std::pow(2.0, -0.25 * nk - 0.5) *
           std::sqrt(ang * std::tgamma(0.5 * nk - 1.0)) *
           std::pow(spec.beta, -0.25 * nk + 0.5);
}

/** Reference growth shape for the unbounded regimes: sqrt(t) in dimension
 *  one, sqrt(log(t + 2)) in dimension two. */
inline double growth_reference(int dim, double t) {
    if (t < 0.0) throw std::invalid_argument("time < 0");
    if (dim == 1) return std::sqrt(t);
    if (dim == 2) return std::sqrt(std::log(t + 2.0));
    throw std::invalid_argument(
        "growth reference is defined for dimensions 1 and 2 only");
}

} // namespace elwave::kernels
