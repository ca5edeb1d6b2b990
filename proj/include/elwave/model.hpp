// Material parameters and Gaussian-polynomial initial data, with exact
// Fourier transforms and closed-form Gaussian moments.
//
// Fourier convention: f^(xi) = integral f(x) exp(-i x.xi) dx, so Plancherel
// reads ||f||_L2 = (2 pi)^(-n/2) ||f^||_L2.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace elwave::model {

inline constexpr double pi = 3.14159265358979323846264338327950288;

/** Lame parameters of an isotropic elastic medium together with the two
 *  wave speeds alpha1 = sqrt(lambda + 2 mu) (pressure) and
 *  alpha2 = sqrt(mu) (shear). */
struct LameParams {
    double lambda = 0.0;
    double mu = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
};

/** Validates the well-posedness conditions and precomputes the speeds.
 *  Throws std::invalid_argument naming the violated inequality. */
inline LameParams make_lame(double lambda, double mu) {
    if (!(mu > 0.0))
        throw std::invalid_argument("invalid Lame parameters: mu <= 0");
    if (!(lambda + 2.0 * mu > 0.0))
        throw std::invalid_argument(
            "invalid Lame parameters: lambda + 2*mu <= 0");
    LameParams lp;
    lp.lambda = lambda;
    lp.mu = mu;
    lp.alpha1 = std::sqrt(lambda + 2.0 * mu);
    lp.alpha2 = std::sqrt(mu);
    return lp;
}

/** True when the system decouples into independent scalar wave equations
 *  (both speeds coincide). */
inline bool is_scalar_reduction(const LameParams& lp) {
    return lp.lambda + lp.mu == 0.0;
}

using MultiIndex = std::vector<int>;

inline int multi_order(const MultiIndex& gamma) {
    int s = 0;
    for (int g : gamma) s += g;
    return s;
}

/** One summand of the initial data: coeff * x^gamma * exp(-width |x|^2). */
struct GaussianPolyAtom {
    double coeff = 0.0;
    MultiIndex gamma;
    double width = 1.0;
};

/** A finite sum of atoms; one scalar component of the data. */
using AtomSum = std::vector<GaussianPolyAtom>;

inline void validate_atom(const GaussianPolyAtom& atom, int dim) {
    if (static_cast<int>(atom.gamma.size()) != dim)
        throw std::invalid_argument(
            "atom exponent length " + std::to_string(atom.gamma.size()) +
            " does not match dimension " + std::to_string(dim));
    for (int g : atom.gamma)
        if (g < 0) throw std::invalid_argument("atom exponent < 0");
    if (multi_order(atom.gamma) > 2)
        throw std::invalid_argument(
            "atom polynomial degree > 2 is outside the supported data family");
    if (!(atom.width > 0.0))
        throw std::invalid_argument("atom width <= 0");
    if (!std::isfinite(atom.coeff))
        throw std::invalid_argument("atom coefficient is not finite");
}

/** Initial displacement f0 and initial velocity f1, one atom sum per
 *  vector component. */
struct GaussianPolyData {
    int dim = 0;
    std::vector<AtomSum> f0; // dim components
    std::vector<AtomSum> f1; // dim components
};

inline void validate_data(const GaussianPolyData& data) {
    if (data.dim < 1)
        throw std::invalid_argument("dimension < 1");
    if (static_cast<int>(data.f0.size()) != data.dim ||
        static_cast<int>(data.f1.size()) != data.dim)
        throw std::invalid_argument(
            "data must supply exactly dim components for f0 and f1");
    for (const auto& comp : data.f0)
        for (const auto& atom : comp) validate_atom(atom, data.dim);
    for (const auto& comp : data.f1)
        for (const auto& atom : comp) validate_atom(atom, data.dim);
}

/** integral x^m exp(-a x^2) dx over the line (zero for odd m). */
inline double gauss_moment_1d(double a, int m) {
    if (m % 2 != 0) return 0.0;
    return std::tgamma(0.5 * (m + 1)) * std::pow(a, -0.5 * (m + 1));
}

/** integral |x|^m exp(-a x^2) dx over the line (valid for every m >= 0). */
inline double abs_gauss_moment_1d(double a, int m) {
    return std::tgamma(0.5 * (m + 1)) * std::pow(a, -0.5 * (m + 1));
}

/** One-dimensional Fourier factor of x^p exp(-a x^2) for p in {0, 1, 2}. */
inline std::complex<double> fourier_factor_1d(int p, double a, double xi) {
    const double base = std::sqrt(pi / a) * std::exp(-xi * xi / (4.0 * a));
    switch (p) {
        case 0: return {base, 0.0};
        case 1: return {0.0, -xi / (2.0 * a) * base};
        case 2: return {(0.5 / a - xi * xi / (4.0 * a * a)) * base, 0.0};
        default:
            throw std::invalid_argument("atom polynomial degree > 2");
    }
}

/** Exact Fourier transform of an atom at frequency xi. */
inline std::complex<double> atom_fourier(const GaussianPolyAtom& atom,
                                         const std::vector<double>& xi) {
    if (xi.size() != atom.gamma.size())
        throw std::invalid_argument("frequency length does not match atom");
    std::complex<double> value(atom.coeff, 0.0);
    for (std::size_t j = 0; j < xi.size(); ++j)
        value *= fourier_factor_1d(atom.gamma[j], atom.width, xi[j]);
    return value;
}

inline std::complex<double> sum_fourier(const AtomSum& comp,
                                        const std::vector<double>& xi) {
    std::complex<double> value(0.0, 0.0);
    for (const auto& atom : comp) value += atom_fourier(atom, xi);
    return value;
}

/** Value of an atom at a physical point x. */
inline double atom_value(const GaussianPolyAtom& atom,
                         const double* x) {
    double v = atom.coeff;
    double r2 = 0.0;
    for (std::size_t j = 0; j < atom.gamma.size(); ++j) {
        r2 += x[j] * x[j];
        for (int k = 0; k < atom.gamma[j]; ++k) v *= x[j];
    }
    return v * std::exp(-atom.width * r2);
}

inline double sum_value(const AtomSum& comp, const double* x) {
    double v = 0.0;
    for (const auto& atom : comp) v += atom_value(atom, x);
    return v;
}

/** Exact L2 norm of an atom sum in physical space: cross terms reduce to
 *  products of one-dimensional Gaussian moments. */
inline double exact_l2_norm(const AtomSum& comp, int dim) {
    double norm2 = 0.0;
    for (const auto& a : comp)
        for (const auto& b : comp) {
            double term = a.coeff * b.coeff;
            for (int j = 0; j < dim; ++j)
                term *= gauss_moment_1d(a.width + b.width,
                                        a.gamma[j] + b.gamma[j]);
            norm2 += term;
        }
    // Rounding can push a zero norm slightly negative.
    return std::sqrt(std::max(norm2, 0.0));
}

/** Radius beyond which every data component has decayed below
 *  rel_tol times its peak amplitude (scanned on the radial envelope). */
inline double support_radius(const GaussianPolyData& data,
                             double rel_tol = 1e-12) {
    double peak = 0.0;
    std::vector<const AtomSum*> comps;
    for (const auto& c : data.f0) comps.push_back(&c);
    for (const auto& c : data.f1) comps.push_back(&c);
    auto envelope = [&](double r) {
        double e = 0.0;
        for (const auto* comp : comps)
            for (const auto& atom : *comp)
                e += std::abs(atom.coeff) *
                     std::pow(r, multi_order(atom.gamma)) *
                     std::exp(-atom.width * r * r);
        return e;
    };
    for (const auto* comp : comps)
        for (const auto& atom : *comp) {
            const int d = multi_order(atom.gamma);
            const double r_peak =
                d == 0 ? 0.0 : std::sqrt(0.5 * d / atom.width);
            peak = std::max(peak, std::abs(atom.coeff) * std::pow(r_peak, d) *
                                      std::exp(-atom.width * r_peak * r_peak));
        }
    if (peak == 0.0) return 0.0;
    double r = 0.0;
    while (envelope(r) > rel_tol * peak || r == 0.0) {
        r += 0.25;
        if (r > 1e6)
            throw std::runtime_error("support radius scan did not converge");
        if (envelope(r) <= rel_tol * peak) break;
    }
    return r;
}

/** Factor converting a Fourier-side L2 norm into a physical-space one. */
inline double inverse_ft_norm_factor(int dim) {
    return std::pow(2.0 * pi, -0.5 * dim);
}

} // namespace elwave::model
