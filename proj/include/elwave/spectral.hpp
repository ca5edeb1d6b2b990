// Exact Fourier-side evaluation of the elastic wave solution for
// Gaussian-polynomial data, its moment-based decomposition, and the L2
// norms of every piece.
//
// In Fourier variables the solution component N splits, for each data
// family (cosine terms from the displacement data, sine terms from the
// velocity data), into
//   T(r) f^_N(xi) + Td(r) omega_N (omega . f^(xi)),   xi = r omega,
// where (T, Td) = (cos(t a2 r), cos(t a1 r) - cos(t a2 r)) for the cosine
// family and the same with sin(t a r)/(a r) for the sine family.
// Replacing f^ by its zeroth Taylor coefficient m gives the leading term,
// by the first coefficient i xi . p the next one; the differences are the
// remainders studied by the large-time experiments.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "kernels.hpp"
#include "model.hpp"
#include "moments.hpp"
#include "quadrature.hpp"
#include "spherical.hpp"

namespace elwave::spectral {

using model::AtomSum;
using model::GaussianPolyData;
using model::LameParams;

/** Initial data bundled with the material and all its moments. */
struct Solution {
    GaussianPolyData data;
    LameParams lame;
    moments::MomentSet mom;
    double max_width = 0.0; // slowest-decaying Gaussian in the data
};

inline Solution make_solution(const GaussianPolyData& data,
                              const LameParams& lame) {
    model::validate_data(data);
    Solution sol;
    sol.data = data;
    sol.lame = lame;
    sol.mom = moments::assemble_moments(data);
    for (const auto* family : {&data.f0, &data.f1})
        for (const auto& comp : *family)
            for (const auto& atom : comp)
                sol.max_width = std::max(sol.max_width, atom.width);
    if (sol.max_width == 0.0) sol.max_width = 1.0; // empty data
    return sol;
}

/** Which piece of the moment decomposition to evaluate. */
enum class TermKind {
    full,             // the solution itself
    zeroth,           // data transform replaced by its zeroth moment
    zeroth_remainder, // full minus zeroth
    first,            // data transform replaced by the first Taylor term
    first_remainder,  // full minus zeroth minus first
};

/** Which data family: the cosine terms (displacement data), the sine
 *  terms (velocity data), or their sum. */
enum class TimePart { cosine, sine, combined };

inline const char* term_name(TermKind k) {
    switch (k) {
        case TermKind::full: return "full";
        case TermKind::zeroth: return "zeroth";
        case TermKind::zeroth_remainder: return "zeroth_remainder";
        case TermKind::first: return "first";
        case TermKind::first_remainder: return "first_remainder";
    }
    return "?";
}

inline const char* part_name(TimePart p) {
    switch (p) {
        case TimePart::cosine: return "cosine";
        case TimePart::sine: return "sine";
        case TimePart::combined: return "combined";
    }
    return "?";
}

/** Trig factors at radius r and time t: the second-speed value and the
 *  difference (first minus second), the latter in a cancellation-free
 *  product form. */
struct TrigValues {
    double c2 = 0.0; // cos(t a2 r)
    double dc = 0.0; // cos(t a1 r) - cos(t a2 r)
    double s2 = 0.0; // sin(t a2 r) / (a2 r)
    double ds = 0.0; // sin(t a1 r)/(a1 r) - sin(t a2 r)/(a2 r)
};

inline TrigValues trig_values(const LameParams& lp, double t, double r) {
    TrigValues tv;
    const double x1 = t * lp.alpha1 * r, x2 = t * lp.alpha2 * r;
    tv.c2 = std::cos(x2);
    tv.dc = -2.0 * std::sin(0.5 * (x1 + x2)) * std::sin(0.5 * (x1 - x2));
    tv.s2 = t * quadrature::sincx(x2);
    tv.ds = t * (quadrature::sincx(x1) - quadrature::sincx(x2));
    return tv;
}

namespace detail {

// One atom with its angular-independent radial factor hoisted out:
// fourier(atom)(r omega) = A(r) * prod over listed dims of poly(r omega_d).
struct PreparedAtom {
    int comp = 0;
    double width = 0.0;
    double coeff_full = 0.0; // coeff * (pi / width)^(n/2)
    // dims with nonzero exponent, as (dim, power) pairs
    std::array<std::pair<int, int>, 2> poly{};
    int poly_count = 0;
    double radial = 0.0; // cached coeff_full * exp(-r^2 / (4 width))
};

inline std::complex<double> atom_poly_factor(const PreparedAtom& a, double r,
                                             const double* w) {
    std::complex<double> v(a.radial, 0.0);
    for (int q = 0; q < a.poly_count; ++q) {
        const double x = r * w[a.poly[q].first];
        if (a.poly[q].second == 1)
            v *= std::complex<double>(0.0, -x / (2.0 * a.width));
        else
            v *= 0.5 / a.width - x * x / (4.0 * a.width * a.width);
    }
    return v;
}

} // namespace detail

/** Evaluates the (undamped) value of one decomposition term at xi = r omega.
 *  prepare(t, r) caches the radial factors; eval(omega) is then cheap, so
 *  norm quadrature loops radius outside and the sphere inside. */
class TermAmplitude {
  public:
    TermAmplitude(const Solution& sol, TermKind kind, TimePart part, int N)
        : sol_(&sol), kind_(kind), part_(part), N_(N), dim_(sol.data.dim) {
        if (N < 0 || N >= dim_)
            throw std::invalid_argument("component index out of range");
        for (int j = 0; j < 2; ++j) {
            const auto& family = (j == 0) ? sol.data.f0 : sol.data.f1;
            for (int c = 0; c < dim_; ++c)
                for (const auto& atom : family[c]) {
                    detail::PreparedAtom pa;
                    pa.comp = c;
                    pa.width = atom.width;
                    pa.coeff_full =
                        atom.coeff *
                        std::pow(model::pi / atom.width, 0.5 * dim_);
                    for (int d = 0; d < dim_; ++d)
                        if (atom.gamma[d] > 0)
                            pa.poly[pa.poly_count++] = {d, atom.gamma[d]};
                    atoms_[j].push_back(pa);
                }
        }
    }

    void prepare(double t, double r) {
        r_ = r;
        tv_ = trig_values(sol_->lame, t, r);
        for (auto& fam : atoms_)
            for (auto& a : fam)
                a.radial =
                    a.coeff_full * std::exp(-r * r / (4.0 * a.width));
    }

    std::complex<double> eval(const double* w) const {
        std::complex<double> value(0.0, 0.0);
        const int j_begin = (part_ == TimePart::sine) ? 1 : 0;
        const int j_end = (part_ == TimePart::cosine) ? 1 : 2;
        for (int j = j_begin; j < j_end; ++j) {
            const double T = (j == 0) ? tv_.c2 : tv_.s2;
            const double Td = (j == 0) ? tv_.dc : tv_.ds;
            if (kind_ == TermKind::full ||
                kind_ == TermKind::zeroth_remainder ||
                kind_ == TermKind::first_remainder) {
                std::array<std::complex<double>, 4> fhat{};
                for (const auto& a : atoms_[j])
                    fhat[a.comp] += detail::atom_poly_factor(a, r_, w);
                std::complex<double> dot(0.0, 0.0);
                for (int c = 0; c < dim_; ++c) dot += w[c] * fhat[c];
                value += T * fhat[N_] + Td * w[N_] * dot;
            }
            if (kind_ == TermKind::zeroth ||
                kind_ == TermKind::zeroth_remainder ||
                kind_ == TermKind::first_remainder) {
                const auto& m = sol_->mom.m[j];
                double dot = 0.0;
                for (int c = 0; c < dim_; ++c) dot += w[c] * m[c];
                const double lead = T * m[N_] + Td * w[N_] * dot;
                value += (kind_ == TermKind::zeroth) ? lead : -lead;
            }
            if (kind_ == TermKind::first ||
                kind_ == TermKind::first_remainder) {
                const auto& p = sol_->mom.p[j];
                auto row_dot = [&](int k) {
                    double d = 0.0;
                    for (int l = 0; l < dim_; ++l) d += w[l] * p[k][l];
                    return d;
                };
                double proj = 0.0;
                for (int k = 0; k < dim_; ++k) proj += w[k] * row_dot(k);
                const double amp = T * row_dot(N_) + Td * w[N_] * proj;
                const std::complex<double> lead(0.0, r_ * amp);
                value += (kind_ == TermKind::first) ? lead : -lead;
            }
        }
        return value;
    }

  private:
    const Solution* sol_;
    TermKind kind_;
    TimePart part_;
    int N_;
    int dim_;
    double r_ = 0.0;
    TrigValues tv_;
    std::array<std::vector<detail::PreparedAtom>, 2> atoms_;
};

/** Value of one decomposition term at a single frequency xi != 0. */
inline std::complex<double> term_value(const Solution& sol, TermKind kind,
                                       TimePart part, double t,
                                       const std::vector<double>& xi, int N) {
    if (static_cast<int>(xi.size()) != sol.data.dim)
        throw std::invalid_argument("frequency length does not match data");
    double r2 = 0.0;
    for (double x : xi) r2 += x * x;
    const double r = std::sqrt(r2);
    if (r == 0.0)
        throw std::invalid_argument(
            "frequency xi = 0: the solution symbol is undefined there");
    std::array<double, 4> w{};
    for (std::size_t d = 0; d < xi.size(); ++d) w[d] = xi[d] / r;
    TermAmplitude amp(sol, kind, part, N);
    amp.prepare(t, r);
    return amp.eval(w.data());
}

/** Fourier transform of solution component N at time t and frequency xi. */
inline std::complex<double> uhat_component(const Solution& sol, double t,
                                           const std::vector<double>& xi,
                                           int N) {
    return term_value(sol, TermKind::full, TimePart::combined, t, xi, N);
}

namespace detail {

inline void check_term_inputs(const Solution& sol, TermKind kind, int N,
                              double beta, double t) {
    if (N < 0 || N >= sol.data.dim)
        throw std::invalid_argument("component index out of range");
    if (t < 0.0) throw std::invalid_argument("time < 0");
    if (kind == TermKind::full) {
        if (beta < 0.0) throw std::invalid_argument("damping beta < 0");
    } else if (!(beta > 0.0)) {
        throw std::invalid_argument(
            "damping beta <= 0: decomposition terms are measured with a "
            "Gaussian damping factor");
    }
}

/** Tail tolerance deflated by the worst-case size of the trig factors
 *  (the sine family carries a factor t) so the truncation error stays far
 *  below every tolerance used downstream. */
inline quadrature::QuadratureSpec
tail_adjusted(const quadrature::QuadratureSpec& spec, double t,
              const LameParams& lame) {
    quadrature::QuadratureSpec s = spec;
    const double f = (1.0 + t) * (1.0 + t) *
                     (1.0 + 1.0 / (lame.alpha2 * lame.alpha2)) * 100.0;
    s.tail_tolerance = spec.tail_tolerance / f;
    return s;
}

/** Time averages of the squared trig factors: as t -> infinity,
 *  <T^2> -> av_tt / r^(0 or 2), etc. Used by the plateau formulas. */
struct TrigAverages {
    double tt = 0.0;   // <T^2>
    double ttd = 0.0;  // <T Td>
    double tdtd = 0.0; // <Td^2>
};

inline TrigAverages cosine_averages(const LameParams& lp) {
    // <cos^2> = 1/2; <cos(a1 .) cos(a2 .)> = 0 unless the speeds coincide.
    TrigAverages av;
    av.tt = 0.5;
    if (model::is_scalar_reduction(lp)) {
        av.ttd = 0.0;
        av.tdtd = 0.0;
    } else {
        av.ttd = -0.5;
        av.tdtd = 1.0;
    }
    return av;
}

inline TrigAverages sine_averages(const LameParams& lp) {
    // Multiply by 1/r^2 when applying: <s_i s_j> = delta_ij / (2 a_i^2 r^2).
    TrigAverages av;
    const double a1 = lp.alpha1, a2 = lp.alpha2;
    av.tt = 0.5 / (a2 * a2);
    if (model::is_scalar_reduction(lp)) {
        av.ttd = 0.0;
        av.tdtd = 0.0;
    } else {
        av.ttd = -0.5 / (a2 * a2);
        av.tdtd = 0.5 / (a1 * a1) + 0.5 / (a2 * a2);
    }
    return av;
}

} // namespace detail

/** L2 norm (Fourier side) of exp(-beta |xi|^2) times the requested
 *  decomposition term of component N at time t. The angular integral is
 *  a polynomial of degree <= 8 in omega for this data family, so the
 *  default sphere rule integrates it exactly. */
inline double decomposition_norm(const Solution& sol, TermKind kind,
                                 TimePart part, int N, double beta, double t,
                                 const quadrature::QuadratureSpec& qspec = {}) {
    detail::check_term_inputs(sol, kind, N, beta, t);
    const int n = sol.data.dim;
    const double data_rate = 1.0 / (2.0 * sol.max_width);
    const double rate =
        2.0 * beta + ((kind == TermKind::full) ? data_rate : 0.0);
    const double freq = 2.0 * t * sol.lame.alpha1;
    const auto rq = quadrature::make_radial_quadrature(
        rate, n + 3.0, freq, detail::tail_adjusted(qspec, t, sol.lame));
    const auto rule = spherical::make_sphere_rule(
        n, std::max(qspec.angular_degree, 8));
    TermAmplitude amp(sol, kind, part, N);
    double total = 0.0;
    for (std::size_t i = 0; i < rq.nodes.size(); ++i) {
        const double r = rq.nodes[i];
        amp.prepare(t, r);
        double ang = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q)
            ang += rule.weights[q] * std::norm(amp.eval(rule.node(q)));
        total += rq.weights[i] * std::exp(-2.0 * beta * r * r) *
                 std::pow(r, n - 1.0) * ang;
    }
    return std::sqrt(std::max(0.0, total));
}

/** Physical-space L2 norm of solution component N at time t. */
inline double component_l2_norm(const Solution& sol, double t, int N,
                                const quadrature::QuadratureSpec& qspec = {}) {
    return model::inverse_ft_norm_factor(sol.data.dim) *
           decomposition_norm(sol, TermKind::full, TimePart::combined, N, 0.0,
                              t, qspec);
}

/** Large-time limit of the damped zeroth-term norm, in closed form.
 *  For the sine family this limit exists only in dimension >= 3 (below
 *  that the norm grows; see the growth experiments). */
inline double zeroth_plateau(const Solution& sol, TimePart part, int N,
                             double beta) {
    if (part == TimePart::combined)
        throw std::invalid_argument(
            "plateau formulas are per data family (cosine or sine)");
    if (N < 0 || N >= sol.data.dim)
        throw std::invalid_argument("component index out of range");
    if (!(beta > 0.0)) throw std::invalid_argument("damping beta <= 0");
    const int n = sol.data.dim;
    const int j = (part == TimePart::sine) ? 1 : 0;
    const auto& m = sol.mom.m[j];
    double m2 = 0.0;
    for (double v : m) m2 += v * v;
    const double s = spherical::surface_area(n);
    const double quad = s / (n * (n + 2.0)) * (m2 + 2.0 * m[N] * m[N]);
    const double lin = s / n * m[N] * m[N];
    const double pure = s * m[N] * m[N];
    detail::TrigAverages av;
    double radial_power = 0.0;
    if (part == TimePart::cosine) {
        av = detail::cosine_averages(sol.lame);
        radial_power = n - 1.0;
    } else {
        if (n <= 2 && !sol.mom.zeroth_vanish(1))
            throw std::domain_error(
                "large-time limit does not exist: the sine-family zeroth "
                "term grows without bound when dim <= 2");
        av = detail::sine_averages(sol.lame);
        radial_power = n - 3.0; // the 1/r^2 of the averages
    }
    const double norm2 =
        quadrature::gaussian_radial_moment(2.0 * beta, radial_power) *
        (av.tt * pure + 2.0 * av.ttd * lin + av.tdtd * quad);
    return std::sqrt(std::max(0.0, norm2));
}

/** Large-time limit of the damped first-term norm, in closed form via the
 *  three quadratic first-moment sphere integrals. */
inline double first_plateau(const Solution& sol, TimePart part, int N,
                            double beta) {
    if (part == TimePart::combined)
        throw std::invalid_argument(
            "plateau formulas are per data family (cosine or sine)");
    if (N < 0 || N >= sol.data.dim)
        throw std::invalid_argument("component index out of range");
    if (!(beta > 0.0)) throw std::invalid_argument("damping beta <= 0");
    const int n = sol.data.dim;
    const int j = (part == TimePart::sine) ? 1 : 0;
    const auto K = spherical::k_integrals(n, N, sol.mom.p[j]);
    detail::TrigAverages av;
    double radial_power = 0.0;
    if (part == TimePart::cosine) {
        av = detail::cosine_averages(sol.lame);
        radial_power = n + 1.0; // the r^2 of the first-order symbol
    } else {
        av = detail::sine_averages(sol.lame);
        radial_power = n - 1.0; // r^2 symbol, 1/r^2 averages
    }
    const double norm2 =
        quadrature::gaussian_radial_moment(2.0 * beta, radial_power) *
        (av.tt * K.k1 + 2.0 * av.ttd * K.k2 + av.tdtd * K.k3);
    return std::sqrt(std::max(0.0, norm2));
}

/** Damped Fourier-side cross term between the two zeroth-term families of
 *  component N,
 *    integral of exp(-2 beta |xi|^2) Uhat_{N,cos} Uhat_{N,sin} d(xi).
 *  It oscillates and averages to zero as t grows, which is why the
 *  per-family plateau formulas add up to the combined limit. */
inline double zeroth_cross_term(const Solution& sol, int N, double beta,
                                double t,
                                const quadrature::QuadratureSpec& qspec = {}) {
    if (N < 0 || N >= sol.data.dim)
        throw std::invalid_argument("component index out of range");
    if (!(beta > 0.0)) throw std::invalid_argument("damping beta <= 0");
    if (t < 0.0) throw std::invalid_argument("time < 0");
    const int n = sol.data.dim;
    const auto& m0 = sol.mom.m[0];
    const auto& m1 = sol.mom.m[1];
    double m0m1 = 0.0;
    for (int k = 0; k < n; ++k) m0m1 += m0[k] * m1[k];
    const double s = spherical::surface_area(n);
    const double pure = s * m0[N] * m1[N];
    const double lin = s / n * m0[N] * m1[N];
    const double quad = s / (n * (n + 2.0)) * (m0m1 + 2.0 * m0[N] * m1[N]);
    const double freq = 2.0 * t * sol.lame.alpha1;
    const auto rq = quadrature::make_radial_quadrature(
        2.0 * beta, n + 1.0, freq, detail::tail_adjusted(qspec, t, sol.lame));
    double total = 0.0;
    for (std::size_t i = 0; i < rq.nodes.size(); ++i) {
        const double r = rq.nodes[i];
        const auto tv = trig_values(sol.lame, t, r);
        const double ang = tv.c2 * tv.s2 * pure +
                           (tv.c2 * tv.ds + tv.dc * tv.s2) * lin +
                           tv.dc * tv.ds * quad;
        total += rq.weights[i] * std::exp(-2.0 * beta * r * r) *
                 std::pow(r, n - 1.0) * ang;
    }
    return total;
}

/** Physical-space L2 norm of the scalar wave solution
 *  cos(t alpha |D|) w0 + sin(t alpha |D|)/(alpha |D|) w1
 *  for Gaussian-polynomial data in any dimension >= 1. */
inline double wave_scalar_norm(const AtomSum& w0, const AtomSum& w1,
                               double alpha, int dim, double t,
                               const quadrature::QuadratureSpec& qspec = {}) {
    if (dim < 1) throw std::invalid_argument("dimension < 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("speed alpha <= 0");
    if (t < 0.0) throw std::invalid_argument("time < 0");
    GaussianPolyData data;
    data.dim = dim;
    data.f0.assign(1, w0);
    data.f1.assign(1, w1);
    // Pad to the vector shape expected by the validator.
    while (static_cast<int>(data.f0.size()) < dim) data.f0.emplace_back();
    while (static_cast<int>(data.f1.size()) < dim) data.f1.emplace_back();
    model::validate_data(data);

    double max_width = 1.0;
    for (const auto* fam : {&w0, &w1})
        for (const auto& atom : *fam)
            max_width = std::max(max_width, atom.width);
    const double rate = 1.0 / (2.0 * max_width);
    LameParams fake;
    fake.alpha1 = alpha;
    fake.alpha2 = alpha;
    const auto rq = quadrature::make_radial_quadrature(
        rate, dim + 3.0, 2.0 * t * alpha,
        detail::tail_adjusted(qspec, t, fake));
    const auto rule = spherical::make_sphere_rule(
        dim, std::max(qspec.angular_degree, 8));

    double total = 0.0;
    std::vector<double> xi(dim, 0.0);
    for (std::size_t i = 0; i < rq.nodes.size(); ++i) {
        const double r = rq.nodes[i];
        const double ct = std::cos(t * alpha * r);
        const double st = t * quadrature::sincx(t * alpha * r);
        double ang = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double* w = rule.node(q);
            for (int d = 0; d < dim; ++d) xi[d] = r * w[d];
            const std::complex<double> v =
                ct * model::sum_fourier(w0, xi) +
                st * model::sum_fourier(w1, xi);
            ang += rule.weights[q] * std::norm(v);
        }
        total += rq.weights[i] * std::pow(r, dim - 1.0) * ang;
    }
    return model::inverse_ft_norm_factor(dim) *
           std::sqrt(std::max(0.0, total));
}

} // namespace elwave::spectral
