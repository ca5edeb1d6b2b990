// Integrals over the unit sphere: closed-form monomial and moment-vector
// formulas, deterministic product quadrature rules for dimensions 1 to 4,
// and a Monte Carlo cross-check oracle.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "model.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "rng.hpp"

namespace elwave::spherical {

using model::MultiIndex;

/** Surface measure of the unit sphere S^(n-1); equals 2 for n = 1. */
inline double surface_area(int n) {
    if (n < 1) throw std::invalid_argument("dimension < 1");
    return 2.0 * std::pow(model::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

/** integral over S^(n-1) of omega^beta. Zero when any exponent is odd;
 *  otherwise 2 * prod Gamma((beta_i+1)/2) / Gamma((n+|beta|)/2). */
inline double sphere_monomial_integral(int n, const MultiIndex& beta) {
    if (n < 1) throw std::invalid_argument("dimension < 1");
    if (static_cast<int>(beta.size()) != n)
        throw std::invalid_argument("exponent length does not match dimension");
    int total = 0;
    for (int b : beta) {
        if (b < 0) throw std::invalid_argument("exponent < 0");
        if (b % 2 != 0) return 0.0;
        total += b;
    }
    double num = 2.0;
    for (int b : beta) num *= std::tgamma(0.5 * (b + 1));
    return num / std::tgamma(0.5 * (n + total));
}

/** The two moment-vector integrals that appear in the angular reduction:
 *  linear    = integral omega_k (omega . M) d omega = |S| M_k / n,
 *  quadratic = integral omega_k^2 (omega . M)^2 d omega
 *            = |S| (|M|^2 + 2 M_k^2) / (n (n + 2)). */
struct VectorIntegrals {
    double linear = 0.0;
    double quadratic = 0.0;
};

inline VectorIntegrals sphere_vector_integrals(int n,
                                               const std::vector<double>& M,
                                               int k) {
    if (static_cast<int>(M.size()) != n)
        throw std::invalid_argument("vector length does not match dimension");
    if (k < 0 || k >= n)
        throw std::invalid_argument("component index out of range");
    const double s = surface_area(n);
    double m2 = 0.0;
    for (double v : M) m2 += v * v;
    VectorIntegrals out;
    out.linear = s * M[k] / n;
    out.quadratic = s * (m2 + 2.0 * M[k] * M[k]) / (n * (n + 2.0));
    return out;
}

/** The three quadratic first-moment integrals for component N:
 *  K1 = integral (omega . P_N)^2,
 *  K2 = sum_k integral omega_N omega_k (omega . P_N)(omega . P_k),
 *  K3 = integral omega_N^2 (sum_k omega_k (omega . P_k))^2,
 *  where P_k is row k of the first-moment matrix. */
struct KIntegrals {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
};

/** Closed forms via fourth- and sixth-order sphere moments (any n >= 1). */
inline KIntegrals k_integrals(int n, int N,
                              const std::vector<std::vector<double>>& P) {
    if (n < 1) throw std::invalid_argument("dimension < 1");
    if (N < 0 || N >= n)
        throw std::invalid_argument("component index out of range");
    if (static_cast<int>(P.size()) != n)
        throw std::invalid_argument("moment matrix is not n x n");
    for (const auto& row : P)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("moment matrix is not n x n");
    const double s = surface_area(n);
    KIntegrals out;

    double row_sq = 0.0;
    for (int l = 0; l < n; ++l) row_sq += P[N][l] * P[N][l];
    out.k1 = s / n * row_sq;

    double k2_mixed = 0.0;
    for (int k = 0; k < n; ++k) {
        if (k == N) continue;
        k2_mixed += P[N][N] * P[k][k] + P[N][k] * P[k][N] + P[N][k] * P[N][k];
    }
    out.k2 = s / (n * (n + 2.0)) * (k2_mixed + 3.0 * P[N][N] * P[N][N]);

    double diag_off = 0.0, sq_off = 0.0, cross_off = 0.0, pair_sym = 0.0;
    for (int k = 0; k < n; ++k) {
        if (k == N) continue;
        diag_off += P[k][k];
        sq_off += 3.0 * P[N][k] * P[N][k] + 3.0 * P[k][N] * P[k][N] +
                  2.0 * P[k][k] * P[k][k];
        cross_off += P[N][N] * P[k][k] + P[N][k] * P[k][N];
        for (int l = k + 1; l < n; ++l)
            if (l != N)
                pair_sym += (P[k][l] + P[l][k]) * (P[k][l] + P[l][k]);
    }
    out.k3 = s / (n * (n + 2.0) * (n + 4.0)) *
             (15.0 * P[N][N] * P[N][N] + sq_off + diag_off * diag_off +
              6.0 * cross_off + pair_sym);
    return out;
}

/** Deterministic quadrature rule on S^(n-1), exact for polynomials of the
 *  requested degree. Supported dimensions: 1 to 4. */
struct SphereRule {
    int dim = 0;
    int degree = 0;
    std::vector<double> nodes; // flat, dim-strided
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
    const double* node(std::size_t i) const { return nodes.data() + i * dim; }
};

inline SphereRule make_sphere_rule(int n, int degree) {
    if (degree < 0) throw std::invalid_argument("degree < 0");
    SphereRule rule;
    rule.dim = n;
    rule.degree = degree;
    if (n == 1) {
        rule.nodes = {1.0, -1.0};
        rule.weights = {1.0, 1.0};
        return rule;
    }
    if (n == 2) {
        int K = degree + 4;
        if (K % 2 != 0) ++K;
        for (int j = 0; j < K; ++j) {
            const double th = 2.0 * model::pi * j / K;
            rule.nodes.push_back(std::cos(th));
            rule.nodes.push_back(std::sin(th));
            rule.weights.push_back(2.0 * model::pi / K);
        }
        return rule;
    }
    if (n == 3) {
        const int m = degree / 2 + 2; // Gauss-Legendre in cos(theta)
        int K = degree + 4;           // trapezoid in the azimuth
        if (K % 2 != 0) ++K;
        const auto gl = quadrature::gauss_legendre(m);
        for (int i = 0; i < m; ++i) {
            const double c = gl.nodes[i];
            const double rho = std::sqrt(std::max(0.0, 1.0 - c * c));
            for (int j = 0; j < K; ++j) {
                const double ph = 2.0 * model::pi * j / K;
                rule.nodes.push_back(rho * std::cos(ph));
                rule.nodes.push_back(rho * std::sin(ph));
                rule.nodes.push_back(c);
                rule.weights.push_back(gl.weights[i] * 2.0 * model::pi / K);
            }
        }
        return rule;
    }
    if (n == 4) {
        // Slice S^3 as (sqrt(1-c^2) sigma, c) with sigma on S^2; the weight
        // sqrt(1-c^2) dc is handled by Gauss-Chebyshev of the second kind.
        const int m = degree / 2 + 2;
        const SphereRule inner = make_sphere_rule(3, degree);
        for (int i = 1; i <= m; ++i) {
            const double th = model::pi * i / (m + 1);
            const double c = std::cos(th);
            const double w =
                model::pi / (m + 1) * std::sin(th) * std::sin(th);
            const double rho = std::sin(th);
            for (std::size_t q = 0; q < inner.size(); ++q) {
                const double* sg = inner.node(q);
                rule.nodes.push_back(rho * sg[0]);
                rule.nodes.push_back(rho * sg[1]);
                rule.nodes.push_back(rho * sg[2]);
                rule.nodes.push_back(c);
                rule.weights.push_back(w * inner.weights[q]);
            }
        }
        return rule;
    }
    throw std::invalid_argument(
        "sphere quadrature supports dimensions 1 to 4, got " +
        std::to_string(n));
}

template <typename Fn>
double integrate_sphere(const SphereRule& rule, Fn&& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
        s += rule.weights[i] * f(rule.node(i));
    return s;
}

/** Definition-level evaluation of the K integrals (for cross-checks). */
inline KIntegrals
k_integrals_quadrature(int n, int N,
                       const std::vector<std::vector<double>>& P,
                       const SphereRule& rule) {
    KIntegrals out;
    auto dot_row = [&](int k, const double* w) {
        double d = 0.0;
        for (int l = 0; l < n; ++l) d += w[l] * P[k][l];
        return d;
    };
    out.k1 = integrate_sphere(rule, [&](const double* w) {
        const double d = dot_row(N, w);
        return d * d;
    });
    out.k2 = integrate_sphere(rule, [&](const double* w) {
        double s = 0.0;
        for (int k = 0; k < n; ++k)
            s += w[N] * w[k] * dot_row(N, w) * dot_row(k, w);
        return s;
    });
    out.k3 = integrate_sphere(rule, [&](const double* w) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += w[k] * dot_row(k, w);
        return w[N] * w[N] * s * s;
    });
    return out;
}

/** Monte Carlo estimate of integral over S^(n-1) of f, with standard error. */
struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

template <typename Fn>
McEstimate sphere_mc_oracle(int n, Fn&& f, std::uint64_t samples,
                            std::uint64_t seed, unsigned threads = 1) {
    if (n < 1) throw std::invalid_argument("dimension < 1");
    if (samples < 1000)
        throw std::invalid_argument("Monte Carlo needs at least 1000 samples");
    const rng::SphereSampler sampler(n, seed);
    constexpr std::uint64_t chunk = 16384;
    const std::uint64_t nchunks = (samples + chunk - 1) / chunk;
    std::vector<double> sums(nchunks, 0.0), sqsums(nchunks, 0.0);
    parallel_for(nchunks, threads, [&](std::size_t ci) {
        const std::uint64_t begin = ci * chunk;
        const std::uint64_t end = std::min(begin + chunk, samples);
        double s = 0.0, s2 = 0.0;
        double omega[8];
        for (std::uint64_t i = begin; i < end; ++i) {
            sampler.sample(i, omega);
            const double v = f(static_cast<const double*>(omega));
            s += v;
            s2 += v * v;
        }
        sums[ci] = s;
        sqsums[ci] = s2;
    });
    double total = 0.0, total_sq = 0.0;
    for (std::uint64_t ci = 0; ci < nchunks; ++ci) {
        total += sums[ci];
        total_sq += sqsums[ci];
    }
    const double mean = total / samples;
    const double var =
        samples > 1
            ? std::max(0.0, (total_sq - samples * mean * mean) / (samples - 1.0))
            : 0.0;
    McEstimate est;
    est.value = surface_area(n) * mean;
    est.std_error = surface_area(n) * std::sqrt(var / samples);
    est.samples = samples;
    return est;
}

} // namespace elwave::spherical
