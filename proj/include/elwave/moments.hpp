// Zeroth and first moments of the initial data. These are the Taylor
// coefficients of the data transform at frequency zero:
//   f^(xi) = m + i xi . p + O(|xi|^2),  m = integral f,  p_l = -integral x_l f.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "model.hpp"

namespace elwave::moments {

using model::AtomSum;
using model::GaussianPolyAtom;
using model::GaussianPolyData;
using model::MultiIndex;

/** Moment of one atom for |beta| <= 1: beta = 0 gives integral f,
 *  beta = e_l gives -integral x_l f. Higher orders are rejected. */
inline double atom_moment(const GaussianPolyAtom& atom,
                          const MultiIndex& beta) {
    if (beta.size() != atom.gamma.size())
        throw std::invalid_argument("moment index length does not match atom");
    int order = 0;
    for (int b : beta) {
        if (b < 0) throw std::invalid_argument("moment index < 0");
        order += b;
    }
    if (order > 1)
        throw std::invalid_argument("moment order > 1 is not supported");
    double value = (order == 1 ? -atom.coeff : atom.coeff);
    for (std::size_t j = 0; j < beta.size(); ++j)
        value *= model::gauss_moment_1d(atom.width, atom.gamma[j] + beta[j]);
    return value;
}

inline double sum_moment(const AtomSum& comp, const MultiIndex& beta) {
    double v = 0.0;
    for (const auto& atom : comp) v += atom_moment(atom, beta);
    return v;
}

/** All moments of a data set plus the aggregate constants used by the
 *  large-time bounds. Index j = 0 refers to the displacement data f0 and
 *  j = 1 to the velocity data f1; k and l are vector components. */
struct MomentSet {
    int dim = 0;
    // m[j][k] = integral f_{jk}
    std::array<std::vector<double>, 2> m;
    // p[j][k][l] = -integral x_l f_{jk}
    std::array<std::vector<std::vector<double>>, 2> p;
    // M_abs[j] = sum_k |m_{jk}|
    std::array<double, 2> M_abs{0.0, 0.0};
    // P_abs[j][k] = sum_l |p_{jk,l}|
    std::array<std::vector<double>, 2> P_abs;
    // PP_abs[j][N]: aggregate first-moment size entering the remainder
    // bound for component N (row N plus the couplings that survive the
    // angular integration).
    std::array<std::vector<double>, 2> PP_abs;

    /** Euclidean length of the moment vector (m_{j1}, ..., m_{jn}). */
    double m_euclid(int j) const {
        double s = 0.0;
        for (double v : m[j]) s += v * v;
        return std::sqrt(s);
    }

    bool zeroth_vanish(int j) const {
        for (double v : m[j])
            if (v != 0.0) return false;
        return true;
    }

    bool first_vanish(int j) const {
        for (const auto& row : p[j])
            for (double v : row)
                if (v != 0.0) return false;
        return true;
    }
};

inline MomentSet assemble_moments(const GaussianPolyData& data) {
    model::validate_data(data);
    const int n = data.dim;
    MomentSet ms;
    ms.dim = n;
    for (int j = 0; j < 2; ++j) {
        const auto& f = (j == 0) ? data.f0 : data.f1;
        ms.m[j].assign(n, 0.0);
        ms.p[j].assign(n, std::vector<double>(n, 0.0));
        MultiIndex beta(n, 0);
        for (int k = 0; k < n; ++k) {
            ms.m[j][k] = sum_moment(f[k], beta);
            for (int l = 0; l < n; ++l) {
                beta[l] = 1;
                ms.p[j][k][l] = sum_moment(f[k], beta);
                beta[l] = 0;
            }
        }
        ms.M_abs[j] = 0.0;
        for (int k = 0; k < n; ++k) ms.M_abs[j] += std::abs(ms.m[j][k]);
        ms.P_abs[j].assign(n, 0.0);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                ms.P_abs[j][k] += std::abs(ms.p[j][k][l]);
        ms.PP_abs[j].assign(n, 0.0);
        for (int N = 0; N < n; ++N) {
            double agg = ms.P_abs[j][N];
            for (int k = 0; k < n; ++k) agg += std::abs(ms.p[j][k][N]);
            for (int k = 0; k < n; ++k) agg += std::abs(ms.p[j][k][k]);
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    if (k != N && l != N)
                        agg += std::abs(ms.p[j][k][l] + ms.p[j][l][k]);
            ms.PP_abs[j][N] = agg;
        }
    }
    return ms;
}

} // namespace elwave::moments
