// Least-squares fitting of squared norms against the candidate growth
// shapes: constant, linear in t, and logarithmic in t.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace elwave::growth {

/** Candidate shapes for the norm itself: the fit is linear in the
 *  SQUARED series, i.e. value^2 ~ coefficient * regressor + intercept. */
enum class GrowthModel {
    constant, // value^2 ~ const
    sqrt_t,   // value^2 ~ a t + b
    sqrt_log, // value^2 ~ a log(t + 2) + b
};

inline const char* model_name(GrowthModel m) {
    switch (m) {
        case GrowthModel::constant: return "const";
        case GrowthModel::sqrt_t: return "sqrt_t";
        case GrowthModel::sqrt_log: return "sqrt_log";
    }
    return "?";
}

inline GrowthModel parse_model(const std::string& s) {
    if (s == "const" || s == "constant") return GrowthModel::constant;
    if (s == "sqrt_t") return GrowthModel::sqrt_t;
    if (s == "sqrt_log") return GrowthModel::sqrt_log;
    throw std::invalid_argument(
        "unknown growth model '" + s + "' (expected const, sqrt_t, sqrt_log)");
}

struct GrowthFit {
    GrowthModel model = GrowthModel::constant;
    double coefficient = 0.0; // slope of value^2 vs the regressor
    double intercept = 0.0;
    double r_squared = 1.0;
    double t_min = 0.0;
    double t_max = 0.0;
    std::size_t points = 0;
};

/** Fits value(t)^2 against the model's regressor by ordinary least
 *  squares. Requires at least 8 samples with strictly increasing times. */
inline GrowthFit fit_growth(const std::vector<double>& ts,
                            const std::vector<double>& values,
                            GrowthModel model) {
    if (ts.size() != values.size())
        throw std::invalid_argument("time and value lengths differ");
    if (ts.size() < 8)
        throw std::invalid_argument("growth fit needs at least 8 samples");
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (!(ts[i] > ts[i - 1]))
            throw std::invalid_argument(
                "times must be strictly increasing");
    const std::size_t n = ts.size();
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = values[i] * values[i];
        switch (model) {
            case GrowthModel::constant: x[i] = 0.0; break;
            case GrowthModel::sqrt_t: x[i] = ts[i]; break;
            case GrowthModel::sqrt_log: x[i] = std::log(ts[i] + 2.0); break;
        }
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    GrowthFit fit;
    fit.model = model;
    fit.t_min = ts.front();
    fit.t_max = ts.back();
    fit.points = n;
    if (model == GrowthModel::constant) {
        fit.coefficient = my;
        fit.intercept = 0.0;
        fit.r_squared = 1.0; // the model has no free shape to miss
        return fit;
    }
    if (sxx <= 0.0)
        throw std::invalid_argument(
            "regressor is degenerate on this time grid");
    fit.coefficient = sxy / sxx;
    fit.intercept = my - fit.coefficient * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - (fit.coefficient * x[i] + fit.intercept);
        ss_res += e * e;
    }
    fit.r_squared = (syy > 0.0) ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

/** Logarithmically spaced time grid from t0 to t1 (inclusive) with the
 *  given number of points per decade. Deterministic and increasing. */
inline std::vector<double> log_spaced_grid(double t0, double t1,
                                           int points_per_decade) {
    if (!(t0 > 0.0) || !(t1 > t0))
        throw std::invalid_argument("need 0 < t0 < t1");
    if (points_per_decade < 1)
        throw std::invalid_argument("points per decade < 1");
    const double decades = std::log10(t1 / t0);
    const int count =
        std::max(2, static_cast<int>(std::lround(decades * points_per_decade)) + 1);
    std::vector<double> ts(count);
    for (int i = 0; i < count; ++i)
        ts[i] = t0 * std::pow(t1 / t0, static_cast<double>(i) / (count - 1));
    ts.back() = t1;
    return ts;
}

} // namespace elwave::growth
