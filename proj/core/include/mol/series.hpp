#pragma once

#include <functional>
#include <vector>

namespace mol {

/// Separation-of-variables solution on (0,a) x (0,b) with zero data except a
/// Dirichlet profile f at y=b:
///
///   V(x,y) = sum_k alpha_k * sinh(k pi y / a)/sinh(k pi b / a) * sin(k pi x / a),
///
/// where alpha_k are the Fourier sine coefficients of f on (0,a).
struct SeriesSolution {
    double a = 1.0;
    double b = 1.0;
    std::vector<double> alphas;

    int k_max() const { return static_cast<int>(alphas.size()); }
};

/// alpha_k = (2/a) * integral_0^a f(x) sin(k pi x / a) dx for k = 1..k_max,
/// by composite Simpson with panel doubling until two successive estimates
/// agree to quad_tol*(1+|value|). Throws numeric_error past 2^20 panels.
std::vector<double> fourier_coefficients(const std::function<double(double)>& f, double a,
                                         int k_max, double quad_tol = 1e-10);

SeriesSolution make_series_solution(const std::function<double(double)>& f, double a, double b,
                                    int k_max = 400, double quad_tol = 1e-10);

struct SeriesValue {
    double value = 0.0;
    int terms_used = 0;
    /// true when the truncation bound dropped below tail_tol before k_max; a
    /// false value at y near b flags a raw (possibly Gibbs-oscillating)
    /// partial sum.
    bool tail_bound_met = false;
};

/// Partial sum with overflow-safe sinh ratios. Terms stop at k_max or once the
/// remaining-term bound env_k * exp(-k pi (b-y)/a) falls below tail_tol, where
/// env_k = max_{j>=k} |alpha_j|. Exact zero on the three homogeneous edges.
/// Throws input_error outside [0,a] x [0,b].
SeriesValue evaluate_series(const SeriesSolution& sol, double x, double y,
                            double tail_tol = 1e-12);

/// Exact solution for the unit-square problem with top profile
/// sinh(pi) sin(pi x): V(x,y) = sinh(pi y) sin(pi x).
double sine_special_exact(double x, double y);

} // namespace mol
