#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mol/laplace.hpp"

namespace mol {

/// Pointwise reference solution, evaluated at the line abscissas.
using ReferenceFn = std::function<double(double x, double y)>;

/// Per-line absolute error curves over a y grid, with symmetric lines folded:
/// lines j and n+1-j whose curves agree to fold_tol everywhere count once.
struct ErrorReport {
    int n = 0;
    std::vector<double> y_grid;
    std::vector<std::vector<double>> curves;   // curves[j][iy], 0-based line j
    std::vector<double> per_line_max;
    double global_max = 0.0;
    std::vector<int> fold_class;               // representative line index per line
    int distinct_curves = 0;
};

ErrorReport error_field(const LineField& mol_solution, const ReferenceFn& reference,
                        std::span<const double> y_grid, double fold_tol = 1e-9);

/// count uniformly spaced samples covering [lo, hi], endpoints included.
std::vector<double> uniform_grid(double lo, double hi, int count);

/// Least-squares slope of log(error) vs log(h) over a refinement ladder, plus
/// the successive-pair ratios. defined is false when any level has zero error
/// (order undefined for exactly represented solutions).
struct ConvergenceFit {
    std::vector<double> h;
    std::vector<double> errors;
    double order_ls = 0.0;
    std::vector<double> pair_ratios;
    bool defined = false;
};

/// error_of_level maps n to the level's error; h = a/(n+1). Needs at least
/// three ascending levels.
ConvergenceFit convergence_order(const std::function<double(int)>& error_of_level,
                                 std::span<const int> n_list, double a = 1.0);

} // namespace mol
