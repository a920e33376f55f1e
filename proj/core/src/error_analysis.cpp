#include "mol/error_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mol/errors.hpp"

namespace mol {

std::vector<double> uniform_grid(double lo, double hi, int count) {
    if (count < 2) throw input_error("uniform_grid: need at least 2 samples");
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) g[i] = lo + (hi - lo) * i / (count - 1);
    g.back() = hi;
    return g;
}

ErrorReport error_field(const LineField& mol_solution, const ReferenceFn& reference,
                        std::span<const double> y_grid, double fold_tol) {
    if (!reference) throw input_error("error_field: reference function is required");
    if (y_grid.empty()) throw input_error("error_field: empty y grid");

    const int n = mol_solution.problem().n;
    const std::vector<double>& x = mol_solution.x_nodes();

    ErrorReport rep;
    rep.n = n;
    rep.y_grid.assign(y_grid.begin(), y_grid.end());
    rep.curves.assign(n, std::vector<double>(y_grid.size(), 0.0));
    rep.per_line_max.assign(n, 0.0);

    for (std::size_t iy = 0; iy < y_grid.size(); ++iy) {
        const std::vector<double> v = mol_solution.values_at(y_grid[iy]);
        for (int j = 0; j < n; ++j) {
            const double e = std::abs(v[j] - reference(x[j], y_grid[iy]));
            rep.curves[j][iy] = e;
            rep.per_line_max[j] = std::max(rep.per_line_max[j], e);
            rep.global_max = std::max(rep.global_max, e);
        }
    }

    rep.fold_class.resize(n);
    for (int j = 0; j < n; ++j) rep.fold_class[j] = j;
    for (int j = 0; j < n / 2; ++j) {
        const int mirror = n - 1 - j;
        double gap = 0.0;
        for (std::size_t iy = 0; iy < y_grid.size(); ++iy)
            gap = std::max(gap, std::abs(rep.curves[j][iy] - rep.curves[mirror][iy]));
        if (gap <= fold_tol) rep.fold_class[mirror] = j;
    }
    rep.distinct_curves = 0;
    for (int j = 0; j < n; ++j)
        if (rep.fold_class[j] == j) ++rep.distinct_curves;
    return rep;
}

ConvergenceFit convergence_order(const std::function<double(int)>& error_of_level,
                                 std::span<const int> n_list, double a) {
    if (n_list.size() < 3)
        throw input_error("convergence_order: need at least 3 levels, got " +
                          std::to_string(n_list.size()));
    for (std::size_t i = 0; i + 1 < n_list.size(); ++i)
        if (n_list[i] >= n_list[i + 1])
            throw input_error("convergence_order: levels must be strictly increasing");

    ConvergenceFit fit;
    for (int n : n_list) {
        fit.h.push_back(a / (n + 1));
        fit.errors.push_back(error_of_level(n));
    }

    fit.defined = std::all_of(fit.errors.begin(), fit.errors.end(),
                              [](double e) { return e > 0.0; });
    for (std::size_t i = 0; i + 1 < fit.errors.size(); ++i)
        fit.pair_ratios.push_back(fit.defined ? fit.errors[i] / fit.errors[i + 1] : 0.0);

    if (fit.defined) {
        const std::size_t m = fit.h.size();
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            mx += std::log(fit.h[i]);
            my += std::log(fit.errors[i]);
        }
        mx /= m;
        my /= m;
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double dx = std::log(fit.h[i]) - mx;
            sxy += dx * (std::log(fit.errors[i]) - my);
            sxx += dx * dx;
        }
        fit.order_ls = sxy / sxx;
    }
    return fit;
}

} // namespace mol
