#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mol/boundary.hpp"
#include "mol/spectral_basis.hpp"

namespace mol {

/// Laplace boundary-value problem on the rectangle (0,a) x (0,b): Dirichlet
/// profiles g_bottom (y=0) and g_top (y=b), lateral conditions bc_left/bc_right
/// at x=0/x=a, and n lines at x_j = j*h with h = a/(n+1). A null profile means
/// identically zero.
struct LaplaceProblem {
    double a = 1.0;
    double b = 1.0;
    BoundaryKind bc_left = BoundaryKind::dirichlet;
    BoundaryKind bc_right = BoundaryKind::dirichlet;
    std::function<double(double)> g_bottom;
    std::function<double(double)> g_top;
    int n = 15;

    double h() const { return a / (n + 1); }
    std::vector<double> x_nodes() const;
    void validate() const; // throws input_error
};

/// Transformed boundary data: c = T^T (profile sampled at the line abscissas).
struct DiscretizedBoundary {
    SpectralBasis basis;
    std::vector<double> c_bottom;
    std::vector<double> c_top;
};

/// Builds the basis for (n, bc_left, bc_right) and transforms both boundary
/// profiles. Throws input_error if a profile sample is not finite.
DiscretizedBoundary discretize(const LaplaceProblem& problem);

/// One decoupled mode of the transformed system. Only the transformed boundary
/// values and the frequency are stored; the cosh/sinh amplitudes are never
/// formed explicitly because sinh(omega*b/h) overflows for fine grids. The
/// mode value is evaluated in the equivalent two-point form
///
///   vbar(y) = c_bottom * sinh(w(b-y)/h)/sinh(wb/h) + c_top * sinh(wy/h)/sinh(wb/h)
///
/// with overflow-safe ratios, and for omega = 0 as the linear interpolant
/// c_bottom + (c_top - c_bottom) * y/b.
struct ModeCoefficients {
    double omega = 0.0;
    double c_bottom = 0.0;
    double c_top = 0.0;
};

std::vector<ModeCoefficients> solve_modes(std::span<const double> c_bottom,
                                          std::span<const double> c_top,
                                          std::span<const double> omegas,
                                          double b, double h);

double mode_value(const ModeCoefficients& mode, double y, double b, double h);

/// V(y) = T * (mode values at y). Throws input_error for y outside [0, b].
std::vector<double> evaluate(const SpectralBasis& basis, std::span<const ModeCoefficients> modes,
                             double y, double b, double h);

/// Fully assembled solution: sampled anywhere on the lines.
class LineField {
public:
    explicit LineField(LaplaceProblem problem);

    const LaplaceProblem& problem() const { return prob_; }
    const SpectralBasis& basis() const { return disc_.basis; }
    const std::vector<double>& x_nodes() const { return x_; }

    /// V_j(y) for all lines; y must lie in [0, b].
    std::vector<double> values_at(double y) const;
    /// Single line (0-based index).
    double value_at_line(int j, double y) const;

private:
    LaplaceProblem prob_;
    DiscretizedBoundary disc_;
    std::vector<ModeCoefficients> modes_;
    std::vector<double> x_;
};

inline LineField solve(LaplaceProblem problem) { return LineField(std::move(problem)); }

/// Unit square, Dirichlet sides, zero bottom, constant top profile.
LaplaceProblem constant_top_problem(int n, double top_value);

/// Unit square, Dirichlet sides, zero bottom, g_top(x) = sinh(pi) sin(pi x).
/// The top profile samples excite a single mode, so the semi-discrete solution
/// has a closed form (see sine_special_closed_form).
LaplaceProblem sine_special_problem(int n);

/// Exact semi-discrete solution of sine_special_problem: only mode 1 is
/// excited, with discrete frequency rate = 2 sin(pi h/2)/h (which tends to pi
/// as h -> 0), and the top boundary pins the amplitude:
///
///   V(x_j, y) = sinh(pi) * sinh(rate*y)/sinh(rate) * sin(pi*x_j).
///
/// This matches the generic pipeline to round-off at every (x_j, y).
struct SineSpecialClosedForm {
    int n = 0;
    double h = 0.0;
    double rate = 0.0;

    double at(double x, double y) const;
    std::vector<double> x_nodes() const;
};

SineSpecialClosedForm sine_special_closed_form(int n);

} // namespace mol
