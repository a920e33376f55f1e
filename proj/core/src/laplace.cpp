#include "mol/laplace.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "mol/errors.hpp"
#include "mol/hyperbolic.hpp"

namespace mol {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> sample_profile(const std::function<double(double)>& g,
                                   const std::vector<double>& x, const char* name) {
    std::vector<double> out(x.size(), 0.0);
    if (!g) return out;
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = g(x[j]);
        if (!std::isfinite(out[j]))
            throw input_error(std::string(name) + " is not finite at x_" + std::to_string(j + 1) +
                              " = " + std::to_string(x[j]));
    }
    return out;
}

} // namespace

std::vector<double> LaplaceProblem::x_nodes() const {
    std::vector<double> x(n);
    const double step = h();
    for (int j = 0; j < n; ++j) x[j] = (j + 1) * step;
    return x;
}

void LaplaceProblem::validate() const {
    if (!(a > 0.0) || !(b > 0.0))
        throw input_error("LaplaceProblem: a and b must be positive");
    if (n < 1) throw input_error("LaplaceProblem: n must be >= 1, got " + std::to_string(n));
}

DiscretizedBoundary discretize(const LaplaceProblem& problem) {
    problem.validate();
    const std::vector<double> x = problem.x_nodes();
    const std::vector<double> gb = sample_profile(problem.g_bottom, x, "g_bottom");
    const std::vector<double> gt = sample_profile(problem.g_top, x, "g_top");

    SpectralBasis basis = closed_form_basis(problem.n, problem.bc_left, problem.bc_right);
    std::vector<double> cb = forward_transform(basis, gb);
    std::vector<double> ct = forward_transform(basis, gt);
    return DiscretizedBoundary{std::move(basis), std::move(cb), std::move(ct)};
}

std::vector<ModeCoefficients> solve_modes(std::span<const double> c_bottom,
                                          std::span<const double> c_top,
                                          std::span<const double> omegas,
                                          double b, double h) {
    if (c_bottom.size() != c_top.size() || c_bottom.size() != omegas.size())
        throw input_error("solve_modes: coefficient vectors have mismatched lengths");
    if (!(b > 0.0) || !(h > 0.0))
        throw input_error("solve_modes: b and h must be positive");

    std::vector<ModeCoefficients> modes(omegas.size());
    for (std::size_t k = 0; k < omegas.size(); ++k)
        modes[k] = ModeCoefficients{omegas[k], c_bottom[k], c_top[k]};
    return modes;
}

double mode_value(const ModeCoefficients& mode, double y, double b, double h) {
    if (mode.omega == 0.0)
        return mode.c_bottom + (mode.c_top - mode.c_bottom) * (y / b);
    const double alpha = mode.omega / h;
    return mode.c_bottom * sinh_ratio(alpha, b - y, b) + mode.c_top * sinh_ratio(alpha, y, b);
}

std::vector<double> evaluate(const SpectralBasis& basis, std::span<const ModeCoefficients> modes,
                             double y, double b, double h) {
    if (static_cast<int>(modes.size()) != basis.n())
        throw input_error("evaluate: mode count does not match basis size");
    if (y < 0.0 || y > b)
        throw input_error("evaluate: y = " + std::to_string(y) + " outside [0, " +
                          std::to_string(b) + "]");

    std::vector<double> vbar(modes.size());
    for (std::size_t k = 0; k < modes.size(); ++k) vbar[k] = mode_value(modes[k], y, b, h);
    return inverse_transform(basis, vbar);
}

LineField::LineField(LaplaceProblem problem)
    : prob_(std::move(problem)),
      disc_(discretize(prob_)),
      modes_(solve_modes(disc_.c_bottom, disc_.c_top, disc_.basis.omegas(), prob_.b, prob_.h())),
      x_(prob_.x_nodes()) {}

std::vector<double> LineField::values_at(double y) const {
    return evaluate(disc_.basis, modes_, y, prob_.b, prob_.h());
}

double LineField::value_at_line(int j, double y) const {
    if (j < 0 || j >= prob_.n)
        throw input_error("value_at_line: line index " + std::to_string(j) + " out of range");
    return values_at(y)[j];
}

LaplaceProblem constant_top_problem(int n, double top_value) {
    LaplaceProblem p;
    p.n = n;
    p.g_top = [top_value](double) { return top_value; };
    return p;
}

LaplaceProblem sine_special_problem(int n) {
    LaplaceProblem p;
    p.n = n;
    p.g_top = [](double x) { return std::sinh(kPi) * std::sin(kPi * x); };
    return p;
}

double SineSpecialClosedForm::at(double x, double y) const {
    return std::sinh(kPi) * (std::sinh(rate * y) / std::sinh(rate)) * std::sin(kPi * x);
}

std::vector<double> SineSpecialClosedForm::x_nodes() const {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) x[j] = (j + 1) * h;
    return x;
}

SineSpecialClosedForm sine_special_closed_form(int n) {
    if (n < 1) throw input_error("sine_special_closed_form: n must be >= 1");
    const double h = 1.0 / (n + 1);
    return SineSpecialClosedForm{n, h, 2.0 * std::sin(kPi * h / 2.0) / h};
}

} // namespace mol
