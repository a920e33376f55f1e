#include "mol/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mol/errors.hpp"
#include "mol/hyperbolic.hpp"

namespace mol {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxPanels = 1 << 20;

double simpson(const std::function<double(double)>& g, double lo, double hi, int intervals) {
    const double h = (hi - lo) / intervals;
    double sum = g(lo) + g(hi);
    for (int i = 1; i < intervals; ++i) sum += (i % 2 ? 4.0 : 2.0) * g(lo + i * h);
    return sum * h / 3.0;
}

// panel doubling; the start resolution grows with the oscillation count so a
// coarse level cannot alias into false agreement
double integrate(const std::function<double(double)>& g, double lo, double hi, double tol,
                 int min_intervals) {
    int m = 16;
    while (m < min_intervals && m < kMaxPanels) m *= 2;
    double prev = simpson(g, lo, hi, m);
    for (m *= 2; m <= kMaxPanels; m *= 2) {
        const double cur = simpson(g, lo, hi, m);
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    throw numeric_error("fourier_coefficients: quadrature did not converge within 2^20 panels");
}

} // namespace

std::vector<double> fourier_coefficients(const std::function<double(double)>& f, double a,
                                         int k_max, double quad_tol) {
    if (!(a > 0.0)) throw input_error("fourier_coefficients: a must be positive");
    if (k_max < 1) throw input_error("fourier_coefficients: k_max must be >= 1");
    if (!f) throw input_error("fourier_coefficients: profile function is required");

    std::vector<double> alphas(k_max);
    for (int k = 1; k <= k_max; ++k) {
        const double freq = k * kPi / a;
        auto integrand = [&](double x) { return f(x) * std::sin(freq * x); };
        alphas[k - 1] = (2.0 / a) * integrate(integrand, 0.0, a, quad_tol, 4 * k);
    }
    return alphas;
}

SeriesSolution make_series_solution(const std::function<double(double)>& f, double a, double b,
                                    int k_max, double quad_tol) {
    if (!(b > 0.0)) throw input_error("make_series_solution: b must be positive");
    return SeriesSolution{a, b, fourier_coefficients(f, a, k_max, quad_tol)};
}

SeriesValue evaluate_series(const SeriesSolution& sol, double x, double y, double tail_tol) {
    if (x < 0.0 || x > sol.a || y < 0.0 || y > sol.b)
        throw input_error("evaluate_series: (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") outside [0," + std::to_string(sol.a) + "] x [0," +
                          std::to_string(sol.b) + "]");

    // every term vanishes on the three homogeneous edges
    if (x == 0.0 || x == sol.a || y == 0.0) return SeriesValue{0.0, 0, true};

    const int k_max = sol.k_max();
    std::vector<double> envelope(k_max);
    double running = 0.0;
    for (int k = k_max - 1; k >= 0; --k) {
        running = std::max(running, std::abs(sol.alphas[k]));
        envelope[k] = running;
    }

    SeriesValue out;
    double sum = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        const double decay = std::exp(-k * kPi * (sol.b - y) / sol.a);
        if (envelope[k - 1] * decay < tail_tol) {
            out.tail_bound_met = true;
            break;
        }
        const double freq = k * kPi / sol.a;
        sum += sol.alphas[k - 1] * sinh_ratio(freq, y, sol.b) * std::sin(freq * x);
        out.terms_used = k;
    }
    out.value = sum;
    return out;
}

double sine_special_exact(double x, double y) {
    return std::sinh(kPi * y) * std::sin(kPi * x);
}

} // namespace mol
