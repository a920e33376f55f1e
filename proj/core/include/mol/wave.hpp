#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mol {

/// v_tt - v_xx = q(x,t) on (0,L) x (0,T], with v(x,0) = f1(x),
/// v_t(x,0) = f2(x), the Dirichlet condition v(0,t) = g1(t), and the integral
/// condition  integral_0^L v(x,t) dx = g2(t).
///
/// Interior nodes sit at x_j = j*dx, j = 1..n, dx = L/(n+1); the value at
/// x = L is not evolved but recovered from the integral condition. A time step
/// dt <= 0 selects the default dx/2.
struct WaveProblem {
    double length = 1.0;
    double t_end = 1.0;
    std::function<double(double, double)> q;  // forcing (x, t)
    std::function<double(double)> f1;         // initial displacement
    std::function<double(double)> f2;         // initial velocity
    std::function<double(double)> g1;         // left boundary value
    std::function<double(double)> g2;         // prescribed integral over [0, L]
    int n = 40;
    double dt = 0.0;

    double dx() const { return length / (n + 1); }
    double step_size() const { return dt > 0.0 ? dt : 0.5 * dx(); }
    void validate() const; // n >= 3, positive geometry, dt <= dx (CFL)
};

struct WaveState {
    double t = 0.0;
    std::vector<double> u; // displacements at the interior nodes
    std::vector<double> w; // velocities
};

/// Semi-discrete right-hand side with the integral condition eliminated: the
/// composite trapezoid form  dx*(g1/2 + sum u_j + v_R/2) = g2  is solved for
/// the right-end value v_R, which closes the second-difference stencil at the
/// last interior node. The system then consists of plain explicit ODEs.
class WaveRhs {
public:
    explicit WaveRhs(WaveProblem problem);

    const WaveProblem& problem() const { return prob_; }
    const std::vector<double>& x_nodes() const { return x_; }

    double right_end_value(double t, std::span<const double> u) const;
    double constraint_residual(double t, std::span<const double> u) const;

    /// (du, dw) at (t, u, w). Throws input_error when a user function returns
    /// a non-finite value.
    void operator()(double t, std::span<const double> u, std::span<const double> w,
                    std::span<double> du, std::span<double> dw) const;

private:
    WaveProblem prob_;
    std::vector<double> x_;
    double dx_;
};

WaveState initial_state(const WaveProblem& problem);

/// One classical 4-stage explicit update. Throws numeric_error (naming t) if
/// the new state is not finite.
WaveState step_rk4(const WaveRhs& rhs, const WaveState& state, double dt);

struct WaveTrajectory {
    std::vector<double> times;                 // recorded times
    std::vector<std::vector<double>> u_rows;   // interior values per recorded time
    std::vector<double> right_values;          // recovered v(L, t) per recorded time
    double max_constraint_residual = 0.0;      // over every accepted step
    WaveState final_state;
};

/// Steps from t = 0 with the problem's step size, shortening a step where
/// needed so each record time is hit exactly. Record times must be ascending
/// and within [0, t_end].
WaveTrajectory run_wave(const WaveProblem& problem, std::span<const double> record_times);

/// Max |u_j - analytic(x_j, t)| at each sample time.
struct WaveComparison {
    std::vector<double> sample_times;
    std::vector<double> max_errors;
    double max_constraint_residual = 0.0;
};

WaveComparison run_and_compare(const WaveProblem& problem,
                               const std::function<double(double, double)>& analytic,
                               std::span<const double> sample_times);

/// Validation cases with known analytic solutions.
struct WaveCase {
    std::string name;
    WaveProblem problem;
    std::function<double(double, double)> analytic;
};

/// rows 1..4 of the validation catalog.
WaveCase wave_row(int row);

} // namespace mol
