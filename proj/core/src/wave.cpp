#include "mol/wave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "mol/errors.hpp"

namespace mol {

namespace {

constexpr double kPi = std::numbers::pi;

double checked(double v, const char* name, double at, double t) {
    if (!std::isfinite(v))
        throw input_error(std::string(name) + " returned a non-finite value at x=" +
                          std::to_string(at) + ", t=" + std::to_string(t));
    return v;
}

} // namespace

void WaveProblem::validate() const {
    if (!(length > 0.0) || !(t_end > 0.0))
        throw input_error("WaveProblem: length and t_end must be positive");
    if (n < 3) throw input_error("WaveProblem: need n >= 3 interior nodes, got " +
                                 std::to_string(n));
    if (step_size() > dx() + 1e-15)
        throw input_error("WaveProblem: dt = " + std::to_string(step_size()) +
                          " violates the CFL bound dx = " + std::to_string(dx()));
}

WaveRhs::WaveRhs(WaveProblem problem) : prob_(std::move(problem)) {
    prob_.validate();
    dx_ = prob_.dx();
    x_.resize(prob_.n);
    for (int j = 0; j < prob_.n; ++j) x_[j] = (j + 1) * dx_;
}

double WaveRhs::right_end_value(double t, std::span<const double> u) const {
    double sum = 0.0;
    for (double v : u) sum += v;
    const double left = prob_.g1 ? checked(prob_.g1(t), "g1", 0.0, t) : 0.0;
    const double target = prob_.g2 ? checked(prob_.g2(t), "g2", prob_.length, t) : 0.0;
    return 2.0 * (target / dx_ - 0.5 * left - sum);
}

double WaveRhs::constraint_residual(double t, std::span<const double> u) const {
    double sum = 0.0;
    for (double v : u) sum += v;
    const double left = prob_.g1 ? prob_.g1(t) : 0.0;
    const double target = prob_.g2 ? prob_.g2(t) : 0.0;
    return dx_ * (0.5 * left + sum + 0.5 * right_end_value(t, u)) - target;
}

void WaveRhs::operator()(double t, std::span<const double> u, std::span<const double> w,
                         std::span<double> du, std::span<double> dw) const {
    const int n = prob_.n;
    const double left = prob_.g1 ? checked(prob_.g1(t), "g1", 0.0, t) : 0.0;
    const double right = right_end_value(t, u);
    const double inv_dx2 = 1.0 / (dx_ * dx_);

    for (int j = 0; j < n; ++j) {
        const double um = (j == 0) ? left : u[j - 1];
        const double up = (j == n - 1) ? right : u[j + 1];
        const double forcing = prob_.q ? checked(prob_.q(x_[j], t), "q", x_[j], t) : 0.0;
        du[j] = w[j];
        dw[j] = (up - 2.0 * u[j] + um) * inv_dx2 + forcing;
    }
}

WaveState initial_state(const WaveProblem& problem) {
    problem.validate();
    const double dx = problem.dx();
    WaveState s;
    s.t = 0.0;
    s.u.resize(problem.n);
    s.w.resize(problem.n);
    for (int j = 0; j < problem.n; ++j) {
        const double x = (j + 1) * dx;
        s.u[j] = problem.f1 ? checked(problem.f1(x), "f1", x, 0.0) : 0.0;
        s.w[j] = problem.f2 ? checked(problem.f2(x), "f2", x, 0.0) : 0.0;
    }
    return s;
}

WaveState step_rk4(const WaveRhs& rhs, const WaveState& state, double dt) {
    const std::size_t n = state.u.size();
    std::vector<double> ku1(n), kw1(n), ku2(n), kw2(n), ku3(n), kw3(n), ku4(n), kw4(n);
    std::vector<double> ut(n), wt(n);

    rhs(state.t, state.u, state.w, ku1, kw1);
    for (std::size_t j = 0; j < n; ++j) {
        ut[j] = state.u[j] + 0.5 * dt * ku1[j];
        wt[j] = state.w[j] + 0.5 * dt * kw1[j];
    }
    rhs(state.t + 0.5 * dt, ut, wt, ku2, kw2);
    for (std::size_t j = 0; j < n; ++j) {
        ut[j] = state.u[j] + 0.5 * dt * ku2[j];
        wt[j] = state.w[j] + 0.5 * dt * kw2[j];
    }
    rhs(state.t + 0.5 * dt, ut, wt, ku3, kw3);
    for (std::size_t j = 0; j < n; ++j) {
        ut[j] = state.u[j] + dt * ku3[j];
        wt[j] = state.w[j] + dt * kw3[j];
    }
    rhs(state.t + dt, ut, wt, ku4, kw4);

    WaveState next;
    next.t = state.t + dt;
    next.u.resize(n);
    next.w.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        next.u[j] = state.u[j] + dt / 6.0 * (ku1[j] + 2.0 * ku2[j] + 2.0 * ku3[j] + ku4[j]);
        next.w[j] = state.w[j] + dt / 6.0 * (kw1[j] + 2.0 * kw2[j] + 2.0 * kw3[j] + kw4[j]);
        if (!std::isfinite(next.u[j]) || !std::isfinite(next.w[j]))
            throw numeric_error("step_rk4: instability at t = " + std::to_string(next.t));
    }
    return next;
}

WaveTrajectory run_wave(const WaveProblem& problem, std::span<const double> record_times) {
    for (std::size_t i = 0; i < record_times.size(); ++i) {
        if (record_times[i] < 0.0 || record_times[i] > problem.t_end + 1e-12)
            throw input_error("run_wave: record time outside [0, t_end]");
        if (i > 0 && record_times[i] <= record_times[i - 1])
            throw input_error("run_wave: record times must be strictly ascending");
    }

    WaveRhs rhs(problem);
    WaveState state = initial_state(problem);
    const double dt = problem.step_size();

    WaveTrajectory traj;
    auto record = [&](const WaveState& s) {
        traj.times.push_back(s.t);
        traj.u_rows.push_back(s.u);
        traj.right_values.push_back(rhs.right_end_value(s.t, s.u));
    };

    std::size_t next_record = 0;
    if (next_record < record_times.size() && record_times[next_record] == 0.0) {
        record(state);
        ++next_record;
    }

    while (next_record < record_times.size()) {
        const double target = record_times[next_record];
        while (state.t < target - 1e-12) {
            const double step = std::min(dt, target - state.t);
            state = step_rk4(rhs, state, step);
            traj.max_constraint_residual =
                std::max(traj.max_constraint_residual,
                         std::abs(rhs.constraint_residual(state.t, state.u)));
        }
        state.t = target; // absorb accumulated round-off in t
        record(state);
        ++next_record;
    }

    traj.final_state = std::move(state);
    return traj;
}

WaveComparison run_and_compare(const WaveProblem& problem,
                               const std::function<double(double, double)>& analytic,
                               std::span<const double> sample_times) {
    if (!analytic) throw input_error("run_and_compare: analytic solution is required");

    WaveTrajectory traj = run_wave(problem, sample_times);
    const double dx = problem.dx();

    WaveComparison cmp;
    cmp.sample_times.assign(sample_times.begin(), sample_times.end());
    cmp.max_constraint_residual = traj.max_constraint_residual;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        double err = 0.0;
        for (int j = 0; j < problem.n; ++j)
            err = std::max(err, std::abs(traj.u_rows[i][j] - analytic((j + 1) * dx, traj.times[i])));
        cmp.max_errors.push_back(err);
    }
    return cmp;
}

WaveCase wave_row(int row) {
    WaveCase c;
    c.problem.length = 1.0;
    switch (row) {
    case 1:
        c.name = "row1";
        c.problem.t_end = 4.0;
        c.problem.f2 = [](double x) { return kPi * std::cos(kPi * x); };
        c.problem.g1 = [](double t) { return std::sin(kPi * t); };
        c.analytic = [](double x, double t) { return std::cos(kPi * x) * std::sin(kPi * t); };
        break;
    case 2:
        c.name = "row2";
        c.problem.t_end = 5.0;
        c.problem.q = [](double x, double t) { return -2.0 * (x - t) * std::exp(-x - t); };
        c.problem.f2 = [](double x) { return x * std::exp(-x); };
        c.problem.g2 = [](double t) { return -2.0 * t * std::exp(-t - 1.0) + t * std::exp(-t); };
        c.analytic = [](double x, double t) { return x * t * std::exp(-x - t); };
        break;
    case 3:
        c.name = "row3";
        c.problem.t_end = 4.0;
        c.problem.f1 = [](double x) { return std::cos(kPi * x); };
        c.problem.g1 = [](double t) { return std::cos(kPi * t); };
        c.analytic = [](double x, double t) {
            return 0.5 * std::cos(kPi * (x + t)) + 0.5 * std::cos(kPi * (x - t));
        };
        break;
    case 4:
        c.name = "row4";
        c.problem.t_end = 5.0;
        c.problem.q = [](double x, double t) {
            const double x2 = x * x, x3 = x2 * x, x5 = x3 * x2;
            return 2.0 * x5 + 2.0 * x3 - 2.0 * x2 - (20.0 * x3 + 6.0 * x - 2.0) * (t * t - t);
        };
        c.problem.f2 = [](double x) {
            const double x2 = x * x, x3 = x2 * x, x5 = x3 * x2;
            return -x5 - x3 + x2;
        };
        c.problem.g2 = [](double t) { return t * (t - 1.0) / 12.0; };
        c.analytic = [](double x, double t) {
            const double x2 = x * x, x3 = x2 * x, x5 = x3 * x2;
            return (x5 + x3 - x2) * (t * t - t);
        };
        break;
    default:
        throw input_error("wave_row: row must be 1..4, got " + std::to_string(row));
    }
    return c;
}

} // namespace mol
