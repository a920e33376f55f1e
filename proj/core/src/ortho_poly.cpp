#include "mol/ortho_poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mol/errors.hpp"

namespace mol {

namespace {

// (c - x) * p, coefficients ascending
std::vector<double> shift_scale(const std::vector<double>& p, double c) {
    std::vector<double> out(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] += c * p[i];
        out[i + 1] -= p[i];
    }
    return out;
}

std::vector<double> subtract(std::vector<double> p, const std::vector<double>& q) {
    if (q.size() > p.size()) p.resize(q.size(), 0.0);
    for (std::size_t i = 0; i < q.size(); ++i) p[i] -= q[i];
    return p;
}

} // namespace

PolynomialSequence build_sequence(int n, double p_left, double p_right) {
    if (n < 1) throw input_error("build_sequence: n must be >= 1, got " + std::to_string(n));
    if ((p_left != 1.0 && p_left != 2.0) || (p_right != 1.0 && p_right != 2.0))
        throw input_error("build_sequence: corner values must be 1 or 2");

    PolynomialSequence seq;
    seq.n = n;
    seq.p_left = p_left;
    seq.p_right = p_right;
    seq.coeffs.reserve(n + 1);
    seq.coeffs.push_back({1.0});

    if (n == 1) {
        seq.coeffs.push_back({p_left + p_right - 2.0, -1.0});
        return seq;
    }

    seq.coeffs.push_back({p_left, -1.0});
    for (int k = 1; k <= n - 2; ++k)
        seq.coeffs.push_back(subtract(shift_scale(seq.coeffs[k], 2.0), seq.coeffs[k - 1]));
    seq.coeffs.push_back(subtract(shift_scale(seq.coeffs[n - 1], p_right), seq.coeffs[n - 2]));
    return seq;
}

std::vector<double> evaluate_sequence(const PolynomialSequence& seq, double x) {
    const int n = seq.n;
    std::vector<double> v(n + 1);
    v[0] = 1.0;
    if (n == 1) {
        v[1] = (seq.p_left + seq.p_right - 2.0) - x;
        return v;
    }
    v[1] = seq.p_left - x;
    for (int k = 1; k <= n - 2; ++k) v[k + 1] = (2.0 - x) * v[k] - v[k - 1];
    v[n] = (seq.p_right - x) * v[n - 1] - v[n - 2];
    return v;
}

std::pair<double, double> characteristic_value(const PolynomialSequence& seq, double x) {
    const int n = seq.n;
    if (n == 1) return {(seq.p_left + seq.p_right - 2.0) - x, -1.0};

    double pm1 = 1.0, dm1 = 0.0;            // p_0, p_0'
    double p = seq.p_left - x, d = -1.0;    // p_1, p_1'
    for (int k = 1; k <= n - 2; ++k) {
        const double pn = (2.0 - x) * p - pm1;
        const double dn = -p + (2.0 - x) * d - dm1;
        pm1 = p; dm1 = d;
        p = pn; d = dn;
    }
    const double pn = (seq.p_right - x) * p - pm1;
    const double dn = -p + (seq.p_right - x) * d - dm1;
    return {pn, dn};
}

int sturm_count(const PolynomialSequence& seq, double x) {
    const std::vector<double> v = evaluate_sequence(seq, x);
    int changes = 0;
    int prev = 1; // sign of p_0 = 1
    for (std::size_t k = 1; k < v.size(); ++k) {
        int s;
        if (v[k] > 0.0) s = 1;
        else if (v[k] < 0.0) s = -1;
        else s = -prev; // consecutive minors cannot both vanish
        if (s != prev) ++changes;
        prev = s;
    }
    return changes;
}

std::vector<double> characteristic_roots(const PolynomialSequence& seq, double bisect_tol) {
    const int n = seq.n;
    const double pad = 1e-9; // N/N has an eigenvalue at exactly 0
    const double lo0 = -pad, hi0 = 4.0 + pad;

    if (sturm_count(seq, lo0) != 0 || sturm_count(seq, hi0) != n)
        throw numeric_error("characteristic_roots: spectrum not contained in [0, 4]");

    // Isolate single-root brackets by recursive Sturm-count splitting.
    struct Bracket { double lo, hi; int clo, chi; };
    std::vector<Bracket> stack{{lo0, hi0, 0, n}};
    std::vector<Bracket> isolated;
    while (!stack.empty()) {
        Bracket b = stack.back();
        stack.pop_back();
        const int roots_inside = b.chi - b.clo;
        if (roots_inside == 0) continue;
        if (roots_inside == 1) {
            isolated.push_back(b);
            continue;
        }
        if (b.hi - b.lo < 1e-13)
            throw numeric_error("characteristic_roots: failed to separate eigenvalues near x=" +
                                std::to_string(b.lo));
        const double mid = 0.5 * (b.lo + b.hi);
        const int cm = sturm_count(seq, mid);
        stack.push_back({b.lo, mid, b.clo, cm});
        stack.push_back({mid, b.hi, cm, b.chi});
    }
    if (static_cast<int>(isolated.size()) != n)
        throw numeric_error("characteristic_roots: isolated " + std::to_string(isolated.size()) +
                            " roots, expected " + std::to_string(n));

    std::vector<double> roots;
    roots.reserve(n);
    for (Bracket b : isolated) {
        while (b.hi - b.lo > bisect_tol) {
            const double mid = 0.5 * (b.lo + b.hi);
            if (sturm_count(seq, mid) > b.clo) b.hi = mid;
            else b.lo = mid;
        }
        double x = 0.5 * (b.lo + b.hi);
        for (int it = 0; it < 5; ++it) {
            const auto [f, df] = characteristic_value(seq, x);
            if (df == 0.0) break;
            const double next = x - f / df;
            if (next < b.lo - bisect_tol || next > b.hi + bisect_tol) break;
            x = next;
        }
        roots.push_back(x);
    }

    std::sort(roots.begin(), roots.end());
    for (int k = 0; k + 1 < n; ++k)
        if (!(roots[k] < roots[k + 1]))
            throw numeric_error("characteristic_roots: repeated root near x=" +
                                std::to_string(roots[k]));
    return roots;
}

std::vector<double> eigenvector_from_polys(const PolynomialSequence& seq, double lambda,
                                           double root_tol) {
    const std::vector<double> vals = evaluate_sequence(seq, lambda);
    double scale = 1.0;
    for (double v : vals) scale = std::max(scale, std::abs(v));
    if (std::abs(vals[seq.n]) > root_tol * scale)
        throw input_error("eigenvector_from_polys: lambda=" + std::to_string(lambda) +
                          " is not a root (|p_n| = " + std::to_string(std::abs(vals[seq.n])) + ")");

    std::vector<double> v(vals.begin(), vals.begin() + seq.n);
    double norm = 0.0;
    for (double c : v) norm += c * c;
    norm = std::sqrt(norm);
    double sign = 1.0;
    for (double c : v) {
        if (c != 0.0) {
            sign = c > 0.0 ? 1.0 : -1.0;
            break;
        }
    }
    for (double& c : v) c *= sign / norm;
    return v;
}

} // namespace mol
