#pragma once

#include <utility>
#include <vector>

namespace mol {

/// Sturm sequence of orthogonal polynomials attached to the tridiagonal
/// operator with corners (p_left, p_right): p_k is the characteristic
/// polynomial of its leading k x k minor.
///
///   p_0 = 1,  p_1 = p_left - x,
///   p_{k+1} = (2 - x) p_k - p_{k-1}         (1 <= k <= n-2),
///   p_n = (p_right - x) p_{n-1} - p_{n-2}.
///
/// For n = 1 both corners act on the single entry: p_1 = (p_left + p_right - 2) - x.
/// Monomial coefficients are stored for inspection/printing; point evaluation
/// always runs the three-term recurrence (expanded coefficients become
/// ill-conditioned for large n).
struct PolynomialSequence {
    int n = 0;
    double p_left = 2.0;
    double p_right = 2.0;
    /// coeffs[k] = coefficients of p_k, ascending degree, size k+1.
    std::vector<std::vector<double>> coeffs;
};

/// Corners must be 1 or 2. Throws input_error otherwise.
PolynomialSequence build_sequence(int n, double p_left, double p_right);

/// (p_0(x), ..., p_n(x)) by the three-term recurrence.
std::vector<double> evaluate_sequence(const PolynomialSequence& seq, double x);

/// (p_n(x), p_n'(x)), both by recurrence.
std::pair<double, double> characteristic_value(const PolynomialSequence& seq, double x);

/// Number of eigenvalues of the operator strictly below x (sign changes along
/// the Sturm sequence; a zero takes the sign opposite to its predecessor).
int sturm_count(const PolynomialSequence& seq, double x);

/// All n roots of p_n in [0, 4], ascending: Sturm-count bisection to the given
/// bracket width, then up to five Newton steps. Throws numeric_error when n
/// simple roots cannot be isolated.
std::vector<double> characteristic_roots(const PolynomialSequence& seq, double bisect_tol = 1e-10);

/// Unit-norm eigenvector (p_0(lambda), ..., p_{n-1}(lambda)) with the first
/// nonzero entry positive. lambda must be a root of p_n (relative residual
/// <= root_tol); otherwise throws input_error.
std::vector<double> eigenvector_from_polys(const PolynomialSequence& seq, double lambda,
                                           double root_tol = 1e-8);

} // namespace mol
