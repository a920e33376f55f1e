#pragma once

#include <span>
#include <vector>

#include "mol/boundary.hpp"

namespace mol {

/// The N x N second-difference operator P: diagonal 2 with the first and last
/// entries replaced by the corner values p_left, p_right in {1, 2}; all
/// sub/super-diagonal entries are -1. Only the three defining scalars are
/// stored. For n = 1 both corner adjustments land on the single entry, which
/// becomes p_left + p_right - 2.
struct TridiagonalOperator {
    int n = 0;
    double p_left = 2.0;
    double p_right = 2.0;

    double diagonal(int j) const; // 0-based row index
    std::vector<double> apply(std::span<const double> v) const;
};

TridiagonalOperator build_operator(int n, BoundaryKind bc_left, BoundaryKind bc_right);

/// Orthonormal eigendecomposition of the operator: P = T diag(lambda) T^T,
/// with eigenvalues ascending in [0, 4] and unit-norm eigenvector columns
/// whose first nonzero entry is positive.
class SpectralBasis {
public:
    SpectralBasis(int n, BoundaryKind bc_left, BoundaryKind bc_right,
                  std::vector<double> lambdas, std::vector<double> t_columns);

    int n() const { return n_; }
    BoundaryKind bc_left() const { return bc_left_; }
    BoundaryKind bc_right() const { return bc_right_; }

    const std::vector<double>& lambdas() const { return lambdas_; }
    const std::vector<double>& omegas() const { return omegas_; }

    /// T_{jk}, 0-based (row j = line index, column k = mode index).
    double t(int j, int k) const { return t_cols_[static_cast<std::size_t>(k) * n_ + j]; }
    std::vector<double> column(int k) const;

    /// lambda used for a swapped-entry negative control in verification tests.
    void swap_lambdas(int k1, int k2);

private:
    int n_;
    BoundaryKind bc_left_, bc_right_;
    std::vector<double> lambdas_;
    std::vector<double> omegas_;
    std::vector<double> t_cols_; // column-major n*n
};

/// Closed-form basis per boundary combination (direct trig evaluation per entry).
SpectralBasis closed_form_basis(int n, BoundaryKind bc_left, BoundaryKind bc_right);

struct VerifyReport {
    double eigen_residual = 0.0;     // max |(P T - T Lambda)_{jk}|
    double ortho_residual = 0.0;     // max |(T^T T - I)_{jk}|
    int gershgorin_violations = 0;   // # eigenvalues outside [0, 4]
    bool pass = false;
};

/// Residual check of a basis against its operator. Throws input_error when the
/// two disagree on size or boundary kinds.
VerifyReport numeric_verify(const SpectralBasis& basis, const TridiagonalOperator& op,
                            double tol_ortho = 1e-12, double tol_eigen = 1e-11);

/// vbar = T^T v (transform to mode coefficients).
std::vector<double> forward_transform(const SpectralBasis& basis, std::span<const double> v);

/// v = T vbar (back to line values).
std::vector<double> inverse_transform(const SpectralBasis& basis, std::span<const double> vbar);

} // namespace mol
