#ifndef RCT_NUMERIC_HPP
#define RCT_NUMERIC_HPP
//
// Project     : rct
// Module      : numeric
// Description : tolerance-aware dense complex kernels: PSD square roots,
//               numerical rank, column/null spaces, subspace lattice ops
//

#include <rct/types.hpp>

namespace rct {

/// A linear subspace of C^n held as an orthonormal column basis.
class Subspace {
public:
    /// Wraps an orthonormal basis. Throws if the columns are not
    /// orthonormal within tol.identity_atol.
    Subspace(Index ambient_dim, CMat orthonormal_basis, const TolerancePolicy& tol = {});

    static Subspace zero(Index ambient_dim);
    static Subspace full(Index ambient_dim);

    Index ambient_dim() const { return ambient_; }
    Index dim() const { return basis_.cols(); }
    const CMat& basis() const { return basis_; }

    /// basis * basis^*
    CMat projection() const;

    /// max-abs-entry norm of basis^* basis - I
    double orthonormality_residual() const;

private:
    Index ambient_;
    CMat  basis_;
};

/// Hermitian PSD square root via eigendecomposition. Eigenvalues in
/// [-identity_atol, 0] are clamped to zero; anything lower throws.
CMat psd_sqrt(const Eigen::Ref<const CMat>& a, const TolerancePolicy& tol = {});

/// Number of singular values above rank_rtol * sigma_max.
Index numeric_rank(const Eigen::Ref<const CMat>& a, const TolerancePolicy& tol = {});

/// Orthonormal basis of the span of A's columns.
Subspace column_space(const Eigen::Ref<const CMat>& a, const TolerancePolicy& tol = {});

/// Orthonormal basis of { x : ||Ax|| <= rank_rtol * sigma_max * ||x|| }.
Subspace null_space(const Eigen::Ref<const CMat>& a, const TolerancePolicy& tol = {});

/// span(U ∪ V); ambient dimensions must agree.
Subspace subspace_join(const Subspace& u, const Subspace& v, const TolerancePolicy& tol = {});

/// U ∩ V via the null space of the stacked complementary projections.
Subspace subspace_intersect(const Subspace& u, const Subspace& v, const TolerancePolicy& tol = {});

CMat orthogonal_projection(const Subspace& u);

/// Frobenius distance ||P_U - P_V||_F; zero iff the subspaces coincide.
double projection_distance(const Subspace& u, const Subspace& v);

/// Residual of v against U: ||(I - P_U) v|| / max(||v||, 1).
double subspace_residual(const Subspace& u, const Eigen::Ref<const CVec>& v);

/// Modified Gram-Schmidt with re-orthogonalization. Columns whose
/// remainder falls below drop_rtol * (largest input column norm) are
/// dropped. Deterministic; keeps the surviving columns' input order.
CMat mgs_orthonormalize(const Eigen::Ref<const CMat>& cols, double drop_rtol);

} // namespace rct

#endif
