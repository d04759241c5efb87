#include <rct/numeric.hpp>

namespace rct {

Subspace::Subspace(Index ambient_dim, CMat orthonormal_basis, const TolerancePolicy& tol)
    : ambient_(ambient_dim)
    , basis_(std::move(orthonormal_basis))
{
    tol.validate();
    if (ambient_ < 0)
        throw std::invalid_argument("Subspace: negative ambient dimension");
    if (basis_.rows() != ambient_)
        throw std::invalid_argument("Subspace: basis rows do not match ambient dimension");
    if (basis_.cols() > ambient_)
        throw std::invalid_argument("Subspace: more basis vectors than ambient dimension");
    if (!all_finite(basis_))
        throw std::invalid_argument("Subspace: non-finite basis entries");
    if (orthonormality_residual() > tol.identity_atol)
        throw std::invalid_argument("Subspace: basis columns are not orthonormal");
}

Subspace Subspace::zero(Index ambient_dim)
{
    return Subspace(ambient_dim, CMat(ambient_dim, 0));
}

Subspace Subspace::full(Index ambient_dim)
{
    return Subspace(ambient_dim, CMat::Identity(ambient_dim, ambient_dim));
}

CMat Subspace::projection() const
{
    if (dim() == 0)
        return CMat::Zero(ambient_, ambient_);
    return basis_ * basis_.adjoint();
}

double Subspace::orthonormality_residual() const
{
    if (dim() == 0)
        return 0.0;
    CMat gram = basis_.adjoint() * basis_;
    return (gram - CMat::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

CMat psd_sqrt(const Eigen::Ref<const CMat>& a, const TolerancePolicy& tol)
{
    tol.validate();
    if (a.rows() != a.cols())
        throw std::invalid_argument("psd_sqrt: matrix must be square");
    if (!all_finite(a))
        throw std::invalid_argument("psd_sqrt: non-finite entries");
    if (!is_hermitian(a, tol.identity_atol))
        throw std::invalid_argument("psd_sqrt: matrix is not Hermitian within tolerance");
    if (a.rows() == 0)
        return a;

    Eigen::SelfAdjointEigenSolver<CMat> es(a);
    RVec lambda = es.eigenvalues();
    for (Index i = 0; i < lambda.size(); ++i) {
        if (lambda(i) < -tol.identity_atol)
            throw std::invalid_argument("psd_sqrt: matrix is not positive semidefinite");
        if (lambda(i) < 0.0)
            lambda(i) = 0.0;
    }
    CMat v = es.eigenvectors();
    return v * lambda.cwiseSqrt().asDiagonal() * v.adjoint();
}

Index numeric_rank(const Eigen::Ref<const CMat>& a, const TolerancePolicy& tol)
{
    tol.validate();
    if (a.rows() == 0 || a.cols() == 0)
        return 0;
    Eigen::JacobiSVD<CMat> svd(a);
    const RVec& sigma = svd.singularValues();
    const double cutoff = tol.rank_rtol * sigma(0);
    if (sigma(0) == 0.0)
        return 0;
    Index r = 0;
    while (r < sigma.size() && sigma(r) > cutoff)
        ++r;
    return r;
}

Subspace column_space(const Eigen::Ref<const CMat>& a, const TolerancePolicy& tol)
{
    tol.validate();
    if (a.rows() == 0 || a.cols() == 0)
        return Subspace::zero(a.rows());
    Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeThinU);
    const RVec& sigma = svd.singularValues();
    if (sigma(0) == 0.0)
        return Subspace::zero(a.rows());
    const double cutoff = tol.rank_rtol * sigma(0);
    Index r = 0;
    while (r < sigma.size() && sigma(r) > cutoff)
        ++r;
    return Subspace(a.rows(), svd.matrixU().leftCols(r), tol);
}

Subspace null_space(const Eigen::Ref<const CMat>& a, const TolerancePolicy& tol)
{
    tol.validate();
    if (a.cols() == 0)
        return Subspace::zero(0);
    if (a.rows() == 0)
        return Subspace::full(a.cols());
    Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullV);
    const RVec& sigma = svd.singularValues();
    Index r = 0;
    if (sigma(0) > 0.0) {
        const double cutoff = tol.rank_rtol * sigma(0);
        while (r < sigma.size() && sigma(r) > cutoff)
            ++r;
    }
    return Subspace(a.cols(), svd.matrixV().rightCols(a.cols() - r), tol);
}

Subspace subspace_join(const Subspace& u, const Subspace& v, const TolerancePolicy& tol)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("subspace_join: ambient dimension mismatch");
    CMat cols(u.ambient_dim(), u.dim() + v.dim());
    cols << u.basis(), v.basis();
    return column_space(cols, tol);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v, const TolerancePolicy& tol)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("subspace_intersect: ambient dimension mismatch");
    const Index n = u.ambient_dim();
    CMat stacked(2 * n, n);
    stacked.topRows(n)    = CMat::Identity(n, n) - u.projection();
    stacked.bottomRows(n) = CMat::Identity(n, n) - v.projection();
    return null_space(stacked, tol);
}

CMat orthogonal_projection(const Subspace& u)
{
    return u.projection();
}

double projection_distance(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("projection_distance: ambient dimension mismatch");
    return (u.projection() - v.projection()).norm();
}

double subspace_residual(const Subspace& u, const Eigen::Ref<const CVec>& v)
{
    if (v.size() != u.ambient_dim())
        throw std::invalid_argument("subspace_residual: vector size mismatch");
    CVec rest = v - u.basis() * (u.basis().adjoint() * v);
    return rest.norm() / std::max(v.norm(), 1.0);
}

CMat mgs_orthonormalize(const Eigen::Ref<const CMat>& cols, double drop_rtol)
{
    if (cols.cols() == 0)
        return CMat(cols.rows(), 0);
    double ref = 0.0;
    for (Index j = 0; j < cols.cols(); ++j)
        ref = std::max(ref, cols.col(j).norm());
    if (ref == 0.0)
        return CMat(cols.rows(), 0);

    CMat q(cols.rows(), cols.cols());
    Index kept = 0;
    for (Index j = 0; j < cols.cols(); ++j) {
        CVec w = cols.col(j);
        // two MGS passes; the second absorbs cancellation in the first
        for (int pass = 0; pass < 2; ++pass)
            for (Index k = 0; k < kept; ++k)
                w -= q.col(k) * (q.col(k).dot(w));
        const double nrm = w.norm();
        if (nrm > drop_rtol * ref)
            q.col(kept++) = w / nrm;
    }
    return q.leftCols(kept);
}

} // namespace rct
