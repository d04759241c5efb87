#include <rct/types.hpp>

namespace rct {

bool all_finite(const Eigen::Ref<const CMat>& a)
{
    return a.allFinite();
}

double hermitian_residual(const Eigen::Ref<const CMat>& a)
{
    if (a.rows() != a.cols())
        return std::numeric_limits<double>::infinity();
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Eigen::Ref<const CMat>& a, double atol)
{
    if (a.rows() != a.cols())
        return false;
    if (a.rows() == 0)
        return true;
    return hermitian_residual(a) <= atol;
}

double hermitian_norm(const Eigen::Ref<const CMat>& a)
{
    if (a.rows() == 0)
        return 0.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_norm(const Eigen::Ref<const CMat>& a)
{
    if (a.rows() == 0 || a.cols() == 0)
        return 0.0;
    Eigen::JacobiSVD<CMat> svd(a);
    return svd.singularValues()(0);
}

double hermitian_min_eigenvalue(const Eigen::Ref<const CMat>& a)
{
    if (a.rows() == 0)
        return 0.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace rct
