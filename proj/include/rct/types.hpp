#ifndef RCT_TYPES_HPP
#define RCT_TYPES_HPP
//
// Project     : rct
// Module      : types
// Description : scalar/matrix aliases and the repo-wide tolerance policy
//

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace rct {

using Complex = std::complex<double>;
using CMat    = Eigen::MatrixXcd;
using CVec    = Eigen::VectorXcd;
using RVec    = Eigen::VectorXd;
using Index   = Eigen::Index;

/// Tolerance policy shared by every rank decision and identity check.
/// rank_rtol is a relative singular-value cutoff; identity_atol is the
/// absolute tolerance for exact operator identities.
struct TolerancePolicy {
    double rank_rtol     = 1e-8;
    double identity_atol = 1e-10;

    void validate() const
    {
        if (!(rank_rtol > 0.0 && rank_rtol < 1.0))
            throw std::invalid_argument("TolerancePolicy: rank_rtol must lie in (0,1)");
        if (!(identity_atol > 0.0 && identity_atol < 1.0))
            throw std::invalid_argument("TolerancePolicy: identity_atol must lie in (0,1)");
    }
};

/// true iff every entry is finite (no NaN/Inf)
bool all_finite(const Eigen::Ref<const CMat>& a);

/// max-abs-entry norm of A - A*
double hermitian_residual(const Eigen::Ref<const CMat>& a);

bool is_hermitian(const Eigen::Ref<const CMat>& a, double atol);

/// spectral norm of a Hermitian matrix (max |eigenvalue|)
double hermitian_norm(const Eigen::Ref<const CMat>& a);

/// spectral norm of a general matrix (largest singular value)
double spectral_norm(const Eigen::Ref<const CMat>& a);

/// smallest eigenvalue of a Hermitian matrix
double hermitian_min_eigenvalue(const Eigen::Ref<const CMat>& a);

} // namespace rct

#endif
