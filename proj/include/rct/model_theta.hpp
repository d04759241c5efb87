#ifndef RCT_MODEL_THETA_HPP
#define RCT_MODEL_THETA_HPP
//
// Project     : rct
// Module      : model_theta
// Description : finite Blaschke products on the disc, truncated model
//               spaces H^2 ⊖ θH^2 with the compressed shift, and the
//               θH^2 submodule construction
//

#include <rct/drury_arveson.hpp>

namespace rct {

/// Taylor coefficients (ascending, n_terms of them) of the Blaschke
/// product with the given zero list: θ(z) = Π (z - a_j) / (1 - conj(a_j) z).
std::vector<Complex> blaschke_taylor(const std::vector<Complex>& zeros, int n_terms);

/// Model space of a finite Blaschke product at truncation degree N.
struct ModelSpaceTheta {
    std::vector<Complex> zeros;
    int degree_cap = 0;
    std::vector<Complex> taylor;            // θ's coefficients to degree N
    Subspace basis = Subspace::zero(0);     // H_theta inside C^{N+1}
    CMat compression;                       // P M_z restricted, in the model basis
};

/// Requires every zero strictly inside the disc, at least one zero, and
/// degree_cap >= 2 * degree(θ). The model dimension equals degree(θ).
ModelSpaceTheta blaschke_model(const std::vector<Complex>& zeros, int degree_cap,
                               const TolerancePolicy& tol = {});

OperatorTuple model_tuple(const ModelSpaceTheta& model, const TolerancePolicy& tol = {});

/// Max over i <= i_max of the distance between the direct projection
/// P_{H_theta} z^i and its closed-form expression from θ's Taylor data.
double model_vector_residual(const ModelSpaceTheta& model, int i_max);

/// Truncation of the submodule θH^2 of the Hardy space (d = 1). Columns
/// near the truncation frontier are discarded so the retained basis is
/// tail-clean at the working tolerance.
SubmoduleBasis theta_submodule(const std::vector<Complex>& zeros, int degree_cap,
                               const TolerancePolicy& tol = {});

struct QuotientThetaReport {
    Index model_dim = 0;
    int minimal_degree = 0;
    std::optional<int> annihilator_degree;
    Eigen::VectorXcd minimal_poly;    // monic, ascending
    double numerator_mismatch = 0.0;  // distance to Π (z - a_j), coefficientwise
    bool aligned = false;
};

/// Minimal-polynomial experiment for the compressed shift on H_theta:
/// the minimal degree must equal the model dimension, the annihilator
/// degree on the first defect space must agree, and the minimal
/// polynomial must be the Blaschke numerator.
QuotientThetaReport quotient_theta_maximality(const std::vector<Complex>& zeros,
                                              int degree_cap, int horizon,
                                              const TolerancePolicy& tol = {});

} // namespace rct

#endif
