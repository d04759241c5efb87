#ifndef RCT_CHECKS_HPP
#define RCT_CHECKS_HPP
//
// Project     : rct
// Module      : checks
// Description : randomized invariant battery over seeded tuples: the
//               telescoping identity, defect-space join/split laws,
//               monotonicity and growth bounds, kernel identities
//

#include <string>

#include <rct/fock.hpp>
#include <rct/random.hpp>

namespace rct {

struct PropertyConfig {
    std::uint64_t seed = 1u;
    int tuple_count = 50;
    int max_arity = 3;
    Index max_dim = 8;
    int horizon = 5;
    int subspace_horizon = 4;
    int poisson_depth = 4;
    double residual_tol = 1e-10;
    double subspace_tol = 1e-7;
    double containment_tol = 1e-8;
    bool include_compressions = true;
    bool run_defect_checks = true; // telescoping, join/split, monotonicity
    bool run_kernel_checks = true; // gram, adjoint columns, intertwining
};

struct PropertyFailure {
    std::uint64_t seed = 0;
    std::string check;
    double value = 0.0;
    double threshold = 0.0;
};

struct PropertySummary {
    int tuples_run = 0;
    long long checks_run = 0;
    std::vector<PropertyFailure> failures;
    double max_identity_residual = 0.0;
    double max_subspace_distance = 0.0;
    double max_kernel_residual = 0.0;

    bool ok() const { return failures.empty(); }
};

PropertySummary run_property_suite(const PropertyConfig& cfg);

} // namespace rct

#endif
