#ifndef RCT_SCENARIOS_HPP
#define RCT_SCENARIOS_HPP
//
// Project     : rct
// Module      : scenarios
// Description : named preset experiments behind the CLI; each runs a
//               fixed construction, asserts its expected outcome, and
//               emits a JSON report plus CSV defect rows
//

#include <rct/json_io.hpp>
#include <rct/model_theta.hpp>

namespace rct {

struct RunOptions {
    std::optional<int> horizon;
    std::uint64_t seed = 1;
    TolerancePolicy tol;
    std::optional<double> suite_tol; // property-suite residual override
};

struct ScenarioResult {
    json report;
    std::vector<std::string> csv_rows; // header first
    bool pass = true;
    std::vector<std::string> messages; // failed assertions
};

struct ScenarioSpec {
    std::string name;
    std::string subcommand;  // which CLI subcommand owns it
    std::string description;
};

const std::vector<ScenarioSpec>& all_scenarios();
bool scenario_exists(const std::string& name);
ScenarioResult run_scenario(const std::string& name, const RunOptions& opt);

/// Nilpotent shift e_i -> e_{i+1} on C^m as a single-operator tuple.
OperatorTuple nilpotent_shift(Index m, const TolerancePolicy& tol = {});

/// Co-invariant complement of the invariant subspace generated by one
/// Fock vector; the standard source of engineered non-maximal pures.
OperatorTuple popescu_quotient(int arity, int depth, const CVec& generator,
                               Subspace* q_out = nullptr,
                               const TolerancePolicy& tol = {});

/// Residual of the kernel-expansion Gram oracle against the closed-form
/// monomial weights, up to the given total degree.
double da_weight_oracle_residual(int arity, int max_degree);

} // namespace rct

#endif
