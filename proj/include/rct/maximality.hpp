#ifndef RCT_MAXIMALITY_HPP
#define RCT_MAXIMALITY_HPP
//
// Project     : rct
// Module      : maximality
// Description : maximality verdicts, annihilating polynomials on the
//               first defect space, departure/degree alignment, and
//               minimal polynomials of single contractions
//

#include <rct/tuple.hpp>

namespace rct {

/// Label of one column in the defect family {T_f xi_j} (word mode) or
/// {T^alpha xi_j} (monomial mode).
struct FamilyTerm {
    Word word;        // meaningful in non-commuting mode
    MultiIndex alpha; // meaningful in commuting mode
    int xi_index = 0; // which basis vector of the first defect space
};

struct WitnessTerm {
    FamilyTerm term;
    Complex coef;
};

/// Columns T_f xi_j (f over words of length <= max_degree, canonical
/// order) or T^alpha xi_j (commuting mode), xi_j over d1's basis.
/// degree_offsets[k] is the first column of degree k; a trailing entry
/// holds the total column count.
struct FamilyMatrix {
    CMat columns;
    std::vector<FamilyTerm> labels;
    std::vector<Index> degree_offsets;
};

FamilyMatrix defect_family(const OperatorTuple& t, const Subspace& d1,
                           int max_degree, Mode mode);

struct MaximalityVerdict {
    bool is_maximal = false;     // Def-style verdict with the finite-dimensional cap
    Mode mode = Mode::non_commuting;
    int horizon = 0;
    std::optional<int> departure_index; // first n with delta_n below the uncapped count
    bool cap_limited = false;           // the ambient dimension capped some expected value
    std::vector<WitnessTerm> witness;   // dependence among the family at the departure step
    double witness_residual = 0.0;
    std::vector<Index> deltas;
    std::vector<long long> expected;    // capped expected sequence
};

/// Verdict with the ambient-dimension cap (finite-dimensional rule).
MaximalityVerdict is_maximal(const OperatorTuple& t, int horizon,
                             const TolerancePolicy& tol = {});

/// Verdict against the uncapped growth counts; used for certified
/// truncations of infinite-dimensional operators, where the truncated
/// ambient dimension is meaningless.
MaximalityVerdict is_maximal_uncapped(const OperatorTuple& t, int horizon,
                                      const TolerancePolicy& tol = {});

struct AnnihilatorResult {
    int degree = 0;
    std::vector<WitnessTerm> coefficients;
    double residual = 0.0;                  // norm of the combined family vector
    std::vector<double> certified_ratios;   // smallest/largest sigma at each full-rank degree
};

/// First degree k <= max_degree at which the defect family becomes
/// linearly dependent, with a normalized dependence vector; nullopt if
/// the family stays full rank through max_degree.
std::optional<AnnihilatorResult> find_annihilator(const OperatorTuple& t, int max_degree,
                                                  Mode mode, const TolerancePolicy& tol = {});

struct DepartureAlignment {
    std::optional<int> departure_index;   // uncapped shortfall step
    std::optional<int> annihilator_degree;
    bool consistent = false;              // both absent, or departure = degree + 1
};

/// Requires a one-dimensional first defect space.
DepartureAlignment departure_alignment(const OperatorTuple& t, int horizon,
                                       const TolerancePolicy& tol = {});

/// Minimal polynomial of a square matrix, monic, coefficients ascending.
Eigen::VectorXcd minimal_polynomial(const Eigen::Ref<const CMat>& a,
                                    const TolerancePolicy& tol = {});

/// Single-contraction wrapper; throws unless t.arity() == 1.
Eigen::VectorXcd minimal_polynomial(const OperatorTuple& t,
                                    const TolerancePolicy& tol = {});

} // namespace rct

#endif
