#ifndef RCT_TUPLE_HPP
#define RCT_TUPLE_HPP
//
// Project     : rct
// Module      : tuple
// Description : contractive operator tuples, the associated completely
//               positive map, defect operators/spaces/sequences
//

#include <optional>
#include <vector>

#include <rct/numeric.hpp>
#include <rct/words.hpp>

namespace rct {

/// Thrown by operations that require a nonzero first defect space.
struct no_defect_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A d-tuple T = (T_1,...,T_d) of operators on C^m with
/// sum_i T_i T_i^* <= I. Immutable once validated.
class OperatorTuple {
public:
    /// Validates sizes, finiteness, the row-contraction bound, and (when
    /// the flag is set) pairwise commutators.
    static OperatorTuple validate(std::vector<CMat> matrices, bool commuting,
                                  const TolerancePolicy& tol = {});

    Index dim() const { return dim_; }
    int arity() const { return static_cast<int>(ops_.size()); }
    bool commuting() const { return commuting_; }
    Mode mode() const { return commuting_ ? Mode::commuting : Mode::non_commuting; }
    double row_norm() const { return row_norm_; }

    const CMat& op(int i) const { return ops_.at(static_cast<std::size_t>(i)); }
    const std::vector<CMat>& ops() const { return ops_; }

private:
    OperatorTuple(std::vector<CMat> ops, bool commuting, Index dim, double row_norm)
        : ops_(std::move(ops)), commuting_(commuting), dim_(dim), row_norm_(row_norm) {}

    std::vector<CMat> ops_;
    bool commuting_;
    Index dim_;
    double row_norm_;
};

/// T_f = T_{f(1)} T_{f(2)} ... T_{f(k)}; the empty word gives I.
CMat apply_word(const OperatorTuple& t, const Word& f);

/// T_1^{a_1} ... T_d^{a_d}
CMat apply_monomial(const OperatorTuple& t, const MultiIndex& alpha);

/// The completely positive map X -> sum_i T_i X T_i^*.
CMat cp_map(const OperatorTuple& t, const Eigen::Ref<const CMat>& x);

/// n-fold iterate of the cp map applied to the identity.
CMat cp_iterate(const OperatorTuple& t, int n);

/// D_T = (I - cp_map(T, I))^{1/2}
CMat defect_operator(const OperatorTuple& t, const TolerancePolicy& tol = {});

/// Column space of a defect gap operator; a gap whose norm is at or
/// below identity_atol counts as an exactly-zero defect up to roundoff.
Subspace gap_column_space(const Eigen::Ref<const CMat>& gap, const TolerancePolicy& tol = {});

/// Column space of I - cp_iterate(T, n); the n-th defect space.
Subspace defect_space(const OperatorTuple& t, int n, const TolerancePolicy& tol = {});

/// The same space assembled as the join of word images of the first
/// defect space; an independent route kept for cross-checking.
Subspace defect_space_by_join(const OperatorTuple& t, int n, const TolerancePolicy& tol = {});

/// Frobenius residual of I - Psi^n(I) against the telescoping sum
/// sum_{i<n} Psi^i(I - Psi(I)).
double defect_telescoping_residual(const OperatorTuple& t, int n);

struct DefectProfile {
    std::vector<Index> deltas;
    std::vector<Subspace> spaces;
    std::optional<int> stabilized_at; // first n with delta_n = delta_{n+1}
};

DefectProfile defect_sequence(const OperatorTuple& t, int n_max, const TolerancePolicy& tol = {});

struct PurityReport {
    std::vector<double> norms; // ||Psi^n(I)|| for n = 1..n_max
    bool pure_at_tolerance;    // final norm < identity_atol
};

PurityReport purity_report(const OperatorTuple& t, int n_max, const TolerancePolicy& tol = {});

} // namespace rct

#endif
