#include <rct/tuple.hpp>

namespace rct {

OperatorTuple OperatorTuple::validate(std::vector<CMat> matrices, bool commuting,
                                      const TolerancePolicy& tol)
{
    tol.validate();
    if (matrices.empty())
        throw std::invalid_argument("OperatorTuple: need at least one matrix");
    const Index m = matrices.front().rows();
    for (const CMat& a : matrices) {
        if (a.rows() != m || a.cols() != m)
            throw std::invalid_argument("OperatorTuple: matrices must be square and equal-sized");
        if (!all_finite(a))
            throw std::invalid_argument("OperatorTuple: non-finite entries");
    }

    CMat gram = CMat::Zero(m, m);
    for (const CMat& a : matrices)
        gram += a * a.adjoint();
    const double row_norm_sq = hermitian_norm(gram);
    if (row_norm_sq > 1.0 + tol.identity_atol)
        throw std::invalid_argument("OperatorTuple: not a row contraction (||sum T_i T_i^*|| = "
                                    + std::to_string(row_norm_sq) + ")");

    if (commuting) {
        for (std::size_t i = 0; i < matrices.size(); ++i)
            for (std::size_t j = i + 1; j < matrices.size(); ++j) {
                const double c = (matrices[i] * matrices[j] - matrices[j] * matrices[i]).norm();
                if (c > tol.identity_atol)
                    throw std::invalid_argument("OperatorTuple: commutator violation ("
                                                + std::to_string(c) + ")");
            }
    }

    return OperatorTuple(std::move(matrices), commuting, m, std::sqrt(std::max(row_norm_sq, 0.0)));
}

CMat apply_word(const OperatorTuple& t, const Word& f)
{
    CMat prod = CMat::Identity(t.dim(), t.dim());
    for (int letter : f.letters) {
        if (letter < 1 || letter > t.arity())
            throw std::invalid_argument("apply_word: letter outside tuple arity");
        prod = prod * t.op(letter - 1);
    }
    return prod;
}

CMat apply_monomial(const OperatorTuple& t, const MultiIndex& alpha)
{
    if (alpha.arity() != t.arity())
        throw std::invalid_argument("apply_monomial: arity mismatch");
    CMat prod = CMat::Identity(t.dim(), t.dim());
    for (int i = 0; i < alpha.arity(); ++i)
        for (int k = 0; k < alpha.exponents[static_cast<std::size_t>(i)]; ++k)
            prod = prod * t.op(i);
    return prod;
}

CMat cp_map(const OperatorTuple& t, const Eigen::Ref<const CMat>& x)
{
    if (x.rows() != t.dim() || x.cols() != t.dim())
        throw std::invalid_argument("cp_map: argument size mismatch");
    CMat out = CMat::Zero(t.dim(), t.dim());
    for (const CMat& a : t.ops())
        out += a * x * a.adjoint();
    return out;
}

CMat cp_iterate(const OperatorTuple& t, int n)
{
    if (n < 0)
        throw std::invalid_argument("cp_iterate: n must be >= 0");
    CMat x = CMat::Identity(t.dim(), t.dim());
    for (int k = 0; k < n; ++k)
        x = cp_map(t, x);
    return x;
}

CMat defect_operator(const OperatorTuple& t, const TolerancePolicy& tol)
{
    CMat d2 = CMat::Identity(t.dim(), t.dim()) - cp_map(t, CMat::Identity(t.dim(), t.dim()));
    return psd_sqrt(d2, tol);
}

// The gap operators I - Psi^n(I) sit in [0, I]; entries at or below the
// identity tolerance are roundoff from an exactly-zero defect, not rank.
Subspace gap_column_space(const Eigen::Ref<const CMat>& gap, const TolerancePolicy& tol)
{
    if (gap.norm() <= tol.identity_atol)
        return Subspace::zero(gap.rows());
    return column_space(gap, tol);
}

Subspace defect_space(const OperatorTuple& t, int n, const TolerancePolicy& tol)
{
    if (n < 1)
        throw std::invalid_argument("defect_space: n must be >= 1");
    CMat gap = CMat::Identity(t.dim(), t.dim()) - cp_iterate(t, n);
    return gap_column_space(gap, tol);
}

Subspace defect_space_by_join(const OperatorTuple& t, int n, const TolerancePolicy& tol)
{
    if (n < 1)
        throw std::invalid_argument("defect_space_by_join: n must be >= 1");
    Subspace joined = defect_space(t, 1, tol);
    CMat level = joined.basis(); // word images of the first defect basis
    for (int len = 1; len <= n - 1; ++len) {
        CMat next(t.dim(), level.cols() * t.arity());
        for (int i = 0; i < t.arity(); ++i)
            next.middleCols(i * level.cols(), level.cols()) = t.op(i) * level;
        joined = subspace_join(joined, column_space(next, tol), tol);
        level = std::move(next);
    }
    return joined;
}

double defect_telescoping_residual(const OperatorTuple& t, int n)
{
    if (n < 1)
        throw std::invalid_argument("defect_telescoping_residual: n must be >= 1");
    const CMat id = CMat::Identity(t.dim(), t.dim());
    const CMat step = id - cp_map(t, id);
    CMat total = CMat::Zero(t.dim(), t.dim());
    CMat term = step;
    for (int i = 0; i < n; ++i) {
        total += term;
        if (i + 1 < n)
            term = cp_map(t, term);
    }
    return ((id - cp_iterate(t, n)) - total).norm();
}

DefectProfile defect_sequence(const OperatorTuple& t, int n_max, const TolerancePolicy& tol)
{
    if (n_max < 1)
        throw std::invalid_argument("defect_sequence: n_max must be >= 1");
    DefectProfile profile;
    profile.deltas.reserve(static_cast<std::size_t>(n_max));
    profile.spaces.reserve(static_cast<std::size_t>(n_max));

    const CMat id = CMat::Identity(t.dim(), t.dim());
    CMat x = id;
    for (int n = 1; n <= n_max; ++n) {
        x = cp_map(t, x);
        Subspace dn = gap_column_space(id - x, tol);
        profile.deltas.push_back(dn.dim());
        profile.spaces.push_back(std::move(dn));
        if (!profile.stabilized_at && n >= 2
            && profile.deltas[static_cast<std::size_t>(n - 1)]
                   == profile.deltas[static_cast<std::size_t>(n - 2)])
            profile.stabilized_at = n - 1;
    }
    return profile;
}

PurityReport purity_report(const OperatorTuple& t, int n_max, const TolerancePolicy& tol)
{
    if (n_max < 1)
        throw std::invalid_argument("purity_report: n_max must be >= 1");
    tol.validate();
    PurityReport report;
    report.norms.reserve(static_cast<std::size_t>(n_max));
    CMat x = CMat::Identity(t.dim(), t.dim());
    for (int n = 1; n <= n_max; ++n) {
        x = cp_map(t, x);
        report.norms.push_back(hermitian_norm(x));
    }
    report.pure_at_tolerance = report.norms.back() < tol.identity_atol;
    return report;
}

} // namespace rct
