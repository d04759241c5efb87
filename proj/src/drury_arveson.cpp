#include <rct/drury_arveson.hpp>
#include <rct/model_theta.hpp>

namespace rct {

long long multinomial(const MultiIndex& alpha)
{
    long long r = 1;
    int total = 0;
    for (int e : alpha.exponents) {
        if (e < 0)
            throw std::invalid_argument("multinomial: negative exponent");
        for (int i = 1; i <= e; ++i)
            r = r * (total + i) / i;
        total += e;
    }
    return r;
}

double da_weight(const MultiIndex& alpha)
{
    return 1.0 / static_cast<double>(multinomial(alpha));
}

DATruncation::DATruncation(int arity, int degree_cap)
    : arity_(arity)
    , degree_cap_(degree_cap)
    , basis_(enumerate_multi_indices(arity, degree_cap))
{
    weights_.reserve(basis_.size());
    for (Index i = 0; i < static_cast<Index>(basis_.size()); ++i) {
        weights_.push_back(da_weight(basis_[static_cast<std::size_t>(i)]));
        index_[basis_[static_cast<std::size_t>(i)].exponents] = i;
    }
}

Index DATruncation::index_of(const MultiIndex& alpha) const
{
    auto it = index_.find(alpha.exponents);
    if (it == index_.end())
        throw std::invalid_argument("DATruncation: monomial outside truncation");
    return it->second;
}

OperatorTuple dshift(int arity, int degree_cap, const TolerancePolicy& tol)
{
    if (degree_cap < 1)
        throw std::invalid_argument("dshift: degree cap must be >= 1");
    DATruncation trunc(arity, degree_cap);
    const Index n = trunc.dim();
    std::vector<CMat> ops(static_cast<std::size_t>(arity), CMat::Zero(n, n));
    for (Index col = 0; col < n; ++col) {
        const MultiIndex& alpha = trunc.basis()[static_cast<std::size_t>(col)];
        if (alpha.degree() >= degree_cap)
            continue;
        for (int i = 0; i < arity; ++i) {
            MultiIndex up = alpha;
            up.exponents[static_cast<std::size_t>(i)] += 1;
            const Index row = trunc.index_of(up);
            ops[static_cast<std::size_t>(i)](row, col) =
                std::sqrt(trunc.weight(row) / trunc.weight(col));
        }
    }
    return OperatorTuple::validate(std::move(ops), true, tol);
}

int Polynomial::degree() const
{
    int deg = 0;
    for (const auto& [alpha, coef] : terms)
        if (coef != Complex(0.0, 0.0))
            deg = std::max(deg, alpha.degree());
    return deg;
}

bool Polynomial::zero() const
{
    for (const auto& [alpha, coef] : terms)
        if (coef != Complex(0.0, 0.0))
            return false;
    return true;
}

Polynomial monomial(int arity, const MultiIndex& alpha, Complex coef)
{
    if (alpha.arity() != arity)
        throw std::invalid_argument("monomial: arity mismatch");
    return Polynomial{arity, {{alpha, coef}}};
}

CVec polynomial_coordinates(const DATruncation& trunc, const Polynomial& p)
{
    if (p.arity != trunc.arity())
        throw std::invalid_argument("polynomial_coordinates: arity mismatch");
    CVec v = CVec::Zero(trunc.dim());
    for (const auto& [alpha, coef] : p.terms) {
        const Index i = trunc.index_of(alpha);
        v(i) += coef * std::sqrt(trunc.weight(i));
    }
    return v;
}

static Polynomial shift_polynomial(const Polynomial& p, const MultiIndex& beta)
{
    Polynomial out{p.arity, {}};
    out.terms.reserve(p.terms.size());
    for (const auto& [alpha, coef] : p.terms) {
        MultiIndex shifted = alpha;
        for (int i = 0; i < p.arity; ++i)
            shifted.exponents[static_cast<std::size_t>(i)]
                += beta.exponents[static_cast<std::size_t>(i)];
        out.terms.emplace_back(std::move(shifted), coef);
    }
    return out;
}

SubmoduleBasis submodule_from_generators(std::vector<Polynomial> generators,
                                         int arity, int degree_cap,
                                         const TolerancePolicy& tol)
{
    tol.validate();
    std::erase_if(generators, [](const Polynomial& p) { return p.zero(); });
    if (generators.empty())
        throw std::invalid_argument("submodule_from_generators: all generators are zero");
    int g = 0;
    for (const Polynomial& p : generators) {
        if (p.arity != arity)
            throw std::invalid_argument("submodule_from_generators: generator arity mismatch");
        g = std::max(g, p.degree());
    }
    if (g > degree_cap)
        throw std::invalid_argument("submodule_from_generators: generator degree exceeds cap");

    SubmoduleBasis s;
    s.trunc = DATruncation(arity, degree_cap);
    s.source = SubmoduleBasis::Source::generators;
    s.generators = std::move(generators);
    s.max_generator_degree = g;
    s.certified_defect_depth = std::max(0, degree_cap - 1 - g);

    std::vector<CVec> cols;
    for (const MultiIndex& beta : enumerate_multi_indices(arity, degree_cap)) {
        for (const Polynomial& p : s.generators) {
            if (beta.degree() + p.degree() > degree_cap)
                continue;
            cols.push_back(polynomial_coordinates(s.trunc, shift_polynomial(p, beta)));
        }
    }
    CMat span(s.trunc.dim(), static_cast<Index>(cols.size()));
    for (Index j = 0; j < span.cols(); ++j)
        span.col(j) = cols[static_cast<std::size_t>(j)];
    s.basis = mgs_orthonormalize(span, tol.rank_rtol);
    return s;
}

SubmoduleBasis rebuild_with_cap(const SubmoduleBasis& s, int degree_cap,
                                const TolerancePolicy& tol)
{
    if (s.source == SubmoduleBasis::Source::generators)
        return submodule_from_generators(s.generators, s.trunc.arity(), degree_cap, tol);
    return theta_submodule(s.theta_zeros, degree_cap, tol);
}

OperatorTuple restricted_tuple(const SubmoduleBasis& s, const TolerancePolicy& tol)
{
    OperatorTuple shift = dshift(s.trunc.arity(), s.trunc.degree_cap(), tol);
    std::vector<CMat> ops;
    ops.reserve(static_cast<std::size_t>(shift.arity()));
    for (int i = 0; i < shift.arity(); ++i)
        ops.push_back(s.basis.adjoint() * shift.op(i) * s.basis);

    double commutator = 0.0;
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            commutator = std::max(commutator, (ops[i] * ops[j] - ops[j] * ops[i]).norm());
    return OperatorTuple::validate(std::move(ops), commutator <= tol.identity_atol, tol);
}

SubmoduleDefect submodule_defect(const SubmoduleBasis& s, int n_max, const TolerancePolicy& tol)
{
    OperatorTuple r = restricted_tuple(s, tol);
    SubmoduleDefect out;
    out.defect_sq = CMat::Identity(r.dim(), r.dim())
        - cp_map(r, CMat::Identity(r.dim(), r.dim()));
    Subspace local = gap_column_space(out.defect_sq, tol);
    out.first_defect_ambient = Subspace(s.trunc.dim(), s.basis * local.basis(), tol);
    out.profile = defect_sequence(r, n_max, tol);
    out.certified_depth = s.certified_defect_depth;
    return out;
}

Delta1Stability submodule_delta1_stability(const SubmoduleBasis& s, const TolerancePolicy& tol)
{
    Delta1Stability probe;
    probe.delta1 = submodule_defect(s, 1, tol).profile.deltas.front();
    SubmoduleBasis grown = rebuild_with_cap(s, s.trunc.degree_cap() + 2, tol);
    probe.delta1_grown = submodule_defect(grown, 1, tol).profile.deltas.front();
    probe.stable = probe.delta1 == probe.delta1_grown;
    return probe;
}

RankOneCheck rank_one_decomposition_check(const SubmoduleBasis& s,
                                          const std::vector<Polynomial>& phis,
                                          const TolerancePolicy& tol)
{
    if (phis.empty())
        throw std::invalid_argument("rank_one_decomposition_check: no candidates");
    int g_phi = 0;
    for (const Polynomial& phi : phis)
        g_phi = std::max(g_phi, phi.degree());

    RankOneCheck check;
    check.interior_degree = s.trunc.degree_cap() - g_phi;

    OperatorTuple shift = dshift(s.trunc.arity(), s.trunc.degree_cap(), tol);
    const Index n = s.trunc.dim();

    // interior cut: monomials of degree <= degree_cap - g_phi
    CMat interior = CMat::Zero(n, n);
    for (Index i = 0; i < n; ++i)
        if (s.trunc.basis()[static_cast<std::size_t>(i)].degree() <= check.interior_degree)
            interior(i, i) = 1.0;

    CMat mult_sum = CMat::Zero(n, n);
    CMat rank_one_sum = CMat::Zero(n, n);
    for (const Polynomial& phi : phis) {
        CMat m_phi = CMat::Zero(n, n);
        for (const auto& [alpha, coef] : phi.terms)
            m_phi += coef * apply_monomial(shift, alpha);
        mult_sum += m_phi * m_phi.adjoint();
        CVec v = polynomial_coordinates(s.trunc, phi);
        rank_one_sum += v * v.adjoint();
    }

    const CMat p_s = s.basis * s.basis.adjoint();
    check.projection_residual = (interior * (p_s - mult_sum) * interior).norm();

    OperatorTuple r = restricted_tuple(s, tol);
    const CMat d2_ambient = s.basis
        * (CMat::Identity(r.dim(), r.dim()) - cp_map(r, CMat::Identity(r.dim(), r.dim())))
        * s.basis.adjoint();
    check.defect_residual = (interior * (d2_ambient - rank_one_sum) * interior).norm();
    return check;
}

MaximalityVerdict submodule_maximality_experiment(const SubmoduleBasis& s, int horizon,
                                                  const TolerancePolicy& tol)
{
    if (horizon < 1)
        throw std::invalid_argument("submodule_maximality_experiment: horizon must be >= 1");
    if (horizon > s.certified_defect_depth)
        throw std::invalid_argument("submodule_maximality_experiment: horizon "
                                    + std::to_string(horizon) + " exceeds certified depth "
                                    + std::to_string(s.certified_defect_depth));
    Delta1Stability probe = submodule_delta1_stability(s, tol);
    if (!probe.stable)
        throw std::runtime_error("submodule_maximality_experiment: first defect dimension "
                                 "does not stabilize under cap growth ("
                                 + std::to_string(probe.delta1) + " -> "
                                 + std::to_string(probe.delta1_grown)
                                 + "); no verdict issued");
    return is_maximal_uncapped(restricted_tuple(s, tol), horizon, tol);
}

Index submodule_poisson_test(const SubmoduleBasis& s, int max_degree,
                             const TolerancePolicy& tol)
{
    if (max_degree < 0)
        throw std::invalid_argument("submodule_poisson_test: negative degree");
    if (max_degree > s.certified_defect_depth)
        throw std::invalid_argument("submodule_poisson_test: degree exceeds certified depth");

    OperatorTuple r = restricted_tuple(s, tol);
    const CMat id = CMat::Identity(r.dim(), r.dim());
    const CMat d_op = psd_sqrt(id - cp_map(r, id), tol);
    Subspace d1 = gap_column_space(id - cp_map(r, id), tol);
    if (d1.dim() == 0)
        throw no_defect_error("submodule_poisson_test: restriction tuple has no defect");

    const CMat seeds = d_op * d1.basis();
    std::vector<MultiIndex> alphas = enumerate_multi_indices(r.arity(), max_degree);
    CMat columns(r.dim(), static_cast<Index>(alphas.size()) * seeds.cols());
    Index col = 0;
    for (const MultiIndex& alpha : alphas) {
        const CMat r_alpha = apply_monomial(r, alpha);
        for (Index j = 0; j < seeds.cols(); ++j)
            columns.col(col++) = r_alpha * seeds.col(j);
    }
    return columns.cols() - numeric_rank(columns, tol);
}

} // namespace rct
