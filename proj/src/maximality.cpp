#include <rct/maximality.hpp>

namespace rct {

FamilyMatrix defect_family(const OperatorTuple& t, const Subspace& d1,
                           int max_degree, Mode mode)
{
    if (d1.ambient_dim() != t.dim())
        throw std::invalid_argument("defect_family: defect space ambient mismatch");
    if (d1.dim() == 0)
        throw no_defect_error("defect_family: first defect space is zero");
    if (max_degree < 0)
        throw std::invalid_argument("defect_family: negative degree");

    const Index nxi = d1.dim();
    FamilyMatrix fam;

    if (mode == Mode::non_commuting) {
        std::vector<Word> words = enumerate_words(t.arity(), max_degree);
        fam.columns.resize(t.dim(), static_cast<Index>(words.size()) * nxi);
        fam.labels.reserve(words.size() * static_cast<std::size_t>(nxi));
        int prev_len = -1;
        Index col = 0;
        for (const Word& f : words) {
            if (f.length() != prev_len) {
                fam.degree_offsets.push_back(col);
                prev_len = f.length();
            }
            CMat tf = apply_word(t, f);
            for (Index j = 0; j < nxi; ++j) {
                fam.columns.col(col++) = tf * d1.basis().col(j);
                fam.labels.push_back(FamilyTerm{f, MultiIndex{}, static_cast<int>(j)});
            }
        }
        fam.degree_offsets.push_back(col);
    } else {
        std::vector<MultiIndex> alphas = enumerate_multi_indices(t.arity(), max_degree);
        fam.columns.resize(t.dim(), static_cast<Index>(alphas.size()) * nxi);
        fam.labels.reserve(alphas.size() * static_cast<std::size_t>(nxi));
        int prev_deg = -1;
        Index col = 0;
        for (const MultiIndex& alpha : alphas) {
            if (alpha.degree() != prev_deg) {
                fam.degree_offsets.push_back(col);
                prev_deg = alpha.degree();
            }
            CMat ta = apply_monomial(t, alpha);
            for (Index j = 0; j < nxi; ++j) {
                fam.columns.col(col++) = ta * d1.basis().col(j);
                fam.labels.push_back(FamilyTerm{Word{}, alpha, static_cast<int>(j)});
            }
        }
        fam.degree_offsets.push_back(col);
    }
    return fam;
}

namespace {

// Null vector of the columns, normalized to unit norm with the first
// significant coefficient (in canonical column order) real positive.
std::vector<WitnessTerm> null_witness(const FamilyMatrix& fam, Index n_cols,
                                      double* residual_out)
{
    CMat block = fam.columns.leftCols(n_cols);
    Eigen::JacobiSVD<CMat> svd(block, Eigen::ComputeFullV);
    CVec c = svd.matrixV().col(n_cols - 1);
    c.normalize();
    const double cmax = c.cwiseAbs().maxCoeff();
    for (Index i = 0; i < c.size(); ++i) {
        if (std::abs(c(i)) > 1e-8 * cmax) {
            c *= std::conj(c(i)) / std::abs(c(i));
            break;
        }
    }
    if (residual_out)
        *residual_out = (block * c).norm();
    std::vector<WitnessTerm> witness;
    witness.reserve(static_cast<std::size_t>(c.size()));
    for (Index i = 0; i < c.size(); ++i)
        witness.push_back(WitnessTerm{fam.labels[static_cast<std::size_t>(i)], c(i)});
    return witness;
}

MaximalityVerdict verdict_impl(const OperatorTuple& t, int horizon,
                               std::optional<Index> ambient_cap, const TolerancePolicy& tol)
{
    if (horizon < 1)
        throw std::invalid_argument("is_maximal: horizon must be >= 1");

    DefectProfile profile = defect_sequence(t, horizon, tol);
    const Index delta1 = profile.deltas.front();
    if (delta1 == 0)
        throw no_defect_error("is_maximal: tuple has no defect (row isometry)");

    MaximalityVerdict v;
    v.mode = t.mode();
    v.horizon = horizon;
    v.deltas = profile.deltas;
    v.is_maximal = true;

    for (int n = 1; n <= horizon; ++n) {
        const long long uncapped = max_defect_index(t.arity(), n, delta1, v.mode);
        long long expected = uncapped;
        if (ambient_cap && expected > *ambient_cap) {
            expected = *ambient_cap;
            v.cap_limited = true;
        }
        v.expected.push_back(expected);
        const Index delta_n = profile.deltas[static_cast<std::size_t>(n - 1)];
        if (delta_n < expected)
            v.is_maximal = false;
        if (!v.departure_index && delta_n < uncapped)
            v.departure_index = n;
    }

    if (v.departure_index) {
        FamilyMatrix fam = defect_family(t, profile.spaces.front(), *v.departure_index - 1, v.mode);
        v.witness = null_witness(fam, fam.columns.cols(), &v.witness_residual);
    }
    return v;
}

} // namespace

MaximalityVerdict is_maximal(const OperatorTuple& t, int horizon, const TolerancePolicy& tol)
{
    return verdict_impl(t, horizon, t.dim(), tol);
}

MaximalityVerdict is_maximal_uncapped(const OperatorTuple& t, int horizon,
                                      const TolerancePolicy& tol)
{
    return verdict_impl(t, horizon, std::nullopt, tol);
}

std::optional<AnnihilatorResult> find_annihilator(const OperatorTuple& t, int max_degree,
                                                  Mode mode, const TolerancePolicy& tol)
{
    Subspace d1 = defect_space(t, 1, tol);
    if (d1.dim() == 0)
        throw no_defect_error("find_annihilator: tuple has no defect");
    FamilyMatrix fam = defect_family(t, d1, max_degree, mode);

    std::vector<double> ratios;
    for (int k = 0; k <= max_degree; ++k) {
        const Index n_cols = fam.degree_offsets[static_cast<std::size_t>(k) + 1];
        Eigen::JacobiSVD<CMat> svd(fam.columns.leftCols(n_cols));
        const RVec& sigma = svd.singularValues();
        const bool deficient = n_cols > t.dim()
            || sigma(sigma.size() - 1) <= tol.rank_rtol * sigma(0);
        if (deficient) {
            AnnihilatorResult res;
            res.degree = k;
            res.coefficients = null_witness(fam, n_cols, &res.residual);
            res.certified_ratios = std::move(ratios);
            return res;
        }
        ratios.push_back(sigma(sigma.size() - 1) / sigma(0));
    }
    return std::nullopt;
}

DepartureAlignment departure_alignment(const OperatorTuple& t, int horizon,
                                       const TolerancePolicy& tol)
{
    Subspace d1 = defect_space(t, 1, tol);
    if (d1.dim() != 1)
        throw std::invalid_argument("departure_alignment: requires a one-dimensional first defect space");

    DepartureAlignment rep;
    MaximalityVerdict v = is_maximal_uncapped(t, horizon, tol);
    rep.departure_index = v.departure_index;
    if (auto ann = find_annihilator(t, horizon - 1, t.mode(), tol))
        rep.annihilator_degree = ann->degree;

    if (!rep.departure_index && !rep.annihilator_degree)
        rep.consistent = true;
    else if (rep.departure_index && rep.annihilator_degree)
        rep.consistent = (*rep.departure_index == *rep.annihilator_degree + 1);
    return rep;
}

Eigen::VectorXcd minimal_polynomial(const Eigen::Ref<const CMat>& a, const TolerancePolicy& tol)
{
    tol.validate();
    if (a.rows() != a.cols() || a.rows() == 0)
        throw std::invalid_argument("minimal_polynomial: matrix must be square and nonempty");
    const Index m = a.rows();

    // powers of a, flattened into columns
    CMat powers(m * m, m + 1);
    CMat p = CMat::Identity(m, m);
    for (Index k = 0; k <= m; ++k) {
        powers.col(k) = Eigen::Map<const CVec>(p.data(), m * m);
        if (k < m)
            p = p * a;
    }

    for (Index k = 1; k <= m; ++k) {
        if (numeric_rank(powers.leftCols(k + 1), tol) < k + 1) {
            // monic dependence: a^k = sum_{j<k} x_j a^j
            CVec x = powers.leftCols(k).bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV)
                         .solve(powers.col(k));
            Eigen::VectorXcd coeffs(k + 1);
            coeffs.head(k) = -x;
            coeffs(k) = Complex(1.0, 0.0);
            return coeffs;
        }
    }
    throw std::logic_error("minimal_polynomial: no dependence up to the ambient dimension");
}

Eigen::VectorXcd minimal_polynomial(const OperatorTuple& t, const TolerancePolicy& tol)
{
    if (t.arity() != 1)
        throw std::invalid_argument("minimal_polynomial: requires a single operator");
    return minimal_polynomial(t.op(0), tol);
}

} // namespace rct
