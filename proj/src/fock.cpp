#include <rct/fock.hpp>

namespace rct {

FockTruncation::FockTruncation(int arity, int depth)
    : arity_(arity)
    , depth_(depth)
    , basis_(enumerate_words(arity, depth))
{
    for (Index i = 0; i < static_cast<Index>(basis_.size()); ++i)
        index_[basis_[static_cast<std::size_t>(i)].letters] = i;
}

Index FockTruncation::index_of(const Word& f) const
{
    auto it = index_.find(f.letters);
    if (it == index_.end())
        throw std::invalid_argument("FockTruncation: word outside truncation");
    return it->second;
}

OperatorTuple creation_tuple(int arity, int depth, const TolerancePolicy& tol)
{
    FockTruncation fock(arity, depth);
    const Index n = fock.dim();
    std::vector<CMat> ops(static_cast<std::size_t>(arity), CMat::Zero(n, n));
    for (Index col = 0; col < n; ++col) {
        const Word& f = fock.basis()[static_cast<std::size_t>(col)];
        if (f.length() >= depth)
            continue;
        for (int i = 1; i <= arity; ++i) {
            Word shifted;
            shifted.letters.reserve(f.letters.size() + 1);
            shifted.letters.push_back(i);
            shifted.letters.insert(shifted.letters.end(), f.letters.begin(), f.letters.end());
            ops[static_cast<std::size_t>(i - 1)](fock.index_of(shifted), col) = Complex(1.0, 0.0);
        }
    }
    return OperatorTuple::validate(std::move(ops), arity == 1, tol);
}

Subspace particle_space(const FockTruncation& fock, int n)
{
    if (n < 0 || n > fock.depth())
        throw std::invalid_argument("particle_space: level outside truncation");
    const Index count = words_up_to(fock.arity(), n);
    CMat basis = CMat::Zero(fock.dim(), count);
    basis.topRows(count) = CMat::Identity(count, count);
    return Subspace(fock.dim(), std::move(basis));
}

OperatorTuple compress_to_coinvariant(int arity, int depth, const Subspace& q,
                                      const TolerancePolicy& tol)
{
    OperatorTuple s = creation_tuple(arity, depth, tol);
    if (q.ambient_dim() != s.dim())
        throw std::invalid_argument("compress_to_coinvariant: subspace ambient mismatch");
    if (q.dim() == 0)
        throw std::invalid_argument("compress_to_coinvariant: zero subspace");

    const CMat proj_off = CMat::Identity(s.dim(), s.dim()) - q.projection();
    for (int i = 0; i < arity; ++i) {
        const double residual = (proj_off * (s.op(i).adjoint() * q.basis())).norm();
        if (residual > tol.identity_atol)
            throw std::invalid_argument("compress_to_coinvariant: subspace not co-invariant"
                                        " (residual " + std::to_string(residual) + ")");
    }

    std::vector<CMat> ops;
    ops.reserve(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i)
        ops.push_back(q.basis().adjoint() * s.op(i) * q.basis());
    return OperatorTuple::validate(std::move(ops), arity == 1, tol);
}

PoissonKernel poisson_kernel(const OperatorTuple& t, int depth, const TolerancePolicy& tol)
{
    if (depth < 0)
        throw std::invalid_argument("poisson_kernel: negative depth");
    const CMat id = CMat::Identity(t.dim(), t.dim());
    const CMat d2 = id - cp_map(t, id);
    Subspace d1 = gap_column_space(d2, tol);
    if (d1.dim() == 0)
        throw no_defect_error("poisson_kernel: tuple has no defect");
    const CMat d_op = psd_sqrt(d2, tol);

    FockTruncation fock(t.arity(), depth);
    const Index nxi = d1.dim();
    const Index n_words = fock.dim();

    // T_f for every basis word, built along the prefix recursion
    std::vector<CMat> word_ops(static_cast<std::size_t>(n_words));
    word_ops[0] = id;
    for (Index w = 1; w < n_words; ++w) {
        const Word& f = fock.basis()[static_cast<std::size_t>(w)];
        Word tail{std::vector<int>(f.letters.begin() + 1, f.letters.end())};
        word_ops[static_cast<std::size_t>(w)] =
            t.op(f.letters.front() - 1) * word_ops[static_cast<std::size_t>(fock.index_of(tail))];
    }

    PoissonKernel pk{CMat(n_words * nxi, t.dim()), depth, d1, fock};
    const CMat row_core = d1.basis().adjoint() * d_op;
    for (Index w = 0; w < n_words; ++w)
        pk.k.middleRows(w * nxi, nxi) = row_core * word_ops[static_cast<std::size_t>(w)].adjoint();
    return pk;
}

CVec poisson_adjoint_apply(const OperatorTuple& t, const Word& f,
                           const Eigen::Ref<const CVec>& xi, const TolerancePolicy& tol)
{
    if (xi.size() != t.dim())
        throw std::invalid_argument("poisson_adjoint_apply: vector size mismatch");
    return apply_word(t, f) * (defect_operator(t, tol) * xi);
}

Index kernel_intersection_dim(const PoissonKernel& pk, int n, const TolerancePolicy& tol)
{
    if (n < 0 || n > pk.depth)
        throw std::invalid_argument("kernel_intersection_dim: level outside truncation");
    const Index rows = words_up_to(pk.fock.arity(), n) * pk.d1.dim();
    const CMat block = pk.k.topRows(rows);
    return rows - numeric_rank(block, tol);
}

Index kernel_intersection_dim(const OperatorTuple& t, int n, int depth,
                              const TolerancePolicy& tol)
{
    if (n > depth)
        throw std::invalid_argument("kernel_intersection_dim: level exceeds depth");
    return kernel_intersection_dim(poisson_kernel(t, depth, tol), n, tol);
}

double poisson_gram_residual(const OperatorTuple& t, const PoissonKernel& pk)
{
    const CMat id = CMat::Identity(t.dim(), t.dim());
    return (pk.k.adjoint() * pk.k - (id - cp_iterate(t, pk.depth + 1))).norm();
}

double poisson_intertwining_residual(const OperatorTuple& t, const PoissonKernel& pk)
{
    if (pk.depth == 0)
        return 0.0;
    const Index nxi = pk.d1.dim();
    const Index inner_words = words_up_to(pk.fock.arity(), pk.depth - 1);
    double worst = 0.0;
    for (int i = 1; i <= t.arity(); ++i) {
        const CMat lhs = pk.k * t.op(i - 1).adjoint();
        double sq = 0.0;
        for (Index w = 0; w < inner_words; ++w) {
            Word shifted;
            const Word& f = pk.fock.basis()[static_cast<std::size_t>(w)];
            shifted.letters.reserve(f.letters.size() + 1);
            shifted.letters.push_back(i);
            shifted.letters.insert(shifted.letters.end(), f.letters.begin(), f.letters.end());
            const Index target = pk.fock.index_of(shifted);
            sq += (lhs.middleRows(w * nxi, nxi) - pk.k.middleRows(target * nxi, nxi))
                      .squaredNorm();
        }
        worst = std::max(worst, std::sqrt(sq));
    }
    return worst;
}

BatteryReport maximality_battery(const OperatorTuple& t, int horizon,
                                 const CompressionData* compression,
                                 const TolerancePolicy& tol)
{
    if (horizon < 1)
        throw std::invalid_argument("maximality_battery: horizon must be >= 1");

    BatteryReport report;
    report.delta1 = defect_space(t, 1, tol).dim();

    const int purity_horizon = std::max<int>(horizon + 1, static_cast<int>(t.dim()));
    PurityReport purity = purity_report(t, purity_horizon, tol);
    report.purity_final = purity.norms.back();

    if (report.delta1 == 0) {
        report.skip_reason = "tuple has no defect";
        return report;
    }
    if (!purity.pure_at_tolerance) {
        report.skip_reason = "tuple is not pure at tolerance";
        return report;
    }
    report.hypotheses_ok = true;

    // degree window in which the family count fits the ambient dimension;
    // beyond it every finite tuple is forced into a dependence
    for (int k = 0; k <= horizon - 1; ++k)
        if (words_up_to(t.arity(), k) * report.delta1 <= t.dim())
            report.window.push_back(k);
    const int k_max = report.window.back();

    report.maximal = is_maximal(t, horizon, tol).is_maximal;
    report.annihilator_free = !find_annihilator(t, k_max, Mode::non_commuting, tol).has_value();

    PoissonKernel pk = poisson_kernel(t, k_max, tol);
    report.kernel_trivial = true;
    for (int k : report.window)
        if (kernel_intersection_dim(pk, k, tol) != 0)
            report.kernel_trivial = false;

    report.coherent = (report.maximal == report.annihilator_free)
        && (report.maximal == report.kernel_trivial);

    if (compression) {
        report.compression_checked = true;
        report.compression_consistent = true;
        const CMat qrows = compression->q.basis().adjoint();
        for (int k = 0; k <= horizon - 1; ++k) {
            if (k > compression->fock.depth())
                break;
            const Index count = words_up_to(compression->fock.arity(), k);
            report.compression_ranks.push_back(numeric_rank(qrows.leftCols(count), tol));
            report.compression_expected.push_back(count * report.delta1);
        }
        bool all_match = true;
        bool any_short = false;
        for (std::size_t j = 0; j < report.compression_ranks.size(); ++j) {
            const int k = static_cast<int>(j);
            if (k > k_max || report.compression_expected[j] > t.dim())
                continue;
            if (report.compression_ranks[j] != report.compression_expected[j])
                all_match = false;
            if (report.compression_ranks[j] < report.compression_expected[j])
                any_short = true;
        }
        report.compression_consistent = report.maximal ? all_match : any_short;
        report.coherent = report.coherent && report.compression_consistent;
    }
    return report;
}

} // namespace rct
