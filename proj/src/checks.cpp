#include <rct/checks.hpp>

namespace rct {

namespace {

struct Recorder {
    PropertySummary& summary;
    std::uint64_t seed;

    void residual(const std::string& check, double value, double threshold)
    {
        ++summary.checks_run;
        summary.max_identity_residual = std::max(summary.max_identity_residual, value);
        if (!(value < threshold))
            summary.failures.push_back(PropertyFailure{seed, check, value, threshold});
    }

    void subspace(const std::string& check, double value, double threshold)
    {
        ++summary.checks_run;
        summary.max_subspace_distance = std::max(summary.max_subspace_distance, value);
        if (!(value < threshold))
            summary.failures.push_back(PropertyFailure{seed, check, value, threshold});
    }

    void kernel(const std::string& check, double value, double threshold)
    {
        ++summary.checks_run;
        summary.max_kernel_residual = std::max(summary.max_kernel_residual, value);
        if (!(value < threshold))
            summary.failures.push_back(PropertyFailure{seed, check, value, threshold});
    }

    void integer(const std::string& check, bool pass, double value)
    {
        ++summary.checks_run;
        if (!pass)
            summary.failures.push_back(PropertyFailure{seed, check, value, 0.0});
    }
};

// images of the subspace under all words of exactly the given length
Subspace word_level_image(const OperatorTuple& t, const Subspace& base, int length,
                          const TolerancePolicy& tol)
{
    CMat level = base.basis();
    for (int l = 0; l < length; ++l) {
        CMat next(t.dim(), level.cols() * t.arity());
        for (int i = 0; i < t.arity(); ++i)
            next.middleCols(i * level.cols(), level.cols()) = t.op(i) * level;
        level = std::move(next);
    }
    return column_space(level, tol);
}

void run_defect_identity_checks(const OperatorTuple& t, const PropertyConfig& cfg,
                                Recorder& rec, const TolerancePolicy& tol)
{
    // telescoping identity at both ends of the horizon
    rec.residual("telescoping.n1", defect_telescoping_residual(t, 1), cfg.residual_tol);
    rec.residual("telescoping.horizon", defect_telescoping_residual(t, cfg.horizon),
                 cfg.residual_tol);

    // operator chain I >= Psi(I) >= Psi^2(I) >= ...
    {
        CMat prev = CMat::Identity(t.dim(), t.dim());
        for (int k = 1; k <= 3; ++k) {
            CMat next = cp_map(t, prev);
            rec.residual("cp_chain.step" + std::to_string(k),
                         std::max(0.0, -hermitian_min_eigenvalue(prev - next)),
                         tol.identity_atol);
            prev = std::move(next);
        }
    }

    DefectProfile profile = defect_sequence(t, cfg.horizon, tol);

    // monotone and bounded growth
    for (int n = 1; n <= cfg.horizon; ++n) {
        const Index dn = profile.deltas[static_cast<std::size_t>(n - 1)];
        if (n >= 2)
            rec.integer("deltas.monotone", dn >= profile.deltas[static_cast<std::size_t>(n - 2)],
                        static_cast<double>(dn));
        const long long bound =
            max_defect_index(t.arity(), n, profile.deltas.front(), t.mode());
        rec.integer("deltas.bound", dn <= bound, static_cast<double>(dn));
    }

    // stabilization is permanent
    if (profile.stabilized_at) {
        const Index settled = profile.deltas[static_cast<std::size_t>(*profile.stabilized_at - 1)];
        for (int n = *profile.stabilized_at; n <= cfg.horizon; ++n)
            rec.integer("deltas.stable", profile.deltas[static_cast<std::size_t>(n - 1)] == settled,
                        static_cast<double>(profile.deltas[static_cast<std::size_t>(n - 1)]));
    }

    // purity norms are non-increasing
    PurityReport purity = purity_report(t, cfg.horizon, tol);
    for (std::size_t k = 1; k < purity.norms.size(); ++k)
        rec.residual("purity.monotone",
                     std::max(0.0, purity.norms[k] - purity.norms[k - 1]), 1e-12);

    if (profile.deltas.front() == 0)
        return;

    // join route agrees with the direct route
    for (int n = 1; n <= cfg.subspace_horizon; ++n)
        rec.subspace("join_identity.n" + std::to_string(n),
                     projection_distance(profile.spaces[static_cast<std::size_t>(n - 1)],
                                         defect_space_by_join(t, n, tol)),
                     cfg.subspace_tol);

    // split law D_m = D_n v T^n(D_{m-n})
    for (int m = 2; m <= cfg.subspace_horizon; ++m)
        for (int n = 1; n < m; ++n) {
            Subspace shifted = word_level_image(
                t, profile.spaces[static_cast<std::size_t>(m - n - 1)], n, tol);
            Subspace joined =
                subspace_join(profile.spaces[static_cast<std::size_t>(n - 1)], shifted, tol);
            rec.subspace("split_law.m" + std::to_string(m) + "n" + std::to_string(n),
                         projection_distance(profile.spaces[static_cast<std::size_t>(m - 1)],
                                             joined),
                         cfg.subspace_tol);
        }

    // one-step containment T_i D_n within D_{n+1}
    for (int n = 1; n < cfg.subspace_horizon; ++n) {
        const Subspace& dn = profile.spaces[static_cast<std::size_t>(n - 1)];
        const Subspace& dnext = profile.spaces[static_cast<std::size_t>(n)];
        for (int i = 0; i < t.arity(); ++i)
            for (Index c = 0; c < dn.dim(); ++c)
                rec.subspace("containment.n" + std::to_string(n),
                             subspace_residual(dnext, t.op(i) * dn.basis().col(c)),
                             cfg.containment_tol);
    }
}

void run_kernel_identity_checks(const OperatorTuple& t, const PropertyConfig& cfg,
                                Recorder& rec, const TolerancePolicy& tol)
{
    if (defect_space(t, 1, tol).dim() == 0)
        return;

    PoissonKernel pk = poisson_kernel(t, cfg.poisson_depth, tol);
    rec.kernel("poisson.gram", poisson_gram_residual(t, pk), cfg.residual_tol);
    rec.kernel("poisson.intertwine", poisson_intertwining_residual(t, pk), cfg.residual_tol);

    // adjoint columns against the direct word-image formula
    double adj_worst = 0.0;
    const Index nxi = pk.d1.dim();
    for (Index w = 0; w < pk.fock.dim(); ++w)
        for (Index j = 0; j < nxi; ++j) {
            CVec direct = poisson_adjoint_apply(
                t, pk.fock.basis()[static_cast<std::size_t>(w)], pk.d1.basis().col(j), tol);
            CVec column = pk.k.row(w * nxi + j).adjoint();
            adj_worst = std::max(adj_worst, (direct - column).cwiseAbs().maxCoeff());
        }
    rec.kernel("poisson.adjoint_columns", adj_worst, cfg.residual_tol);
}

void run_tuple_checks(const OperatorTuple& t, const PropertyConfig& cfg, Recorder rec,
                      const TolerancePolicy& tol)
{
    if (cfg.run_defect_checks)
        run_defect_identity_checks(t, cfg, rec, tol);
    if (cfg.run_kernel_checks)
        run_kernel_identity_checks(t, cfg, rec, tol);
}

// a random co-invariant compression of a creation truncation: these have
// degenerate defects, unlike strictly contractive random draws
OperatorTuple random_compression(std::uint64_t seed, const TolerancePolicy& tol)
{
    Rng rng(seed);
    const int arity = rng.uniform_int(2, 3);
    const int depth = 3;
    FockTruncation fock(arity, depth);
    OperatorTuple creation = creation_tuple(arity, depth, tol);

    // invariant subspace generated by a random particle vector
    CVec seed_vec = CVec::Zero(fock.dim());
    for (Index i = 1; i < words_up_to(arity, 1); ++i)
        seed_vec(i) = rng.complex_uniform();
    CMat level(fock.dim(), 1);
    level.col(0) = seed_vec;
    std::vector<CMat> blocks{level};
    for (int l = 0; l < depth - 1; ++l) {
        CMat next(fock.dim(), blocks.back().cols() * arity);
        for (int i = 0; i < arity; ++i)
            next.middleCols(i * blocks.back().cols(), blocks.back().cols()) =
                creation.op(i) * blocks.back();
        blocks.push_back(std::move(next));
    }
    Index total = 0;
    for (const CMat& b : blocks)
        total += b.cols();
    CMat stacked(fock.dim(), total);
    Index at = 0;
    for (const CMat& b : blocks) {
        stacked.middleCols(at, b.cols()) = b;
        at += b.cols();
    }
    Subspace invariant = column_space(stacked, tol);
    Subspace q = null_space(invariant.basis().adjoint(), tol);
    return compress_to_coinvariant(arity, depth, q, tol);
}

} // namespace

PropertySummary run_property_suite(const PropertyConfig& cfg)
{
    TolerancePolicy tol;
    PropertySummary summary;

    for (int i = 0; i < cfg.tuple_count; ++i) {
        const std::uint64_t seed = cfg.seed * 1000003ULL + static_cast<std::uint64_t>(i);
        Rng pick(seed);
        const int arity = pick.uniform_int(1, cfg.max_arity);
        const Index dim = pick.uniform_int(2, static_cast<int>(cfg.max_dim));
        const bool commuting = i % 2 == 0;
        OperatorTuple t = random_contractive_tuple(arity, dim, commuting, seed, tol);
        run_tuple_checks(t, cfg, Recorder{summary, seed}, tol);
        ++summary.tuples_run;
    }

    if (cfg.include_compressions) {
        for (int i = 0; i < 6; ++i) {
            const std::uint64_t seed = cfg.seed * 2000003ULL + static_cast<std::uint64_t>(i);
            OperatorTuple t = random_compression(seed, tol);
            run_tuple_checks(t, cfg, Recorder{summary, seed}, tol);
            ++summary.tuples_run;
        }
    }
    return summary;
}

} // namespace rct
