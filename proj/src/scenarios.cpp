#include <rct/scenarios.hpp>

#include <functional>
#include <sstream>

namespace rct {

OperatorTuple nilpotent_shift(Index m, const TolerancePolicy& tol)
{
    if (m < 1)
        throw std::invalid_argument("nilpotent_shift: dimension must be >= 1");
    CMat s = CMat::Zero(m, m);
    for (Index i = 0; i + 1 < m; ++i)
        s(i + 1, i) = Complex(1.0, 0.0);
    return OperatorTuple::validate({std::move(s)}, true, tol);
}

OperatorTuple popescu_quotient(int arity, int depth, const CVec& generator,
                               Subspace* q_out, const TolerancePolicy& tol)
{
    FockTruncation fock(arity, depth);
    if (generator.size() != fock.dim())
        throw std::invalid_argument("popescu_quotient: generator size mismatch");
    OperatorTuple creation = creation_tuple(arity, depth, tol);

    CMat level(fock.dim(), 1);
    level.col(0) = generator;
    std::vector<CMat> blocks{level};
    for (int l = 1; l <= depth; ++l) {
        const CMat& prev = blocks.back();
        CMat next(fock.dim(), prev.cols() * arity);
        for (int i = 0; i < arity; ++i)
            next.middleCols(i * prev.cols(), prev.cols()) = creation.op(i) * prev;
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
    OperatorTuple compressed = compress_to_coinvariant(arity, depth, q, tol);
    if (q_out)
        *q_out = q;
    return compressed;
}

double da_weight_oracle_residual(int arity, int max_degree)
{
    // expand sum_k <lambda,z>^k by repeated convolution; the coefficient
    // of z^alpha conj(lambda)^alpha after k = |alpha| steps determines
    // the Gram entry 1 / coefficient
    std::map<std::vector<int>, long long> layer{{std::vector<int>(arity, 0), 1}};
    double worst = 0.0;
    for (const MultiIndex& alpha : enumerate_multi_indices(arity, 0))
        worst = std::max(worst, std::abs(da_weight(alpha) - 1.0));
    for (int k = 1; k <= max_degree; ++k) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [expo, coef] : layer)
            for (int j = 0; j < arity; ++j) {
                std::vector<int> up = expo;
                ++up[static_cast<std::size_t>(j)];
                next[up] += coef;
            }
        layer = std::move(next);
        for (const auto& [expo, coef] : layer) {
            const double oracle = 1.0 / static_cast<double>(coef);
            worst = std::max(worst, std::abs(da_weight(MultiIndex{expo}) - oracle));
        }
    }
    return worst;
}

namespace {

struct Checker {
    ScenarioResult& res;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            res.pass = false;
            res.messages.push_back(what);
        }
    }

    void require_below(double value, double threshold, const std::string& what)
    {
        std::ostringstream os;
        os << what << " (value " << value << ", threshold " << threshold << ")";
        require(value < threshold, os.str());
    }
};

std::string csv_header(int horizon)
{
    std::string h = "scenario,mode,certified_depth,verdict";
    for (int n = 1; n <= horizon; ++n)
        h += ",n" + std::to_string(n);
    return h;
}

std::string csv_row(const std::string& name, Mode mode, int certified,
                    const std::string& verdict, const std::vector<Index>& deltas)
{
    std::string row = name;
    row += mode == Mode::commuting ? ",commuting" : ",non-commuting";
    row += "," + std::to_string(certified);
    row += "," + verdict;
    for (Index d : deltas)
        row += "," + std::to_string(d);
    return row;
}

bool deltas_equal(const std::vector<Index>& got, const std::vector<Index>& want)
{
    return got == want;
}

std::vector<Index> expected_shift_deltas(Index m, int horizon)
{
    std::vector<Index> want;
    for (int n = 1; n <= horizon; ++n)
        want.push_back(std::min<Index>(n, m));
    return want;
}

ScenarioResult run_shift(const std::string& name, Index m, const RunOptions& opt)
{
    ScenarioResult res;
    const int horizon = opt.horizon.value_or(static_cast<int>(m) + 1);
    OperatorTuple t = nilpotent_shift(m, opt.tol);
    DefectProfile profile = defect_sequence(t, horizon, opt.tol);
    MaximalityVerdict verdict = is_maximal(t, horizon, opt.tol);

    Checker chk{res};
    chk.require(deltas_equal(profile.deltas, expected_shift_deltas(m, horizon)),
                "defect sequence mismatch");
    chk.require(verdict.is_maximal, "expected maximal verdict");

    res.report = json{{"scenario", name},
                      {"horizon", horizon},
                      {"dim", m},
                      {"profile", profile_to_json(profile)},
                      {"verdict", verdict_to_json(verdict)},
                      {"pass", res.pass}};
    res.csv_rows = {csv_header(horizon),
                    csv_row(name, t.mode(), horizon,
                            verdict.is_maximal ? "maximal" : "not-maximal", profile.deltas)};
    return res;
}

ScenarioResult run_creation(const std::string& name, int arity, int depth,
                            const RunOptions& opt)
{
    ScenarioResult res;
    const int horizon = opt.horizon.value_or(depth + 2);
    OperatorTuple t = creation_tuple(arity, depth, opt.tol);
    FockTruncation fock(arity, depth);
    DefectProfile profile = defect_sequence(t, horizon, opt.tol);
    MaximalityVerdict verdict = is_maximal(t, horizon, opt.tol);

    std::vector<Index> want;
    for (int n = 1; n <= horizon; ++n)
        want.push_back(std::min<long long>(words_up_to(arity, n - 1), fock.dim()));

    Checker chk{res};
    chk.require(deltas_equal(profile.deltas, want), "defect sequence mismatch");
    chk.require(verdict.is_maximal, "expected maximal verdict");

    // within the depth window the defect spaces are the particle layers
    double particle_worst = 0.0;
    for (int n = 1; n <= std::min(horizon, depth); ++n)
        particle_worst = std::max(
            particle_worst,
            projection_distance(profile.spaces[static_cast<std::size_t>(n - 1)],
                                particle_space(fock, n - 1)));
    chk.require_below(particle_worst, 1e-10, "defect spaces differ from particle layers");

    res.report = json{{"scenario", name},
                      {"horizon", horizon},
                      {"arity", arity},
                      {"depth", depth},
                      {"profile", profile_to_json(profile)},
                      {"verdict", verdict_to_json(verdict)},
                      {"particle_layer_distance", particle_worst},
                      {"pass", res.pass}};
    res.csv_rows = {csv_header(horizon),
                    csv_row(name, t.mode(), horizon,
                            verdict.is_maximal ? "maximal" : "not-maximal", profile.deltas)};
    return res;
}

ScenarioResult run_dshift(const std::string& name, int arity, int cap, const RunOptions& opt)
{
    ScenarioResult res;
    const int horizon = opt.horizon.value_or(cap + 2);
    OperatorTuple t = dshift(arity, cap, opt.tol);
    DATruncation trunc(arity, cap);
    DefectProfile profile = defect_sequence(t, horizon, opt.tol);
    MaximalityVerdict verdict = is_maximal(t, horizon, opt.tol);

    std::vector<Index> want;
    for (int n = 1; n <= horizon; ++n)
        want.push_back(std::min<long long>(monomials_up_to(arity, n - 1), trunc.dim()));

    Checker chk{res};
    chk.require(deltas_equal(profile.deltas, want), "defect sequence mismatch");
    chk.require(verdict.is_maximal, "expected maximal verdict");

    res.report = json{{"scenario", name},
                      {"horizon", horizon},
                      {"arity", arity},
                      {"degree_cap", cap},
                      {"profile", profile_to_json(profile)},
                      {"verdict", verdict_to_json(verdict)},
                      {"pass", res.pass}};
    res.csv_rows = {csv_header(horizon),
                    csv_row(name, t.mode(), horizon,
                            verdict.is_maximal ? "maximal" : "not-maximal", profile.deltas)};
    return res;
}

ScenarioResult run_annihilator(const std::string& name, const OperatorTuple& t,
                               int max_degree, int expected_degree, const RunOptions& opt)
{
    ScenarioResult res;
    auto ann = find_annihilator(t, max_degree, t.mode(), opt.tol);
    Checker chk{res};
    chk.require(ann.has_value(), "expected an annihilator");
    if (ann) {
        chk.require(ann->degree == expected_degree,
                    "annihilator degree " + std::to_string(ann->degree) + " != expected "
                        + std::to_string(expected_degree));
        chk.require_below(ann->residual, 1e-7, "annihilator residual");
    }
    res.report = json{{"scenario", name},
                      {"max_degree", max_degree},
                      {"annihilator", annihilator_to_json(ann, t.mode())},
                      {"pass", res.pass}};
    res.csv_rows = {"scenario,degree,residual",
                    name + ","
                        + (ann ? std::to_string(ann->degree) : std::string("none")) + ","
                        + (ann ? std::to_string(ann->residual) : std::string(""))};
    return res;
}

struct ZooMember {
    std::string name;
    OperatorTuple tuple;
    std::optional<CompressionData> compression;
    bool expect_maximal;
};

std::vector<ZooMember> battery_zoo(const TolerancePolicy& tol)
{
    std::vector<ZooMember> zoo;
    for (Index m : {3, 5, 8})
        zoo.push_back({"shift-c" + std::to_string(m), nilpotent_shift(m, tol), std::nullopt, true});
    for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        FockTruncation fock(d, n);
        Subspace full = Subspace::full(fock.dim());
        zoo.push_back({"creation-d" + std::to_string(d) + "-depth" + std::to_string(n),
                       creation_tuple(d, n, tol), CompressionData{fock, full}, true});
    }

    // engineered negatives: quotients by the invariant subspace of a
    // homogeneous generator
    {
        FockTruncation fock(2, 3);
        CVec gen = CVec::Zero(fock.dim());
        gen(fock.index_of(Word{{1}})) = Complex(1.0, 0.0);
        gen(fock.index_of(Word{{2}})) = Complex(-1.0, 0.0);
        Subspace q = Subspace::zero(0);
        OperatorTuple t = popescu_quotient(2, 3, gen, &q, tol);
        zoo.push_back({"popescu-neg-letters", t, CompressionData{fock, q}, false});
    }
    {
        FockTruncation fock(2, 3);
        CVec gen = CVec::Zero(fock.dim());
        gen(fock.index_of(Word{{1, 2}})) = Complex(1.0, 0.0);
        gen(fock.index_of(Word{{2, 1}})) = Complex(-1.0, 0.0);
        Subspace q = Subspace::zero(0);
        OperatorTuple t = popescu_quotient(2, 3, gen, &q, tol);
        zoo.push_back({"popescu-neg-commutator", t, CompressionData{fock, q}, false});
    }
    return zoo;
}

ScenarioResult run_battery_zoo(const RunOptions& opt)
{
    ScenarioResult res;
    Checker chk{res};
    json members = json::array();
    std::vector<std::string> rows{"member,delta1,maximal,annihilator_free,kernel_trivial,coherent"};

    for (const ZooMember& member : battery_zoo(opt.tol)) {
        const int horizon = opt.horizon.value_or(5);
        BatteryReport report = maximality_battery(
            member.tuple, horizon,
            member.compression ? &*member.compression : nullptr, opt.tol);
        chk.require(report.hypotheses_ok, member.name + ": hypotheses not satisfied");
        chk.require(report.coherent, member.name + ": battery conditions disagree");
        chk.require(report.maximal == member.expect_maximal,
                    member.name + ": unexpected verdict");
        json entry = battery_to_json(report);
        entry["member"] = member.name;
        members.push_back(std::move(entry));
        rows.push_back(member.name + "," + std::to_string(report.delta1) + ","
                       + (report.maximal ? "1" : "0") + ","
                       + (report.annihilator_free ? "1" : "0") + ","
                       + (report.kernel_trivial ? "1" : "0") + ","
                       + (report.coherent ? "1" : "0"));
    }
    res.report = json{{"scenario", "theorem39-zoo"}, {"members", std::move(members)},
                      {"pass", res.pass}};
    res.csv_rows = std::move(rows);
    return res;
}

ScenarioResult run_poisson_zoo(const RunOptions& opt)
{
    ScenarioResult res;
    Checker chk{res};
    json members = json::array();
    std::vector<std::string> rows{"member,gram_residual,intertwine_residual"};

    std::vector<std::pair<std::string, OperatorTuple>> tuples;
    tuples.emplace_back("shift-c3", nilpotent_shift(3, opt.tol));
    tuples.emplace_back("creation-d2-depth2", creation_tuple(2, 2, opt.tol));
    for (int i = 0; i < 8; ++i) {
        const std::uint64_t seed = opt.seed * 1000003ULL + static_cast<std::uint64_t>(i);
        Rng pick(seed);
        const int d = pick.uniform_int(1, 3);
        const Index m = pick.uniform_int(2, 8);
        tuples.emplace_back("random-" + std::to_string(i),
                            random_contractive_tuple(d, m, i % 2 == 0, seed, opt.tol));
    }

    for (const auto& [name, t] : tuples) {
        const int depth = 3;
        PoissonKernel pk = poisson_kernel(t, depth, opt.tol);
        const double gram = poisson_gram_residual(t, pk);
        const double twine = poisson_intertwining_residual(t, pk);
        chk.require_below(gram, 1e-10, name + ": kernel gram identity");
        chk.require_below(twine, 1e-10, name + ": kernel intertwining");
        members.push_back(json{{"member", name},
                               {"gram_residual", gram},
                               {"intertwine_residual", twine}});
        rows.push_back(name + "," + std::to_string(gram) + "," + std::to_string(twine));
    }
    res.report = json{{"scenario", "fock-poisson-zoo"}, {"members", std::move(members)},
                      {"pass", res.pass}};
    res.csv_rows = std::move(rows);
    return res;
}

Polynomial coordinate_poly(int arity, int var)
{
    MultiIndex alpha{std::vector<int>(static_cast<std::size_t>(arity), 0)};
    alpha.exponents[static_cast<std::size_t>(var)] = 1;
    return monomial(arity, alpha);
}

ScenarioResult run_da_submodule(const std::string& name,
                                const std::vector<Polynomial>& gens, int arity, int cap,
                                const std::vector<Index>& expect_deltas,
                                bool expect_maximal, const RunOptions& opt)
{
    ScenarioResult res;
    Checker chk{res};

    // weight gate precedes every submodule experiment
    const double gate = da_weight_oracle_residual(arity, 4);
    chk.require_below(gate, 1e-12, "weight oracle gate");

    SubmoduleBasis s = submodule_from_generators(gens, arity, cap, opt.tol);
    const int horizon = opt.horizon.value_or(
        std::min<int>(s.certified_defect_depth, static_cast<int>(expect_deltas.size())));
    SubmoduleDefect defect = submodule_defect(s, horizon, opt.tol);
    MaximalityVerdict verdict = submodule_maximality_experiment(s, horizon, opt.tol);
    const Index poisson_null = submodule_poisson_test(s, std::max(horizon - 1, 0), opt.tol);

    std::vector<Index> got(defect.profile.deltas.begin(),
                           defect.profile.deltas.begin() + horizon);
    std::vector<Index> want(expect_deltas.begin(),
                            expect_deltas.begin() + std::min<std::size_t>(
                                expect_deltas.size(), static_cast<std::size_t>(horizon)));
    chk.require(got == want, "certified defect sequence mismatch");
    chk.require(verdict.is_maximal == expect_maximal, "unexpected maximality verdict");
    if (!expect_maximal) {
        chk.require(!verdict.witness.empty(), "missing witness");
        chk.require_below(verdict.witness_residual, 1e-8, "witness residual");
        chk.require(poisson_null > 0, "kernel intersection should be nonzero");
    } else {
        chk.require(poisson_null == 0, "kernel intersection should vanish");
    }

    res.report = json{{"scenario", name},
                      {"generators", [&] {
                           json g = json::array();
                           for (const Polynomial& p : gens)
                               g.push_back(polynomial_to_json(p));
                           return g;
                       }()},
                      {"degree_cap", cap},
                      {"certified_defect_depth", s.certified_defect_depth},
                      {"horizon", horizon},
                      {"profile", profile_to_json(defect.profile)},
                      {"certified_flags", [&] {
                           json flags = json::array();
                           for (int n = 1; n <= horizon; ++n)
                               flags.push_back(n <= s.certified_defect_depth);
                           return flags;
                       }()},
                      {"verdict", verdict_to_json(verdict)},
                      {"poisson_null_dim", poisson_null},
                      {"weight_gate_residual", gate},
                      {"pass", res.pass}};
    res.csv_rows = {csv_header(horizon),
                    csv_row(name, Mode::commuting, s.certified_defect_depth,
                            verdict.is_maximal ? "maximal" : "not-maximal", got)};
    return res;
}

ScenarioResult run_da_unstable(const std::string& name, const RunOptions& opt)
{
    ScenarioResult res;
    Checker chk{res};
    std::vector<Polynomial> gens{coordinate_poly(2, 0)}; // the z_1-generated submodule
    SubmoduleBasis s = submodule_from_generators(gens, 2, 6, opt.tol);
    Delta1Stability probe = submodule_delta1_stability(s, opt.tol);
    chk.require(!probe.stable, "expected an unstable first defect dimension");
    bool refused = false;
    try {
        (void)submodule_maximality_experiment(s, 2, opt.tol);
    } catch (const std::runtime_error&) {
        refused = true;
    }
    chk.require(refused, "experiment should refuse a verdict");
    res.report = json{{"scenario", name},
                      {"delta1", probe.delta1},
                      {"delta1_grown", probe.delta1_grown},
                      {"stable", probe.stable},
                      {"verdict", nullptr},
                      {"pass", res.pass}};
    res.csv_rows = {"scenario,delta1,delta1_grown,stable",
                    name + "," + std::to_string(probe.delta1) + ","
                        + std::to_string(probe.delta1_grown) + ","
                        + (probe.stable ? "1" : "0")};
    return res;
}

ScenarioResult run_theta_submodule(const std::string& name, const std::vector<Complex>& zeros,
                                   int cap, const RunOptions& opt)
{
    ScenarioResult res;
    Checker chk{res};
    SubmoduleBasis s = theta_submodule(zeros, cap, opt.tol);
    const int horizon = opt.horizon.value_or(std::min(5, s.certified_defect_depth));
    SubmoduleDefect defect = submodule_defect(s, horizon, opt.tol);
    MaximalityVerdict verdict = submodule_maximality_experiment(s, horizon, opt.tol);
    const Index poisson_null = submodule_poisson_test(s, std::max(horizon - 1, 0), opt.tol);

    std::vector<Index> want;
    for (int n = 1; n <= horizon; ++n)
        want.push_back(n);
    std::vector<Index> got(defect.profile.deltas.begin(),
                           defect.profile.deltas.begin() + horizon);
    chk.require(got == want, "disc submodule defect growth should be 1,2,3,...");
    chk.require(verdict.is_maximal, "disc submodules are maximal");
    chk.require(poisson_null == 0, "kernel intersection should vanish");

    res.report = json{{"scenario", name},
                      {"degree_cap", cap},
                      {"certified_defect_depth", s.certified_defect_depth},
                      {"horizon", horizon},
                      {"profile", profile_to_json(defect.profile)},
                      {"verdict", verdict_to_json(verdict)},
                      {"poisson_null_dim", poisson_null},
                      {"pass", res.pass}};
    res.csv_rows = {csv_header(horizon),
                    csv_row(name, Mode::commuting, s.certified_defect_depth,
                            verdict.is_maximal ? "maximal" : "not-maximal", got)};
    return res;
}

ScenarioResult run_model_theta(const std::string& name, const std::vector<Complex>& zeros,
                               int cap, const RunOptions& opt)
{
    ScenarioResult res;
    Checker chk{res};
    ModelSpaceTheta model = blaschke_model(zeros, cap, opt.tol);
    OperatorTuple r = model_tuple(model, opt.tol);
    const Index m = r.dim();
    chk.require(m == static_cast<Index>(zeros.size()), "model dimension != Blaschke degree");

    const int horizon = opt.horizon.value_or(static_cast<int>(m) + 1);
    DefectProfile profile = defect_sequence(r, horizon, opt.tol);
    chk.require(profile.deltas == expected_shift_deltas(m, horizon),
                "model defect sequence should be 1,2,...,dim");

    const double v_res = model_vector_residual(model, std::min(cap, 6));
    chk.require_below(v_res, 1e-8, "projection formula residual");

    QuotientThetaReport quotient =
        quotient_theta_maximality(zeros, cap, horizon, opt.tol);
    chk.require(quotient.aligned, "minimal polynomial misaligned with model dimension");

    res.report = json{{"scenario", name},
                      {"degree_cap", cap},
                      {"model_dim", m},
                      {"profile", profile_to_json(profile)},
                      {"vector_formula_residual", v_res},
                      {"minimal_degree", quotient.minimal_degree},
                      {"numerator_mismatch", quotient.numerator_mismatch},
                      {"pass", res.pass}};
    res.csv_rows = {csv_header(horizon),
                    csv_row(name, Mode::commuting, horizon, "model", profile.deltas)};
    return res;
}

ScenarioResult run_quotient_sweep(const RunOptions& opt)
{
    ScenarioResult res;
    Checker chk{res};
    json members = json::array();
    std::vector<std::string> rows{"power,model_dim,minimal_degree"};
    for (int m = 1; m <= 6; ++m) {
        std::vector<Complex> zeros(static_cast<std::size_t>(m), Complex(0.0, 0.0));
        QuotientThetaReport rep =
            quotient_theta_maximality(zeros, 2 * m + 2, m + 1, opt.tol);
        chk.require(rep.minimal_degree == m && rep.model_dim == m,
                    "power-" + std::to_string(m) + ": minimal degree != dimension");
        members.push_back(json{{"power", m},
                               {"model_dim", rep.model_dim},
                               {"minimal_degree", rep.minimal_degree},
                               {"aligned", rep.aligned}});
        rows.push_back(std::to_string(m) + "," + std::to_string(rep.model_dim) + ","
                       + std::to_string(rep.minimal_degree));
    }
    res.report = json{{"scenario", "quotient-zm-sweep"}, {"members", std::move(members)},
                      {"pass", res.pass}};
    res.csv_rows = std::move(rows);
    return res;
}

ScenarioResult run_property(const RunOptions& opt)
{
    ScenarioResult res;
    PropertyConfig cfg;
    cfg.seed = opt.seed;
    if (opt.suite_tol) {
        cfg.residual_tol = *opt.suite_tol;
        cfg.subspace_tol = *opt.suite_tol;
        cfg.containment_tol = *opt.suite_tol;
    }
    PropertySummary summary = run_property_suite(cfg);
    res.pass = summary.ok();
    for (const PropertyFailure& f : summary.failures)
        res.messages.push_back(f.check + " at seed " + std::to_string(f.seed));
    res.report = json{{"scenario", "property-default"},
                      {"summary", property_summary_to_json(summary)},
                      {"pass", res.pass}};
    res.csv_rows = {"tuples_run,checks_run,failures",
                    std::to_string(summary.tuples_run) + ","
                        + std::to_string(summary.checks_run) + ","
                        + std::to_string(summary.failures.size())};
    return res;
}

} // namespace

const std::vector<ScenarioSpec>& all_scenarios()
{
    static const std::vector<ScenarioSpec> specs{
        {"shift-c3", "defect-seq", "nilpotent shift on C^3"},
        {"shift-c5", "defect-seq", "nilpotent shift on C^5"},
        {"shift-c8", "defect-seq", "nilpotent shift on C^8"},
        {"creation-d2-depth3", "defect-seq", "compressed creation pair, depth 3"},
        {"creation-d2-depth4", "defect-seq", "compressed creation pair, depth 4"},
        {"dshift-d2-N4", "defect-seq", "truncated 2-shift, degree cap 4"},
        {"dshift-d3-N3", "defect-seq", "truncated 3-shift, degree cap 3"},
        {"annihilator-shift-c3", "annihilator", "cubic annihilator of the C^3 shift"},
        {"annihilator-creation-d2-depth2", "annihilator", "depth-2 creation pair"},
        {"fock-poisson-zoo", "fock-poisson", "kernel identities over the zoo"},
        {"theorem39-zoo", "theorem39", "equivalence battery over the zoo"},
        {"da-ideal-z1z2-d2", "da-submodule", "submodule generated by z1, z2 (d=2)"},
        {"da-ideal-z1z2z3-d3", "da-submodule", "submodule generated by z1, z2, z3 (d=3)"},
        {"da-homog2-d2", "da-submodule", "submodule of all quadratics (d=2)"},
        {"da-single-z1-d2", "da-submodule", "z1-generated submodule: unstable defect"},
        {"theta-z2", "da-submodule", "theta = z^2 submodule of the Hardy space"},
        {"theta-z3", "da-submodule", "theta = z^3 submodule of the Hardy space"},
        {"theta-blaschke-03-04", "da-submodule", "Blaschke zeros {0.3, -0.4}"},
        {"model-z3", "model-theta", "model space of z^3"},
        {"model-blaschke-03-04", "model-theta", "model space, zeros {0.3, -0.4}"},
        {"model-a05", "model-theta", "one-dimensional model at a = 0.5"},
        {"quotient-zm-sweep", "model-theta", "minimal degree = dim for z^m, m <= 6"},
        {"property-default", "property-suite", "randomized invariant battery"},
    };
    return specs;
}

bool scenario_exists(const std::string& name)
{
    for (const ScenarioSpec& s : all_scenarios())
        if (s.name == name)
            return true;
    return false;
}

ScenarioResult run_scenario(const std::string& name, const RunOptions& opt)
{
    if (name == "shift-c3")
        return run_shift(name, 3, opt);
    if (name == "shift-c5")
        return run_shift(name, 5, opt);
    if (name == "shift-c8")
        return run_shift(name, 8, opt);
    if (name == "creation-d2-depth3")
        return run_creation(name, 2, 3, opt);
    if (name == "creation-d2-depth4")
        return run_creation(name, 2, 4, opt);
    if (name == "dshift-d2-N4")
        return run_dshift(name, 2, 4, opt);
    if (name == "dshift-d3-N3")
        return run_dshift(name, 3, 3, opt);
    if (name == "annihilator-shift-c3")
        return run_annihilator(name, nilpotent_shift(3, opt.tol), 4, 3, opt);
    if (name == "annihilator-creation-d2-depth2")
        return run_annihilator(name, creation_tuple(2, 2, opt.tol), 4, 3, opt);
    if (name == "fock-poisson-zoo")
        return run_poisson_zoo(opt);
    if (name == "theorem39-zoo")
        return run_battery_zoo(opt);
    if (name == "da-ideal-z1z2-d2")
        return run_da_submodule(name, {coordinate_poly(2, 0), coordinate_poly(2, 1)}, 2, 8,
                                {2, 5, 9, 14, 20}, false, opt);
    if (name == "da-ideal-z1z2z3-d3")
        return run_da_submodule(name,
                                {coordinate_poly(3, 0), coordinate_poly(3, 1),
                                 coordinate_poly(3, 2)},
                                3, 6, {3, 9, 19, 34}, false, opt);
    if (name == "da-homog2-d2") {
        std::vector<Polynomial> gens;
        gens.push_back(monomial(2, MultiIndex{{2, 0}}));
        gens.push_back(monomial(2, MultiIndex{{1, 1}}));
        gens.push_back(monomial(2, MultiIndex{{0, 2}}));
        return run_da_submodule(name, gens, 2, 8, {3, 7, 12, 18, 25}, false, opt);
    }
    if (name == "da-single-z1-d2")
        return run_da_unstable(name, opt);
    if (name == "theta-z2")
        return run_theta_submodule(name, {Complex(0, 0), Complex(0, 0)}, 20, opt);
    if (name == "theta-z3")
        return run_theta_submodule(name, {Complex(0, 0), Complex(0, 0), Complex(0, 0)}, 20,
                                   opt);
    if (name == "theta-blaschke-03-04")
        return run_theta_submodule(name, {Complex(0.3, 0), Complex(-0.4, 0)}, 20, opt);
    if (name == "model-z3")
        return run_model_theta(name, {Complex(0, 0), Complex(0, 0), Complex(0, 0)}, 12, opt);
    if (name == "model-blaschke-03-04")
        return run_model_theta(name, {Complex(0.3, 0), Complex(-0.4, 0)}, 40, opt);
    if (name == "model-a05")
        return run_model_theta(name, {Complex(0.5, 0)}, 40, opt);
    if (name == "quotient-zm-sweep")
        return run_quotient_sweep(opt);
    if (name == "property-default")
        return run_property(opt);
    throw std::invalid_argument("unknown scenario: " + name);
}

} // namespace rct
