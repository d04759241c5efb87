#include <rct/json_io.hpp>

namespace rct {

json complex_to_json(Complex z)
{
    return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex: expected [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const Eigen::Ref<const CMat>& a)
{
    json data = json::array();
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            data.push_back(complex_to_json(a(i, j)));
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

CMat matrix_from_json(const json& j)
{
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw std::invalid_argument("matrix: need rows, cols, data");
    const Index rows = j.at("rows").get<Index>();
    const Index cols = j.at("cols").get<Index>();
    const json& data = j.at("data");
    if (rows < 0 || cols < 0 || static_cast<Index>(data.size()) != rows * cols)
        throw std::invalid_argument("matrix: entry count does not match shape");
    CMat a(rows, cols);
    Index at = 0;
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c)
            a(r, c) = complex_from_json(data[static_cast<std::size_t>(at++)]);
    if (!all_finite(a))
        throw std::invalid_argument("matrix: non-finite entries");
    return a;
}

json tuple_to_json(const OperatorTuple& t)
{
    json mats = json::array();
    for (const CMat& a : t.ops())
        mats.push_back(matrix_to_json(a));
    return json{{"dim", t.dim()},
                {"arity", t.arity()},
                {"commuting", t.commuting()},
                {"matrices", std::move(mats)}};
}

OperatorTuple tuple_from_json(const json& j, const TolerancePolicy& tol)
{
    if (!j.contains("matrices"))
        throw std::invalid_argument("tuple: missing matrices");
    std::vector<CMat> mats;
    for (const json& m : j.at("matrices"))
        mats.push_back(matrix_from_json(m));
    const bool commuting = j.value("commuting", false);
    OperatorTuple t = OperatorTuple::validate(std::move(mats), commuting, tol);
    if (j.contains("dim") && j.at("dim").get<Index>() != t.dim())
        throw std::invalid_argument("tuple: declared dim does not match matrices");
    if (j.contains("arity") && j.at("arity").get<int>() != t.arity())
        throw std::invalid_argument("tuple: declared arity does not match matrices");
    return t;
}

json word_to_json(const Word& w)
{
    return json(w.letters);
}

Word word_from_json(const json& j)
{
    Word w;
    for (const json& v : j)
        w.letters.push_back(v.get<int>());
    return w;
}

json multi_index_to_json(const MultiIndex& a)
{
    return json(a.exponents);
}

MultiIndex multi_index_from_json(const json& j)
{
    MultiIndex a;
    for (const json& v : j)
        a.exponents.push_back(v.get<int>());
    for (int e : a.exponents)
        if (e < 0)
            throw std::invalid_argument("multi-index: negative exponent");
    return a;
}

json polynomial_to_json(const Polynomial& p)
{
    json terms = json::array();
    for (const auto& [alpha, coef] : p.terms)
        terms.push_back(json{{"alpha", multi_index_to_json(alpha)},
                             {"coef", complex_to_json(coef)}});
    return json{{"d", p.arity}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j)
{
    Polynomial p;
    p.arity = j.at("d").get<int>();
    for (const json& term : j.at("terms")) {
        MultiIndex alpha = multi_index_from_json(term.at("alpha"));
        if (alpha.arity() != p.arity)
            throw std::invalid_argument("polynomial: term arity mismatch");
        p.terms.emplace_back(std::move(alpha), complex_from_json(term.at("coef")));
    }
    return p;
}

json profile_to_json(const DefectProfile& profile)
{
    json j{{"deltas", profile.deltas}};
    j["stabilized_at"] = profile.stabilized_at ? json(*profile.stabilized_at) : json(nullptr);
    return j;
}

static json witness_to_json(const std::vector<WitnessTerm>& witness, Mode mode)
{
    json out = json::array();
    for (const WitnessTerm& term : witness) {
        json t{{"xi", term.term.xi_index}, {"coef", complex_to_json(term.coef)}};
        if (mode == Mode::non_commuting)
            t["word"] = word_to_json(term.term.word);
        else
            t["alpha"] = multi_index_to_json(term.term.alpha);
        out.push_back(std::move(t));
    }
    return out;
}

json verdict_to_json(const MaximalityVerdict& v)
{
    json j{{"is_maximal", v.is_maximal},
           {"mode", v.mode == Mode::commuting ? "commuting" : "non-commuting"},
           {"horizon", v.horizon},
           {"cap_limited", v.cap_limited},
           {"deltas", v.deltas},
           {"expected", v.expected},
           {"witness", witness_to_json(v.witness, v.mode)},
           {"witness_residual", v.witness_residual}};
    j["departure_index"] = v.departure_index ? json(*v.departure_index) : json(nullptr);
    return j;
}

json annihilator_to_json(const std::optional<AnnihilatorResult>& a, Mode mode)
{
    if (!a)
        return json{{"found", false}};
    return json{{"found", true},
                {"degree", a->degree},
                {"residual", a->residual},
                {"coefficients", witness_to_json(a->coefficients, mode)},
                {"certified_ratios", a->certified_ratios}};
}

json battery_to_json(const BatteryReport& report)
{
    json j{{"hypotheses_ok", report.hypotheses_ok},
           {"delta1", report.delta1},
           {"purity_final", report.purity_final},
           {"window", report.window},
           {"maximal", report.maximal},
           {"annihilator_free", report.annihilator_free},
           {"kernel_trivial", report.kernel_trivial},
           {"coherent", report.coherent}};
    if (!report.skip_reason.empty())
        j["skip_reason"] = report.skip_reason;
    if (report.compression_checked) {
        j["compression_ranks"] = report.compression_ranks;
        j["compression_expected"] = report.compression_expected;
        j["compression_consistent"] = report.compression_consistent;
    }
    return j;
}

json purity_to_json(const PurityReport& report)
{
    return json{{"norms", report.norms}, {"pure_at_tolerance", report.pure_at_tolerance}};
}

json property_summary_to_json(const PropertySummary& summary)
{
    json failures = json::array();
    for (const PropertyFailure& f : summary.failures)
        failures.push_back(json{{"seed", f.seed},
                                {"check", f.check},
                                {"value", f.value},
                                {"threshold", f.threshold}});
    return json{{"tuples_run", summary.tuples_run},
                {"checks_run", summary.checks_run},
                {"max_identity_residual", summary.max_identity_residual},
                {"max_subspace_distance", summary.max_subspace_distance},
                {"max_kernel_residual", summary.max_kernel_residual},
                {"failures", std::move(failures)},
                {"ok", summary.ok()}};
}

json poisson_to_json(const PoissonKernel& pk)
{
    json words = json::array();
    const Index nxi = pk.d1.dim();
    for (Index w = 0; w < pk.fock.dim(); ++w)
        words.push_back(json{{"word", word_to_json(pk.fock.basis()[static_cast<std::size_t>(w)])},
                             {"rows", json::array({w * nxi, nxi})}});
    return json{{"depth", pk.depth},
                {"defect_dim", nxi},
                {"matrix", matrix_to_json(pk.k)},
                {"blocks", std::move(words)}};
}

} // namespace rct
