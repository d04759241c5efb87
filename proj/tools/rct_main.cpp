//
// Project     : rct
// Module      : cli
// Description : config-driven experiment runner; every module is a
//               subcommand, reports are deterministic JSON/CSV
//

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <rct/scenarios.hpp>

namespace fs = std::filesystem;
using rct::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitConfig = 2;

struct CliState {
    std::string config_path;
    std::string scenario;
    std::string tuple_path;
    std::string out_dir = "reports";
    std::string format = "json";
    std::uint64_t seed = 1;
    int horizon = 0; // 0 = scenario default
    double tol_override = 0.0;
    json config = json::object();
};

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void apply_config(CliState& st)
{
    if (st.config_path.empty())
        return;
    st.config = load_json_file(st.config_path);
    if (st.config.contains("scenario") && st.scenario.empty())
        st.scenario = st.config.at("scenario").get<std::string>();
    if (st.config.contains("seed"))
        st.seed = st.config.at("seed").get<std::uint64_t>();
    if (st.config.contains("horizon") && st.horizon == 0)
        st.horizon = st.config.at("horizon").get<int>();
    if (st.config.contains("out"))
        st.out_dir = st.config.at("out").get<std::string>();
    if (st.config.contains("format"))
        st.format = st.config.at("format").get<std::string>();
    if (st.config.contains("tuple_file") && st.tuple_path.empty())
        st.tuple_path = st.config.at("tuple_file").get<std::string>();
}

rct::RunOptions make_options(const CliState& st)
{
    rct::RunOptions opt;
    if (st.horizon > 0)
        opt.horizon = st.horizon;
    opt.seed = st.seed;
    if (st.tol_override != 0.0) {
        if (!(st.tol_override > 0.0 && st.tol_override < 1.0))
            throw std::invalid_argument("--tol must lie in (0,1)");
        opt.tol.rank_rtol = st.tol_override;
        opt.suite_tol = st.tol_override;
    }
    if (st.config.contains("rank_rtol"))
        opt.tol.rank_rtol = st.config.at("rank_rtol").get<double>();
    if (st.config.contains("identity_atol"))
        opt.tol.identity_atol = st.config.at("identity_atol").get<double>();
    opt.tol.validate();
    return opt;
}

void write_outputs(const CliState& st, const std::string& name, const json& report,
                   const std::vector<std::string>& csv_rows)
{
    fs::create_directories(st.out_dir);
    if (st.format == "json" || st.format == "both") {
        std::ofstream out(fs::path(st.out_dir) / (name + ".json"));
        out << report.dump(2) << "\n";
    }
    if (st.format == "csv" || st.format == "both") {
        std::ofstream out(fs::path(st.out_dir) / (name + ".csv"));
        for (const std::string& row : csv_rows)
            out << row << "\n";
    }
}

int finish(const CliState& st, const std::string& name, const rct::ScenarioResult& res)
{
    write_outputs(st, name, res.report, res.csv_rows);
    if (!res.pass) {
        for (const std::string& msg : res.messages)
            std::cerr << "FAIL " << name << ": " << msg << "\n";
        return kExitAssertion;
    }
    std::cout << "ok " << name << "\n";
    return kExitPass;
}

int run_scenario_for(const CliState& st, const std::string& subcommand)
{
    if (!rct::scenario_exists(st.scenario)) {
        std::cerr << "unknown scenario: " << st.scenario << "\n";
        std::cerr << "available for " << subcommand << ":\n";
        for (const rct::ScenarioSpec& spec : rct::all_scenarios())
            if (spec.subcommand == subcommand)
                std::cerr << "  " << spec.name << " - " << spec.description << "\n";
        return kExitConfig;
    }
    return finish(st, st.scenario, rct::run_scenario(st.scenario, make_options(st)));
}

rct::OperatorTuple load_tuple(const CliState& st, const rct::TolerancePolicy& tol)
{
    if (!st.tuple_path.empty())
        return rct::tuple_from_json(load_json_file(st.tuple_path), tol);
    if (st.config.contains("tuple"))
        return rct::tuple_from_json(st.config.at("tuple"), tol);
    throw std::invalid_argument("no tuple given: use --tuple FILE or a config with \"tuple\"");
}

int cmd_defect_seq(const CliState& st)
{
    if (!st.scenario.empty())
        return run_scenario_for(st, "defect-seq");
    rct::RunOptions opt = make_options(st);
    rct::OperatorTuple t = load_tuple(st, opt.tol);
    const int horizon = opt.horizon.value_or(static_cast<int>(t.dim()) + 1);
    rct::DefectProfile profile = rct::defect_sequence(t, horizon, opt.tol);
    rct::PurityReport purity = rct::purity_report(t, horizon, opt.tol);

    rct::ScenarioResult res;
    res.report = json{{"subcommand", "defect-seq"},
                      {"horizon", horizon},
                      {"profile", rct::profile_to_json(profile)},
                      {"purity", rct::purity_to_json(purity)},
                      {"pass", true}};
    std::string row = "tuple,";
    row += t.commuting() ? "commuting" : "non-commuting";
    row += "," + std::to_string(horizon) + ",reported";
    for (rct::Index d : profile.deltas)
        row += "," + std::to_string(d);
    res.csv_rows = {"scenario,mode,certified_depth,verdict", row};
    return finish(st, "defect-seq", res);
}

int cmd_maximality(const CliState& st)
{
    if (!st.scenario.empty())
        return run_scenario_for(st, "defect-seq"); // shares the defect presets
    rct::RunOptions opt = make_options(st);
    rct::OperatorTuple t = load_tuple(st, opt.tol);
    const int horizon = opt.horizon.value_or(static_cast<int>(t.dim()) + 1);
    rct::MaximalityVerdict verdict = rct::is_maximal(t, horizon, opt.tol);
    rct::ScenarioResult res;
    res.report = json{{"subcommand", "maximality"},
                      {"verdict", rct::verdict_to_json(verdict)},
                      {"pass", true}};
    res.csv_rows = {"is_maximal,departure_index",
                    std::string(verdict.is_maximal ? "1" : "0") + ","
                        + (verdict.departure_index ? std::to_string(*verdict.departure_index)
                                                   : std::string("none"))};
    return finish(st, "maximality", res);
}

int cmd_annihilator(const CliState& st, int max_degree)
{
    if (!st.scenario.empty())
        return run_scenario_for(st, "annihilator");
    rct::RunOptions opt = make_options(st);
    rct::OperatorTuple t = load_tuple(st, opt.tol);
    auto ann = rct::find_annihilator(t, max_degree, t.mode(), opt.tol);
    rct::ScenarioResult res;
    res.report = json{{"subcommand", "annihilator"},
                      {"max_degree", max_degree},
                      {"annihilator", rct::annihilator_to_json(ann, t.mode())},
                      {"pass", true}};
    res.csv_rows = {"degree",
                    ann ? std::to_string(ann->degree) : std::string("none")};
    return finish(st, "annihilator", res);
}

int cmd_fock_poisson(const CliState& st, int depth)
{
    if (!st.scenario.empty())
        return run_scenario_for(st, "fock-poisson");
    rct::RunOptions opt = make_options(st);
    rct::OperatorTuple t = load_tuple(st, opt.tol);
    rct::PoissonKernel pk = rct::poisson_kernel(t, depth, opt.tol);
    const double gram = rct::poisson_gram_residual(t, pk);
    const double twine = rct::poisson_intertwining_residual(t, pk);
    rct::ScenarioResult res;
    res.pass = gram < 1e-10 && twine < 1e-10;
    if (!res.pass)
        res.messages.push_back("kernel identity residual above 1e-10");
    res.report = json{{"subcommand", "fock-poisson"},
                      {"kernel", rct::poisson_to_json(pk)},
                      {"gram_residual", gram},
                      {"intertwine_residual", twine},
                      {"pass", res.pass}};
    res.csv_rows = {"gram_residual,intertwine_residual",
                    std::to_string(gram) + "," + std::to_string(twine)};
    return finish(st, "fock-poisson", res);
}

int cmd_theorem39(const CliState& st)
{
    if (!st.scenario.empty())
        return run_scenario_for(st, "theorem39");
    rct::RunOptions opt = make_options(st);
    rct::OperatorTuple t = load_tuple(st, opt.tol);
    const int horizon = opt.horizon.value_or(4);
    rct::BatteryReport report = rct::maximality_battery(t, horizon, nullptr, opt.tol);
    rct::ScenarioResult res;
    res.pass = !report.hypotheses_ok || report.coherent;
    if (!res.pass)
        res.messages.push_back("battery conditions disagree");
    res.report = json{{"subcommand", "theorem39"},
                      {"battery", rct::battery_to_json(report)},
                      {"pass", res.pass}};
    res.csv_rows = {"maximal,annihilator_free,kernel_trivial,coherent",
                    std::string(report.maximal ? "1" : "0") + ","
                        + (report.annihilator_free ? "1" : "0") + ","
                        + (report.kernel_trivial ? "1" : "0") + ","
                        + (report.coherent ? "1" : "0")};
    return finish(st, "theorem39", res);
}

int cmd_da_submodule(const CliState& st)
{
    if (!st.scenario.empty())
        return run_scenario_for(st, "da-submodule");
    rct::RunOptions opt = make_options(st);
    if (!st.config.contains("generators"))
        throw std::invalid_argument("da-submodule needs --scenario or a config with "
                                    "\"generators\", \"d\", \"N\"");
    std::vector<rct::Polynomial> gens;
    for (const json& g : st.config.at("generators"))
        gens.push_back(rct::polynomial_from_json(g));
    const int arity = st.config.at("d").get<int>();
    const int cap = st.config.at("N").get<int>();
    rct::SubmoduleBasis s = rct::submodule_from_generators(gens, arity, cap, opt.tol);

    const int horizon = opt.horizon.value_or(std::max(1, s.certified_defect_depth));
    rct::SubmoduleDefect defect = rct::submodule_defect(
        s, std::max(horizon, s.certified_defect_depth), opt.tol);
    rct::Delta1Stability probe = rct::submodule_delta1_stability(s, opt.tol);

    rct::ScenarioResult res;
    json report{{"subcommand", "da-submodule"},
                {"certified_defect_depth", s.certified_defect_depth},
                {"delta1_stable", probe.stable},
                {"profile", rct::profile_to_json(defect.profile)},
                {"certified_flags", [&] {
                     json flags = json::array();
                     for (std::size_t n = 1; n <= defect.profile.deltas.size(); ++n)
                         flags.push_back(static_cast<int>(n) <= s.certified_defect_depth);
                     return flags;
                 }()}};
    if (probe.stable && horizon <= s.certified_defect_depth) {
        rct::MaximalityVerdict verdict =
            rct::submodule_maximality_experiment(s, horizon, opt.tol);
        report["verdict"] = rct::verdict_to_json(verdict);
        report["poisson_null_dim"] =
            rct::submodule_poisson_test(s, std::max(horizon - 1, 0), opt.tol);
    } else {
        report["verdict"] = nullptr;
        report["flag"] = "first defect dimension uncertified; no verdict issued";
    }
    report["pass"] = true;
    res.report = std::move(report);
    std::string row = "submodule,commuting," + std::to_string(s.certified_defect_depth) + ","
        + (probe.stable ? "reported" : "flagged");
    for (rct::Index d : defect.profile.deltas)
        row += "," + std::to_string(d);
    res.csv_rows = {"scenario,mode,certified_depth,verdict", row};
    return finish(st, "da-submodule", res);
}

int cmd_model_theta(const CliState& st, int power, const std::string& zeros_arg)
{
    if (!st.scenario.empty())
        return run_scenario_for(st, "model-theta");
    rct::RunOptions opt = make_options(st);

    std::vector<rct::Complex> zeros;
    if (power > 0) {
        zeros.assign(static_cast<std::size_t>(power), rct::Complex(0.0, 0.0));
    } else if (!zeros_arg.empty()) {
        std::stringstream ss(zeros_arg);
        std::string item;
        while (std::getline(ss, item, ','))
            zeros.emplace_back(std::stod(item), 0.0);
    } else if (st.config.contains("zeros")) {
        for (const json& z : st.config.at("zeros"))
            zeros.push_back(rct::complex_from_json(z));
    } else {
        throw std::invalid_argument("model-theta needs --power, --zeros, or config zeros");
    }

    const int cap = st.config.value("N", std::max<int>(20, 4 * static_cast<int>(zeros.size())));
    const int horizon = opt.horizon.value_or(static_cast<int>(zeros.size()) + 1);
    rct::ModelSpaceTheta model = rct::blaschke_model(zeros, cap, opt.tol);
    rct::OperatorTuple r = rct::model_tuple(model, opt.tol);
    rct::DefectProfile profile = rct::defect_sequence(r, horizon, opt.tol);
    rct::QuotientThetaReport quotient =
        rct::quotient_theta_maximality(zeros, cap, horizon, opt.tol);

    rct::ScenarioResult res;
    res.pass = quotient.aligned;
    if (!res.pass)
        res.messages.push_back("minimal polynomial misaligned with model dimension");
    res.report = json{{"subcommand", "model-theta"},
                      {"model_dim", r.dim()},
                      {"profile", rct::profile_to_json(profile)},
                      {"minimal_degree", quotient.minimal_degree},
                      {"numerator_mismatch", quotient.numerator_mismatch},
                      {"vector_formula_residual",
                       rct::model_vector_residual(model, std::min(cap, 6))},
                      {"pass", res.pass}};
    std::string row = "model,commuting," + std::to_string(horizon) + ",model";
    for (rct::Index d : profile.deltas)
        row += "," + std::to_string(d);
    res.csv_rows = {"scenario,mode,certified_depth,verdict", row};
    return finish(st, "model-theta", res);
}

int cmd_property_suite(const CliState& st, int count)
{
    if (!st.scenario.empty())
        return run_scenario_for(st, "property-suite");
    rct::RunOptions opt = make_options(st);
    rct::PropertyConfig cfg;
    cfg.seed = opt.seed;
    cfg.tuple_count = count;
    cfg.include_compressions = count > 0;
    if (opt.suite_tol) {
        cfg.residual_tol = *opt.suite_tol;
        cfg.subspace_tol = *opt.suite_tol;
        cfg.containment_tol = *opt.suite_tol;
    }
    rct::PropertySummary summary = rct::run_property_suite(cfg);
    rct::ScenarioResult res;
    res.pass = summary.ok();
    for (const rct::PropertyFailure& f : summary.failures)
        res.messages.push_back(f.check + " at seed " + std::to_string(f.seed) + " (value "
                               + std::to_string(f.value) + ")");
    res.report = json{{"subcommand", "property-suite"},
                      {"summary", rct::property_summary_to_json(summary)},
                      {"pass", res.pass}};
    res.csv_rows = {"tuples_run,checks_run,failures",
                    std::to_string(summary.tuples_run) + ","
                        + std::to_string(summary.checks_run) + ","
                        + std::to_string(summary.failures.size())};
    return finish(st, "property-suite", res);
}

int cmd_random_tuple(const CliState& st, int arity, int dim, bool commuting)
{
    rct::RunOptions opt = make_options(st);
    rct::OperatorTuple t =
        rct::random_contractive_tuple(arity, dim, commuting, st.seed, opt.tol);
    rct::ScenarioResult res;
    res.report = rct::tuple_to_json(t);
    res.csv_rows = {"dim,arity,commuting,row_norm",
                    std::to_string(t.dim()) + "," + std::to_string(t.arity()) + ","
                        + (t.commuting() ? "1" : "0") + "," + std::to_string(t.row_norm())};
    return finish(st, "random-tuple", res);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"operator-tuple defect and maximality toolkit"};
    app.require_subcommand(1);

    CliState st;
    app.add_option("--config", st.config_path, "JSON config file");
    app.add_option("--seed", st.seed, "random seed");
    app.add_option("--horizon", st.horizon, "defect horizon");
    app.add_option("--tol", st.tol_override, "tolerance override");
    app.add_option("--out", st.out_dir, "output directory");
    app.add_option("--format", st.format, "json|csv|both")
        ->check(CLI::IsMember({"json", "csv", "both"}));

    auto add_common = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("--scenario", st.scenario, "preset scenario name");
        sub->add_option("--tuple", st.tuple_path, "tuple JSON file");
    };

    CLI::App* defect = app.add_subcommand("defect-seq", "defect sequence of a tuple");
    add_common(defect);
    CLI::App* maximality = app.add_subcommand("maximality", "maximality verdict");
    add_common(maximality);

    int max_degree = 4;
    CLI::App* annihilator = app.add_subcommand("annihilator", "annihilating polynomial search");
    add_common(annihilator);
    annihilator->add_option("--max-degree", max_degree, "search bound");

    int depth = 3;
    CLI::App* fock = app.add_subcommand("fock-poisson", "dilation kernel identities");
    add_common(fock);
    fock->add_option("--depth", depth, "truncation depth");

    CLI::App* battery = app.add_subcommand("theorem39", "pure-tuple equivalence battery");
    add_common(battery);

    CLI::App* da = app.add_subcommand("da-submodule", "submodule defect experiments");
    add_common(da);

    int power = 0;
    std::string zeros_arg;
    CLI::App* model = app.add_subcommand("model-theta", "disc model space experiments");
    add_common(model);
    model->add_option("--power", power, "theta = z^m");
    model->add_option("--zeros", zeros_arg, "comma-separated real zeros");

    int count = 50;
    CLI::App* prop = app.add_subcommand("property-suite", "randomized invariant battery");
    add_common(prop);
    prop->add_option("--count", count, "number of random tuples");

    int rt_arity = 2;
    int rt_dim = 4;
    bool rt_commuting = false;
    CLI::App* rand_cmd = app.add_subcommand("random-tuple", "emit a seeded contractive tuple");
    rand_cmd->fallthrough();
    rand_cmd->add_option("--d", rt_arity, "arity");
    rand_cmd->add_option("--m", rt_dim, "dimension");
    rand_cmd->add_flag("--commuting", rt_commuting, "commuting draw");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        apply_config(st);
        if (defect->parsed())
            return cmd_defect_seq(st);
        if (maximality->parsed())
            return cmd_maximality(st);
        if (annihilator->parsed())
            return cmd_annihilator(st, max_degree);
        if (fock->parsed())
            return cmd_fock_poisson(st, depth);
        if (battery->parsed())
            return cmd_theorem39(st);
        if (da->parsed())
            return cmd_da_submodule(st);
        if (model->parsed())
            return cmd_model_theta(st, power, zeros_arg);
        if (prop->parsed())
            return cmd_property_suite(st, count);
        if (rand_cmd->parsed())
            return cmd_random_tuple(st, rt_arity, rt_dim, rt_commuting);
        std::cerr << "no subcommand\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const rct::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const rct::no_defect_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitAssertion;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssertion;
    }
}
