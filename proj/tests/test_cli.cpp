#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <rct/json_io.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    fs::path out_dir;
};

fs::path fresh_dir(const std::string& tag)
{
    fs::path dir = fs::temp_directory_path() / ("rct_cli_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& tag)
{
    RunResult res;
    res.out_dir = fresh_dir(tag);
    const std::string cmd = std::string(RCT_CLI_PATH) + " " + args + " --out "
        + res.out_dir.string() + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    res.exit_code = WEXITSTATUS(raw);
    return res;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("cli: scenario run emits the golden defect row")
{
    RunResult r = run_cli("defect-seq --scenario shift-c5 --format csv", "shift");
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(r.out_dir / "shift-c5.csv");
    CHECK(csv.find("1,2,3,4,5,5") != std::string::npos);
    CHECK(csv.find("maximal") != std::string::npos);
}

TEST_CASE("cli: reports are byte-identical across reruns")
{
    RunResult a = run_cli("da-submodule --scenario da-ideal-z1z2-d2 --format both", "det_a");
    RunResult b = run_cli("da-submodule --scenario da-ideal-z1z2-d2 --format both", "det_b");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(slurp(a.out_dir / "da-ideal-z1z2-d2.json")
          == slurp(b.out_dir / "da-ideal-z1z2-d2.json"));
    CHECK(slurp(a.out_dir / "da-ideal-z1z2-d2.csv")
          == slurp(b.out_dir / "da-ideal-z1z2-d2.csv"));
    CHECK(!slurp(a.out_dir / "da-ideal-z1z2-d2.csv").empty());
}

TEST_CASE("cli: unknown scenario and bad tolerance exit with config errors")
{
    CHECK(run_cli("defect-seq --scenario no-such-thing", "bad_scn").exit_code == 2);
    CHECK(run_cli("property-suite --tol 2.0", "bad_tol").exit_code == 2);
    CHECK(run_cli("defect-seq --tuple /nonexistent.json", "bad_file").exit_code == 2);

    fs::path dir = fresh_dir("bad_json");
    std::ofstream(dir / "broken.json") << "{ not json";
    CHECK(run_cli("defect-seq --config " + (dir / "broken.json").string(), "bad_json_run")
              .exit_code
          == 2);
}

TEST_CASE("cli: tampered tolerance makes the property suite fail loudly")
{
    RunResult r = run_cli("property-suite --count 4 --tol 1e-16", "tamper");
    CHECK(r.exit_code == 1);
    const rct::json report = rct::json::parse(slurp(r.out_dir / "property-suite.json"));
    CHECK(report.at("summary").at("failures").size() > 0);
    // failures carry their reproduction seeds
    CHECK(report.at("summary").at("failures")[0].contains("seed"));
}

TEST_CASE("cli: property suite passes and reports identically across runs")
{
    RunResult r = run_cli("property-suite --count 6", "prop_ok");
    CHECK(r.exit_code == 0);
    const rct::json report = rct::json::parse(slurp(r.out_dir / "property-suite.json"));
    CHECK(report.at("summary").at("ok") == true);

    RunResult again = run_cli("property-suite --count 6", "prop_ok2");
    CHECK(slurp(r.out_dir / "property-suite.json")
          == slurp(again.out_dir / "property-suite.json"));
}

TEST_CASE("cli: empty property run is an empty pass")
{
    RunResult r = run_cli("property-suite --count 0", "prop_empty");
    CHECK(r.exit_code == 0);
    const rct::json report = rct::json::parse(slurp(r.out_dir / "property-suite.json"));
    CHECK(report.at("summary").at("tuples_run") == 0);
    CHECK(report.at("summary").at("failures").empty());
}

TEST_CASE("cli: direct submodule config and kernel export")
{
    fs::path dir = fresh_dir("da_direct");
    rct::json config{
        {"d", 2},
        {"N", 6},
        {"generators",
         rct::json::array(
             {rct::json{{"d", 2},
                        {"terms", rct::json::array({rct::json{
                                      {"alpha", rct::json::array({1, 0})},
                                      {"coef", rct::json::array({1.0, 0.0})}}})}},
              rct::json{{"d", 2},
                        {"terms", rct::json::array({rct::json{
                                      {"alpha", rct::json::array({0, 1})},
                                      {"coef", rct::json::array({1.0, 0.0})}}})}}})},
        {"horizon", 3}};
    const fs::path cfg_path = dir / "submodule.json";
    std::ofstream(cfg_path) << config.dump(2);
    RunResult r = run_cli("da-submodule --config " + cfg_path.string(), "da_direct_run");
    CHECK(r.exit_code == 0);
    const rct::json report = rct::json::parse(slurp(r.out_dir / "da-submodule.json"));
    CHECK(report.at("certified_defect_depth") == 4);
    CHECK(report.at("verdict").at("is_maximal") == false);
    CHECK(report.at("profile").at("deltas")[0] == 2);

    // kernel export from a tuple file
    fs::path tdir = fresh_dir("fock_direct");
    rct::OperatorTuple t = rct::random_contractive_tuple(2, 3, false, 19);
    const fs::path tuple_path = tdir / "tuple.json";
    std::ofstream(tuple_path) << rct::tuple_to_json(t).dump();
    RunResult k = run_cli("fock-poisson --tuple " + tuple_path.string() + " --depth 2",
                          "fock_direct_run");
    CHECK(k.exit_code == 0);
    const rct::json kernel = rct::json::parse(slurp(k.out_dir / "fock-poisson.json"));
    CHECK(kernel.at("kernel").at("depth") == 2);
    CHECK(kernel.at("kernel").at("blocks").size() == 7);
    CHECK(kernel.at("gram_residual").get<double>() < 1e-10);
}

TEST_CASE("cli: random tuples are reproducible and valid")
{
    RunResult a = run_cli("random-tuple --d 2 --m 4 --seed 42", "rand_a");
    RunResult b = run_cli("random-tuple --d 2 --m 4 --seed 42", "rand_b");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    const std::string ja = slurp(a.out_dir / "random-tuple.json");
    CHECK(ja == slurp(b.out_dir / "random-tuple.json"));

    // emitted tuples pass validation on reload
    rct::OperatorTuple t = rct::tuple_from_json(rct::json::parse(ja));
    CHECK(t.dim() == 4);
    CHECK(t.row_norm() < 1.0);

    RunResult c = run_cli("random-tuple --d 2 --m 4 --seed 43", "rand_c");
    CHECK(slurp(c.out_dir / "random-tuple.json") != ja);
}

TEST_CASE("cli: commuting random tuples commute tightly")
{
    RunResult r = run_cli("random-tuple --d 3 --m 5 --commuting --seed 7", "rand_comm");
    REQUIRE(r.exit_code == 0);
    rct::OperatorTuple t =
        rct::tuple_from_json(rct::json::parse(slurp(r.out_dir / "random-tuple.json")));
    REQUIRE(t.commuting());
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK((t.op(i) * t.op(j) - t.op(j) * t.op(i)).norm() < 1e-10);
}

TEST_CASE("cli: direct tuple input through a config file")
{
    fs::path dir = fresh_dir("cfg");
    rct::OperatorTuple t = rct::random_contractive_tuple(2, 3, false, 11);
    rct::json config{{"tuple", rct::tuple_to_json(t)}, {"horizon", 4}, {"format", "json"}};
    const fs::path cfg_path = dir / "config.json";
    std::ofstream(cfg_path) << config.dump(2);

    RunResult r = run_cli("maximality --config " + cfg_path.string(), "cfg_run");
    CHECK(r.exit_code == 0);
    const rct::json report = rct::json::parse(slurp(r.out_dir / "maximality.json"));
    CHECK(report.at("verdict").at("horizon") == 4);
    CHECK(report.at("verdict").at("is_maximal") == true); // full-defect strict contraction
}

TEST_CASE("cli: theorem39 scenario and model sweep run clean")
{
    CHECK(run_cli("theorem39 --scenario theorem39-zoo --format csv", "t39").exit_code == 0);
    CHECK(run_cli("model-theta --scenario quotient-zm-sweep", "sweep").exit_code == 0);
}

TEST_CASE("cli: model-theta direct flags work without a config file")
{
    RunResult power = run_cli("model-theta --power 4", "model_power");
    CHECK(power.exit_code == 0);
    const rct::json report = rct::json::parse(slurp(power.out_dir / "model-theta.json"));
    CHECK(report.at("model_dim") == 4);
    CHECK(report.at("minimal_degree") == 4);

    RunResult zeros = run_cli("model-theta --zeros 0.3,-0.4", "model_zeros");
    CHECK(zeros.exit_code == 0);
    const rct::json zreport = rct::json::parse(slurp(zeros.out_dir / "model-theta.json"));
    CHECK(zreport.at("model_dim") == 2);
}

TEST_CASE("cli: no-defect input reports a data error")
{
    fs::path dir = fresh_dir("nodefect");
    const double r = 1.0 / std::sqrt(2.0);
    rct::CMat a(1, 1), b(1, 1);
    a(0, 0) = r;
    b(0, 0) = r;
    rct::OperatorTuple iso = rct::OperatorTuple::validate({a, b}, true);
    const fs::path tuple_path = dir / "tuple.json";
    std::ofstream(tuple_path) << rct::tuple_to_json(iso).dump();
    RunResult res = run_cli("maximality --tuple " + tuple_path.string(), "nodefect_run");
    CHECK(res.exit_code == 1);
}
