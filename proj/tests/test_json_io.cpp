#include <doctest.h>

#include <rct/json_io.hpp>

#include "oracles.hpp"

using namespace rct;

TEST_CASE("matrix json: schema and round trip")
{
    CMat a(1, 2);
    a << Complex(1.0, -2.0), Complex(0.0, 0.5);
    json j = matrix_to_json(a);
    CHECK(j.dump() == R"({"cols":2,"data":[[1.0,-2.0],[0.0,0.5]],"rows":1})");

    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        CMat m = rng.complex_matrix(rng.uniform_int(1, 5), rng.uniform_int(1, 5));
        CHECK((matrix_from_json(matrix_to_json(m)) - m).norm() == 0.0);
    }
}

TEST_CASE("matrix json: malformed input is rejected")
{
    CHECK_THROWS_AS(matrix_from_json(json{{"rows", 2}, {"cols", 2}}), std::invalid_argument);
    json short_data{{"rows", 2}, {"cols", 2}, {"data", json::array({json::array({1.0, 0.0})})}};
    CHECK_THROWS_AS(matrix_from_json(short_data), std::invalid_argument);
    json nan_data{{"rows", 1},
                  {"cols", 1},
                  {"data", json::array({json::array(
                               {std::numeric_limits<double>::quiet_NaN(), 0.0})})}};
    CHECK_THROWS_AS(matrix_from_json(nan_data), std::invalid_argument);
}

TEST_CASE("tuple json: round trip preserves validation data")
{
    OperatorTuple t = random_contractive_tuple(2, 3, true, 5);
    json j = tuple_to_json(t);
    CHECK(j.at("dim") == 3);
    CHECK(j.at("arity") == 2);
    CHECK(j.at("commuting") == true);
    OperatorTuple back = tuple_from_json(j);
    CHECK(back.dim() == t.dim());
    CHECK(back.commuting());
    for (int i = 0; i < 2; ++i)
        CHECK((back.op(i) - t.op(i)).norm() == 0.0);

    j["dim"] = 7;
    CHECK_THROWS_AS(tuple_from_json(j), std::invalid_argument);
}

TEST_CASE("tuple json: contraction bound enforced on load")
{
    json j{{"matrices", json::array({matrix_to_json(2.0 * CMat::Identity(2, 2))})}};
    CHECK_THROWS_AS(tuple_from_json(j), std::invalid_argument);
}

TEST_CASE("word and multi-index arrays")
{
    CHECK(word_to_json(Word{{1, 2, 1}}).dump() == "[1,2,1]");
    CHECK(word_from_json(json::parse("[1,2,1]")).letters == std::vector<int>{1, 2, 1});
    CHECK(multi_index_to_json(MultiIndex{{2, 0, 1}}).dump() == "[2,0,1]");
    CHECK(multi_index_from_json(json::parse("[2,0,1]")).exponents
          == std::vector<int>{2, 0, 1});
    CHECK_THROWS_AS(multi_index_from_json(json::parse("[-1,0]")), std::invalid_argument);
}

TEST_CASE("polynomial json: schema and round trip")
{
    Polynomial p{2, {{MultiIndex{{1, 0}}, Complex(1, 0)}, {MultiIndex{{0, 2}}, Complex(0, -1)}}};
    json j = polynomial_to_json(p);
    CHECK(j.at("d") == 2);
    CHECK(j.at("terms").size() == 2);
    Polynomial back = polynomial_from_json(j);
    CHECK(back.arity == 2);
    CHECK(back.terms.size() == 2);
    CHECK(back.terms[1].second == Complex(0, -1));

    json bad{{"d", 2}, {"terms", json::array({json{{"alpha", json::array({1})},
                                                   {"coef", json::array({1.0, 0.0})}}})}};
    CHECK_THROWS_AS(polynomial_from_json(bad), std::invalid_argument);
}

TEST_CASE("verdict json carries the wire fields")
{
    MaximalityVerdict v = is_maximal(creation_tuple(2, 2), 4);
    json j = verdict_to_json(v);
    CHECK(j.contains("is_maximal"));
    CHECK(j.at("mode") == "non-commuting");
    CHECK(j.at("horizon") == 4);
    CHECK(j.contains("departure_index"));
    CHECK(j.contains("witness"));
}

TEST_CASE("poisson json includes the block sidecar")
{
    OperatorTuple t = random_contractive_tuple(2, 3, false, 9);
    PoissonKernel pk = poisson_kernel(t, 2);
    json j = poisson_to_json(pk);
    CHECK(j.at("depth") == 2);
    CHECK(j.at("blocks").size() == 7);
    CHECK(j.at("blocks")[0].at("rows")[0] == 0);
    CMat k = matrix_from_json(j.at("matrix"));
    CHECK((k - pk.k).norm() == 0.0);
}
