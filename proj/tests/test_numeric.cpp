#include <doctest.h>

#include "oracles.hpp"

using namespace rct;
using rct_test::bareiss_rank;
using rct_test::frame_span;
using rct_test::random_integer_matrix;

namespace {
const TolerancePolicy kTol;
}

TEST_CASE("psd_sqrt: identity and diagonal cases")
{
    CMat id = CMat::Identity(3, 3);
    CHECK((psd_sqrt(id) - id).norm() == doctest::Approx(0.0).epsilon(1e-12));

    CMat a = CMat::Zero(2, 2);
    a(0, 0) = 4.0;
    CMat b = psd_sqrt(a);
    CHECK(std::abs(b(0, 0) - Complex(2.0, 0.0)) < 1e-12);
    CHECK(std::abs(b(1, 1)) < 1e-12);
}

TEST_CASE("psd_sqrt: random PSD squares back")
{
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = rng.uniform_int(1, 10);
        CMat a = rct_test::random_hermitian_psd(n, rng);
        CMat b = psd_sqrt(a);
        CHECK(is_hermitian(b, 1e-10));
        CHECK((b * b - a).norm() < 1e-9);
    }
}

TEST_CASE("psd_sqrt: sqrt of B^2 recovers B on 100 random PSD matrices")
{
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Index n = rng.uniform_int(1, 12);
        CMat b = psd_sqrt(rct_test::random_hermitian_psd(n, rng));
        b /= std::max(1.0, b.norm()); // keep entries O(1)
        CMat back = psd_sqrt(b * b);
        CHECK((back - b).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("psd_sqrt: rejects non-Hermitian and indefinite input")
{
    CMat bad(2, 2);
    bad << Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0);
    CHECK_THROWS_AS(psd_sqrt(bad), std::invalid_argument);

    CMat neg = -CMat::Identity(2, 2);
    CHECK_THROWS_AS(psd_sqrt(neg), std::invalid_argument);

    // eigenvalues in [-atol, 0] are clamped, not rejected
    CMat tiny = -5e-11 * CMat::Identity(2, 2);
    CHECK(psd_sqrt(tiny).norm() < 1e-5);
}

TEST_CASE("column_space: trivial cases")
{
    CHECK(column_space(CMat::Zero(3, 3)).dim() == 0);

    CMat a = CMat::Zero(2, 2);
    a(0, 0) = 1.0;
    Subspace s = column_space(a);
    REQUIRE(s.dim() == 1);
    CHECK(std::abs(std::abs(s.basis()(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("column_space: rank matches exact elimination over Z[i]")
{
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const Index rows = rng.uniform_int(1, 8);
        const Index cols = rng.uniform_int(1, 8);
        auto [gauss, m] = random_integer_matrix(rows, cols, rng);
        CHECK(column_space(m).dim() == bareiss_rank(gauss));
        CHECK(null_space(m).dim() == cols - bareiss_rank(gauss));
    }
}

TEST_CASE("bareiss oracle sanity")
{
    using rct_test::GaussInt;
    std::vector<std::vector<GaussInt>> id{{GaussInt{1, 0}, GaussInt{}},
                                          {GaussInt{}, GaussInt{1, 0}}};
    CHECK(bareiss_rank(id) == 2);
    std::vector<std::vector<GaussInt>> rank1{{GaussInt{1, 1}, GaussInt{2, 2}},
                                             {GaussInt{2, 0}, GaussInt{4, 0}}};
    // second row is (1-i) times the first
    CHECK(bareiss_rank(rank1) == 1);
    std::vector<std::vector<GaussInt>> zero{{GaussInt{}, GaussInt{}}};
    CHECK(bareiss_rank(zero) == 0);
}

TEST_CASE("column_space rank is invariant under right multiplication")
{
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Index rows = rng.uniform_int(2, 8);
        const Index cols = rng.uniform_int(2, 8);
        CMat a = rng.complex_matrix(rows, cols);
        a.col(cols - 1) = a.col(0); // force a rank drop
        CMat g = rng.complex_matrix(cols, cols)
            + 3.0 * CMat::Identity(cols, cols); // comfortably invertible
        CHECK(column_space(a).dim() == column_space(a * g).dim());
    }
}

TEST_CASE("null_space: trivial and rank-one cases")
{
    CHECK(null_space(CMat::Identity(4, 4)).dim() == 0);
    CHECK(null_space(CMat::Zero(3, 5)).dim() == 5);

    CMat a(2, 2);
    a << Complex(1, 0), Complex(2, 0), Complex(2, 0), Complex(4, 0);
    Subspace k = null_space(a);
    REQUIRE(k.dim() == 1);
    CVec expected(2);
    expected << Complex(2, 0) / std::sqrt(5.0), Complex(-1, 0) / std::sqrt(5.0);
    Subspace want(2, expected);
    CHECK(projection_distance(k, want) < 1e-10);
}

TEST_CASE("subspace_join: unit cases")
{
    Subspace e1(2, CMat::Identity(2, 2).leftCols(1));
    Subspace e2(2, CMat::Identity(2, 2).rightCols(1));
    CHECK(subspace_join(e1, Subspace::zero(2)).dim() == 1);
    CHECK(projection_distance(subspace_join(e1, Subspace::zero(2)), e1) < 1e-12);
    Subspace both = subspace_join(e1, e2);
    CHECK(both.dim() == 2);
    CHECK(projection_distance(both, Subspace::full(2)) < 1e-12);
    CHECK_THROWS_AS(subspace_join(e1, Subspace::zero(3)), std::invalid_argument);
}

TEST_CASE("subspace_join: shared vector gives dimension 3")
{
    Rng rng(19);
    CMat u = random_unitary(5, rng);
    Subspace a = frame_span(u, {0, 1});
    Subspace b = frame_span(u, {1, 2});
    CHECK(subspace_join(a, b).dim() == 3);
}

TEST_CASE("subspace_intersect: unit cases and common line")
{
    Subspace e1(2, CMat::Identity(2, 2).leftCols(1));
    Subspace e2(2, CMat::Identity(2, 2).rightCols(1));
    CHECK(projection_distance(subspace_intersect(e1, e1), e1) < 1e-10);
    CHECK(subspace_intersect(e1, e2).dim() == 0);

    // two planes in C^3 sharing the line through u.col(0)
    Rng rng(23);
    CMat u = random_unitary(3, rng);
    Subspace p1 = frame_span(u, {0, 1});
    Subspace p2 = frame_span(u, {0, 2});
    Subspace line = subspace_intersect(p1, p2);
    REQUIRE(line.dim() == 1);
    CHECK(projection_distance(line, frame_span(u, {0})) < 1e-8);
}

TEST_CASE("orthogonal_projection: full, zero, and diagonal-half cases")
{
    CHECK((orthogonal_projection(Subspace::full(3)) - CMat::Identity(3, 3)).norm() < 1e-12);
    CHECK(orthogonal_projection(Subspace::zero(3)).norm() == 0.0);

    CVec v(2);
    v << Complex(1, 0) / std::sqrt(2.0), Complex(1, 0) / std::sqrt(2.0);
    CMat p = orthogonal_projection(Subspace(2, v));
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j)
            CHECK(std::abs(p(i, j) - Complex(0.5, 0.0)) < 1e-12);
}

TEST_CASE("every computed subspace has an orthonormal basis")
{
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        CMat a = rng.complex_matrix(rng.uniform_int(1, 9), rng.uniform_int(1, 9));
        CHECK(column_space(a).orthonormality_residual() < kTol.identity_atol);
        CHECK(null_space(a).orthonormality_residual() < kTol.identity_atol);
    }
}

TEST_CASE("join is commutative and associative on projections")
{
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const Index n = 6;
        Subspace a = column_space(rng.complex_matrix(n, 2));
        Subspace b = column_space(rng.complex_matrix(n, 2));
        Subspace c = column_space(rng.complex_matrix(n, 2));
        CHECK(projection_distance(subspace_join(a, b), subspace_join(b, a)) < 1e-10);
        CHECK(projection_distance(subspace_join(subspace_join(a, b), c),
                                  subspace_join(a, subspace_join(b, c)))
              < 1e-10);
    }
}

TEST_CASE("modular dimension law on explicitly constructed pairs")
{
    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = 7;
        CMat u = random_unitary(n, rng);
        Subspace su = frame_span(u, {0, 1, 2, 3});
        Subspace sv = frame_span(u, {2, 3, 4, 5});
        Subspace meet = subspace_intersect(su, sv);
        Subspace join = subspace_join(su, sv);
        CHECK(meet.dim() + join.dim() == su.dim() + sv.dim());
        CHECK(projection_distance(meet, frame_span(u, {2, 3})) < 1e-8);
        CHECK(projection_distance(join, frame_span(u, {0, 1, 2, 3, 4, 5})) < 1e-8);
    }
}

TEST_CASE("mgs_orthonormalize drops dependent columns deterministically")
{
    Rng rng(41);
    CMat a(4, 3);
    a.col(0) = rng.complex_matrix(4, 1);
    a.col(1) = rng.complex_matrix(4, 1);
    a.col(2) = a.col(0) + a.col(1);
    CMat q = mgs_orthonormalize(a, 1e-8);
    CHECK(q.cols() == 2);
    CHECK((q.adjoint() * q - CMat::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("tolerance policy validation")
{
    TolerancePolicy bad;
    bad.rank_rtol = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = TolerancePolicy{};
    bad.identity_atol = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
