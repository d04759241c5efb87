#include <doctest.h>

#include <rct/scenarios.hpp>

#include "oracles.hpp"

using namespace rct;

TEST_CASE("creation_tuple: single-letter case is the nilpotent shift")
{
    OperatorTuple c = creation_tuple(1, 2);
    OperatorTuple s = nilpotent_shift(3);
    CHECK((c.op(0) - s.op(0)).norm() == 0.0);
}

TEST_CASE("creation_tuple: row gram and defect profile")
{
    OperatorTuple pair = creation_tuple(2, 1);
    CMat gram = CMat::Zero(3, 3);
    for (int i = 0; i < 2; ++i)
        gram += pair.op(i) * pair.op(i).adjoint();
    CMat want = CMat::Zero(3, 3);
    want(1, 1) = want(2, 2) = 1.0;
    CHECK((gram - want).norm() == 0.0);

    DefectProfile profile = defect_sequence(creation_tuple(2, 3), 5);
    CHECK(profile.deltas == std::vector<Index>{1, 3, 7, 15, 15});
}

TEST_CASE("creation_tuple: defect spaces are the particle layers")
{
    const int depth = 4;
    OperatorTuple t = creation_tuple(2, depth);
    FockTruncation fock(2, depth);
    for (int n = 1; n <= depth; ++n)
        CHECK(projection_distance(defect_space(t, n), particle_space(fock, n - 1)) < 1e-10);
}

TEST_CASE("particle_space: dimensions and range errors")
{
    FockTruncation f22(2, 2);
    CHECK(particle_space(f22, 0).dim() == 1);
    CHECK(particle_space(f22, 2).dim() == 7);
    CHECK_THROWS_AS(particle_space(f22, 3), std::invalid_argument);

    FockTruncation f31(3, 1);
    CHECK(particle_space(f31, 1).dim() == 4);
}

TEST_CASE("compress_to_coinvariant: full space, particle layers, shift slice")
{
    OperatorTuple c = creation_tuple(2, 2);
    OperatorTuple full = compress_to_coinvariant(2, 2, Subspace::full(c.dim()));
    for (int i = 0; i < 2; ++i)
        CHECK((full.op(i) - c.op(i)).norm() < 1e-14);

    // the particle layer is co-invariant and reproduces the shallower tuple
    FockTruncation fock(2, 3);
    OperatorTuple sliced = compress_to_coinvariant(2, 3, particle_space(fock, 2));
    OperatorTuple direct = creation_tuple(2, 2);
    for (int i = 0; i < 2; ++i)
        CHECK((sliced.op(i) - direct.op(i)).norm() < 1e-14);

    // d = 1: the span of the first m words compresses to the shift on C^m
    FockTruncation hardy(1, 5);
    OperatorTuple shift_slice = compress_to_coinvariant(1, 5, particle_space(hardy, 2));
    CHECK((shift_slice.op(0) - nilpotent_shift(3).op(0)).norm() < 1e-14);
}

TEST_CASE("compress_to_coinvariant rejects non-co-invariant subspaces")
{
    FockTruncation fock(2, 2);
    CMat basis = CMat::Zero(fock.dim(), 1);
    basis(fock.index_of(Word{{1}}), 0) = 1.0; // e_1 without the vacuum
    CHECK_THROWS_WITH_AS(compress_to_coinvariant(2, 2, Subspace(fock.dim(), basis)),
                         doctest::Contains("not co-invariant"), std::invalid_argument);
}

TEST_CASE("compression conjugates back to P_Q S_i P_Q")
{
    FockTruncation fock(2, 3);
    CVec gen = CVec::Zero(fock.dim());
    gen(fock.index_of(Word{{1}})) = 1.0;
    gen(fock.index_of(Word{{2}})) = -1.0;
    Subspace q = Subspace::zero(0);
    OperatorTuple t = popescu_quotient(2, 3, gen, &q);
    OperatorTuple creation = creation_tuple(2, 3);
    const CMat pq = q.projection();
    for (int i = 0; i < 2; ++i)
        CHECK((q.basis() * t.op(i) * q.basis().adjoint() - pq * creation.op(i) * pq).norm()
              < 1e-12);
}

TEST_CASE("poisson_kernel: gram identity in the nilpotent and scalar cases")
{
    OperatorTuple shift = nilpotent_shift(3);
    PoissonKernel pk = poisson_kernel(shift, 3);
    CHECK((pk.k.adjoint() * pk.k - CMat::Identity(3, 3)).norm() < 1e-12);

    CMat half(1, 1);
    half(0, 0) = 0.5;
    OperatorTuple scalar = OperatorTuple::validate({half}, true);
    PoissonKernel pk_scalar = poisson_kernel(scalar, 1);
    CHECK(std::abs((pk_scalar.k.adjoint() * pk_scalar.k)(0, 0) - Complex(0.9375, 0))
          < 1e-14);

    OperatorTuple t = random_contractive_tuple(2, 5, false, 17);
    PoissonKernel pk0 = poisson_kernel(t, 0);
    CMat d2 = CMat::Identity(5, 5) - cp_map(t, CMat::Identity(5, 5));
    CHECK((pk0.k.adjoint() * pk0.k - d2).norm() < 1e-12);
}

TEST_CASE("poisson_kernel: gram and intertwining residuals on random tuples")
{
    for (int trial = 0; trial < 10; ++trial) {
        Rng pick(600 + static_cast<std::uint64_t>(trial));
        const int d = pick.uniform_int(1, 3);
        const Index m = pick.uniform_int(2, 8);
        OperatorTuple t = random_contractive_tuple(d, m, trial % 2 == 0,
                                                   1300 + static_cast<std::uint64_t>(trial));
        PoissonKernel pk = poisson_kernel(t, pick.uniform_int(1, 4));
        CHECK(poisson_gram_residual(t, pk) < 1e-10);
        CHECK(poisson_intertwining_residual(t, pk) < 1e-10);
    }
}

TEST_CASE("poisson_adjoint_apply: vacuum word, nilpotent kill, column match")
{
    OperatorTuple t = random_contractive_tuple(2, 4, false, 23);
    CMat d_op = defect_operator(t);
    Subspace d1 = defect_space(t, 1);
    CVec xi = d1.basis().col(0);
    CHECK((poisson_adjoint_apply(t, Word{}, xi) - d_op * xi).norm() < 1e-12);

    OperatorTuple shift = nilpotent_shift(3);
    CVec e0 = CVec::Unit(3, 0);
    CHECK(poisson_adjoint_apply(shift, Word{{1, 1, 1}}, e0).norm() < 1e-14);

    PoissonKernel pk = poisson_kernel(t, 3);
    const Index nxi = pk.d1.dim();
    double worst = 0.0;
    for (Index w = 0; w < pk.fock.dim(); ++w)
        for (Index j = 0; j < nxi; ++j) {
            CVec direct = poisson_adjoint_apply(
                t, pk.fock.basis()[static_cast<std::size_t>(w)], pk.d1.basis().col(j));
            CVec column = pk.k.row(w * nxi + j).adjoint();
            worst = std::max(worst, (direct - column).cwiseAbs().maxCoeff());
        }
    CHECK(worst < 1e-10);
}

TEST_CASE("kernel_intersection_dim: maximal, zero, and creation cases")
{
    OperatorTuple shift = nilpotent_shift(5);
    PoissonKernel pk = poisson_kernel(shift, 4);
    for (int n = 0; n <= 4; ++n)
        CHECK(kernel_intersection_dim(pk, n) == 0);

    OperatorTuple zero = OperatorTuple::validate({CMat::Zero(1, 1), CMat::Zero(1, 1)}, true);
    CHECK(kernel_intersection_dim(zero, 1, 1) == 2);

    OperatorTuple creation = creation_tuple(2, 3);
    PoissonKernel pkc = poisson_kernel(creation, 3);
    for (int n = 0; n <= 3; ++n)
        CHECK(kernel_intersection_dim(pkc, n) == 0);

    CHECK_THROWS_AS(kernel_intersection_dim(pk, 5), std::invalid_argument);
}

TEST_CASE("battery: positive members agree everywhere")
{
    for (Index m : {3, 5, 8}) {
        BatteryReport report = maximality_battery(nilpotent_shift(m), 5);
        REQUIRE(report.hypotheses_ok);
        CHECK(report.maximal);
        CHECK(report.annihilator_free);
        CHECK(report.kernel_trivial);
        CHECK(report.coherent);
    }

    FockTruncation fock(2, 3);
    CompressionData full{fock, Subspace::full(fock.dim())};
    BatteryReport creation = maximality_battery(creation_tuple(2, 3), 5, &full);
    REQUIRE(creation.hypotheses_ok);
    CHECK(creation.maximal);
    CHECK(creation.compression_checked);
    CHECK(creation.compression_consistent);
    CHECK(creation.coherent);
    // within the window the layer ranks are the full counts 1, 3, 7, 15
    REQUIRE(creation.compression_ranks.size() >= 4);
    CHECK(creation.compression_ranks[0] == 1);
    CHECK(creation.compression_ranks[1] == 3);
    CHECK(creation.compression_ranks[2] == 7);
    CHECK(creation.compression_ranks[3] == 15);
}

TEST_CASE("battery: engineered negatives stay coherent")
{
    FockTruncation fock(2, 3);

    CVec gen = CVec::Zero(fock.dim());
    gen(fock.index_of(Word{{1}})) = 1.0;
    gen(fock.index_of(Word{{2}})) = -1.0;
    Subspace q1 = Subspace::zero(0);
    OperatorTuple neg1 = popescu_quotient(2, 3, gen, &q1);
    CompressionData data1{fock, q1};
    BatteryReport r1 = maximality_battery(neg1, 4, &data1);
    REQUIRE(r1.hypotheses_ok);
    CHECK(!r1.maximal);
    CHECK(!r1.annihilator_free);
    CHECK(!r1.kernel_trivial);
    CHECK(r1.coherent);
    // the first particle layer compresses to rank 2 < 3
    REQUIRE(r1.compression_ranks.size() >= 2);
    CHECK(r1.compression_ranks[1] == 2);

    CVec gen2 = CVec::Zero(fock.dim());
    gen2(fock.index_of(Word{{1, 2}})) = 1.0;
    gen2(fock.index_of(Word{{2, 1}})) = -1.0;
    Subspace q2 = Subspace::zero(0);
    OperatorTuple neg2 = popescu_quotient(2, 3, gen2, &q2);
    CompressionData data2{fock, q2};
    BatteryReport r2 = maximality_battery(neg2, 4, &data2);
    REQUIRE(r2.hypotheses_ok);
    CHECK(!r2.maximal);
    CHECK(r2.coherent);
    CHECK(r2.compression_ranks[1] == 3); // departs one layer later
    CHECK(r2.compression_ranks[2] == 6);
}

TEST_CASE("battery: hypothesis violations are reported, not asserted")
{
    OperatorTuple impure = OperatorTuple::validate({0.9 * CMat::Identity(2, 2)}, true);
    BatteryReport not_pure = maximality_battery(impure, 3);
    CHECK(!not_pure.hypotheses_ok);
    CHECK(not_pure.skip_reason == "tuple is not pure at tolerance");

    const double r = 1.0 / std::sqrt(2.0);
    CMat a(1, 1), b(1, 1);
    a(0, 0) = r;
    b(0, 0) = r;
    OperatorTuple isometry = OperatorTuple::validate({a, b}, true);
    BatteryReport no_defect = maximality_battery(isometry, 3);
    CHECK(!no_defect.hypotheses_ok);
    CHECK(no_defect.skip_reason == "tuple has no defect");
}

TEST_CASE("battery supports defect dimension above one")
{
    // ampliation: two copies of the creation pair have delta_1 = 2 and
    // expected counts doubled
    OperatorTuple c = creation_tuple(2, 2);
    const Index n = c.dim();
    std::vector<CMat> ops;
    for (int i = 0; i < 2; ++i) {
        CMat big = CMat::Zero(2 * n, 2 * n);
        big.topLeftCorner(n, n) = c.op(i);
        big.bottomRightCorner(n, n) = c.op(i);
        ops.push_back(std::move(big));
    }
    OperatorTuple doubled = OperatorTuple::validate(std::move(ops), false);
    BatteryReport report = maximality_battery(doubled, 3);
    REQUIRE(report.hypotheses_ok);
    CHECK(report.delta1 == 2);
    CHECK(report.maximal);
    CHECK(report.coherent);
}
