#include <gtest/gtest.h>

#include <random>

#include "ncrep/fatpoint.hpp"
#include "ncrep/hseries.hpp"
#include "test_util.hpp"

using namespace ncrep;

namespace {

// The 2 x 2 representation of C<x,y>/(xy + yx) with x^2 = y^2 = 1.
Representation pauli_pair() {
    Matrix x(2, 2), y(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    y << 0.0, Scalar(0, -1), Scalar(0, 1), 0.0;
    return Representation(quantum_plane(-1.0), {x, y});
}

}  // namespace

TEST(FatPoint, PauliPairHasStabilizerTwo) {
    const auto r = pauli_pair();
    EXPECT_LT(r.residual(), 1e-15);
    EXPECT_TRUE(is_simple(r));
    const auto st = stabilizer_of(r);
    EXPECT_FALSE(st.infinite);
    EXPECT_EQ(st.order, 2);
    EXPECT_EQ(st.block_sizes, (std::vector<int>{1, 1}));
    // g similar to diag(1, -1): trace 0, g^2 = 1.
    EXPECT_LT(std::abs(st.conjugator.trace()), 1e-9 * st.conjugator.norm());
    const Matrix g2 = st.conjugator * st.conjugator;
    EXPECT_LT((g2 - g2(0, 0) * Matrix::Identity(2, 2)).norm(), 1e-9 * g2.norm());
    for (const auto& m : r.mats())
        EXPECT_LT((st.conjugator * m * st.conjugator.inverse() + m).norm(), 1e-9);
    const auto f = disassemble(r);
    EXPECT_EQ(f.period(), 2);
    EXPECT_EQ(f.multiplicities(), (std::vector<int>{1, 1}));
    EXPECT_EQ(multiplicity_check(series_of_fatpoint(f)), 1);
}

TEST(FatPoint, RoundTripUpToShift) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const FatPoint f = trial % 5 == 4 ? test::random_cubic_fatpoint(rng)
                                          : test::random_qplane_fatpoint(2 + trial % 4, rng);
        const auto r = assemble(f);
        EXPECT_LT(r.residual(), 1e-9);
        const auto st = stabilizer_of(r);
        EXPECT_EQ(st.order, f.period());
        EXPECT_TRUE(test::is_rotation(st.block_sizes, f.multiplicities()));
        const auto back = disassemble(r.conjugated(test::random_invertible(r.dimension(), rng)));
        EXPECT_TRUE(is_shift_equivalent(back, f));
    }
}

TEST(FatPoint, ShiftHasOrderEqualToPeriod) {
    std::mt19937_64 rng(22);
    for (int n = 2; n <= 5; ++n) {
        const auto f = test::random_qplane_fatpoint(n, rng);
        EXPECT_TRUE(is_isomorphic(shift(f, n), f));
        EXPECT_TRUE(is_isomorphic(f, f));
        EXPECT_EQ(shift_orbit_size(f), n);
        EXPECT_TRUE(is_shift_equivalent(f, shift(f, 1)));
    }
}

TEST(FatPoint, DistinctPointsAreNotIsomorphic) {
    std::mt19937_64 rng(23);
    const auto f = test::random_qplane_fatpoint(3, rng);
    const auto g = test::random_qplane_fatpoint(3, rng);
    EXPECT_FALSE(is_isomorphic(f, g));
    EXPECT_FALSE(is_shift_equivalent(f, g));
}

TEST(FatPoint, AssembleAtT0ScalesTheCorner) {
    std::mt19937_64 rng(24);
    const auto f = test::random_qplane_fatpoint(3, rng);
    const auto r1 = assemble(f, 1.0), r2 = assemble(f, 2.0);
    EXPECT_LT(std::abs(r2[0](0, 2) - 2.0 * r1[0](0, 2)), 1e-12);
    EXPECT_THROW(assemble(f, 0.0), InvalidArgument);
}

TEST(FatPoint, ValidationRejectsBadData) {
    const auto p = quantum_plane(-1.0);
    const Matrix one = Matrix::Ones(1, 1);
    // Wrong block shape.
    EXPECT_THROW(FatPoint(p, {1, 1}, {{Matrix::Ones(2, 1), one}, {one, one}}), InvalidArgument);
    // Relations fail: x = y = 1 in every block gives xy + yx = 2.
    EXPECT_THROW(FatPoint(p, {1, 1}, {{one, one}, {one, one}}), NumericalError);
    // A non-simple assembly: y = 0 leaves x acting on a 2-cycle with invariant eigenlines.
    EXPECT_THROW(FatPoint(p, {1, 1}, {{one, one}, {Matrix::Zero(1, 1), Matrix::Zero(1, 1)}}), NotSimpleError);
    EXPECT_NO_THROW(FatPoint(p, {1, 1}, {{one, one}, {one, one}}, FatPoint::Check::ShapesOnly));
}

TEST(FatPoint, TrivialRepresentationHasInfiniteStabilizer) {
    const Representation triv(quantum_plane(-1.0), {Matrix::Zero(1, 1), Matrix::Zero(1, 1)});
    const auto st = stabilizer_of(triv);
    EXPECT_TRUE(st.infinite);
    const Representation nonsimple(quantum_plane(-1.0), {Matrix::Identity(2, 2), Matrix::Zero(2, 2)});
    EXPECT_THROW(stabilizer_of(nonsimple), NotSimpleError);
}

TEST(FatPoint, GenericOneDimensionalRepresentationHasTrivialStabilizer) {
    const Representation r(quantum_plane(-1.0), {Matrix::Ones(1, 1), Matrix::Zero(1, 1)});
    const auto st = stabilizer_of(r);
    EXPECT_FALSE(st.infinite);
    EXPECT_EQ(st.order, 1);
    const auto f = disassemble(r);
    EXPECT_EQ(f.period(), 1);
    EXPECT_EQ(f.multiplicities(), (std::vector<int>{1}));
}
