#include <gtest/gtest.h>

#include <random>

#include "ncrep/families.hpp"
#include "ncrep/representation.hpp"
#include "test_util.hpp"

using namespace ncrep;

namespace {

// Standard n-dimensional representation of the quantum plane at rho = e^{2 pi i / n}:
// x = a diag(1, rho, .., rho^{n-1}), y = b * cyclic shift.
Representation qplane_standard(int n, Scalar a, Scalar b) {
    const Scalar rho = test::root_of_unity(n);
    Matrix x = Matrix::Zero(n, n), y = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        x(i, i) = a * std::pow(rho, i);
        y((i + 1) % n, i) = b;
    }
    return Representation(quantum_plane(rho), {x, y});
}

}  // namespace

TEST(Representation, ShapesAreChecked) {
    const auto p = quantum_plane(-1.0);
    EXPECT_THROW(Representation(p, {Matrix::Identity(2, 2)}), InvalidArgument);
    EXPECT_THROW(Representation(p, {Matrix::Identity(2, 2), Matrix::Identity(3, 3)}), InvalidArgument);
    EXPECT_THROW(Representation(p, {Matrix::Zero(2, 3), Matrix::Zero(2, 3)}), InvalidArgument);
}

TEST(Representation, StandardQuantumPlaneRepresentation) {
    for (int n = 2; n <= 5; ++n) {
        const auto r = qplane_standard(n, 1.3, Scalar(0.4, 0.7));
        EXPECT_LT(r.residual(), 1e-12);
        EXPECT_TRUE(is_simple(r));
        EXPECT_EQ(generated_algebra_dimension(r.mats()), n * n);
    }
}

TEST(Representation, ReducibleTuplesAreNotSimple) {
    std::mt19937_64 rng(8);
    // Block upper-triangular tuple: a common invariant subspace.
    auto mats = test::random_mats(2, 3, rng);
    for (auto& m : mats) m(2, 0) = m(2, 1) = 0.0;
    EXPECT_EQ(generated_algebra_dimension(mats), 7);  // 9 minus the two forced zeros
    EXPECT_FALSE(is_simple(Representation(Presentation({"x", "y"}, {}), mats)));
    // Commuting matrices never act irreducibly in dimension > 1.
    const std::vector<Matrix> diag{Matrix::Identity(2, 2), Matrix(Eigen::Vector2cd(1.0, 2.0).asDiagonal())};
    EXPECT_FALSE(is_simple(Representation(Presentation({"x", "y"}, {}), diag)));
}

TEST(Representation, IntertwinersOfConjugateTuples) {
    std::mt19937_64 rng(9);
    const auto a = test::random_mats(2, 3, rng);
    const Matrix g = test::random_invertible(3, rng);
    std::vector<Matrix> b;
    for (const auto& m : a) b.push_back(g * m * g.inverse());
    const Matrix t = intertwiners(a, b);
    ASSERT_EQ(t.cols(), 1);
    // T A = B T with T proportional to g.
    const Matrix tm = Eigen::Map<const Matrix>(t.col(0).data(), 3, 3);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT((tm * a[i] - b[i] * tm).norm(), 1e-9);
    const Scalar ratio = tm(0, 0) / g(0, 0);
    EXPECT_LT((tm - ratio * g).norm(), 1e-8 * tm.norm());
    EXPECT_EQ(intertwiners(a, test::random_mats(2, 3, rng)).cols(), 0);
}

TEST(Representation, EquivalenceIsAnEquivalenceRelation) {
    std::mt19937_64 rng(10);
    const auto r = qplane_standard(3, 1.0, Scalar(0.5, 0.2));
    const auto s = r.conjugated(test::random_invertible(3, rng));
    const auto t = s.conjugated(test::random_invertible(3, rng));
    const auto other = qplane_standard(3, 1.0, Scalar(0.5, -0.2));
    EXPECT_TRUE(are_equivalent(r, r));
    EXPECT_TRUE(are_equivalent(r, s));
    EXPECT_TRUE(are_equivalent(s, r));
    EXPECT_TRUE(are_equivalent(s, t));
    EXPECT_TRUE(are_equivalent(r, t));
    EXPECT_FALSE(are_equivalent(r, other));
    EXPECT_FALSE(are_equivalent(other, r));
    // The grading action changes the class unless the scalar is in the stabilizer.
    EXPECT_FALSE(are_equivalent(r, r.scaled(1.1)));
    EXPECT_TRUE(are_equivalent(r, r.scaled(test::root_of_unity(3))));
}

TEST(Representation, FingerprintIsConjugationInvariant) {
    std::mt19937_64 rng(12);
    const auto r = qplane_standard(2, Scalar(0.3, 1.0), 0.8);
    const auto s = r.conjugated(test::random_invertible(2, rng));
    const auto fr = trace_fingerprint(r), fs = trace_fingerprint(s);
    ASSERT_EQ(fr.size(), fs.size());
    EXPECT_EQ(fr.size(), 1u + 2 + 4 + 8 + 16);  // words up to length 2k = 4
    for (std::size_t i = 0; i < fr.size(); ++i) EXPECT_LT(std::abs(fr[i] - fs[i]), 1e-9);
}

TEST(Representation, CentralCharacterOfStandardRepresentation) {
    const Scalar a = 1.3, b = Scalar(0.4, 0.7);
    const auto r = qplane_standard(3, a, b);
    const NCPoly x3 = NCPoly::monomial(Monomial({0, 0, 0})), y3 = NCPoly::monomial(Monomial({1, 1, 1}));
    const auto chi = central_character(r, {x3, y3});
    EXPECT_LT(std::abs(chi.values[0] - a * a * a), 1e-10);
    EXPECT_LT(std::abs(chi.values[1] - b * b * b), 1e-10);
    EXPECT_THROW(central_character(r, {NCPoly::generator(0)}), NumericalError);
}

TEST(Representation, BalancingShrinksNonClosedOrbits) {
    // A simple tuple keeps its size; a nilpotent tuple is conjugated towards zero.
    const auto r = qplane_standard(2, 1.0, 1.0);
    double before = 0.0, after = 0.0;
    for (const auto& m : r.mats()) before += m.squaredNorm();
    for (const auto& m : balanced(r.mats())) after += m.squaredNorm();
    EXPECT_GT(after, 0.99 * before);
    Matrix n = Matrix::Zero(2, 2);
    n(0, 1) = 1.0;
    after = 0.0;
    for (const auto& m : balanced({n, 2.0 * n})) after += m.squaredNorm();
    EXPECT_LT(after, 1e-3);
}
