#include <gtest/gtest.h>

#include <random>

#include "ncrep/gmat.hpp"

using namespace ncrep;

namespace {

// All non-decreasing shift tuples of length k with entries in [0, e).
void shift_tuples(int k, int e, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    const int start = cur.empty() ? 0 : cur.back();
    for (int a = start; a < e; ++a) {
        cur.push_back(a);
        shift_tuples(k, e, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_tuples(int k, int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    shift_tuples(k, e, cur, out);
    return out;
}

}  // namespace

TEST(ShiftedLaurent, DescriptorValidationAndBlocks) {
    EXPECT_THROW(ShiftedLaurentDescriptor({0, 2}, 2), InvalidArgument);
    EXPECT_THROW(ShiftedLaurentDescriptor({0}, 0), InvalidArgument);
    const ShiftedLaurentDescriptor d({2, 0, 1, 1}, 3);
    EXPECT_EQ(d.shifts(), (std::vector<int>{0, 1, 1, 2}));
    EXPECT_EQ(d.block_sizes(), (std::vector<int>{1, 2, 1}));
}

TEST(ShiftedLaurent, GeneratorShapeOfTheTwoByTwoExample) {
    // Shifts (0, 1), deg t = 2: degree-1 elements are [[0, a t], [b, 0]].
    const ShiftedLaurentDescriptor d({0, 1}, 2);
    const DegreeShape s = degree_part_shape(d, 1);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_FALSE(s[0][0].has_value());
    EXPECT_EQ(s[0][1], 1);
    EXPECT_EQ(s[1][0], 0);
    EXPECT_FALSE(s[1][1].has_value());
    EXPECT_EQ(degree_part_dimension(d, 1), 2);
    EXPECT_EQ(degree_part_dimension(d, 2), 2);
}

TEST(ShiftedLaurent, DegreeOneGenerationTruthTable) {
    // The criterion against an independent computation of the subalgebra
    // generated by degree one and t^{-1}, on all tuples with k <= 4, e <= 4.
    int checked = 0;
    for (int e = 1; e <= 4; ++e)
        for (int k = 1; k <= 4; ++k)
            for (const auto& t : all_tuples(k, e)) {
                const ShiftedLaurentDescriptor d(t, e);
                bool generated = true;
                for (int m = 0; m < 2 * e && generated; ++m)
                    generated = generated_part_dimension(d, m) == degree_part_dimension(d, m);
                EXPECT_EQ(is_degree_one_generated(d), generated) << "e=" << e << " k=" << k;
                ++checked;
            }
    EXPECT_EQ(checked, 121);  // sum of C(e + k - 1, k)
}

TEST(ShiftedLaurent, CriterionExamples) {
    EXPECT_TRUE(is_degree_one_generated(ShiftedLaurentDescriptor({0, 1}, 2)));
    EXPECT_TRUE(is_degree_one_generated(ShiftedLaurentDescriptor({0, 0, 1, 2}, 3)));
    EXPECT_FALSE(is_degree_one_generated(ShiftedLaurentDescriptor({0, 2}, 3)));
    EXPECT_FALSE(is_degree_one_generated(ShiftedLaurentDescriptor({0, 1}, 3)));
    EXPECT_TRUE(is_degree_one_generated(ShiftedLaurentDescriptor({0, 0}, 1)));
}

TEST(LaurentMatrix, ProductsAreGradedAndAssociative) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> nd;
    const ShiftedLaurentDescriptor d({0, 1, 1, 2}, 3);
    auto random_homogeneous = [&](int m) {
        const DegreeShape s = degree_part_shape(d, m);
        Matrix v = Matrix::Zero(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (s[r][c]) v(r, c) = Scalar(nd(rng), nd(rng));
        return LaurentMatrix::homogeneous(d, m, v);
    };
    for (int trial = 0; trial < 10; ++trial) {
        const LaurentMatrix a = random_homogeneous(1), b = random_homogeneous(2), c = random_homogeneous(-1);
        EXPECT_EQ(a.homogeneous_degree(), 1);
        EXPECT_EQ((a * b).homogeneous_degree(), 3);
        const LaurentMatrix l = (a * b) * c, r = a * (b * c);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (const auto& [q, v] : l.entry(i, j).terms())
                    EXPECT_LT(std::abs(v - r.entry(i, j).coefficient(q)), 1e-10);
        EXPECT_EQ(LaurentMatrix::identity(d) * a, a);
        EXPECT_EQ(multiply(a, b), a * b);
    }
    Matrix bad = Matrix::Zero(4, 4);
    bad(0, 0) = 1.0;  // degree 1 has no diagonal entries when e = 3
    EXPECT_THROW(LaurentMatrix::homogeneous(d, 1, bad), InvalidArgument);
}

TEST(LaurentPoly, ArithmeticAndExponentLimit) {
    const LaurentPoly a = LaurentPoly::monomial(2, 3.0) + LaurentPoly::monomial(-1, 1.0);
    const LaurentPoly b = LaurentPoly::monomial(1, 2.0);
    const LaurentPoly p = a * b;
    EXPECT_EQ(p.coefficient(3), Scalar(6.0));
    EXPECT_EQ(p.coefficient(0), Scalar(2.0));
    EXPECT_TRUE((a + LaurentPoly::monomial(2, -3.0) + LaurentPoly::monomial(-1, -1.0)).is_zero());
    const LaurentPoly big = LaurentPoly::monomial(kMaxLaurentExponent, 1.0);
    EXPECT_THROW(big * LaurentPoly::monomial(1, 1.0), NumericalError);
}
