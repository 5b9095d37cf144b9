#pragma once

// Point varieties through multilinearization: a quadratic relation
// f = sum T[i][j] x_i x_j gives the bilinear form f(p, q) = sum T[i][j] p_i q_j,
// and a point module p_0, p_1, .. satisfies f(p_l, p_{l+1}) = 0 for all f.
// M(p)[f][j] = sum_i T[f][i][j] p_i, so the successor of p spans ker M(p).

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ncrep/freealg.hpp"

namespace ncrep {

struct LinearizedSystem {
    int generators = 0;
    /// tensors[f](i, j) = coefficient of x_i x_j in relation f.
    std::vector<Matrix> tensors;

    int relations() const { return static_cast<int>(tensors.size()); }
    /// r x g matrix of linear forms evaluated at p.
    Matrix at(const Vector& p) const;
};

/// The kernel of M(p) is not one-dimensional where a unique successor is required.
class KernelDimensionError : public NumericalError {
public:
    KernelDimensionError(const std::string& what, int dim) : NumericalError(what), dimension(dim) {}
    int dimension;
};

LinearizedSystem multilinearize(const Presentation& p);

/// Dimension of ker M(p): singular values below sigma_max / gap count as zero.
int kernel_dimension(const LinearizedSystem& l, const Vector& p, double gap = 1e6);

bool on_point_variety(const LinearizedSystem& l, const Vector& p, double gap = 1e6);

/// The successor point, normalized to a unit largest-modulus entry.
Vector sigma(const LinearizedSystem& l, const Vector& p, double gap = 1e6);

/// Least n <= max_n with sigma^n(p) = p projectively.
std::optional<int> torsion_order(const LinearizedSystem& l, const Vector& p, int max_n = 24, double tol = 1e-7);

/// det M(p) for square systems.
Scalar variety_determinant(const LinearizedSystem& l, const Vector& p);

/// Random points with one-dimensional kernel. For r < g every point qualifies;
/// for square systems, random lines are intersected with det M = 0.
std::vector<Vector> sample_variety_points(const LinearizedSystem& l, int count, std::mt19937_64& rng);

/// Standard complex Gaussian entries.
Vector random_complex_vector(int n, std::mt19937_64& rng);

}  // namespace ncrep
