#pragma once

// Rank-revealing helpers shared by the graded-quotient, stabilizer and
// equivalence computations. All rank decisions threshold singular values at
// tol * (largest singular value).

#include <vector>

#include "ncrep/core.hpp"

namespace ncrep::linalg {

struct RankInfo {
    int rank = 0;
    double sigma_max = 0.0;
    double sigma_min = 0.0;  ///< smallest singular value over min(rows, cols)
};

RankInfo rank_info(const Matrix& a, double tol = kDefaultTol);
int numerical_rank(const Matrix& a, double tol = kDefaultTol);

/// Orthonormal basis (columns) of the numerical kernel of a.
Matrix kernel(const Matrix& a, double tol = kDefaultTol);

/// Orthonormal basis (columns) of the orthogonal complement of the column span
/// of a inside C^n, n = a.rows().
Matrix complement(const Matrix& a, double tol = kDefaultTol);

/// Orthonormal basis of the column span.
Matrix range(const Matrix& a, double tol = kDefaultTol);

/// Reduced row-echelon basis of the span of the columns of `basis`: columns of
/// the result have a leading 1 in the earliest possible coordinate, with zeros
/// in the other pivot coordinates. Entries below `clean` are zeroed.
Matrix echelon_basis(const Matrix& basis, double clean = 1e-12);

/// Column-major vec(A X B) = kron(B^T, A) vec(X).
Matrix kron(const Matrix& a, const Matrix& b);

/// sigma_min / sigma_max of a square matrix (0 for singular or empty).
double inverse_condition(const Matrix& a);

/// Projective distance: norm of the part of q orthogonal to p, over |q|.
double projective_distance(const Vector& p, const Vector& q);

/// Scale so that the entry of largest modulus becomes 1.
Vector normalize_projective(const Vector& p);

}  // namespace ncrep::linalg
