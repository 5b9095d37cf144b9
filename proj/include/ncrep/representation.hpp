#pragma once

// Finite-dimensional representations: tuples of k x k matrices satisfying the
// relations of a presentation, with simplicity and equivalence tests.

#include <vector>

#include "ncrep/freealg.hpp"

namespace ncrep {

class Representation {
public:
    /// Checks shapes only: one square matrix per generator, all the same size.
    Representation(Presentation algebra, std::vector<Matrix> mats);

    const Presentation& algebra() const { return algebra_; }
    const std::vector<Matrix>& mats() const { return mats_; }
    const Matrix& operator[](int i) const { return mats_[i]; }
    int dimension() const { return static_cast<int>(mats_.front().rows()); }

    /// Largest Frobenius norm of a relation image.
    double residual() const { return relation_residual(algebra_, mats_); }

    /// g * mats * g^{-1}.
    Representation conjugated(const Matrix& g) const;
    /// Every generator image multiplied by s (the grading action).
    Representation scaled(Scalar s) const;
    Matrix evaluate(const NCPoly& p) const { return ncrep::evaluate(p, mats_); }

private:
    Presentation algebra_;
    std::vector<Matrix> mats_;
};

/// Conjugate of minimal total Frobenius norm, found by descending along the
/// moment map sum_i [X_i, X_i^*]. Orbits of simple representations are closed
/// and keep a balanced point of comparable size; tuples close to a
/// non-semisimple one shrink towards it.
std::vector<Matrix> balanced(const std::vector<Matrix>& mats, int max_iterations = 500);

/// Burnside test: the unital algebra generated by the images is all of M_k(C).
bool is_simple(const Representation& r, double tol = 1e-8);

/// Dimension of the unital algebra generated by the images.
int generated_algebra_dimension(const std::vector<Matrix>& mats, double tol = 1e-8);

/// Orthonormal basis (columns, column-major vec) of {T : T A_i = B_i T for all i}.
Matrix intertwiners(const std::vector<Matrix>& a, const std::vector<Matrix>& b, double tol = 1e-7);

/// Traces of all words of length <= max_length, words in degree-lex order.
/// The default length is 2k, capped so that at most ~4096 words are used.
std::vector<Scalar> trace_fingerprint(const Representation& r, int max_length = -1);

/// Equal trace fingerprints and an invertible intertwiner.
bool are_equivalent(const Representation& a, const Representation& b, double tol = 1e-6);

struct CentralCharacter {
    std::vector<NCPoly> elements;
    std::vector<Scalar> values;

    std::size_t size() const { return elements.size(); }
    void add(NCPoly c, Scalar v) {
        elements.push_back(std::move(c));
        values.push_back(v);
    }
};

/// Scalars by which the given central elements act; throws NumericalError if
/// an image is not scalar to tolerance (relative to its norm).
CentralCharacter central_character(const Representation& r, const std::vector<NCPoly>& centrals,
                                   double tol = 1e-6);

}  // namespace ncrep
