#pragma once

// Degree-wise linear algebra model of A = C<x>/(relations).
//
// A_d is computed inductively as (A_{d-1} (x) V) / image(A_{d-2} (x) R): for a
// quadratic algebra the degree-d part of the ideal is I_{d-1} V + V^{d-2} R,
// so only dim A_{d-1} * g coordinates are ever needed, never g^d.
// Each degree keeps an orthonormal coordinate system (used for all rank and
// zero tests) and a monomial basis of representatives (used for output).

#include <optional>
#include <vector>

#include "ncrep/freealg.hpp"

namespace ncrep {

struct GradedBasis {
    int degree = 0;
    /// Monomials whose images form a basis of A_d, chosen greedily in
    /// degree-lex order (the standard words of the ideal).
    std::vector<Monomial> representatives;
    /// dim A_d x (dim A_{d-1} * g) coisometry A_{d-1} (x) V -> A_d in orthonormal
    /// coordinates; index of e_a (x) x_j is a * g + j.
    Matrix projection;
    /// Columns: orthonormal coordinates of the representatives.
    Matrix rep_to_orth;
    Matrix orth_to_rep;

    int dim() const { return static_cast<int>(representatives.size()); }
};

class GradedQuotient {
public:
    /// Builds A_0..A_{max_degree}.
    GradedQuotient(Presentation pres, int max_degree, double tol = kDefaultTol);

    const Presentation& presentation() const { return pres_; }
    int max_degree() const { return static_cast<int>(degrees_.size()) - 1; }
    double tol() const { return tol_; }
    const GradedBasis& basis(int d) const;

    std::vector<int> hilbert_function() const;

    /// Orthonormal coordinates in A_d of a word / homogeneous polynomial.
    Vector orth_coordinates(const Monomial& m) const;
    Vector orth_coordinates(const NCPoly& p, int degree) const;

    /// Coordinates with respect to the representative monomials of A_d.
    /// The zero polynomial needs an explicit degree.
    Vector normal_form(const NCPoly& p, std::optional<int> degree = std::nullopt) const;

    /// sum_k coords[k] * representative_k as a polynomial.
    NCPoly lift(const Vector& coords, int degree) const;

    /// Norm of the image in A, relative to the coefficient norm of p.
    double residual_norm(const NCPoly& p, std::optional<int> degree = std::nullopt) const;
    bool in_ideal(const NCPoly& p, double tol = 1e-9) const;

    /// Product in A expressed on representatives.
    NCPoly multiply(const NCPoly& a, const NCPoly& b) const;

    /// Echelon basis (columns, representative coordinates) of the degree-d part
    /// of the center: {c : x_i c - c x_i = 0 in A_{d+1} for every generator}.
    /// Requires d + 1 <= max_degree().
    Matrix central_elements(int d) const;
    std::vector<NCPoly> central_polys(int d) const;

private:
    Vector advance(const Vector& v, int from_degree, int generator) const;
    int homogeneous_degree_or_throw(const NCPoly& p, std::optional<int> degree) const;

    Presentation pres_;
    double tol_;
    std::vector<GradedBasis> degrees_;
};

// Free-function entry points; each builds the quotient it needs.
GradedBasis basis(const Presentation& pres, int degree);
Vector normal_form(const Presentation& pres, const NCPoly& p);
std::vector<NCPoly> central_elements(const Presentation& pres, int degree);
std::vector<int> hilbert_function(const Presentation& pres, int d_max);

/// Trace on the quantum plane C<x,y>/(xy - rho yx), rho a primitive n-th root
/// of unity: tr(x^k y^l) = n x^k y^l if n | k and n | l, else 0.
///
/// Words are reduced exactly to rho^p x^k y^l by counting (y, x) inversions
/// (yx = rho^{-1} xy), so the trace never goes through floating-point
/// normal forms.
class QuantumPlaneTrace {
public:
    QuantumPlaneTrace(int n, Scalar rho);

    struct Reduced {
        int k = 0;          ///< x-degree
        int l = 0;          ///< y-degree
        int rho_power = 0;  ///< exponent of rho in [0, n)
    };

    int degree() const { return n_; }
    Scalar rho() const { return rho_; }

    Reduced reduce(const Monomial& word) const;
    /// Trace of a single word as (coefficient exponent, k, l), or nullopt when zero.
    std::optional<Reduced> trace_word(const Monomial& word) const;
    NCPoly apply(const NCPoly& a) const;

    /// The presentation this trace belongs to.
    Presentation algebra() const;

private:
    int n_;
    Scalar rho_;
};

/// n x^k y^l when (k, l) in (nN)^2, otherwise 0.
NCPoly trace_quantum_plane(int n, int k, int l);

/// Builds chi_{n,a} from tr(a), .., tr(a^n) via Newton's identities, evaluates
/// chi_{n,a}(a) in A and returns the relative norm of its normal form.
double cayley_hamilton_check(const GradedQuotient& algebra, const QuantumPlaneTrace& tr, const NCPoly& a,
                             int n);

}  // namespace ncrep
