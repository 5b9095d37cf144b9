#pragma once

// Shifted Laurent matrix rings M_k(C[t, t^-1])(a_1, .., a_k), deg t = e.
// Entry (r, c) of a homogeneous element of degree m is a multiple of t^q with
// q * e = m - a_r + a_c.

#include <map>
#include <optional>
#include <vector>

#include "ncrep/core.hpp"

namespace ncrep {

class ShiftedLaurentDescriptor {
public:
    /// Shifts may be given in any order; they are stored sorted. Each must lie in [0, e).
    ShiftedLaurentDescriptor(std::vector<int> shifts, int t_degree);

    int size() const { return static_cast<int>(shifts_.size()); }
    const std::vector<int>& shifts() const { return shifts_; }
    int t_degree() const { return e_; }

    /// The multiplicity vector (m_0, .., m_{e-1}): how many shifts equal each residue.
    std::vector<int> block_sizes() const;

    bool operator==(const ShiftedLaurentDescriptor&) const = default;

private:
    std::vector<int> shifts_;
    int e_;
};

using DegreeShape = std::vector<std::vector<std::optional<int>>>;

/// Entry (r, c) holds (m - a_r + a_c) / e when e divides it.
DegreeShape degree_part_shape(const ShiftedLaurentDescriptor& d, int m);

/// Shifts are 0..0, 1..1, .., e-1..e-1 with every block nonempty.
bool is_degree_one_generated(const ShiftedLaurentDescriptor& d);

inline constexpr int kMaxLaurentExponent = 64;

/// Finite Laurent polynomial in t.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(int q, Scalar c = 1.0);

    const std::map<int, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(int q) const;
    void add_term(int q, Scalar c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<int, Scalar> terms_;
};

class LaurentMatrix {
public:
    explicit LaurentMatrix(ShiftedLaurentDescriptor d);
    static LaurentMatrix identity(const ShiftedLaurentDescriptor& d);
    /// Scalar matrix times t^q in every entry allowed by degree m; entries of
    /// `values` at positions not allowed must be zero.
    static LaurentMatrix homogeneous(const ShiftedLaurentDescriptor& d, int m, const Matrix& values);

    const ShiftedLaurentDescriptor& descriptor() const { return desc_; }
    const LaurentPoly& entry(int r, int c) const { return entries_[index(r, c)]; }
    void set_entry(int r, int c, LaurentPoly p) { entries_[index(r, c)] = std::move(p); }

    bool is_zero() const;
    /// Common degree of all nonzero terms; nullopt for zero or inhomogeneous elements.
    std::optional<int> homogeneous_degree() const;

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix&) const = default;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * desc_.size() + c; }

    ShiftedLaurentDescriptor desc_;
    std::vector<LaurentPoly> entries_;
};

LaurentMatrix multiply(const LaurentMatrix& p, const LaurentMatrix& q);

/// Dimension of the degree-m part (number of allowed entries).
int degree_part_dimension(const ShiftedLaurentDescriptor& d, int m);

/// Dimension of the subspace of the degree-m part spanned by products of
/// degree-one elements times inverse powers t^{-i} (i >= 0) of the central
/// element t. Computed by multiplying actual elements, not from the shape formula.
int generated_part_dimension(const ShiftedLaurentDescriptor& d, int m);

}  // namespace ncrep
