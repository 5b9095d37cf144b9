#pragma once

// Free graded algebra C<x_1..x_g>: words, homogeneous noncommutative
// polynomials, quadratic presentations and evaluation on matrix tuples.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncrep/core.hpp"

namespace ncrep {

/// A word in the generators. The empty word is the unit.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> word) : word_(std::move(word)) {}
    Monomial(std::initializer_list<int> word) : word_(word) {}

    const std::vector<int>& word() const { return word_; }
    int degree() const { return static_cast<int>(word_.size()); }
    bool is_unit() const { return word_.empty(); }
    int operator[](std::size_t i) const { return word_[i]; }

    Monomial operator*(const Monomial& other) const;

    /// Degree-lexicographic order: shorter words first, then lexicographic.
    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

    std::string to_string(std::span<const std::string> names) const;

private:
    std::vector<int> word_;
};

/// All g^d words of length d, lexicographically ordered.
std::vector<Monomial> degree_monomials(int generators, int degree);

/// Finite linear combination of words with complex coefficients.
/// Zero coefficients (|c| < kDropTol) are never stored.
class NCPoly {
public:
    NCPoly() = default;
    static NCPoly constant(Scalar c);
    static NCPoly monomial(Monomial m, Scalar c = 1.0);
    static NCPoly generator(int index) { return monomial(Monomial{index}); }

    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Common degree of all terms, or nullopt for zero or mixed-degree polynomials.
    std::optional<int> homogeneous_degree() const;
    int max_degree() const;
    Scalar coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, Scalar c);

    NCPoly operator+(const NCPoly& other) const;
    NCPoly operator-(const NCPoly& other) const;
    NCPoly operator*(const NCPoly& other) const;
    NCPoly operator*(Scalar c) const;
    NCPoly& operator+=(const NCPoly& other);

    std::string to_string(std::span<const std::string> names) const;

private:
    std::map<Monomial, Scalar> terms_;
};

inline NCPoly operator*(Scalar c, const NCPoly& p) { return p * c; }

/// Bilinear concatenation product.
NCPoly multiply(const NCPoly& p, const NCPoly& q);

/// Graded algebra presented by degree-one generators and homogeneous
/// quadratic relations.
class Presentation {
public:
    Presentation(std::vector<std::string> generator_names, std::vector<NCPoly> relations,
                 std::string label = {});

    const std::vector<std::string>& generator_names() const { return names_; }
    const std::vector<NCPoly>& relations() const { return relations_; }
    const std::string& label() const { return label_; }
    int generator_count() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::vector<NCPoly> relations_;
    std::string label_;
};

/// Substitute x_i -> mats[i] and 1 -> identity. All matrices must be k x k.
Matrix evaluate(const NCPoly& p, std::span<const Matrix> mats);

/// Frobenius norm of the largest relation image, a cheap residual measure.
double relation_residual(const Presentation& pres, std::span<const Matrix> mats);

}  // namespace ncrep
