#pragma once

// Monomial subalgebras of C[x_1..x_v]: invariants of a diagonal cyclic action
// and Veronese subrings.

#include <string>
#include <vector>

namespace ncrep {

/// Exponent vector of a commutative monomial.
using Exponents = std::vector<int>;

int total_degree(const Exponents& m);
std::string monomial_string(const Exponents& m, const std::vector<std::string>& names);

struct WeightedAction {
    int variables = 0;
    std::vector<int> weights;  ///< reduced mod order on construction
    int order = 1;

    WeightedAction(std::vector<int> weights, int order);
    bool is_invariant(const Exponents& m) const;
};

/// All monomials of total degree d in v variables, x_1 highest first
/// (x^2 > xy > xz > y^2 > ...).
std::vector<Exponents> monomials_of_degree(int variables, int degree);

/// Minimal monomial generators of the invariant ring up to the degree bound,
/// found by a degree-ascending sieve.
std::vector<Exponents> cyclic_invariant_generators(const WeightedAction& w, int degree_bound);

/// All monomials of degree <= bound in the algebra generated by `gens`.
std::vector<Exponents> monomial_algebra_elements(const std::vector<Exponents>& gens, int degree_bound);

/// Minimal generators of the k-th Veronese subring (degrees divisible by k)
/// of the monomial algebra generated by `gens`, up to the degree bound.
std::vector<Exponents> veronese_generators(const std::vector<Exponents>& gens, int k, int degree_bound);

/// True if m is a sum of (at least one) elements of `gens`; exhaustive search.
bool is_generated_by(const Exponents& m, const std::vector<Exponents>& gens);

}  // namespace ncrep
