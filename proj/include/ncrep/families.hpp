#pragma once

// Quantum planes, the cubic omega-algebra, three-dimensional Sklyanin algebras,
// torsion parameter search, and representations from sigma-orbits of points.

#include <cstdint>
#include <string>
#include <vector>

#include "ncrep/fatpoint.hpp"
#include "ncrep/ptvar.hpp"

namespace ncrep {

/// C<x,y>/(xy - rho yx).
Presentation quantum_plane(Scalar rho);

/// C<x,y,z>/(yz - w zy, zx - w xz, xy - w yx), w a primitive cube root of unity.
Presentation cubic_omega(Scalar omega);

/// Relations a yz + b zy + c x^2, a zx + b xz + c y^2, a xy + b yx + c z^2.
/// Rejects parameters with abc = 0 or (a^3+b^3+c^3)^3 = 27 (abc)^3 (singular
/// curve), and checks that the Hilbert function starts 1, 3, 6, 10.
Presentation sklyanin(Scalar a, Scalar b, Scalar c);

/// Same relations without the genericity checks.
Presentation sklyanin_unchecked(Scalar a, Scalar b, Scalar c);

/// Whether (a, b, c) passes the genericity conditions above (without the Hilbert check).
bool sklyanin_parameters_generic(Scalar a, Scalar b, Scalar c);

/// Group law on the plane cubic (a^3+b^3+c^3) xyz = abc (x^3+y^3+z^3) with
/// origin [1:-1:0]. The translation point of the Sklyanin shift is [a:b:c].
Vector hesse_add(const Vector& p, const Vector& q);
Vector hesse_double(const Vector& p);
Vector hesse_negate(const Vector& p);
/// k * p for k >= 1.
Vector hesse_multiple(const Vector& p, int k);

struct HesseSearchResult {
    Scalar a, b, c;
    Vector witness;                   ///< a variety point of torsion order n
    double residual = 0.0;            ///< |n tau - O| as a projective distance
    int attempts = 0;                 ///< Newton starts used
    int verified_points = 0;          ///< variety points checked to have order n
    std::vector<std::string> trace;   ///< one line per start
};

/// Finds (a, b, c) on a random line in parameter space with tau = [a:b:c] of
/// exact order n, by Gauss-Newton on the holomorphic residual n tau x O.
/// Verifies torsion_order = n on `verify_points` sampled variety points.
/// Throws NumericalError when no start succeeds.
HesseSearchResult hesse_parameter_search(int n, std::uint64_t seed = 0, int max_starts = 200,
                                         int verify_points = 20);

/// Fat point with period n, multiplicities (1, .., 1) and blocks
/// M(x_i)_l = i-th coordinate of sigma^{-l}(p), i.e. of p_{(n - l) mod n}.
FatPoint point_orbit_rep(const Presentation& pres, const Vector& p, int n);

}  // namespace ncrep
