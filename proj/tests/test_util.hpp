#pragma once

// Helpers shared by the unit tests and the acceptance runner.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ncrep/families.hpp"
#include "ncrep/fatpoint.hpp"
#include "ncrep/freealg.hpp"

namespace ncrep::test {

inline Scalar root_of_unity(int n, int k = 1) { return std::polar(1.0, 2.0 * std::numbers::pi * k / n); }

inline Scalar random_scalar(std::mt19937_64& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    const double re = nd(rng);
    const double im = nd(rng);
    return {re, im};
}

inline std::vector<Matrix> random_mats(int count, int k, std::mt19937_64& rng) {
    std::vector<Matrix> out;
    for (int i = 0; i < count; ++i) {
        Matrix m(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) m(r, c) = random_scalar(rng);
        out.push_back(m);
    }
    return out;
}

inline Matrix random_invertible(int k, std::mt19937_64& rng) {
    Matrix m = random_mats(1, k, rng).front();
    m += 2.0 * std::sqrt(static_cast<double>(k)) * Matrix::Identity(k, k);
    return m;
}

/// Random homogeneous polynomial with a handful of terms.
inline NCPoly random_poly(int generators, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> gen(0, generators - 1);
    NCPoly p;
    for (int t = 0; t < 4; ++t) {
        std::vector<int> w(degree);
        for (int& i : w) i = gen(rng);
        p.add_term(Monomial(w), random_scalar(rng));
    }
    return p;
}

inline bool poly_close(const NCPoly& a, const NCPoly& b, double tol = 1e-9) {
    const NCPoly d = a - b;
    for (const auto& [m, c] : d.terms())
        if (std::abs(c) > tol) return false;
    return true;
}

/// Fat point over C<x,y>/(xy - rho yx), rho a primitive n-th root of unity:
/// period n, multiplicities all 1, x_l random, y_l / x_l = r rho^{-l}.
inline FatPoint random_qplane_fatpoint(int n, std::mt19937_64& rng) {
    const Scalar rho = root_of_unity(n);
    std::vector<std::vector<Matrix>> blocks(2, std::vector<Matrix>(n));
    const Scalar r = random_scalar(rng);
    for (int l = 0; l < n; ++l) {
        const Scalar x = random_scalar(rng);
        blocks[0][l] = Matrix::Constant(1, 1, x);
        blocks[1][l] = Matrix::Constant(1, 1, x * r * std::pow(rho, -l));
    }
    return FatPoint(quantum_plane(rho), std::vector<int>(n, 1), blocks);
}

/// Fat point over the cubic omega-algebra: period 3, multiplicities all 1,
/// y_l / x_l = a w^{-l}, z_l / x_l = b w^l.
inline FatPoint random_cubic_fatpoint(std::mt19937_64& rng) {
    const Scalar w = root_of_unity(3);
    std::vector<std::vector<Matrix>> blocks(3, std::vector<Matrix>(3));
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    for (int l = 0; l < 3; ++l) {
        const Scalar x = random_scalar(rng);
        blocks[0][l] = Matrix::Constant(1, 1, x);
        blocks[1][l] = Matrix::Constant(1, 1, x * a * std::pow(w, -l));
        blocks[2][l] = Matrix::Constant(1, 1, x * b * std::pow(w, l));
    }
    return FatPoint(cubic_omega(w), {1, 1, 1}, blocks);
}

/// Whether v is a cyclic rotation of w.
inline bool is_rotation(const std::vector<int>& v, const std::vector<int>& w) {
    if (v.size() != w.size()) return false;
    const std::size_t n = v.size();
    for (std::size_t s = 0; s < std::max<std::size_t>(n, 1); ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = v[i] == w[(i + s) % n];
        if (ok) return true;
    }
    return false;
}

}  // namespace ncrep::test
