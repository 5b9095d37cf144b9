#include "ncrep/families.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "ncrep/gquot.hpp"
#include "ncrep/linalg.hpp"

namespace ncrep {

namespace {

std::string format_param(Scalar z) {
    std::ostringstream os;
    os.precision(6);
    os << z.real() << "," << z.imag();
    return os.str();
}

NCPoly word(std::initializer_list<int> w, Scalar c = 1.0) { return NCPoly::monomial(Monomial(w), c); }

const std::vector<std::string> kXYZ{"x", "y", "z"};

}  // namespace

Presentation quantum_plane(Scalar rho) {
    if (std::abs(rho) == 0.0) throw InvalidArgument("quantum_plane: rho must be nonzero");
    if (!is_finite(rho)) throw InvalidArgument("quantum_plane: rho must be finite");
    return Presentation({"x", "y"}, {word({0, 1}) - word({1, 0}, rho)}, "qplane(" + format_param(rho) + ")");
}

Presentation cubic_omega(Scalar omega) {
    if (std::abs(omega * omega * omega - Scalar(1.0)) > 1e-9 || std::abs(omega - Scalar(1.0)) < 1e-9)
        throw InvalidArgument("cubic_omega: omega must be a primitive cube root of unity");
    std::vector<NCPoly> rels{word({1, 2}) - word({2, 1}, omega), word({2, 0}) - word({0, 2}, omega),
                             word({0, 1}) - word({1, 0}, omega)};
    return Presentation(kXYZ, std::move(rels), "cubic(" + format_param(omega) + ")");
}

Presentation sklyanin_unchecked(Scalar a, Scalar b, Scalar c) {
    std::vector<NCPoly> rels;
    rels.push_back(word({1, 2}, a) + word({2, 1}, b) + word({0, 0}, c));
    rels.push_back(word({2, 0}, a) + word({0, 2}, b) + word({1, 1}, c));
    rels.push_back(word({0, 1}, a) + word({1, 0}, b) + word({2, 2}, c));
    for (const auto& r : rels)
        if (r.is_zero()) throw InvalidArgument("sklyanin: parameters give a zero relation");
    return Presentation(kXYZ, std::move(rels),
                        "sklyanin(" + format_param(a) + ";" + format_param(b) + ";" + format_param(c) + ")");
}

bool sklyanin_parameters_generic(Scalar a, Scalar b, Scalar c) {
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (scale == 0.0) return false;
    a /= scale;
    b /= scale;
    c /= scale;
    const Scalar abc = a * b * c;
    if (std::abs(abc) < 1e-10) return false;
    const Scalar s = a * a * a + b * b * b + c * c * c;
    const Scalar lhs = s * s * s, rhs = 27.0 * abc * abc * abc;
    return std::abs(lhs - rhs) > 1e-9 * std::max(std::abs(lhs), std::abs(rhs));
}

Presentation sklyanin(Scalar a, Scalar b, Scalar c) {
    if (!sklyanin_parameters_generic(a, b, c))
        throw InvalidArgument("sklyanin: degenerate parameters (abc = 0 or singular point curve)");
    Presentation p = sklyanin_unchecked(a, b, c);
    const auto h = GradedQuotient(p, 3).hilbert_function();
    if (h != std::vector<int>{1, 3, 6, 10})
        throw InvalidArgument("sklyanin: Hilbert function does not start 1, 3, 6, 10");
    return p;
}

// --- Hesse group law --------------------------------------------------------

Vector hesse_add(const Vector& p, const Vector& q) {
    const Scalar x1 = p(0), y1 = p(1), z1 = p(2), x2 = q(0), y2 = q(1), z2 = q(2);
    Vector r(3);
    r << y1 * y1 * x2 * z2 - y2 * y2 * x1 * z1, x1 * x1 * y2 * z2 - x2 * x2 * y1 * z1,
        z1 * z1 * x2 * y2 - z2 * z2 * x1 * y1;
    return r;
}

Vector hesse_double(const Vector& p) {
    const Scalar x = p(0), y = p(1), z = p(2);
    Vector r(3);
    r << y * (x * x * x - z * z * z), x * (z * z * z - y * y * y), z * (y * y * y - x * x * x);
    return r;
}

Vector hesse_negate(const Vector& p) {
    Vector r(3);
    r << p(1), p(0), p(2);
    return r;
}

Vector hesse_multiple(const Vector& p, int k) {
    if (k < 1) throw InvalidArgument("hesse_multiple: k must be positive");
    const Vector base = linalg::normalize_projective(p);
    Vector acc = base;
    for (int i = 2; i <= k; ++i) {
        Vector next = linalg::projective_distance(acc, base) < 1e-12 ? hesse_double(acc) : hesse_add(acc, base);
        acc = linalg::normalize_projective(next);
    }
    return acc;
}

namespace {

Vector hesse_origin() {
    Vector o(3);
    o << 1.0, -1.0, 0.0;
    return o;
}

Vector cross(const Vector& a, const Vector& b) {
    Vector r(3);
    r << a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0);
    return r;
}

// n tau x O with tau = u + s v; every intermediate multiple is scaled by a
// fixed linear functional, which keeps the residual holomorphic in s.
Vector torsion_residual(const Vector& u, const Vector& v, const Vector& functional, Scalar s, int n) {
    const Vector tau = u + s * v;
    auto scaled = [&](const Vector& x) { return Vector(x / functional.dot(x)); };
    Vector acc = scaled(tau);
    for (int k = 2; k <= n; ++k) acc = scaled(k == 2 ? hesse_double(tau) : hesse_add(acc, tau));
    return cross(acc, hesse_origin());
}

}  // namespace

HesseSearchResult hesse_parameter_search(int n, std::uint64_t seed, int max_starts, int verify_points) {
    if (n < 2 || n > 8) throw InvalidArgument("hesse_parameter_search: n must lie in [2, 8]");
    std::mt19937_64 rng(seed);
    const Vector u = random_complex_vector(3, rng);
    const Vector v = random_complex_vector(3, rng);
    const Vector functional = random_complex_vector(3, rng);

    HesseSearchResult res;
    for (int start = 0; start < max_starts; ++start) {
        ++res.attempts;
        const Vector s0 = random_complex_vector(1, rng);
        Scalar s = s0(0);
        double rnorm = 0.0;
        bool converged = false;
        for (int it = 0; it < 80; ++it) {
            const Vector r = torsion_residual(u, v, functional, s, n);
            rnorm = r.norm();
            if (!std::isfinite(rnorm)) break;
            if (rnorm < 1e-13) {
                converged = true;
                break;
            }
            const Scalar h = 1e-7 * (1.0 + std::abs(s));
            const Vector jac = (torsion_residual(u, v, functional, s + h, n) - r) / h;
            const double jj = jac.squaredNorm();
            if (jj == 0.0) break;
            Scalar step = -jac.dot(r) / jj;
            const double cap = 1.0 + std::abs(s);
            if (std::abs(step) > cap) step *= cap / std::abs(step);
            s += step;
        }
        std::ostringstream line;
        line << "start " << start << ": s=" << format_param(s) << " residual=" << rnorm;
        if (!converged) {
            res.trace.push_back(line.str() + " no convergence");
            continue;
        }
        Vector tau = u + s * v;
        tau /= tau(0);
        if (!sklyanin_parameters_generic(tau(0), tau(1), tau(2))) {
            res.trace.push_back(line.str() + " degenerate parameters");
            continue;
        }
        bool exact = true;
        for (int m = 1; m < n; ++m)
            if (n % m == 0 && linalg::projective_distance(hesse_multiple(tau, m), hesse_origin()) < 1e-6)
                exact = false;
        if (!exact) {
            res.trace.push_back(line.str() + " order is a proper divisor");
            continue;
        }
        try {
            const Presentation pres = sklyanin(tau(0), tau(1), tau(2));
            const LinearizedSystem lin = multilinearize(pres);
            const auto pts = sample_variety_points(lin, verify_points, rng);
            int ok = 0;
            for (const auto& p : pts)
                if (torsion_order(lin, p, n) == n) ++ok;
            if (ok != verify_points) {
                res.trace.push_back(line.str() + " orbit check failed on " + std::to_string(verify_points - ok) +
                                    " points");
                continue;
            }
            res.a = tau(0);
            res.b = tau(1);
            res.c = tau(2);
            res.witness = pts.front();
            res.verified_points = ok;
            res.residual = linalg::projective_distance(hesse_multiple(tau, n), hesse_origin());
            res.trace.push_back(line.str() + " accepted");
            return res;
        } catch (const std::exception& ex) {
            res.trace.push_back(line.str() + " rejected: " + ex.what());
        }
    }
    throw NumericalError("hesse_parameter_search: no parameters of exact order " + std::to_string(n) + " found in " +
                         std::to_string(max_starts) + " starts");
}

FatPoint point_orbit_rep(const Presentation& pres, const Vector& p, int n) {
    if (n < 1) throw InvalidArgument("point_orbit_rep: n must be positive");
    const LinearizedSystem lin = multilinearize(pres);
    std::vector<Vector> orbit{linalg::normalize_projective(p)};
    for (int j = 1; j < n; ++j) orbit.push_back(sigma(lin, orbit.back()));
    if (linalg::projective_distance(sigma(lin, orbit.back()), orbit.front()) > 1e-7)
        throw NumericalError("point_orbit_rep: point is not " + std::to_string(n) + "-periodic");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (linalg::projective_distance(orbit[i], orbit[j]) < 1e-6)
                throw NumericalError("point_orbit_rep: orbit collision");
    const int g = pres.generator_count();
    std::vector<std::vector<Matrix>> blocks(g, std::vector<Matrix>(n));
    for (int i = 0; i < g; ++i)
        for (int l = 0; l < n; ++l) blocks[i][l] = Matrix::Constant(1, 1, orbit[(n - l) % n](i));
    return FatPoint(pres, std::vector<int>(n, 1), std::move(blocks));
}

}  // namespace ncrep
