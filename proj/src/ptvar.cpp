#include "ncrep/ptvar.hpp"

#include <cmath>
#include <numbers>

#include "ncrep/linalg.hpp"

namespace ncrep {

Matrix LinearizedSystem::at(const Vector& p) const {
    if (p.size() != generators) throw InvalidArgument("LinearizedSystem: point has wrong length");
    Matrix m(relations(), generators);
    for (int f = 0; f < relations(); ++f) m.row(f) = p.transpose() * tensors[f];
    return m;
}

LinearizedSystem multilinearize(const Presentation& pres) {
    LinearizedSystem l;
    l.generators = pres.generator_count();
    for (const auto& r : pres.relations()) {
        if (r.homogeneous_degree() != 2) throw InvalidArgument("multilinearize: relation is not quadratic");
        Matrix t = Matrix::Zero(l.generators, l.generators);
        for (const auto& [m, c] : r.terms()) t(m[0], m[1]) += c;
        l.tensors.push_back(std::move(t));
    }
    return l;
}

namespace {

struct KernelInfo {
    int dim;
    Vector direction;  // smallest right singular vector
};

KernelInfo kernel_info(const LinearizedSystem& l, const Vector& p, double gap) {
    const int g = l.generators;
    const Vector q = p / p.norm();
    const Matrix m = l.relations() ? l.at(q) : Matrix::Zero(1, g);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    int rank = 0;
    if (s.size() && s(0) > 0.0)
        while (rank < s.size() && s(rank) > s(0) / gap) ++rank;
    return {g - rank, svd.matrixV().col(g - 1)};
}

}  // namespace

int kernel_dimension(const LinearizedSystem& l, const Vector& p, double gap) {
    if (p.norm() == 0.0) throw InvalidArgument("point must be nonzero");
    return kernel_info(l, p, gap).dim;
}

bool on_point_variety(const LinearizedSystem& l, const Vector& p, double gap) {
    return kernel_dimension(l, p, gap) >= 1;
}

Vector sigma(const LinearizedSystem& l, const Vector& p, double gap) {
    if (p.norm() == 0.0) throw InvalidArgument("sigma: point must be nonzero");
    const KernelInfo k = kernel_info(l, p, gap);
    if (k.dim != 1)
        throw KernelDimensionError("sigma: kernel of M(p) has dimension " + std::to_string(k.dim), k.dim);
    return linalg::normalize_projective(k.direction);
}

std::optional<int> torsion_order(const LinearizedSystem& l, const Vector& p, int max_n, double tol) {
    const Vector start = linalg::normalize_projective(p);
    Vector q = start;
    for (int n = 1; n <= max_n; ++n) {
        q = sigma(l, q);
        if (linalg::projective_distance(start, q) < tol) return n;
    }
    return std::nullopt;
}

Scalar variety_determinant(const LinearizedSystem& l, const Vector& p) {
    if (l.relations() != l.generators) throw InvalidArgument("variety_determinant: system is not square");
    return l.at(p).determinant();
}

Vector random_complex_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    Vector v(n);
    for (int i = 0; i < n; ++i) {
        const double re = nd(rng);
        const double im = nd(rng);
        v(i) = Scalar(re, im);
    }
    return v;
}

std::vector<Vector> sample_variety_points(const LinearizedSystem& l, int count, std::mt19937_64& rng) {
    const int g = l.generators;
    std::vector<Vector> out;
    if (l.relations() < g) {
        while (static_cast<int>(out.size()) < count) {
            Vector p = random_complex_vector(g, rng);
            if (kernel_dimension(l, p) == 1) out.push_back(linalg::normalize_projective(p));
        }
        return out;
    }
    if (l.relations() > g) throw InvalidArgument("sample_variety_points: more relations than generators");

    int lines = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++lines > 100 * (count + 1)) throw NumericalError("sample_variety_points: too many failed lines");
        const Vector u = random_complex_vector(g, rng), v = random_complex_vector(g, rng);
        // det M(u + s v) is a polynomial of degree <= g in s: interpolate on
        // the (g+1)-th roots of unity, then take companion-matrix roots.
        const int n = g + 1;
        Vector vals(n);
        for (int j = 0; j < n; ++j) {
            const Scalar s = std::polar(1.0, 2.0 * std::numbers::pi * j / n);
            vals(j) = variety_determinant(l, u + s * v);
        }
        Vector coef = Vector::Zero(n);  // coef(k): coefficient of s^k
        for (int k = 0; k < n; ++k) {
            for (int j = 0; j < n; ++j) coef(k) += vals(j) * std::polar(1.0, -2.0 * std::numbers::pi * j * k / n);
            coef(k) /= static_cast<double>(n);
        }
        int deg = n - 1;
        const double cmax = coef.cwiseAbs().maxCoeff();
        if (cmax == 0.0) continue;  // line inside the variety: skip, we want isolated points
        while (deg > 0 && std::abs(coef(deg)) < 1e-12 * cmax) --deg;
        if (deg == 0) continue;
        Matrix comp = Matrix::Zero(deg, deg);
        for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coef(i) / coef(deg);
        Eigen::ComplexEigenSolver<Matrix> es(comp);
        for (int r = 0; r < deg && static_cast<int>(out.size()) < count; ++r) {
            Scalar s = es.eigenvalues()(r);
            // Newton polish on the interpolated polynomial.
            for (int it = 0; it < 3; ++it) {
                Scalar f = 0.0, df = 0.0;
                for (int k = deg; k >= 0; --k) {
                    df = df * s + f;
                    f = f * s + coef(k);
                }
                if (std::abs(df) == 0.0) break;
                s -= f / df;
            }
            const Vector p = u + s * v;
            if (kernel_dimension(l, p) == 1) out.push_back(linalg::normalize_projective(p));
        }
    }
    return out;
}

}  // namespace ncrep
