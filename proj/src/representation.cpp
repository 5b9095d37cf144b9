#include "ncrep/representation.hpp"

#include <algorithm>
#include <cmath>

#include "ncrep/linalg.hpp"

namespace ncrep {

Representation::Representation(Presentation algebra, std::vector<Matrix> mats)
    : algebra_(std::move(algebra)), mats_(std::move(mats)) {
    if (static_cast<int>(mats_.size()) != algebra_.generator_count())
        throw InvalidArgument("Representation: need one matrix per generator");
    const Eigen::Index k = mats_.front().rows();
    if (k < 1) throw InvalidArgument("Representation: dimension must be positive");
    for (const auto& m : mats_) {
        if (m.rows() != k || m.cols() != k) throw InvalidArgument("Representation: matrices must be k x k");
        if (!m.allFinite()) throw InvalidArgument("Representation: non-finite entry");
    }
}

Representation Representation::conjugated(const Matrix& g) const {
    const Matrix gi = g.inverse();
    std::vector<Matrix> out;
    for (const auto& m : mats_) out.push_back(g * m * gi);
    return Representation(algebra_, std::move(out));
}

Representation Representation::scaled(Scalar s) const {
    std::vector<Matrix> out;
    for (const auto& m : mats_) out.push_back(s * m);
    return Representation(algebra_, std::move(out));
}

std::vector<Matrix> balanced(const std::vector<Matrix>& mats, int max_iterations) {
    std::vector<Matrix> cur = mats;
    if (cur.empty()) return cur;
    const Eigen::Index k = cur.front().rows();
    auto total = [](const std::vector<Matrix>& xs) {
        double s = 0.0;
        for (const auto& x : xs) s += x.squaredNorm();
        return s;
    };
    double norm2 = total(cur);
    double step = 0.5;
    for (int it = 0; it < max_iterations && norm2 > 0.0; ++it) {
        Matrix mu = Matrix::Zero(k, k);
        for (const auto& x : cur) mu += x * x.adjoint() - x.adjoint() * x;
        if (mu.norm() <= 1e-12 * norm2) break;
        Eigen::SelfAdjointEigenSolver<Matrix> es(mu / norm2);
        bool moved = false;
        while (step > 1e-8) {
            const Eigen::VectorXd ev = es.eigenvalues();
            const Matrix u = es.eigenvectors();
            const Matrix g = u * (-step * ev).array().exp().matrix().cast<Scalar>().asDiagonal() * u.adjoint();
            const Matrix gi = u * (step * ev).array().exp().matrix().cast<Scalar>().asDiagonal() * u.adjoint();
            std::vector<Matrix> trial;
            trial.reserve(cur.size());
            for (const auto& x : cur) trial.push_back(g * x * gi);
            const double t = total(trial);
            if (t < norm2) {
                cur = std::move(trial);
                norm2 = t;
                step = std::min(step * 2.0, 8.0);
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    return cur;
}

int generated_algebra_dimension(const std::vector<Matrix>& mats, double tol) {
    if (mats.empty()) return 1;
    const Eigen::Index k = mats.front().rows();
    const Eigen::Index n = k * k;
    std::vector<Matrix> gens;
    for (const auto& m : mats) {
        const double s = m.norm();
        if (s > 0) gens.push_back(m / s);
    }
    Matrix basis(n, 0);  // orthonormal, vec of accepted matrices
    std::vector<Matrix> frontier;
    auto try_add = [&](const Matrix& m) {
        Vector v = Eigen::Map<const Vector>(m.data(), n);
        const double nv = v.norm();
        if (nv == 0.0) return false;
        for (int pass = 0; pass < 2; ++pass) v -= basis * (basis.adjoint() * v);
        if (v.norm() <= tol * nv) return false;
        basis.conservativeResize(n, basis.cols() + 1);
        basis.col(basis.cols() - 1) = v / v.norm();
        return true;
    };
    const Matrix id = Matrix::Identity(k, k);
    try_add(id);
    frontier.push_back(id);
    // Grow span{words} by right multiplication until it stops growing.
    while (!frontier.empty() && basis.cols() < n) {
        std::vector<Matrix> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                Matrix p = w * g;
                const double s = p.norm();
                if (s == 0.0) continue;
                p /= s;
                if (try_add(p)) next.push_back(std::move(p));
                if (basis.cols() == n) break;
            }
        frontier = std::move(next);
    }
    return static_cast<int>(basis.cols());
}

bool is_simple(const Representation& r, double tol) {
    const int k = r.dimension();
    return generated_algebra_dimension(r.mats(), tol) == k * k;
}

Matrix intertwiners(const std::vector<Matrix>& a, const std::vector<Matrix>& b, double tol) {
    if (a.size() != b.size() || a.empty()) throw InvalidArgument("intertwiners: tuple size mismatch");
    const Eigen::Index k = a.front().rows();
    if (b.front().rows() != k) throw InvalidArgument("intertwiners: dimension mismatch");
    const Matrix id = Matrix::Identity(k, k);
    Matrix sys(static_cast<Eigen::Index>(a.size()) * k * k, k * k);
    for (std::size_t i = 0; i < a.size(); ++i)
        sys.middleRows(static_cast<Eigen::Index>(i) * k * k, k * k) =
            linalg::kron(a[i].transpose(), id) - linalg::kron(id, b[i]);
    if (sys.norm() == 0.0) return Matrix::Identity(k * k, k * k);
    // Absolute floor so that nearly-equal tuples still produce a kernel.
    Eigen::JacobiSVD<Matrix> svd(sys, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double scale = std::max(1.0, a.front().norm() + b.front().norm());
    Eigen::Index rank = 0;
    while (rank < s.size() && s(rank) > tol * std::max(s(0), scale)) ++rank;
    return svd.matrixV().rightCols(k * k - rank);
}

std::vector<Scalar> trace_fingerprint(const Representation& r, int max_length) {
    const int g = r.algebra().generator_count();
    const int k = r.dimension();
    if (max_length < 0) {
        max_length = 2 * k;
        long long total = 1, layer = 1;
        int len = 0;
        while (len < max_length && total + layer * g <= 4096) {
            layer *= g;
            total += layer;
            ++len;
        }
        max_length = std::max(len, 1);
    }
    std::vector<Scalar> out;
    std::vector<Matrix> layer{Matrix::Identity(k, k)};
    out.push_back(static_cast<double>(k));
    for (int len = 1; len <= max_length; ++len) {
        std::vector<Matrix> next;
        next.reserve(layer.size() * g);
        for (const auto& w : layer)
            for (int i = 0; i < g; ++i) {
                next.push_back(w * r[i]);
                out.push_back(next.back().trace());
            }
        layer = std::move(next);
    }
    return out;
}

bool are_equivalent(const Representation& a, const Representation& b, double tol) {
    if (a.dimension() != b.dimension()) throw InvalidArgument("are_equivalent: dimension mismatch");
    if (a.algebra().generator_count() != b.algebra().generator_count())
        throw InvalidArgument("are_equivalent: generator count mismatch");
    const auto fa = trace_fingerprint(a), fb = trace_fingerprint(b);
    double scale = 1.0;
    for (const auto& x : fa) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i < fa.size(); ++i)
        if (std::abs(fa[i] - fb[i]) > tol * scale) return false;
    const Matrix ker = intertwiners(a.mats(), b.mats(), 1e-7);
    if (ker.cols() == 0) return false;
    // A generic element of the intertwiner space is invertible if any is.
    Vector coeffs(ker.cols());
    for (Eigen::Index j = 0; j < ker.cols(); ++j) coeffs(j) = Scalar(1.0 + 0.37 * j, 0.11 * j - 0.5);
    const Vector t = ker * coeffs;
    const int k = a.dimension();
    const Matrix tm = Eigen::Map<const Matrix>(t.data(), k, k);
    return linalg::inverse_condition(tm) > 1e-8;
}

CentralCharacter central_character(const Representation& r, const std::vector<NCPoly>& centrals, double tol) {
    CentralCharacter chi;
    const int k = r.dimension();
    for (const auto& c : centrals) {
        const Matrix e = r.evaluate(c);
        const Scalar s = e.trace() / static_cast<double>(k);
        const double off = (e - s * Matrix::Identity(k, k)).norm();
        if (off > tol * std::max(1.0, e.norm()))
            throw NumericalError("central_character: image of " + c.to_string(r.algebra().generator_names()) +
                                 " is not scalar (off-scalar norm " + std::to_string(off) + ")");
        chi.add(c, s);
    }
    return chi;
}

}  // namespace ncrep
