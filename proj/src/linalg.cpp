#include "ncrep/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ncrep::linalg {

namespace {
int rank_from_singular(const Eigen::VectorXd& s, double tol) {
    if (s.size() == 0 || s(0) == 0.0) return 0;
    const double cut = tol * s(0);
    int r = 0;
    while (r < s.size() && s(r) > cut) ++r;
    return r;
}
}  // namespace

RankInfo rank_info(const Matrix& a, double tol) {
    RankInfo info;
    if (a.size() == 0) return info;
    Eigen::JacobiSVD<Matrix> svd(a);
    const auto& s = svd.singularValues();
    info.rank = rank_from_singular(s, tol);
    info.sigma_max = s.size() ? s(0) : 0.0;
    info.sigma_min = s.size() ? s(s.size() - 1) : 0.0;
    return info;
}

int numerical_rank(const Matrix& a, double tol) { return rank_info(a, tol).rank; }

Matrix kernel(const Matrix& a, double tol) {
    const Eigen::Index n = a.cols();
    if (a.rows() == 0 || a.norm() == 0.0) return Matrix::Identity(n, n);
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
    const int r = rank_from_singular(svd.singularValues(), tol);
    return svd.matrixV().rightCols(n - r);
}

Matrix complement(const Matrix& a, double tol) {
    const Eigen::Index n = a.rows();
    if (a.cols() == 0 || a.norm() == 0.0) return Matrix::Identity(n, n);
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU);
    const int r = rank_from_singular(svd.singularValues(), tol);
    return svd.matrixU().rightCols(n - r);
}

Matrix range(const Matrix& a, double tol) {
    if (a.cols() == 0 || a.norm() == 0.0) return Matrix(a.rows(), 0);
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
    const int r = rank_from_singular(svd.singularValues(), tol);
    return svd.matrixU().leftCols(r);
}

Matrix echelon_basis(const Matrix& basis, double clean) {
    // Row-reduce the transpose: rows are basis vectors.
    Matrix m = basis.transpose();
    const Eigen::Index rows = m.rows(), cols = m.cols();
    const double scale = m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
    const double pivot_tol = 1e-8 * (scale > 0 ? scale : 1.0);
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index best = r;
        for (Eigen::Index i = r + 1; i < rows; ++i)
            if (std::abs(m(i, c)) > std::abs(m(best, c))) best = i;
        if (std::abs(m(best, c)) <= pivot_tol) continue;
        m.row(r).swap(m.row(best));
        m.row(r) /= m(r, c);
        for (Eigen::Index i = 0; i < rows; ++i)
            if (i != r) m.row(i) -= m(i, c) * m.row(r);
        ++r;
    }
    m.conservativeResize(r, cols);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            Scalar& z = m(i, j);
            z = Scalar(std::abs(z.real()) < clean ? 0.0 : z.real(), std::abs(z.imag()) < clean ? 0.0 : z.imag());
        }
    return m.transpose();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double inverse_condition(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(a);
    const auto& s = svd.singularValues();
    if (s(0) == 0.0) return 0.0;
    return s(s.size() - 1) / s(0);
}

double projective_distance(const Vector& p, const Vector& q) {
    const double pp = p.squaredNorm(), qq = q.squaredNorm();
    if (pp == 0.0 || qq == 0.0) return 1.0;
    // |q - proj_p q| / |q| avoids the cancellation of 1 - cos^2.
    const Vector rest = q - (p.dot(q) / pp) * p;
    return rest.norm() / std::sqrt(qq);
}

Vector normalize_projective(const Vector& p) {
    Eigen::Index idx = 0;
    p.cwiseAbs().maxCoeff(&idx);
    if (std::abs(p(idx)) == 0.0) throw InvalidArgument("normalize_projective: zero vector");
    return p / p(idx);
}

}  // namespace ncrep::linalg
