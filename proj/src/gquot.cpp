#include "ncrep/gquot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ncrep/linalg.hpp"

namespace ncrep {

namespace {

// T[f][i][j]: coefficient of x_i x_j in relation f.
std::vector<Matrix> relation_tensors(const Presentation& pres) {
    const int g = pres.generator_count();
    std::vector<Matrix> out;
    for (const auto& r : pres.relations()) {
        Matrix t = Matrix::Zero(g, g);
        for (const auto& [m, c] : r.terms()) t(m[0], m[1]) += c;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

GradedQuotient::GradedQuotient(Presentation pres, int max_degree, double tol)
    : pres_(std::move(pres)), tol_(tol) {
    if (max_degree < 0) throw InvalidArgument("GradedQuotient: negative degree");
    const int g = pres_.generator_count();
    const auto tensors = relation_tensors(pres_);

    GradedBasis zero;
    zero.degree = 0;
    zero.representatives = {Monomial{}};
    zero.rep_to_orth = Matrix::Identity(1, 1);
    zero.orth_to_rep = Matrix::Identity(1, 1);
    degrees_.push_back(std::move(zero));

    for (int d = 1; d <= max_degree; ++d) {
        const GradedBasis& prev = degrees_[d - 1];
        const int dim_prev = prev.dim();
        const int n = dim_prev * g;

        Matrix ideal(n, 0);
        if (d >= 2 && !tensors.empty()) {
            const GradedBasis& prev2 = degrees_[d - 2];
            ideal.resize(n, prev2.dim() * static_cast<int>(tensors.size()));
            int col = 0;
            for (int b = 0; b < prev2.dim(); ++b) {
                for (const auto& t : tensors) {
                    // b * f = sum_ij T_ij (b x_i) x_j
                    for (int a = 0; a < dim_prev; ++a)
                        for (int j = 0; j < g; ++j) {
                            Scalar s{};
                            for (int i = 0; i < g; ++i) s += t(i, j) * prev.projection(a, b * g + i);
                            ideal(a * g + j, col) = s;
                        }
                    ++col;
                }
            }
        }

        GradedBasis cur;
        cur.degree = d;
        const Matrix perp = linalg::complement(ideal, tol_);
        cur.projection = perp.adjoint();
        const int dim = static_cast<int>(perp.cols());

        // Candidates rep_{d-1} * x_j, greedy in degree-lex order.
        struct Candidate {
            Monomial word;
            Vector orth;
        };
        std::vector<Candidate> cands;
        cands.reserve(n);
        for (int a = 0; a < dim_prev; ++a)
            for (int j = 0; j < g; ++j) {
                Vector v = Vector::Zero(dim);
                for (int b = 0; b < dim_prev; ++b) v += prev.rep_to_orth(b, a) * cur.projection.col(b * g + j);
                cands.push_back({prev.representatives[a] * Monomial{j}, std::move(v)});
            }
        std::sort(cands.begin(), cands.end(), [](const auto& l, const auto& r) { return l.word < r.word; });

        Matrix ortho(dim, 0);
        cur.rep_to_orth.resize(dim, 0);
        for (const auto& c : cands) {
            if (static_cast<int>(cur.representatives.size()) == dim) break;
            const double nv = c.orth.norm();
            if (nv <= tol_) continue;
            Vector r = c.orth;
            for (int pass = 0; pass < 2; ++pass) r -= ortho * (ortho.adjoint() * r);
            if (r.norm() <= 1e-7 * nv) continue;
            ortho.conservativeResize(dim, ortho.cols() + 1);
            ortho.col(ortho.cols() - 1) = r / r.norm();
            cur.rep_to_orth.conservativeResize(dim, cur.rep_to_orth.cols() + 1);
            cur.rep_to_orth.col(cur.rep_to_orth.cols() - 1) = c.orth;
            cur.representatives.push_back(c.word);
        }
        if (static_cast<int>(cur.representatives.size()) != dim)
            throw NumericalError("GradedQuotient: could not select representative monomials in degree " +
                                 std::to_string(d));
        cur.orth_to_rep = dim ? Matrix(cur.rep_to_orth.inverse()) : Matrix(0, 0);
        degrees_.push_back(std::move(cur));
    }
}

const GradedBasis& GradedQuotient::basis(int d) const {
    if (d < 0 || d > max_degree())
        throw InvalidArgument("GradedQuotient: degree " + std::to_string(d) + " not computed (max " +
                              std::to_string(max_degree()) + ")");
    return degrees_[d];
}

std::vector<int> GradedQuotient::hilbert_function() const {
    std::vector<int> out;
    for (const auto& b : degrees_) out.push_back(b.dim());
    return out;
}

Vector GradedQuotient::advance(const Vector& v, int from_degree, int generator) const {
    const GradedBasis& next = basis(from_degree + 1);
    const int dim_prev = degrees_[from_degree].dim();
    const int g = pres_.generator_count();
    Vector out = Vector::Zero(next.dim());
    for (int b = 0; b < dim_prev; ++b) out += v(b) * next.projection.col(b * g + generator);
    return out;
}

Vector GradedQuotient::orth_coordinates(const Monomial& m) const {
    if (m.degree() > max_degree())
        throw InvalidArgument("GradedQuotient: word degree exceeds computed range");
    Vector v = Vector::Ones(1);
    for (int t = 0; t < m.degree(); ++t) {
        if (m[t] < 0 || m[t] >= pres_.generator_count()) throw InvalidArgument("word: generator out of range");
        v = advance(v, t, m[t]);
    }
    return v;
}

int GradedQuotient::homogeneous_degree_or_throw(const NCPoly& p, std::optional<int> degree) const {
    const auto hd = p.homogeneous_degree();
    if (p.is_zero()) {
        if (!degree) throw InvalidArgument("normal_form: zero polynomial needs an explicit degree");
        return *degree;
    }
    if (!hd) throw InvalidArgument("normal_form: polynomial is not homogeneous");
    if (degree && *degree != *hd) throw InvalidArgument("normal_form: degree mismatch");
    return *hd;
}

Vector GradedQuotient::orth_coordinates(const NCPoly& p, int degree) const {
    Vector v = Vector::Zero(basis(degree).dim());
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != degree) throw InvalidArgument("orth_coordinates: inhomogeneous polynomial");
        v += c * orth_coordinates(m);
    }
    return v;
}

Vector GradedQuotient::normal_form(const NCPoly& p, std::optional<int> degree) const {
    const int d = homogeneous_degree_or_throw(p, degree);
    return basis(d).orth_to_rep * orth_coordinates(p, d);
}

NCPoly GradedQuotient::lift(const Vector& coords, int degree) const {
    const GradedBasis& b = basis(degree);
    if (coords.size() != b.dim()) throw InvalidArgument("lift: coordinate size mismatch");
    NCPoly out;
    for (int k = 0; k < b.dim(); ++k)
        if (std::abs(coords(k)) >= kDropTol) out.add_term(b.representatives[k], coords(k));
    return out;
}

double GradedQuotient::residual_norm(const NCPoly& p, std::optional<int> degree) const {
    if (p.is_zero()) return 0.0;
    const int d = homogeneous_degree_or_throw(p, degree);
    double coeff = 0.0;
    for (const auto& [m, c] : p.terms()) coeff += std::norm(c);
    return orth_coordinates(p, d).norm() / std::sqrt(coeff);
}

bool GradedQuotient::in_ideal(const NCPoly& p, double tol) const { return residual_norm(p) <= tol; }

NCPoly GradedQuotient::multiply(const NCPoly& a, const NCPoly& b) const {
    const NCPoly prod = a * b;
    const auto da = a.homogeneous_degree(), db = b.homogeneous_degree();
    if (prod.is_zero()) return prod;
    if (!da || !db) throw InvalidArgument("GradedQuotient::multiply: inhomogeneous factor");
    return lift(normal_form(prod), *da + *db);
}

Matrix GradedQuotient::central_elements(int d) const {
    if (d < 0 || d + 1 > max_degree())
        throw InvalidArgument("central_elements: need degree " + std::to_string(d + 1) + " in the quotient");
    const GradedBasis& b = basis(d);
    const int g = pres_.generator_count();
    const int next_dim = basis(d + 1).dim();
    Matrix commutator = Matrix::Zero(static_cast<Eigen::Index>(g) * next_dim, b.dim());
    for (int k = 0; k < b.dim(); ++k) {
        for (int i = 0; i < g; ++i) {
            const Vector right = advance(b.rep_to_orth.col(k), d, i);
            const Vector left = orth_coordinates(Monomial{i} * b.representatives[k]);
            commutator.block(static_cast<Eigen::Index>(i) * next_dim, k, next_dim, 1) = left - right;
        }
    }
    const Matrix ker = linalg::kernel(commutator, tol_);
    if (ker.cols() == 0) return Matrix(b.dim(), 0);
    return linalg::echelon_basis(ker);
}

std::vector<NCPoly> GradedQuotient::central_polys(int d) const {
    const Matrix c = central_elements(d);
    std::vector<NCPoly> out;
    for (Eigen::Index j = 0; j < c.cols(); ++j) out.push_back(lift(c.col(j), d));
    return out;
}

GradedBasis basis(const Presentation& pres, int degree) { return GradedQuotient(pres, degree).basis(degree); }

Vector normal_form(const Presentation& pres, const NCPoly& p) {
    const auto d = p.homogeneous_degree();
    if (!d) throw InvalidArgument("normal_form: polynomial is not homogeneous");
    return GradedQuotient(pres, *d).normal_form(p);
}

std::vector<NCPoly> central_elements(const Presentation& pres, int degree) {
    return GradedQuotient(pres, degree + 1).central_polys(degree);
}

std::vector<int> hilbert_function(const Presentation& pres, int d_max) {
    return GradedQuotient(pres, d_max).hilbert_function();
}

// --- quantum plane trace ---------------------------------------------------

QuantumPlaneTrace::QuantumPlaneTrace(int n, Scalar rho) : n_(n), rho_(rho) {
    if (n < 2) throw InvalidArgument("QuantumPlaneTrace: n must be at least 2");
    Scalar p = 1.0;
    for (int k = 1; k <= n; ++k) {
        p *= rho;
        const bool one = std::abs(p - Scalar(1.0)) < 1e-9;
        if (k < n && one) throw InvalidArgument("QuantumPlaneTrace: rho is not a primitive n-th root of unity");
        if (k == n && !one) throw InvalidArgument("QuantumPlaneTrace: rho^n != 1");
    }
}

QuantumPlaneTrace::Reduced QuantumPlaneTrace::reduce(const Monomial& word) const {
    Reduced r;
    long long inversions = 0;
    int ys_seen = 0;
    for (int g : word.word()) {
        if (g == 0) {
            ++r.k;
            inversions += ys_seen;
        } else if (g == 1) {
            ++r.l;
            ++ys_seen;
        } else {
            throw InvalidArgument("QuantumPlaneTrace: word uses a generator other than x, y");
        }
    }
    r.rho_power = static_cast<int>(((-inversions) % n_ + n_) % n_);
    return r;
}

std::optional<QuantumPlaneTrace::Reduced> QuantumPlaneTrace::trace_word(const Monomial& word) const {
    const Reduced r = reduce(word);
    if (r.k % n_ != 0 || r.l % n_ != 0) return std::nullopt;
    return r;
}

NCPoly QuantumPlaneTrace::apply(const NCPoly& a) const {
    NCPoly out;
    for (const auto& [m, c] : a.terms()) {
        const auto r = trace_word(m);
        if (!r) continue;
        std::vector<int> w(r->k, 0);
        w.insert(w.end(), r->l, 1);
        out.add_term(Monomial(std::move(w)), c * static_cast<double>(n_) * std::pow(rho_, r->rho_power));
    }
    return out;
}

Presentation QuantumPlaneTrace::algebra() const {
    NCPoly rel = NCPoly::monomial(Monomial{0, 1}) - NCPoly::monomial(Monomial{1, 0}, rho_);
    return Presentation({"x", "y"}, {rel}, "qplane");
}

NCPoly trace_quantum_plane(int n, int k, int l) {
    if (n < 2) throw InvalidArgument("trace_quantum_plane: n must be at least 2");
    if (k < 0 || l < 0) throw InvalidArgument("trace_quantum_plane: negative exponent");
    if (k % n != 0 || l % n != 0) return NCPoly{};
    std::vector<int> w(k, 0);
    w.insert(w.end(), l, 1);
    return NCPoly::monomial(Monomial(std::move(w)), static_cast<double>(n));
}

double cayley_hamilton_check(const GradedQuotient& algebra, const QuantumPlaneTrace& tr, const NCPoly& a, int n) {
    if (n < 1) throw InvalidArgument("cayley_hamilton_check: n must be positive");
    int d = 0;
    if (!a.is_zero()) {
        const auto hd = a.homogeneous_degree();
        if (!hd) throw InvalidArgument("cayley_hamilton_check: element must be homogeneous");
        d = *hd;
    }
    if (n * d > algebra.max_degree())
        throw InvalidArgument("cayley_hamilton_check: trace needed in degree " + std::to_string(n * d) +
                              " beyond computed range");

    std::vector<NCPoly> powers{NCPoly::constant(1.0)};
    for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * a);
    std::vector<NCPoly> power_sums(n + 1);
    for (int k = 1; k <= n; ++k) power_sums[k] = tr.apply(powers[k]);

    // Newton: j c_j = -sum_{i=1}^{j} c_{j-i} p_i.
    std::vector<NCPoly> c(n + 1);
    c[0] = NCPoly::constant(1.0);
    for (int j = 1; j <= n; ++j) {
        NCPoly s;
        for (int i = 1; i <= j; ++i) s += c[j - i] * power_sums[i];
        c[j] = s * Scalar(-1.0 / j);
    }
    NCPoly chi;
    for (int j = 0; j <= n; ++j) chi += c[j] * powers[n - j];
    return algebra.residual_norm(chi, n * d);
}

}  // namespace ncrep
