#include "ncrep/gmat.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace ncrep {

namespace {

std::optional<int> exact_quotient(int num, int den) {
    if (num % den != 0) return std::nullopt;
    return num / den;
}

void check_exponent(int q) {
    if (q > kMaxLaurentExponent || q < -kMaxLaurentExponent)
        throw NumericalError("Laurent exponent " + std::to_string(q) + " outside [-64, 64]");
}

}  // namespace

ShiftedLaurentDescriptor::ShiftedLaurentDescriptor(std::vector<int> shifts, int t_degree)
    : shifts_(std::move(shifts)), e_(t_degree) {
    if (e_ < 1) throw InvalidArgument("descriptor: deg t must be at least 1");
    if (shifts_.empty()) throw InvalidArgument("descriptor: size must be at least 1");
    for (int a : shifts_)
        if (a < 0 || a >= e_) throw InvalidArgument("descriptor: shifts must lie in [0, e)");
    std::sort(shifts_.begin(), shifts_.end());
}

std::vector<int> ShiftedLaurentDescriptor::block_sizes() const {
    std::vector<int> m(e_, 0);
    for (int a : shifts_) ++m[a];
    return m;
}

DegreeShape degree_part_shape(const ShiftedLaurentDescriptor& d, int m) {
    const int k = d.size();
    const auto& a = d.shifts();
    DegreeShape shape(k, std::vector<std::optional<int>>(k));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) shape[r][c] = exact_quotient(m - a[r] + a[c], d.t_degree());
    return shape;
}

bool is_degree_one_generated(const ShiftedLaurentDescriptor& d) {
    const auto& a = d.shifts();
    if (a.front() != 0) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] - a[i - 1] > 1) return false;
    return a.back() == d.t_degree() - 1;
}

int degree_part_dimension(const ShiftedLaurentDescriptor& d, int m) {
    int n = 0;
    for (const auto& row : degree_part_shape(d, m))
        for (const auto& q : row) n += q.has_value();
    return n;
}

// --- Laurent polynomials ----------------------------------------------------

LaurentPoly LaurentPoly::monomial(int q, Scalar c) {
    LaurentPoly p;
    p.add_term(q, c);
    return p;
}

Scalar LaurentPoly::coefficient(int q) const {
    auto it = terms_.find(q);
    return it == terms_.end() ? Scalar{} : it->second;
}

void LaurentPoly::add_term(int q, Scalar c) {
    check_exponent(q);
    if (!is_finite(c)) throw InvalidArgument("LaurentPoly: non-finite coefficient");
    auto [it, inserted] = terms_.try_emplace(q, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kDropTol) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [q, c] : o.terms_) r.add_term(q, c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [q1, c1] : terms_)
        for (const auto& [q2, c2] : o.terms_) r.add_term(q1 + q2, c1 * c2);
    return r;
}

// --- matrices ---------------------------------------------------------------

LaurentMatrix::LaurentMatrix(ShiftedLaurentDescriptor d)
    : desc_(std::move(d)), entries_(static_cast<std::size_t>(desc_.size()) * desc_.size()) {}

LaurentMatrix LaurentMatrix::identity(const ShiftedLaurentDescriptor& d) {
    LaurentMatrix out(d);
    for (int r = 0; r < d.size(); ++r) out.set_entry(r, r, LaurentPoly::monomial(0));
    return out;
}

LaurentMatrix LaurentMatrix::homogeneous(const ShiftedLaurentDescriptor& d, int m, const Matrix& values) {
    const int k = d.size();
    if (values.rows() != k || values.cols() != k) throw InvalidArgument("LaurentMatrix: value shape mismatch");
    const auto shape = degree_part_shape(d, m);
    LaurentMatrix out(d);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            if (std::abs(values(r, c)) < kDropTol) continue;
            if (!shape[r][c]) throw InvalidArgument("LaurentMatrix: entry not allowed in this degree");
            out.set_entry(r, c, LaurentPoly::monomial(*shape[r][c], values(r, c)));
        }
    return out;
}

bool LaurentMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

std::optional<int> LaurentMatrix::homogeneous_degree() const {
    const int k = desc_.size();
    const auto& a = desc_.shifts();
    std::optional<int> deg;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            for (const auto& [q, v] : entry(r, c).terms()) {
                const int m = q * desc_.t_degree() + a[r] - a[c];
                if (deg && *deg != m) return std::nullopt;
                deg = m;
            }
    return deg;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (!(desc_ == o.desc_)) throw InvalidArgument("LaurentMatrix: descriptor mismatch");
    const int k = desc_.size();
    LaurentMatrix out(desc_);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            LaurentPoly s;
            for (int j = 0; j < k; ++j) {
                const auto& x = entry(r, j);
                const auto& y = o.entry(j, c);
                if (!x.is_zero() && !y.is_zero()) s = s + x * y;
            }
            out.set_entry(r, c, std::move(s));
        }
    return out;
}

LaurentMatrix multiply(const LaurentMatrix& p, const LaurentMatrix& q) { return p * q; }

int generated_part_dimension(const ShiftedLaurentDescriptor& d, int m) {
    const int k = d.size(), e = d.t_degree();

    std::vector<LaurentMatrix> degree_one;
    const auto shape1 = degree_part_shape(d, 1);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            if (shape1[r][c]) {
                LaurentMatrix x(d);
                x.set_entry(r, c, LaurentPoly::monomial(*shape1[r][c]));
                degree_one.push_back(std::move(x));
            }

    auto support = [k](const LaurentMatrix& x) {
        std::set<std::pair<int, int>> s;
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                if (!x.entry(r, c).is_zero()) s.insert({r, c});
        return s;
    };

    // Products of L degree-one basis elements are again single-entry matrices,
    // so the span of all of them is described by their supports. The central
    // factor is restricted to t^{-i}, i >= 0: positive powers of t have to come
    // from products of degree-one elements.
    const int max_len = m + e * (k + 1);
    std::set<std::pair<int, int>> generated;
    std::vector<LaurentMatrix> layer{LaurentMatrix::identity(d)};
    for (int len = 0; len <= max_len && !layer.empty(); ++len) {
        if (m - len <= 0 && (m - len) % e == 0) {
            const LaurentMatrix central =
                LaurentMatrix::homogeneous(d, m - len, Matrix::Identity(k, k));  // t^{(m-len)/e} * 1
            for (const auto& x : layer) {
                const auto s = support(central * x);
                generated.insert(s.begin(), s.end());
            }
        }
        std::vector<LaurentMatrix> next;
        std::set<std::pair<int, int>> seen;
        for (const auto& x : layer)
            for (const auto& y : degree_one) {
                LaurentMatrix p = x * y;
                if (p.is_zero()) continue;
                const auto s = support(p);
                if (seen.insert(*s.begin()).second || s.size() > 1) next.push_back(std::move(p));
            }
        layer = std::move(next);
    }
    return static_cast<int>(generated.size());
}

}  // namespace ncrep
