#include "ncrep/freealg.hpp"

#include <algorithm>
#include <sstream>

namespace ncrep {

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<int> w = word_;
    w.insert(w.end(), other.word_.begin(), other.word_.end());
    return Monomial(std::move(w));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = word_.size() <=> other.word_.size(); c != 0) return c;
    return word_ <=> other.word_;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
    if (word_.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < word_.size()) {
        std::size_t j = i;
        while (j < word_.size() && word_[j] == word_[i]) ++j;
        const int g = word_[i];
        out += (g >= 0 && static_cast<std::size_t>(g) < names.size()) ? names[g] : "x" + std::to_string(g);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::vector<Monomial> degree_monomials(int generators, int degree) {
    if (generators < 0 || degree < 0) throw InvalidArgument("degree_monomials: negative argument");
    std::vector<Monomial> out;
    if (generators == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    std::vector<int> w(degree, 0);
    while (true) {
        out.emplace_back(w);
        int pos = degree - 1;
        while (pos >= 0 && w[pos] == generators - 1) w[pos--] = 0;
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

NCPoly NCPoly::constant(Scalar c) { return monomial(Monomial{}, c); }

NCPoly NCPoly::monomial(Monomial m, Scalar c) {
    NCPoly p;
    p.add_term(m, c);
    return p;
}

std::optional<int> NCPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

int NCPoly::max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Scalar NCPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar{} : it->second;
}

void NCPoly::add_term(const Monomial& m, Scalar c) {
    if (!is_finite(c)) throw InvalidArgument("NCPoly: non-finite coefficient");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kDropTol) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

NCPoly NCPoly::operator+(const NCPoly& other) const {
    NCPoly r = *this;
    r += other;
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& other) const { return *this + other * Scalar(-1.0); }

NCPoly NCPoly::operator*(Scalar c) const {
    NCPoly r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& other) const {
    NCPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

NCPoly multiply(const NCPoly& p, const NCPoly& q) { return p * q; }

namespace {
std::string format_scalar(Scalar c) {
    std::ostringstream os;
    os.precision(6);
    if (std::abs(c.imag()) < 1e-12) {
        os << c.real();
    } else if (std::abs(c.real()) < 1e-12) {
        os << c.imag() << "i";
    } else {
        os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
    }
    return os.str();
}
}  // namespace

std::string NCPoly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (std::abs(c - Scalar(1.0)) < 1e-12 && !m.is_unit()) {
            out += m.to_string(names);
        } else {
            out += format_scalar(c);
            if (!m.is_unit()) out += "*" + m.to_string(names);
        }
    }
    return out;
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<NCPoly> relations,
                           std::string label)
    : names_(std::move(generator_names)), relations_(std::move(relations)), label_(std::move(label)) {
    if (names_.empty()) throw InvalidArgument("presentation needs at least one generator");
    const int g = generator_count();
    for (const auto& r : relations_) {
        if (r.is_zero()) throw InvalidArgument("presentation: zero relation");
        if (r.homogeneous_degree() != 2)
            throw InvalidArgument("presentation: relations must be homogeneous quadratic");
        for (const auto& [m, c] : r.terms())
            for (int i : m.word())
                if (i < 0 || i >= g) throw InvalidArgument("presentation: generator index out of range");
    }
}

Matrix evaluate(const NCPoly& p, std::span<const Matrix> mats) {
    if (mats.empty()) throw InvalidArgument("evaluate: no matrices");
    const Eigen::Index k = mats[0].rows();
    for (const auto& m : mats)
        if (m.rows() != k || m.cols() != k) throw InvalidArgument("evaluate: matrix size mismatch");
    Matrix out = Matrix::Zero(k, k);
    Matrix prod(k, k);
    for (const auto& [m, c] : p.terms()) {
        if (m.is_unit()) {
            out.diagonal().array() += c;
            continue;
        }
        for (int i : m.word())
            if (i < 0 || static_cast<std::size_t>(i) >= mats.size())
                throw InvalidArgument("evaluate: generator index out of range");
        prod = mats[m[0]];
        for (int t = 1; t < m.degree(); ++t) prod = prod * mats[m[t]];
        out += c * prod;
    }
    return out;
}

double relation_residual(const Presentation& pres, std::span<const Matrix> mats) {
    double worst = 0.0;
    for (const auto& r : pres.relations()) worst = std::max(worst, evaluate(r, mats).norm());
    return worst;
}

}  // namespace ncrep
