#include "ncrep/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ncrep/core.hpp"

namespace ncrep {

int total_degree(const Exponents& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::string monomial_string(const Exponents& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        out += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

WeightedAction::WeightedAction(std::vector<int> w, int ord) : weights(std::move(w)), order(ord) {
    if (order < 1) throw InvalidArgument("WeightedAction: order must be positive");
    variables = static_cast<int>(weights.size());
    for (int& x : weights) x = ((x % order) + order) % order;
}

bool WeightedAction::is_invariant(const Exponents& m) const {
    if (static_cast<int>(m.size()) != variables) throw InvalidArgument("WeightedAction: variable count mismatch");
    long long s = 0;
    for (int i = 0; i < variables; ++i) s += static_cast<long long>(weights[i]) * m[i];
    return s % order == 0;
}

std::vector<Exponents> monomials_of_degree(int variables, int degree) {
    std::vector<Exponents> out;
    if (variables <= 0) return out;
    Exponents cur(variables, 0);
    // Recursive fill: first variable takes the largest exponent first.
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == variables - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int a = left; a >= 0; --a) {
            cur[pos] = a;
            self(self, pos + 1, left - a);
        }
    };
    rec(rec, 0, degree);
    return out;
}

namespace {

bool leq(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents minus(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool representable(const Exponents& m, const std::vector<Exponents>& gens, std::map<Exponents, bool>& memo) {
    if (total_degree(m) == 0) return true;
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : gens)
        if (total_degree(g) > 0 && leq(g, m) && representable(minus(m, g), gens, memo)) {
            ok = true;
            break;
        }
    memo[m] = ok;
    return ok;
}

// Keep candidates (processed in ascending degree) that are not sums of
// previously kept ones.
std::vector<Exponents> sieve(const std::vector<Exponents>& candidates) {
    std::vector<Exponents> gens;
    for (const auto& m : candidates) {
        std::map<Exponents, bool> memo;
        if (!representable(m, gens, memo)) gens.push_back(m);
    }
    return gens;
}

}  // namespace

bool is_generated_by(const Exponents& m, const std::vector<Exponents>& gens) {
    if (total_degree(m) == 0) return false;
    std::map<Exponents, bool> memo;
    return representable(m, gens, memo);
}

std::vector<Exponents> cyclic_invariant_generators(const WeightedAction& w, int degree_bound) {
    if (degree_bound < 1) throw InvalidArgument("cyclic_invariant_generators: degree bound must be positive");
    std::vector<Exponents> candidates;
    for (int d = 1; d <= degree_bound; ++d)
        for (auto& m : monomials_of_degree(w.variables, d))
            if (w.is_invariant(m)) candidates.push_back(std::move(m));
    return sieve(candidates);
}

std::vector<Exponents> monomial_algebra_elements(const std::vector<Exponents>& gens, int degree_bound) {
    if (gens.empty()) return {};
    const std::size_t v = gens.front().size();
    for (const auto& g : gens)
        if (g.size() != v) throw InvalidArgument("monomial algebra: generators in different variable counts");
    std::set<Exponents> seen{Exponents(v, 0)};
    std::vector<Exponents> frontier{Exponents(v, 0)};
    while (!frontier.empty()) {
        std::vector<Exponents> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                if (total_degree(g) == 0) continue;
                Exponents p(v);
                for (std::size_t i = 0; i < v; ++i) p[i] = m[i] + g[i];
                if (total_degree(p) <= degree_bound && seen.insert(p).second) next.push_back(std::move(p));
            }
        frontier = std::move(next);
    }
    std::vector<Exponents> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a > b;
    });
    return out;
}

std::vector<Exponents> veronese_generators(const std::vector<Exponents>& gens, int k, int degree_bound) {
    if (k < 1) throw InvalidArgument("veronese_generators: k must be positive");
    std::vector<Exponents> candidates;
    for (auto& m : monomial_algebra_elements(gens, degree_bound)) {
        const int d = total_degree(m);
        if (d > 0 && d % k == 0) candidates.push_back(std::move(m));
    }
    return sieve(candidates);
}

}  // namespace ncrep
