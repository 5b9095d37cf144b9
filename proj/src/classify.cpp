#include "ncrep/classify.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "ncrep/families.hpp"
#include "ncrep/gquot.hpp"
#include "ncrep/linalg.hpp"
#include "ncrep/ptvar.hpp"

namespace ncrep {

std::vector<NCPoly> CenterData::elements() const {
    std::vector<NCPoly> out;
    for (const auto& [d, polys] : by_degree) out.insert(out.end(), polys.begin(), polys.end());
    return out;
}

const NCPoly& CenterData::lowest() const {
    for (const auto& [d, polys] : by_degree)
        if (!polys.empty()) return polys.front();
    throw NumericalError("center has no elements of positive degree in the computed range");
}

CenterData center_data(const Presentation& pres, int max_degree) {
    if (max_degree < 1) throw InvalidArgument("center_data: max_degree must be positive");
    const GradedQuotient q(pres, max_degree + 1);
    CenterData cd;
    for (int d = 1; d <= max_degree; ++d) {
        auto polys = q.central_polys(d);
        if (polys.empty()) continue;
        // Span of products of lower-degree central elements.
        Matrix products(q.basis(d).dim(), 0);
        for (int i = 1; i < d; ++i) {
            auto a = cd.by_degree.find(i), b = cd.by_degree.find(d - i);
            if (a == cd.by_degree.end() || b == cd.by_degree.end()) continue;
            for (const auto& x : a->second)
                for (const auto& y : b->second) {
                    products.conservativeResize(Eigen::NoChange, products.cols() + 1);
                    products.col(products.cols() - 1) = q.normal_form(x * y, d);
                }
        }
        const int decomposable = products.cols() ? linalg::numerical_rank(products, 1e-8) : 0;
        if (static_cast<int>(polys.size()) > decomposable) cd.generator_degrees.push_back(d);
        cd.by_degree[d] = std::move(polys);
    }
    return cd;
}

int gcd_of(const std::vector<int>& values) {
    int g = 0;
    for (int v : values) g = std::gcd(g, v);
    return g;
}

std::set<int> Census::dimensions() const {
    std::set<int> out;
    for (const auto& [d, e] : histogram)
        if (e.count > 0) out.insert(d);
    return out;
}

namespace {

Scalar random_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> radius(0.6, 1.4);
    const double r = radius(rng);
    return std::polar(r, angle(rng));
}

SolveOptions reseeded(const SolveOptions& base, std::uint64_t salt) {
    SolveOptions o = base;
    o.seed = base.seed * 1000003ULL + salt;
    return o;
}

const NCPoly& degree_three_central(const CenterData& cd) {
    auto it = cd.by_degree.find(3);
    if (it == cd.by_degree.end() || it->second.size() != 1)
        throw InvalidArgument("expected a unique central element of degree 3");
    return it->second.front();
}

int stabilizer_code(const Representation& r) {
    const Stabilizer st = stabilizer_of(r);
    return st.infinite ? 0 : st.order;
}

void add_rows(Census& c, const std::string& id, const std::vector<Representation>& classes, const NCPoly& g,
              double residual, bool saturated) {
    std::map<std::pair<int, int>, int> groups;
    std::map<std::pair<int, int>, Scalar> gvals;
    for (const auto& r : classes) {
        const int order = stabilizer_code(r);
        const auto key = std::make_pair(r.dimension(), order);
        ++groups[key];
        if (!gvals.count(key)) gvals[key] = r.evaluate(g).trace() / static_cast<double>(r.dimension());
    }
    for (const auto& [key, count] : groups) {
        CensusRow row;
        row.character_id = id;
        row.dimension = key.first;
        row.stabilizer_order = key.second;
        row.class_count = count;
        row.residual = residual;
        row.g_value = gvals[key];
        row.saturated = saturated;
        c.rows.push_back(row);
        auto& h = c.histogram[key.first];
        h.count += count;
        h.stabilizer_orders.insert(key.second);
    }
}

}  // namespace

Census census(const Presentation& pres, int n, const CensusOptions& opts) {
    if (n < 2) throw InvalidArgument("census: torsion order must be at least 2");
    const CenterData cd = center_data(pres, std::max(n, 3));
    const NCPoly& g = degree_three_central(cd);
    std::mt19937_64 rng(opts.solve.seed);
    Census c;

    const int max_dim = opts.max_dimension > 0 ? opts.max_dimension : n;
    for (int j = 0; j < opts.samples; ++j) {
        const Scalar gamma = random_unit(rng);
        CentralCharacter chi;
        chi.add(g, gamma);
        for (int d = 1; d <= max_dim; ++d) {
            const SolveResult res = solve(pres, d, chi, reseeded(opts.solve, 100 * j + d));
            add_rows(c, "generic-" + std::to_string(j), res.classes, g, res.worst_residual, res.saturated);
        }
    }

    const LinearizedSystem lin = multilinearize(pres);
    const auto points = sample_variety_points(lin, opts.point_orbits, rng);
    for (std::size_t j = 0; j < points.size(); ++j) {
        const Representation r = assemble(point_orbit_rep(pres, points[j], n));
        add_rows(c, "orbit-" + std::to_string(j), {r}, g, r.residual(), true);
    }

    CentralCharacter origin;
    for (const auto& e : cd.elements()) origin.add(e, 0.0);
    const SolveResult res = solve(pres, 1, origin, reseeded(opts.solve, 999));
    add_rows(c, "origin", res.classes, g, res.worst_residual, res.saturated);
    return c;
}

FiberCount cover_fiber_count(const Presentation& pres, int n, const CentralCharacter& chi, const SolveOptions& opts) {
    if (n % 3 != 0) throw InvalidArgument("cover_fiber_count: n must be divisible by 3");
    const SolveResult res = solve(pres, n / 3, chi, opts);
    FiberCount f;
    f.count = static_cast<int>(res.classes.size());
    f.saturated = res.saturated;
    f.worst_residual = res.worst_residual;
    for (const auto& r : res.classes) f.stabilizer_orders.push_back(stabilizer_code(r));
    return f;
}

std::vector<CentralCharacter> sample_three_lines_characters(const Presentation& pres, int n, int count,
                                                            const SolveOptions& opts) {
    if (n % 3 != 0) throw InvalidArgument("three-lines characters need n divisible by 3");
    const CenterData cd = center_data(pres, n);
    const NCPoly& g = degree_three_central(cd);
    const auto elements = cd.elements();
    std::mt19937_64 rng(opts.seed);
    std::vector<CentralCharacter> out;
    for (int j = 0; static_cast<int>(out.size()) < count; ++j) {
        if (j >= 4 * count) throw NumericalError("no s-dimensional simples found for three-lines characters");
        CentralCharacter chi;
        chi.add(g, random_unit(rng));
        const SolveResult res = solve(pres, n / 3, chi, reseeded(opts, 7000 + j));
        if (res.classes.empty()) continue;
        out.push_back(central_character(res.classes.front(), elements));
    }
    return out;
}

FixedFatPoints fixed_fatpoint_count(const Presentation& pres, int n, const SolveOptions& opts) {
    if (n % 3 != 0 || n == 3) throw InvalidArgument("fixed_fatpoint_count: need 3 | n and n != 3");
    const CenterData cd = center_data(pres, 3);
    const NCPoly& g = degree_three_central(cd);
    CentralCharacter chi;
    chi.add(g, 1.0);
    const SolveResult res = solve(pres, n / 3, chi, opts);

    FixedFatPoints out;
    out.classes = static_cast<int>(res.classes.size());
    out.saturated = res.saturated;
    std::vector<const Representation*> trivial;
    for (const auto& r : res.classes) {
        const int order = stabilizer_code(r);
        out.stabilizer_orders.push_back(order);
        if (order == 1) trivial.push_back(&r);
    }
    // Group classes related by scaling all generators; with g fixed to 1 the
    // scalar is a cube root of unity.
    std::vector<int> family(trivial.size(), -1);
    for (std::size_t i = 0; i < trivial.size(); ++i) {
        if (family[i] >= 0) continue;
        family[i] = out.families++;
        for (std::size_t j = i + 1; j < trivial.size(); ++j) {
            if (family[j] >= 0) continue;
            for (int s = 1; s < 3; ++s) {
                const Scalar lambda = std::polar(1.0, 2.0 * std::numbers::pi * s / 3);
                if (are_equivalent(trivial[i]->scaled(lambda), *trivial[j])) {
                    family[j] = family[i];
                    break;
                }
            }
        }
    }
    return out;
}

FiberDegree fiber_degree_estimate(const Presentation& pres, int n, int samples, const SolveOptions& opts) {
    const CenterData cd = center_data(pres, std::max(n, 3));
    const NCPoly& c = cd.lowest();
    std::mt19937_64 rng(opts.seed);
    FiberDegree out;
    for (int j = 0; j < samples; ++j) {
        CentralCharacter chi;
        chi.add(c, random_unit(rng));
        const SolveResult res = solve(pres, n, chi, reseeded(opts, 500 + j));
        if (res.classes.empty()) {
            out.per_sample.push_back(0);
            continue;
        }
        out.per_sample.push_back(shift_orbit_size(disassemble(res.classes.front())));
    }
    out.consistent = !out.per_sample.empty() &&
                     std::all_of(out.per_sample.begin(), out.per_sample.end(),
                                 [&](int v) { return v == out.per_sample.front() && v > 0; });
    out.value = out.consistent ? out.per_sample.front() : 0;
    return out;
}

}  // namespace ncrep
