#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncrep/classify.hpp"
#include "ncrep/families.hpp"
#include "ncrep/gquot.hpp"
#include "ncrep/io.hpp"
#include "ncrep/linalg.hpp"
#include "ncrep/ptvar.hpp"

using namespace ncrep;
using io::Json;

namespace {

struct Common {
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string out = "text";
    int threads = 0;
};

struct Output {
    Json json;
    std::string csv;
    std::string text;
};

void emit(const Common& c, const Output& o) {
    if (c.out == "json")
        std::cout << o.json.dump(2) << '\n';
    else if (c.out == "csv")
        std::cout << o.csv;
    else
        std::cout << o.text;
}

std::string sci(double x) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << x;
    return os.str();
}

std::string scalar_text(Scalar z, int digits = 10) {
    return io::format_double(z.real(), digits) + (z.imag() < 0 ? "" : "+") + io::format_double(z.imag(), digits) + "i";
}

// "re,im;re,im;..." -> vector
Vector parse_point(const std::string& text) {
    std::vector<Scalar> v;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ';')) v.push_back(io::parse_scalar(part));
    Vector p(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) p(static_cast<Eigen::Index>(i)) = v[i];
    return p;
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(io::scalar_to_json(v(i)));
    return out;
}

std::string point_text(const Vector& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ";" : "") + scalar_text(v(i));
    return s;
}

std::string poly_text(const NCPoly& p, const Presentation& pres) { return p.to_string(pres.generator_names()); }

// Central character from "d3.0=0.8,0.3;d6.1=0": basis element i of the
// degree-d center (echelon basis) mapped to the given value.
CentralCharacter parse_character(const Presentation& pres, const std::string& text) {
    CentralCharacter chi;
    if (text.empty()) return chi;
    std::map<int, std::vector<NCPoly>> cache;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ';')) {
        const auto eq = part.find('=');
        const auto dot = part.find('.');
        if (part.empty() || part[0] != 'd' || eq == std::string::npos || dot == std::string::npos || dot > eq)
            throw InvalidArgument("character entries look like d<degree>.<index>=<re>[,<im>], got '" + part + "'");
        const int d = std::stoi(part.substr(1, dot - 1));
        const int idx = std::stoi(part.substr(dot + 1, eq - dot - 1));
        if (d < 1) throw InvalidArgument("character degree must be positive");
        auto it = cache.find(d);
        if (it == cache.end()) it = cache.emplace(d, central_elements(pres, d)).first;
        if (idx < 0 || idx >= static_cast<int>(it->second.size()))
            throw InvalidArgument("the degree-" + std::to_string(d) + " center has " +
                                  std::to_string(it->second.size()) + " basis elements");
        chi.add(it->second[idx], io::parse_scalar(part.substr(eq + 1)));
    }
    return chi;
}

Json character_json(const CentralCharacter& chi, const Presentation& pres) {
    Json out = Json::array();
    for (std::size_t i = 0; i < chi.size(); ++i)
        out.push_back({{"element", poly_text(chi.elements[i], pres)}, {"value", io::scalar_to_json(chi.values[i])}});
    return out;
}

SolveOptions solve_options(const Common& c, int attempts) {
    SolveOptions o;
    o.attempts = attempts;
    o.seed = c.seed;
    o.threads = c.threads;
    return o;
}

Presentation torsion_algebra(int n, const Common& c, HesseSearchResult* found = nullptr) {
    const auto h = hesse_parameter_search(n, c.seed);
    if (found) *found = h;
    return sklyanin(h.a, h.b, h.c);
}

// ---------------------------------------------------------------------------

Output cmd_hilbert(const Common&, const std::string& spec, int dmax) {
    const auto pres = io::load_presentation(spec);
    const auto h = hilbert_function(pres, dmax);
    Output o;
    o.json = {{"algebra", pres.label()}, {"hilbert", h}};
    o.csv = "degree,dimension\n";
    for (std::size_t d = 0; d < h.size(); ++d) {
        o.csv += std::to_string(d) + "," + std::to_string(h[d]) + "\n";
        o.text += (d ? " " : "") + std::to_string(h[d]);
    }
    o.text += "\n";
    return o;
}

Output cmd_export(const Common&, const std::string& spec) {
    const auto pres = io::load_presentation(spec);
    Output o;
    o.json = io::presentation_to_json(pres);
    o.text = o.json.dump(2) + "\n";
    o.csv = "relation,polynomial\n";
    for (std::size_t i = 0; i < pres.relations().size(); ++i)
        o.csv += std::to_string(i) + "," + poly_text(pres.relations()[i], pres) + "\n";
    return o;
}

Output cmd_center(const Common& c, const std::string& spec, int degree) {
    const auto pres = io::load_presentation(spec);
    if (degree < 1) throw InvalidArgument("--degree must be positive");
    const GradedQuotient q(pres, degree + 1, c.tol);
    const auto polys = q.central_polys(degree);
    Output o;
    Json elems = Json::array();
    o.csv = "index,element,commutator-residual\n";
    o.text = "degree " + std::to_string(degree) + " center: dimension " + std::to_string(polys.size()) + "\n";
    for (std::size_t i = 0; i < polys.size(); ++i) {
        double res = 0.0;
        for (int j = 0; j < pres.generator_count(); ++j) {
            const NCPoly x = NCPoly::monomial(Monomial({j}));
            res = std::max(res, q.residual_norm(x * polys[i] - polys[i] * x, degree + 1));
        }
        const std::string s = poly_text(polys[i], pres);
        elems.push_back({{"element", s}, {"commutator_residual", res}});
        o.csv += std::to_string(i) + "," + s + "," + sci(res) + "\n";
        o.text += "  [" + std::to_string(i) + "] " + s + "   (residual " + sci(res) + ")\n";
    }
    o.json = {{"algebra", pres.label()}, {"degree", degree}, {"dimension", polys.size()}, {"basis", elems}};
    return o;
}

Output cmd_points(const Common& c, const std::string& spec, int count) {
    const auto pres = io::load_presentation(spec);
    const auto lin = multilinearize(pres);
    std::mt19937_64 rng(c.seed);
    const auto pts = sample_variety_points(lin, count, rng);
    Output o;
    Json arr = Json::array();
    o.csv = "index,point,kernel-dimension,residual\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vector p = linalg::normalize_projective(pts[i]);
        const Matrix m = lin.at(p);
        Eigen::JacobiSVD<Matrix> svd(m);
        const auto& s = svd.singularValues();
        // Only square or overdetermined systems have a nontrivial smallest singular value.
        const double res = m.rows() >= m.cols() && s(0) > 0 ? s(s.size() - 1) / s(0) : 0.0;
        const int kd = kernel_dimension(lin, p);
        arr.push_back({{"point", vector_to_json(p)}, {"kernel_dimension", kd}, {"residual", res}});
        o.csv += std::to_string(i) + "," + point_text(p) + "," + std::to_string(kd) + "," + sci(res) + "\n";
        o.text += point_text(p) + "   (kernel " + std::to_string(kd) + ", residual " + sci(res) + ")\n";
    }
    o.json = {{"algebra", pres.label()}, {"seed", c.seed}, {"points", arr}};
    return o;
}

Output cmd_sigma_order(const Common& c, const std::string& spec, const std::string& point, int max_n) {
    const auto pres = io::load_presentation(spec);
    const auto lin = multilinearize(pres);
    const Vector p = parse_point(point);
    if (p.size() != pres.generator_count()) throw InvalidArgument("--point needs one coordinate per generator");
    if (!on_point_variety(lin, p)) throw NumericalError("the point is not on the point variety");
    const auto n = torsion_order(lin, p, max_n, std::max(c.tol, 1e-7));
    if (!n) throw NumericalError("no torsion order up to " + std::to_string(max_n));
    Vector q = p;
    for (int i = 0; i < *n; ++i) q = sigma(lin, q);
    const double res = linalg::projective_distance(p, q);
    Output o;
    o.json = {{"algebra", pres.label()}, {"point", vector_to_json(p)}, {"order", *n}, {"residual", res}};
    o.csv = "order,residual\n" + std::to_string(*n) + "," + sci(res) + "\n";
    o.text = "order " + std::to_string(*n) + "   (residual " + sci(res) + ")\n";
    return o;
}

Output representation_output(const Representation& r, int stab_order) {
    Output o;
    o.json = io::representation_to_json(r, stab_order);
    o.text = o.json.dump(2) + "\n";
    o.csv = "generator,row,col,re,im\n";
    const auto& names = r.algebra().generator_names();
    for (int g = 0; g < static_cast<int>(names.size()); ++g)
        for (int i = 0; i < r.dimension(); ++i)
            for (int j = 0; j < r.dimension(); ++j)
                o.csv += names[g] + "," + std::to_string(i) + "," + std::to_string(j) + "," +
                         io::format_double(r[g](i, j).real()) + "," + io::format_double(r[g](i, j).imag()) + "\n";
    return o;
}

Output cmd_rep_from_point(const Common&, const std::string& spec, const std::string& point, int order) {
    const auto pres = io::load_presentation(spec);
    const Vector p = parse_point(point);
    if (p.size() != pres.generator_count()) throw InvalidArgument("--point needs one coordinate per generator");
    const auto f = point_orbit_rep(pres, p, order);
    const auto r = assemble(f);
    const auto st = stabilizer_of(r);
    return representation_output(r, st.infinite ? 0 : st.order);
}

Output cmd_solve(const Common& c, const std::string& spec, int dim, const std::string& character, int attempts) {
    const auto pres = io::load_presentation(spec);
    if (dim < 1) throw InvalidArgument("--dim must be positive");
    const auto chi = parse_character(pres, character);
    const auto res = solve(pres, dim, chi, solve_options(c, attempts));
    Output o;
    Json classes = Json::array();
    o.csv = "class,hits,residual,stabilizer-order\n";
    o.text = std::to_string(res.classes.size()) + " class(es) of dimension " + std::to_string(dim) + " from " +
             std::to_string(res.converged) + "/" + std::to_string(res.attempts) + " converged attempts (" +
             std::to_string(res.non_simple) + " not simple)" + (res.saturated ? "" : ", not saturated") + "\n";
    for (std::size_t i = 0; i < res.classes.size(); ++i) {
        const auto& r = res.classes[i];
        const auto st = stabilizer_of(r);
        const int order = st.infinite ? 0 : st.order;
        const double resid = system_residual(pres, chi, r.mats());
        Json j = io::representation_to_json(r, order);
        j["hits"] = res.hits[i];
        j["system_residual"] = resid;
        classes.push_back(std::move(j));
        const std::string ord = order == 0 ? "infinite" : std::to_string(order);
        o.csv += std::to_string(i) + "," + std::to_string(res.hits[i]) + "," + sci(resid) + "," + ord + "\n";
        o.text += "  class " + std::to_string(i) + ": hits " + std::to_string(res.hits[i]) + ", residual " +
                  sci(resid) + ", stabilizer order " + ord + "\n";
    }
    o.json = {{"algebra", pres.label()},
              {"dimension", dim},
              {"character", character_json(chi, pres)},
              {"attempts", res.attempts},
              {"converged", res.converged},
              {"non_simple", res.non_simple},
              {"saturated", res.saturated},
              {"classes", classes}};
    return o;
}

Representation load_rep(const std::string& path) {
    const Json j = io::read_json_file(path);
    // Accept both a bare representation and a solve result (first class).
    if (j.contains("classes")) {
        if (j["classes"].empty()) throw InvalidArgument(path + " contains no classes");
        return io::representation_from_json(j["classes"][0]);
    }
    return io::representation_from_json(j);
}

Output cmd_stabilizer(const Common& c, const std::string& path) {
    const auto r = load_rep(path);
    const auto st = stabilizer_of(r, std::max(c.tol, 1e-7));
    Output o;
    if (st.infinite) {
        o.json = {{"infinite", true}, {"residual", r.residual()}};
        o.csv = "order,zeta,block-sizes,conjugator-residual\ninfinite,,,\n";
        o.text = "stabilizer infinite (trivial representation)\n";
        return o;
    }
    double cres = 0.0;
    const Matrix gi = st.conjugator.inverse();
    for (const auto& m : r.mats()) cres = std::max(cres, (st.conjugator * m * gi - st.zeta * m).norm());
    std::string sizes;
    for (std::size_t i = 0; i < st.block_sizes.size(); ++i) sizes += (i ? " " : "") + std::to_string(st.block_sizes[i]);
    o.json = {{"order", st.order},
              {"zeta", io::scalar_to_json(st.zeta)},
              {"block_sizes", st.block_sizes},
              {"conjugator", io::matrix_to_json(st.conjugator)},
              {"conjugator_residual", cres}};
    o.csv = "order,zeta,block-sizes,conjugator-residual\n" + std::to_string(st.order) + "," + scalar_text(st.zeta) +
            "," + sizes + "," + sci(cres) + "\n";
    o.text = "stabilizer order " + std::to_string(st.order) + ", block sizes " + sizes + "   (residual " +
             sci(cres) + ")\n";
    return o;
}

Output cmd_fatpoint(const Common& c, const std::string& path) {
    const auto r = load_rep(path);
    const auto f = disassemble(r, std::max(c.tol, 1e-7));
    Output o;
    o.json = io::fatpoint_to_json(f);
    o.json["residual"] = f.residual();
    o.json["shift_orbit_size"] = shift_orbit_size(f);
    std::string mult;
    for (std::size_t i = 0; i < f.multiplicities().size(); ++i)
        mult += (i ? " " : "") + std::to_string(f.multiplicities()[i]);
    o.csv = "period,multiplicities,shift-orbit-size,residual\n" + std::to_string(f.period()) + "," + mult + "," +
            std::to_string(shift_orbit_size(f)) + "," + sci(f.residual()) + "\n";
    o.text = "period " + std::to_string(f.period()) + ", multiplicities " + mult + ", shift orbit " +
             std::to_string(shift_orbit_size(f)) + "   (residual " + sci(f.residual()) + ")\n";
    return o;
}

Output cmd_search_params(const Common& c, int n) {
    HesseSearchResult h;
    torsion_algebra(n, c, &h);
    Output o;
    o.json = {{"torsion", n},
              {"a", io::scalar_to_json(h.a)},
              {"b", io::scalar_to_json(h.b)},
              {"c", io::scalar_to_json(h.c)},
              {"residual", h.residual},
              {"attempts", h.attempts},
              {"verified_points", h.verified_points},
              {"witness", vector_to_json(h.witness)}};
    o.csv = "torsion,a,b,c,residual,verified-points\n" + std::to_string(n) + "," + scalar_text(h.a) + "," +
            scalar_text(h.b) + "," + scalar_text(h.c) + "," + sci(h.residual) + "," +
            std::to_string(h.verified_points) + "\n";
    o.text = "sklyanin:" + scalar_text(h.a, 15) + ";" + scalar_text(h.b, 15) + ";" + scalar_text(h.c, 15) +
             "\n  residual " + sci(h.residual) + ", " + std::to_string(h.verified_points) +
             " variety points of order " + std::to_string(n) + "\n";
    // Plain "re,im" pairs so that the text form can be passed back as a presentation.
    auto plain = [](Scalar z) {
        std::ostringstream os;
        os << std::setprecision(17) << z.real() << "," << z.imag();
        return os.str();
    };
    o.json["presentation"] = "sklyanin:" + plain(h.a) + ";" + plain(h.b) + ";" + plain(h.c);
    return o;
}

Output cmd_census(const Common& c, const std::string& family, int n, int samples, int orbits, int attempts) {
    if (family != "sklyanin") throw InvalidArgument("only --family sklyanin is supported");
    const auto pres = torsion_algebra(n, c);
    CensusOptions opts;
    opts.samples = samples;
    opts.point_orbits = orbits;
    opts.solve = solve_options(c, attempts);
    const auto cen = census(pres, n, opts);
    Output o;
    Json rows = Json::array();
    for (const auto& r : cen.rows)
        rows.push_back({{"character", r.character_id},
                        {"dimension", r.dimension},
                        {"classes", r.class_count},
                        {"stabilizer_order", r.stabilizer_order == 0 ? Json("infinite") : Json(r.stabilizer_order)},
                        {"residual", r.residual},
                        {"g_value", io::scalar_to_json(r.g_value)},
                        {"saturated", r.saturated}});
    Json hist = Json::object();
    std::string dims;
    o.text = "torsion " + std::to_string(n) + " census\n";
    for (const auto& [d, e] : cen.histogram) {
        std::vector<Json> orders;
        std::string ord;
        for (int s : e.stabilizer_orders) {
            orders.push_back(s == 0 ? Json("infinite") : Json(s));
            ord += (ord.empty() ? "" : " ") + (s == 0 ? std::string("infinite") : std::to_string(s));
        }
        hist[std::to_string(d)] = {{"classes", e.count}, {"stabilizer_orders", orders}};
        o.text += "  dimension " + std::to_string(d) + ": " + std::to_string(e.count) + " class(es), stabilizer orders " +
                  ord + "\n";
    }
    for (int d : cen.dimensions()) dims += (dims.empty() ? "" : ", ") + std::to_string(d);
    o.text += "dimensions {" + dims + "}\n";
    o.json = {{"torsion", n}, {"algebra", pres.label()}, {"dimensions", cen.dimensions()},
              {"histogram", hist}, {"rows", rows}};
    o.csv = io::census_csv(cen);
    return o;
}

Output cmd_cover_check(const Common& c, int n, int characters, int attempts) {
    if (n % 3 != 0) throw InvalidArgument("cover-check needs a torsion order divisible by 3");
    const auto pres = torsion_algebra(n, c);
    const auto opts = solve_options(c, attempts);
    const auto chars = sample_three_lines_characters(pres, n, characters, opts);
    Output o;
    Json samples = Json::array();
    o.csv = "character,count,saturated,residual\n";
    o.text = "torsion " + std::to_string(n) + ", fiber of the " + std::to_string(n / 3) + "-dimensional cover\n";
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const auto fc = cover_fiber_count(pres, n, chars[i], opts);
        samples.push_back({{"count", fc.count}, {"saturated", fc.saturated}, {"residual", fc.worst_residual}});
        o.csv += "three-lines-" + std::to_string(i) + "," + std::to_string(fc.count) + "," +
                 (fc.saturated ? "true" : "false") + "," + sci(fc.worst_residual) + "\n";
        o.text += "  three-lines character " + std::to_string(i) + ": " + std::to_string(fc.count) +
                  " class(es)   (residual " + sci(fc.worst_residual) + ")\n";
    }
    CentralCharacter origin;
    for (const auto& e : center_data(pres, n).elements()) origin.add(e, 0.0);
    const auto oc = cover_fiber_count(pres, n, origin, opts);
    const auto ff = fixed_fatpoint_count(pres, n, opts);
    o.csv += "origin," + std::to_string(oc.count) + "," + (oc.saturated ? "true" : "false") + "," +
             sci(oc.worst_residual) + "\n";
    o.csv += "fixed-fatpoints," + std::to_string(ff.families) + "," + (ff.saturated ? "true" : "false") + ",\n";
    o.text += "  origin: " + std::to_string(oc.count) + " class(es)\n";
    o.text += "fixed fat points: " + std::to_string(ff.families) + " famil" + (ff.families == 1 ? "y" : "ies") + "\n";
    o.json = {{"torsion", n},
              {"algebra", pres.label()},
              {"three_lines", samples},
              {"origin", {{"count", oc.count}}},
              {"fixed_fatpoints", {{"families", ff.families}, {"classes", ff.classes}}}};
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Representations of graded noncommutative algebras"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", common.seed, "random seed")->capture_default_str();
        sub->add_option("--tol", common.tol, "rank/zero tolerance")->capture_default_str();
        sub->add_option("--out", common.out, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--threads", common.threads, "worker threads (0: all cores)")->capture_default_str();
    };

    std::string spec, point, character, path, family = "sklyanin";
    int dmax = 4, degree = 3, sample = 5, order = 0, dim = 1, attempts = 200, torsion = 2, max_n = 24;
    int samples = 2, orbits = 3, characters = 5;
    std::function<Output()> action;

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a presentation");
    hilbert->add_option("presentation", spec)->required();
    hilbert->add_option("--dmax", dmax)->capture_default_str();
    hilbert->callback([&] { action = [&] { return cmd_hilbert(common, spec, dmax); }; });

    auto* exp = app.add_subcommand("export", "Write a presentation as JSON");
    exp->add_option("presentation", spec)->required();
    exp->callback([&] { action = [&] { return cmd_export(common, spec); }; });

    auto* center = app.add_subcommand("center", "Basis of a graded piece of the center");
    center->add_option("presentation", spec)->required();
    center->add_option("--degree", degree)->capture_default_str();
    center->callback([&] { action = [&] { return cmd_center(common, spec, degree); }; });

    auto* points = app.add_subcommand("points", "Sample points of the point variety");
    points->add_option("presentation", spec)->required();
    points->add_option("--sample", sample)->capture_default_str();
    points->callback([&] { action = [&] { return cmd_points(common, spec, sample); }; });

    auto* sorder = app.add_subcommand("sigma-order", "Order of a point under the shift");
    sorder->add_option("presentation", spec)->required();
    sorder->add_option("--point", point, "coordinates re,im;re,im;...")->required();
    sorder->add_option("--max", max_n)->capture_default_str();
    sorder->callback([&] { action = [&] { return cmd_sigma_order(common, spec, point, max_n); }; });

    auto* rfp = app.add_subcommand("rep-from-point", "Representation from the shift orbit of a point");
    rfp->add_option("presentation", spec)->required();
    rfp->add_option("--point", point)->required();
    rfp->add_option("--order", order)->required();
    rfp->callback([&] { action = [&] { return cmd_rep_from_point(common, spec, point, order); }; });

    auto* slv = app.add_subcommand("solve", "Simple representations with a prescribed central character");
    slv->add_option("presentation", spec)->required();
    slv->add_option("--dim", dim)->required();
    slv->add_option("--character", character, "d<degree>.<index>=<value>;...");
    slv->add_option("--attempts", attempts)->capture_default_str();
    slv->callback([&] { action = [&] { return cmd_solve(common, spec, dim, character, attempts); }; });

    auto* stab = app.add_subcommand("stabilizer", "Stabilizer of a representation under conjugation and scaling");
    stab->add_option("rep", path)->required()->check(CLI::ExistingFile);
    stab->callback([&] { action = [&] { return cmd_stabilizer(common, path); }; });

    auto* fp = app.add_subcommand("fatpoint", "Disassemble a representation into a fat point");
    fp->add_option("rep", path)->required()->check(CLI::ExistingFile);
    fp->callback([&] { action = [&] { return cmd_fatpoint(common, path); }; });

    auto* cen = app.add_subcommand("census", "Dimension and stabilizer census");
    cen->add_option("--family", family)->capture_default_str();
    cen->add_option("--torsion", torsion)->required();
    cen->add_option("--samples", samples)->capture_default_str();
    cen->add_option("--orbits", orbits)->capture_default_str();
    cen->add_option("--attempts", attempts)->capture_default_str();
    cen->callback([&] {
        action = [&] { return cmd_census(common, family, torsion, samples, orbits, attempts); };
    });

    auto* cover = app.add_subcommand("cover-check", "Fiber counts of the cover over the three lines");
    cover->add_option("--torsion", torsion)->required();
    cover->add_option("--characters", characters)->capture_default_str();
    cover->add_option("--attempts", attempts)->capture_default_str();
    cover->callback([&] { action = [&] { return cmd_cover_check(common, torsion, characters, attempts); }; });

    auto* search = app.add_subcommand("search-params", "Sklyanin parameters with a torsion shift");
    search->add_option("--torsion", torsion)->required();
    search->callback([&] { action = [&] { return cmd_search_params(common, torsion); }; });

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    try {
        emit(common, action());
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
