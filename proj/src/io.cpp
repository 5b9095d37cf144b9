#include "ncrep/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "ncrep/families.hpp"

namespace ncrep::io {

Json scalar_to_json(Scalar z) { return Json::array({z.real(), z.imag()}); }

Scalar scalar_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw InvalidArgument("scalar must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("matrix must be an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (static_cast<Eigen::Index>(j[r].size()) != cols) throw InvalidArgument("matrix rows differ in length");
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
    }
    return m;
}

Json presentation_to_json(const Presentation& p) {
    Json rels = Json::array();
    for (const auto& r : p.relations()) {
        Json terms = Json::array();
        for (const auto& [m, c] : r.terms())
            terms.push_back({{"word", m.word()}, {"re", c.real()}, {"im", c.imag()}});
        rels.push_back(std::move(terms));
    }
    return {{"generators", p.generator_names()}, {"relations", std::move(rels)}, {"label", p.label()}};
}

Presentation presentation_from_json(const Json& j) {
    try {
        std::vector<std::string> names = j.at("generators").get<std::vector<std::string>>();
        std::vector<NCPoly> rels;
        for (const auto& rj : j.at("relations")) {
            NCPoly r;
            for (const auto& t : rj)
                r.add_term(Monomial(t.at("word").get<std::vector<int>>()),
                           Scalar(t.value("re", 0.0), t.value("im", 0.0)));
            rels.push_back(std::move(r));
        }
        return Presentation(std::move(names), std::move(rels), j.value("label", std::string{}));
    } catch (const Json::exception& ex) {
        throw InvalidArgument(std::string("malformed presentation JSON: ") + ex.what());
    }
}

Json fatpoint_to_json(const FatPoint& f) {
    Json blocks = Json::object();
    const auto& names = f.algebra().generator_names();
    for (int i = 0; i < f.algebra().generator_count(); ++i) {
        Json per = Json::array();
        for (int l = 0; l < f.period(); ++l) per.push_back(matrix_to_json(f.block(i, l)));
        blocks[names[i]] = std::move(per);
    }
    return {{"period", f.period()}, {"multiplicities", f.multiplicities()}, {"blocks", std::move(blocks)}};
}

FatPoint fatpoint_from_json(const Json& j, const Presentation& algebra) {
    try {
        std::vector<int> mult = j.at("multiplicities").get<std::vector<int>>();
        if (j.at("period").get<int>() != static_cast<int>(mult.size()))
            throw InvalidArgument("fat point: period does not match multiplicities");
        std::vector<std::vector<Matrix>> blocks;
        for (const auto& name : algebra.generator_names()) {
            std::vector<Matrix> per;
            for (const auto& m : j.at("blocks").at(name)) per.push_back(matrix_from_json(m));
            blocks.push_back(std::move(per));
        }
        return FatPoint(algebra, std::move(mult), std::move(blocks));
    } catch (const Json::exception& ex) {
        throw InvalidArgument(std::string("malformed fat point JSON: ") + ex.what());
    }
}

Json representation_to_json(const Representation& r, int stabilizer_order) {
    Json mats = Json::object();
    const auto& names = r.algebra().generator_names();
    for (int i = 0; i < r.algebra().generator_count(); ++i) mats[names[i]] = matrix_to_json(r[i]);
    Json out = {{"dimension", r.dimension()}, {"matrices", std::move(mats)}, {"residual", r.residual()}};
    if (stabilizer_order == 0)
        out["stabilizer_order"] = "infinite";
    else if (stabilizer_order > 0)
        out["stabilizer_order"] = stabilizer_order;
    out["algebra"] = presentation_to_json(r.algebra());
    return out;
}

Representation representation_from_json(const Json& j, const Presentation& algebra) {
    try {
        std::vector<Matrix> mats;
        for (const auto& name : algebra.generator_names()) mats.push_back(matrix_from_json(j.at("matrices").at(name)));
        Representation r(algebra, std::move(mats));
        if (j.contains("dimension") && j["dimension"].get<int>() != r.dimension())
            throw InvalidArgument("representation: dimension field does not match matrices");
        return r;
    } catch (const Json::exception& ex) {
        throw InvalidArgument(std::string("malformed representation JSON: ") + ex.what());
    }
}

Representation representation_from_json(const Json& j) {
    if (!j.contains("algebra")) throw InvalidArgument("representation JSON has no embedded algebra");
    return representation_from_json(j, presentation_from_json(j["algebra"]));
}

std::string format_double(double x, int digits) {
    if (std::abs(x) < 0.5 * std::pow(10.0, -digits)) x = 0.0;  // avoid "-0.000"
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

std::string census_csv(const Census& c) {
    std::ostringstream os;
    os << "character-id,dimension,class-count,stabilizer-order,residual,g-value\n";
    for (const auto& r : c.rows) {
        os << r.character_id << ',' << r.dimension << ',' << r.class_count << ','
           << (r.stabilizer_order == 0 ? std::string("infinite") : std::to_string(r.stabilizer_order)) << ','
           << std::scientific << std::setprecision(2) << r.residual << std::defaultfloat << ','
           << format_double(r.g_value.real(), 8) << (r.g_value.imag() < 0 ? "" : "+")
           << format_double(r.g_value.imag(), 8) << "i\n";
    }
    return os.str();
}

Scalar parse_scalar(const std::string& text) {
    std::istringstream is(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(is >> re)) throw InvalidArgument("cannot parse scalar '" + text + "'");
    if (is >> comma) {
        if (comma != ',' || !(is >> im)) throw InvalidArgument("cannot parse scalar '" + text + "'");
    }
    std::string rest;
    if (is >> rest) throw InvalidArgument("trailing characters in scalar '" + text + "'");
    return {re, im};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& ex) {
        throw InvalidArgument("invalid JSON in " + path + ": " + ex.what());
    }
}

Presentation load_presentation(const std::string& spec) {
    if (std::filesystem::exists(spec)) return presentation_from_json(read_json_file(spec));
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "qplane") {
        if (args.empty()) throw InvalidArgument("qplane needs a parameter, e.g. qplane:-1,0");
        return quantum_plane(parse_scalar(args));
    }
    if (kind == "cubic") {
        const Scalar w = args.empty() ? std::polar(1.0, 2.0 * std::numbers::pi / 3.0) : parse_scalar(args);
        return cubic_omega(w);
    }
    if (kind == "sklyanin") {
        std::vector<Scalar> p;
        std::istringstream is(args);
        std::string part;
        while (std::getline(is, part, ';')) p.push_back(parse_scalar(part));
        if (p.size() != 3) throw InvalidArgument("sklyanin needs three parameters a;b;c");
        return sklyanin(p[0], p[1], p[2]);
    }
    if (kind == "free") {
        const int g = args.empty() ? 2 : std::stoi(args);
        if (g < 1) throw InvalidArgument("free algebra needs at least one generator");
        std::vector<std::string> names;
        for (int i = 0; i < g; ++i) names.push_back(g <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i));
        return Presentation(std::move(names), {}, "free(" + std::to_string(g) + ")");
    }
    throw InvalidArgument("unknown presentation '" + spec + "' (not a file or built-in name)");
}

}  // namespace ncrep::io
