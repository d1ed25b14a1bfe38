#include "starq/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "starq/expression.hpp"
#include "starq/printer.hpp"

namespace starq {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WeylElement parse_poly_field(const std::string& src, unsigned dim, const char* what) {
    EvalResult r = parse_element(src, dim);
    if (r.param != ParamUse::None)
        throw std::runtime_error(std::string(what) + " must not contain deformation parameters: " + src);
    return r.element;
}

}  // namespace

ConnectionData parse_connection(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.contains("dim")) throw std::runtime_error("connection document: missing 'dim'");
    unsigned dim = doc.at("dim").get<unsigned>();
    ConnectionData conn(dim);
    if (!doc.contains("christoffel")) return conn;
    for (const auto& rec : doc.at("christoffel")) {
        unsigned upper = rec.at("upper").get<unsigned>();
        auto lower = rec.at("lower");
        if (!lower.is_array() || lower.size() != 2)
            throw std::runtime_error("connection document: 'lower' must be [a, b]");
        unsigned a = lower[0].get<unsigned>();
        unsigned b = lower[1].get<unsigned>();
        if (upper == 0 || a == 0 || b == 0 || upper > dim || a > dim || b > dim)
            throw std::runtime_error("connection document: index out of range (1-based)");
        WeylElement poly =
            parse_poly_field(rec.at("poly").get<std::string>(), dim, "christoffel entry");
        if (poly.depends_on(VarKind::P) || poly.depends_on(VarKind::Y) ||
            poly.depends_on(VarKind::Psi))
            throw std::runtime_error("connection document: christoffel entries are x-polynomials");
        conn.set_christoffel(upper - 1, a - 1, b - 1, poly);
    }
    return conn;
}

ConnectionData load_connection(const std::string& path) {
    return parse_connection(slurp(path));
}

IdealSpec parse_ideal(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.contains("dim")) throw std::runtime_error("ideal document: missing 'dim'");
    unsigned dim = doc.at("dim").get<unsigned>();
    std::vector<WeylElement> gens;
    for (const auto& g : doc.at("generators"))
        gens.push_back(parse_poly_field(g.get<std::string>(), dim, "ideal generator"));
    return IdealSpec(dim, std::move(gens));
}

IdealSpec load_ideal(const std::string& path) { return parse_ideal(slurp(path)); }

std::string report_to_json(const ScenarioReport& rep) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["name"] = rep.name;
    doc["seed"] = rep.seed;
    doc["passed"] = rep.passed();
    doc["checks"] = nlohmann::json::array();
    for (const auto& c : rep.checks)
        doc["checks"].push_back(
            {{"description", c.description}, {"passed", c.passed}, {"witness", c.witness}});
    doc["discrepancies"] = rep.discrepancies;
    return doc.dump(2);
}

std::string report_to_text(const ScenarioReport& rep) {
    std::ostringstream out;
    out << "scenario " << rep.name << " (seed " << rep.seed << ")\n";
    for (const auto& c : rep.checks) {
        out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.description;
        if (!c.witness.empty()) out << "  -- " << c.witness;
        out << "\n";
    }
    for (const auto& d : rep.discrepancies) out << "  note: " << d << "\n";
    out << "  result: " << (rep.passed() ? "pass" : "FAIL") << "\n";
    return out.str();
}

}  // namespace starq
