#include "ffdesign/io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace ffd::io {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(static_cast<long long>(v.get<long long>()));
    if (v.is_string()) {
        const auto q = parse_rational(v.get<std::string>());
        if (q) return *q;
    }
    throw std::invalid_argument("expected an exact rational (integer or \"p/q\" string)");
}

json rational_to_json(const Rational& q) {
    return json(to_string(q));
}

std::string trim(std::string s) {
    const auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(trim(field));
    return out;
}

// Signed-term pretty printer shared by poly and contrast output.
void append_signed_term(std::string& out, const Rational& c, const std::string& body) {
    if (c == 0) return;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    std::string t;
    if (mag != 1 || body.empty()) {
        t = to_string(mag);
        if (!body.empty()) t += "*";
    }
    t += body;
    if (out.empty())
        out = neg ? "-" + t : t;
    else
        out += (neg ? " - " : " + ") + t;
}

} // namespace

DesignSpace parse_space_spec(const std::string& spec) {
    const std::string s = trim(spec);
    if (s.empty()) throw std::invalid_argument("empty space spec");
    if (s.front() == '{') return space_from_json(json::parse(s));
    const bool counts_like =
        s.find_first_not_of("0123456789, \t") == std::string::npos && std::isdigit((unsigned char)s.front());
    if (counts_like) {
        std::vector<int> counts;
        std::istringstream ss(s);
        std::string field;
        while (std::getline(ss, field, ',')) {
            field = trim(field);
            if (field.empty()) throw std::invalid_argument("space spec: empty level count");
            counts.push_back(std::stoi(field));
        }
        return DesignSpace::from_level_counts(counts);
    }
    std::ifstream in(s);
    if (!in) throw std::invalid_argument("space spec: cannot open file '" + s + "'");
    json j;
    in >> j;
    return space_from_json(j);
}

json space_to_json(const DesignSpace& space) {
    json factors = json::array();
    for (const auto& f : space.factors()) {
        json levels = json::array();
        for (const auto& l : f.levels) levels.push_back(rational_to_json(l));
        factors.push_back(std::move(levels));
    }
    return json{{"factors", std::move(factors)}};
}

DesignSpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
        throw std::invalid_argument("space spec: expected {\"factors\": [[...], ...]}");
    std::vector<FactorSpec> specs;
    for (const auto& levels : j["factors"]) {
        if (!levels.is_array()) throw std::invalid_argument("space spec: factor must be an array");
        FactorSpec f;
        for (const auto& v : levels) f.levels.push_back(rational_from_json(v));
        specs.push_back(std::move(f));
    }
    return DesignSpace(std::move(specs));
}

std::vector<std::vector<Rational>> read_design_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("design CSV: missing header row");
    const std::size_t arity = split_csv_line(line).size();
    std::vector<std::vector<Rational>> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != arity)
            throw std::invalid_argument("design CSV: row has " + std::to_string(fields.size()) +
                                        " fields, header has " + std::to_string(arity));
        std::vector<Rational> row;
        for (const auto& f : fields) {
            const auto q = parse_rational(f);
            if (!q) throw std::invalid_argument("design CSV: bad rational '" + f + "'");
            row.push_back(*q);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string design_csv(const DesignSpace& space, const Fraction& f) {
    std::ostringstream out;
    for (int j = 0; j < space.factor_count(); ++j) out << (j ? "," : "") << "x" << (j + 1);
    out << "\n";
    for (const auto& p : points_of(space, f)) {
        for (std::size_t j = 0; j < p.size(); ++j) out << (j ? "," : "") << to_string(p[j]);
        out << "\n";
    }
    return out.str();
}

json indicator_to_json(const DesignSpace& space, const Poly& p) {
    json theta = json::array();
    for (const auto& a : space.exponents()) {
        const Rational c = p.coeff(a);
        if (c == 0) continue;
        theta.push_back(json{{"exponents", a}, {"value", rational_to_json(c)}});
    }
    return json{{"space", space_to_json(space)}, {"theta", std::move(theta)}};
}

Poly indicator_from_json(const DesignSpace& space, const json& j) {
    if (j.contains("space")) {
        const DesignSpace other = space_from_json(j["space"]);
        bool same = other.factor_count() == space.factor_count();
        for (int k = 0; same && k < space.factor_count(); ++k)
            same = other.factors()[k].levels == space.factors()[k].levels;
        if (!same)
            throw std::invalid_argument("theta file: embedded space does not match --space");
    }
    if (!j.contains("theta") || !j["theta"].is_array())
        throw std::invalid_argument("theta file: expected {\"theta\": [...]}");
    Poly p(space.factor_count());
    for (const auto& term : j["theta"]) {
        const ExponentVector a = term.at("exponents").get<ExponentVector>();
        if (!space.in_exponent_set(a))
            throw std::invalid_argument("theta file: exponent vector outside L");
        p.add_term(a, rational_from_json(term.at("value")));
    }
    return p;
}

json parse_json_document(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        // Tolerate surrounding human-readable lines: take the first line that
        // parses as a JSON object.
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            const std::string t = trim(line);
            if (!t.empty() && t.front() == '{') {
                try {
                    return json::parse(t);
                } catch (const json::parse_error&) {
                }
            }
        }
        throw std::invalid_argument("no JSON document found in input");
    }
}

json contrast_to_json(const ContrastMatrix& cm, const ContrastRep& rep) {
    json terms = json::array();
    for (std::size_t k = 1; k < cm.labels.size(); ++k) {
        if (rep.mu[k] == 0) continue;
        terms.push_back(json{{"J", cm.labels[k].J},
                             {"itilde", cm.labels[k].itilde},
                             {"value", rational_to_json(rep.mu[k])}});
    }
    return json{{"constant", rational_to_json(rep.mu[0])}, {"terms", std::move(terms)}};
}

json classification_to_json(const DesignSpace& space, const ContrastMatrix& cm,
                            const std::vector<Orbit>& orbits) {
    json out;
    std::size_t total = 0;
    json arr = json::array();
    for (const auto& orbit : orbits) {
        total += orbit.members.size();
        json rows = json::array();
        for (const auto& p : points_of(space, orbit.representative)) {
            json row = json::array();
            for (const auto& v : p) row.push_back(rational_to_json(v));
            rows.push_back(std::move(row));
        }
        const auto ind = indicator_of(space, orbit.representative);
        const auto mu = contrast_rep(space, cm, orbit.representative);
        arr.push_back(json{{"size", orbit.members.size()},
                           {"representative", std::move(rows)},
                           {"theta", indicator_to_json(space, ind.poly)["theta"]},
                           {"mu", contrast_to_json(cm, mu)}});
    }
    out["total"] = total;
    out["orbits"] = std::move(arr);
    return out;
}

std::string poly_to_string(const DesignSpace& space, const Poly& p) {
    std::string out;
    for (const auto& a : space.exponents()) {
        const Rational c = p.coeff(a);
        if (c == 0) continue;
        std::string mono;
        for (int j = 0; j < space.factor_count(); ++j) {
            if (a[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(j + 1);
            if (a[j] > 1) mono += "^" + std::to_string(a[j]);
        }
        append_signed_term(out, c, mono);
    }
    return out.empty() ? "0" : out;
}

std::string contrast_rep_to_string(const ContrastMatrix& cm, const ContrastRep& rep) {
    std::string out = to_string(rep.mu[0]);
    for (std::size_t k = 1; k < cm.labels.size(); ++k)
        append_signed_term(out, rep.mu[k], "z{" + cm.labels[k].to_string() + "}");
    return out;
}

} // namespace ffd::io
