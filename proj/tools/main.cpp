// ffdesign: indicator functions, contrast representations, orthogonality
// checks, enumeration and classification of fractional factorial designs.

#include "ffdesign/contrast.hpp"
#include "ffdesign/enumerate.hpp"
#include "ffdesign/indicator.hpp"
#include "ffdesign/io.hpp"
#include "ffdesign/relations.hpp"
#include "ffdesign/symmetry.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitInfeasible = 2;

ffd::Fraction load_design(const ffd::DesignSpace& space, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open design file: " + path);
    return ffd::fraction_from_points(space, ffd::io::read_design_csv(in));
}

ffd::Poly load_theta(const ffd::DesignSpace& space, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open theta file: " + path);
    return ffd::io::indicator_from_json(space, ffd::io::parse_json_document(in));
}

std::string join_sizes(const std::vector<long>& sizes) {
    std::string out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sizes[i]);
    }
    return out;
}

int run_indicator(const std::string& space_spec, const std::string& design_path, bool json) {
    auto space = ffd::io::parse_space_spec(space_spec);
    auto f = load_design(space, design_path);
    auto ind = ffd::indicator_of(space, f);
    std::cout << "f(x) = " << ffd::io::poly_to_string(space, ind.poly) << "\n";
    if (json) std::cout << ffd::io::indicator_to_json(space, ind.poly).dump() << "\n";
    return kExitOk;
}

int run_contrast(const std::string& space_spec, const std::string& design_path, bool json) {
    auto space = ffd::io::parse_space_spec(space_spec);
    auto f = load_design(space, design_path);
    auto cm = ffd::contrast_matrix(space);
    auto rep = ffd::contrast_rep(space, cm, f);
    std::cout << "f(z) = " << ffd::io::contrast_rep_to_string(cm, rep) << "\n";
    if (json) std::cout << ffd::io::contrast_to_json(cm, rep).dump() << "\n";
    return kExitOk;
}

int run_verify(const std::string& space_spec, const std::string& theta_path) {
    auto space = ffd::io::parse_space_spec(space_spec);
    auto poly = load_theta(space, theta_path);
    bool idem = ffd::is_indicator(space, poly);
    auto system = ffd::relation_system(space);
    bool rel = ffd::check_relations(space, system, ffd::theta_vector(space, poly));
    std::cout << "idempotent: " << (idem ? "yes" : "no") << "\n";
    std::cout << "relations: " << (rel ? "yes" : "no") << "\n";
    if (idem && rel) {
        auto f = ffd::fraction_of_indicator(space, poly);
        std::cout << "indicator: yes (size=" << f.size() << ")\n";
        return kExitOk;
    }
    std::cout << "indicator: no\n";
    return kExitInfeasible;
}

int run_strength(const std::string& space_spec, const std::string& design_path) {
    auto space = ffd::io::parse_space_spec(space_spec);
    auto f = load_design(space, design_path);
    auto cm = ffd::contrast_matrix(space);
    int t = ffd::strength(space, cm, f);
    std::cout << "strength=" << t << "\n";
    int report_to = std::min(t + 1, space.factor_count());
    std::vector<int> J;
    std::function<void(int)> walk = [&](int from) {
        if (!J.empty()) {
            auto table = ffd::marginal(space, f, J);
            bool balanced = true;
            long first = table.counts.begin()->second;
            std::cout << "J={";
            for (std::size_t q = 0; q < J.size(); ++q) std::cout << (q ? "," : "") << J[q];
            std::cout << "}:";
            for (const auto& [cell, count] : table.counts) {
                std::cout << ' ' << count;
                if (count != first) balanced = false;
            }
            std::cout << (balanced ? " (balanced)" : " (unbalanced)") << "\n";
        }
        if (static_cast<int>(J.size()) == report_to) return;
        for (int j = from; j <= space.factor_count(); ++j) {
            J.push_back(j);
            walk(j + 1);
            J.pop_back();
        }
    };
    walk(1);
    return kExitOk;
}

int run_sizes(const std::string& space_spec, int t, bool proper) {
    auto space = ffd::io::parse_space_spec(space_spec);
    auto sizes = ffd::compatible_sizes(space, t);
    if (proper && !sizes.empty() && sizes.back() == static_cast<long>(space.run_count()))
        sizes.pop_back();
    std::cout << join_sizes(sizes) << "\n";
    return kExitOk;
}

int run_relations(const std::string& space_spec, std::optional<int> t,
                  std::optional<long> size, const std::string& format) {
    auto space = ffd::io::parse_space_spec(space_spec);
    auto system = ffd::relation_system(space);
    std::vector<ffd::LinearConstraint> constraints;
    if (t || size) {
        auto cm = ffd::contrast_matrix(space);
        std::optional<ffd::Rational> s;
        if (size) s = ffd::Rational(*size);
        constraints = ffd::orthogonality_constraints(space, cm, t.value_or(0), s);
    }
    auto fmt = format == "cas-ideal" ? ffd::RelationFormat::cas_ideal : ffd::RelationFormat::plain;
    std::cout << ffd::emit_relations(space, system, constraints, fmt);
    return kExitOk;
}

int run_enumerate(const std::string& space_spec, long s, int t, bool canonical_only,
                  int jobs, bool json) {
    auto space = ffd::io::parse_space_spec(space_spec);
    if (space.run_count() > 24 && t <= 2)
        std::cerr << "warning: strength-" << t << " enumeration over " << space.run_count()
                  << " runs can take a very long time\n";
    ffd::EnumerationOptions options;
    options.canonical_only = canonical_only;
    options.jobs = jobs;
    auto result = ffd::enumerate_orthogonal(space, s, t, options);
    if (!result.size_compatible) {
        std::cerr << "size " << s << " is not compatible with strength " << t
                  << " (compatible sizes: " << join_sizes(ffd::compatible_sizes(space, t))
                  << ")\n";
        return kExitInfeasible;
    }
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& f : result.solutions) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& point : ffd::points_of(space, f)) {
                nlohmann::json row = nlohmann::json::array();
                for (const auto& v : point) row.push_back(ffd::to_string(v));
                rows.push_back(std::move(row));
            }
            out.push_back(std::move(rows));
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& f : result.solutions) std::cout << ffd::io::design_csv(space, f) << "\n";
    }
    std::cout << "solutions=" << result.solutions.size() << " size=" << s << " strength=" << t
              << "\n";
    return kExitOk;
}

int run_classify(const std::string& space_spec, long s, int t, int jobs, bool json) {
    auto space = ffd::io::parse_space_spec(space_spec);
    ffd::EnumerationOptions options;
    options.jobs = jobs;
    auto result = ffd::enumerate_orthogonal(space, s, t, options);
    if (!result.size_compatible) {
        std::cerr << "size " << s << " is not compatible with strength " << t
                  << " (compatible sizes: " << join_sizes(ffd::compatible_sizes(space, t))
                  << ")\n";
        return kExitInfeasible;
    }
    auto orbits = ffd::classify(space, result.solutions);
    std::string sizes;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (i) sizes += ',';
        sizes += std::to_string(orbits[i].members.size());
    }
    std::cout << "total=" << result.solutions.size() << " orbits=" << orbits.size()
              << " sizes=" << sizes << "\n";
    if (json) {
        auto cm = ffd::contrast_matrix(space);
        std::cout << ffd::io::classification_to_json(space, cm, orbits).dump() << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact indicator functions and contrast representations of "
                 "multi-level fractional factorial designs"};
    app.require_subcommand(1);

    std::string space_spec, design_path, theta_path, format = "plain";
    long size = 0;
    int strength_t = 0, jobs = 1;
    bool json = false, proper = false, canonical_only = false;

    auto add_space = [&](CLI::App* cmd) {
        cmd->add_option("--space", space_spec,
                        "level counts \"2,2,3\" or JSON {\"factors\": [[...], ...]} "
                        "(inline or a file path)")
            ->required();
    };

    auto* indicator = app.add_subcommand("indicator", "indicator polynomial of a design CSV");
    add_space(indicator);
    indicator->add_option("--design", design_path, "CSV of design points")->required();
    indicator->add_flag("--json", json, "also print the coefficient JSON");

    auto* contrast = app.add_subcommand("contrast", "contrast representation of a design CSV");
    add_space(contrast);
    contrast->add_option("--design", design_path, "CSV of design points")->required();
    contrast->add_flag("--json", json, "also print the contrast JSON");

    auto* verify = app.add_subcommand("verify", "check that a coefficient set is an indicator");
    add_space(verify);
    verify->add_option("--theta", theta_path, "coefficient JSON file")->required();

    auto* strength_cmd = app.add_subcommand("strength", "orthogonality strength of a design CSV");
    add_space(strength_cmd);
    strength_cmd->add_option("--design", design_path, "CSV of design points")->required();

    auto* sizes_cmd = app.add_subcommand("sizes", "sizes compatible with a given strength");
    add_space(sizes_cmd);
    sizes_cmd->add_option("--strength", strength_t, "required strength t")->required();
    sizes_cmd->add_flag("--proper", proper, "exclude the full design");

    auto* relations = app.add_subcommand("relations", "defining polynomial system for a CAS");
    add_space(relations);
    std::optional<int> rel_t;
    std::optional<long> rel_size;
    relations->add_option("--strength", rel_t, "append strength-t constraints");
    relations->add_option("--size", rel_size, "append the size constraint with this value");
    relations->add_option("--format", format, "plain or cas-ideal")
        ->check(CLI::IsMember({"plain", "cas-ideal"}));

    auto* enumerate = app.add_subcommand("enumerate", "all fractions of size s and strength t");
    add_space(enumerate);
    enumerate->add_option("--size", size, "fraction size s")->required();
    enumerate->add_option("--strength", strength_t, "required strength t")->required();
    enumerate->add_flag("--canonical-only", canonical_only, "one representative per orbit");
    enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    enumerate->add_flag("--json", json, "JSON instead of CSV blocks");

    auto* classify = app.add_subcommand("classify", "symmetry classes of the solution set");
    add_space(classify);
    classify->add_option("--size", size, "fraction size s")->required();
    classify->add_option("--strength", strength_t, "required strength t")->required();
    classify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    classify->add_flag("--json", json, "also print the orbit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (indicator->parsed()) return run_indicator(space_spec, design_path, json);
        if (contrast->parsed()) return run_contrast(space_spec, design_path, json);
        if (verify->parsed()) return run_verify(space_spec, theta_path);
        if (strength_cmd->parsed()) return run_strength(space_spec, design_path);
        if (sizes_cmd->parsed()) return run_sizes(space_spec, strength_t, proper);
        if (relations->parsed()) return run_relations(space_spec, rel_t, rel_size, format);
        if (enumerate->parsed())
            return run_enumerate(space_spec, size, strength_t, canonical_only, jobs, json);
        if (classify->parsed()) return run_classify(space_spec, size, strength_t, jobs, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
