// Command-line front end. One request per invocation, deterministic output,
// diagnostics on stderr only. Exit codes: 0 pass, 1 mismatch, 2 bad request.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "esscoh/catalog.hpp"
#include "esscoh/error.hpp"
#include "esscoh/ideal.hpp"
#include "esscoh/presentation.hpp"
#include "esscoh/resolution_oracle.hpp"
#include "esscoh/steenrod.hpp"
#include "esscoh/verifier.hpp"

namespace {

using esscoh::Element;
using esscoh::GeneratorDecl;
using esscoh::GroupSpec;
using esscoh::IdealSpec;
using esscoh::Presentation;
using esscoh::VerificationReport;

GroupSpec parse_spec(const std::string& family, std::uint32_t p, int n) {
    GroupSpec g{esscoh::family_from_letter(family.at(0)), p, n};
    esscoh::validate(g);
    return g;
}

template <typename Row, typename Field>
std::string join_counts(const std::vector<Row>& rows, Field field) {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << ',';
        out << rows[i].*field;
    }
    return out.str();
}

void print_report_text(std::ostream& out, const VerificationReport& r) {
    out << "group: " << esscoh::describe(r.spec) << ", order "
        << esscoh::group_order(r.spec) << "\n";
    out << "method: " << esscoh::method_name(r.method) << "\n";
    out << "degree bound: " << r.max_degree << "\n";
    for (const auto& row : r.per_degree) {
        out << "  d " << row.degree << ": computed " << row.dim_left
            << ", expected " << row.dim_right;
        if (!row.equal) out << "  MISMATCH";
        out << "\n";
    }
    if (!r.invariance.empty()) {
        out << "invariance:\n";
        for (const auto& check : r.invariance)
            out << "  " << check.description << ": "
                << (check.agreed ? "agree" : "DISAGREE") << "\n";
    }
    out << (r.pass ? "pass" : "fail") << " up to degree " << r.max_degree
        << "\n";
}

// Fixed key order; integers and strings only, so parse + dump round-trips
// byte for byte.
nlohmann::ordered_json report_document(const VerificationReport& r) {
    nlohmann::ordered_json doc;
    doc["family"] = std::string(1, esscoh::family_letter(r.spec.family));
    doc["p"] = r.spec.p;
    doc["n"] = r.spec.n;
    doc["max_degree"] = r.max_degree;
    doc["method"] = esscoh::method_name(r.method);
    auto degrees = nlohmann::ordered_json::array();
    for (const auto& row : r.per_degree) {
        nlohmann::ordered_json entry;
        entry["d"] = row.degree;
        entry["dim_computed"] = row.dim_left;
        entry["dim_expected"] = row.dim_right;
        entry["equal"] = row.equal;
        degrees.push_back(std::move(entry));
    }
    doc["per_degree"] = std::move(degrees);
    auto invariance = nlohmann::ordered_json::array();
    for (const auto& check : r.invariance) {
        nlohmann::ordered_json entry;
        entry["description"] = check.description;
        entry["agreed"] = check.agreed;
        invariance.push_back(std::move(entry));
    }
    doc["invariance"] = std::move(invariance);
    doc["pass"] = r.pass;
    return doc;
}

int run_verify_group(const GroupSpec& g, int max_degree,
                     const std::string& method, const std::string& format) {
    VerificationReport report =
        esscoh::verify_theorem(g, max_degree, esscoh::method_from_name(method));
    if (format == "structured")
        std::cout << report_document(report).dump(2) << "\n";
    else
        print_report_text(std::cout, report);
    return report.pass ? 0 : 1;
}

// Custom-presentation input, one directive per line:
//   p <prime>
//   generator <name> <degree> [exterior]
//   relation <element>
//   expected <element>       (optional; "0" predicts the zero ideal)
// '#' starts a comment. The `show` subcommand emits this format.
struct PresentationFile {
    std::uint32_t p = 0;
    std::vector<GeneratorDecl> generators;
    std::vector<std::string> relations;
    std::vector<std::string> expected;
    bool has_expected = false;
};

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

PresentationFile read_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw esscoh::DomainError("cannot open '" + path + "'");
    PresentationFile file;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string text = strip(line);
        if (text.empty()) continue;
        std::istringstream fields(text);
        std::string directive;
        fields >> directive;
        const auto fail = [&](const std::string& what) {
            throw esscoh::DomainError(path + ":" + std::to_string(number) +
                                      ": " + what);
        };
        if (directive == "p") {
            if (file.p) fail("duplicate p line");
            if (!(fields >> file.p) || !file.p) fail("p needs a prime");
        } else if (directive == "generator") {
            GeneratorDecl gen;
            if (!(fields >> gen.name >> gen.degree))
                fail("expected a name and a degree");
            std::string tail;
            if (fields >> tail) {
                if (tail != "exterior") fail("unknown marker '" + tail + "'");
                gen.exterior = true;
            }
            file.generators.push_back(std::move(gen));
        } else if (directive == "relation" || directive == "expected") {
            std::string rest;
            std::getline(fields, rest);
            const std::string body = strip(rest);
            if (body.empty()) fail(directive + " needs an element");
            (directive == "relation" ? file.relations : file.expected)
                .push_back(body);
            if (directive == "expected") file.has_expected = true;
        } else {
            fail("unknown directive '" + directive + "'");
        }
    }
    if (!file.p) throw esscoh::DomainError(path + ": missing p line");
    return file;
}

int run_verify_file(const std::string& path, int max_degree) {
    const PresentationFile file = read_presentation_file(path);
    const Presentation ring(file.p, file.generators, file.relations);
    const int bound = max_degree >= 0 ? max_degree : 16;
    const auto essential = esscoh::essential_by_h1(ring, bound);

    std::cout << "presentation: " << path << "\n";
    std::cout << "method: h1\n";
    std::cout << "degree bound: " << bound << "\n";
    if (!file.has_expected) {
        for (const auto& [d, slice] : essential.slices)
            std::cout << "  d " << d << ": essential dim " << slice.dim()
                      << "\n";
        return 0;
    }
    std::vector<Element> generators;
    for (const auto& text : file.expected) {
        Element e = ring.parse(text);
        if (!e.is_zero()) generators.push_back(std::move(e));
    }
    const IdealSpec expected = make_ideal(ring, std::move(generators));
    const auto report = ideals_equal_up_to(essential, expected, bound);
    for (const auto& row : report.per_degree) {
        std::cout << "  d " << row.degree << ": computed " << row.dim_left
                  << ", expected " << row.dim_right;
        if (!row.equal) std::cout << "  MISMATCH";
        std::cout << "\n";
    }
    std::cout << (report.equal ? "pass" : "fail") << " up to degree " << bound
              << "\n";
    return report.equal ? 0 : 1;
}

int run_show(const GroupSpec& g) {
    const Presentation ring = esscoh::presentation_of(g);
    std::cout << "# " << esscoh::describe(g) << ", order "
              << esscoh::group_order(g) << "\n";
    std::cout << "p " << ring.p() << "\n";
    for (const auto& gen : ring.generators()) {
        std::cout << "generator " << gen.name << " " << gen.degree;
        if (gen.exterior) std::cout << " exterior";
        std::cout << "\n";
    }
    for (const auto& text : ring.relation_texts())
        std::cout << "relation " << text << "\n";
    const IdealSpec expected = esscoh::expected_essential(g, ring);
    if (expected.generators.empty()) {
        std::cout << "expected 0\n";
    } else {
        for (const auto& e : expected.generators)
            std::cout << "expected " << ring.to_string(e) << "\n";
    }
    return 0;
}

int run_hilbert(const GroupSpec& g, int max_degree) {
    const Presentation ring = esscoh::presentation_of(g);
    const int bound =
        max_degree >= 0 ? max_degree : esscoh::default_max_degree(g);
    for (int d = 0; d <= bound; ++d) {
        if (d) std::cout << ',';
        std::cout << ring.hilbert_dimension(d);
    }
    std::cout << "\n";
    return 0;
}

int run_oracle(const GroupSpec& g, int max_degree) {
    const int bound = max_degree >= 0 ? max_degree : 8;
    const auto report = esscoh::oracle_check(g, bound);
    const std::string betti =
        join_counts(report.per_index, &esscoh::OracleRow::betti);
    if (report.pass) {
        std::cout << "match, betti " << betti << "\n";
        return 0;
    }
    std::cout << "mismatch, betti " << betti << ", ring "
              << join_counts(report.per_index, &esscoh::OracleRow::ring_dim)
              << "\n";
    return 1;
}

// Steenrod closure of a seed over the rank-two elementary abelian ring.
int run_closure(std::uint32_t p, const std::string& seed_text,
                int max_degree) {
    const GroupSpec g{esscoh::Family::B, p, 1};
    esscoh::validate(g);
    const Presentation ring = esscoh::presentation_of(g);
    const auto action = esscoh::elementary_abelian_action(ring);
    const Element seed = ring.parse(seed_text);
    const int bound =
        max_degree >= 0 ? max_degree : esscoh::default_max_degree(g);
    const IdealSpec closed =
        steenrod_closure(action, make_ideal(ring, {seed}), bound);
    for (const auto& e : closed.generators)
        std::cout << ring.to_string(e) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "essential-ideal verification for the mod-p cohomology of p-groups "
        "with a cyclic subgroup of index p"};
    app.require_subcommand(1);

    std::string family, method = "both", format = "text", seed, file_path;
    std::uint32_t p = 0;
    int n = 0, max_degree = -1;

    const auto add_group_flags = [&](CLI::App* cmd, bool required) {
        auto* f = cmd->add_option("--family", family, "group family A..F")
                      ->check(CLI::IsMember({"A", "B", "C", "D", "E", "F"}));
        auto* pp = cmd->add_option("--p", p, "the prime");
        auto* nn = cmd->add_option("--n", n, "size parameter");
        if (required) {
            f->required();
            pp->required();
            nn->required();
        }
    };
    const auto add_degree_flag = [&](CLI::App* cmd, const char* what) {
        cmd->add_option("--max-degree", max_degree, what)
            ->check(CLI::NonNegativeNumber);
    };

    auto* verify = app.add_subcommand(
        "verify", "compare the computed essential ideal with the prediction");
    add_group_flags(verify, false);
    add_degree_flag(verify, "top degree checked (default 16 at p = 2, 4p + 4 at odd p)");
    verify->add_option("--method", method, "kernels | h1 | both")
        ->check(CLI::IsMember({"kernels", "h1", "both"}));
    verify->add_option("--format", format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    verify->add_option("--presentation-file", file_path,
                       "verify a custom p = 2 presentation by the h1 route");

    auto* show = app.add_subcommand(
        "show", "print the presentation and the predicted essential ideal");
    add_group_flags(show, true);

    auto* hilbert =
        app.add_subcommand("hilbert", "print dimensions of the graded pieces");
    add_group_flags(hilbert, true);
    add_degree_flag(hilbert, "top degree printed");

    auto* oracle = app.add_subcommand(
        "oracle", "compare Betti numbers of a minimal resolution with the ring");
    add_group_flags(oracle, true);
    add_degree_flag(oracle, "top resolution index (default 8)");

    auto* closure = app.add_subcommand(
        "closure", "Steenrod closure of a seed ideal over elementary abelian");
    closure->add_option("--p", p, "the prime")->required();
    closure->add_option("--seed", seed, "seed element, e.g. \"x1*x2\"")
        ->required();
    add_degree_flag(closure, "top degree explored");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // help and version
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            if (!file_path.empty()) {
                if (verify->count("--family") || verify->count("--p") ||
                    verify->count("--n") || verify->count("--method")) {
                    std::cerr << "error: --presentation-file replaces the "
                                 "group and method flags\n";
                    return 2;
                }
                if (format == "structured") {
                    std::cerr << "error: structured output covers catalog "
                                 "verifications only\n";
                    return 2;
                }
                return run_verify_file(file_path, max_degree);
            }
            if (!verify->count("--family") || !verify->count("--p") ||
                !verify->count("--n")) {
                std::cerr << "error: --family, --p, --n are required\n";
                return 2;
            }
            return run_verify_group(parse_spec(family, p, n), max_degree,
                                    method, format);
        }
        if (app.got_subcommand(show)) return run_show(parse_spec(family, p, n));
        if (app.got_subcommand(hilbert))
            return run_hilbert(parse_spec(family, p, n), max_degree);
        if (app.got_subcommand(oracle))
            return run_oracle(parse_spec(family, p, n), max_degree);
        if (app.got_subcommand(closure)) return run_closure(p, seed, max_degree);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
