// cwl — Casson-Walker-Lescop invariant toolkit.
//
// Subcommands: lambda, conway, mu, iota-theta, diagrams, verify.
// Exit codes: 0 success, 1 parse/validation error, 2 incomplete data,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cwl/closure.hpp"
#include "cwl/errors.hpp"
#include "cwl/invariants.hpp"
#include "cwl/link_data.hpp"
#include "cwl/surgery.hpp"
#include "cwl/verify.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw cwl::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json report_to_json(const cwl::ManifoldReport& r) {
    json j;
    j["lambda_L"] = cwl::to_string(r.lambda);
    j["det"] = r.det.str();
    j["betti1"] = r.betti1;
    j["h1_order"] = r.h1_order ? json(r.h1_order->str()) : json("infinite");
    j["sigma_plus"] = r.sigma_plus;
    j["sigma_minus"] = r.sigma_minus;
    if (r.lambda_walker) j["lambda_walker"] = cwl::to_string(*r.lambda_walker);
    return j;
}

int run_lambda(const std::string& input, bool as_json) {
    auto data = cwl::LinkInvariantData::from_json(read_input(input));
    cwl::ManifoldReport r = cwl::lambda_lescop(data);
    if (as_json) {
        std::cout << report_to_json(r).dump(2) << "\n";
        return 0;
    }
    std::cout << "lambda_L      = " << cwl::to_string(r.lambda) << "\n";
    std::cout << "det           = " << r.det.str() << "\n";
    std::cout << "betti_1       = " << r.betti1 << "\n";
    std::cout << "|H_1|         = " << (r.h1_order ? r.h1_order->str() : "infinite") << "\n";
    std::cout << "sigma (+, -)  = (" << r.sigma_plus << ", " << r.sigma_minus << ")\n";
    if (r.lambda_walker)
        std::cout << "lambda_Walker = " << cwl::to_string(*r.lambda_walker) << "\n";
    return 0;
}

int run_conway(const std::string& input, const std::string& sublink, bool as_json) {
    auto data = cwl::LinkInvariantData::from_json(read_input(input));
    cwl::Subset s = sublink.empty()
                        ? (cwl::Subset{1} << data.num_components()) - 1
                        : cwl::subset_from_string(sublink, data.num_components());
    const cwl::Poly& p = data.conway(s);
    if (as_json) {
        json coeffs = json::array();
        for (const auto& c : p) coeffs.push_back(cwl::to_string(c));
        json j;
        j["sublink"] = cwl::subset_to_string(s);
        j["coefficients"] = coeffs;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << cwl::poly_to_string(p) << "\n";
    return 0;
}

int run_mu(const std::string& input, const std::string& components, bool as_json) {
    auto data = cwl::LinkInvariantData::from_json(read_input(input));
    cwl::Subset s = components.empty()
                        ? (cwl::Subset{1} << data.num_components()) - 1
                        : cwl::subset_from_string(components, data.num_components());
    cwl::Rational value = cwl::mu(data, s);
    if (as_json) {
        json j;
        j["components"] = cwl::subset_to_string(s);
        j["mu"] = cwl::to_string(value);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << cwl::to_string(value) << "\n";
    return 0;
}

int run_iota_theta(const std::string& diagram_text, bool as_json) {
    cwl::ChordDiagram d = cwl::parse_diagram(diagram_text);
    cwl::Rational value = cwl::iota_theta(d);
    if (as_json) {
        json j;
        j["diagram"] = cwl::print_diagram(d);
        j["iota_theta"] = cwl::to_string(value);
        j["class"] = cwl::to_string(cwl::structural_class(d));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << cwl::to_string(value) << "\n";
    return 0;
}

int run_enumerate(const std::string& klass, int circles, bool as_json) {
    cwl::DiagramSet set;
    if (klass == "chain") set = cwl::enumerate_chains(circles);
    else if (klass == "essential-plus") set = cwl::enumerate_essential(circles, cwl::Sign::Plus);
    else if (klass == "essential-minus") set = cwl::enumerate_essential(circles, cwl::Sign::Minus);
    else if (klass == "infected") set = cwl::enumerate_infected(circles);
    else throw cwl::ArgumentError("unknown diagram class: " + klass);

    std::vector<std::string> lines;
    for (const auto& d : set.items()) lines.push_back(cwl::print_diagram(d));
    std::sort(lines.begin(), lines.end());
    if (as_json) {
        json j;
        j["class"] = klass;
        j["circles"] = circles;
        j["count"] = set.size();
        j["diagrams"] = lines;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& line : lines) std::cout << line << "\n";
    std::cout << "count: " << set.size() << "\n";
    return 0;
}

int run_verify(const std::string& suite, const cwl::VerifyOptions& opt, bool as_json) {
    std::vector<cwl::SuiteReport> reports;
    if (suite == "all") reports = cwl::run_all(opt);
    else reports.push_back(cwl::run_suite(suite, opt));

    bool all_pass = true;
    if (as_json) {
        json out = json::array();
        for (const auto& r : reports) {
            json checks = json::array();
            for (const auto& c : r.checks) {
                checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                all_pass = all_pass && c.pass;
            }
            out.push_back({{"suite", r.suite}, {"pass", r.passed()}, {"checks", checks}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << "suite " << r.suite << "\n";
            for (const auto& c : r.checks) {
                std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
                if (!c.pass && !c.detail.empty()) std::cout << " -- " << c.detail;
                std::cout << "\n";
                all_pass = all_pass && c.pass;
            }
        }
        std::cout << (all_pass ? "all checks passed" : "VERIFICATION FAILED") << "\n";
    }
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casson-Walker-Lescop invariant from integral surgery presentations"};
    app.require_subcommand(1);

    std::string input, sublink, components, diagram_text, klass, suite = "all";
    int circles = 1;
    bool as_json = false;
    cwl::VerifyOptions opt;

    auto* lambda_cmd = app.add_subcommand("lambda", "Casson-Walker-Lescop invariant of S^3_L");
    lambda_cmd->add_option("--input", input, "link JSON (PD code or invariant data)")->required();
    lambda_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* conway_cmd = app.add_subcommand("conway", "Conway polynomial of a sublink");
    conway_cmd->add_option("--input", input)->required();
    conway_cmd->add_option("--sublink", sublink, "components, e.g. 1,3 (default: all)");
    conway_cmd->add_flag("--json", as_json);

    auto* mu_cmd = app.add_subcommand("mu", "mu invariant of a sublink");
    mu_cmd->add_option("--input", input)->required();
    mu_cmd->add_option("--components", components, "components, e.g. 1,2,3 (default: all)");
    mu_cmd->add_flag("--json", as_json);

    auto* iota_cmd = app.add_subcommand("iota-theta", "theta coefficient of a chord diagram");
    iota_cmd
        ->add_option("diagram", diagram_text,
                     "textual diagram, e.g. \"1 | (1,0)-(1,2); (1,1)-(1,3)\"")
        ->required();
    iota_cmd->add_flag("--json", as_json);

    auto* diagrams_cmd = app.add_subcommand("diagrams", "diagram family enumeration");
    auto* enum_cmd = diagrams_cmd->add_subcommand("enumerate", "list a diagram family");
    enum_cmd->add_option("--class", klass, "chain | essential-plus | essential-minus | infected")
        ->required();
    enum_cmd->add_option("--circles", circles, "number of circles")->required();
    enum_cmd->add_flag("--json", as_json);
    diagrams_cmd->require_subcommand(1);

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--suite", suite,
                           "all | skein | det-identity | mu-paths | enumeration | lambda-special");
    verify_cmd->add_option("--seed", opt.seed, "random-instance seed (default 1)");
    verify_cmd->add_option("--max-size", opt.max_size, "enumeration size cap (default 5)");
    verify_cmd->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
        if (*lambda_cmd) return run_lambda(input, as_json);
        if (*conway_cmd) return run_conway(input, sublink, as_json);
        if (*mu_cmd) return run_mu(input, components, as_json);
        if (*iota_cmd) return run_iota_theta(diagram_text, as_json);
        if (*diagrams_cmd) return run_enumerate(klass, circles, as_json);
        if (*verify_cmd) return run_verify(suite, opt, as_json);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const cwl::IncompleteDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
