// gmtlab — evaluate, verify and tabulate GMT (Gehring–Martin–Tan) equality
// data for two-generator subgroups of PSL(2,C).
//
// Exit codes: 0 = all checks pass, 1 = a mathematical check failed,
// 2 = usage/parse error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmt/catalog.hpp"
#include "gmt/classification.hpp"
#include "gmt/gmt.hpp"
#include "gmt/matrix_io.hpp"
#include "gmt/verify.hpp"
#include "gmt/words.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// shortest round-trip decimal representation
std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_complex(gmt::Complex z) {
    std::string out = format_double(z.real());
    if (z.imag() >= 0.0 || std::isnan(z.imag())) out += "+";
    out += format_double(z.imag()) + "i";
    return out;
}

struct Report {
    std::string command;
    ordered_json inputs = ordered_json::object();
    ordered_json results = ordered_json::object();
    ordered_json residuals = ordered_json::array();
    std::string verdict = "pass";  // pass | fail | not-applicable
    gmt::Tolerance tol;

    void add_residual(const std::string& name, double value, double bound) {
        residuals.push_back({{"name", name}, {"value", value}, {"bound", bound},
                             {"pass", value <= bound}});
        if (value > bound) verdict = "fail";
    }

    ordered_json to_json() const {
        ordered_json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["results"] = results;
        j["residuals"] = residuals;
        j["verdict"] = verdict;
        j["toleranceUsed"] = {{"absolute", tol.absolute}, {"detTol", tol.detTol}};
        return j;
    }
};

void print_report(const Report& report, bool asJson) {
    if (asJson) {
        std::cout << report.to_json().dump(2) << "\n";
        return;
    }
    std::cout << "command: " << report.command << "\n";
    if (!report.inputs.empty()) std::cout << "inputs: " << report.inputs.dump() << "\n";
    for (const auto& [key, value] : report.results.items()) {
        if (key == "suites" && value.is_array()) {
            for (const auto& s : value)
                std::cout << "suite " << s["suite"].get<std::string>() << ": "
                          << (s["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
            continue;
        }
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
    }
    for (const auto& r : report.residuals)
        std::cout << "residual " << r["name"].get<std::string>() << ": "
                  << format_double(r["value"].get<double>())
                  << " (bound " << format_double(r["bound"].get<double>())
                  << (r["pass"].get<bool>() ? ", ok)" : ", FAIL)") << "\n";
    std::cout << "verdict: " << report.verdict << "\n";
}

gmt::Tolerance resolve_tolerance(const std::optional<double>& flagValue) {
    gmt::Tolerance tol;
    double absolute = 1e-9;
    if (const char* env = std::getenv("GMT_TOL")) {
        std::string text(env);
        try {
            std::size_t used = 0;
            double parsed = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            absolute = parsed;
        } catch (const std::exception&) {
            throw CLI::ValidationError("GMT_TOL", "GMT_TOL is not a number: '" + text + "'");
        }
    }
    if (flagValue) absolute = *flagValue;  // flag beats environment
    tol.absolute = absolute;
    tol.detTol = std::min(1e-12, absolute);
    tol.validate();
    return tol;
}

// catalog references accepted wherever a matrix is expected:
//   gamma:<n>:rho | gamma:<n>:b | h1 | h2[:<n>] | h3[:<n>] | o3:a | o3:b |
//   o4:a | o4:p, optionally wrapped as inv:<ref>
gmt::ProjectiveMatrix matrix_from_reference(const std::string& ref, const gmt::Tolerance& tol) {
    if (ref.rfind("inv:", 0) == 0)
        return gmt::inverse(matrix_from_reference(ref.substr(4), tol));
    std::vector<std::string> parts;
    std::stringstream ss(ref);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("empty catalog reference");

    auto indexArg = [&](std::size_t pos, int fallback) {
        if (parts.size() <= pos) return fallback;
        return std::stoi(parts[pos]);
    };
    const std::string& head = parts[0];
    if (head == "h1") return gmt::involution_h1();
    if (head == "h2") return gmt::involution_h2(indexArg(1, 4), tol);
    if (head == "h3") return gmt::involution_h3(indexArg(1, 4), tol);
    if (head == "gamma") {
        if (parts.size() != 3) throw std::invalid_argument("expected gamma:<n>:rho|b");
        gmt::FigureEightData fe = gmt::figure_eight_generators(std::stoi(parts[1]), tol);
        if (parts[2] == "rho") return fe.rho;
        if (parts[2] == "b") return fe.b;
        throw std::invalid_argument("unknown gamma generator '" + parts[2] + "'");
    }
    if (head == "o3" || head == "o4") {
        if (parts.size() != 2) throw std::invalid_argument("expected " + head + ":<generator>");
        gmt::Representation rep = head == "o3" ? gmt::o3_representation(tol).rep
                                               : gmt::o4_representation(tol).rep;
        auto it = rep.assignment.find(parts[1]);
        if (it == rep.assignment.end())
            throw std::invalid_argument("unknown " + head + " generator '" + parts[1] + "'");
        return it->second;
    }
    throw std::invalid_argument("unknown catalog reference '" + ref + "'");
}

// a matrix argument is either a JSON literal [[re,im],...] or a reference
gmt::ProjectiveMatrix parse_matrix_argument(const std::string& text, const gmt::Tolerance& tol) {
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (!trimmed.empty() && trimmed.front() == '[')
        return gmt::matrix_from_json(nlohmann::json::parse(trimmed), tol);
    return matrix_from_reference(trimmed, tol);
}

ordered_json element_class_json(const gmt::ElementClass& cls, gmt::Complex trSq) {
    ordered_json j;
    j["kind"] = gmt::to_string(cls.kind);
    j["trSquared"] = {trSq.real(), trSq.imag()};
    if (cls.kind == gmt::ElementKind::Loxodromic) j["hyperbolic"] = cls.hyperbolic;
    if (cls.ellipticOrder)
        j["ellipticOrder"] = {{"k", cls.ellipticOrder->k}, {"n", cls.ellipticOrder->n}};
    return j;
}

int cmd_classify(const std::string& matrixArg, const gmt::Tolerance& tol, bool asJson) {
    gmt::ProjectiveMatrix m = parse_matrix_argument(matrixArg, tol);
    Report report;
    report.command = "classify";
    report.tol = tol;
    report.inputs["matrix"] = gmt::matrix_to_json(m);
    gmt::ElementClass cls = gmt::classify(m, tol);
    report.results = element_class_json(cls, gmt::tr_squared(m));
    print_report(report, asJson);
    return kExitPass;
}

int cmd_gmt(const std::string& fArg, const std::string& gArg, const gmt::Tolerance& tol,
            bool asJson) {
    gmt::ProjectiveMatrix f = parse_matrix_argument(fArg, tol);
    gmt::ProjectiveMatrix g = parse_matrix_argument(gArg, tol);
    Report report;
    report.command = "gmt";
    report.tol = tol;
    report.inputs["f"] = gmt::matrix_to_json(f);
    report.inputs["g"] = gmt::matrix_to_json(g);
    gmt::GmtEvaluation eval = gmt_value(f, g, tol);
    gmt::InequalityVerdict verdict = gmt_inequality_check(f, g, tol);
    report.results["evaluation"] = gmt::to_json(eval);
    report.results["inequality"] = gmt::to_string(verdict);
    report.verdict = verdict == gmt::InequalityVerdict::NotApplicable ? "not-applicable"
                     : verdict == gmt::InequalityVerdict::Violated    ? "fail"
                                                                      : "pass";
    print_report(report, asJson);
    return kExitPass;
}

int cmd_table(int nMin, int nMax, const gmt::Tolerance& tol, bool asJson, bool asCsv) {
    Report report;
    report.command = "table";
    report.tol = tol;
    report.inputs["nMin"] = nMin;
    report.inputs["nMax"] = nMax;

    ordered_json rows = ordered_json::array();
    std::ostringstream csv;
    csv << "n,tr2_rho,tr_commutator,gmt,bound,diff,branch\n";
    double worstDiff = 0.0;
    for (int n = nMin; n <= nMax; ++n) {
        gmt::FigureEightData fe = gmt::figure_eight_generators(n, tol);
        gmt::GmtEvaluation eval = gmt_value(fe.rho, fe.b, tol);
        double bound = gmt::gamma_gmt_upper_bound(n);
        double diff = std::abs(eval.value - bound);
        worstDiff = std::max(worstDiff, diff);
        csv << n << ',' << format_complex(eval.trSquaredF) << ','
            << format_complex(eval.trCommutator) << ',' << format_double(eval.value) << ','
            << format_double(bound) << ',' << format_double(diff) << ','
            << gmt::to_string(fe.branchTag) << "\n";
        rows.push_back({{"n", n},
                        {"tr2_rho", {eval.trSquaredF.real(), eval.trSquaredF.imag()}},
                        {"tr_commutator", {eval.trCommutator.real(), eval.trCommutator.imag()}},
                        {"gmt", eval.value},
                        {"bound", bound},
                        {"diff", diff},
                        {"branch", gmt::to_string(fe.branchTag)}});
    }
    report.results["rows"] = rows;
    report.add_residual("max |gmt - bound| over table", worstDiff, tol.absolute);

    if (asCsv) {
        std::cout << csv.str();
        return report.verdict == "pass" ? kExitPass : kExitCheckFailed;
    }
    if (!asJson) {
        // text mode: the CSV body is the natural rendering of the rows
        std::cout << csv.str();
        for (const auto& r : report.residuals)
            std::cout << "residual " << r["name"].get<std::string>() << ": "
                      << format_double(r["value"].get<double>()) << " (bound "
                      << format_double(r["bound"].get<double>())
                      << (r["pass"].get<bool>() ? ", ok)" : ", FAIL)") << "\n";
        std::cout << "verdict: " << report.verdict << "\n";
        return report.verdict == "pass" ? kExitPass : kExitCheckFailed;
    }
    print_report(report, asJson);
    return report.verdict == "pass" ? kExitPass : kExitCheckFailed;
}

int cmd_verify(const std::string& target, const gmt::Tolerance& tol, bool asJson) {
    std::vector<gmt::SuiteResult> results;
    if (target == "all") {
        results = gmt::run_all_suites(tol);
    } else {
        results.push_back(gmt::run_suite(target, tol));  // throws UnknownSuite
    }
    Report report;
    report.command = "verify";
    report.tol = tol;
    report.inputs["target"] = target;
    bool allPass = true;
    ordered_json suites = ordered_json::array();
    for (const gmt::SuiteResult& r : results) {
        suites.push_back(ordered_json(gmt::to_json(r)));
        allPass = allPass && r.pass;
        for (const gmt::NamedResidual& nr : r.residuals)
            report.add_residual(r.suite + ": " + nr.name, nr.value, nr.bound);
    }
    report.results["suites"] = suites;
    report.verdict = allPass ? "pass" : "fail";
    print_report(report, asJson);
    return allPass ? kExitPass : kExitCheckFailed;
}

int cmd_conjugator(const std::string& path, const gmt::Tolerance& tol, bool asJson) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("file", "cannot open '" + path + "'");
    nlohmann::json doc = nlohmann::json::parse(in);

    std::vector<gmt::ConjugationConstraint> constraints;
    for (const auto& entry : doc.at("constraints")) {
        auto parse = [&](const nlohmann::json& node) {
            if (node.is_string()) return matrix_from_reference(node.get<std::string>(), tol);
            return gmt::matrix_from_json(node, tol);
        };
        constraints.push_back({parse(entry.at("g")), parse(entry.at("target"))});
    }

    Report report;
    report.command = "conjugator";
    report.tol = tol;
    report.inputs["file"] = path;
    report.inputs["constraintCount"] = constraints.size();

    try {
        gmt::ProjectiveMatrix h = gmt::solve_conjugator(constraints, tol);
        report.results["solution"] = gmt::matrix_to_json(h);
        report.results["isInvolution"] = gmt::is_involution(h, tol);

        // identify the Lemma 3 action of h on the Gamma(n) pair, both
        // orientations; n comes from the file or defaults to 4
        int n = doc.value("n", 4);
        gmt::FigureEightData fe = gmt::figure_eight_generators(n, tol);
        ordered_json cases = ordered_json::array();
        struct Orientation { const char* label; gmt::ProjectiveMatrix f, g; };
        Orientation orientations[2] = {{"(rho,b)", fe.rho, fe.b}, {"(b,rho)", fe.b, fe.rho}};
        for (const auto& o : orientations) {
            try {
                gmt::Lemma3Result r = gmt::lemma3_verify(o.f, o.g, h, tol);
                cases.push_back({{"pair", o.label},
                                 {"case", gmt::to_string(r.primary.action)},
                                 {"residual", r.primary.residual},
                                 {"gmtValue", r.eval.value}});
            } catch (const std::exception&) {
                // no case for this orientation
            }
        }
        report.results["lemma3Cases"] = cases;
        print_report(report, asJson);
        return kExitPass;
    } catch (const gmt::AmbiguousSolution& e) {
        report.results["error"] = e.what();
        report.results["nullspaceDim"] = e.nullspaceDim;
        report.verdict = "fail";
        print_report(report, asJson);
        return kExitCheckFailed;
    } catch (const gmt::NoSolution& e) {
        report.results["error"] = e.what();
        report.verdict = "fail";
        print_report(report, asJson);
        return kExitCheckFailed;
    }
}

int cmd_catalog(const std::string& group, std::optional<int> n, const gmt::Tolerance& tol) {
    auto parsed = gmt::catalog_group_from_string(group);
    if (!parsed) throw CLI::ValidationError("--group", "unknown group '" + group + "'");
    if (gmt::catalog_group_needs_index(*parsed) && !n)
        throw CLI::ValidationError("--n", "group '" + group + "' needs --n");
    nlohmann::json doc = gmt::catalog_export(*parsed, n, tol);
    std::cout << doc.dump(2) << "\n";
    bool pass = !doc.contains("relatorVerification") ||
                doc["relatorVerification"]["pass"].get<bool>();
    return pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GMT equality toolkit for two-generator subgroups of PSL(2,C)"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    std::optional<double> tolFlag;
    bool asJson = false;
    bool asCsv = false;
    app.add_option("--tol", tolFlag, "absolute tolerance (beats GMT_TOL; default 1e-9)");
    app.add_flag("--json", asJson, "emit the report as JSON");
    app.add_flag("--csv", asCsv, "emit CSV where the command supports it");

    auto* classify = app.add_subcommand("classify", "classify a PSL(2,C) element by trace");
    std::string classifyMatrix;
    std::string classifyCatalog;
    int classifyN = 4;
    std::string classifyGen = "rho";
    classify->add_option("matrix", classifyMatrix, "matrix literal [[re,im],...] or reference");
    classify->add_option("--catalog", classifyCatalog, "catalog shorthand: gamma | h1 | h2 | h3");
    classify->add_option("--n", classifyN, "index for --catalog gamma");
    classify->add_option("--gen", classifyGen, "generator for --catalog gamma: rho | b");

    auto* gmtCmd = app.add_subcommand("gmt", "evaluate G(f,g) and the discreteness inequality");
    std::string gmtF, gmtG;
    std::optional<int> gmtN;
    gmtCmd->add_option("f", gmtF, "matrix literal or reference");
    gmtCmd->add_option("g", gmtG, "matrix literal or reference");
    gmtCmd->add_option("--catalog-n", gmtN, "shorthand for the pair (rho_n, b_n)");

    auto* table = app.add_subcommand("table", "tabulate G(rho_n, b_n) against 3 - 4sin^2(pi/n)");
    int nMin = 4, nMax = 24;
    table->add_option("nMin", nMin, "first index (>= 4)");
    table->add_option("nMax", nMax, "last index (<= 10^4)");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string target;
    verify->add_option("target", target, "lemma1|lemma2|lemma3|eq2|eq3|table1|o1|o2|o3|o4|all")
        ->required();

    auto* conjugator = app.add_subcommand("conjugator", "solve h g h^-1 = target constraints");
    std::string constraintFile;
    conjugator->add_option("file", constraintFile, "JSON constraint file")->required();

    auto* catalog = app.add_subcommand("catalog", "export a catalog group as JSON");
    std::string catalogGroup;
    std::optional<int> catalogN;
    catalog->add_option("--group", catalogGroup, "knot|gamma|delta|o1|o2|o3|o4")->required();
    catalog->add_option("--n", catalogN, "index for gamma/delta/o2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        gmt::Tolerance tol = resolve_tolerance(tolFlag);

        if (classify->parsed()) {
            std::string arg = classifyMatrix;
            if (classifyCatalog == "gamma")
                arg = "gamma:" + std::to_string(classifyN) + ":" + classifyGen;
            else if (classifyCatalog == "h2" || classifyCatalog == "h3")
                arg = classifyCatalog + ":" + std::to_string(classifyN);
            else if (!classifyCatalog.empty())
                arg = classifyCatalog;
            if (arg.empty()) throw CLI::ValidationError("matrix", "no matrix given");
            return cmd_classify(arg, tol, asJson);
        }
        if (gmtCmd->parsed()) {
            if (gmtN) {
                gmtF = "gamma:" + std::to_string(*gmtN) + ":rho";
                gmtG = "gamma:" + std::to_string(*gmtN) + ":b";
            }
            if (gmtF.empty() || gmtG.empty())
                throw CLI::ValidationError("f/g", "need two matrices or --catalog-n");
            return cmd_gmt(gmtF, gmtG, tol, asJson);
        }
        if (table->parsed()) {
            if (nMin < 4 || nMin > nMax || nMax > 10000)
                throw CLI::ValidationError("nMin/nMax", "need 4 <= nMin <= nMax <= 10^4");
            return cmd_table(nMin, nMax, tol, asJson, asCsv);
        }
        if (verify->parsed()) return cmd_verify(target, tol, asJson);
        if (conjugator->parsed()) return cmd_conjugator(constraintFile, tol, asJson);
        if (catalog->parsed()) return cmd_catalog(catalogGroup, catalogN, tol);
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gmt::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gmt::SingularMatrix& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
