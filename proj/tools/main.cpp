// Command-line front end: compute invariants from crossing lists or
// planar-diagram codes, verify the R-matrix structure, run the oracle
// self-test suites.
//
// Exit codes: 0 success, 1 parse/usage failure, 2 disagreement or failed
// check, 3 pipeline error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alexg/alexander.hpp"
#include "alexg/formats.hpp"
#include "alexg/selftest.hpp"
#include "alexg/xc.hpp"

namespace {

using namespace alexg;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open input: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

UpwardDiagram parse_diagram(const std::string& text, const std::string& format) {
    std::string fmt = format;
    if (fmt == "auto") {
        std::size_t i = 0;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && text[i] == '{')
            fmt = "crossings-json";
        else if (i < text.size() && (text[i] == 'X' || text[i] == 'x'))
            fmt = "pd-text";
        else if (i >= text.size())
            throw ParseError("empty input");
        else
            throw ParseError("cannot sniff input format; pass --format");
    }
    if (fmt == "crossings-json") return crossings_from_json(text);
    if (fmt == "pd-text") return from_pd(pd_from_text(text));
    throw ParseError("unknown format: " + fmt);
}

nlohmann::json poly_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, c.str()});
    return {{"text", p.str()}, {"terms", terms}};
}

nlohmann::json result_json(const AlexResult& r) {
    return {{"method", method_name(r.method)},
            {"poly", poly_json(r.poly)},
            {"raw", poly_json(r.raw)}};
}

int cmd_compute(const std::string& in, const std::string& format,
                const std::string& method, const std::string& out) {
    UpwardDiagram d = UpwardDiagram::validate({});
    try {
        d = parse_diagram(read_input(in), format);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    }

    if (method != "all") {
        AlexMethod m = AlexMethod::Matrix;
        if (method == "gaussian") m = AlexMethod::Gaussian;
        else if (method == "stitch") m = AlexMethod::Stitch;
        try {
            const AlexResult r = alex_via(d, m);
            if (out == "json") {
                nlohmann::json j{{"schema", 1},
                                 {"crossings", d.crossing_count()},
                                 {"results", nlohmann::json::array({result_json(r)})},
                                 {"agreement", nullptr}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "Δ(T) = " << r.poly.str() << "\n";
            }
            return 0;
        } catch (const Error& e) {
            std::cerr << "pipeline error: " << e.what() << "\n";
            return 3;
        }
    }

    const CompareReport rep = alex_compare(d);
    if (!rep.errors.empty()) {
        for (const std::string& e : rep.errors) std::cerr << "pipeline error: " << e << "\n";
        return 3;
    }
    if (out == "json") {
        nlohmann::json results = nlohmann::json::array();
        results.push_back(result_json(*rep.matrix));
        results.push_back(result_json(*rep.gaussian));
        results.push_back(result_json(*rep.stitch));
        nlohmann::json j{{"schema", 1},
                         {"crossings", d.crossing_count()},
                         {"results", results},
                         {"agreement", rep.all_equal},
                         {"value_at_one_unimodular", rep.unimodular_at_one},
                         {"palindromic", rep.palindromic}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Δ(T) = " << rep.matrix->poly.str() << "\n";
        std::cout << "agreement: " << (rep.all_equal ? "OK" : "MISMATCH")
                  << " (matrix, gaussian, stitch)\n";
        if (!rep.all_equal) {
            std::cout << "  matrix:   " << rep.matrix->poly.str() << "\n";
            std::cout << "  gaussian: " << rep.gaussian->poly.str() << "\n";
            std::cout << "  stitch:   " << rep.stitch->poly.str() << "\n";
        }
    }
    return rep.all_equal ? 0 : 2;
}

void print_axiom_report(const std::string& name, const AxiomReport& rep, bool verbose) {
    std::cout << name << ":\n";
    for (const AxiomCheck& c : rep.axioms) {
        std::cout << "  axiom " << c.id << ": " << (c.holds ? "PASS" : "FAIL");
        if (c.holds && !c.exact) std::cout << " (up to a unit ±T^m)";
        if (!c.note.empty()) std::cout << "  [" << c.note << "]";
        std::cout << "\n";
        if (verbose || !c.holds) {
            std::cout << "    lhs: " << c.lhs << "\n";
            std::cout << "    rhs: " << c.rhs << "\n";
        }
    }
}

nlohmann::json axiom_json(const AxiomReport& rep) {
    nlohmann::json arr = nlohmann::json::array();
    for (const AxiomCheck& c : rep.axioms)
        arr.push_back({{"id", c.id},
                       {"holds", c.holds},
                       {"exact", c.exact},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"note", c.note}});
    return {{"axioms", arr}, {"all", rep.all_hold}};
}

int cmd_verify(const std::string& matrix_path, const std::string& out) {
    if (!matrix_path.empty()) {
        RMatrix r;
        try {
            const Matrix<LaurentPoly> m = matrix_from_json(read_input(matrix_path));
            if (m.rows() != 2) throw ParseError("custom matrix must be 2x2");
            r.m = m;
        } catch (const ParseError& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return 1;
        }
        const AxiomReport rep = verify_axioms(r);
        if (out == "json") {
            nlohmann::json j = axiom_json(rep);
            j["schema"] = 1;
            j["matrix"] = "custom";
            std::cout << j.dump(2) << "\n";
        } else {
            print_axiom_report("custom matrix", rep, false);
        }
        return rep.all_hold ? 0 : 2;
    }

    const AxiomReport rep_a = verify_axioms(standard_r(RKind::AForm));
    const AxiomReport rep_b = verify_axioms(standard_r(RKind::BForm));
    const bool twist_ok =
        twist(standard_r(RKind::AForm), TwistElem{LaurentPoly::t()}).m ==
        standard_r(RKind::BForm).m;
    if (out == "json") {
        nlohmann::json j{{"schema", 1},
                         {"A-form", axiom_json(rep_a)},
                         {"B-form", axiom_json(rep_b)},
                         {"twist_A_by_T_equals_B", twist_ok}};
        std::cout << j.dump(2) << "\n";
    } else {
        print_axiom_report("A-form [[T,0],[1-T^2,T]]", rep_a, false);
        print_axiom_report("B-form [[T^2,0],[1-T^2,1]]", rep_b, false);
        std::cout << "twist of A-form by T equals B-form: " << (twist_ok ? "PASS" : "FAIL")
                  << "\n";
    }
    return rep_a.all_hold && rep_b.all_hold && twist_ok ? 0 : 2;
}

int cmd_selftest(std::uint64_t seed, int truncation, int instances) {
    selftest::Config cfg;
    cfg.seed = seed;
    cfg.order = truncation;
    if (instances > 0) {
        cfg.hom_instances = instances;
        cfg.square_instances = instances;
        cfg.collapse_instances = instances;
    }
    const selftest::Report rep = selftest::run(cfg);
    for (const selftest::SuiteResult& s : rep.suites)
        std::printf("suite %-28s %d/%d ok  (%.0f ms)\n", s.name.c_str(), s.passed,
                    s.total, s.millis);
    std::printf("selftest: %s (seed %llu, order %d, %.0f ms)\n",
                rep.all_pass ? "PASS" : "FAIL",
                static_cast<unsigned long long>(seed), truncation, rep.total_millis);
    return rep.all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alexander polynomials via exact Gaussian contraction calculus"};
    app.require_subcommand(1);

    std::string in;
    std::string format = "auto";
    std::string method = "all";
    std::string out = "text";
    CLI::App* compute = app.add_subcommand("compute", "compute the invariant of a diagram");
    compute->add_option("--in", in, "input path, or - for stdin")->required();
    compute->add_option("--format", format, "crossings-json | pd-text (default: sniff)")
        ->check(CLI::IsMember({"auto", "crossings-json", "pd-text"}));
    compute->add_option("--method", method, "matrix | gaussian | stitch | all")
        ->check(CLI::IsMember({"matrix", "gaussian", "stitch", "all"}));
    compute->add_option("--out", out, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string matrix_path;
    std::string vout = "text";
    CLI::App* verify = app.add_subcommand("verify", "check the structure axioms");
    verify->add_option("--matrix", matrix_path, "custom 2x2 matrix json file");
    verify->add_option("--out", vout, "text | json")->check(CLI::IsMember({"text", "json"}));

    std::uint64_t seed = 12345;
    int truncation = 4;
    int instances = 0;
    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the oracle suites");
    selftest_cmd->add_option("--seed", seed, "random seed (default 12345)");
    selftest_cmd->add_option("--truncation", truncation, "series order (default 4)")
        ->check(CLI::Range(1, 8));
    selftest_cmd->add_option("--instances", instances,
                             "instances per suite (default 50/50/200)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (compute->parsed()) return cmd_compute(in, format, method, out);
        if (verify->parsed()) return cmd_verify(matrix_path, vout);
        if (selftest_cmd->parsed()) return cmd_selftest(seed, truncation, instances);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
