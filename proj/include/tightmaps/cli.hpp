#pragma once

#include "tightmaps/counts/alpha.hpp"
#include "tightmaps/counts/formulas.hpp"
#include "tightmaps/counts/univariate.hpp"
#include "tightmaps/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace tightmaps::cli {

enum ExitCode : int { Ok = 0, Usage = 1, VerificationFailure = 2 };

using Fields = std::vector<std::pair<std::string, std::string>>;

// one computed value with its inputs; `details` holds extra named results
struct Record {
    std::string command;
    Fields inputs;
    std::string value;
    Fields details;
};

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline void emit(const Record& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["command"] = r.command;
        j["inputs"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
        j["value"] = r.value;
        if (!r.details.empty()) {
            j["details"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : r.details) j["details"][k] = v;
        }
        out << j.dump() << "\n";
    } else if (format == "csv") {
        std::string head = "command", row = csv_cell(r.command);
        for (const auto& [k, v] : r.inputs) head += "," + k, row += "," + csv_cell(v);
        head += ",value", row += "," + csv_cell(r.value);
        for (const auto& [k, v] : r.details) head += "," + k, row += "," + csv_cell(v);
        out << head << "\n" << row << "\n";
    } else if (r.details.empty()) {
        out << r.value << "\n";
    } else {
        out << "value: " << r.value << "\n";
        for (const auto& [k, v] : r.details) out << k << ": " << v << "\n";
    }
}

inline std::string join_csv(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
}

inline std::vector<long long> halve_degrees(const std::vector<long long>& degrees) {
    std::vector<long long> ms;
    for (auto d : degrees) {
        if (d <= 0 || d % 2 != 0)
            throw std::invalid_argument("face degree " + std::to_string(d) + " is not a positive even integer");
        ms.push_back(d / 2);
    }
    return ms;
}

inline void emit_verify(const std::vector<SuiteReport>& reports, const VerifyLimits& lim, const std::string& scope,
                        const std::string& format, std::ostream& out) {
    bool all = true;
    for (const auto& r : reports) all = all && r.passed();
    if (format == "json") {
        // no timings here: identical inputs give identical bytes
        nlohmann::ordered_json j;
        j["command"] = "verify";
        j["inputs"] = {{"scope", scope},
                       {"max_edges", std::to_string(lim.max_edges)},
                       {"max_tree_vertices", std::to_string(lim.max_tree_vertices)},
                       {"order", std::to_string(lim.order)}};
        j["value"] = all ? "pass" : "fail";
        j["suites"] = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            nlohmann::ordered_json s;
            s["scope"] = r.scope;
            s["checks"] = std::to_string(r.checks);
            s["failures"] = std::to_string(r.failures);
            s["status"] = r.passed() ? "pass" : "fail";
            if (!r.passed()) s["first_failure"] = r.first_failure;
            j["suites"].push_back(s);
        }
        out << j.dump() << "\n";
        return;
    }
    if (format == "csv") {
        out << "scope,checks,failures,status,first_failure\n";
        for (const auto& r : reports)
            out << r.scope << "," << r.checks << "," << r.failures << "," << (r.passed() ? "pass" : "fail") << ","
                << csv_cell(r.first_failure) << "\n";
        return;
    }
    out << std::left << std::setw(13) << "scope" << std::right << std::setw(8) << "checks" << std::setw(10) << "failures"
        << std::setw(10) << "seconds" << "  status\n";
    for (const auto& r : reports)
        out << std::left << std::setw(13) << r.scope << std::right << std::setw(8) << r.checks << std::setw(10) << r.failures
            << std::setw(10) << std::fixed << std::setprecision(2) << r.seconds << "  " << (r.passed() ? "pass" : "FAIL") << "\n";
    for (const auto& r : reports)
        if (!r.passed()) out << "\n[" << r.scope << "] smallest failing instance:\n" << r.first_failure << "\n";
    out << (all ? "all suites pass" : "verification FAILED") << "\n";
}

// Runs the command line `args` (without the program name). Returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Counting tight 2b-irreducible planar maps: closed forms and brute-force oracles", "tightmaps_cli"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "table";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}))->capture_default_str();

    // count
    auto* count = app.add_subcommand("count", "Number of tight 2b-irreducible maps with faces of the given degrees");
    long long b = 0;
    std::vector<long long> degrees;
    std::size_t shape = 0;
    bool symbolic = false;
    count->add_option("--b", b, "Half the irreducibility girth");
    count->add_option("--degrees", degrees, "Even face degrees 2m_1,...,2m_n")->delimiter(',');
    count->add_flag("--symbolic", symbolic, "Print the polynomial in b and m_1..m_n");
    count->add_option("--n", shape, "Number of faces (for --symbolic without --degrees)");

    // alpha
    auto* alpha_cmd = app.add_subcommand("alpha", "The coefficient alpha^(b)_{k,n}");
    long long k = 0, n = 0;
    std::string method = "polysum";
    bool all_methods = false;
    alpha_cmd->add_option("--b", b, "b (omit with --symbolic)");
    alpha_cmd->add_option("--k", k)->required();
    alpha_cmd->add_option("--n", n)->required();
    alpha_cmd->add_option("--method", method)->check(CLI::IsMember({"lagrange", "polysum", "recurrence"}))->capture_default_str();
    alpha_cmd->add_flag("--all-methods", all_methods, "Compute with all three methods and compare");
    alpha_cmd->add_flag("--symbolic", symbolic, "Polynomial in b");

    // twoface
    auto* twoface = app.add_subcommand("twoface", "Two-face maps with k+1 marked vertices and cycle length at least 2(c+1)");
    long long c = 0, m1 = 0, m2 = 0, d = 0;
    twoface->add_option("--c", c);
    twoface->add_option("--k", k)->required();
    twoface->add_option("--m1", m1)->required();
    twoface->add_option("--m2", m2)->required();
    twoface->add_option("--d", d, "Count maps whose cycle has length exactly 2d instead");

    // series
    auto* series = app.add_subcommand("series", "Series coefficients");
    series->set_help_flag("--help", "Print this help message and exit");  // frees -h/--h
    bool u0 = false, h = false, nb = false;
    std::size_t order = 6;
    series->add_flag("--u0", u0, "U_0(z), coefficients of z^1..z^order");
    series->add_flag("--h", h, "h_b(u), coefficients of u^1..u^order");
    series->add_flag("--nb", nb, "N_b(z), coefficients of z^0..z^order");
    series->add_option("--b", b)->required();
    series->add_option("--order", order)->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-check closed forms against brute-force oracles");
    std::string scope = "all";
    VerifyLimits lim;
    unsigned jobs = 1;
    std::vector<std::string> scopes = verify_scopes();
    scopes.push_back("all");
    verify->add_option("--scope", scope)->check(CLI::IsMember(scopes))->capture_default_str();
    verify->add_option("--max-edges", lim.max_edges, "Edge limit of the exhaustive map oracle")->capture_default_str();
    verify->add_option("--max-tree-vertices", lim.max_tree_vertices, "Blossoming vertices per closed tree")->capture_default_str();
    verify->add_option("--order", lim.order, "Series truncation order")->capture_default_str();
    verify->add_option("--jobs", jobs, "Suites run concurrently")->capture_default_str();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (count->parsed()) {
            if (symbolic) {
                std::size_t faces = degrees.empty() ? shape : degrees.size();
                if (faces < 3) throw RangeError("count --symbolic: outside theorem range (need n >= 3)");
                emit({"count", {{"symbolic", "true"}, {"n", std::to_string(faces)}}, n_count_symbolic(faces).to_string(), {}}, format, out);
                return Ok;
            }
            if (count->count("--b") == 0 || degrees.empty()) throw CLI::ValidationError("count needs --b and --degrees");
            auto ms = halve_degrees(degrees);
            std::vector<std::string> deg_text;
            for (auto x : degrees) deg_text.push_back(std::to_string(x));
            emit({"count", {{"b", std::to_string(b)}, {"degrees", join_csv(deg_text)}}, to_string(n_count(b, ms)), {}}, format, out);
            return Ok;
        }
        if (alpha_cmd->parsed()) {
            Fields inputs{{"b", symbolic ? "b" : std::to_string(b)}, {"k", std::to_string(k)}, {"n", std::to_string(n)}};
            if (symbolic) {
                emit({"alpha", inputs, alpha_symbolic(k, n).to_string(), {}}, format, out);
                return Ok;
            }
            if (alpha_cmd->count("--b") == 0) throw CLI::ValidationError("alpha needs --b (or --symbolic)");
            if (!all_methods) {
                AlphaMethod m = method == "lagrange" ? AlphaMethod::Lagrange : method == "recurrence" ? AlphaMethod::Recurrence : AlphaMethod::PolySum;
                inputs.emplace_back("method", method);
                emit({"alpha", inputs, to_string(alpha(b, k, n, m)), {}}, format, out);
                return Ok;
            }
            Fields details;
            std::vector<Rational> values;
            for (AlphaMethod m : {AlphaMethod::Lagrange, AlphaMethod::PolySum, AlphaMethod::Recurrence}) {
                if (m == AlphaMethod::Recurrence && b < 2) {
                    details.emplace_back(to_string(m), "n/a");
                    continue;
                }
                values.push_back(alpha(b, k, n, m));
                details.emplace_back(to_string(m), to_string(values.back()));
            }
            bool agree = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
            details.emplace_back("agree", agree ? "true" : "false");
            emit({"alpha", inputs, to_string(values[1]), details}, format, out);
            if (!agree) err << "alpha methods disagree\n";
            return agree ? Ok : VerificationFailure;
        }
        if (twoface->parsed()) {
            if (k < 0 || c < 0) throw std::invalid_argument("twoface: k and c must be non-negative");
            if (twoface->count("--d")) {
                if (d < 1) throw std::invalid_argument("twoface: d must be at least 1");
                emit({"twoface", {{"d", std::to_string(d)}, {"k", std::to_string(k)}, {"m1", std::to_string(m1)}, {"m2", std::to_string(m2)}},
                      to_string(fixed_cycle_count(d, k, m1, m2)), {}},
                     format, out);
            } else {
                emit({"twoface", {{"c", std::to_string(c)}, {"k", std::to_string(k)}, {"m1", std::to_string(m1)}, {"m2", std::to_string(m2)}},
                      to_string(two_face_count(c, k, m1, m2)), {}},
                     format, out);
            }
            return Ok;
        }
        if (series->parsed()) {
            if (u0 + h + nb != 1) throw CLI::ValidationError("series needs exactly one of --u0, --h, --nb");
            if (b < 1) throw std::invalid_argument("series: b must be at least 1");
            if (order < 1) throw std::invalid_argument("series: order must be at least 1");
            RationalSeries s = u0 ? u0_series(b, order) : h ? h_series(b, order) : angulation_series(b, order);
            const std::size_t from = nb ? 0 : 1;
            std::vector<std::string> cs;
            for (std::size_t i = from; i <= order; ++i) cs.push_back(to_string(s[i]));
            const std::string which = u0 ? "u0" : h ? "h" : "nb";
            emit({"series", {{"series", which}, {"b", std::to_string(b)}, {"order", std::to_string(order)}, {"from", std::to_string(from)}},
                  join_csv(cs), {}},
                 format, out);
            return Ok;
        }
        if (verify->parsed()) {
            auto reports = run_verify(scope, lim, jobs);
            emit_verify(reports, lim, scope, format, out);
            for (const auto& r : reports)
                if (!r.passed()) return VerificationFailure;
            return Ok;
        }
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}

}  // namespace tightmaps::cli
