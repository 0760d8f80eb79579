// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// CLI front end as a testable library function: run_cli(args) dispatches the
// subcommands, returns the JSON payload and the exit code.  Exit codes:
// 0 = decided/verified, 2 = Indeterminate, 1 = error (JSON error object).

#ifndef ISOLAB_CLI_HPP
#define ISOLAB_CLI_HPP

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "isolab/jsonio.hpp"

namespace isolab {

struct CliResult {
    int exit_code = 1;
    std::string output;  // JSON document (or DOT when requested on stdout)
};

namespace detail {

inline std::pair<long, long> parse_signature(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) fail("SyntaxError", "--sig expects \"r,s\"");
    try {
        long r = std::stol(text.substr(0, comma));
        long s = std::stol(text.substr(comma + 1));
        return {r, s};
    } catch (const std::exception&) {
        fail("SyntaxError", "--sig expects two integers \"r,s\"");
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("FileNotFound", "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail("BadJson", std::string("cannot parse ") + path + ": " + e.what());
    }
    return j;
}

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        fail("BadJson", std::string("cannot parse inline JSON: ") + e.what());
    }
}

// Primes whose local condition is not vacuous: 2 and the odd primes dividing
// the nonzero values among F(1), F(-1).
inline std::vector<Int> local_support(const IntPoly& F) {
    std::vector<Int> primes{2};
    Int prod = 1;
    if (Int f1 = eval(F, 1); f1 != 0) prod *= f1;
    if (Int fm1 = eval(F, -1); fm1 != 0) prod *= fm1;
    for (const Int& p : prime_divisors(abs_int(prod)))
        if (p != 2) primes.push_back(p);
    return primes;
}

inline int status_exit(Status st) { return st == Status::Indeterminate ? 2 : 0; }

}  // namespace detail

inline CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact lattice-isometry decision engine"};
    app.require_subcommand(1);

    std::string poly_text, sig_text, iota_text, dot_path, gram_path, matrix_path;
    std::string prime_text;
    long budget = 2000;
    bool degree20 = false;

    auto* salem = app.add_subcommand("salem", "Salem polynomial operations");
    salem->require_subcommand(1);
    auto* salem_verify = salem->add_subcommand("verify", "verify a Salem polynomial");
    salem_verify->add_option("poly", poly_text, "polynomial text")->required();

    auto* realizable = app.add_subcommand("realizable", "nonprojective realizability of a Salem number");
    realizable->add_option("poly", poly_text, "Salem polynomial text")->required();
    realizable->add_flag("--degree20", degree20, "require degree 20 (guaranteed route)");
    realizable->add_option("--budget", budget, "candidate budget for degrees below 20");

    auto* decide_cmd = app.add_subcommand("decide", "decide realizability of (F, iota) at (r, s)");
    decide_cmd->add_option("--poly", poly_text, "characteristic polynomial F")->required();
    decide_cmd->add_option("--sig", sig_text, "signature r,s")->required();
    decide_cmd->add_option("--iota", iota_text, "index map as JSON");

    auto* graph_cmd = app.add_subcommand("graph", "obstruction graph of F");
    graph_cmd->add_option("--poly", poly_text, "characteristic polynomial F")->required();
    graph_cmd->add_option("--iota", iota_text, "index map as JSON");
    graph_cmd->add_option("--dot", dot_path, "write DOT to this file");

    auto* idx_cmd = app.add_subcommand("idx", "enumerate index maps of F at (r, s)");
    idx_cmd->add_option("--poly", poly_text, "characteristic polynomial F")->required();
    idx_cmd->add_option("--sig", sig_text, "signature r,s")->required();

    auto* local_cmd = app.add_subcommand("local", "local existence over Z_p");
    local_cmd->add_option("--poly", poly_text, "characteristic polynomial F")->required();
    local_cmd->add_option("--prime", prime_text, "single prime p (default: all relevant)");

    auto* witness_cmd = app.add_subcommand("witness", "verify an explicit isometry");
    witness_cmd->add_option("--gram", gram_path, "JSON file with the Gram matrix")->required();
    witness_cmd->add_option("--matrix", matrix_path, "JSON file with the isometry")->required();

    CliResult res;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        Json err{{"error", {{"code", "UsageError"}, {"message", e.what()}}}};
        return {1, err.dump(2) + "\n"};
    }

    try {
        Json out;
        int code = 0;
        if (salem_verify->parsed()) {
            auto cert = verify_salem(parse_poly(poly_text));
            out = salem_to_json(cert);
            out["command"] = "salem-verify";
            out["salem"] = true;
        } else if (realizable->parsed()) {
            auto cert = verify_salem(parse_poly(poly_text));
            if (degree20 && cert.degree != 20)
                fail("DegreeOutOfRange", "--degree20 requires a degree-20 Salem polynomial");
            auto r = nonprojective_realizable(cert, budget);
            out["command"] = "realizable";
            out["status"] = to_string(r.status);
            out["salem"] = salem_to_json(cert);
            out["candidates_tried"] = r.candidates_tried;
            out["reasons"] = r.reasons;
            if (r.F) out["complemented"] = poly_to_json(*r.F);
            if (r.delta) out["delta"] = *r.delta;
            if (r.iota) out["iota"] = index_map_to_json(*r.iota);
            code = detail::status_exit(r.status);
        } else if (decide_cmd->parsed()) {
            IntPoly F = parse_poly(poly_text);
            auto [r, s] = detail::parse_signature(sig_text);
            std::optional<IndexMap> iota;
            if (!iota_text.empty()) iota = index_map_from_json(detail::parse_json_text(iota_text));
            Verdict v = decide(F, r, s, iota);
            out = verdict_to_json(v);
            out["command"] = "decide";
            out["polynomial"] = poly_to_json(F);
            out["signature"] = Json{{"r", r}, {"s", s}};
            code = detail::status_exit(v.status);
        } else if (graph_cmd->parsed()) {
            IntPoly F = parse_poly(poly_text);
            auto pr = decompose(F);
            std::optional<IndexMap> iota;
            if (!iota_text.empty()) iota = index_map_from_json(detail::parse_json_text(iota_text));
            auto g = build_graph(pr, iota);
            auto info = omega_info(g);
            out["command"] = "graph";
            out["polynomial"] = poly_to_json(F);
            out["graph"] = graph_to_json(g);
            out["group"] = group_to_json(g, info);
            std::string dot = graph_to_dot(g);
            if (!dot_path.empty()) {
                std::ofstream df(dot_path);
                if (!df) fail("FileNotFound", "cannot write " + dot_path);
                df << dot;
                out["dot_file"] = dot_path;
            } else {
                out["dot"] = dot;
            }
        } else if (idx_cmd->parsed()) {
            IntPoly F = parse_poly(poly_text);
            auto [r, s] = detail::parse_signature(sig_text);
            auto pr = decompose(F);
            auto rq = real_quad_factors(pr);
            auto maps = enumerate_index_maps(pr, rq, r, s);
            Json arr = Json::array();
            for (const auto& m : maps) arr.push_back(index_map_to_json(m));
            out["command"] = "idx";
            out["polynomial"] = poly_to_json(F);
            out["signature"] = Json{{"r", r}, {"s", s}};
            out["count"] = maps.size();
            out["index_maps"] = arr;
        } else if (local_cmd->parsed()) {
            IntPoly F = parse_poly(poly_text);
            out["command"] = "local";
            out["polynomial"] = poly_to_json(F);
            Json arr = Json::array();
            bool all = true;
            std::vector<Int> primes;
            if (!prime_text.empty())
                primes.push_back(Int(prime_text));
            else
                primes = detail::local_support(F);
            for (const Int& p : primes) {
                auto rep = local_existence(F, p);
                all = all && rep.verdict;
                arr.push_back(local_report_to_json(rep));
            }
            out["reports"] = arr;
            out["all_pass"] = all;
        } else if (witness_cmd->parsed()) {
            IntMat gram = matrix_from_json(detail::read_json_file(gram_path));
            IntMat t = matrix_from_json(detail::read_json_file(matrix_path));
            auto lat = make_lattice(gram);
            auto rep = verify_witness({lat, t});
            out = witness_to_json(rep);
            out["command"] = "witness";
            out["signature"] = Json{{"r", lat.r}, {"s", lat.s}};
        }
        res.exit_code = code;
        res.output = out.dump(2) + "\n";
    } catch (const error& e) {
        Json err{{"error", {{"code", e.code()}, {"message", e.what()}}}};
        res.exit_code = 1;
        res.output = err.dump(2) + "\n";
    }
    return res;
}

}  // namespace isolab

#endif  // ISOLAB_CLI_HPP
