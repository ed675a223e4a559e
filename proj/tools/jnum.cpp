#include <charconv>
#include <cstdlib>
#include <fstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "jnum/errors.hpp"
#include "render.hpp"
#include "suites.hpp"

using namespace jnum;
using json = nlohmann::ordered_json;

namespace {

struct Fraction {
    int num = 0, den = 0;
};

int to_int(std::string_view s, const char* what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw UsageError(fmt::format("bad {} '{}'", what, s));
    return v;
}

Fraction parse_fraction(const std::string& s, const char* what) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw UsageError(fmt::format("{} must look like A/B, got '{}'", what, s));
    return {to_int(std::string_view(s).substr(0, slash), what), to_int(std::string_view(s).substr(slash + 1), what)};
}

double parse_decimal(const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) throw UsageError("bad decimal k '" + s + "'");
    return v;
}

void load_config(const std::string& path, Tolerances& t, RunOptions& run) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(fmt::format("config {}: {}", path, e.what()));
    }
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    for (auto& [k, v] : j.items()) {
        if (k == "tolerances") {
            t = tolerances_from_json(v, t);
        } else if (k == "max_len") {
            if (!v.is_number_integer()) throw UsageError("config max_len must be an integer");
            run.max_len = v.get<int>();
        } else {
            throw UsageError("unknown config key '" + k + "'");
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jorgensen numbers, two-bridge Riley representations and arithmetic checks"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false, as_csv = false;
    std::string config, tol_text;
    std::optional<int> root_index, max_len;
    app.add_flag("--json", as_json, "emit the result as JSON");
    app.add_flag("--csv", as_csv, "emit result records as CSV");
    app.add_option("--config", config, "JSON file with tolerances and max_len");
    app.add_option("--tol", tol_text, "tolerances, e.g. 1e-8 or eps_cx=1e-8,eps_fix=1e-5");
    app.add_option("--root-index", root_index, "pick this root of the polynomial instead of the geometric one");
    app.add_option("--max-len", max_len, "word length: root sampling (knot/link) or sweep length (verify)")
        ->check(CLI::Range(1, 16));

    std::string pq, theta, k_text, suite, poly;
    int d = 0;
    bool verify = false;
    auto* knot = app.add_subcommand("knot", "Riley polynomial d_n and J for the two-bridge knot P/Q");
    knot->add_option("P/Q", pq)->required();
    auto* link = app.add_subcommand("link", "Riley polynomial c_n and J for the two-bridge link P/Q");
    link->add_option("P/Q", pq)->required();
    auto* bianchi = app.add_subcommand("bianchi", "Bianchi group generators");
    bianchi->add_option("--d", d, "1, 2, 3, 7 or 11")->required();
    bianchi->add_flag("--verify", verify, "evaluate the relators");
    auto* gtk = app.add_subcommand("gtk", "J-group G(theta,k) with theta = pi*NUM/DEN");
    gtk->add_option("NUM/DEN", theta)->required();
    gtk->add_option("K", k_text)->required();
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("SUITE", suite)->required();
    auto* roots = app.add_subcommand("roots", "roots of an integer polynomial (ascending coefficients)");
    roots->add_option("POLY", poly)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CliResult result;
    int code = 0;
    try {
        Tolerances t = tol();
        RunOptions run;
        if (!config.empty()) load_config(config, t, run);
        set_tolerances(t);
        apply_env_tolerances();
        if (!tol_text.empty()) set_tolerances(parse_tolerances(tol_text, tol()));
        if (root_index) run.root_index = root_index;
        if (max_len) run.max_len = max_len;
        if (run.max_len && (*run.max_len < 1 || *run.max_len > 16)) throw UsageError("max_len must be in 1..16");

        if (*knot) {
            auto f = parse_fraction(pq, "P/Q");
            result = cmd_knot(f.num, f.den, run);
        } else if (*link) {
            auto f = parse_fraction(pq, "P/Q");
            result = cmd_link(f.num, f.den, run);
        } else if (*bianchi) {
            result = cmd_bianchi(d, verify);
        } else if (*gtk) {
            auto f = parse_fraction(theta, "NUM/DEN");
            result = cmd_gtk(f.num, f.den, parse_decimal(k_text), k_text);
        } else if (*ver) {
            result = cmd_verify(suite, run);
        } else {
            result = cmd_roots(poly);
        }
        code = exit_code(result.status);
    } catch (const UsageError& e) {
        result.status = Status::error;
        result.message = std::string("usage: ") + e.what();
        code = 2;
    } catch (const std::exception& e) {
        result.status = Status::error;
        result.message = e.what();
        code = 1;
    }
    if (result.command.empty()) {
        for (auto* s : app.get_subcommands()) result.command = s->get_name();
        result.tolerances = tol();
    }

    if (as_json) {
        fmt::print("{}\n", json(result).dump(2));
    } else if (as_csv) {
        print_csv(result);
        if (code) fmt::print(stderr, "{}\n", result.message);
    } else if (result.results.empty()) {
        fmt::print(stderr, "jnum {}: {}\n", result.command, result.message);
    } else {
        print_human(result);
    }
    return code;
}
