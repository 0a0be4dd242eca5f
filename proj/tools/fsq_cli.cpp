// Command-line surface: decompose, scan, local-report, lattice-report and
// corpus checks, emitting a JSON envelope on stdout.
//
// Exit codes: 0 success, 1 no witness, 2 invalid input, 3 capacity exceeded.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsq/oracle.hpp"
#include "fsq/solver.hpp"

using json = nlohmann::json;
using namespace fsq;

namespace {

constexpr const char* kVersion = "0.1.0";

json to_json(const Decomposition& d) {
    return json{{"n", d.n}, {"x", d.x},         {"y", d.y},
                {"z", d.z}, {"w", d.w},         {"m", d.m},
                {"delta", d.delta},
                {"path", d.path == SolvePath::constructive ? "constructive" : "oracle"}};
}

json to_json(const LocalRepReport& r) {
    std::string place = r.place.infinite ? "infinity" : std::to_string(r.place.p);
    std::string reason;
    switch (r.reason) {
        case LocalRepReason::unimodular_all: reason = "unimodular-all"; break;
        case LocalRepReason::odd_p_square_condition: reason = "odd-p-square-condition"; break;
        case LocalRepReason::dyadic_class: reason = "dyadic-class"; break;
        case LocalRepReason::archimedean_sign: reason = "archimedean-sign"; break;
    }
    return json{{"place", place}, {"representable", r.representable}, {"reason", reason}};
}

std::string spinor_tag(SpinorNormGroup g) {
    switch (g) {
        case SpinorNormGroup::UnitsTimesSquares: return "units-times-squares";
        case SpinorNormGroup::FullGroup: return "full-group";
        case SpinorNormGroup::ContainsUnitsTimesSquares: return "contains-units-times-squares";
    }
    return "";
}

struct Envelope {
    json body;
    int exit_code = 0;
};

void emit(const Envelope& env, bool pretty) {
    if (pretty)
        std::cout << env.body.dump(2) << "\n";
    else
        std::cout << env.body.dump() << "\n";
}

Envelope cmd_decompose(i64 a, i64 b, i64 n, const std::string& method) {
    Envelope env;
    env.body["command"] = "decompose";
    env.body["inputs"] = {{"a", a}, {"b", b}, {"n", n}, {"method", method}};
    CoefficientPair pair = validate_pair(a, b);
    SolveOutcome out;
    if (method == "constructive") {
        out = n == 0 ? SolveOutcome{Decomposition{}, {}} : solve_constructive(pair, n);
    } else if (method == "oracle") {
        if (auto d = oracle::has_restricted_representation(a, b, n)) out.result = *d;
    } else {
        out = solve(pair, n);
    }
    json attempts = json::array();
    for (const auto& at : out.attempts)
        attempts.push_back({{"m", at.m}, {"reason", at.reason}});
    if (out.result) {
        env.body["result"] = {{"decomposition", to_json(*out.result)},
                              {"verified", verify(pair, *out.result)},
                              {"attempts", attempts}};
        env.body["meta"]["solver"] = {
            {"path", out.result->path == SolvePath::constructive ? "constructive" : "oracle"},
            {"attempts", out.attempts.size()}};
    } else {
        env.body["result"] = {{"decomposition", nullptr}, {"attempts", attempts}};
        env.body["meta"]["solver"] = {{"path", nullptr}, {"attempts", out.attempts.size()}};
        env.exit_code = 1;
    }
    return env;
}

Envelope cmd_scan(i64 a, i64 b, i64 n_max, int jobs) {
    Envelope env;
    env.body["command"] = "scan";
    env.body["inputs"] = {{"a", a}, {"b", b}, {"n_max", n_max}, {"jobs", jobs}};
    validate_pair(a, b);
    oracle::ScanReport rep = oracle::scan_failures(a, b, n_max, jobs);
    json sample = json::object();
    for (const auto& [n, d] : rep.witness_sample) sample[std::to_string(n)] = to_json(d);
    env.body["result"] = {{"failures", rep.failures},
                          {"failure_count", rep.failures.size()},
                          {"witness_sample", sample}};
    env.body["meta"]["scan_elapsed_ms"] = rep.elapsed.count();
    return env;
}

Envelope cmd_local_report(i64 a, i64 b, i64 n, i64 m) {
    Envelope env;
    env.body["command"] = "local-report";
    env.body["inputs"] = {{"a", a}, {"b", b}, {"n", n}, {"m", m}};
    CoefficientPair pair = validate_pair(a, b);
    i64 t = checked_mul(pair.c, n) - checked_mul(m, m);
    TernaryDiagonalLattice lat(1, pair.c, pair.c);
    json places = json::array();
    places.push_back(to_json(local_represents(lat, Place::at_infinity(), t)));
    places.push_back(to_json(local_represents(lat, Place::finite(2), t)));
    if (pair.p != 0) places.push_back(to_json(local_represents(lat, Place::finite(pair.p), t)));
    env.body["result"] = {{"c", pair.c},
                          {"t", t},
                          {"places", places},
                          {"everywhere", t >= 0 && represents_everywhere_locally(lat, t)}};
    // admissibility applies when m is itself a square, i.e. plays the mu role
    if (is_perfect_square(m) && n >= 1 && n % 16 != 0)
        env.body["result"]["admissible_mu"] = admissible_mu(pair.c, n, m);
    else
        env.body["result"]["admissible_mu"] = nullptr;
    return env;
}

Envelope cmd_lattice_report(i64 a, i64 b) {
    Envelope env;
    env.body["command"] = "lattice-report";
    env.body["inputs"] = {{"a", a}, {"b", b}};
    CoefficientPair pair = validate_pair(a, b);
    TernaryDiagonalLattice lat(1, pair.c, pair.c);
    json groups = json::object();
    groups["2"] = spinor_tag(spinor_norm_group(lat, 2));
    if (pair.p != 0)
        groups[std::to_string(pair.p)] = spinor_tag(spinor_norm_group(lat, pair.p));
    json aniso = json::array();
    for (const Place& v : anisotropic_places(DiagonalSpace{
             Rational(1), Rational(pair.c), Rational(pair.c)}))
        aniso.push_back(v.infinite ? "infinity" : std::to_string(v.p));
    env.body["result"] = {{"c", pair.c},
                          {"spinor_norm_groups", groups},
                          {"genus_equals_spinor_genus", genus_equals_spinor_genus(lat)},
                          {"anisotropic_places", aniso}};
    return env;
}

Envelope cmd_corpus(const std::string& check, i64 bound) {
    Envelope env;
    env.body["command"] = "corpus";
    env.body["inputs"] = {{"check", check}, {"bound", bound}};
    if (check == "dickson") {
        auto gaps = oracle::dickson_gap_check(bound);
        bool pass = gaps == std::vector<i64>{15};
        env.body["result"] = {{"pass", pass}, {"gaps", gaps}};
        if (!pass) env.exit_code = 1;
    } else if (check == "cauchy") {
        json violations = json::array();
        for (i64 n = 1; n <= bound; n += 2)
            for (i64 m = 1; m * m < 4 * n; m += 2) {
                if (3 * n >= m * m + 2 * m + 4) continue;
                if (!oracle::cauchy_witness(n, m))
                    violations.push_back({{"n", n}, {"m", m}});
            }
        env.body["result"] = {{"pass", violations.empty()}, {"violations", violations}};
        if (!violations.empty()) env.exit_code = 1;
    } else if (check == "family310") {
        json rows = json::array();
        bool pass = true;
        for (const auto& v : oracle::counterexample_family_check(bound)) {
            rows.push_back({{"r", v.r},
                            {"n", v.n},
                            {"unique_partition", v.unique_partition},
                            {"no_witness", v.no_witness}});
            pass = pass && v.unique_partition && v.no_witness;
        }
        env.body["result"] = {{"pass", pass}, {"family", rows}};
        if (!pass) env.exit_code = 1;
    } else if (check == "lagrange") {
        oracle::detail::ScanTables tables(bound, 1);
        std::vector<i64> missed;
        for (i64 n = 0; n <= bound; ++n) {
            bool ok = false;
            for (i64 x = 0; x * x <= n && !ok; ++x)
                for (i64 y = x; x * x + y * y <= n; ++y)
                    if (tables.two_square[size_t(n - x * x - y * y)]) { ok = true; break; }
            if (!ok) missed.push_back(n);
        }
        env.body["result"] = {{"pass", missed.empty()}, {"missed", missed}};
        if (!missed.empty()) env.exit_code = 1;
    } else {
        throw std::invalid_argument("corpus: unknown check " + check);
    }
    return env;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted four-square decompositions with a*x + b*y a perfect square"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON output");

    i64 a = 0, b = 0, n = 0, n_max = 0, m = 0, bound = 0;
    int jobs = 1;
    std::string method = "hybrid", check;

    auto* dec = app.add_subcommand("decompose", "find one restricted witness for n");
    dec->add_option("--a", a)->required();
    dec->add_option("--b", b)->required();
    dec->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    dec->add_option("--method", method)
        ->check(CLI::IsMember({"constructive", "oracle", "hybrid"}));

    auto* scan = app.add_subcommand("scan", "exhaustive failure scan up to n-max");
    scan->add_option("--a", a)->required();
    scan->add_option("--b", b)->required();
    scan->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);
    scan->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* loc = app.add_subcommand("local-report", "per-place verdicts for c*n - m^2");
    loc->add_option("--a", a)->required();
    loc->add_option("--b", b)->required();
    loc->add_option("--n", n)->required();
    loc->add_option("--m", m)->required();

    auto* lat = app.add_subcommand("lattice-report", "spinor and genus report for <1,c,c>");
    lat->add_option("--a", a)->required();
    lat->add_option("--b", b)->required();

    auto* cor = app.add_subcommand("corpus", "classical corpus checks");
    cor->add_option("--check", check)
        ->required()
        ->check(CLI::IsMember({"dickson", "cauchy", "family310", "lagrange"}));
    cor->add_option("--bound", bound)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        Envelope env;
        if (dec->parsed()) env = cmd_decompose(a, b, n, method);
        else if (scan->parsed()) env = cmd_scan(a, b, n_max, jobs);
        else if (loc->parsed()) env = cmd_local_report(a, b, n, m);
        else if (lat->parsed()) env = cmd_lattice_report(a, b);
        else env = cmd_corpus(check, bound);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        env.body["meta"]["version"] = kVersion;
        env.body["meta"]["elapsed_ms"] = elapsed.count();
        emit(env, pretty);
        return env.exit_code;
    } catch (const invalid_pair& e) {
        std::cerr << "invalid pair (" << e.code << "): " << e.what() << "\n";
        json out{{"error", {{"code", e.code}, {"message", e.what()}}}};
        std::cout << out.dump(pretty ? 2 : -1) << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        json out{{"error", {{"code", "capacity"}, {"message", e.what()}}}};
        std::cout << out.dump(pretty ? 2 : -1) << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        json out{{"error", {{"code", "invalid-input"}, {"message", e.what()}}}};
        std::cout << out.dump(pretty ? 2 : -1) << "\n";
        return 2;
    }
}
