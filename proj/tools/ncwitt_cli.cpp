// ncwitt: command-line front end for the Witt-vector computations and the
// verification harness.
//
// Exit codes: 0 success, 1 computation or check failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <ncwitt/ncwitt.hpp>

namespace
{

using json = nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct global_flags {
    unsigned p = 2;
    std::size_t level = 2;
    std::string alphabet = "X,Y";
    std::string format = "text";
    std::uint64_t seed = ncwitt::default_seed;
};

json params_json(const global_flags &g)
{
    return json{{"p", g.p}, {"level", g.level}, {"alphabet", g.alphabet}, {"seed", g.seed}};
}

ncwitt::alphabet make_alphabet(const global_flags &g)
{
    try {
        return ncwitt::parse_alphabet(g.alphabet);
    } catch (const std::invalid_argument &e) {
        throw usage_error(e.what());
    }
}

ncwitt::free_poly parse_input(const std::string &text, const ncwitt::alphabet &a)
{
    try {
        return ncwitt::parse_poly(text, a);
    } catch (const ncwitt::syntax_error &e) {
        throw usage_error("cannot parse '" + text + "': " + e.what());
    } catch (const ncwitt::unknown_generator &e) {
        throw usage_error("cannot parse '" + text + "': " + e.what());
    }
}

// Parses the inputs and pads them with zeros to `length` entries.
ncwitt::coordinate_tuple parse_tuple(const std::vector<std::string> &inputs, const ncwitt::alphabet &a,
                                     std::size_t length)
{
    if (inputs.size() > length) {
        throw usage_error("expected at most " + std::to_string(length) + " coordinates, got "
                          + std::to_string(inputs.size()));
    }
    std::vector<ncwitt::free_poly> coords(length, ncwitt::free_poly(a));
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        coords[i] = parse_input(inputs[i], a);
    }
    return ncwitt::coordinate_tuple(std::move(coords));
}

ncwitt::witt_context make_context(const global_flags &g, const ncwitt::alphabet &a, std::size_t n)
{
    try {
        return ncwitt::witt_context(a, g.p, n);
    } catch (const std::invalid_argument &e) {
        throw usage_error(e.what());
    }
}

std::string tuple_text(const ncwitt::coordinate_tuple &t)
{
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        out += (i ? ", " : "") + ncwitt::format_poly(t[i]);
    }
    return out + ")";
}

void emit(const global_flags &g, const std::string &command, const std::string &text, json result)
{
    if (g.format == "json") {
        json out{{"command", command}, {"params", params_json(g)}, {"result", std::move(result)}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << text << '\n';
    }
}

json string_list(const std::vector<std::string> &v)
{
    return json(v);
}

int cmd_ghost(const global_flags &g, const std::vector<std::string> &inputs)
{
    const auto a = make_alphabet(g);
    const auto ctx = make_context(g, a, g.level);
    const auto coords = parse_tuple(inputs, a, g.level);
    const auto ghost = ncwitt::ghost_map(ctx, coords);
    std::vector<std::string> comps;
    for (const auto &c : ghost.components()) {
        comps.push_back(ncwitt::format_abel(c));
    }
    emit(g, "ghost", ghost.to_string(), json{{"input", tuple_text(coords)}, {"ghost", string_list(comps)}});
    return exit_ok;
}

int cmd_omega(const global_flags &g, const std::vector<std::string> &inputs)
{
    const auto a = make_alphabet(g);
    make_context(g, a, g.level + 1);
    const auto coords = parse_tuple(inputs, a, g.level + 1);
    const auto x = ncwitt::omega_map(coords, g.p);
    std::vector<std::string> entries;
    for (const auto &e : x.entries()) {
        entries.push_back(ncwitt::format_poly(e));
    }
    emit(g, "omega", x.to_string(), json{{"input", tuple_text(coords)}, {"omega", string_list(entries)}});
    return exit_ok;
}

int cmd_rmap(const global_flags &g, const std::vector<std::string> &inputs)
{
    const auto a = make_alphabet(g);
    const auto ctx = make_context(g, a, g.level);
    const auto eps = parse_tuple(inputs, a, g.level);
    const auto r = ncwitt::r_map(eps, ctx);
    std::vector<std::string> coords;
    for (const auto &c : r.coords.coords()) {
        coords.push_back(ncwitt::format_poly(c));
    }
    json audit = json::array();
    for (const auto &step : r.audit) {
        audit.push_back({{"index", step.index},
                         {"divisor", step.divisor.get_str()},
                         {"numerator", ncwitt::format_abel(step.numerator)},
                         {"quotient", ncwitt::format_abel(step.quotient)}});
    }
    emit(g, "rmap", tuple_text(r.coords),
         json{{"input", tuple_text(eps)},
              {"r", string_list(coords)},
              {"audit", std::move(audit)},
              {"ghost_vanishes", ncwitt::check_ghost_vanishes(r)}});
    return exit_ok;
}

int cmd_abelianize(const global_flags &g, const std::vector<std::string> &inputs)
{
    const auto a = make_alphabet(g);
    if (inputs.empty()) {
        throw usage_error("abelianize needs at least one polynomial");
    }
    std::vector<std::string> out;
    std::string text;
    for (const auto &in : inputs) {
        out.push_back(ncwitt::format_abel(ncwitt::abelianize(parse_input(in, a))));
        text += (text.empty() ? "" : "\n") + out.back();
    }
    emit(g, "abelianize", text, json{{"input", inputs}, {"abelianized", string_list(out)}});
    return exit_ok;
}

int cmd_hmember(const global_flags &g, const std::vector<std::string> &inputs)
{
    const auto a = make_alphabet(g);
    if (inputs.size() != 1) {
        throw usage_error("hmember takes exactly one polynomial");
    }
    if (g.p != 2) {
        throw ncwitt::unsupported_setting("H-membership is defined only for p = 2");
    }
    const auto f = parse_input(inputs.front(), a);
    const bool member = ncwitt::h_membership(f);
    emit(g, "hmember", member ? "true" : "false", json{{"input", ncwitt::format_poly(f)}, {"member", member}});
    return exit_ok;
}

int cmd_verify(const global_flags &g, std::vector<std::string> ids, bool all)
{
    if (all || ids.empty()) {
        ids = ncwitt::check_ids();
    }
    for (const auto &id : ids) {
        if (!ncwitt::is_check_id(id)) {
            throw usage_error("unknown check '" + id + "'");
        }
    }
    ncwitt::verify_options opts;
    opts.p = g.p;
    opts.level = g.level;
    opts.seed = g.seed;
    if (!ncwitt::is_prime(opts.p)) {
        throw usage_error("p = " + std::to_string(opts.p) + " is not a prime");
    }
    const auto rep = ncwitt::run_verify(ids, opts);
    if (g.format == "json") {
        json checks = json::array();
        for (const auto &c : rep.checks) {
            checks.push_back({{"check_id", c.id},
                              {"anchor", c.anchor},
                              {"status", c.passed ? "pass" : "fail"},
                              {"cases", c.cases},
                              {"details", c.details},
                              {"seconds", c.seconds}});
        }
        json out{{"command", "verify"},
                 {"params", params_json(g)},
                 {"report", {{"status", rep.passed ? "pass" : "fail"}, {"checks", std::move(checks)}}}};
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto &c : rep.checks) {
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.id << " (" << c.cases << " cases, " << c.seconds
                      << " s)\n";
            std::cout << "     " << c.anchor << "\n";
            std::cout << "     " << c.details << "\n";
        }
        std::cout << (rep.passed ? "overall: pass" : "overall: FAIL") << '\n';
    }
    return rep.passed ? exit_ok : exit_failure;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact computations with p-typical Witt vectors of free non-commutative rings"};
    app.require_subcommand(1);
    app.fallthrough();

    global_flags g;
    app.add_option("--p", g.p, "Prime p")->capture_default_str();
    app.add_option("--level", g.level, "Truncation level")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--alphabet", g.alphabet, "Comma-separated generator names")->capture_default_str();
    app.add_option("--format", g.format, "Output format")->capture_default_str()->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Seed for randomized sweeps")->capture_default_str();

    std::vector<std::string> inputs;
    auto add_compute = [&](const char *name, const char *help) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("inputs", inputs, "Polynomials (use -- before arguments starting with '-')");
        return sub;
    };
    auto *ghost = add_compute("ghost", "Ghost map of a coordinate tuple (level = number of coordinates)");
    auto *omega = add_compute("omega", "Omega map into X_n(A) (level n takes n+1 coordinates)");
    auto *rmap = add_compute("rmap", "R-map of a tuple of commutators (level = number of entries)");
    auto *abel = add_compute("abelianize", "Image in A/[A,A]");
    auto *hmember = add_compute("hmember", "Membership in A_4^0 + F^5A + 2A (alphabet X,Y, p = 2)");

    auto *verify = app.add_subcommand("verify", "Run verification checks");
    std::vector<std::string> ids;
    bool all = false;
    verify->add_option("checks", ids, "Check ids");
    verify->add_flag("--all", all, "Run every check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (ghost->parsed()) {
            return cmd_ghost(g, inputs);
        }
        if (omega->parsed()) {
            return cmd_omega(g, inputs);
        }
        if (rmap->parsed()) {
            return cmd_rmap(g, inputs);
        }
        if (abel->parsed()) {
            return cmd_abelianize(g, inputs);
        }
        if (hmember->parsed()) {
            return cmd_hmember(g, inputs);
        }
        if (verify->parsed()) {
            return cmd_verify(g, ids, all);
        }
    } catch (const usage_error &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
