#include "lsl/cli.hpp"

#include "lsl/expr.hpp"
#include "lsl/families.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace lsl {

namespace {

Domain parse_domain(const std::string& text) {
    // "u:a..b,v:c..d"
    auto parse_range = [&](const std::string& part, char axis, double& lo, double& hi) {
        const std::string prefix = std::string(1, axis) + ":";
        if (part.rfind(prefix, 0) != 0)
            throw ValidationError("--domain: expected '" + prefix + "lo..hi', got '" + part + "'");
        const std::string body = part.substr(2);
        const auto dots = body.find("..");
        if (dots == std::string::npos)
            throw ValidationError("--domain: missing '..' in '" + part + "'");
        try {
            std::size_t used = 0;
            lo = std::stod(body.substr(0, dots), &used);
            if (used != dots) throw std::invalid_argument("");
            const std::string hi_str = body.substr(dots + 2);
            hi = std::stod(hi_str, &used);
            if (used != hi_str.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ValidationError("--domain: malformed number in '" + part + "'");
        }
        if (!(lo < hi)) throw ValidationError("--domain: empty range in '" + part + "'");
    };
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ValidationError("--domain: expected 'u:a..b,v:c..d', got '" + text + "'");
    Domain d{};
    parse_range(text.substr(0, comma), 'u', d.u0, d.u1);
    parse_range(text.substr(comma + 1), 'v', d.v0, d.v1);
    return d;
}

GridSpec parse_grid(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos)
        throw ValidationError("--grid: expected 'NUxNV', got '" + text + "'");
    GridSpec g;
    try {
        std::size_t used = 0;
        g.nu = std::stoi(text.substr(0, x), &used);
        if (used != x) throw std::invalid_argument("");
        const std::string rest = text.substr(x + 1);
        g.nv = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ValidationError("--grid: malformed number in '" + text + "'");
    }
    if (g.nu < 2 || g.nv < 2) throw ValidationError("--grid: resolution must be at least 2x2");
    return g;
}

struct FamilyDefaults {
    const char* blurb;
    Domain domain;
};

const std::map<std::string, FamilyDefaults>& family_table() {
    static const std::map<std::string, FamilyDefaults> table = {
        {"example-1.1",
         {"(cos u (1+v), sin u (1+v), sinh u, cosh u); one bi-normal field", {-1, 1, -1, 1}}},
        {"example-1.2",
         {"(e^{2u} cos v, e^{2u} sin v, e^{-u} cosh v, e^{-u} sinh v); two bi-normal fields",
          {1.1, 2.0, 0.1, 6.2}}},
        {"ruled",
         {"alpha(u) + v W(u) with rotating director; --phi0/--phi1/--xi0/--xi1", {0, 1, -1, 1}}},
        {"rh",
         {"(f, g, rho sinh v, rho cosh v) with unit-speed profile; --f/--g/--rho",
          {0.2, 1.2, -1, 1}}},
        {"rs",
         {"(f cos av, f sin av, g cosh bv, g sinh bv); --f/--g/--alpha/--beta",
          {1.1, 2.0, 0.1, 6.2}}},
        {"rs-4b", {"rs with f = u, g = 1; one bi-normal field", {1.1, 3.0, 0.1, 6.2}}},
        {"rs-4c", {"rs with f = u^2, g = u; no bi-normal field", {1.1, 3.0, 0.1, 6.2}}},
        {"rs-4d", {"rs with f = e^{2u}, g = e^{-u}; two bi-normal fields", {1.1, 2.0, 0.1, 6.2}}},
    };
    return table;
}

// Default rh profile: unit speed with f' = cosh u cos u, g' = cosh u sin u,
// rho' = sinh u, integrated in closed form.
constexpr const char* kRhDefaultF = "(sinh(u)*cos(u)+cosh(u)*sin(u))/2";
constexpr const char* kRhDefaultG = "(sinh(u)*sin(u)-cosh(u)*cos(u))/2+2";
constexpr const char* kRhDefaultRho = "cosh(u)+0.5";

}  // namespace

const std::vector<std::string>& builtin_families() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, v] : family_table()) n.push_back(k);
        return n;
    }();
    return names;
}

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"classify bi-normal fields over a grid on a spacelike surface", "analyze"};
    app.add_option("--family", cfg.family, "surface family (see the `families` subcommand)")
        ->required();
    std::string domain_str, grid_str, format_str;
    app.add_option("--f", cfg.f_expr, "profile f(u) expression (rh, rs)");
    app.add_option("--g", cfg.g_expr, "profile g(u) expression (rh, rs)");
    app.add_option("--rho", cfg.rho_expr, "profile rho(u) expression (rh)");
    app.add_option("--alpha", cfg.alpha, "rotation rate in the 1-2 plane (rs)")
        ->capture_default_str();
    app.add_option("--beta", cfg.beta, "boost rate in the 3-4 plane (rs)")->capture_default_str();
    app.add_option("--phi0", cfg.phi0, "ruled: director angle offset")->capture_default_str();
    app.add_option("--phi1", cfg.phi1, "ruled: director angle rate (nonzero)")
        ->capture_default_str();
    app.add_option("--xi0", cfg.xi0, "ruled: base-curve boost offset")->capture_default_str();
    app.add_option("--xi1", cfg.xi1, "ruled: base-curve boost rate")->capture_default_str();
    app.add_option("--domain", domain_str, "parameter rectangle 'u:a..b,v:c..d'");
    app.add_option("--grid", grid_str, "grid resolution 'NUxNV' (default 32x32)");
    app.add_option("--tol-root", cfg.tol.root, "relative threshold for the 'all' verdict")
        ->capture_default_str();
    app.add_option("--tol-disc", cfg.tol.disc, "relative discriminant band for double roots")
        ->capture_default_str();
    app.add_option("--format", format_str, "output format: json | csv | text (default text)");
    app.add_option("--out", cfg.out_path, "output path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw ValidationError(std::string("analyze: ") + e.what());
    }

    if (!family_table().count(cfg.family)) {
        std::string names;
        for (const auto& n : builtin_families()) names += (names.empty() ? "" : ", ") + n;
        throw ValidationError("--family: unknown family '" + cfg.family + "' (valid: " + names +
                              ")");
    }
    if (!domain_str.empty()) cfg.domain = parse_domain(domain_str);
    if (!grid_str.empty()) cfg.grid = parse_grid(grid_str);
    if (!format_str.empty()) {
        if (format_str == "json")
            cfg.format = OutputFormat::Json;
        else if (format_str == "csv")
            cfg.format = OutputFormat::Csv;
        else if (format_str == "text")
            cfg.format = OutputFormat::Text;
        else
            throw ValidationError("--format: expected json, csv or text, got '" + format_str +
                                  "'");
    }
    if (!(cfg.tol.root > 0)) throw ValidationError("--tol-root: must be positive");
    if (!(cfg.tol.disc > 0)) throw ValidationError("--tol-disc: must be positive");

    const bool is_rs_like = cfg.family == "rs";
    const bool is_rh = cfg.family == "rh";
    if (!is_rs_like && !is_rh && (!cfg.f_expr.empty() || !cfg.g_expr.empty()))
        throw ValidationError("--f/--g: only valid for families rh and rs");
    if (!is_rh && !cfg.rho_expr.empty()) throw ValidationError("--rho: only valid for family rh");
    if (is_rs_like && (cfg.f_expr.empty() || cfg.g_expr.empty()))
        throw ValidationError("family rs requires --f and --g");
    if (is_rh && (cfg.f_expr.empty() != cfg.g_expr.empty() ||
                  cfg.f_expr.empty() != cfg.rho_expr.empty()))
        throw ValidationError("family rh requires --f, --g and --rho together (or none)");
    if (!(cfg.alpha > 0) || !(cfg.beta > 0))
        throw ValidationError("--alpha/--beta: must be positive");
    return cfg;
}

SurfaceChart build_chart(const RunConfig& cfg) {
    const Domain dom = cfg.domain.value_or(family_table().at(cfg.family).domain);
    if (cfg.family == "example-1.1") return make_example_1_1(dom);
    if (cfg.family == "example-1.2") return make_example_1_2(dom);
    if (cfg.family == "ruled")
        return make_ruled_helical({cfg.phi0, cfg.phi1, cfg.xi0, cfg.xi1}, dom);
    if (cfg.family == "rh") {
        const std::string f = cfg.f_expr.empty() ? kRhDefaultF : cfg.f_expr;
        const std::string g = cfg.g_expr.empty() ? kRhDefaultG : cfg.g_expr;
        const std::string rho = cfg.rho_expr.empty() ? kRhDefaultRho : cfg.rho_expr;
        return make_rh(expr::compile(f), expr::compile(g), expr::compile(rho), dom);
    }
    if (cfg.family == "rs")
        return make_rs(expr::compile(cfg.f_expr), expr::compile(cfg.g_expr), cfg.alpha, cfg.beta,
                       dom);
    if (cfg.family == "rs-4b")
        return make_rs(expr::compile("u"), expr::compile("1"), 1.0, 1.0, dom, "rs-4b");
    if (cfg.family == "rs-4c")
        return make_rs(expr::compile("u^2"), expr::compile("u"), 1.0, 1.0, dom, "rs-4c");
    if (cfg.family == "rs-4d")
        return make_rs(expr::compile("exp(2*u)"), expr::compile("exp(-u)"), 1.0, 1.0, dom,
                       "rs-4d");
    throw ValidationError("build_chart: unknown family '" + cfg.family + "'");
}

RegionReport run(const RunConfig& cfg) {
    const SurfaceChart chart = build_chart(cfg);
    RegionReport rep = classify_region(chart, cfg.grid, cfg.tol);
    if (cfg.family == "rh" && cfg.f_expr.empty()) {
        rep.params["f"] = kRhDefaultF;
        rep.params["g"] = kRhDefaultG;
        rep.params["rho"] = kRhDefaultRho;
    }
    if (!cfg.f_expr.empty()) rep.params["f"] = cfg.f_expr;
    if (!cfg.g_expr.empty()) rep.params["g"] = cfg.g_expr;
    if (!cfg.rho_expr.empty()) rep.params["rho"] = cfg.rho_expr;
    if (cfg.family == "rs") {
        rep.params["alpha"] = std::to_string(cfg.alpha);
        rep.params["beta"] = std::to_string(cfg.beta);
    }
    if (cfg.family == "ruled") {
        rep.params["phi0"] = std::to_string(cfg.phi0);
        rep.params["phi1"] = std::to_string(cfg.phi1);
        rep.params["xi0"] = std::to_string(cfg.xi0);
        rep.params["xi1"] = std::to_string(cfg.xi1);
    }
    return rep;
}

void emit(const RegionReport& report, OutputFormat format, std::ostream& os) {
    switch (format) {
        case OutputFormat::Json: emit_json(report, os); break;
        case OutputFormat::Csv: emit_csv(report, os); break;
        case OutputFormat::Text: emit_text(report, os); break;
    }
    if (!os) throw IoError("emit: stream failure while writing report");
}

void emit_to_path(const RegionReport& report, const RunConfig& cfg, std::ostream& out) {
    if (cfg.out_path.empty()) {
        emit(report, cfg.format, out);
        return;
    }
    std::ofstream file(cfg.out_path);
    if (!file) throw IoError("emit: cannot open '" + cfg.out_path + "' for writing");
    emit(report, cfg.format, file);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const std::string usage =
        "usage: lslsurf analyze --family <name> [options]   (see analyze --help)\n"
        "       lslsurf families\n";
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        out << usage;
        return args.empty() ? 2 : 0;
    }
    try {
        if (args[0] == "families") {
            for (const auto& [name, info] : family_table())
                out << name << "\t" << info.blurb << "\n";
            return 0;
        }
        if (args[0] == "analyze") {
            std::vector<std::string> rest(args.begin() + 1, args.end());
            if (std::find(rest.begin(), rest.end(), "--help") != rest.end() ||
                std::find(rest.begin(), rest.end(), "-h") != rest.end()) {
                out << "analyze: classify bi-normal fields over a grid\n"
                       "  --family <name>      required; see `lslsurf families`\n"
                       "  --f/--g/--rho <expr> profile expressions in u (rh, rs)\n"
                       "  --alpha/--beta <x>   rotation/boost rates (rs; default 1)\n"
                       "  --phi0/--phi1/--xi0/--xi1 <x>  ruled parameters\n"
                       "  --domain u:a..b,v:c..d   parameter rectangle\n"
                       "  --grid NUxNV         resolution (default 32x32)\n"
                       "  --tol-root <x>       'all' threshold (default 1e-10)\n"
                       "  --tol-disc <x>       double-root band (default 1e-9)\n"
                       "  --format json|csv|text   (default text)\n"
                       "  --out <path>         output file (default stdout)\n";
                return 0;
            }
            const RunConfig cfg = parse_config(rest);
            const RegionReport rep = run(cfg);
            emit_to_path(rep, cfg, out);
            return rep.ok() ? 0 : 1;
        }
        err << "unknown subcommand '" << args[0] << "'\n" << usage;
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lsl
