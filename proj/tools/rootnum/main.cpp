// rootnum: command-line front end for the rootnum library.

#include "json_io.hpp"

#include "rootnum/errors.hpp"
#include "rootnum/polytext.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#ifndef ROOTNUM_VERSION
#define ROOTNUM_VERSION "unknown"
#endif

namespace rootnum::cli {
namespace {

/// Usage and input errors: reported with exit status 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    // shared
    std::string config, out, format = "json", oracle;
    unsigned jobs = 1;
    std::uint64_t trial_bound = FactorBudget{}.trial_bound;

    // surface input
    std::string surface, c4, c6, j, d;

    // domains
    std::int64_t N = 100;
    std::string domain = "rational", sector = "all", lattice, function = "w";
    std::int64_t a = 0, m = 1, shift = 1;
    std::string t0 = "1";
    std::string x, y, t;
    std::string poly;
    bool no_coprime = false;
    std::string value_bound = "0", x_range, y_range;
    std::uint64_t B = 1000;

    // newform-trace
    std::int64_t level = 11, level_to = 0;
    int weight = 2;

    // build-family
    std::string target;
    std::vector<unsigned> k;
    std::string R1 = "1", R2 = "1", R3 = "1", R4 = "1";

    // quartic-map
    std::string f, r, s;
    std::vector<std::string> points;
    std::int64_t search = 0;
    unsigned height_iterations = 4;
};

Rational parse_rational(const std::string& text) {
    Rational q;
    try {
        q = Rational(text);
    } catch (const std::invalid_argument&) {
        throw ConfigError("not a rational number: '" + text + "'");
    }
    if (q.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

Integer parse_integer(const std::string& text) {
    try {
        return Integer(text);
    } catch (const std::invalid_argument&) {
        throw ConfigError("not an integer: '" + text + "'");
    }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("bad integer list '" + text + "'");
        }
    }
    return out;
}

LatticeCoset parse_lattice(const std::string& text) {
    if (text.empty()) return {};
    const auto v = parse_int_list(text);
    if (v.size() != 4 && v.size() != 6) throw ConfigError("--lattice takes u1,u2,v1,v2[,o1,o2]");
    std::array<std::int64_t, 2> off = {0, 0};
    if (v.size() == 6) off = {v[4], v[5]};
    return LatticeCoset({v[0], v[1]}, {v[2], v[3]}, off);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, std::int64_t N) {
    if (text.empty()) return {-N, N};
    const auto v = parse_int_list(text);
    if (v.size() != 2 || v[0] > v[1]) throw ConfigError("ranges are lo,hi with lo <= hi");
    return {v[0], v[1]};
}

EllipticSurface read_surface(const Options& o) {
    if (!o.surface.empty()) return load_surface(o.surface);
    if (!o.c4.empty() || !o.c6.empty()) {
        if (o.c4.empty() || o.c6.empty()) throw ConfigError("--c4 and --c6 go together");
        EllipticSurface s{parse_ratfunc(o.c4), parse_ratfunc(o.c6)};
        validate(s);
        return s;
    }
    if (!o.j.empty() && !o.d.empty()) return from_j_d(parse_ratfunc(o.j), parse_ratfunc(o.d));
    throw ConfigError("a surface is required: --surface FILE, --c4/--c6 or --j/--d");
}

std::optional<OracleTable> read_oracle(const Options& o) {
    if (o.oracle.empty()) return std::nullopt;
    return OracleTable::load(o.oracle);
}

FactorBudget budget_of(const Options& o) {
    FactorBudget b;
    b.trial_bound = o.trial_bound;
    return b;
}

void add_surface_options(CLI::App* sub, Options& o) {
    sub->add_option("--surface", o.surface, "JSON file with c4, c6 (or j, d)");
    sub->add_option("--c4", o.c4, "c4 as a rational function of t");
    sub->add_option("--c6", o.c6, "c6 as a rational function of t");
    sub->add_option("--j", o.j, "j-invariant (with --d)");
    sub->add_option("--d", o.d, "twist (with --j)");
}

void add_domain_options(CLI::App* sub, Options& o) {
    sub->add_option("--N", o.N, "box or progression size")->capture_default_str();
    sub->add_option("--domain", o.domain, "rational (coprime pairs) or integer (progression)")
        ->check(CLI::IsMember({"rational", "integer"}))
        ->capture_default_str();
    sub->add_option("--sector,--quadrant", o.sector, "all, ++, +-, -+, --, off-axes")->capture_default_str();
    sub->add_option("--lattice", o.lattice, "u1,u2,v1,v2[,o1,o2]");
    sub->add_option("--a", o.a, "progression residue")->capture_default_str();
    sub->add_option("--m", o.m, "progression modulus")->capture_default_str();
    sub->add_option("--function", o.function, "w (root number), lambda or mu")
        ->check(CLI::IsMember({"w", "lambda", "mu"}))
        ->capture_default_str();
}

IntSampler int_sampler(const Options& o, const OracleTable* table, std::optional<EllipticSurface>& keep) {
    if (o.function == "lambda") return liouville_sampler();
    if (o.function == "mu") return moebius_sampler();
    keep = read_surface(o);
    return root_number_sampler_int(*keep, table, budget_of(o));
}

PairSampler pair_sampler(const Options& o, const OracleTable* table, std::optional<EllipticSurface>& keep) {
    if (o.function != "w") throw ConfigError("rational domains average the root number only (--function w)");
    keep = read_surface(o);
    return root_number_sampler(*keep, table, budget_of(o));
}

// ------------------------------------------------------------ commands

json cmd_analyze(const Options& o) { return to_json(analyze(read_surface(o))); }

json cmd_fiber(const Options& o) {
    const EllipticSurface s = read_surface(o);
    const auto table = read_oracle(o);
    Integer x = 1, y = 0;
    if (!o.t.empty()) {
        const Rational t = parse_rational(o.t);
        x = t.get_den();
        y = t.get_num();
    } else {
        if (o.x.empty() || o.y.empty()) throw ConfigError("fiber-w needs --t or both --x and --y");
        x = parse_integer(o.x);
        y = parse_integer(o.y);
    }
    const auto curve = specialize(s, x, y);
    if (!curve) return {{"x", to_json(x)}, {"y", to_json(y)}, {"singular", true}, {"W", "+1"}};
    try {
        json r = to_json(global_root_number(*curve, table ? &*table : nullptr, budget_of(o)));
        r["singular"] = false;
        return r;
    } catch (const FactorizationIncomplete& e) {
        return {{"x", to_json(x)}, {"y", to_json(y)}, {"singular", false}, {"W", "incomplete"}, {"reason", e.what()}};
    }
}

json cmd_average(const Options& o) {
    const auto table = read_oracle(o);
    std::optional<EllipticSurface> keep;
    if (o.domain == "integer")
        return to_json(av_progression(int_sampler(o, table ? &*table : nullptr, keep), o.a, o.m, o.N, o.jobs));
    return to_json(av_rational(pair_sampler(o, table ? &*table : nullptr, keep), Sector::parse(o.sector),
                               parse_lattice(o.lattice), o.N, o.jobs));
}

json cmd_autocov(const Options& o) {
    const auto table = read_oracle(o);
    std::optional<EllipticSurface> keep;
    if (o.domain == "integer")
        return to_json(
            autocov_progression(int_sampler(o, table ? &*table : nullptr, keep), o.a, o.m, o.shift, o.N, o.jobs));
    return to_json(autocorr_rational(pair_sampler(o, table ? &*table : nullptr, keep), Sector::parse(o.sector),
                                     parse_lattice(o.lattice), parse_rational(o.t0), o.N, o.jobs));
}

json cmd_sweep(const Options& o) {
    if (o.poly.empty()) throw ConfigError("--poly is required");
    const BiPoly P = parse_bipoly(o.poly);
    const ArithFunction fn = o.function == "mu" ? ArithFunction::Moebius : ArithFunction::Liouville;
    if (!P.depends_on_y() && o.x_range.empty() && o.y_range.empty()) {
        if (fn != ArithFunction::Liouville) throw ConfigError("univariate sweeps use --function lambda");
        return to_json(sweep_lambda_poly(P.in_x(), o.a, o.m, o.N, o.jobs, budget_of(o)));
    }
    BoxDomain dom;
    std::tie(dom.x_lo, dom.x_hi) = parse_range(o.x_range, o.N);
    std::tie(dom.y_lo, dom.y_hi) = parse_range(o.y_range, o.N);
    dom.sector = Sector::parse(o.sector);
    dom.lattice = parse_lattice(o.lattice);
    dom.coprime = !o.no_coprime;
    dom.value_bound = parse_integer(o.value_bound);
    return to_json(sweep_poly(P, fn, dom, o.jobs, budget_of(o)));
}

json cmd_census(const Options& o) {
    if (o.poly.empty()) throw ConfigError("--poly is required");
    const BiPoly P = parse_bipoly(o.poly);
    if (!P.depends_on_y()) return to_json(census(P.in_x(), o.N, o.B, o.jobs, budget_of(o)));
    if (!P.is_homogeneous()) throw ConfigError("bivariate censuses need a binary form");
    return to_json(census(P.to_form(), o.N, o.B, o.jobs, budget_of(o)));
}

json cmd_trace(const Options& o) {
    if (o.level_to == 0) return to_json(trace_report(o.level, o.weight));
    if (o.level_to < o.level) throw ConfigError("--to must not be below --N");
    json rows = json::array();
    for (std::int64_t n = o.level; n <= o.level_to; ++n) rows.push_back(to_json(trace_report(n, o.weight)));
    return rows;
}

json cmd_build(const Options& o) {
    json out;
    EllipticSurface s;
    if (!o.target.empty()) {
        const HomPoly P = parse_form(o.target);
        const bool custom = !o.k.empty() || o.R1 != "1" || o.R2 != "1" || o.R3 != "1" || o.R4 != "1";
        FamilyRecipe r;
        if (custom) {
            auto poly_of = [](const std::string& text) {
                const RatFunc f = parse_ratfunc(text);
                if (!f.is_polynomial() || f.scalar().get_den() != 1)
                    throw ConfigError("R1..R4 must be integer polynomials in t: '" + text + "'");
                return f.as_poly().first;
            };
            std::vector<unsigned> k = o.k;
            if (k.empty()) {
                for (const auto& [g, e] : factor_hom(P).factors)
                    if (!(g == deg_place())) k.push_back(1);
            }
            r = make_recipe(P, k, poly_of(o.R1), poly_of(o.R2), poly_of(o.R3), poly_of(o.R4));
        } else {
            r = target_m(P);
        }
        out["recipe"] = to_json(r);
        out["predicted_deg_irr_Bprime"] = predict_deg_irr_bprime(r);
        s = r.surface();
    } else {
        if (o.j.empty() || o.d.empty()) throw ConfigError("build-family needs --target or --j and --d");
        s = from_j_d(parse_ratfunc(o.j), parse_ratfunc(o.d));
    }
    const SurfaceAnalysis a = analyze(s);
    out["surface"] = to_json(s);
    out["M"] = to_string(a.M);
    out["B"] = to_string(a.B);
    out["Bprime"] = to_string(a.Bprime);
    out["deg_irr_Bprime"] = deg_irr(a.Bprime);
    if (!o.target.empty()) out["target_achieved"] = equal_up_to_unit(a.M, parse_form(o.target));
    return out;
}

json cmd_quartic(const Options& o) {
    if (o.f.empty() || o.d.empty() || o.r.empty() || o.s.empty()) throw ConfigError("quartic-map needs --f, --d, --r and --s");
    const RatFunc fr = parse_ratfunc(o.f, 'x');
    if (!fr.is_polynomial() || fr.scalar().get_den() != 1) throw ConfigError("--f must be an integer polynomial in x");
    const IntPoly f = fr.as_poly().first;
    const QuarticMap map = quartic_to_weierstrass(f, parse_integer(o.d), parse_rational(o.r), parse_rational(o.s));
    const WeierstrassTwist& E = map.target();

    auto image = [&](const Rational& x, const Rational& y) {
        const CurvePoint P = map(x, y);
        json h;
        try {
            h = canonical_height(E, P, o.height_iterations);
        } catch (const CoordinateBlowup&) {
            h = nullptr;
        }
        return json{{"source", {{"x", to_json(x)}, {"y", to_json(y)}}},
                    {"image", to_json(P)},
                    {"on_curve", E.contains(P)},
                    {"canonical_height", h}};
    };

    json images = json::array();
    for (const auto& p : o.points) {
        const auto comma = p.find(',');
        if (comma == std::string::npos) throw ConfigError("--point takes x,y");
        images.push_back(image(parse_rational(p.substr(0, comma)), parse_rational(p.substr(comma + 1))));
    }
    if (o.search > 0) {
        std::vector<Integer> c(5, Integer(0));
        for (int i = 0; i <= f.degree(); ++i) c[i] = f[i];
        for (const auto& sol : twist_point_search(HomPoly(4, c), parse_integer(o.d), o.search, o.jobs)) {
            if (sol.z == 0) continue;
            Rational x(sol.x, sol.z), y(sol.y, sol.z * sol.z);
            x.canonicalize();
            y.canonicalize();
            images.push_back(image(x, y));
        }
    }
    const auto& A = map.intermediate();
    return {{"curve", to_json(E)},
            {"intermediate", {{"A1", to_json(A.A1)}, {"A2", to_json(A.A2)}, {"A3", to_json(A.A3)},
                              {"A4", to_json(A.A4)}, {"A6", to_json(A.A6)}}},
            {"points", images}};
}

// ------------------------------------------------------------ output

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else if (j.is_null()) {
        out.emplace_back(prefix, "");
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string render_csv(const json& report) {
    std::ostringstream os;
    os << "# rootnum " << report["version"].get<std::string>() << "\n";
    os << "# config " << report["config"].dump() << "\n";
    const json& result = report["result"];
    const json rows = result.is_array() ? result : json::array({result});
    bool header = false;
    for (const auto& row : rows) {
        std::vector<std::pair<std::string, std::string>> cells;
        flatten(row, "", cells);
        if (!header) {
            for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_quote(cells[i].first);
            os << "\n";
            header = true;
        }
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_quote(cells[i].second);
        os << "\n";
    }
    return os.str();
}

json echo_config(const CLI::App* sub) {
    json cfg = json::object();
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_lnames().empty()) continue;
        const std::string& name = opt->get_lnames().front();
        if (name == "help" || name == "out" || name == "config") continue;
        if (opt->count() > 0) {
            const auto& res = opt->results();
            if (opt->get_type_size() == 0)
                cfg[name] = true;
            else if (opt->get_items_expected_max() <= 1)
                cfg[name] = res.back();  // a repeated scalar flag resolves to the last value
            else
                cfg[name] = res;
        } else if (!opt->get_default_str().empty()) {
            cfg[name] = opt->get_default_str();
        }
    }
    return cfg;
}

/// Arguments contributed by a --config file, placed before the command line
/// so explicit flags win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    json cfg;
    try {
        in >> cfg;
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    if (!cfg.is_object()) throw ConfigError(path + ": config must be a JSON object");

    std::vector<std::string> extra;
    std::string command;
    for (const auto& [key, v] : cfg.items()) {
        if (key == "command") {
            command = v.get<std::string>();
            continue;
        }
        if (key == "config") continue;
        const std::string flag = "--" + key;
        if (v.is_boolean()) {
            if (v.get<bool>()) extra.push_back(flag);
        } else if (v.is_array()) {
            for (const auto& item : v) {
                extra.push_back(flag);
                extra.push_back(item.is_string() ? item.get<std::string>() : item.dump());
            }
        } else {
            extra.push_back(flag);
            extra.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
    }
    const bool has_command = args.size() > 1 && args[1].rfind("-", 0) != 0;
    std::vector<std::string> out{args[0]};
    if (has_command) {
        out.push_back(args[1]);
    } else {
        if (command.empty()) throw ConfigError("no command given on the command line or in " + path);
        out.push_back(command);
    }
    out.insert(out.end(), extra.begin(), extra.end());
    out.insert(out.end(), args.begin() + (has_command ? 2 : 1), args.end());
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Root numbers, averages and square-free sieves for elliptic surfaces over Q(t)"};
    app.set_version_flag("--version", ROOTNUM_VERSION);
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    Options o;
    std::vector<std::pair<CLI::App*, std::function<json(const Options&)>>> commands;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config, "JSON file whose keys mirror the flags");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
        sub->add_option("--out", o.out, "write the report to a file instead of stdout");
        sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
        sub->add_option("--trial-bound", o.trial_bound, "trial division bound for hard cofactors")->capture_default_str();
    };

    auto* analyze_cmd = app.add_subcommand("analyze-surface", "places, reduction types and M, B, B'");
    common(analyze_cmd);
    add_surface_options(analyze_cmd, o);
    commands.emplace_back(analyze_cmd, cmd_analyze);

    auto* fiber_cmd = app.add_subcommand("fiber-w", "root number of one fiber");
    common(fiber_cmd);
    add_surface_options(fiber_cmd, o);
    fiber_cmd->add_option("--x", o.x, "t = y/x, with gcd(x, y) = 1");
    fiber_cmd->add_option("--y", o.y);
    fiber_cmd->add_option("--t", o.t, "t as a rational number");
    fiber_cmd->add_option("--oracle", o.oracle, "local root numbers at 2 and 3");
    commands.emplace_back(fiber_cmd, cmd_fiber);

    auto* avg_cmd = app.add_subcommand("average", "average of W or of lambda/mu");
    common(avg_cmd);
    add_surface_options(avg_cmd, o);
    add_domain_options(avg_cmd, o);
    avg_cmd->add_option("--oracle", o.oracle, "local root numbers at 2 and 3");
    commands.emplace_back(avg_cmd, cmd_average);

    auto* cov_cmd = app.add_subcommand("autocov", "autocorrelation of W or of lambda/mu");
    common(cov_cmd);
    add_surface_options(cov_cmd, o);
    add_domain_options(cov_cmd, o);
    cov_cmd->add_option("--k", o.shift, "shift for integer domains")->capture_default_str();
    cov_cmd->add_option("--t0", o.t0, "rational shift for rational domains")->capture_default_str();
    cov_cmd->add_option("--oracle", o.oracle, "local root numbers at 2 and 3");
    commands.emplace_back(cov_cmd, cmd_autocov);

    auto* sweep_cmd = app.add_subcommand("sweep-lambda", "average of lambda or mu of a polynomial");
    common(sweep_cmd);
    sweep_cmd->add_option("--poly", o.poly, "polynomial in x (progression) or in x, y (box)");
    sweep_cmd->add_option("--N", o.N, "box half-width or progression length")->capture_default_str();
    sweep_cmd->add_option("--sector", o.sector)->capture_default_str();
    sweep_cmd->add_option("--lattice", o.lattice, "u1,u2,v1,v2[,o1,o2]");
    sweep_cmd->add_option("--a", o.a, "progression residue")->capture_default_str();
    sweep_cmd->add_option("--m", o.m, "progression modulus")->capture_default_str();
    sweep_cmd->add_option("--function", o.function, "lambda or mu")
        ->check(CLI::IsMember({"lambda", "mu"}))
        ->default_str("lambda");
    sweep_cmd->add_flag("--no-coprime", o.no_coprime, "keep pairs with gcd(x, y) > 1");
    sweep_cmd->add_option("--value-bound", o.value_bound, "keep |P(x, y)| <= bound when positive")->capture_default_str();
    sweep_cmd->add_option("--x-range", o.x_range, "lo,hi (default -N,N)");
    sweep_cmd->add_option("--y-range", o.y_range, "lo,hi (default -N,N)");
    commands.emplace_back(sweep_cmd, [](const Options& opt) {
        Options copy = opt;
        if (copy.function == "w") copy.function = "lambda";
        return cmd_sweep(copy);
    });

    auto* census_cmd = app.add_subcommand("sieve-census", "square-free values against the Euler product");
    common(census_cmd);
    census_cmd->add_option("--poly", o.poly, "polynomial in x, or a binary form in x, y");
    census_cmd->add_option("--N", o.N)->capture_default_str();
    census_cmd->add_option("--B", o.B, "Euler product truncation")->capture_default_str();
    commands.emplace_back(census_cmd, cmd_census);

    auto* trace_cmd = app.add_subcommand("newform-trace", "Fricke trace and the newform root-number sum");
    common(trace_cmd);
    trace_cmd->add_option("--N", o.level, "level")->capture_default_str();
    trace_cmd->add_option("--k", o.weight, "even weight")->capture_default_str();
    trace_cmd->add_option("--to", o.level_to, "last level of a range");
    commands.emplace_back(trace_cmd, cmd_trace);

    auto* build_cmd = app.add_subcommand("build-family", "family from (j, d) or from a target M");
    common(build_cmd);
    build_cmd->add_option("--j", o.j);
    build_cmd->add_option("--d", o.d);
    build_cmd->add_option("--target", o.target, "square-free binary form");
    build_cmd->add_option("--k", o.k, "exponents k_i")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    build_cmd->add_option("--R1", o.R1)->capture_default_str();
    build_cmd->add_option("--R2", o.R2)->capture_default_str();
    build_cmd->add_option("--R3", o.R3)->capture_default_str();
    build_cmd->add_option("--R4", o.R4)->capture_default_str();
    commands.emplace_back(build_cmd, cmd_build);

    auto* quartic_cmd = app.add_subcommand("quartic-map", "map d y^2 = f(x) to its Weierstrass model");
    common(quartic_cmd);
    quartic_cmd->add_option("--f", o.f, "quartic in x");
    quartic_cmd->add_option("--d", o.d, "square-free twist");
    quartic_cmd->add_option("--r", o.r, "base point x");
    quartic_cmd->add_option("--s", o.s, "base point y");
    quartic_cmd->add_option("--point", o.points, "x,y on the quartic")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    quartic_cmd->add_option("--search", o.search, "also map the points with |x|, |z| <= N");
    quartic_cmd->add_option("--height-iterations", o.height_iterations)->capture_default_str();
    commands.emplace_back(quartic_cmd, cmd_quartic);

    std::vector<std::string> args(argv, argv + argc);
    try {
        args = expand_config(std::move(args));
    } catch (const ConfigError& e) {
        std::cerr << "rootnum: " << e.what() << "\n";
        return 2;
    }
    std::reverse(args.begin() + 1, args.end());
    args.erase(args.begin());
    try {
        app.parse(std::move(args));
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    for (const auto& [sub, fn] : commands) {
        if (!sub->parsed()) continue;
        json report;
        try {
            report = {{"command", sub->get_name()},
                      {"version", ROOTNUM_VERSION},
                      {"config", echo_config(sub)},
                      {"result", fn(o)}};
        } catch (const ConfigError& e) {
            std::cerr << "rootnum " << sub->get_name() << ": " << e.what() << "\n";
            return 2;
        } catch (const Error& e) {
            std::cerr << "rootnum " << sub->get_name() << ": " << e.what() << "\n";
            return 2;
        } catch (const std::invalid_argument& e) {
            std::cerr << "rootnum " << sub->get_name() << ": " << e.what() << "\n";
            return 2;
        }
        const std::string text = o.format == "csv" ? render_csv(report) : report.dump(2) + "\n";
        if (o.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(o.out);
            if (!f) {
                std::cerr << "rootnum: cannot write " << o.out << "\n";
                return 2;
            }
            f << text;
        }
        return 0;
    }
    return 2;
}

}  // namespace
}  // namespace rootnum::cli

int main(int argc, char** argv) {
    try {
        return rootnum::cli::run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "rootnum: " << e.what() << "\n";
        return 1;
    }
}
