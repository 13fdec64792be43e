#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kplane/admissibility.hpp"
#include "kplane/fields.hpp"
#include "kplane/grassmannian.hpp"
#include "kplane/grid.hpp"
#include "kplane/littlewood_paley.hpp"
#include "kplane/norms.hpp"
#include "kplane/transform.hpp"
#include "kplane/verify.hpp"

namespace {

using namespace kplane;
using nlohmann::ordered_json;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("KPLANE_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

QuadraturePtr parse_quad(const std::string& text, int k, int d, std::uint64_t seed) {
    std::stringstream ss(text);
    std::string kind, a, b;
    std::getline(ss, kind, ':');
    std::getline(ss, a, ':');
    if (kind == "circle") {
        if (d != 2 || k != 1)
            throw std::invalid_argument("circle rule applies to d=2, k=1 only");
        return circle_quadrature(std::stoi(a));
    }
    if (kind == "mc") {
        if (std::getline(ss, b, ':')) seed = std::strtoull(b.c_str(), nullptr, 10);
        return haar_sample(k, d, std::stoi(a), seed);
    }
    throw std::invalid_argument("quadrature must be circle:M or mc:count[:seed]");
}

GridSpec default_grid(int d) {
    if (d == 2) return GridSpec(2, 64, 8.0);
    if (d == 3) return GridSpec(3, 32, 6.0);
    if (d == 4) return GridSpec(4, 16, 6.0);
    return GridSpec(d, 16, 6.0);
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        cfg[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return cfg;
}

int cmd_transform(const std::string& field, int d, int k,
                  const std::string& quad_text, std::uint64_t seed,
                  const std::string& out_path) {
    GridSpec ambient = default_grid(d);
    QuadraturePtr quad = parse_quad(quad_text, k, d, seed);
    AnalyticField f = catalog_field(field, d, ambient.half_width);
    GridSpec fiber(d - k, ambient.n, ambient.half_width);
    FiberField u = transform_slice(sample(f.eval, ambient), quad, fiber);

    ordered_json j;
    j["field"] = field;
    j["d"] = d;
    j["k"] = k;
    j["quad"] = ordered_json::parse(quadrature_descriptor(*quad));
    j["fiber"] = {{"n", fiber.n}, {"L", fiber.half_width}};
    auto& frames = j["frames"] = ordered_json::array();
    for (std::size_t q = 0; q < u.frames.size(); ++q) {
        ordered_json fr;
        fr["weight"] = u.quad->weights[q];
        auto& vals = fr["values"] = ordered_json::array();
        for (const Complex& v : u.frames[q]) vals.push_back({v.real(), v.imag()});
        frames.push_back(std::move(fr));
    }
    if (out_path.empty()) {
        std::cout << j.dump() << "\n";
    } else {
        std::ofstream(out_path) << j.dump() << "\n";
    }
    return 0;
}

int cmd_norm(const std::string& space, const std::string& side,
             const std::string& params_text, const std::string& field, int d,
             int k, std::uint64_t seed) {
    ordered_json params = params_text.empty() ? ordered_json::object()
                                              : ordered_json::parse(params_text);
    auto get = [&params](const char* key, double fallback) {
        if (!params.contains(key)) return fallback;
        if (params[key].is_string() && params[key] == "inf")
            return std::numeric_limits<double>::infinity();
        return params[key].get<double>();
    };
    double s = get("s", 0.0), p = get("p", 2.0), q = get("q", 2.0);
    double t = get("t", 2.0), r = get("r", 2.0), t_w = get("t_w", 0.0);

    GridSpec ambient = default_grid(d);
    AnalyticField f = catalog_field(field, d, ambient.half_width);
    double value = 0.0;
    std::string partition_id = "none", quad_id = "none";
    if (side == "rd") {
        GridFunction fg = sample(f.eval, ambient);
        if (space == "L") {
            value = lp_norm(fg, p);
        } else if (space == "H") {
            value = sobolev(fg, s);
        } else if (space == "Hw") {
            value = weighted_sobolev(forward_ft(fg), s, p, t_w);
        } else if (space == "B" || space == "F") {
            DyadicPartition P = build_partition(ambient.nyquist_radius());
            partition_id = "dyadic:jmax=" + std::to_string(P.j_max);
            SpectralFunction F = forward_ft(fg);
            value = space == "B" ? besov(F, s, p, r, P).value
                                 : tl(F, s, p, r, P).value;
        } else {
            throw std::invalid_argument("space must be one of L,H,Hw,B,F");
        }
    } else if (side == "g") {
        QuadraturePtr quad =
            parse_quad(params.value("quad", d == 2 ? "circle:32" : "mc:64"), k, d, seed);
        quad_id = quad->kind;
        GridSpec fiber(d - k, ambient.n, ambient.half_width);
        FiberField u = f.has_plane_integral()
                           ? exact_transform(f, quad, fiber)
                           : transform_slice(sample(f.eval, ambient), quad, fiber);
        if (space == "L") {
            value = mixed_norm(u, q, t);
        } else if (space == "H") {
            value = sobolev_g(u, s);
        } else if (space == "Hw") {
            value = weighted_sobolev_g(u, s, p, t_w);
        } else if (space == "B" || space == "F") {
            DyadicPartition P = build_partition(fiber.nyquist_radius());
            partition_id = "dyadic:jmax=" + std::to_string(P.j_max);
            value = space == "B" ? besov_g(u, s, q, t, r, P).value
                                 : tl_g(u, s, q, t, r, P).value;
        } else {
            throw std::invalid_argument("space must be one of L,H,Hw,B,F");
        }
    } else {
        throw std::invalid_argument("side must be rd or g");
    }

    ordered_json out;
    out["norm_id"] = space + "/" + side;
    out["params"] = params;
    out["field"] = field;
    out["d"] = d;
    out["k"] = k;
    out["partition_id"] = partition_id;
    out["quad_id"] = quad_id;
    out["value"] = value;
    out["error_budget"] = "riemann sums on the pinned grids";
    std::cout << out.dump() << "\n";
    return 0;
}

int emit_reports(const std::vector<SuiteReport>& reports,
                 const std::string& out_path) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        os = &file;
    }
    bool all_pass = true;
    for (const SuiteReport& r : reports) {
        *os << report_line(r) << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& profile_name,
               std::uint64_t seed, const std::string& out_path) {
    VerifyProfile prof = VerifyProfile::named(profile_name, seed);
    std::vector<SuiteReport> reports;
    if (suite == "fst") {
        reports = suite_fst(prof);
    } else if (suite == "isometry") {
        reports = suite_isometry(prof);
    } else if (suite == "sobolev") {
        reports = suite_sobolev_bounds(prof);
    } else if (suite == "besov-tl") {
        reports = suite_besov_tl(prof);
    } else if (suite == "props") {
        reports = suite_props(prof);
    } else if (suite == "all") {
        reports = run_all(prof);
    } else {
        throw std::invalid_argument(
            "suite must be one of fst, isometry, sobolev, besov-tl, props, all");
    }
    return emit_reports(reports, out_path);
}

int cmd_admissible(int d, int k, const std::string& p, const std::string& q,
                   const std::string& t) {
    ExponentQuery query;
    query.d = d;
    query.k = k;
    query.p = Rational::parse(p);
    query.q = Rational::parse(q);
    query.t = Rational::parse(t);
    Verdict v = check(query);
    std::cout << v.to_json() << "\n";
    return 0;
}

int cmd_sweep(int d, int k, int grid, const std::string& out_path) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        os = &file;
    }
    *os << "p,inv_t,status,source\n";
    // diagonal q = t raster over p in [1, d/k) and 1/t in (0, 1]
    for (int i = 0; i < grid; ++i) {
        Rational p = Rational(1) + Rational(i, grid) * (Rational(d, k) - Rational(1));
        for (int j = 1; j <= grid; ++j) {
            Rational t = Rational(grid, j);
            ExponentQuery query;
            query.d = d;
            query.k = k;
            query.p = p;
            query.q = t;
            query.t = t;
            Verdict v = check(query);
            const char* status = "open";
            if (v.status == AdmissibilityStatus::NecessaryViolated) status = "violated";
            if (v.status == AdmissibilityStatus::SufficientBy) status = "sufficient";
            *os << p.str() << "," << Rational(j, grid).str() << "," << status << ","
                << v.source << "\n";
        }
    }
    return 0;
}

int cmd_demo(int k, double a, double delta, const std::string& radii_text,
             double growth, const std::string& out_path) {
    std::vector<double> radii;
    std::stringstream ss(radii_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) radii.push_back(std::stod(tok));
    SuiteReport r = demo_divergence(k, a, delta, radii, growth);
    std::cout << report_line(r) << "\n";
    if (!out_path.empty()) {
        std::ofstream csv(out_path);
        csv << "R,I\n";
        ordered_json params = ordered_json::parse(r.params_json);
        for (std::size_t i = 0; i < params["radii"].size(); ++i)
            csv << params["radii"][i].get<double>() << ","
                << params["values"][i].get<double>() << "\n";
    }
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-plane transform toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file");

    std::string field = "gauss:iso", quad_text = "circle:32", out_path;
    std::string space = "H", side = "rd", params_text, profile = "default";
    std::string p_text = "2", q_text = "2", t_text = "2", radii_text = "8,16,32,64";
    int d = 2, k = 1, grid = 200;
    double a = 1.0, delta = 0.9, growth = 1.5;
    std::uint64_t seed = default_seed();

    auto* transform = app.add_subcommand("transform", "apply the plane transform");
    transform->add_option("--field", field);
    transform->add_option("--d", d);
    transform->add_option("--k", k);
    transform->add_option("--quad", quad_text);
    transform->add_option("--out", out_path);
    transform->add_option("--seed", seed);

    auto* norm = app.add_subcommand("norm", "evaluate a norm");
    norm->add_option("--space", space, "L, H, Hw, B or F");
    norm->add_option("--side", side, "rd or g");
    norm->add_option("--params", params_text, "JSON with s,p,q,t,r,t_w,quad");
    norm->add_option("--field", field);
    norm->add_option("--d", d);
    norm->add_option("--k", k);
    norm->add_option("--seed", seed);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    verify->add_option("suite", suite, "fst|isometry|sobolev|besov-tl|props|all");
    verify->add_option("--profile", profile, "default or fine");
    verify->add_option("--seed", seed);
    verify->add_option("--out", out_path);

    auto* admissible = app.add_subcommand("admissible", "classify exponents");
    admissible->add_option("--d", d);
    admissible->add_option("--k", k);
    admissible->add_option("--p", p_text);
    admissible->add_option("--q", q_text);
    admissible->add_option("--t", t_text);

    auto* sweep = app.add_subcommand("sweep", "rasterize the (p, 1/t) diagonal region");
    sweep->add_option("--d", d);
    sweep->add_option("--k", k);
    sweep->add_option("--grid", grid);
    sweep->add_option("--out", out_path);

    auto* demo = app.add_subcommand("demo", "demonstrations");
    auto* divergence = demo->add_subcommand("divergence", "truncated plane integrals");
    divergence->add_option("--k", k);
    divergence->add_option("--a", a);
    divergence->add_option("--delta", delta);
    divergence->add_option("--radii", radii_text);
    divergence->add_option("--growth", growth);
    divergence->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        auto cfg = read_config(config_path);
        if (cfg.count("profile") && !verify->count("--profile")) profile = cfg["profile"];
        if (cfg.count("seed")) seed = std::strtoull(cfg["seed"].c_str(), nullptr, 10);

        if (transform->parsed())
            return cmd_transform(field, d, k, quad_text, seed, out_path);
        if (norm->parsed())
            return cmd_norm(space, side, params_text, field, d, k, seed);
        if (verify->parsed()) return cmd_verify(suite, profile, seed, out_path);
        if (admissible->parsed()) return cmd_admissible(d, k, p_text, q_text, t_text);
        if (sweep->parsed()) return cmd_sweep(d, k, grid, out_path);
        if (demo->parsed()) {
            if (!divergence->parsed()) {
                std::cerr << "demo requires the divergence subcommand\n";
                return 2;
            }
            return cmd_demo(k, a, delta, radii_text, growth, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
