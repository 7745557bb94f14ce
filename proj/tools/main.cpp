// Command-line front end: identity verification, surface construction,
// integrable deformation runs, and artifact format conversion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "spinsurf/dsii.hpp"
#include "spinsurf/expression.hpp"
#include "spinsurf/io.hpp"
#include "spinsurf/verify.hpp"
#include "spinsurf/weierstrass.hpp"

namespace fs = std::filesystem;
using namespace spinsurf;

namespace {

// -- config -------------------------------------------------------------------

/// key = value lines, '#' comments. Keys are documented in the README.
std::map<std::string, std::string> parse_config(const std::string& path) {
    std::map<std::string, std::string> cfg;
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) cfg[key] = val;
    }
    return cfg;
}

struct Options {
    std::map<std::string, std::string> cfg;

    std::string get(const std::string& key, const std::string& fallback) const {
        auto it = cfg.find(key);
        return it == cfg.end() ? fallback : it->second;
    }
    double num(const std::string& key, double fallback) const {
        auto it = cfg.find(key);
        return it == cfg.end() ? fallback : std::stod(it->second);
    }
    int integer(const std::string& key, int fallback) const {
        auto it = cfg.find(key);
        return it == cfg.end() ? fallback : std::stoi(it->second);
    }
    bool flag(const std::string& key, bool fallback) const {
        auto it = cfg.find(key);
        if (it == cfg.end()) return fallback;
        return it->second == "1" || it->second == "true" || it->second == "yes";
    }
};

GridDomain domain_from(const Options& o, bool force_periodic) {
    return GridDomain(o.num("x0", -1.0), o.num("y0", -1.0), o.num("lx", 2.0), o.num("ly", 2.0),
                      o.integer("nx", 64), o.integer("ny", 64),
                      force_periodic || o.flag("periodic", false));
}

WeierstrassData data_from(const Options& o, const GridDomain& d) {
    WeierstrassData w(d);
    w.p = sample_expression(d, o.get("p", "0"));
    w.q = sample_expression(d, o.get("q", "0"));
    w.psi1 = sample_expression(d, o.get("psi1", "1"));
    w.psi2 = sample_expression(d, o.get("psi2", "1"));
    w.phi1 = sample_expression(d, o.get("phi1", "1"));
    w.phi2 = sample_expression(d, o.get("phi2", "1"));
    return w;
}

GridPoint base_from(const Options& o, const GridDomain& d) {
    const double bx = o.num("base_x", d.x0);
    const double by = o.num("base_y", d.y0);
    GridPoint g;
    g.j = std::clamp(static_cast<int>(std::lround((bx - d.x0) / d.dx())), 0, d.nx - 1);
    g.i = std::clamp(static_cast<int>(std::lround((by - d.y0) / d.dy())), 0, d.ny - 1);
    return g;
}

void ensure_dir(const std::string& out) {
    if (!out.empty()) fs::create_directories(out);
}

// -- verify --------------------------------------------------------------------

int cmd_verify(const Options& o, const std::string& out_dir, std::uint64_t seed) {
    verify::VerifyOptions vo;
    vo.seed = seed;
    const std::string tamper = o.get("tamper", "none");
    vo.tamper_gamma2 = (tamper == "gamma2");

    const auto results = verify::run_all(vo);
    json checks = json::array();
    for (const auto& r : results) {
        const char* status = r.diagnostic ? "diag" : (r.passed ? "PASS" : "FAIL");
        std::printf("[%s] %s: %s", status, r.suite.c_str(), r.name.c_str());
        if (r.diagnostic)
            std::printf("  (measured %.3e)", r.measured);
        else if (!std::isnan(r.threshold))
            std::printf("  (measured %.3e, allowed %.3e)", r.measured, r.threshold);
        std::printf("\n");
        checks.push_back({{"suite", r.suite},
                          {"name", r.name},
                          {"status", status},
                          {"diagnostic", r.diagnostic},
                          {"measured", r.measured},
                          {"threshold", r.threshold}});
    }
    const bool ok = verify::all_hard_passed(results);
    std::printf("%s\n", ok ? "all hard invariants passed" : "HARD INVARIANT FAILURES PRESENT");

    if (!out_dir.empty()) {
        ensure_dir(out_dir);
        write_json_file(out_dir + "/report.json",
                        json{{"kind", "verify-report"},
                             {"seed", seed},
                             {"tamper", tamper},
                             {"all_hard_passed", ok},
                             {"checks", checks}});
    }
    return ok ? 0 : 1;
}

// -- build-surface ----------------------------------------------------------------

int cmd_build_surface(const Options& o, const std::string& out_dir, SignConvention conv) {
    const GridDomain d = domain_from(o, false);
    const WeierstrassData w = data_from(o, d);
    const GridPoint base = base_from(o, d);

    const auto t0 = std::chrono::steady_clock::now();
    SurfaceCoords coords = integrate_coordinates(w, base, conv);
    DiracField dirac = dirac_field_from_coords(coords);
    const auto metric = induced_metric(coords);
    const auto closed = closedness_residual(w, conv);
    const auto res = dirac_system_residual(w);
    const double runtime =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ensure_dir(out_dir);
    write_json_file(out_dir + "/surface.json", to_json(coords, &dirac));
    {
        std::ofstream os(out_dir + "/surface.csv");
        write_csv(os, d,
                  {{"X0", &coords.x[0]},
                   {"X1", &coords.x[1]},
                   {"X2", &coords.x[2]},
                   {"X3", &coords.x[3]},
                   {"Phi1", &dirac.comp[0]},
                   {"Phi2", &dirac.comp[1]},
                   {"Phi3", &dirac.comp[2]},
                   {"Phi4", &dirac.comp[3]}},
                  "convention=" + to_string(conv));
    }
    json diag{{"kind", "surface-diagnostics"},
              {"convention", to_string(conv)},
              {"runtime_seconds", runtime},
              {"dirac_residual", {{"max", res.max_norm}, {"l2", res.l2}}},
              {"metric",
               {{"max_g_zz", max_abs(metric.g_zz)},
                {"max_g_zbzb", max_abs(metric.g_zbzb)},
                {"max_g_zzb", max_abs(metric.g_zzb)}}}};
    const char* names[4] = {"X0", "X1", "X2", "X3"};
    for (int c = 0; c < 4; ++c) diag["closedness_max"][names[c]] = max_abs(closed[c]);
    write_json_file(out_dir + "/diagnostics.json", diag);

    std::printf("surface written to %s (dirac residual max %.3e)\n", out_dir.c_str(),
                res.max_norm);
    return 0;
}

// -- evolve ----------------------------------------------------------------------

int cmd_evolve(const Options& o, const std::string& out_dir, SignConvention conv) {
    const GridDomain d = domain_from(o, true);
    const WeierstrassData w = data_from(o, d);
    const GridPoint base = base_from(o, d);

    FlowConfig cfg;
    cfg.dt = o.num("dt", 1e-4);
    cfg.steps = o.integer("steps", 100);
    cfg.snapshot_stride = o.integer("snapshot_stride", 0);
    cfg.dealias = o.flag("dealias", true);

    DsiiFlow flow(d);
    const auto t0 = std::chrono::steady_clock::now();
    const auto snaps = flow.deform_surface(w, cfg, conv, base);
    const double runtime =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ensure_dir(out_dir);
    json log{{"kind", "evolve-diagnostics"},
             {"convention", to_string(conv)},
             {"dt", cfg.dt},
             {"steps", cfg.steps},
             {"dealias", cfg.dealias},
             {"runtime_seconds", runtime},
             {"snapshots", json::array()}};
    for (std::size_t k = 0; k < snaps.size(); ++k) {
        const auto& s = snaps[k];
        char name[64];
        std::snprintf(name, sizeof(name), "snapshot_%04zu", k);
        write_json_file(out_dir + "/" + name + ".json", snapshot_to_json(s));
        std::ofstream os(out_dir + "/" + name + ".csv");
        write_csv(os, d,
                  {{"p", &s.data.p},
                   {"q", &s.data.q},
                   {"psi1", &s.data.psi1},
                   {"psi2", &s.data.psi2},
                   {"phi1", &s.data.phi1},
                   {"phi2", &s.data.phi2},
                   {"X0", &s.coords.x[0]},
                   {"X1", &s.coords.x[1]},
                   {"X2", &s.coords.x[2]},
                   {"X3", &s.coords.x[3]},
                   {"Phi1", &s.dirac.comp[0]},
                   {"Phi2", &s.dirac.comp[1]},
                   {"Phi3", &s.dirac.comp[2]},
                   {"Phi4", &s.dirac.comp[3]}},
                  "t=" + fmt17(s.t) + " convention=" + to_string(conv));
        log["snapshots"].push_back({{"index", k},
                                    {"t", s.t},
                                    {"dirac_residual_max", s.dirac_residual_max},
                                    {"dirac_residual_l2", s.dirac_residual_l2},
                                    {"energy_p", s.energy_p},
                                    {"energy_q", s.energy_q}});
    }
    write_json_file(out_dir + "/diagnostics.json", log);
    std::printf("%zu snapshots written to %s (%.2f s)\n", snaps.size(), out_dir.c_str(), runtime);
    return 0;
}

// -- export ----------------------------------------------------------------------

int cmd_export(const std::string& out_dir, const std::string& format) {
    if (out_dir.empty()) throw std::runtime_error("export: need --out <dir> with prior artifacts");
    int converted = 0;
    if (format == "csv") {
        // every field-bearing JSON artifact gains a CSV twin
        for (const auto& entry : fs::directory_iterator(out_dir)) {
            if (entry.path().extension() != ".json") continue;
            json j = read_json_file(entry.path().string());
            if (!j.contains("fields") || !j.contains("domain")) continue;
            const GridDomain d = domain_from_json(j.at("domain"));
            std::vector<std::pair<std::string, Field>> fields;
            for (const auto& [name, arr] : j.at("fields").items())
                fields.emplace_back(name, field_from_json(arr, d.nx, d.ny));
            std::vector<std::pair<std::string, const Field*>> refs;
            refs.reserve(fields.size());
            for (const auto& [name, f] : fields) refs.emplace_back(name, &f);
            std::string meta;
            if (j.contains("convention"))
                meta = "convention=" + j.at("convention").get<std::string>();
            fs::path csv = entry.path();
            csv.replace_extension(".csv");
            std::ofstream os(csv);
            write_csv(os, d, refs, meta);
            ++converted;
        }
    } else {
        for (const auto& entry : fs::directory_iterator(out_dir)) {
            if (entry.path().extension() != ".csv") continue;
            std::ifstream is(entry.path());
            const CsvContents c = read_csv(is);
            json j{{"kind", "exported"}, {"domain", to_json(c.domain)}};
            if (!c.extra_meta.empty()) j["meta"] = c.extra_meta;
            for (const auto& [name, f] : c.fields) j["fields"][name] = to_json(f);
            fs::path out = entry.path();
            out.replace_extension(".exported.json");
            write_json_file(out.string(), j);
            ++converted;
        }
    }
    if (converted == 0) throw std::runtime_error("export: no artifacts found in " + out_dir);
    std::printf("%d artifact(s) converted to %s in %s\n", converted, format.c_str(),
                out_dir.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Weierstrass surfaces in C^4, spacetime-algebra spinor fields, "
                 "and DSII-hierarchy deformations"};
    app.require_subcommand(1);

    std::string config_path, out_dir, convention, format;
    std::uint64_t seed = 42;
    app.add_option("--config", config_path, "structured-text config file (key = value lines)");
    app.add_option("--out", out_dir, "output directory");
    auto* conv_opt =
        app.add_option("--convention", convention, "sign convention: literal-paper | conformal")
            ->check(CLI::IsMember({"literal-paper", "conformal"}));
    auto* fmt_opt = app.add_option("--format", format, "artifact format for export: json | csv")
                        ->check(CLI::IsMember({"json", "csv"}));
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized suites");

    auto* verify_cmd =
        app.add_subcommand("verify", "run the algebraic and numerical identity suites");
    auto* build_cmd =
        app.add_subcommand("build-surface", "integrate Weierstrass data into a surface");
    auto* evolve_cmd = app.add_subcommand("evolve", "run a DSII n=3 deformation");
    auto* export_cmd = app.add_subcommand("export", "convert run artifacts between JSON and CSV");
    for (auto* sc : {verify_cmd, build_cmd, evolve_cmd, export_cmd}) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        Options o;
        if (!config_path.empty()) o.cfg = parse_config(config_path);
        // command line overrides config
        if (out_dir.empty()) out_dir = o.get("out", "");
        if (seed_opt->count() == 0) seed = static_cast<std::uint64_t>(o.num("seed", 42));
        if (conv_opt->count() == 0) convention = o.get("convention", "conformal");
        if (fmt_opt->count() == 0) format = o.get("format", "json");
        const SignConvention conv = sign_convention_from_string(convention);

        if (*verify_cmd) return cmd_verify(o, out_dir, seed);
        if (*build_cmd) return cmd_build_surface(o, out_dir.empty() ? "." : out_dir, conv);
        if (*evolve_cmd) return cmd_evolve(o, out_dir.empty() ? "." : out_dir, conv);
        if (*export_cmd) return cmd_export(out_dir, format);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
