#include <atomic>
#include <chrono>
#include <cmath>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cavrotor/bo.hpp"
#include "cavrotor/io.hpp"
#include "cavrotor/perturbation.hpp"
#include "cavrotor/rpa.hpp"
#include "figures.hpp"

namespace {

using namespace cavrotor;
using cavrotor::cli::CliContext;
using cavrotor::cli::GroundPoint;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;
constexpr int kExitConvergence = 3;

std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n') c = ';';
    return s;
}

json base_metadata(const CliContext& ctx, double wall_s) {
    json m;
    m["tool"] = kToolVersion;
    m["params"] = params_to_json(ctx.params);
    m["trunc"] = trunc_to_json(ctx.trunc);
    m["tol"] = ctx.tol;
    m["wall_time_s"] = wall_s;
    return m;
}

void set_axis(ModelParams& p, const std::string& name, double v) {
    if (name == "g")
        p.g = v;
    else if (name == "b_field")
        p.b_field = v;
    else if (name == "delta")
        p.delta = v;
    else if (name == "inertia")
        p.inertia = v;
    else
        throw DomainError("sweep", "unknown sweep parameter " + name);
}

int run_ground(const CliContext& ctx, const json& /*config*/) {
    const auto t0 = std::chrono::steady_clock::now();
    GroundPoint gp = cli::solve_ground_point(ctx.params, ctx.trunc, ctx.tol);

    CsvTable csv;
    csv.set_header({"E0", "L_opt", "dL_opt", "L_mech", "sector", "n_r", "n_l", "converged"});
    csv.add_row({CsvTable::num(gp.E0), CsvTable::num(gp.L_opt), CsvTable::num(gp.dL_opt),
                 CsvTable::num(gp.L_mech), CsvTable::num(gp.sector), CsvTable::num(gp.n_r),
                 CsvTable::num(gp.n_l), CsvTable::num((long long)gp.converged)});

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json meta = base_metadata(ctx, wall);
    meta["converged"] = gp.converged;
    csv.write(ctx.out_dir + "/ground.csv");
    write_json(ctx.out_dir + "/ground.json", meta);
    return gp.converged ? kExitOk : kExitConvergence;
}

int run_sweep(const CliContext& ctx, const json& config) {
    if (!config.contains("sweep")) throw DomainError("sweep", "config lacks a sweep block");
    const json& sw = config.at("sweep");
    const std::string axis = sw.at("parameter").get<std::string>();
    const double start = sw.at("start").get<double>();
    const double stop = sw.at("stop").get<double>();
    const int count = sw.at("count").get<int>();
    const std::string spacing = sw.value("spacing", "linear");
    if (count < 1) throw DomainError("sweep", "count must be >= 1");
    if (spacing != "linear" && spacing != "log")
        throw DomainError("sweep", "spacing must be linear or log");
    if (spacing == "log" && !(start > 0.0 && stop > 0.0))
        throw DomainError("sweep", "log spacing needs positive endpoints");
    { // validate the axis name before any work happens
        ModelParams probe = ctx.params;
        set_axis(probe, axis, start);
    }

    std::vector<double> values(std::size_t(count), 0.0);
    for (int i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : double(i) / double(count - 1);
        values[std::size_t(i)] = spacing == "log"
                                     ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                                     : start + f * (stop - start);
    }

    const auto t0 = std::chrono::steady_clock::now();
    struct Row {
        GroundPoint gp;
        std::string error;
        bool failed = false;
    };
    std::vector<Row> rows(values.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < values.size(); i = next.fetch_add(1)) {
            ModelParams p = ctx.params;
            try {
                set_axis(p, axis, values[i]);
                validate(p);
                rows[i].gp = cli::solve_ground_point(p, ctx.trunc, ctx.tol);
            } catch (const std::exception& e) {
                rows[i].failed = true;
                rows[i].error = sanitize(e.what());
            }
        }
    };
    std::vector<std::thread> pool;
    const int nw = std::max(1, ctx.workers);
    for (int t = 1; t < nw; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    CsvTable csv;
    csv.set_header({axis, "E0", "L_opt", "dL_opt", "L_mech", "sector", "converged", "error"});
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Row& r = rows[i];
        if (r.failed) {
            csv.add_row({CsvTable::num(values[i]), "nan", "nan", "nan", "nan", "0", "0", r.error});
        } else {
            csv.add_row({CsvTable::num(values[i]), CsvTable::num(r.gp.E0),
                         CsvTable::num(r.gp.L_opt), CsvTable::num(r.gp.dL_opt),
                         CsvTable::num(r.gp.L_mech), CsvTable::num(r.gp.sector),
                         CsvTable::num((long long)r.gp.converged), ""});
        }
    }

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json meta = base_metadata(ctx, wall);
    meta["sweep"] = sw;
    std::size_t failed = 0;
    for (const Row& r : rows) failed += r.failed;
    meta["failed_points"] = failed;
    csv.write(ctx.out_dir + "/sweep.csv");
    write_json(ctx.out_dir + "/sweep.json", meta);
    return kExitOk;
}

int run_perturbation(const CliContext& ctx, const json& /*config*/) {
    const auto t0 = std::chrono::steady_clock::now();
    CsvTable csv;
    csv.set_header({"name", "value"});
    const WeakPT w = weak_corrections(ctx.params);
    csv.add_row({"weak_E2", CsvTable::num(w.E2)});
    csv.add_row({"weak_E4_phase_coeff", CsvTable::num(w.E4_phase_coeff)});
    csv.add_row({"weak_L", CsvTable::num(w.L)});
    csv.add_row({"weak_dL", CsvTable::num(w.dL)});
    const StrongPT s = strong_corrections(ctx.params);
    csv.add_row({"q", CsvTable::num(s.q)});
    csv.add_row({"strong_E0", CsvTable::num(s.E0)});
    csv.add_row({"strong_L1", CsvTable::num(s.L1)});
    csv.add_row({"strong_dL1", CsvTable::num(s.dL1)});
    csv.add_row({"strong_LN", CsvTable::num(s.LN)});

    json meta;
    try {
        const double wl = intermediate_resonance(ctx.params);
        csv.add_row({"resonant_omega_l", CsvTable::num(wl)});
        if (ctx.params.n_dimers == 1) {
            ModelParams p = ctx.params;
            p.b_field = 0.5 * (1.0 / wl - wl);
            csv.add_row({"resonant_b_field", CsvTable::num(p.b_field)});
            csv.add_row({"L_two_level", CsvTable::num(intermediate_L(derived(p).q))});
            csv.add_row({"L_multilevel_n9", CsvTable::num(intermediate_L_multilevel(p, 9).L)});
        }
    } catch (const Unsupported& e) {
        meta["resonance_note"] = e.what();
    }

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json full = base_metadata(ctx, wall);
    full.update(meta);
    std::vector<std::string> warnings = w.warnings;
    warnings.insert(warnings.end(), s.warnings.begin(), s.warnings.end());
    full["warnings"] = warnings;
    csv.write(ctx.out_dir + "/perturbation.csv");
    write_json(ctx.out_dir + "/perturbation.json", full);
    return kExitOk;
}

int run_rpa(const CliContext& ctx, const json& config) {
    const auto t0 = std::chrono::steady_clock::now();
    double z = 1.0;
    if (config.contains("rpa")) z = config.at("rpa").value("Z", 1.0);

    CsvTable csv;
    csv.set_header({"method", "deltaE", "w1", "w2", "w3", "w4"});
    auto add = [&](const char* name, const RpaResult& r) {
        csv.add_row({name, CsvTable::num(r.deltaE), CsvTable::num(r.polariton_freqs[0]),
                     CsvTable::num(r.polariton_freqs[1]), CsvTable::num(r.polariton_freqs[2]),
                     CsvTable::num(r.polariton_freqs[3])});
    };
    add("polynomial", rpa_energy(ctx.params, z, RpaMethod::polynomial));
    add("contour_integral", rpa_energy(ctx.params, z, RpaMethod::contour_integral));
    if (ctx.params.b_field == 0.0)
        add("closed_form_B0", rpa_energy(ctx.params, z, RpaMethod::closed_form_B0));

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json meta = base_metadata(ctx, wall);
    meta["Z"] = z;
    csv.write(ctx.out_dir + "/rpa.csv");
    write_json(ctx.out_dir + "/rpa.json", meta);
    return kExitOk;
}

int run_bo(const CliContext& ctx, const json& config) {
    const auto t0 = std::chrono::steady_clock::now();
    SurfaceSource source = SurfaceSource::exact_dicke;
    int n_points = 256, n_max = 8;
    if (config.contains("bo")) {
        const json& b = config.at("bo");
        const std::string s = b.value("source", "exact_dicke");
        if (s == "exact_dicke")
            source = SurfaceSource::exact_dicke;
        else if (s == "rpa_angle")
            source = SurfaceSource::rpa_angle;
        else if (s == "weak_pt")
            source = SurfaceSource::weak_pt;
        else
            throw DomainError("bo", "unknown surface source " + s);
        n_points = b.value("n_points", n_points);
        n_max = b.value("n_max", n_max);
    }
    ModelParams p = ctx.params;
    p.n_dimers = 2;
    PotentialSurface surf = potential_surface(p, source, n_points, n_max, ctx.workers);
    MathieuGround mg = mathieu_ground(surf, p.inertia / 2.0);

    CsvTable csv;
    csv.set_header({"theta", "V", "psi"});
    for (std::size_t i = 0; i < surf.theta.size(); ++i)
        csv.add_row({CsvTable::num(surf.theta[i]), CsvTable::num(surf.energy[i]),
                     CsvTable::num(mg.psi[i])});

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json meta = base_metadata(ctx, wall);
    meta["ground_energy"] = mg.energy;
    meta["angle_dispersion"] = mg.angle_dispersion;
    meta["norm_check"] = mg.norm_check;
    csv.write(ctx.out_dir + "/bo.csv");
    write_json(ctx.out_dir + "/bo.json", meta);
    return kExitOk;
}

int run_feasibility(const CliContext& ctx, const json& config) {
    const auto t0 = std::chrono::steady_clock::now();
    double hbar_omega_meV = 100.0;
    if (config.contains("feasibility"))
        hbar_omega_meV = config.at("feasibility").value("hbar_omega_meV", 100.0);
    if (!(hbar_omega_meV > 0.0)) throw DomainError("feasibility", "hbar_omega_meV must be > 0");

    ModelParams p = ctx.params;
    if (p.n_dimers < 2) p.n_dimers = 2;
    const double n = double(p.n_dimers);
    // maximal angle-dependent depth: |coefficient| * (N^2 - N) at alignment
    const double amplitude = std::abs(rpa_angle_coefficient(p)) * (n * n - n);
    const double height_ueV = amplitude * hbar_omega_meV * 1e3;
    const double height_n100_meV = amplitude * hbar_omega_meV * (100.0 / n);
    // 1 meV / k_B = 11.604 K
    const double temperature_mK = height_n100_meV * 11.604 * 1e3;

    CsvTable csv;
    csv.set_header({"quantity", "computed", "reference"});
    csv.add_row({"cavity_energy_meV", CsvTable::num(hbar_omega_meV), CsvTable::num(100.0)});
    csv.add_row({"potential_height_ueV", CsvTable::num(height_ueV), CsvTable::num(1.0)});
    csv.add_row({"height_N100_meV", CsvTable::num(height_n100_meV), CsvTable::num(0.1)});
    csv.add_row({"alignment_temperature_mK", CsvTable::num(temperature_mK), CsvTable::num(100.0)});

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json meta = base_metadata(ctx, wall);
    meta["note"] = "computed values and commonly quoted reference estimates are reported side by side; "
                   "they are not forced to agree";
    csv.write(ctx.out_dir + "/feasibility.csv");
    write_json(ctx.out_dir + "/feasibility.json", meta);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimers in a chiral cavity: exact diagonalization and companions"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", figure_name;
    int workers = int(std::thread::hardware_concurrency());
    double tol = 1e-9;
    app.add_option("--config", config_path, "JSON run configuration");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--workers", workers, "worker thread cap");
    app.add_option("--tol", tol, "solver tolerance");

    auto* c_ground = app.add_subcommand("ground", "ground state at one parameter point");
    auto* c_sweep = app.add_subcommand("sweep", "1-D parameter sweep");
    auto* c_pt = app.add_subcommand("perturbation", "closed-form expansions");
    auto* c_rpa = app.add_subcommand("rpa", "large-N energy correction");
    auto* c_bo = app.add_subcommand("bo", "frozen-angle surface and angular ground state");
    auto* c_fig = app.add_subcommand("figure", "emit a named figure dataset");
    c_fig->add_option("name", figure_name, "dataset name")->required();
    auto* c_feas = app.add_subcommand("feasibility", "unit-carrying estimates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitConfig : kExitOk;
    }

    CliContext ctx;
    json config = json::object();
    try {
        if (!config_path.empty()) {
            config = read_json(config_path);
            if (config.contains("params")) ctx.params = params_from_json(config.at("params"));
            if (config.contains("trunc")) ctx.trunc = trunc_from_json(config.at("trunc"));
            if (config.contains("tol")) tol = config.at("tol").get<double>();
        }
        ctx.out_dir = out_dir;
        ctx.workers = std::max(1, workers);
        ctx.tol = tol;
        if (c_sweep->parsed() && !config.contains("sweep"))
            throw DomainError("sweep", "config lacks a sweep block");
        if (c_fig->parsed()) {
            const auto& names = cavrotor::cli::figure_names();
            if (std::find(names.begin(), names.end(), figure_name) == names.end())
                throw DomainError("figure", "unknown figure name " + figure_name);
        }
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (c_ground->parsed()) return run_ground(ctx, config);
        if (c_sweep->parsed()) return run_sweep(ctx, config);
        if (c_pt->parsed()) return run_perturbation(ctx, config);
        if (c_rpa->parsed()) return run_rpa(ctx, config);
        if (c_bo->parsed()) return run_bo(ctx, config);
        if (c_fig->parsed()) {
            cavrotor::cli::run_figure(figure_name, ctx);
            return kExitOk;
        }
        if (c_feas->parsed()) return run_feasibility(ctx, config);
    } catch (const NoConvergence& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const GridTooCoarse& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const QuadratureFailure& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolver;
    }
    return kExitConfig;
}
