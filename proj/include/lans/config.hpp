#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lans/checkpoint.hpp"
#include "lans/csv.hpp"
#include "lans/experiments.hpp"
#include "lans/initial_data.hpp"
#include "lans/picard.hpp"
#include "lans/report.hpp"
#include "lans/timestepper.hpp"

namespace lans {

inline constexpr const char* code_version = "lans-lab 1.0.0";

/// Flat key=value configuration; '#' starts a comment, blank lines ignored.
inline std::map<std::string, std::string> parse_config_text(std::istream& is) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = strip(line.substr(0, eq));
        const std::string val = strip(line.substr(eq + 1));
        if (key.empty()) throw std::runtime_error("config line " + std::to_string(lineno) + ": empty key");
        kv[key] = val;
    }
    return kv;
}

inline std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("config: cannot open " + path);
    return parse_config_text(is);
}

struct ExperimentConfig {
    std::string experiment = "run";
    int dim = 3;
    int size = 32;
    double alpha = 0.5;
    double nu = 1.0;
    std::string generator = "taylor-green"; // or "random-sobolev"
    double data_s = 0.75;
    double amplitude = 0.1;
    std::uint64_t seed = 1;
    double horizon = 0.1;
    double dt = 1e-3;
    int samples = 21;
    std::string sampling = "uniform"; // or "log-graded"
    std::string solver = "timestep";  // "picard" | "timestep" | "both"
    std::vector<SobolevIndex> extra_norms;
    std::string out_dir = "out";

    // picard extras
    double picard_s1 = 0.75, picard_p = 2.0, picard_s2 = 1.0, picard_c = 2.0, picard_a = 0.125;
    double picard_tolerance = 1e-9;
    int picard_max_iterations = 25;

    void validate() const {
        if (!(horizon > 0.0)) throw std::runtime_error("config: T must be > 0");
        if (!(dt > 0.0)) throw std::runtime_error("config: dt must be > 0");
        if (!(amplitude >= 0.0)) throw std::runtime_error("config: amplitude must be >= 0");
        if (samples < 3) throw std::runtime_error("config: samples must be >= 3");
        if (generator != "taylor-green" && generator != "random-sobolev")
            throw std::runtime_error("config: unknown generator " + generator);
        if (solver != "picard" && solver != "timestep" && solver != "both")
            throw std::runtime_error("config: unknown solver " + solver);
        if (sampling != "uniform" && sampling != "log-graded")
            throw std::runtime_error("config: unknown sampling " + sampling);
    }

    void apply(const std::map<std::string, std::string>& kv) {
        for (const auto& [key, val] : kv) {
            if (key == "experiment") experiment = val;
            else if (key == "n") dim = std::stoi(val);
            else if (key == "N") size = std::stoi(val);
            else if (key == "alpha") alpha = std::stod(val);
            else if (key == "nu") nu = std::stod(val);
            else if (key == "generator") generator = val;
            else if (key == "s") data_s = std::stod(val);
            else if (key == "amplitude") amplitude = std::stod(val);
            else if (key == "seed") seed = std::stoull(val);
            else if (key == "T") horizon = std::stod(val);
            else if (key == "dt") dt = std::stod(val);
            else if (key == "samples") samples = std::stoi(val);
            else if (key == "sampling") sampling = val;
            else if (key == "solver") solver = val;
            else if (key == "out_dir") out_dir = val;
            else if (key == "picard_s1") picard_s1 = std::stod(val);
            else if (key == "picard_p") picard_p = std::stod(val);
            else if (key == "picard_s2") picard_s2 = std::stod(val);
            else if (key == "picard_c") picard_c = std::stod(val);
            else if (key == "picard_a") picard_a = std::stod(val);
            else if (key == "picard_tolerance") picard_tolerance = std::stod(val);
            else if (key == "picard_max_iterations") picard_max_iterations = std::stoi(val);
            else if (key == "norms") {
                extra_norms.clear();
                std::istringstream ss(val);
                std::string item;
                while (std::getline(ss, item, ';')) {
                    const auto comma = item.find(',');
                    if (comma == std::string::npos)
                        throw std::runtime_error("config: norms entries must be s,p pairs");
                    extra_norms.emplace_back(std::stod(item.substr(0, comma)),
                                             std::stod(item.substr(comma + 1)));
                }
            } else {
                throw std::runtime_error("config: unknown key " + key);
            }
        }
    }

    std::map<std::string, std::string> echo() const {
        std::map<std::string, std::string> kv;
        kv["experiment"] = experiment;
        kv["n"] = std::to_string(dim);
        kv["N"] = std::to_string(size);
        kv["alpha"] = format_double(alpha);
        kv["nu"] = format_double(nu);
        kv["generator"] = generator;
        kv["s"] = format_double(data_s);
        kv["amplitude"] = format_double(amplitude);
        kv["seed"] = std::to_string(seed);
        kv["T"] = format_double(horizon);
        kv["dt"] = format_double(dt);
        kv["samples"] = std::to_string(samples);
        kv["sampling"] = sampling;
        kv["solver"] = solver;
        kv["out_dir"] = out_dir;
        kv["picard_s1"] = format_double(picard_s1);
        kv["picard_p"] = format_double(picard_p);
        kv["picard_s2"] = format_double(picard_s2);
        kv["picard_c"] = format_double(picard_c);
        kv["picard_a"] = format_double(picard_a);
        kv["picard_tolerance"] = format_double(picard_tolerance);
        kv["picard_max_iterations"] = std::to_string(picard_max_iterations);
        std::string norms;
        for (std::size_t i = 0; i < extra_norms.size(); ++i)
            norms += (i ? ";" : "") + format_double(extra_norms[i].s) + "," +
                     format_double(extra_norms[i].p);
        kv["norms"] = norms;
        return kv;
    }
};

/// Creates the run directory; refuses to reuse an existing one so no run is
/// ever overwritten.
inline std::filesystem::path make_run_dir(const std::string& out_dir) {
    std::filesystem::path dir(out_dir);
    if (std::filesystem::exists(dir))
        throw std::runtime_error("output directory already exists: " + out_dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline void write_manifest(const std::filesystem::path& dir, const ExperimentConfig& cfg) {
    std::ofstream os(dir / "manifest.txt");
    if (!os) throw std::runtime_error("manifest: cannot open for writing");
    os << "version = " << code_version << "\n";
    for (const auto& [k, v] : cfg.echo()) os << k << " = " << v << "\n";
}

inline SpectralField make_initial_data(const ExperimentConfig& cfg) {
    const Grid grid(cfg.dim, cfg.size);
    if (cfg.generator == "taylor-green") return gen_taylor_green(grid, cfg.amplitude);
    return gen_random_sobolev(grid, cfg.data_s, cfg.seed, cfg.amplitude);
}

inline TimeGrid make_sample_grid(const ExperimentConfig& cfg) {
    return cfg.sampling == "uniform" ? TimeGrid::uniform(cfg.horizon, cfg.samples)
                                     : TimeGrid::log_graded(cfg.horizon, cfg.samples);
}

/// Runs the configured solver(s), writing timeseries.csv, diagnostics.csv,
/// checkpoints, manifest, and report.json into a fresh run directory.
inline std::vector<CaseReport> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::filesystem::path dir = make_run_dir(cfg.out_dir);
    write_manifest(dir, cfg);

    const AlphaParam params(cfg.alpha, cfg.nu);
    SpectralField phi = make_initial_data(cfg);
    save_checkpoint((dir / "initial.lans").string(),
                    Checkpoint{0.0, cfg.alpha, cfg.nu, phi});

    std::vector<CaseReport> reports;

    if (cfg.solver == "timestep" || cfg.solver == "both") {
        StepConfig scfg;
        scfg.dt = cfg.dt;
        CaseReport rep;
        rep.id = "timestep-run";
        rep.expected = "completed without blow-up, divergence-free samples";
        rep.tolerance = 1e-10;
        try {
            EvolveResult res = evolve(phi, cfg.horizon, scfg, params, make_sample_grid(cfg));
            write_trajectory_csv((dir / "timeseries.csv").string(), res.trajectory,
                                 cfg.extra_norms);
            save_checkpoint((dir / "final.lans").string(),
                            Checkpoint{res.trajectory.time_grid.nodes.back(), cfg.alpha, cfg.nu,
                                       res.trajectory.states.back()});
            double worst_div = 0.0;
            for (double d : res.div_residuals) worst_div = std::max(worst_div, d);
            rep.measured["max_div_residual"] = worst_div;
            rep.pass = worst_div <= 1e-10;
        } catch (const BlowupError& e) {
            rep.measured["last_good_time"] = e.last_good_time;
            rep.pass = false;
            rep.detail = e.what();
        }
        reports.push_back(rep);
    }

    if (cfg.solver == "picard" || cfg.solver == "both") {
        PicardConfig pcfg;
        pcfg.s1 = cfg.picard_s1;
        pcfg.p = cfg.picard_p;
        pcfg.s2 = cfg.picard_s2;
        pcfg.c = cfg.picard_c;
        pcfg.a = cfg.picard_a;
        pcfg.horizon = cfg.horizon;
        pcfg.nodes = cfg.samples;
        pcfg.spacing = cfg.sampling == "uniform" ? TimeGrid::Spacing::uniform
                                                 : TimeGrid::Spacing::log_graded;
        pcfg.tolerance = cfg.picard_tolerance;
        pcfg.max_iterations = cfg.picard_max_iterations;

        CaseReport rep;
        rep.id = "picard-run";
        rep.expected = "converged with residual below 100x tolerance";
        rep.tolerance = cfg.picard_tolerance;
        // on non-contraction the horizon is halved and retried, up to 5 times
        double T = cfg.horizon;
        for (int attempt = 0;; ++attempt) {
            try {
                pcfg.horizon = T;
                PicardResult res = picard_solve(phi, pcfg, params);
                write_trajectory_csv((dir / "picard_timeseries.csv").string(), res.trajectory,
                                     cfg.extra_norms);
                write_diagnostics_csv((dir / "diagnostics.csv").string(), res.diagnostics);
                save_checkpoint((dir / "picard_final.lans").string(),
                                Checkpoint{T, cfg.alpha, cfg.nu, res.trajectory.states.back()});
                rep.measured["iterations"] = static_cast<double>(res.diagnostics.iterations);
                rep.measured["final_residual"] = res.diagnostics.final_residual;
                rep.measured["horizon_used"] = T;
                rep.pass = res.diagnostics.converged &&
                           res.diagnostics.final_residual < 100.0 * pcfg.tolerance;
                break;
            } catch (const NonContractionError& e) {
                if (attempt >= 5) {
                    rep.pass = false;
                    rep.detail = e.what();
                    break;
                }
                T *= 0.5;
            } catch (const DivergenceError& e) {
                rep.pass = false;
                rep.detail = e.what();
                break;
            }
        }
        reports.push_back(rep);
    }

    write_report_json((dir / "report.json").string(), reports);
    return reports;
}

} // namespace lans
