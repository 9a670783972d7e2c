#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "lans/config.hpp"

namespace {

struct Overrides {
    std::optional<int> dim, size, samples;
    std::optional<double> alpha, nu, data_s, amplitude, horizon, dt;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> generator, sampling, out_dir;
};

void add_common_flags(CLI::App* cmd, std::string& config_path, Overrides& ov) {
    cmd->add_option("--config", config_path, "key=value configuration file");
    cmd->add_option("--n", ov.dim, "spatial dimension (2 or 3)");
    cmd->add_option("--N", ov.size, "grid points per axis");
    cmd->add_option("--alpha", ov.alpha, "averaging length alpha");
    cmd->add_option("--nu", ov.nu, "viscosity nu");
    cmd->add_option("--generator", ov.generator, "taylor-green | random-sobolev");
    cmd->add_option("--s", ov.data_s, "data regularity for random-sobolev");
    cmd->add_option("--amplitude", ov.amplitude, "initial data amplitude");
    cmd->add_option("--seed", ov.seed, "random seed");
    cmd->add_option("--T", ov.horizon, "time horizon");
    cmd->add_option("--dt", ov.dt, "time step");
    cmd->add_option("--samples", ov.samples, "number of sample nodes");
    cmd->add_option("--sampling", ov.sampling, "uniform | log-graded");
    cmd->add_option("--out", ov.out_dir, "output directory (must not exist)");
}

lans::ExperimentConfig build_config(const std::string& config_path, const Overrides& ov) {
    lans::ExperimentConfig cfg;
    if (!config_path.empty()) cfg.apply(lans::parse_config_file(config_path));
    if (ov.dim) cfg.dim = *ov.dim;
    if (ov.size) cfg.size = *ov.size;
    if (ov.alpha) cfg.alpha = *ov.alpha;
    if (ov.nu) cfg.nu = *ov.nu;
    if (ov.generator) cfg.generator = *ov.generator;
    if (ov.data_s) cfg.data_s = *ov.data_s;
    if (ov.amplitude) cfg.amplitude = *ov.amplitude;
    if (ov.seed) cfg.seed = *ov.seed;
    if (ov.horizon) cfg.horizon = *ov.horizon;
    if (ov.dt) cfg.dt = *ov.dt;
    if (ov.samples) cfg.samples = *ov.samples;
    if (ov.sampling) cfg.sampling = *ov.sampling;
    if (ov.out_dir) cfg.out_dir = *ov.out_dir;
    return cfg;
}

int report_and_exit(const std::vector<lans::CaseReport>& reports) {
    for (const auto& r : reports)
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id
                  << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
    return lans::all_pass(reports) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-spectral laboratory for the LANS-alpha equation on the periodic box"};
    app.require_subcommand(1);

    CLI::App* gen = app.add_subcommand("gen-ic", "generate initial data and write a checkpoint");
    std::string gen_config;
    Overrides gen_ov;
    add_common_flags(gen, gen_config, gen_ov);

    CLI::App* solve = app.add_subcommand("solve", "evolve initial data with the timestepper");
    std::string solve_config;
    Overrides solve_ov;
    add_common_flags(solve, solve_config, solve_ov);

    CLI::App* picard = app.add_subcommand("picard", "solve the integral equation by Picard iteration");
    std::string picard_config;
    Overrides picard_ov;
    add_common_flags(picard, picard_config, picard_ov);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite,
                       "projectors | smoothing | bilinear | lipschitz | energy | h2 | "
                       "higher-reg | conditions | alpha-limit | contraction | oracle | all")
        ->required();
    std::string verify_out = "verify-out";
    verify->add_option("--out", verify_out, "output directory (must not exist)");
    double v_s1 = 0.0, v_s2 = 0.0, v_p = 2.0;
    int v_n = 3, v_N = 96;
    std::uint64_t v_seed = 42;
    auto* o_s1 = verify->add_option("--s1", v_s1, "custom smoothing case: data regularity");
    auto* o_s2 = verify->add_option("--s2", v_s2, "custom smoothing case: target regularity");
    verify->add_option("--p", v_p, "custom smoothing case: integrability");
    verify->add_option("--n", v_n, "custom smoothing case: dimension");
    verify->add_option("--N", v_N, "custom smoothing case: grid size");
    verify->add_option("--seed", v_seed, "custom smoothing case: seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            lans::ExperimentConfig cfg = build_config(gen_config, gen_ov);
            cfg.validate();
            const auto dir = lans::make_run_dir(cfg.out_dir);
            lans::write_manifest(dir, cfg);
            lans::SpectralField phi = lans::make_initial_data(cfg);
            lans::save_checkpoint((dir / "initial.lans").string(),
                                  lans::Checkpoint{0.0, cfg.alpha, cfg.nu, phi});
            std::cout << "wrote " << (dir / "initial.lans").string() << "\n";
            return 0;
        }
        if (solve->parsed() || picard->parsed()) {
            const bool is_picard = picard->parsed();
            lans::ExperimentConfig cfg =
                build_config(is_picard ? picard_config : solve_config,
                             is_picard ? picard_ov : solve_ov);
            cfg.solver = is_picard ? "picard" : "timestep";
            return report_and_exit(lans::run_experiment(cfg));
        }
        if (verify->parsed()) {
            const auto dir = lans::make_run_dir(verify_out);
            std::vector<lans::CaseReport> reports;
            if (suite == "smoothing" && o_s1->count() && o_s2->count()) {
                const double expected = -(v_s2 - v_s1) / 2.0;
                reports.push_back(lans::smoothing_rate_experiment(
                    v_s1, v_s2, v_p, v_seed, v_n, v_N, 1e-4, 1e-1, expected, 0.05));
            } else {
                const bool wants_scan = suite == "conditions" || suite == "all";
                reports = lans::run_suite(
                    suite, wants_scan ? (dir / "scan.csv").string() : std::string());
            }
            lans::write_report_json((dir / "report.json").string(), reports);
            return report_and_exit(reports);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
