#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lans/checkpoint.hpp"
#include "lans/config.hpp"
#include "lans/csv.hpp"
#include "lans/initial_data.hpp"

using namespace lans;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("lans-test-" + tag + "-" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

double l2(const SpectralField& f) { return sobolev_norm(f, SobolevIndex(0.0, 2.0)); }

} // namespace

TEST_CASE("checkpoint round trip is bitwise exact") {
    TempDir dir("ckpt");
    const Grid g(3, 16);
    SpectralField f = gen_random_sobolev(g, 1.5, 17, 0.8);
    Checkpoint cp{0.375, 0.5, 1.25, f};
    const std::string path = (dir.path / "state.lans").string();
    save_checkpoint(path, cp);

    Checkpoint back = load_checkpoint(path);
    CHECK(back.time == 0.375);
    CHECK(back.alpha == 0.5);
    CHECK(back.nu == 1.25);
    REQUIRE(back.field.grid == g);
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < g.total_modes(); ++i)
            CHECK(back.field.comp[c][i] == f.comp[c][i]);

    // saving the loaded state reproduces the file byte for byte
    const std::string path2 = (dir.path / "state2.lans").string();
    save_checkpoint(path2, back);
    CHECK(slurp(path) == slurp(path2));
}

TEST_CASE("corrupt checkpoints are rejected") {
    TempDir dir("ckpt-bad");
    const std::string path = (dir.path / "bad.lans").string();

    SUBCASE("bad magic") {
        std::ofstream(path, std::ios::binary) << "NOPE12345678";
        CHECK_THROWS_WITH_AS((void)load_checkpoint(path), doctest::Contains("bad magic"),
                             std::runtime_error);
    }

    SUBCASE("truncated payload") {
        const Grid g(2, 16);
        save_checkpoint(path, Checkpoint{0.0, 0.1, 1.0, SpectralField(g)});
        fs::resize_file(path, fs::file_size(path) / 2);
        CHECK_THROWS_WITH_AS((void)load_checkpoint(path), doctest::Contains("truncated"),
                             std::runtime_error);
    }

    SUBCASE("missing file") {
        CHECK_THROWS_AS((void)load_checkpoint((dir.path / "absent.lans").string()),
                        std::runtime_error);
    }
}

TEST_CASE("double formatting round-trips and prefers the shortest form") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.0) == "0");
    for (double v : {0.1, 1.0 / 3.0, 6.02e23, -2.5e-8, 0.125}) {
        double back = std::stod(format_double(v));
        CHECK(back == v);
    }
}

TEST_CASE("configuration parsing") {
    SUBCASE("values, comments, and whitespace") {
        std::istringstream is("# run setup\n n = 2 \nN=64\nalpha = 0.25 # trailing\n\nT=0.5\n");
        auto kv = parse_config_text(is);
        CHECK(kv.at("n") == "2");
        CHECK(kv.at("N") == "64");
        CHECK(kv.at("alpha") == "0.25");
        CHECK(kv.at("T") == "0.5");

        ExperimentConfig cfg;
        cfg.apply(kv);
        CHECK(cfg.dim == 2);
        CHECK(cfg.size == 64);
        CHECK(cfg.alpha == 0.25);
        CHECK(cfg.horizon == 0.5);
    }

    SUBCASE("unknown keys and malformed lines are errors") {
        ExperimentConfig cfg;
        CHECK_THROWS_WITH_AS(cfg.apply({{"viscosity", "1.0"}}),
                             doctest::Contains("unknown key"), std::runtime_error);
        std::istringstream is("just words\n");
        CHECK_THROWS_WITH_AS((void)parse_config_text(is), doctest::Contains("line 1"),
                             std::runtime_error);
    }

    SUBCASE("echo round-trips through the parser") {
        ExperimentConfig cfg;
        cfg.dim = 2;
        cfg.size = 48;
        cfg.alpha = 0.125;
        cfg.extra_norms = {SobolevIndex(0.75, 2.0), SobolevIndex(1.0, 4.0)};
        std::string text;
        for (const auto& [k, v] : cfg.echo()) text += k + " = " + v + "\n";
        std::istringstream is(text);
        ExperimentConfig back;
        back.apply(parse_config_text(is));
        CHECK(back.echo() == cfg.echo());
    }

    SUBCASE("validation rejects bad parameter combinations") {
        ExperimentConfig cfg;
        cfg.horizon = 0.0;
        CHECK_THROWS_AS(cfg.validate(), std::runtime_error);
        cfg = ExperimentConfig{};
        cfg.generator = "white-noise";
        CHECK_THROWS_AS(cfg.validate(), std::runtime_error);
        cfg = ExperimentConfig{};
        cfg.samples = 2;
        CHECK_THROWS_AS(cfg.validate(), std::runtime_error);
    }
}

TEST_CASE("random Sobolev data generator") {
    const Grid g(3, 16);

    SUBCASE("deterministic per seed, distinct across seeds") {
        SpectralField a = gen_random_sobolev(g, 1.0, 42, 1.0);
        SpectralField b = gen_random_sobolev(g, 1.0, 42, 1.0);
        SpectralField c = gen_random_sobolev(g, 1.0, 43, 1.0);
        for (int comp = 0; comp < 3; ++comp)
            for (std::size_t i = 0; i < g.total_modes(); ++i)
                CHECK(a.comp[comp][i] == b.comp[comp][i]);
        CHECK(l2(a - c) > 1e-3);
    }

    SUBCASE("divergence-free, mean-free, normalized") {
        SpectralField f = gen_random_sobolev(g, 1.25, 7, 0.3);
        CHECK(divergence_residual(f) <= 1e-13);
        CHECK(plancherel_sum(f, 1.25) == doctest::Approx(0.3).epsilon(1e-12));
        for (int c = 0; c < 3; ++c) CHECK(std::abs(f.comp[c][0]) == 0.0);
    }

    SUBCASE("regularity boundary: the norm above s grows with resolution") {
        // at the target index the norm is pinned to the amplitude; half an
        // index above it must keep growing as modes are added, half below it
        // must stay bounded (empirical factors from the shaping law)
        for (int dim : {2, 3}) {
            SpectralField coarse = gen_random_sobolev(Grid(dim, 16), 1.0, 5, 1.0);
            SpectralField fine = gen_random_sobolev(Grid(dim, 32), 1.0, 5, 1.0);
            const double hi_c = plancherel_sum(coarse, 1.5);
            const double hi_f = plancherel_sum(fine, 1.5);
            CHECK(hi_f / hi_c > 1.1);
            CHECK(plancherel_sum(coarse, 0.5) < 1.0);
            CHECK(plancherel_sum(fine, 0.5) < 1.0);
        }
    }

    SUBCASE("zero amplitude gives the zero field") {
        CHECK(l2(gen_random_sobolev(g, 1.0, 3, 0.0)) == 0.0);
    }
}

TEST_CASE("vortex data generator") {
    for (int dim : {2, 3}) {
        const Grid g(dim, 16);
        SpectralField f = gen_taylor_green(g, 0.7);
        CHECK(divergence_residual(f) <= 1e-13);
        CHECK(l2(f) > 0.0);
        CHECK(l2(gen_taylor_green(g, 0.0)) == 0.0);
    }
}

TEST_CASE("csv writers") {
    TempDir dir("csv");
    const std::string path = (dir.path / "t.csv").string();
    write_csv(path, {"a", "b"}, {{1.0, 0.5}, {2.0, 0.25}});
    CHECK(slurp(path) == "a,b\n1,0.5\n2,0.25\n");
}

TEST_CASE("experiment runner artifacts") {
    ExperimentConfig cfg;
    cfg.dim = 2;
    cfg.size = 16;
    cfg.horizon = 0.02;
    cfg.dt = 1e-3;
    cfg.samples = 5;
    cfg.amplitude = 0.1;
    cfg.solver = "both";
    cfg.picard_tolerance = 1e-8;

    SUBCASE("writes the full artifact set and passes on tame data") {
        TempDir dir("run");
        cfg.out_dir = (dir.path / "run1").string();
        auto reports = run_experiment(cfg);
        CHECK(all_pass(reports));
        for (const char* name :
             {"manifest.txt", "initial.lans", "timeseries.csv", "final.lans",
              "picard_timeseries.csv", "diagnostics.csv", "picard_final.lans", "report.json"})
            CHECK(fs::exists(fs::path(cfg.out_dir) / name));
    }

    SUBCASE("refuses to reuse an output directory") {
        TempDir dir("run-exists");
        cfg.out_dir = (dir.path / "taken").string();
        fs::create_directories(cfg.out_dir);
        CHECK_THROWS_WITH_AS((void)run_experiment(cfg), doctest::Contains("already exists"),
                             std::runtime_error);
    }

    SUBCASE("two runs of the same configuration are byte-identical") {
        TempDir dir("run-repro");
        cfg.out_dir = (dir.path / "a").string();
        (void)run_experiment(cfg);
        const std::string a = cfg.out_dir;
        cfg.out_dir = (dir.path / "b").string();
        (void)run_experiment(cfg);
        for (const char* name : {"initial.lans", "timeseries.csv", "final.lans",
                                 "picard_timeseries.csv", "diagnostics.csv", "report.json"})
            CHECK(slurp(fs::path(a) / name) == slurp(fs::path(cfg.out_dir) / name));
    }

    SUBCASE("a non-positive horizon is rejected") {
        TempDir dir("run-bad");
        cfg.out_dir = (dir.path / "bad").string();
        cfg.horizon = -1.0;
        CHECK_THROWS_AS((void)run_experiment(cfg), std::runtime_error);
    }
}
