// cheb: table generation and verification front end.
//
// Subcommands: repulsion, least-prime, lower-bound, turan, verify-quadratic,
// verify-corpus, selfcheck.  Exit 0 on success, 1 on infeasibility or
// verification failure, 2 on usage errors.
#include <complex>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "../vendor/CLI11.hpp"
#include "chebotarev/frobenius.hpp"
#include "chebotarev/io.hpp"
#include "chebotarev/kernels.hpp"
#include "chebotarev/leastprime.hpp"
#include "chebotarev/profiles.hpp"
#include "chebotarev/repulsion.hpp"
#include "chebotarev/turan.hpp"
#include "chebotarev/zerodensity.hpp"

namespace {

using namespace chebotarev;

void emit(const io::Table& table, const std::string& format,
          const std::string& out_path) {
    const std::string text =
        format == "json" ? io::to_json(table) : io::to_csv(table);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw CLI::ValidationError("--out", "cannot open " + out_path);
        out << text;
    }
}

std::vector<profiles::DegreeProfile> select_profiles(
    const std::vector<profiles::DegreeProfile>& all, std::optional<int> only) {
    if (!only) return all;
    for (const auto& p : all) {
        if (p.n0 == *only) return {p};
    }
    throw CLI::ValidationError("--profile",
                               "no built-in profile for degree " +
                                   std::to_string(*only));
}

int cmd_repulsion(std::optional<int> profile, double eta,
                  const std::string& format, const std::string& out_path) {
    io::Table table;
    table.columns = {"n0", "d0", "c1", "c2", "c1p", "c2p", "c1pp", "c2pp", "c3"};
    for (const auto& p : select_profiles(profiles::builtin_profiles(), profile)) {
        const auto opt = repulsion::optimize_repulsion(p, eta);
        const auto& c = opt.constants;
        table.add_row({p.n0, p.d0, io::Cell(c.c1, io::Rounding::Down),
                       io::Cell(c.c2, io::Rounding::Down),
                       io::Cell(c.c1p, io::Rounding::Down),
                       io::Cell(c.c2p, io::Rounding::Down),
                       io::Cell(c.c1pp, io::Rounding::Down),
                       io::Cell(c.c2pp, io::Rounding::Down),
                       io::Cell(c.c3, io::Rounding::Up)});
    }
    emit(table, format, out_path);
    return 0;
}

int cmd_least_prime(std::optional<int> profile, bool paper_params,
                    const std::string& format, const std::string& out_path) {
    const auto selected =
        select_profiles(profiles::leastprime_profiles(), profile);
    struct Row {
        profiles::DegreeProfile p;
        leastprime::OverallB result;
    };
    std::vector<std::future<Row>> futures;
    for (const auto& p : selected) {
        futures.push_back(std::async(std::launch::async, [p, paper_params] {
            const double c3 = repulsion::optimize_repulsion(p, 1.0).constants.c3;
            if (paper_params) {
                return Row{p, leastprime::overall_B(p, {}, c3)};
            }
            return Row{p, leastprime::optimize_B(p, c3).result};
        }));
    }
    io::Table table;
    table.columns = {"n0",      "d0",       "B_ne", "B_med", "B_small",
                     "B_vsmall", "B_xsmall", "B",    "admissible"};
    bool all_admissible = true;
    for (auto& fut : futures) {
        const Row row = fut.get();
        const auto& cs = row.result.cases;
        table.add_row({row.p.n0, row.p.d0,
                       io::Cell(cs[0].B, io::Rounding::Up),
                       io::Cell(cs[1].B, io::Rounding::Up),
                       io::Cell(cs[2].B, io::Rounding::Up),
                       io::Cell(cs[3].B, io::Rounding::Up),
                       io::Cell(cs[4].B, io::Rounding::Up),
                       io::Cell(row.result.B, io::Rounding::Up),
                       row.result.admissible ? "yes" : "no"});
        all_admissible = all_admissible && row.result.admissible;
    }
    emit(table, format, out_path);
    return all_admissible ? 0 : 1;
}

int cmd_lower_bound(double a, const std::string& constants_path,
                    const std::string& format, const std::string& out_path) {
    leastprime::LowerBoundExternals ext;
    double c6ext = 11.7;
    if (!constants_path.empty()) {
        const auto cfg = io::parse_config_file(constants_path);
        auto pick = [&](const char* key) -> std::optional<double> {
            const auto it = cfg.find(key);
            if (it == cfg.end()) return std::nullopt;
            return std::stod(it->second);
        };
        ext.c35 = pick("c35");
        ext.c39 = pick("c39");
        ext.c40 = pick("c40");
        ext.c41 = pick("c41");
        if (const auto v = pick("c6")) c6ext = *v;
    }
    const auto r = leastprime::lower_bound_m(a, ext, c6ext);
    io::Table table;
    table.columns = {"a", "m", "status"};
    table.add_row({a, io::Cell(r.m, io::Rounding::Down),
                   r.approximate ? "approximate" : "exact"});
    emit(table, format, out_path);
    return 0;
}

int cmd_turan(int trials, uint64_t seed, const std::string& format,
              const std::string& out_path) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(1, 64);
    std::uniform_real_distribution<double> mod_dist(0.0, 1.0);
    std::uniform_real_distribution<double> arg_dist(0.0,
                                                    2.0 * std::numbers::pi);
    const double eps_choices[] = {0.1, 1.0, 5.57, 5.97};
    int failures = 0;
    int max_j0 = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = size_dist(rng);
        std::vector<std::complex<double>> zs;
        zs.push_back(std::polar(1.0, arg_dist(rng)));
        for (int i = 1; i < n; ++i) {
            zs.push_back(std::polar(mod_dist(rng), arg_dist(rng)));
        }
        std::sort(zs.begin(), zs.end(), [](const auto& a, const auto& b) {
            return std::abs(a) > std::abs(b);
        });
        const double eps = eps_choices[rng() % 4];
        try {
            const auto w = turan::turan_witness({zs, eps});
            max_j0 = std::max(max_j0, w.j0);
        } catch (const std::runtime_error&) {
            ++failures;
        }
    }
    io::Table table;
    table.columns = {"trials", "failures", "max_j0"};
    table.add_row({static_cast<long long>(trials),
                   static_cast<long long>(failures),
                   static_cast<long long>(max_j0)});
    emit(table, format, out_path);
    return failures == 0 ? 0 : 1;
}

io::Table corpus_table(const frobenius::CorpusReport& report) {
    io::Table table;
    table.columns = {"degree", "shape", "value", "disc", "sigma", "p"};
    for (const auto& row : report.rows) {
        auto add = [&](const char* shape, const frobenius::WorstCase& w) {
            table.add_row({row.degree, shape,
                           io::Cell(w.value, io::Rounding::Up),
                           w.discriminant.get_str(),
                           static_cast<long long>(w.sigma_index),
                           static_cast<long long>(w.p)});
        };
        add("A", row.A);
        add("B", row.B);
        add("C", row.C);
    }
    return table;
}

int cmd_verify_quadratic(long height, uint64_t ceiling,
                         const std::string& format,
                         const std::string& out_path) {
    const auto corpus = frobenius::quadratic_corpus(height);
    const auto report = frobenius::corpus_scan(corpus, ceiling);
    emit(corpus_table(report), format, out_path);
    return report.failures.empty() ? 0 : 1;
}

int cmd_verify_corpus(const std::string& path, uint64_t ceiling,
                      const std::string& format, const std::string& out_path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("corpus", "cannot open " + path);
    std::vector<frobenius::FieldSpec> corpus;
    try {
        corpus = frobenius::parse_corpus(in);
    } catch (const std::runtime_error& e) {
        std::cerr << "cheb: " << e.what() << "\n";
        return 2;
    }
    const auto report = frobenius::corpus_scan(corpus, ceiling);
    emit(corpus_table(report), format, out_path);
    return report.failures.empty() ? 0 : 1;
}

int cmd_selfcheck() {
    int failed = 0;
    auto check = [&](const char* name, bool ok) {
        std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
        if (!ok) ++failed;
    };

    check("digamma(1) = -gamma",
          std::abs(numerics::digamma(1.0) + 0.57721566490153286) < 1e-12);
    check("quadrature: int_0^1 x^2 dx = 1/3",
          std::abs(numerics::integrate([](double x) { return x * x; }, 0.0,
                                       1.0) -
                   1.0 / 3.0) < 1e-12);
    check("quadrature: int_1^inf dr/r^2 = 1",
          std::abs(numerics::integrate(
                       [](double r) { return 1.0 / (r * r); }, 1.0, INFINITY) -
                   1.0) < 1e-8);

    bool profiles_ok = true;
    for (const auto& p : profiles::builtin_profiles()) {
        profiles_ok = profiles_ok && p.n0 <= 2.0 * p.L0 / std::log(3.0) + 1e-12;
    }
    check("profiles: Minkowski constraint", profiles_ok);

    const auto& p9 = profiles::builtin_profiles()[7];
    check("zero-density: c6 integral matches closed form",
          std::abs(zerodensity::c6_integral_part(p9) -
                   ((1.0 - std::log(2.0 * std::numbers::pi * std::numbers::e)) /
                        std::numbers::pi +
                    0.296 / 4.0 + (3.971 + 3.969 / p9.n0) / 2.0)) < 1e-8);
    check("alpha3 = 36.7595",
          std::abs(leastprime::alpha3_const() - 36.7595) < 1e-3);

    bool zfr_ok = true;
    for (int i = 0; i <= 100; ++i) {
        zfr_ok = zfr_ok &&
                 !repulsion::zfr_enlarged_check(2.0, 0.6, 1.7 + 8.3 * i / 100.0);
        zfr_ok = zfr_ok && !repulsion::zfr_enlarged_check(
                               3.5, 0.6, 1.24 + 8.76 * i / 100.0);
    }
    check("zero-free box inequality fails on the claimed ranges", zfr_ok);

    bool turan_ok = true;
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> mod_dist(0.0, 1.0);
    std::uniform_real_distribution<double> arg_dist(0.0,
                                                    2.0 * std::numbers::pi);
    for (int t = 0; t < 1000 && turan_ok; ++t) {
        std::vector<std::complex<double>> zs{std::polar(1.0, arg_dist(rng))};
        const int n = 1 + static_cast<int>(rng() % 32);
        for (int i = 1; i < n; ++i) {
            zs.push_back(std::polar(mod_dist(rng), arg_dist(rng)));
        }
        std::sort(zs.begin(), zs.end(), [](const auto& a, const auto& b) {
            return std::abs(a) > std::abs(b);
        });
        try {
            turan::turan_witness({zs, 1.0});
        } catch (const std::runtime_error&) {
            turan_ok = false;
        }
    }
    check("turan witness exists on 1000 random instances", turan_ok);

    const auto spec = kernels::KernelSpec::squared_difference(100.0, 2.0);
    bool kernel_ok = true;
    for (double u : kernels::inversion_samples(spec, 4)) {
        kernel_ok = kernel_ok && std::abs(kernels::k_hat(spec, u) -
                                          kernels::k_hat_numeric(spec, u)) <
                                     1e-6;
    }
    check("kernel Mellin inversion", kernel_ok);

    check("poly_disc(x^3 - x - 1) = -23",
          frobenius::poly_disc({-1, -1, 0, 1}) == -23);
    const auto corpus = frobenius::quadratic_corpus(16);
    check("quadratic corpus height 16 has 10 fields", corpus.size() == 10);

    std::cout << (failed == 0 ? "selfcheck: all checks passed\n"
                              : "selfcheck: FAILURES\n");
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit Chebotarev constants: tables and verification"};
    app.require_subcommand(1);
    app.set_config("--config")->description("key = value config file");

    std::string format = "csv", out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "output path (default stdout)");

    std::optional<int> profile;
    bool all_profiles = false;
    double eta = 1.0;
    auto* rep = app.add_subcommand("repulsion", "zero-repulsion constant table");
    rep->add_option("--profile", profile, "single degree class");
    rep->add_flag("--all", all_profiles, "all built-in profiles (default)");
    rep->add_option("--eta", eta, "repulsion parameter eta")
        ->check(CLI::Range(1e-9, 1.0))
        ->capture_default_str();

    bool optimize_flag = false, paper_params = false;
    auto* lp = app.add_subcommand("least-prime", "least-prime exponent table");
    lp->add_option("--profile", profile, "single degree class");
    lp->add_flag("--all", all_profiles, "all built-in profiles (default)");
    lp->add_flag("--optimize", optimize_flag,
                 "per-degree parameter optimization (default)");
    lp->add_flag("--paper-params", paper_params,
                 "evaluate at the fixed worked-example parameters");

    double a_param = 2.0;
    std::string constants_path;
    auto* lb = app.add_subcommand("lower-bound", "density lower bound m");
    lb->add_option("--a", a_param, "kernel parameter a in (1,2]")->required();
    lb->add_option("--constants", constants_path,
                   "config file with exact c35, c39, c40, c41");

    int trials = 10000;
    uint64_t seed = 1;
    auto* tu = app.add_subcommand("turan", "power-sum witness property run");
    tu->add_option("--trials", trials, "instance count")->capture_default_str();
    tu->add_option("--seed", seed, "RNG seed")->capture_default_str();

    long height = 100000;
    uint64_t ceiling = 100000000ULL;
    auto* vq = app.add_subcommand("verify-quadratic",
                                  "quadratic-field Frobenius scan");
    vq->add_option("--height", height, "max |fundamental discriminant|")
        ->capture_default_str();
    vq->add_option("--ceiling", ceiling, "prime search ceiling")
        ->capture_default_str();

    std::string corpus_path;
    auto* vc = app.add_subcommand("verify-corpus", "scan a corpus file");
    vc->add_option("corpus", corpus_path, "corpus file")->required();
    vc->add_option("--ceiling", ceiling, "prime search ceiling");

    app.add_subcommand("selfcheck", "run the library property suite");
    // Let global flags (--format, --out, --config) appear after the
    // subcommand as well.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    // Validate any config file up front for line-precise diagnostics; CLI11
    // itself is lenient about malformed lines.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                io::parse_config_file(argv[i + 1]);
            } catch (const std::runtime_error& e) {
                std::cerr << "cheb: " << e.what() << "\n";
                return 2;
            }
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (rep->parsed()) return cmd_repulsion(profile, eta, format, out_path);
        if (lp->parsed()) {
            if (optimize_flag && paper_params) {
                std::cerr << "cheb: --optimize and --paper-params are exclusive\n";
                return 2;
            }
            return cmd_least_prime(profile, paper_params, format, out_path);
        }
        if (lb->parsed()) {
            return cmd_lower_bound(a_param, constants_path, format, out_path);
        }
        if (tu->parsed()) return cmd_turan(trials, seed, format, out_path);
        if (vq->parsed()) {
            return cmd_verify_quadratic(height, ceiling, format, out_path);
        }
        if (vc->parsed()) {
            return cmd_verify_corpus(corpus_path, ceiling, format, out_path);
        }
        return cmd_selfcheck();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "cheb: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "cheb: " << e.what() << "\n";
        return 1;
    }
}
