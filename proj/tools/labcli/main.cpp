#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fo52/errors.hpp"
#include "fo52/serialize.hpp"
#include "labcli/experiments.hpp"

namespace {

std::string default_matrix_path() {
    const char* dir = std::getenv("FO52_CACHE_DIR");
    return std::string(dir != nullptr ? dir : ".") + "/pi52.json";
}

void emit(const fo52lab::ExperimentReport& rep, const std::string& out_path,
          const std::string& csv_path) {
    const std::string j = rep.to_json();
    if (out_path.empty())
        std::cout << j;
    else
        fo52::save_text_file(out_path, j);
    if (!csv_path.empty()) fo52::save_text_file(csv_path, rep.to_csv());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic laboratory: quadratic Poisson brackets on P^4 "
                 "from 5-dim subspaces of the second exterior power of Q^5"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path, csv_path;
    unsigned threads = 1;
    app.add_option("--out", out_path, "write the JSON report to this file instead of stdout");
    app.add_option("--csv", csv_path, "also write the per-trial rows as CSV");
    app.add_option("--threads", threads, "worker threads for parallel sections")
        ->check(CLI::Range(1u, 64u));

    std::uint64_t seed = 1;
    unsigned k = 4, n = 20, points = 100, samples = 30;
    std::uint64_t grid_seed = 7;
    std::string family = "U6";
    std::string pi52_path;
    std::string matrix_path;

    CLI::App* jac = app.add_subcommand("jacobi", "class([Pi,Pi]) = 0 for a fixture seed");
    jac->add_option("--seed", seed, "fixture seed")->capture_default_str();

    CLI::App* compat = app.add_subcommand(
        "compat", "bracket compatibility for a pair with dim(W meet W') = k");
    compat->add_option("--seed", seed, "pair seed")->capture_default_str();
    compat->add_option("--k", k, "shared dimension, 0..5")->check(CLI::Range(0u, 5u));

    CLI::App* conjd = app.add_subcommand(
        "conjecture-d", "kernel comparison: T_W + ker(pi52) against ker L");
    conjd->add_option("--seed", seed, "fixture seed")->capture_default_str();
    conjd->add_option("--pi52", pi52_path,
                      "rank-certified pi52 matrix (default: $FO52_CACHE_DIR/pi52.json)");

    CLI::App* span = app.add_subcommand(
        "span", "pairwise compatibility and class span inside a U6/K4 family");
    span->add_option("--seed", seed, "family seed")->capture_default_str();
    span->add_option("--family", family, "U6 or K4")->capture_default_str();
    span->add_option("--n", n, "number of sampled subspaces")->capture_default_str();

    CLI::App* strat = app.add_subcommand(
        "stratify", "rank vs quintic vs zero-locus coherence at sampled points");
    strat->add_option("--seed", seed, "fixture seed")->capture_default_str();
    strat->add_option("--points", points, "random sample count")->capture_default_str();

    CLI::App* tang = app.add_subcommand(
        "tangency", "tangent lines of shared-K pairs land in the partner distribution");
    tang->add_option("--seed", seed, "pair seed base")->capture_default_str();

    CLI::App* pi52 = app.add_subcommand("pi52", "build or verify the persisted pi52 matrix");
    pi52->require_subcommand(1);
    pi52->fallthrough();
    CLI::App* build = pi52->add_subcommand("build", "interpolate all 252 columns and save");
    build->add_option("--grid-seed", grid_seed, "sample grid seed")->capture_default_str();
    build->add_option("--samples", samples, "initial sample count")->capture_default_str();
    build->add_option("--matrix", matrix_path,
                      "output path (default: $FO52_CACHE_DIR/pi52.json)");
    CLI::App* verify = pi52->add_subcommand("verify", "re-check a persisted matrix");
    verify->add_option("--pi52", pi52_path,
                       "matrix path (default: $FO52_CACHE_DIR/pi52.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();
        fo52lab::ExperimentReport rep;
        if (*jac) {
            rep = fo52lab::run_jacobi(seed);
        } else if (*compat) {
            rep = fo52lab::run_compat(seed, k);
        } else if (*conjd) {
            const std::string path = pi52_path.empty() ? default_matrix_path() : pi52_path;
            const fo52::Pi52Map m = fo52::pi52_from_json(fo52::load_text_file(path));
            rep = fo52lab::run_conjecture_d(seed, m, threads);
        } else if (*span) {
            rep = fo52lab::run_span(seed, family, n, threads);
        } else if (*strat) {
            rep = fo52lab::run_stratify(seed, points);
        } else if (*tang) {
            rep = fo52lab::run_tangency(seed);
        } else if (*pi52) {
            if (*build) {
                const std::string path =
                    matrix_path.empty() ? default_matrix_path() : matrix_path;
                rep = fo52lab::run_pi52_build(grid_seed, samples, threads, path);
            } else {
                const std::string path = pi52_path.empty() ? default_matrix_path() : pi52_path;
                rep = fo52lab::run_pi52_verify(path);
            }
        }
        rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        emit(rep, out_path, csv_path);
        return rep.anomalies > 0 ? 3 : 0;
    } catch (const fo52::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 4;
    } catch (const fo52::Error& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
