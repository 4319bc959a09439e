#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spencer/cartan.hpp"
#include "spencer/claims.hpp"
#include "spencer/liealg.hpp"
#include "spencer/prolong.hpp"
#include "spencer/rng.hpp"

namespace {

using spencer::CartanKernelMode;
using spencer::DualFunctional;
using spencer::LeibnizConvention;
using spencer::LieAlgebra;

nlohmann::json read_json_file(const std::string& path, const std::string& what) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(what + ": cannot open file \"" + path + "\"");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(what + ": malformed JSON in \"" + path + "\": " + e.what());
    }
    return doc;
}

LieAlgebra load_algebra(const std::string& builtin, const std::string& spec_path) {
    if (!builtin.empty() && !spec_path.empty())
        throw std::invalid_argument("algebra: pass either --algebra or --spec, not both");
    if (!builtin.empty()) return LieAlgebra::builtin(builtin);
    if (!spec_path.empty()) return LieAlgebra::from_json(read_json_file(spec_path, "algebra-spec"));
    throw std::invalid_argument("algebra: one of --algebra or --spec is required");
}

DualFunctional load_lambda(const std::string& path, std::size_t dim) {
    if (path.empty()) throw std::invalid_argument("lambda: --lambda FILE is required");
    return spencer::lambda_from_json(read_json_file(path, "lambda-spec"), dim);
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("WORKBENCH_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("seed: WORKBENCH_SEED is not an integer");
        }
    }
    return cli_seed;
}

void emit(const nlohmann::ordered_json& doc, const std::string& json_path) {
    if (json_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(json_path);
    if (!out) throw std::invalid_argument("output: cannot write \"" + json_path + "\"");
    out << doc.dump(2) << "\n";
}

int run_verify(const std::string& suite, const std::string& convention, const std::string& json_path,
               std::uint64_t seed, const std::string& snapshot_path, bool update_snapshots) {
    spencer::RunOptions opts;
    opts.suite = suite;
    if (!convention.empty()) opts.convention = spencer::convention_from_string(convention);
    opts.seed = effective_seed(seed);
    opts.update_snapshots = update_snapshots;
    std::ifstream snap_in(snapshot_path);
    if (snap_in) {
        try {
            snap_in >> opts.snapshots;
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument("snapshot: malformed JSON in \"" + snapshot_path +
                                        "\": " + e.what());
        }
    }

    spencer::RunOutcome outcome = spencer::run_claims(opts);
    for (const auto& r : outcome.results)
        std::cout << "[" << to_string(r.status) << "] " << r.id << " (" << to_string(r.provenance)
                  << ")\n";

    nlohmann::ordered_json report =
        spencer::make_report(suite, convention.empty() ? "both" : convention, outcome.results);
    std::cout << "summary: " << report["summary"].dump() << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::invalid_argument("output: cannot write \"" + json_path + "\"");
        out << report.dump(2) << "\n";
    }
    if (outcome.snapshots_changed) {
        std::ofstream out(snapshot_path);
        if (!out) throw std::invalid_argument("snapshot: cannot write \"" + snapshot_path + "\"");
        out << outcome.snapshots.dump(2) << "\n";
        std::cout << "pinned new snapshot entries to " << snapshot_path << "\n";
    }
    return spencer::refuted_paper_claims(outcome.results) == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic workbench for constraint-coupled Spencer operators"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Run the claim registry and emit a report");
    std::string suite = "all", convention, json_path, snapshot_path = "data/snapshots.json";
    std::uint64_t seed = 7;
    bool update_snapshots = false;
    verify->add_option("--suite", suite, "Claim suite")
        ->check(CLI::IsMember(spencer::claim_suites()));
    verify->add_option("--convention", convention, "Restrict convention-specific claims")
        ->check(CLI::IsMember({"graded", "ungraded"}));
    verify->add_option("--json", json_path, "Write the report JSON to this path");
    verify->add_option("--seed", seed, "Master seed (env WORKBENCH_SEED overrides)");
    verify->add_option("--snapshot", snapshot_path, "Pinned snapshot file");
    verify->add_flag("--update-snapshots", update_snapshots, "Pin missing snapshot entries");

    // kernel
    auto* kernel = app.add_subcommand("kernel", "Compute a kernel basis");
    std::string k_algebra, k_spec, k_lambda, k_mode = "spencer", k_conv = "ungraded", k_json;
    std::size_t k_degree = 1;
    kernel->add_option("--algebra", k_algebra, "Built-in algebra name (sl2, su2c, su2c-rooted)");
    kernel->add_option("--spec", k_spec, "Algebra-spec JSON file");
    kernel->add_option("--lambda", k_lambda, "Lambda-spec JSON file")->required();
    kernel->add_option("--degree", k_degree, "Tensor degree k")->required();
    kernel->add_option("--mode", k_mode, "Kernel mode")
        ->check(CLI::IsMember({"spencer", "linearized", "full"}));
    kernel->add_option("--convention", k_conv, "Leibniz convention")
        ->check(CLI::IsMember({"graded", "ungraded"}));
    kernel->add_option("--json", k_json, "Write to this path instead of stdout");

    // operator
    auto* op = app.add_subcommand("operator", "Dump an exact operator matrix");
    std::string o_algebra, o_spec, o_lambda, o_conv = "ungraded", o_json;
    std::size_t o_degree = 1;
    op->add_option("--algebra", o_algebra, "Built-in algebra name");
    op->add_option("--spec", o_spec, "Algebra-spec JSON file");
    op->add_option("--lambda", o_lambda, "Lambda-spec JSON file")->required();
    op->add_option("--degree", o_degree, "Source degree k")->required();
    op->add_option("--convention", o_conv, "Leibniz convention")
        ->check(CLI::IsMember({"graded", "ungraded"}));
    op->add_option("--json", o_json, "Write to this path instead of stdout");

    // table
    auto* table = app.add_subcommand("table", "Kernel dimension table over sampled lambdas");
    std::string t_algebra, t_spec, t_degrees = "1..3", t_mode = "linearized", t_conv = "ungraded",
                t_json;
    std::size_t t_samples = 5;
    std::uint64_t t_seed = 7;
    table->add_option("--algebra", t_algebra, "Built-in algebra name");
    table->add_option("--spec", t_spec, "Algebra-spec JSON file");
    table->add_option("--degrees", t_degrees, "Degree range A..B");
    table->add_option("--samples", t_samples, "Number of sampled lambdas");
    table->add_option("--seed", t_seed, "Sampling seed (env WORKBENCH_SEED overrides)");
    table->add_option("--mode", t_mode, "Kernel mode")
        ->check(CLI::IsMember({"linearized", "full"}));
    table->add_option("--convention", t_conv, "Leibniz convention")
        ->check(CLI::IsMember({"graded", "ungraded"}));
    table->add_option("--json", t_json, "Write to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed())
            return run_verify(suite, convention, json_path, seed, snapshot_path, update_snapshots);

        if (kernel->parsed()) {
            LieAlgebra alg = load_algebra(k_algebra, k_spec);
            DualFunctional lambda = load_lambda(k_lambda, alg.dim());
            LeibnizConvention conv = spencer::convention_from_string(k_conv);
            if (k_mode == "spencer") {
                auto basis = spencer::spencer_kernel(alg, lambda, k_degree, conv);
                emit(spencer::spencer_kernel_to_json(alg, lambda, basis, conv), k_json);
            } else {
                auto result = spencer::cartan_kernel(alg, lambda, k_degree,
                                                     spencer::cartan_mode_from_string(k_mode), conv);
                emit(spencer::cartan_kernel_to_json(alg, lambda, result, conv), k_json);
            }
            return 0;
        }

        if (op->parsed()) {
            LieAlgebra alg = load_algebra(o_algebra, o_spec);
            DualFunctional lambda = load_lambda(o_lambda, alg.dim());
            auto matrix =
                spencer::operator_matrix(alg, lambda, o_degree, spencer::convention_from_string(o_conv));
            emit(spencer::operator_to_json(alg, matrix), o_json);
            return 0;
        }

        if (table->parsed()) {
            LieAlgebra alg = load_algebra(t_algebra, t_spec);
            auto sep = t_degrees.find("..");
            if (sep == std::string::npos)
                throw std::invalid_argument("degrees: expected range A..B, got \"" + t_degrees + "\"");
            std::size_t k_from = std::stoul(t_degrees.substr(0, sep));
            std::size_t k_to = std::stoul(t_degrees.substr(sep + 2));
            if (k_from < 1 || k_to < k_from)
                throw std::invalid_argument("degrees: invalid range \"" + t_degrees + "\"");
            spencer::Rng rng(effective_seed(t_seed));
            std::vector<DualFunctional> samples;
            for (std::size_t i = 0; i < t_samples; ++i) samples.push_back(rng.lambda(alg.dim()));
            auto rows = spencer::dimension_table(alg, k_from, k_to, samples,
                                                 spencer::cartan_mode_from_string(t_mode),
                                                 spencer::convention_from_string(t_conv));
            emit(spencer::table_to_json(rows), t_json);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
