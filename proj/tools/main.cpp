#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stochsched/experiments.hpp"
#include "stochsched/io.hpp"
#include "stochsched/oracle.hpp"
#include "stochsched/policies.hpp"
#include "stochsched/rng.hpp"

namespace {

using namespace stochsched;

constexpr int kExitPass = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

Instance gen_exact_bernoulli(int n, int m, std::uint64_t seed, int max_size) {
    Rng rng(seed);
    Instance inst;
    inst.machines = m;
    for (int i = 0; i < n; ++i) {
        const double size = 1.0 + static_cast<double>(rng.next_below(max_size));
        const double prob = 0.1 * static_cast<double>(1 + rng.next_below(9));
        inst.jobs.push_back({i, Distribution::bernoulli(size, prob)});
    }
    return inst;
}

Instance gen_exact_deterministic(int n, int m, std::uint64_t seed, int max_size) {
    Rng rng(seed);
    Instance inst;
    inst.machines = m;
    for (int i = 0; i < n; ++i) {
        const double size = 1.0 + static_cast<double>(rng.next_below(max_size));
        inst.jobs.push_back({i, Distribution::deterministic(size)});
    }
    return inst;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ArgumentError("cannot write output file: " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stochastic scheduling laboratory"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string gen_kind;
    std::string gen_out;
    int gen_m = 2;
    int gen_n = 4;
    double gen_c = 0.5;
    int gen_max_size = 6;
    std::uint64_t gen_seed = 0;
    gen->add_option("--kind", gen_kind,
                    "free-time-gap | sensitivity | random-bernoulli | random-deterministic")
        ->required();
    gen->add_option("--m", gen_m, "machine count");
    gen->add_option("--n", gen_n, "job count (random kinds)");
    gen->add_option("--c", gen_c, "exponent for the sensitivity construction");
    gen->add_option("--max-size", gen_max_size, "largest integer size (random kinds)");
    gen->add_option("--seed", gen_seed, "seed (random kinds)");
    gen->add_option("--out", gen_out, "output path (stdout when omitted)");

    // --- run ---
    auto* run = app.add_subcommand("run", "monte carlo estimate for one algorithm");
    std::string run_instance, run_alg, run_metric = "total_completion", run_format = "csv", run_out;
    int run_trials = 1000;
    std::uint64_t run_seed = 0;
    run->add_option("--instance", run_instance, "instance JSON path")->required();
    run->add_option("--alg", run_alg, "algorithm name")->required();
    run->add_option("--metric", run_metric,
                    "free_time | total_completion | weighted_free_time | makespan");
    run->add_option("--trials", run_trials, "number of trials")->check(CLI::PositiveNumber);
    run->add_option("--seed", run_seed, "master seed")->required();
    run->add_option("--format", run_format, "csv | json");
    run->add_option("--out", run_out, "output path (stdout when omitted)");

    // --- compare ---
    auto* compare = app.add_subcommand("compare", "run two algorithms and emit their ratio");
    std::string cmp_instance, cmp_alg, cmp_baseline, cmp_metric = "total_completion", cmp_out;
    int cmp_trials = 1000;
    std::uint64_t cmp_seed = 0;
    compare->add_option("--instance", cmp_instance)->required();
    compare->add_option("--alg", cmp_alg, "algorithm under test")->required();
    compare->add_option("--baseline", cmp_baseline, "baseline algorithm")->required();
    compare->add_option("--metric", cmp_metric);
    compare->add_option("--trials", cmp_trials)->check(CLI::PositiveNumber);
    compare->add_option("--seed", cmp_seed)->required();
    compare->add_option("--out", cmp_out);

    // --- oracle ---
    auto* oracle = app.add_subcommand("oracle", "exact small-instance baselines");
    std::string oracle_instance, oracle_mode;
    std::uint64_t oracle_realization_seed = 0;
    int oracle_max_jobs = 10, oracle_max_machines = 4, oracle_perm_cap = 9;
    oracle->add_option("--instance", oracle_instance)->required();
    oracle->add_option("--mode", oracle_mode, "completion | free-time | batch-free-time")->required();
    oracle->add_option("--realization-seed", oracle_realization_seed,
                       "seed for the realization used by the free-time modes");
    oracle->add_option("--max-jobs", oracle_max_jobs, "DP job cap");
    oracle->add_option("--max-machines", oracle_max_machines, "DP machine cap");
    oracle->add_option("--perm-cap", oracle_perm_cap, "brute-force permutation cap");

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "run guarantee-verification suites");
    std::vector<std::string> verify_suites;
    SuiteConfig config;
    verify->add_option("suites", verify_suites, "suite names, or 'all'")->required();
    verify->add_option("--seed", config.seed, "master seed")->required();
    verify->add_option("--spt-cases", config.spt_cases);
    verify->add_option("--bernoulli-cases", config.bernoulli_cases);
    verify->add_option("--bft-cases", config.bft_cases);
    verify->add_option("--monotonicity-cases", config.monotonicity_cases);
    verify->add_option("--random-list-cases", config.random_list_cases);
    verify->add_option("--random-list-orders", config.random_list_orders);
    verify->add_option("--exchange-cases", config.exchange_cases);
    verify->add_option("--containment-structural-cases", config.containment_structural_cases);
    verify->add_option("--containment-oracle-cases", config.containment_oracle_cases);
    verify->add_option("--halving-cases", config.halving_cases);
    verify->add_option("--sept-cases", config.sept_cases);
    verify->add_option("--free-vol-cases", config.free_vol_cases);
    verify->add_option("--sensitivity-c", config.sensitivity_c);
    verify->add_option("--sensitivity-trials", config.sensitivity_trials);

    try {
        app.parse(argc, argv);

        if (gen->parsed()) {
            Instance inst;
            if (gen_kind == "free-time-gap") {
                inst = gen_free_time_gap_instance(gen_m);
            } else if (gen_kind == "sensitivity") {
                inst = gen_machine_sensitivity_instance(gen_m, gen_c);
            } else if (gen_kind == "random-bernoulli") {
                inst = gen_exact_bernoulli(gen_n, gen_m, gen_seed, gen_max_size);
            } else if (gen_kind == "random-deterministic") {
                inst = gen_exact_deterministic(gen_n, gen_m, gen_seed, gen_max_size);
            } else {
                std::cerr << "unknown kind: " << gen_kind << "\n";
                return kExitUsage;
            }
            emit(instance_to_json(inst), gen_out);
            return kExitPass;
        }

        if (run->parsed() || compare->parsed()) {
            const bool is_compare = compare->parsed();
            const std::string instance_path = is_compare ? cmp_instance : run_instance;
            const Instance inst = load_instance(instance_path);
            const Metric metric = metric_from_name(is_compare ? cmp_metric : run_metric);
            const int trials = is_compare ? cmp_trials : run_trials;
            const std::uint64_t seed = is_compare ? cmp_seed : run_seed;
            const std::string alg = is_compare ? cmp_alg : run_alg;

            RatioReport report;
            report.instance_id = instance_path;
            report.algorithm = alg;
            report.metric = metric;
            report.seed = seed;
            report.estimate =
                monte_carlo_metric(inst, order_rule_from_name(alg), metric, trials, seed);
            if (is_compare) {
                report.baseline =
                    monte_carlo_metric(inst, order_rule_from_name(cmp_baseline), metric, trials, seed)
                        .mean;
                report.ratio = report.baseline > 0.0 ? report.estimate.mean / report.baseline : 0.0;
            }

            std::ostringstream os;
            if (!is_compare && run_format == "json") {
                os << "{\"instance_id\":\"" << report.instance_id << "\",\"alg\":\""
                   << report.algorithm << "\",\"metric\":\"" << metric_name(report.metric)
                   << "\",\"mean\":" << format_number(report.estimate.mean)
                   << ",\"ci95\":" << format_number(report.estimate.ci95)
                   << ",\"trials\":" << report.estimate.trials << ",\"seed\":" << report.seed
                   << "}\n";
            } else {
                write_report_header(os);
                write_report_row(os, report);
            }
            emit(os.str(), is_compare ? cmp_out : run_out);
            return kExitPass;
        }

        if (oracle->parsed()) {
            const Instance inst = load_instance(oracle_instance);
            OracleCaps caps{oracle_max_jobs, oracle_max_machines, oracle_perm_cap};
            if (oracle_mode == "completion") {
                std::cout << format_number(opt_adaptive_completion(inst, caps).value) << "\n";
            } else if (oracle_mode == "free-time") {
                const Realization r = sample_realization(inst, oracle_realization_seed);
                std::vector<std::pair<int, double>> jobs;
                for (const JobSpec& job : inst.jobs) jobs.emplace_back(job.id, r.size_of(job.id));
                std::cout << format_number(opt_free_time_det(jobs, inst.machines,
                                                             LoadVector::zeros(inst.machines),
                                                             caps.max_permutation_jobs))
                          << "\n";
            } else if (oracle_mode == "batch-free-time") {
                const Realization r = sample_realization(inst, oracle_realization_seed);
                const BatchPlan plan = choose_jobs(inst);
                const std::vector<double> values =
                    opt_batch_free_times(plan, inst, r, inst.machines, caps.max_permutation_jobs);
                for (std::size_t k = 0; k < values.size(); ++k)
                    std::cout << "J_" << k + 1 << "," << format_number(values[k]) << "\n";
            } else {
                std::cerr << "unknown oracle mode: " << oracle_mode << "\n";
                return kExitUsage;
            }
            return kExitPass;
        }

        if (verify->parsed()) {
            const auto registry = suite_registry();
            std::vector<std::string> selected;
            if (verify_suites.size() == 1 && verify_suites[0] == "all") {
                for (const auto& [name, fn] : registry) selected.push_back(name);
            } else {
                for (const std::string& name : verify_suites) {
                    const bool known =
                        std::any_of(registry.begin(), registry.end(),
                                    [&](const auto& entry) { return entry.first == name; });
                    if (!known) {
                        std::cerr << "unknown suite: " << name << "\n";
                        return kExitUsage;
                    }
                    selected.push_back(name);
                }
            }
            bool all_passed = true;
            std::ostringstream os;
            os << "[\n";
            bool first = true;
            for (const auto& [name, fn] : registry) {
                if (std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
                const SuiteOutcome outcome = fn(config);
                all_passed = all_passed && outcome.passed();
                if (!first) os << ",\n";
                first = false;
                os << suite_outcome_to_json(outcome);
            }
            os << "\n]\n";
            std::cout << os.str();
            return all_passed ? kExitPass : kExitSuiteFailure;
        }
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const CapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
