#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "stochsched/job_model.hpp"
#include "stochsched/list_engine.hpp"
#include "stochsched/oracle.hpp"
#include "stochsched/policies.hpp"

namespace stochsched {

enum class Metric { FreeTime, TotalCompletion, WeightedFreeTime, Makespan };

Metric metric_from_name(const std::string& name);
std::string metric_name(Metric metric);

// Produces the list order for one trial; receives the realization (for
// clairvoyant rules) and a per-trial stream seed (for randomized rules).
using OrderRule =
    std::function<ListOrder(const Instance&, const Realization&, std::uint64_t)>;

// Registry keyed by the CLI algorithm names: spt, size-order, random,
// sept, stochfree, rescale-stochfree, halve, bft:<rule>.
OrderRule order_rule_from_name(const std::string& name);
std::vector<std::string> known_order_rules();

struct MonteCarloEstimate {
    double mean = 0.0;
    double ci95 = 0.0;  // half-width
    int trials = 0;
};

MonteCarloEstimate monte_carlo_metric(const Instance& instance, const OrderRule& rule,
                                      Metric metric, int trials, std::uint64_t seed);

struct RatioReport {
    std::string instance_id;
    std::string algorithm;
    Metric metric = Metric::TotalCompletion;
    MonteCarloEstimate estimate;
    double baseline = 0.0;
    double ratio = 0.0;
    std::uint64_t seed = 0;
};

struct SuiteOutcome {
    std::string check;
    int cases = 0;
    std::vector<std::string> failures;  // human-readable payloads with (seed, index)
    // max of (lhs - bound) over all checks; <= 0 when passing, -inf when
    // the suite ran no checks
    double worst_slack = -std::numeric_limits<double>::infinity();

    bool passed() const { return failures.empty(); }
};

struct SuiteConfig {
    std::uint64_t seed = 7;
    int spt_cases = 200;
    int bernoulli_cases = 100;
    int bft_cases = 50;
    int monotonicity_cases = 1000;
    int random_list_cases = 50;
    int random_list_orders = 2000;
    int exchange_cases = 100;
    int containment_structural_cases = 500;
    int containment_oracle_cases = 50;
    int halving_cases = 200;
    int sept_cases = 100;
    int free_vol_cases = 30;
    double sensitivity_c = 0.5;
    int sensitivity_trials = 4000;
};

SuiteOutcome verify_spt_four_approx(const SuiteConfig& config);
SuiteOutcome verify_bernoulli_per_realization(const SuiteConfig& config);
SuiteOutcome verify_bft_five_approx(const SuiteConfig& config);
SuiteOutcome verify_ft_to_bft(const SuiteConfig& config);
SuiteOutcome verify_monotonicity(const SuiteConfig& config);
SuiteOutcome verify_random_list_logm(const SuiteConfig& config);
SuiteOutcome verify_exchange(const SuiteConfig& config);
SuiteOutcome verify_batch_containment(const SuiteConfig& config);
SuiteOutcome verify_halving(const SuiteConfig& config);
SuiteOutcome verify_sept_optimality(const SuiteConfig& config);
SuiteOutcome verify_free_vol_inequality(const SuiteConfig& config);
// Lower bound F* >= Vol(S)/(2m) checked on every oracle free-time
// query issued by the SPT/Bernoulli/BFT suites.
SuiteOutcome verify_small_volume_bound(const SuiteConfig& config);
SuiteOutcome verify_sensitivity_sweep(const SuiteConfig& config);

// All suites keyed by CLI name, in canonical order.
std::vector<std::pair<std::string, std::function<SuiteOutcome(const SuiteConfig&)>>>
suite_registry();

struct SensitivityRow {
    int machines = 0;
    double expected_full = 0.0;  // E[total completion] at m machines
    double expected_half = 0.0;  // at m/2 machines
    double ratio = 0.0;
};

std::vector<SensitivityRow> sensitivity_sweep(const std::vector<int>& m_list, double c,
                                              int trials, std::uint64_t seed);

struct WeightedFreeTimeProxyReport {
    double expected_completion = 0.0;    // E[total completion] of StochFree
    double expected_weighted_free = 0.0; // E[sum_k w_k F(J_k)] of StochFree
    std::optional<double> expected_opt;  // adaptive oracle value when within caps
};

WeightedFreeTimeProxyReport report_weighted_free_time_proxy(const Instance& instance, int trials,
                                                            std::uint64_t seed);

// Suite instance generators (also used by the CLI's `gen` command).
Instance gen_random_deterministic(std::uint64_t seed, int max_n = 8, int min_m = 2, int max_m = 4,
                                  int max_size = 6);
Instance gen_random_bernoulli(std::uint64_t seed, int max_n = 8, int min_m = 2, int max_m = 4,
                              int max_size = 6);

}  // namespace stochsched
