#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stochsched/job_model.hpp"
#include "stochsched/list_engine.hpp"
#include "stochsched/policies.hpp"

namespace stochsched {

struct OracleCaps {
    int max_jobs = 10;
    int max_machines = 4;
    int max_permutation_jobs = 9;
};

struct OracleResult {
    double value = 0.0;
};

// Expected-total-completion DP over adaptive non-idling policies for
// Bernoulli/Deterministic jobs. A policy node is (machine loads, set of
// unscheduled jobs); scheduling job j on the least-loaded machine branches
// on the coin of j. The canonical optimum breaks ties among optimal jobs
// by smallest (s_j, p_j, id), which makes the replayed policy start each
// size class in ascending probability order.
class AdaptiveOracle {
public:
    explicit AdaptiveOracle(Instance instance, OracleCaps caps = {}, bool constrained = false);

    double value();

    // Replays the canonical policy against a fixed realization.
    Trace trace(const Realization& realization);

private:
    using LoadKey = std::vector<std::int64_t>;

    double solve(const std::vector<double>& sorted_loads, std::uint32_t done);
    int best_job(const std::vector<double>& sorted_loads, std::uint32_t done);
    bool choosable(int job, std::uint32_t done) const;

    Instance instance_;
    OracleCaps caps_;
    bool constrained_;
    std::unordered_map<std::string, double> memo_;
};

OracleResult opt_adaptive_completion(const Instance& instance, OracleCaps caps = {});

Trace opt_adaptive_trace(const Instance& instance, const Realization& realization,
                         OracleCaps caps = {});

// Minimum final free time over all list orders of the given deterministic
// jobs (brute force; zero-size jobs cannot affect the result and are
// skipped when permuting).
double opt_free_time_det(const std::vector<std::pair<int, double>>& jobs, int m,
                         const LoadVector& initial, int cap = 9);

// F~*(J_k) for k = 1..K: per k, the minimum free time over batch-respecting
// orders of J_k under the given realization (machines start empty).
std::vector<double> opt_batch_free_times(const BatchPlan& plan, const Instance& instance,
                                         const Realization& realization, int m, int cap = 9);

// (constrained DP value, unconstrained DP value); the constrained DP may
// start a job only after every same-size job of smaller probability.
// The exchange argument predicts equality.
std::pair<double, double> check_exchange_property(const Instance& instance, OracleCaps caps = {});

}  // namespace stochsched
