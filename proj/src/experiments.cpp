#include "stochsched/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "stochsched/rng.hpp"

namespace stochsched {

namespace {

constexpr double kSlack = 1e-9;

double final_free_time(const Trace& trace) { return trace.free_times.back(); }

std::vector<std::pair<int, double>> realized_jobs(const Instance& instance,
                                                  const Realization& realization) {
    std::vector<std::pair<int, double>> jobs;
    for (const JobSpec& job : instance.jobs) jobs.emplace_back(job.id, realization.size_of(job.id));
    return jobs;
}

std::uint64_t case_seed(const SuiteConfig& config, std::uint64_t suite_tag, int index) {
    return hash_combine(hash_combine(config.seed, suite_tag), static_cast<std::uint64_t>(index));
}

std::string case_payload(const SuiteConfig& config, int index, const std::string& detail) {
    std::ostringstream os;
    os << "seed=" << config.seed << " case=" << index << " " << detail;
    return os.str();
}

void record(SuiteOutcome& outcome, double slack, const SuiteConfig& config, int index,
            const std::string& detail) {
    outcome.worst_slack = std::max(outcome.worst_slack, slack);
    if (slack > kSlack) outcome.failures.push_back(case_payload(config, index, detail));
}

int ceil_div_pow2(int n, int k) { return (n + (1 << k) - 1) >> k; }

int threads_from_env() {
    if (const char* env = std::getenv("STOCHSCHED_THREADS")) {
        const int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

// Deterministic parallel map: results land in a preallocated slot per index,
// so aggregation order never depends on the thread count.
template <typename Fn>
std::vector<double> parallel_map(int count, const Fn& fn) {
    std::vector<double> out(count);
    const int threads = std::min(threads_from_env(), std::max(1, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) out[i] = fn(i);
        });
    }
    for (std::thread& worker : pool) worker.join();
    return out;
}

std::vector<int> size_rule(const Instance& instance, const std::vector<int>& ids) {
    std::vector<int> out = ids;
    std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
        const double sa = instance.jobs[a].dist.size_param();
        const double sb = instance.jobs[b].dist.size_param();
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

}  // namespace

Metric metric_from_name(const std::string& name) {
    if (name == "free_time") return Metric::FreeTime;
    if (name == "total_completion") return Metric::TotalCompletion;
    if (name == "weighted_free_time") return Metric::WeightedFreeTime;
    if (name == "makespan") return Metric::Makespan;
    throw ArgumentError("unknown metric: " + name);
}

std::string metric_name(Metric metric) {
    switch (metric) {
        case Metric::FreeTime: return "free_time";
        case Metric::TotalCompletion: return "total_completion";
        case Metric::WeightedFreeTime: return "weighted_free_time";
        case Metric::Makespan: return "makespan";
    }
    return "unknown";
}

OrderRule order_rule_from_name(const std::string& name) {
    if (name == "spt")
        return [](const Instance& inst, const Realization& r, std::uint64_t) {
            return spt_order(inst, r);
        };
    if (name == "size-order")
        return [](const Instance& inst, const Realization&, std::uint64_t) {
            return bernoulli_size_order(inst);
        };
    if (name == "random")
        return [](const Instance& inst, const Realization&, std::uint64_t seed) {
            return random_order(inst, seed);
        };
    if (name == "sept")
        return [](const Instance& inst, const Realization&, std::uint64_t) { return sept_order(inst); };
    if (name == "stochfree")
        return [](const Instance& inst, const Realization&, std::uint64_t) {
            return stoch_free_order(inst);
        };
    if (name == "rescale-stochfree")
        return [](const Instance& inst, const Realization&, std::uint64_t) {
            return rescale_wrapper_order(inst);
        };
    if (name == "halve")
        return [](const Instance& inst, const Realization& r, std::uint64_t) {
            return halve_machines_order(inst, r);
        };
    if (name.rfind("bft:", 0) == 0) {
        const std::string rule_name = name.substr(4);
        BatchRule rule;
        if (rule_name == "size") {
            rule = size_rule;
        } else if (rule_name == "sept") {
            rule = [](const Instance& inst, const std::vector<int>& ids) {
                std::vector<int> out = ids;
                std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
                    const double ma = inst.jobs[a].dist.mean();
                    const double mb = inst.jobs[b].dist.mean();
                    if (ma != mb) return ma < mb;
                    return a < b;
                });
                return out;
            };
        } else if (rule_name == "id") {
            rule = [](const Instance&, const std::vector<int>& ids) { return ids; };
        } else {
            throw ArgumentError("unknown bft rule: " + rule_name);
        }
        return [rule](const Instance& inst, const Realization&, std::uint64_t) {
            const BatchPlan plan = choose_jobs(inst);
            ListOrder order = bft_from_ft(inst, plan, rule);
            order.order.insert(order.order.end(), plan.leftover.begin(), plan.leftover.end());
            return order;
        };
    }
    throw ArgumentError("unknown algorithm: " + name);
}

std::vector<std::string> known_order_rules() {
    return {"spt",       "size-order",        "random", "sept",
            "stochfree", "rescale-stochfree", "halve",  "bft:size",
            "bft:sept",  "bft:id"};
}

MonteCarloEstimate monte_carlo_metric(const Instance& instance, const OrderRule& rule,
                                      Metric metric, int trials, std::uint64_t seed) {
    if (trials < 1) throw ArgumentError("monte carlo needs trials >= 1");
    instance.validate();
    const std::vector<double> values = parallel_map(trials, [&](int trial) {
        const std::uint64_t trial_seed = hash_combine(seed, static_cast<std::uint64_t>(trial));
        const Realization realization = sample_realization(instance, trial_seed);
        const ListOrder order = rule(instance, realization, hash_combine(trial_seed, 1));
        const Trace trace = run_list_schedule(instance, realization, order);
        switch (metric) {
            case Metric::FreeTime: return final_free_time(trace);
            case Metric::TotalCompletion: return total_completion(trace);
            case Metric::WeightedFreeTime: return weighted_free_time(trace, instance.n());
            case Metric::Makespan: return makespan(trace);
        }
        return 0.0;
    });
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / trials;
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var = trials > 1 ? var / (trials - 1) : 0.0;
    return {mean, 1.96 * std::sqrt(var / trials), trials};
}

Instance gen_random_deterministic(std::uint64_t seed, int max_n, int min_m, int max_m, int max_size) {
    Rng rng(seed);
    Instance inst;
    inst.machines = min_m + static_cast<int>(rng.next_below(max_m - min_m + 1));
    const int n = 1 + static_cast<int>(rng.next_below(max_n));
    for (int i = 0; i < n; ++i) {
        const double size = 1.0 + static_cast<double>(rng.next_below(max_size));
        inst.jobs.push_back({i, Distribution::deterministic(size)});
    }
    return inst;
}

Instance gen_random_bernoulli(std::uint64_t seed, int max_n, int min_m, int max_m, int max_size) {
    Rng rng(seed);
    Instance inst;
    inst.machines = min_m + static_cast<int>(rng.next_below(max_m - min_m + 1));
    const int n = 1 + static_cast<int>(rng.next_below(max_n));
    for (int i = 0; i < n; ++i) {
        const double size = 1.0 + static_cast<double>(rng.next_below(max_size));
        const std::uint64_t kind = rng.next_below(10);
        if (kind == 0) {
            inst.jobs.push_back({i, Distribution::deterministic(size)});
        } else if (kind == 1) {
            inst.jobs.push_back({i, Distribution::bernoulli(size, 0.0)});
        } else {
            // probability grid 0.1 .. 0.9 keeps enumeration exact in binary
            const double prob = 0.1 * static_cast<double>(1 + rng.next_below(9));
            inst.jobs.push_back({i, Distribution::bernoulli(size, prob)});
        }
    }
    return inst;
}

SuiteOutcome verify_spt_four_approx(const SuiteConfig& config) {
    SuiteOutcome outcome{"spt4"};
    for (int i = 0; i < config.spt_cases; ++i) {
        const Instance inst = gen_random_deterministic(case_seed(config, 1, i));
        const Realization r = sample_realization(inst, 0);
        const double alg = final_free_time(run_list_schedule(inst, r, spt_order(inst, r)));
        const double opt = opt_free_time_det(realized_jobs(inst, r), inst.machines,
                                             LoadVector::zeros(inst.machines));
        record(outcome, alg - 4.0 * opt, config, i,
               "F(spt)=" + std::to_string(alg) + " F*=" + std::to_string(opt));
        ++outcome.cases;
    }
    return outcome;
}

SuiteOutcome verify_bernoulli_per_realization(const SuiteConfig& config) {
    SuiteOutcome outcome{"bernoulli4"};
    for (int i = 0; i < config.bernoulli_cases; ++i) {
        const Instance inst = gen_random_bernoulli(case_seed(config, 2, i));
        const ListOrder order = bernoulli_size_order(inst);
        for (const auto& [r, prob] : enumerate_realizations(inst)) {
            const double alg = final_free_time(run_list_schedule(inst, r, order));
            const double opt = opt_free_time_det(realized_jobs(inst, r), inst.machines,
                                                 LoadVector::zeros(inst.machines));
            record(outcome, alg - 4.0 * opt, config, i,
                   "F(size-order)=" + std::to_string(alg) + " F*=" + std::to_string(opt));
        }
        ++outcome.cases;
    }
    return outcome;
}

namespace {

// Alternates ChooseJobs plans with random nested plans of up to 3 batches.
BatchPlan batched_plan_for_case(const Instance& inst, std::uint64_t seed, int index) {
    if (index % 2 == 0) return choose_jobs(inst);
    Rng rng(hash_combine(seed, 0xb47c));
    std::vector<int> ids(inst.n());
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = inst.n() - 1; i > 0; --i)
        std::swap(ids[i], ids[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
    BatchPlan plan;
    plan.K = 1 + static_cast<int>(rng.next_below(3));
    std::vector<std::size_t> cuts;
    for (int k = 0; k < plan.K; ++k) cuts.push_back(rng.next_below(ids.size() + 1));
    std::sort(cuts.begin(), cuts.end());
    for (int k = 0; k < plan.K; ++k) {
        std::vector<int> prefix(ids.begin(), ids.begin() + cuts[k]);
        std::sort(prefix.begin(), prefix.end());
        plan.batch_sets.push_back(std::move(prefix));
    }
    std::sort(ids.begin(), ids.end());
    std::set_difference(ids.begin(), ids.end(), plan.batch_sets.back().begin(),
                        plan.batch_sets.back().end(), std::back_inserter(plan.leftover));
    return plan;
}

SuiteOutcome verify_bft_bound(const SuiteConfig& config, const std::string& name,
                              bool clairvoyant) {
    SuiteOutcome outcome{name};
    for (int i = 0; i < config.bft_cases; ++i) {
        const std::uint64_t seed = case_seed(config, clairvoyant ? 4 : 3, i);
        const Instance inst = gen_random_bernoulli(seed, /*max_n=*/7);
        const BatchPlan plan = batched_plan_for_case(inst, seed, i);
        for (const auto& [r, prob] : enumerate_realizations(inst)) {
            BatchRule rule;
            if (clairvoyant) {
                const Realization& realization = r;
                rule = [&realization](const Instance& instance, const std::vector<int>& ids) {
                    std::vector<int> out = ids;
                    std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
                        const double sa = realization.size_of(a);
                        const double sb = realization.size_of(b);
                        if (sa != sb) return sa < sb;
                        return a < b;
                    });
                    return out;
                };
            } else {
                rule = size_rule;
            }
            const ListOrder order = bft_from_ft(inst, plan, rule);
            const Trace trace = run_list_schedule(inst, r, order);
            const std::vector<double> opt = opt_batch_free_times(plan, inst, r, inst.machines);
            double opt_prefix = 0.0;
            for (int k = 1; k <= plan.K; ++k) {
                opt_prefix += opt[k - 1];
                const double alg = trace.free_times[plan.batch_sets[k - 1].size()];
                record(outcome, alg - 5.0 * opt_prefix, config, i,
                       "k=" + std::to_string(k) + " F(J_k)=" + std::to_string(alg) +
                           " sum F~*=" + std::to_string(opt_prefix));
            }
        }
        ++outcome.cases;
    }
    return outcome;
}

}  // namespace

SuiteOutcome verify_bft_five_approx(const SuiteConfig& config) {
    return verify_bft_bound(config, "bft5", /*clairvoyant=*/false);
}

SuiteOutcome verify_ft_to_bft(const SuiteConfig& config) {
    return verify_bft_bound(config, "ft-to-bft", /*clairvoyant=*/true);
}

SuiteOutcome verify_monotonicity(const SuiteConfig& config) {
    SuiteOutcome outcome{"monotonicity"};
    for (int i = 0; i < config.monotonicity_cases; ++i) {
        const std::uint64_t seed = case_seed(config, 5, i);
        const Instance inst = gen_random_bernoulli(seed, /*max_n=*/8);
        const Realization r = sample_realization(inst, hash_combine(seed, 1));
        const ListOrder order = random_order(inst, hash_combine(seed, 2));
        Rng rng(hash_combine(seed, 3));

        LoadVector lo = LoadVector::zeros(inst.machines);
        for (double& load : lo.loads) load = static_cast<double>(rng.next_below(4));
        LoadVector hi = lo;
        if (i % 2 == 0) {
            for (double& load : hi.loads) load += static_cast<double>(rng.next_below(4));
        } else if (inst.machines >= 2) {
            hi.loads[rng.next_below(inst.machines)] = kInfiniteLoad;  // machine removal
        }

        const Trace low = run_list_schedule(inst, r, order, lo);
        const Trace high = run_list_schedule(inst, r, order, hi);
        for (std::size_t k = 0; k < low.free_times.size(); ++k)
            record(outcome, low.free_times[k] - high.free_times[k], config, i,
                   "F(" + std::to_string(k) + ") decreased under larger loads");
        record(outcome, total_completion(low) - total_completion(high), config, i,
               "total completion decreased under larger loads");
        ++outcome.cases;
    }
    return outcome;
}

SuiteOutcome verify_random_list_logm(const SuiteConfig& config) {
    SuiteOutcome outcome{"random-logm"};
    for (int i = 0; i < config.random_list_cases; ++i) {
        const std::uint64_t seed = case_seed(config, 6, i);
        const Instance inst = gen_random_deterministic(seed, /*max_n=*/9, /*min_m=*/1, /*max_m=*/6);
        const Realization r = sample_realization(inst, 0);
        const double opt = opt_free_time_det(realized_jobs(inst, r), inst.machines,
                                             LoadVector::zeros(inst.machines));
        double mean = 0.0;
        for (int t = 0; t < config.random_list_orders; ++t) {
            const ListOrder order = random_order(inst, hash_combine(seed, 1000 + t));
            mean += final_free_time(run_list_schedule(inst, r, order));
        }
        mean /= config.random_list_orders;
        const double bound = 4.0 * (1.0 + std::log(inst.machines)) * opt;
        record(outcome, mean - bound, config, i,
               "mean F=" + std::to_string(mean) + " bound=" + std::to_string(bound));
        ++outcome.cases;
    }
    return outcome;
}

SuiteOutcome verify_exchange(const SuiteConfig& config) {
    SuiteOutcome outcome{"exchange"};
    for (int i = 0; i < config.exchange_cases; ++i) {
        const Instance inst =
            gen_random_bernoulli(case_seed(config, 7, i), /*max_n=*/6, /*min_m=*/1, /*max_m=*/3);
        const auto [constrained, unconstrained] = check_exchange_property(inst);
        record(outcome, std::abs(constrained - unconstrained), config, i,
               "constrained=" + std::to_string(constrained) +
                   " unconstrained=" + std::to_string(unconstrained));
        ++outcome.cases;
    }
    return outcome;
}

SuiteOutcome verify_batch_containment(const SuiteConfig& config) {
    SuiteOutcome outcome{"containment"};
    // structural: nesting and size bounds, any instance size
    for (int i = 0; i < config.containment_structural_cases; ++i) {
        const Instance inst =
            gen_random_bernoulli(case_seed(config, 8, i), /*max_n=*/32, /*min_m=*/2, /*max_m=*/6);
        const BatchPlan plan = choose_jobs(inst);
        const int n = inst.n();
        const int distinct = distinct_size_count(inst);
        for (int k = 1; k <= plan.K; ++k) {
            const auto& set_k = plan.batch_sets[k - 1];
            if (k < plan.K &&
                !std::includes(plan.batch_sets[k].begin(), plan.batch_sets[k].end(), set_k.begin(),
                               set_k.end()))
                record(outcome, 1.0, config, i, "nesting violated at k=" + std::to_string(k));
            const int size = static_cast<int>(set_k.size());
            const int upper = n - ceil_div_pow2(n, k);
            const int lower = std::max(0, n - distinct * ceil_div_pow2(n, k));
            if (size > upper || size < lower)
                record(outcome, 1.0, config, i,
                       "|J_" + std::to_string(k) + "|=" + std::to_string(size) + " outside [" +
                           std::to_string(lower) + "," + std::to_string(upper) + "]");
        }
        ++outcome.cases;
    }
    // containment against the canonical adaptive oracle, all realizations
    for (int i = 0; i < config.containment_oracle_cases; ++i) {
        const Instance inst =
            gen_random_bernoulli(case_seed(config, 9, i), /*max_n=*/6, /*min_m=*/1, /*max_m=*/3);
        const BatchPlan plan = choose_jobs(inst);
        AdaptiveOracle oracle(inst);
        const int n = inst.n();
        for (const auto& [r, prob] : enumerate_realizations(inst)) {
            const Trace trace = oracle.trace(r);
            for (int k = 1; k <= plan.K; ++k) {
                const int prefix = n - ceil_div_pow2(n, k);
                std::set<int> started(trace.order.begin(), trace.order.begin() + prefix);
                for (int id : plan.batch_sets[k - 1])
                    if (!started.count(id))
                        record(outcome, 1.0, config, i,
                               "job " + std::to_string(id) + " of J_" + std::to_string(k) +
                                   " not in opt prefix");
            }
        }
        ++outcome.cases;
    }
    return outcome;
}

SuiteOutcome verify_halving(const SuiteConfig& config) {
    SuiteOutcome outcome{"halving"};
    for (int i = 0; i < config.halving_cases; ++i) {
        Rng rng(case_seed(config, 10, i));
        const int m = 2 * (1 + static_cast<int>(rng.next_below(3)));  // 2, 4, 6
        Instance inst = gen_random_deterministic(hash_combine(case_seed(config, 10, i), 1),
                                                 /*max_n=*/8, m, m);
        const Realization r = sample_realization(inst, 0);
        const Trace full = run_list_schedule(inst, r, spt_order(inst, r));
        std::vector<double> full_completion(inst.n());
        for (const ScheduledJob& job : full.jobs) full_completion[job.job_id] = job.completion;

        const ListOrder order = halve_machines_order(inst, r);
        Instance half = inst;
        half.machines = m / 2;
        const Trace halved = run_list_schedule(half, r, order);
        for (const ScheduledJob& job : halved.jobs)
            record(outcome, job.completion - 3.0 * full_completion[job.job_id], config, i,
                   "C_" + std::to_string(job.job_id) + "=" + std::to_string(job.completion) +
                       " C^m=" + std::to_string(full_completion[job.job_id]));
        ++outcome.cases;
    }
    return outcome;
}

SuiteOutcome verify_sept_optimality(const SuiteConfig& config) {
    SuiteOutcome outcome{"sept"};
    for (int i = 0; i < config.sept_cases; ++i) {
        const Instance inst =
            gen_random_bernoulli(case_seed(config, 11, i), /*max_n=*/6, /*min_m=*/1, /*max_m=*/1);
        const double oracle = opt_adaptive_completion(inst).value;
        const ListOrder order = sept_order(inst);
        double sept = 0.0;
        for (const auto& [r, prob] : enumerate_realizations(inst))
            sept += prob * total_completion(run_list_schedule(inst, r, order));
        record(outcome, std::abs(sept - oracle), config, i,
               "sept=" + std::to_string(sept) + " oracle=" + std::to_string(oracle));
        ++outcome.cases;
    }
    return outcome;
}

SuiteOutcome verify_free_vol_inequality(const SuiteConfig& config) {
    SuiteOutcome outcome{"free-vol"};
    for (int i = 0; i < config.free_vol_cases; ++i) {
        const Instance inst =
            gen_random_bernoulli(case_seed(config, 12, i), /*max_n=*/6, /*min_m=*/2, /*max_m=*/3);
        const int n = inst.n();
        const BatchPlan plan = choose_jobs(inst);
        if (plan.K == 0) {
            ++outcome.cases;
            continue;
        }
        AdaptiveOracle oracle(inst);
        const auto realizations = enumerate_realizations(inst);

        // per-realization optimal free times at each checkpoint, plus their expectations
        std::vector<std::vector<double>> opt_free(realizations.size());
        std::vector<double> expected_opt_free(plan.K, 0.0);
        for (std::size_t ri = 0; ri < realizations.size(); ++ri) {
            const Trace trace = oracle.trace(realizations[ri].first);
            opt_free[ri].resize(plan.K);
            for (int k = 1; k <= plan.K; ++k) {
                opt_free[ri][k - 1] = trace.free_times[n - ceil_div_pow2(n, k)];
                expected_opt_free[k - 1] += realizations[ri].second * opt_free[ri][k - 1];
            }
        }

        const ListOrder order = stoch_free_order(inst);
        for (std::size_t ri = 0; ri < realizations.size(); ++ri) {
            const Realization& r = realizations[ri].first;
            const Trace trace = run_list_schedule(inst, r, order);
            for (int k = 1; k <= plan.K; ++k) {
                const double tau = 2.0 * std::max(expected_opt_free[k - 1], opt_free[ri][k - 1]);
                const auto& prev = k == 1 ? std::vector<int>{} : plan.batch_sets[k - 2];
                int clogged = 0;
                for (int id : prev)
                    if (r.size_of(id) > tau) ++clogged;
                if (clogged >= inst.machines) {
                    record(outcome, 1.0, config, i, "no unclogged machine at k=" + std::to_string(k));
                    continue;
                }
                double small_volume = 0.0;
                for (int id : plan.batch(k))
                    if (r.size_of(id) <= tau) small_volume += r.size_of(id);
                const double prev_free = trace.free_times[prev.size()];
                const double curr_free = trace.free_times[plan.batch_sets[k - 1].size()];
                const double bound =
                    prev_free + small_volume / (inst.machines - clogged) + 2.0 * tau;
                record(outcome, curr_free - bound, config, i,
                       "k=" + std::to_string(k) + " F(J_k)=" + std::to_string(curr_free) +
                           " bound=" + std::to_string(bound));
            }
        }
        ++outcome.cases;
    }
    return outcome;
}

SuiteOutcome verify_small_volume_bound(const SuiteConfig& config) {
    SuiteOutcome outcome{"small-vol"};
    // F* >= Vol({realized size <= F*}) / (2m) for the free-time queries of
    // the SPT, Bernoulli, and BFT suites
    auto check_query = [&](const std::vector<std::pair<int, double>>& jobs, int m, double opt,
                           int index) {
        double small_volume = 0.0;
        for (const auto& [id, size] : jobs)
            if (size <= opt) small_volume += size;
        record(outcome, small_volume / (2.0 * m) - opt, config, index,
               "F*=" + std::to_string(opt) + " Vol(S)/(2m)=" + std::to_string(small_volume / (2.0 * m)));
    };
    for (int i = 0; i < config.spt_cases; ++i) {
        const Instance inst = gen_random_deterministic(case_seed(config, 1, i));
        const Realization r = sample_realization(inst, 0);
        const auto jobs = realized_jobs(inst, r);
        check_query(jobs, inst.machines,
                    opt_free_time_det(jobs, inst.machines, LoadVector::zeros(inst.machines)), i);
        ++outcome.cases;
    }
    for (int i = 0; i < config.bernoulli_cases; ++i) {
        const Instance inst = gen_random_bernoulli(case_seed(config, 2, i));
        for (const auto& [r, prob] : enumerate_realizations(inst)) {
            const auto jobs = realized_jobs(inst, r);
            check_query(jobs, inst.machines,
                        opt_free_time_det(jobs, inst.machines, LoadVector::zeros(inst.machines)), i);
        }
        ++outcome.cases;
    }
    for (int i = 0; i < config.bft_cases; ++i) {
        const std::uint64_t seed = case_seed(config, 3, i);
        const Instance inst = gen_random_bernoulli(seed, /*max_n=*/7);
        const BatchPlan plan = batched_plan_for_case(inst, seed, i);
        for (const auto& [r, prob] : enumerate_realizations(inst)) {
            const std::vector<double> opt = opt_batch_free_times(plan, inst, r, inst.machines);
            for (int k = 1; k <= plan.K; ++k) {
                std::vector<std::pair<int, double>> jobs;
                for (int id : plan.batch_sets[k - 1]) jobs.emplace_back(id, r.size_of(id));
                check_query(jobs, inst.machines, opt[k - 1], i);
            }
        }
        ++outcome.cases;
    }
    return outcome;
}

std::vector<SensitivityRow> sensitivity_sweep(const std::vector<int>& m_list, double c, int trials,
                                              std::uint64_t seed) {
    std::vector<SensitivityRow> rows;
    const OrderRule rule = order_rule_from_name("stochfree");
    for (int m : m_list) {
        const Instance full = gen_machine_sensitivity_instance(m, c);
        Instance half = full;
        half.machines = std::max(1, m / 2);
        SensitivityRow row;
        row.machines = m;
        row.expected_full =
            monte_carlo_metric(full, rule, Metric::TotalCompletion, trials, hash_combine(seed, m))
                .mean;
        row.expected_half =
            monte_carlo_metric(half, rule, Metric::TotalCompletion, trials, hash_combine(seed, m))
                .mean;
        row.ratio = row.expected_half / row.expected_full;
        rows.push_back(row);
    }
    return rows;
}

SuiteOutcome verify_sensitivity_sweep(const SuiteConfig& config) {
    SuiteOutcome outcome{"sensitivity"};
    const std::vector<SensitivityRow> rows = sensitivity_sweep(
        {2, 4}, config.sensitivity_c, config.sensitivity_trials, hash_combine(config.seed, 13));
    double prev_ratio = 1.0;
    for (const SensitivityRow& row : rows) {
        record(outcome, prev_ratio - row.ratio, config, row.machines,
               "m=" + std::to_string(row.machines) + " ratio=" + std::to_string(row.ratio) +
                   " must exceed " + std::to_string(prev_ratio));
        prev_ratio = row.ratio;
        ++outcome.cases;
    }
    return outcome;
}

WeightedFreeTimeProxyReport report_weighted_free_time_proxy(const Instance& instance, int trials,
                                                            std::uint64_t seed) {
    instance.validate();
    WeightedFreeTimeProxyReport report;
    const BatchPlan plan = choose_jobs(instance);
    const ListOrder order = stoch_free_order(instance);
    for (int t = 0; t < trials; ++t) {
        const Realization r = sample_realization(instance, hash_combine(seed, t));
        const Trace trace = run_list_schedule(instance, r, order);
        report.expected_completion += total_completion(trace);
        for (int k = 1; k <= plan.K; ++k) {
            const int weight = ceil_div_pow2(instance.n(), k);
            report.expected_weighted_free +=
                weight * trace.free_times[plan.batch_sets[k - 1].size()];
        }
    }
    report.expected_completion /= trials;
    report.expected_weighted_free /= trials;
    try {
        report.expected_opt = opt_adaptive_completion(instance).value;
    } catch (const CapError&) {
        report.expected_opt = std::nullopt;
    }
    return report;
}

std::vector<std::pair<std::string, std::function<SuiteOutcome(const SuiteConfig&)>>>
suite_registry() {
    return {
        {"spt4", verify_spt_four_approx},
        {"bernoulli4", verify_bernoulli_per_realization},
        {"bft5", verify_bft_five_approx},
        {"ft-to-bft", verify_ft_to_bft},
        {"monotonicity", verify_monotonicity},
        {"random-logm", verify_random_list_logm},
        {"exchange", verify_exchange},
        {"containment", verify_batch_containment},
        {"halving", verify_halving},
        {"sept", verify_sept_optimality},
        {"free-vol", verify_free_vol_inequality},
        {"small-vol", verify_small_volume_bound},
        {"sensitivity", verify_sensitivity_sweep},
    };
}

}  // namespace stochsched
