#include "stochsched/policies.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "stochsched/rng.hpp"

namespace stochsched {

namespace {

std::vector<int> all_ids(const Instance& instance) {
    std::vector<int> ids(instance.n());
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

template <typename Key>
std::vector<int> sorted_by(const Instance& instance, std::vector<int> ids, Key key) {
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        const double ka = key(instance.jobs[a]);
        const double kb = key(instance.jobs[b]);
        if (ka != kb) return ka < kb;
        return a < b;
    });
    return ids;
}

int ceil_log2(int n) {
    int k = 0;
    while ((1 << k) < n) ++k;
    return k;
}

}  // namespace

std::vector<int> BatchPlan::batch(int k) const {
    if (k < 1 || k > K) throw ArgumentError("batch index out of range");
    static const std::vector<int> empty;
    const std::vector<int>& prev = k == 1 ? empty : batch_sets[k - 2];
    std::vector<int> out;
    std::set_difference(batch_sets[k - 1].begin(), batch_sets[k - 1].end(), prev.begin(), prev.end(),
                        std::back_inserter(out));
    return out;
}

ListOrder spt_order(const Instance& instance, const Realization& realization) {
    instance.validate();
    for (int id = 0; id < instance.n(); ++id) realization.size_of(id);  // missing size -> error
    return {sorted_by(instance, all_ids(instance),
                      [&](const JobSpec& job) { return realization.size_of(job.id); })};
}

ListOrder bernoulli_size_order(const Instance& instance) {
    instance.validate();
    for (const JobSpec& job : instance.jobs)
        if (!job.dist.is_bernoulli_like())
            throw UnsupportedDistributionError("size order needs Bernoulli/deterministic jobs");
    return {sorted_by(instance, all_ids(instance),
                      [](const JobSpec& job) { return job.dist.size_param(); })};
}

ListOrder random_order(const Instance& instance, std::uint64_t seed) {
    instance.validate();
    std::vector<int> ids = all_ids(instance);
    Rng rng(seed);
    for (int i = instance.n() - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(ids[i], ids[j]);
    }
    return {std::move(ids)};
}

ListOrder sept_order(const Instance& instance) {
    instance.validate();
    return {sorted_by(instance, all_ids(instance), [](const JobSpec& job) { return job.dist.mean(); })};
}

BatchPlan choose_jobs(const Instance& instance) {
    instance.validate();
    const int n = instance.n();
    BatchPlan plan;
    if (n == 0) return plan;
    plan.K = ceil_log2(n);

    // per size class, ids sorted by probability descending (ties: larger id
    // first, so it is the first removed)
    std::map<double, std::vector<int>> by_size;
    for (const JobSpec& job : instance.jobs) by_size[job.dist.size_param()].push_back(job.id);
    for (auto& [size, ids] : by_size) {
        std::sort(ids.begin(), ids.end(), [&](int a, int b) {
            const double pa = instance.jobs[a].dist.prob_param();
            const double pb = instance.jobs[b].dist.prob_param();
            if (pa != pb) return pa > pb;
            return a > b;
        });
    }

    for (int k = 1; k <= plan.K; ++k) {
        const int drop = (n + (1 << k) - 1) >> k;  // ceil(n / 2^k)
        std::vector<int> kept;
        for (const auto& [size, ids] : by_size)
            for (std::size_t i = drop; i < ids.size(); ++i) kept.push_back(ids[i]);
        std::sort(kept.begin(), kept.end());
        plan.batch_sets.push_back(std::move(kept));
    }

    const auto& last = plan.batch_sets.empty() ? std::vector<int>{} : plan.batch_sets.back();
    std::vector<int> ids = all_ids(instance);
    std::set_difference(ids.begin(), ids.end(), last.begin(), last.end(),
                        std::back_inserter(plan.leftover));
    return plan;
}

ListOrder bft_from_ft(const Instance& instance, const BatchPlan& plan, const BatchRule& rule) {
    ListOrder out;
    for (int k = 1; k <= plan.K; ++k) {
        const std::vector<int> batch = plan.batch(k);
        if (batch.empty()) continue;
        const std::vector<int> ordered = rule(instance, batch);
        out.order.insert(out.order.end(), ordered.begin(), ordered.end());
    }
    return out;
}

namespace {

std::vector<int> size_param_rule(const Instance& instance, const std::vector<int>& ids) {
    return sorted_by(instance, ids, [](const JobSpec& job) { return job.dist.size_param(); });
}

}  // namespace

ListOrder stoch_free_order(const Instance& instance) {
    instance.validate();
    if (instance.machines == 1) return sept_order(instance);
    const BatchPlan plan = choose_jobs(instance);
    ListOrder order = bft_from_ft(instance, plan, size_param_rule);
    order.order.insert(order.order.end(), plan.leftover.begin(), plan.leftover.end());
    return order;
}

ListOrder rescale_wrapper_order(const Instance& instance) {
    const PreparedInstance prep = normalize_and_partition(instance);
    ListOrder order;
    order.order.insert(order.order.end(), prep.large.begin(), prep.large.end());
    order.order.insert(order.order.end(), prep.small.begin(), prep.small.end());

    // run the core algorithm on the medium sub-instance (reindexed dense)
    Instance medium;
    medium.machines = instance.machines;
    for (std::size_t i = 0; i < prep.medium.size(); ++i) {
        JobSpec job = prep.instance.jobs[prep.medium[i]];
        job.id = static_cast<int>(i);
        medium.jobs.push_back(job);
    }
    for (int local : stoch_free_order(medium).order) order.order.push_back(prep.medium[local]);
    return order;
}

ListOrder halve_machines_order(const Instance& instance, const Realization& realization) {
    instance.validate();
    if (instance.machines < 2) throw ArgumentError("halving needs m >= 2");
    const Trace trace = run_list_schedule(instance, realization, spt_order(instance, realization));
    std::vector<double> completion(instance.n());
    for (const ScheduledJob& job : trace.jobs) completion[job.job_id] = job.completion;
    return {sorted_by(instance, all_ids(instance),
                      [&](const JobSpec& job) { return completion[job.id]; })};
}

}  // namespace stochsched
