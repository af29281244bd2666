#include "stochsched/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <string>
#include <tuple>

namespace stochsched {

namespace {

constexpr double kQuantum = 1e-9;

std::string state_key(const std::vector<double>& sorted_loads, std::uint32_t done) {
    std::string key;
    key.reserve(sorted_loads.size() * sizeof(std::int64_t) + sizeof(done));
    for (double load : sorted_loads) {
        const auto q = static_cast<std::int64_t>(std::llround(load / kQuantum));
        key.append(reinterpret_cast<const char*>(&q), sizeof(q));
    }
    key.append(reinterpret_cast<const char*>(&done), sizeof(done));
    return key;
}

}  // namespace

AdaptiveOracle::AdaptiveOracle(Instance instance, OracleCaps caps, bool constrained)
    : instance_(std::move(instance)), caps_(caps), constrained_(constrained) {
    instance_.validate();
    if (instance_.n() > caps_.max_jobs || instance_.machines > caps_.max_machines)
        throw CapError("oracle cap exceeded: n=" + std::to_string(instance_.n()) +
                       " m=" + std::to_string(instance_.machines));
    for (const JobSpec& job : instance_.jobs)
        if (!job.dist.is_bernoulli_like())
            throw UnsupportedDistributionError("adaptive oracle supports only Bernoulli/Deterministic jobs");
}

bool AdaptiveOracle::choosable(int job, std::uint32_t done) const {
    if (!constrained_) return true;
    const double s = instance_.jobs[job].dist.size_param();
    const double p = instance_.jobs[job].dist.prob_param();
    for (const JobSpec& other : instance_.jobs) {
        if (other.id == job || other.dist.size_param() != s) continue;
        const double po = other.dist.prob_param();
        const bool earlier = po < p || (po == p && other.id < job);
        if (earlier && !(done & (1u << other.id))) return false;
    }
    return true;
}

double AdaptiveOracle::solve(const std::vector<double>& sorted_loads, std::uint32_t done) {
    if (done == (1u << instance_.n()) - 1u) return 0.0;
    const std::string key = state_key(sorted_loads, done);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const double lmin = sorted_loads.front();
    double best = std::numeric_limits<double>::infinity();
    for (const JobSpec& job : instance_.jobs) {
        if (done & (1u << job.id)) continue;
        if (!choosable(job.id, done)) continue;
        const double s = job.dist.size_param();
        const double p = job.dist.prob_param();
        const std::uint32_t next = done | (1u << job.id);
        double value = lmin + p * s;
        if (p < 1.0) value += (1.0 - p) * solve(sorted_loads, next);
        if (p > 0.0) {
            std::vector<double> heads = sorted_loads;
            heads.front() = lmin + s;
            std::sort(heads.begin(), heads.end());
            value += p * solve(heads, next);
        }
        best = std::min(best, value);
    }
    memo_[key] = best;
    return best;
}

int AdaptiveOracle::best_job(const std::vector<double>& sorted_loads, std::uint32_t done) {
    const double lmin = sorted_loads.front();
    double best_value = std::numeric_limits<double>::infinity();
    int best = -1;
    for (const JobSpec& job : instance_.jobs) {
        if (done & (1u << job.id)) continue;
        if (!choosable(job.id, done)) continue;
        const double s = job.dist.size_param();
        const double p = job.dist.prob_param();
        const std::uint32_t next = done | (1u << job.id);
        double value = lmin + p * s;
        if (p < 1.0) value += (1.0 - p) * solve(sorted_loads, next);
        if (p > 0.0) {
            std::vector<double> heads = sorted_loads;
            heads.front() = lmin + s;
            std::sort(heads.begin(), heads.end());
            value += p * solve(heads, next);
        }
        bool better = value < best_value - kQuantum;
        if (!better && value < best_value + kQuantum && best >= 0) {
            // canonical tie-break: smallest (s, p, id) among near-optimal jobs
            const double bs = instance_.jobs[best].dist.size_param();
            const double bp = instance_.jobs[best].dist.prob_param();
            better = std::tuple(s, p, job.id) < std::tuple(bs, bp, best);
        }
        if (better || best < 0) {
            best_value = std::min(best_value, value);
            best = job.id;
        }
    }
    return best;
}

double AdaptiveOracle::value() {
    if (instance_.n() == 0) return 0.0;
    return solve(std::vector<double>(instance_.machines, 0.0), 0);
}

Trace AdaptiveOracle::trace(const Realization& realization) {
    std::vector<double> loads(instance_.machines, 0.0);
    Trace trace;
    trace.initial_loads = loads;
    trace.free_times.push_back(0.0);
    std::uint32_t done = 0;
    for (int step = 0; step < instance_.n(); ++step) {
        std::vector<double> sorted_loads = loads;
        std::sort(sorted_loads.begin(), sorted_loads.end());
        const int job = best_job(sorted_loads, done);
        done |= 1u << job;
        int machine = 0;
        for (int i = 1; i < instance_.machines; ++i)
            if (loads[i] < loads[machine]) machine = i;
        const double size = realization.size_of(job);
        const double start = loads[machine];
        loads[machine] += size;
        trace.jobs.push_back({job, machine, start, start + size, size});
        trace.order.push_back(job);
        trace.free_times.push_back(*std::min_element(loads.begin(), loads.end()));
    }
    trace.final_loads = std::move(loads);
    return trace;
}

OracleResult opt_adaptive_completion(const Instance& instance, OracleCaps caps) {
    AdaptiveOracle oracle(instance, caps);
    return {oracle.value()};
}

Trace opt_adaptive_trace(const Instance& instance, const Realization& realization, OracleCaps caps) {
    AdaptiveOracle oracle(instance, caps);
    return oracle.trace(realization);
}

namespace {

double simulate_free_time(const std::vector<double>& sizes, const std::vector<double>& initial) {
    std::vector<double> loads = initial;
    for (double size : sizes) {
        int machine = -1;
        for (int i = 0; i < static_cast<int>(loads.size()); ++i) {
            if (loads[i] == kInfiniteLoad) continue;
            if (machine < 0 || loads[i] < loads[machine]) machine = i;
        }
        if (machine < 0) throw ArgumentError("all machines disabled");
        loads[machine] += size;
    }
    return *std::min_element(loads.begin(), loads.end());
}

}  // namespace

double opt_free_time_det(const std::vector<std::pair<int, double>>& jobs, int m,
                         const LoadVector& initial, int cap) {
    if (m < 1) throw ArgumentError("need at least one machine");
    if (static_cast<int>(initial.loads.size()) != m)
        throw ArgumentError("initial load vector length must equal machine count");
    if (static_cast<int>(jobs.size()) > cap)
        throw CapError("free-time oracle cap exceeded: " + std::to_string(jobs.size()) + " jobs");

    std::vector<double> sizes;
    for (const auto& [id, size] : jobs)
        if (size > 0.0) sizes.push_back(size);
    std::sort(sizes.begin(), sizes.end());

    double best = std::numeric_limits<double>::infinity();
    do {
        best = std::min(best, simulate_free_time(sizes, initial.loads));
    } while (std::next_permutation(sizes.begin(), sizes.end()));
    return best;
}

std::vector<double> opt_batch_free_times(const BatchPlan& plan, const Instance& instance,
                                         const Realization& realization, int m, int cap) {
    instance.validate();
    int total = plan.K > 0 ? static_cast<int>(plan.batch_sets.back().size()) : 0;
    if (total > cap) throw CapError("batch free-time oracle cap exceeded");

    std::vector<double> result;
    std::vector<std::vector<double>> batch_sizes;  // nonzero realized sizes per batch
    for (int k = 1; k <= plan.K; ++k) {
        std::vector<double> sizes;
        for (int id : plan.batch(k))
            if (realization.size_of(id) > 0.0) sizes.push_back(realization.size_of(id));
        std::sort(sizes.begin(), sizes.end());
        batch_sizes.push_back(std::move(sizes));

        // minimize over the product of per-batch permutations
        double best = std::numeric_limits<double>::infinity();
        std::vector<std::vector<double>> perms = batch_sizes;
        const std::vector<double> initial(m, 0.0);
        // odometer over next_permutation of each batch
        std::vector<double> flat;
        auto rebuild = [&] {
            flat.clear();
            for (const auto& b : perms) flat.insert(flat.end(), b.begin(), b.end());
        };
        std::function<void(std::size_t)> visit = [&](std::size_t idx) {
            if (idx == perms.size()) {
                rebuild();
                best = std::min(best, simulate_free_time(flat, initial));
                return;
            }
            std::sort(perms[idx].begin(), perms[idx].end());
            do {
                visit(idx + 1);
            } while (std::next_permutation(perms[idx].begin(), perms[idx].end()));
        };
        visit(0);
        result.push_back(best);
    }
    return result;
}

std::pair<double, double> check_exchange_property(const Instance& instance, OracleCaps caps) {
    AdaptiveOracle constrained(instance, caps, /*constrained=*/true);
    AdaptiveOracle unconstrained(instance, caps, /*constrained=*/false);
    return {constrained.value(), unconstrained.value()};
}

}  // namespace stochsched
