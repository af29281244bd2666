#include "stochsched/list_engine.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace stochsched {

namespace {

double min_load(const std::vector<double>& loads) {
    return *std::min_element(loads.begin(), loads.end());
}

// least-loaded machine among the non-disabled ones, ties by lowest index
int pick_machine(const std::vector<double>& loads) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(loads.size()); ++i) {
        if (loads[i] == kInfiniteLoad) continue;
        if (best < 0 || loads[i] < loads[best]) best = i;
    }
    if (best < 0) throw ArgumentError("all machines are disabled");
    return best;
}

int weighted_free_time_terms(int n) {
    int k = 0;
    while ((1 << k) < n) ++k;  // ceil(log2 n)
    return std::max(1, k);
}

}  // namespace

Trace run_list_schedule(const Instance& instance, const Realization& realization,
                        const ListOrder& order, const LoadVector& initial) {
    instance.validate();
    if (static_cast<int>(initial.loads.size()) != instance.machines)
        throw ArgumentError("initial load vector length must equal machine count");
    for (double load : initial.loads)
        if (!(load >= 0.0)) throw ArgumentError("initial loads must be >= 0");

    std::unordered_set<int> seen;
    for (int id : order.order) {
        if (id < 0 || id >= instance.n()) throw ArgumentError("unknown job id in order: " + std::to_string(id));
        if (!seen.insert(id).second) throw ArgumentError("duplicate job id in order: " + std::to_string(id));
    }

    Trace trace;
    trace.order = order.order;
    trace.initial_loads = initial.loads;
    std::vector<double> loads = initial.loads;
    trace.free_times.push_back(min_load(loads));
    for (int id : order.order) {
        const double size = realization.size_of(id);
        const int machine = pick_machine(loads);
        const double start = loads[machine];
        loads[machine] += size;
        trace.jobs.push_back({id, machine, start, start + size, size});
        trace.free_times.push_back(min_load(loads));
    }
    trace.final_loads = std::move(loads);
    return trace;
}

double total_completion(const Trace& trace) {
    double total = 0.0;
    for (const ScheduledJob& job : trace.jobs) total += job.completion;
    return total;
}

double free_time_after(const Trace& trace, int i) {
    if (i < 0 || i >= static_cast<int>(trace.free_times.size()))
        throw ArgumentError("free time index out of range: " + std::to_string(i));
    return trace.free_times[i];
}

double weighted_free_time(const Trace& trace, int n) {
    if (n < 1) throw ArgumentError("weighted free time needs n >= 1");
    if (static_cast<int>(trace.jobs.size()) != n)
        throw ArgumentError("trace scheduled a different number of jobs than n");
    double total = 0.0;
    const int terms = weighted_free_time_terms(n);
    for (int k = 1; k <= terms; ++k) {
        const int weight = (n + (1 << k) - 1) >> k;  // ceil(n / 2^k)
        total += weight * trace.free_times[n - weight];
    }
    return total;
}

double makespan(const Trace& trace) {
    double max = 0.0;
    bool any = false;
    for (double load : trace.final_loads) {
        if (load == kInfiniteLoad) continue;
        max = std::max(max, load);
        any = true;
    }
    if (!any) throw ArgumentError("makespan undefined: all machines disabled");
    return max;
}

}  // namespace stochsched
