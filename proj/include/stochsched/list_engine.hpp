#pragma once

#include <limits>
#include <vector>

#include "stochsched/job_model.hpp"

namespace stochsched {

inline constexpr double kInfiniteLoad = std::numeric_limits<double>::infinity();

// Initial load per machine. An infinite entry disables the machine
// (it is never assigned a job), which models machine removal.
struct LoadVector {
    std::vector<double> loads;

    static LoadVector zeros(int m) { return LoadVector{std::vector<double>(m, 0.0)}; }
};

// The scheduling list: a permutation of a subset of job ids.
struct ListOrder {
    std::vector<int> order;
};

struct ScheduledJob {
    int job_id = 0;
    int machine = 0;
    double start = 0.0;
    double completion = 0.0;
    double size = 0.0;
};

// Full record of one simulated list schedule. free_times[i] is F(i),
// the minimum machine load after the first i listed jobs were started;
// the (i+1)-st listed job starts exactly at F(i).
struct Trace {
    std::vector<ScheduledJob> jobs;
    std::vector<double> free_times;  // length #jobs + 1
    std::vector<int> order;          // the list that was run
    std::vector<double> final_loads;
    std::vector<double> initial_loads;
};

// Non-idling list schedule on identical machines: each listed job goes to
// a machine of minimum current load (ties: lowest index).
Trace run_list_schedule(const Instance& instance, const Realization& realization,
                        const ListOrder& order, const LoadVector& initial);

inline Trace run_list_schedule(const Instance& instance, const Realization& realization,
                               const ListOrder& order) {
    return run_list_schedule(instance, realization, order, LoadVector::zeros(instance.machines));
}

double total_completion(const Trace& trace);

// F(i); throws ArgumentError when i is out of [0, #scheduled].
double free_time_after(const Trace& trace, int i);

// sum_{k=1}^{K} ceil(n/2^k) * F(n - ceil(n/2^k)) with K = max(1, ceil(log2 n)).
// The trace must have scheduled exactly n jobs.
double weighted_free_time(const Trace& trace, int n);

double makespan(const Trace& trace);

}  // namespace stochsched
