#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "stochsched/job_model.hpp"
#include "stochsched/list_engine.hpp"

namespace stochsched {

// Nested job sets J_1 c ... c J_K from ChooseJobs, plus the jobs the last
// set leaves out. I_k = batch(k) = J_k \ J_{k-1}.
struct BatchPlan {
    std::vector<std::vector<int>> batch_sets;  // J_k, each sorted by id
    std::vector<int> leftover;                 // J \ J_K, sorted by id
    int K = 0;

    std::vector<int> batch(int k) const;  // I_k, 1-based
};

// Orders a job subset; used to schedule each batch independently.
using BatchRule = std::function<std::vector<int>(const Instance&, const std::vector<int>&)>;

// deterministic jobs, realized sizes ascending (ties by id)
ListOrder spt_order(const Instance& instance, const Realization& realization);

// size parameter s_j ascending (ties by id); ignores probabilities
ListOrder bernoulli_size_order(const Instance& instance);

// seeded uniform permutation
ListOrder random_order(const Instance& instance, std::uint64_t seed);

// expected processing time ascending (ties by id); optimal for m = 1
ListOrder sept_order(const Instance& instance);

// For each k = 1..ceil(log2 n): start from all jobs and, per distinct size
// parameter, drop the ceil(n/2^k) jobs with the largest probabilities
// (ties: larger id dropped first).
BatchPlan choose_jobs(const Instance& instance);

// Concatenation order(I_1) || order(I_2) || ... || order(I_K).
// The leftover set is not appended.
ListOrder bft_from_ft(const Instance& instance, const BatchPlan& plan, const BatchRule& rule);

// ChooseJobs batches, each in ascending size-parameter order, leftovers
// last in id order; falls back to SEPT when m = 1.
ListOrder stoch_free_order(const Instance& instance);

// Large jobs first, then small, then stoch_free_order over the medium
// jobs of the normalized instance; expressed in original ids.
ListOrder rescale_wrapper_order(const Instance& instance);

// Jobs sorted by their completion times under the SPT schedule on the full
// machine count; meant to be executed on half the machines.
ListOrder halve_machines_order(const Instance& instance, const Realization& realization);

}  // namespace stochsched
