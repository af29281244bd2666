#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "stochsched/errors.hpp"

namespace stochsched {

// X ~ size * Ber(prob): realized size is `size` with probability `prob`,
// otherwise 0.
struct Bernoulli {
    double size = 0.0;
    double prob = 0.0;
};

struct Deterministic {
    double size = 0.0;
};

struct Discrete {
    std::vector<std::pair<double, double>> support;  // (value, prob)
};

class Distribution {
public:
    Distribution() : dist_(Deterministic{0.0}) {}
    Distribution(Bernoulli b);       // NOLINT(google-explicit-constructor)
    Distribution(Deterministic d);   // NOLINT(google-explicit-constructor)
    Distribution(Discrete d);        // NOLINT(google-explicit-constructor)

    static Distribution bernoulli(double size, double prob) { return Bernoulli{size, prob}; }
    static Distribution deterministic(double size) { return Deterministic{size}; }
    static Distribution discrete(std::vector<std::pair<double, double>> support) {
        return Discrete{std::move(support)};
    }

    bool is_bernoulli() const { return std::holds_alternative<Bernoulli>(dist_); }
    bool is_deterministic() const { return std::holds_alternative<Deterministic>(dist_); }
    bool is_discrete() const { return std::holds_alternative<Discrete>(dist_); }

    // True for Bernoulli and Deterministic (a Deterministic job is the
    // p = 1 Bernoulli of its size class).
    bool is_bernoulli_like() const { return !is_discrete(); }

    // Bernoulli size parameter s_j; Deterministic jobs report their size.
    // Throws UnsupportedDistributionError for Discrete.
    double size_param() const;
    // Bernoulli probability p_j; 1 for Deterministic.
    double prob_param() const;

    double mean() const;
    double max_support() const;

    const std::variant<Bernoulli, Deterministic, Discrete>& raw() const { return dist_; }

private:
    std::variant<Bernoulli, Deterministic, Discrete> dist_;
};

struct JobSpec {
    int id = 0;
    Distribution dist;
};

struct Instance {
    int machines = 1;
    std::vector<JobSpec> jobs;

    int n() const { return static_cast<int>(jobs.size()); }
    int m() const { return machines; }

    // Throws ArgumentError unless machines >= 1 and ids are 0..n-1 dense.
    void validate() const;
};

// One joint outcome of all job sizes, indexed by job id.
struct Realization {
    std::vector<double> sizes;

    double size_of(int job_id) const {
        if (job_id < 0 || job_id >= static_cast<int>(sizes.size()))
            throw ArgumentError("realization has no size for job " + std::to_string(job_id));
        return sizes[job_id];
    }
};

// Result of the rescale/discretize preprocessing: sizes rounded up to
// powers of 2, then uniformly scaled so the total expected size is 1,
// and jobs partitioned into small/medium/large against 1/n^2 and n^8.
struct PreparedInstance {
    double scale = 1.0;
    std::vector<int> small;
    std::vector<int> medium;
    std::vector<int> large;
    Instance instance;
};

Realization sample_realization(const Instance& instance, std::uint64_t seed);

inline constexpr int kDefaultEnumerationCap = 16;

// All joint outcomes of a Bernoulli/Deterministic instance with their
// exact product probabilities. Throws CapError when the number of
// nondegenerate coins exceeds `cap`.
std::vector<std::pair<Realization, double>> enumerate_realizations(
    const Instance& instance, int cap = kDefaultEnumerationCap);

// m unit jobs followed by m-1 jobs of size m; a random list order is
// Omega(m)-approximate for free time on it.
Instance gen_free_time_gap_instance(int m);

inline constexpr long long kDefaultJobCountCap = 2'000'000;

// ceil(7/8 * m * L) identical Bernoulli(1/L) jobs with L = ceil(e^{c m});
// exhibits the exponential sensitivity of E[opt] to halving m.
Instance gen_machine_sensitivity_instance(int m, double c,
                                          long long job_cap = kDefaultJobCountCap);

PreparedInstance normalize_and_partition(const Instance& instance);

// Number of distinct nonzero size parameters among Bernoulli/Deterministic jobs.
int distinct_size_count(const Instance& instance);

}  // namespace stochsched
