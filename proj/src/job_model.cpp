#include "stochsched/job_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "stochsched/rng.hpp"

namespace stochsched {

namespace {

void check_prob(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError(std::string(what) + " probability outside [0,1]");
}

void check_size(double s, const char* what) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw ArgumentError(std::string(what) + " size must be finite and >= 0");
}

}  // namespace

Distribution::Distribution(Bernoulli b) : dist_(b) {
    check_size(b.size, "bernoulli");
    check_prob(b.prob, "bernoulli");
}

Distribution::Distribution(Deterministic d) : dist_(d) { check_size(d.size, "deterministic"); }

Distribution::Distribution(Discrete d) : dist_(std::move(d)) {
    const auto& support = std::get<Discrete>(dist_).support;
    double total = 0.0;
    for (const auto& [value, prob] : support) {
        check_size(value, "discrete");
        check_prob(prob, "discrete");
        total += prob;
    }
    if (std::abs(total - 1.0) > 1e-9) throw ArgumentError("discrete probabilities must sum to 1");
}

double Distribution::size_param() const {
    if (const auto* b = std::get_if<Bernoulli>(&dist_)) return b->size;
    if (const auto* d = std::get_if<Deterministic>(&dist_)) return d->size;
    throw UnsupportedDistributionError("discrete distribution has no size parameter");
}

double Distribution::prob_param() const {
    if (const auto* b = std::get_if<Bernoulli>(&dist_)) return b->prob;
    if (std::holds_alternative<Deterministic>(dist_)) return 1.0;
    throw UnsupportedDistributionError("discrete distribution has no probability parameter");
}

double Distribution::mean() const {
    if (const auto* b = std::get_if<Bernoulli>(&dist_)) return b->size * b->prob;
    if (const auto* d = std::get_if<Deterministic>(&dist_)) return d->size;
    double mean = 0.0;
    for (const auto& [value, prob] : std::get<Discrete>(dist_).support) mean += value * prob;
    return mean;
}

double Distribution::max_support() const {
    if (const auto* b = std::get_if<Bernoulli>(&dist_)) return b->prob > 0.0 ? b->size : 0.0;
    if (const auto* d = std::get_if<Deterministic>(&dist_)) return d->size;
    double max = 0.0;
    for (const auto& [value, prob] : std::get<Discrete>(dist_).support)
        if (prob > 0.0) max = std::max(max, value);
    return max;
}

void Instance::validate() const {
    if (machines < 1) throw ArgumentError("instance needs at least one machine");
    for (int i = 0; i < n(); ++i)
        if (jobs[i].id != i) throw ArgumentError("job ids must be dense 0..n-1 in order");
}

Realization sample_realization(const Instance& instance, std::uint64_t seed) {
    instance.validate();
    Realization r;
    r.sizes.resize(instance.jobs.size());
    for (const JobSpec& job : instance.jobs) {
        // per-job substream: sampling one job never perturbs the others
        Rng rng(hash_combine(seed, static_cast<std::uint64_t>(job.id)));
        if (const auto* b = std::get_if<Bernoulli>(&job.dist.raw())) {
            r.sizes[job.id] = rng.next_double() < b->prob ? b->size : 0.0;
        } else if (const auto* d = std::get_if<Deterministic>(&job.dist.raw())) {
            r.sizes[job.id] = d->size;
        } else {
            const auto& support = std::get<Discrete>(job.dist.raw()).support;
            double u = rng.next_double();
            double acc = 0.0;
            double value = support.empty() ? 0.0 : support.back().first;
            for (const auto& [v, p] : support) {
                acc += p;
                if (u < acc) {
                    value = v;
                    break;
                }
            }
            r.sizes[job.id] = value;
        }
    }
    return r;
}

std::vector<std::pair<Realization, double>> enumerate_realizations(const Instance& instance, int cap) {
    instance.validate();
    std::vector<int> coins;  // jobs with 0 < p < 1
    Realization base;
    base.sizes.resize(instance.jobs.size(), 0.0);
    for (const JobSpec& job : instance.jobs) {
        if (job.dist.is_discrete())
            throw UnsupportedDistributionError("enumerate_realizations supports only Bernoulli/Deterministic jobs");
        double s = job.dist.size_param();
        double p = job.dist.prob_param();
        if (p >= 1.0) {
            base.sizes[job.id] = s;
        } else if (p > 0.0) {
            coins.push_back(job.id);
        }
    }
    if (static_cast<int>(coins.size()) > cap)
        throw CapError("enumeration cap exceeded: " + std::to_string(coins.size()) + " coins > cap " +
                       std::to_string(cap));

    std::vector<std::pair<Realization, double>> out;
    const std::uint64_t total = 1ULL << coins.size();
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Realization r = base;
        double prob = 1.0;
        for (std::size_t i = 0; i < coins.size(); ++i) {
            const JobSpec& job = instance.jobs[coins[i]];
            if (mask & (1ULL << i)) {
                r.sizes[coins[i]] = job.dist.size_param();
                prob *= job.dist.prob_param();
            } else {
                prob *= 1.0 - job.dist.prob_param();
            }
        }
        out.emplace_back(std::move(r), prob);
    }
    return out;
}

Instance gen_free_time_gap_instance(int m) {
    if (m < 2) throw ArgumentError("gap instance needs m >= 2");
    Instance inst;
    inst.machines = m;
    for (int i = 0; i < m; ++i) inst.jobs.push_back({i, Distribution::deterministic(1.0)});
    for (int i = 0; i < m - 1; ++i)
        inst.jobs.push_back({m + i, Distribution::deterministic(static_cast<double>(m))});
    return inst;
}

Instance gen_machine_sensitivity_instance(int m, double c, long long job_cap) {
    if (m < 2 || m % 2 != 0) throw ArgumentError("sensitivity instance needs even m >= 2");
    if (c < 0.0) throw ArgumentError("sensitivity instance needs c >= 0");
    const double L = std::ceil(std::exp(c * m));
    const double count = std::ceil(7.0 / 8.0 * m * L);
    if (!(count <= static_cast<double>(job_cap)))
        throw CapError("sensitivity instance would have " + std::to_string(count) + " jobs (cap " +
                       std::to_string(job_cap) + ")");
    Instance inst;
    inst.machines = m;
    const auto n_jobs = static_cast<long long>(count);
    for (long long i = 0; i < n_jobs; ++i)
        inst.jobs.push_back({static_cast<int>(i), Distribution::bernoulli(1.0, 1.0 / L)});
    return inst;
}

namespace {

double round_up_pow2(double s) {
    if (s <= 0.0) return 0.0;
    return std::exp2(std::ceil(std::log2(s)));
}

}  // namespace

PreparedInstance normalize_and_partition(const Instance& instance) {
    instance.validate();
    const int n = instance.n();
    PreparedInstance prep;
    prep.instance.machines = instance.machines;

    // Round sizes up to the nearest power of 2 first, then rescale
    // uniformly so the total expected size is 1.
    double total_mean = 0.0;
    std::vector<double> rounded(n);
    for (const JobSpec& job : instance.jobs) {
        if (job.dist.is_discrete())
            throw UnsupportedDistributionError("normalize_and_partition supports only Bernoulli/Deterministic jobs");
        rounded[job.id] = round_up_pow2(job.dist.size_param());
        total_mean += rounded[job.id] * job.dist.prob_param();
    }
    if (total_mean <= 0.0) throw NormalizationError("instance has zero total expected size");
    prep.scale = 1.0 / total_mean;

    const double small_threshold = 1.0 / (static_cast<double>(n) * n);
    const double large_threshold = std::pow(static_cast<double>(n), 8);
    for (const JobSpec& job : instance.jobs) {
        const double s = rounded[job.id] * prep.scale;
        const double p = job.dist.prob_param();
        prep.instance.jobs.push_back(
            {job.id, job.dist.is_deterministic() ? Distribution::deterministic(s)
                                                 : Distribution::bernoulli(s, p)});
        if (s < small_threshold) {
            prep.small.push_back(job.id);
        } else if (s < large_threshold || n == 1) {
            // n == 1 degenerates both thresholds to 1; the lone job is medium
            prep.medium.push_back(job.id);
        } else {
            prep.large.push_back(job.id);
        }
    }
    return prep;
}

int distinct_size_count(const Instance& instance) {
    std::set<double> sizes;
    for (const JobSpec& job : instance.jobs) {
        if (!job.dist.is_bernoulli_like()) continue;
        if (job.dist.size_param() > 0.0) sizes.insert(job.dist.size_param());
    }
    return static_cast<int>(sizes.size());
}

}  // namespace stochsched
