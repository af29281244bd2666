#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "stochsched/experiments.hpp"
#include "stochsched/oracle.hpp"
#include "stochsched/rng.hpp"

using namespace stochsched;

namespace {

Realization full_realization(const Instance& inst) {
    Realization r;
    for (const JobSpec& job : inst.jobs) r.sizes.push_back(job.dist.size_param());
    return r;
}

double sept_expected_completion(const Instance& inst) {
    const ListOrder order = sept_order(inst);
    double total = 0.0;
    for (const auto& [r, p] : enumerate_realizations(inst))
        total += p * total_completion(run_list_schedule(inst, r, order));
    return total;
}

}  // namespace

TEST_CASE("opt_adaptive_completion no-contention and two-coin examples") {
    Instance det;
    det.machines = 2;
    det.jobs = {{0, Distribution::deterministic(1.0)}, {1, Distribution::deterministic(2.0)}};
    CHECK(opt_adaptive_completion(det).value == doctest::Approx(3.0));

    Instance coins;
    coins.machines = 1;
    coins.jobs = {{0, Distribution::bernoulli(1.0, 0.5)}, {1, Distribution::bernoulli(1.0, 1.0)}};
    // low-p first: 0.5 + (0.5 + 1)
    CHECK(opt_adaptive_completion(coins).value == doctest::Approx(2.0));
}

TEST_CASE("opt_adaptive_completion matches SEPT at m=1") {
    Rng rng(11);
    for (int rep = 0; rep < 40; ++rep) {
        Instance inst = gen_random_bernoulli(rng.next_u64(), 6, 2, 4, 5);
        inst.machines = 1;
        CHECK(opt_adaptive_completion(inst).value ==
              doctest::Approx(sept_expected_completion(inst)).epsilon(1e-9));
    }
}

TEST_CASE("opt_adaptive_completion relabeling and scaling invariance") {
    Rng rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        const Instance inst = gen_random_bernoulli(rng.next_u64(), 6, 2, 3, 5);
        if (inst.n() < 2) continue;
        const double base = opt_adaptive_completion(inst).value;

        Instance relabeled = inst;
        std::reverse(relabeled.jobs.begin(), relabeled.jobs.end());
        for (int i = 0; i < relabeled.n(); ++i) relabeled.jobs[i].id = i;
        CHECK(opt_adaptive_completion(relabeled).value == doctest::Approx(base).epsilon(1e-9));

        const double lambda = 2.5;
        Instance scaled = inst;
        for (JobSpec& job : scaled.jobs)
            job.dist = Distribution::bernoulli(job.dist.size_param() * lambda,
                                               job.dist.prob_param());
        CHECK(opt_adaptive_completion(scaled).value ==
              doctest::Approx(base * lambda).epsilon(1e-9));
    }
}

TEST_CASE("opt_adaptive_completion cap errors") {
    Instance big;
    big.machines = 2;
    for (int i = 0; i < 11; ++i) big.jobs.push_back({i, Distribution::bernoulli(1.0, 0.5)});
    CHECK_THROWS_AS(opt_adaptive_completion(big), CapError);

    Instance wide;
    wide.machines = 5;
    wide.jobs = {{0, Distribution::deterministic(1.0)}};
    CHECK_THROWS_AS(opt_adaptive_completion(wide), CapError);
}

TEST_CASE("opt_adaptive_trace replays the canonical policy") {
    Instance det;
    det.machines = 2;
    det.jobs = {{0, Distribution::deterministic(3.0)},
                {1, Distribution::deterministic(1.0)},
                {2, Distribution::deterministic(2.0)}};
    const Trace a = opt_adaptive_trace(det, full_realization(det));
    const Trace b = opt_adaptive_trace(det, full_realization(det));
    CHECK(a.order == b.order);

    // same size, different probabilities, one machine: the smaller-p job
    // is started first in every realization
    Instance pair;
    pair.machines = 1;
    pair.jobs = {{0, Distribution::bernoulli(2.0, 0.7)}, {1, Distribution::bernoulli(2.0, 0.3)}};
    for (const auto& [r, p] : enumerate_realizations(pair)) {
        const Trace trace = opt_adaptive_trace(pair, r);
        REQUIRE(!trace.order.empty());
        CHECK(trace.order.front() == 1);
    }
}

TEST_CASE("opt_adaptive_trace expectation identity") {
    Rng rng(17);
    for (int rep = 0; rep < 25; ++rep) {
        const Instance inst = gen_random_bernoulli(rng.next_u64(), 6, 2, 3, 5);
        const double value = opt_adaptive_completion(inst).value;
        double replayed = 0.0;
        for (const auto& [r, p] : enumerate_realizations(inst))
            replayed += p * total_completion(opt_adaptive_trace(inst, r));
        CHECK(replayed == doctest::Approx(value).epsilon(1e-9));
    }
}

TEST_CASE("per-realization big-job count stays below m along the optimal trace") {
    Rng rng(19);
    for (int rep = 0; rep < 25; ++rep) {
        const Instance inst = gen_random_bernoulli(rng.next_u64(), 6, 2, 3, 5);
        for (const auto& [r, p] : enumerate_realizations(inst)) {
            const Trace trace = opt_adaptive_trace(inst, r);
            for (std::size_t i = 1; i <= trace.jobs.size(); ++i) {
                const double f = trace.free_times[i];
                int big = 0;
                for (std::size_t j = 0; j < i; ++j)
                    if (trace.jobs[j].size > f) ++big;
                CHECK(big < inst.machines);
            }
        }
    }
}

TEST_CASE("opt_free_time_det examples") {
    const Instance gap = gen_free_time_gap_instance(3);
    std::vector<std::pair<int, double>> jobs;
    for (const JobSpec& job : gap.jobs) jobs.push_back({job.id, job.dist.size_param()});
    CHECK(opt_free_time_det(jobs, 3, LoadVector::zeros(3)) == doctest::Approx(1.0));

    CHECK(opt_free_time_det({}, 2, LoadVector{{2.0, 5.0}}) == 2.0);

    CHECK(opt_free_time_det({{0, 1.0}, {1, 1.0}, {2, 1.0}}, 2, LoadVector::zeros(2)) ==
          doctest::Approx(1.0));

    std::vector<std::pair<int, double>> many;
    for (int i = 0; i < 10; ++i) many.push_back({i, 1.0 + i});
    CHECK_THROWS_AS(opt_free_time_det(many, 2, LoadVector::zeros(2)), CapError);
}

TEST_CASE("opt_free_time_det is monotone") {
    Rng rng(23);
    for (int rep = 0; rep < 60; ++rep) {
        const int m = 2 + static_cast<int>(rng.next_below(2));
        const int n = 1 + static_cast<int>(rng.next_below(5));
        std::vector<std::pair<int, double>> jobs;
        for (int i = 0; i < n; ++i)
            jobs.push_back({i, 1.0 + static_cast<double>(rng.next_below(5))});
        LoadVector initial = LoadVector::zeros(m);
        for (double& v : initial.loads) v = static_cast<double>(rng.next_below(3));

        const double base = opt_free_time_det(jobs, m, initial);

        auto more_jobs = jobs;
        more_jobs.push_back({n, 2.0});
        CHECK(opt_free_time_det(more_jobs, m, initial) >= base - 1e-12);

        LoadVector raised = initial;
        raised.loads[rng.next_below(m)] += 1.0;
        CHECK(opt_free_time_det(jobs, m, raised) >= base - 1e-12);

        if (m >= 2) {
            LoadVector removed = initial;
            removed.loads[rng.next_below(m)] = kInfiniteLoad;
            CHECK(opt_free_time_det(jobs, m, removed) >= base - 1e-12);
        }
    }
}

TEST_CASE("opt_batch_free_times examples") {
    Instance inst;
    inst.machines = 2;
    inst.jobs = {{0, Distribution::deterministic(3.0)},
                 {1, Distribution::deterministic(1.0)},
                 {2, Distribution::deterministic(2.0)}};
    const Realization r = full_realization(inst);

    BatchPlan single;
    single.K = 1;
    single.batch_sets = {{0, 1, 2}};
    std::vector<std::pair<int, double>> jobs;
    for (const JobSpec& job : inst.jobs) jobs.push_back({job.id, job.dist.size_param()});
    const auto one = opt_batch_free_times(single, inst, r, inst.machines);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == doctest::Approx(opt_free_time_det(jobs, 2, LoadVector::zeros(2))));

    // batches {0}, {0,1}: the constrained order of J_2 is forced
    BatchPlan forced;
    forced.K = 2;
    forced.batch_sets = {{0}, {0, 1}};
    const auto two = opt_batch_free_times(forced, inst, r, inst.machines);
    REQUIRE(two.size() == 2);
    const Trace t = run_list_schedule(inst, r, ListOrder{{0, 1}});
    CHECK(two[1] == doctest::Approx(free_time_after(t, 2)));
}

TEST_CASE("constrained batch free times dominate the unconstrained optimum") {
    Rng rng(29);
    for (int rep = 0; rep < 40; ++rep) {
        const Instance inst = gen_random_bernoulli(rng.next_u64(), 7, 2, 3, 5);
        if (inst.n() == 0) continue;
        const BatchPlan plan = choose_jobs(inst);
        if (plan.K == 0) continue;
        const Realization r = sample_realization(inst, rng.next_u64());
        const auto constrained = opt_batch_free_times(plan, inst, r, inst.machines);
        for (int k = 1; k <= plan.K; ++k) {
            std::vector<std::pair<int, double>> jobs;
            for (int id : plan.batch_sets[k - 1]) jobs.push_back({id, r.size_of(id)});
            const double unconstrained =
                opt_free_time_det(jobs, inst.machines, LoadVector::zeros(inst.machines));
            CHECK(constrained[k - 1] >= unconstrained - 1e-9);
        }
    }
}

TEST_CASE("check_exchange_property examples") {
    Instance pair;
    pair.machines = 1;
    pair.jobs = {{0, Distribution::bernoulli(1.0, 0.3)}, {1, Distribution::bernoulli(1.0, 0.7)}};
    const auto [constrained, unconstrained] = check_exchange_property(pair);
    CHECK(constrained == doctest::Approx(1.3));
    CHECK(unconstrained == doctest::Approx(1.3));

    Instance one;
    one.machines = 1;
    one.jobs = {{0, Distribution::bernoulli(2.0, 0.4)}};
    const auto [c1, u1] = check_exchange_property(one);
    CHECK(c1 == doctest::Approx(u1));
}

TEST_CASE("check_exchange_property equality on random instances") {
    Rng rng(37);
    for (int rep = 0; rep < 30; ++rep) {
        const Instance inst = gen_random_bernoulli(rng.next_u64(), 5, 1, 3, 4);
        const auto [constrained, unconstrained] = check_exchange_property(inst);
        CHECK(std::abs(constrained - unconstrained) <= 1e-9);
    }
}

TEST_CASE("deterministic small-volume lower bound at the free-time optimum") {
    Rng rng(41);
    for (int rep = 0; rep < 60; ++rep) {
        const Instance inst = gen_random_deterministic(rng.next_u64());
        if (inst.n() == 0) continue;
        std::vector<std::pair<int, double>> jobs;
        for (const JobSpec& job : inst.jobs) jobs.push_back({job.id, job.dist.size_param()});
        const double fstar = opt_free_time_det(jobs, inst.machines,
                                               LoadVector::zeros(inst.machines));
        double vol_small = 0.0;
        for (const auto& [id, s] : jobs)
            if (s <= fstar) vol_small += s;
        CHECK(fstar >= vol_small / (2.0 * inst.machines) - 1e-9);
    }
}
