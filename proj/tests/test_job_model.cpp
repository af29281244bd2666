#include <doctest.h>

#include <cmath>
#include <set>

#include "stochsched/job_model.hpp"

using namespace stochsched;

namespace {

Instance single(Distribution dist, int m = 1) {
    Instance inst;
    inst.machines = m;
    inst.jobs = {{0, dist}};
    return inst;
}

}  // namespace

TEST_CASE("distribution parameter validation") {
    CHECK_THROWS_AS(Distribution::bernoulli(1.0, 1.5), ArgumentError);
    CHECK_THROWS_AS(Distribution::bernoulli(1.0, -0.1), ArgumentError);
    CHECK_THROWS_AS(Distribution::bernoulli(-1.0, 0.5), ArgumentError);
    CHECK_THROWS_AS(Distribution::discrete({{1.0, 0.5}, {2.0, 0.6}}), ArgumentError);
    CHECK(Distribution::bernoulli(2.0, 1.0).mean() == 2.0);
    CHECK(Distribution::bernoulli(2.0, 0.25).mean() == 0.5);
    CHECK(Distribution::deterministic(3.0).prob_param() == 1.0);
    CHECK_THROWS_AS(Distribution::discrete({{1.0, 1.0}}).size_param(),
                    UnsupportedDistributionError);
}

TEST_CASE("sample_realization deterministic job") {
    const Instance inst = single(Distribution::deterministic(5.0));
    for (std::uint64_t seed : {0ull, 1ull, 12345ull}) {
        const Realization r = sample_realization(inst, seed);
        CHECK(r.size_of(0) == 5.0);
    }
}

TEST_CASE("sample_realization prob-0 bernoulli is always tails") {
    const Instance inst = single(Distribution::bernoulli(3.0, 0.0));
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        CHECK(sample_realization(inst, seed).size_of(0) == 0.0);
}

TEST_CASE("sample_realization heads frequency matches prob") {
    const Instance inst = single(Distribution::bernoulli(3.0, 0.5));
    int heads = 0;
    const int trials = 10000;
    for (int seed = 0; seed < trials; ++seed)
        if (sample_realization(inst, seed).size_of(0) == 3.0) ++heads;
    const double frac = static_cast<double>(heads) / trials;
    CHECK(frac == doctest::Approx(0.5).epsilon(0.04));
    CHECK(std::abs(frac - 0.5) <= 0.02);
}

TEST_CASE("sample_realization is seed-deterministic") {
    Instance inst;
    inst.machines = 2;
    for (int i = 0; i < 6; ++i) inst.jobs.push_back({i, Distribution::bernoulli(1.0 + i, 0.3)});
    const Realization a = sample_realization(inst, 99);
    const Realization b = sample_realization(inst, 99);
    CHECK(a.sizes == b.sizes);
}

TEST_CASE("enumerate_realizations single coin") {
    const Instance inst = single(Distribution::bernoulli(2.0, 0.25));
    const auto outcomes = enumerate_realizations(inst);
    REQUIRE(outcomes.size() == 2);
    CHECK(outcomes[0].first.size_of(0) == 0.0);
    CHECK(outcomes[0].second == doctest::Approx(0.75));
    CHECK(outcomes[1].first.size_of(0) == 2.0);
    CHECK(outcomes[1].second == doctest::Approx(0.25));
}

TEST_CASE("enumerate_realizations deterministic jobs collapse to one outcome") {
    Instance inst;
    inst.machines = 1;
    inst.jobs = {{0, Distribution::deterministic(1.0)}, {1, Distribution::deterministic(4.0)}};
    const auto outcomes = enumerate_realizations(inst);
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].second == 1.0);
    CHECK(outcomes[0].first.size_of(0) == 1.0);
    CHECK(outcomes[0].first.size_of(1) == 4.0);
}

TEST_CASE("enumerate_realizations product law") {
    Instance inst;
    inst.machines = 1;
    inst.jobs = {{0, Distribution::bernoulli(1.0, 0.5)}, {1, Distribution::bernoulli(1.0, 0.5)}};
    const auto outcomes = enumerate_realizations(inst);
    REQUIRE(outcomes.size() == 4);
    double total = 0.0;
    for (const auto& [r, p] : outcomes) {
        CHECK(p == doctest::Approx(0.25));
        total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("enumerate_realizations probabilities always sum to 1") {
    Instance inst;
    inst.machines = 2;
    for (int i = 0; i < 7; ++i)
        inst.jobs.push_back({i, Distribution::bernoulli(1.0 + i % 3, 0.1 * (i + 1))});
    double total = 0.0;
    for (const auto& [r, p] : enumerate_realizations(inst)) total += p;
    CHECK(std::abs(total - 1.0) <= 1e-12);
}

TEST_CASE("enumerate_realizations cap and distribution errors") {
    Instance big;
    big.machines = 1;
    for (int i = 0; i < 17; ++i) big.jobs.push_back({i, Distribution::bernoulli(1.0, 0.5)});
    CHECK_THROWS_AS(enumerate_realizations(big), CapError);
    CHECK_NOTHROW(enumerate_realizations(big, 17));
    CHECK_THROWS_AS(enumerate_realizations(single(Distribution::discrete({{1.0, 1.0}}))),
                    UnsupportedDistributionError);
}

TEST_CASE("gen_free_time_gap_instance shapes") {
    const Instance m3 = gen_free_time_gap_instance(3);
    REQUIRE(m3.n() == 5);
    for (int i = 0; i < 3; ++i) CHECK(m3.jobs[i].dist.size_param() == 1.0);
    for (int i = 3; i < 5; ++i) CHECK(m3.jobs[i].dist.size_param() == 3.0);

    const Instance m2 = gen_free_time_gap_instance(2);
    REQUIRE(m2.n() == 3);
    CHECK(m2.jobs[2].dist.size_param() == 2.0);

    const Instance m6 = gen_free_time_gap_instance(6);
    REQUIRE(m6.n() == 11);
    int ones = 0, sixes = 0;
    for (const JobSpec& job : m6.jobs) {
        if (job.dist.size_param() == 1.0) ++ones;
        if (job.dist.size_param() == 6.0) ++sixes;
    }
    CHECK(ones == 6);
    CHECK(sixes == 5);

    for (int m = 2; m <= 8; ++m) {
        const Instance inst = gen_free_time_gap_instance(m);
        CHECK(inst.n() == 2 * m - 1);
        CHECK(distinct_size_count(inst) == 2);
    }
    CHECK_THROWS_AS(gen_free_time_gap_instance(1), ArgumentError);
}

TEST_CASE("gen_machine_sensitivity_instance formula") {
    const Instance a = gen_machine_sensitivity_instance(4, 0.5);  // L = ceil(e^2) = 8
    CHECK(a.machines == 4);
    CHECK(a.n() == 28);
    for (const JobSpec& job : a.jobs) {
        CHECK(job.dist.size_param() == 1.0);
        CHECK(job.dist.prob_param() == doctest::Approx(1.0 / 8.0));
    }

    const Instance b = gen_machine_sensitivity_instance(2, 0.0);  // L = 1
    CHECK(b.n() == 2);
    for (const JobSpec& job : b.jobs) CHECK(job.dist.prob_param() == 1.0);

    const Instance c = gen_machine_sensitivity_instance(6, 0.5);  // L = ceil(e^3) = 21
    CHECK(c.n() == 111);

    CHECK_THROWS_AS(gen_machine_sensitivity_instance(20, 3.0), CapError);
}

TEST_CASE("normalize_and_partition hand examples") {
    // 3 rounds up to 4, then rescales to 1; the lone job is medium
    const PreparedInstance a = normalize_and_partition(single(Distribution::bernoulli(3.0, 1.0)));
    CHECK(a.scale == doctest::Approx(0.25));
    CHECK(a.instance.jobs[0].dist.size_param() == doctest::Approx(1.0));
    CHECK(a.small.empty());
    CHECK(a.medium == std::vector<int>{0});
    CHECK(a.large.empty());

    Instance two;
    two.machines = 1;
    two.jobs = {{0, Distribution::deterministic(1.0)}, {1, Distribution::deterministic(1.0)}};
    const PreparedInstance b = normalize_and_partition(two);
    CHECK(b.instance.jobs[0].dist.size_param() == doctest::Approx(0.5));
    CHECK(b.instance.jobs[1].dist.size_param() == doctest::Approx(0.5));
    CHECK(b.medium == std::vector<int>{0, 1});
}

TEST_CASE("normalize_and_partition power-of-2 rounding is identity") {
    Instance inst;
    inst.machines = 1;
    inst.jobs = {{0, Distribution::bernoulli(4.0, 0.5)}, {1, Distribution::bernoulli(4.0, 0.5)}};
    const PreparedInstance prep = normalize_and_partition(inst);
    // both already powers of 2: rounding leaves them equal, scaling is uniform
    CHECK(prep.instance.jobs[0].dist.size_param() ==
          doctest::Approx(prep.instance.jobs[1].dist.size_param()));
    CHECK(prep.scale == doctest::Approx(0.25));
}

TEST_CASE("normalize_and_partition invariants") {
    Instance inst;
    inst.machines = 2;
    inst.jobs = {{0, Distribution::bernoulli(3.0, 0.5)},
                 {1, Distribution::deterministic(7.0)},
                 {2, Distribution::bernoulli(0.001, 0.9)},
                 {3, Distribution::bernoulli(100000.0, 0.001)}};
    const PreparedInstance prep = normalize_and_partition(inst);
    double total_mean = 0.0;
    for (const JobSpec& job : prep.instance.jobs) total_mean += job.dist.mean();
    CHECK(total_mean == doctest::Approx(1.0).epsilon(1e-9));
    std::set<int> all;
    for (int id : prep.small) all.insert(id);
    for (int id : prep.medium) all.insert(id);
    for (int id : prep.large) all.insert(id);
    CHECK(static_cast<int>(all.size()) == inst.n());
    const int n = inst.n();
    for (int id : prep.small) CHECK(prep.instance.jobs[id].dist.size_param() < 1.0 / (n * n));
    for (int id : prep.large)
        CHECK(prep.instance.jobs[id].dist.size_param() >= std::pow(n, 8) - 1e-9);
}

TEST_CASE("normalize_and_partition rejects zero total expectation") {
    CHECK_THROWS_AS(normalize_and_partition(single(Distribution::bernoulli(3.0, 0.0))),
                    NormalizationError);
}

TEST_CASE("distinct_size_count") {
    Instance inst;
    inst.machines = 1;
    inst.jobs = {{0, Distribution::deterministic(1.0)},
                 {1, Distribution::deterministic(1.0)},
                 {2, Distribution::deterministic(3.0)}};
    CHECK(distinct_size_count(inst) == 2);
    CHECK(distinct_size_count(Instance{}) == 0);
    CHECK(distinct_size_count(gen_free_time_gap_instance(4)) == 2);
}

TEST_CASE("instance validation") {
    Instance inst;
    inst.machines = 0;
    CHECK_THROWS_AS(inst.validate(), ArgumentError);
    inst.machines = 1;
    inst.jobs = {{1, Distribution::deterministic(1.0)}};
    CHECK_THROWS_AS(inst.validate(), ArgumentError);
}
