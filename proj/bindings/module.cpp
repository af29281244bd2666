#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stochsched/experiments.hpp"
#include "stochsched/io.hpp"
#include "stochsched/job_model.hpp"
#include "stochsched/list_engine.hpp"
#include "stochsched/oracle.hpp"
#include "stochsched/policies.hpp"

namespace py = pybind11;
using namespace stochsched;

PYBIND11_MODULE(_stochsched, m) {
    m.doc() = "stochastic scheduling laboratory: list schedules, oracles, verification suites";

    py::register_exception<CapError>(m, "CapError");
    py::register_exception<NormalizationError>(m, "NormalizationError");
    py::register_exception<UnsupportedDistributionError>(m, "UnsupportedDistributionError");

    py::class_<Distribution>(m, "Distribution")
        .def_static("bernoulli", &Distribution::bernoulli, py::arg("size"), py::arg("prob"))
        .def_static("deterministic", &Distribution::deterministic, py::arg("size"))
        .def_static("discrete", &Distribution::discrete, py::arg("support"))
        .def_property_readonly("is_bernoulli", &Distribution::is_bernoulli)
        .def_property_readonly("is_deterministic", &Distribution::is_deterministic)
        .def_property_readonly("is_discrete", &Distribution::is_discrete)
        .def("size_param", &Distribution::size_param)
        .def("prob_param", &Distribution::prob_param)
        .def("mean", &Distribution::mean);

    py::class_<JobSpec>(m, "JobSpec")
        .def(py::init<int, Distribution>(), py::arg("id"), py::arg("dist"))
        .def_readwrite("id", &JobSpec::id)
        .def_readwrite("dist", &JobSpec::dist);

    py::class_<Instance>(m, "Instance")
        .def(py::init<>())
        .def(py::init([](int machines, std::vector<JobSpec> jobs) {
                 Instance inst{machines, std::move(jobs)};
                 inst.validate();
                 return inst;
             }),
             py::arg("machines"), py::arg("jobs"))
        .def_readwrite("machines", &Instance::machines)
        .def_readwrite("jobs", &Instance::jobs)
        .def_property_readonly("n", &Instance::n);

    py::class_<Realization>(m, "Realization")
        .def(py::init([](std::vector<double> sizes) { return Realization{std::move(sizes)}; }),
             py::arg("sizes"))
        .def_readwrite("sizes", &Realization::sizes);

    py::class_<LoadVector>(m, "LoadVector")
        .def(py::init([](std::vector<double> loads) { return LoadVector{std::move(loads)}; }),
             py::arg("loads"))
        .def_static("zeros", &LoadVector::zeros, py::arg("m"))
        .def_readwrite("loads", &LoadVector::loads);

    py::class_<ListOrder>(m, "ListOrder")
        .def(py::init([](std::vector<int> order) { return ListOrder{std::move(order)}; }),
             py::arg("order"))
        .def_readwrite("order", &ListOrder::order);

    py::class_<ScheduledJob>(m, "ScheduledJob")
        .def_readonly("job_id", &ScheduledJob::job_id)
        .def_readonly("machine", &ScheduledJob::machine)
        .def_readonly("start", &ScheduledJob::start)
        .def_readonly("completion", &ScheduledJob::completion)
        .def_readonly("size", &ScheduledJob::size);

    py::class_<Trace>(m, "Trace")
        .def_readonly("jobs", &Trace::jobs)
        .def_readonly("free_times", &Trace::free_times)
        .def_readonly("order", &Trace::order)
        .def_readonly("final_loads", &Trace::final_loads);

    py::class_<BatchPlan>(m, "BatchPlan")
        .def_readonly("batch_sets", &BatchPlan::batch_sets)
        .def_readonly("leftover", &BatchPlan::leftover)
        .def_readonly("K", &BatchPlan::K)
        .def("batch", &BatchPlan::batch, py::arg("k"));

    // job model
    m.def("sample_realization", &sample_realization, py::arg("instance"), py::arg("seed"));
    m.def("enumerate_realizations", &enumerate_realizations, py::arg("instance"),
          py::arg("cap") = kDefaultEnumerationCap);
    m.def("gen_free_time_gap_instance", &gen_free_time_gap_instance, py::arg("m"));
    m.def("gen_machine_sensitivity_instance", &gen_machine_sensitivity_instance, py::arg("m"),
          py::arg("c"), py::arg("job_cap") = kDefaultJobCountCap);
    m.def("distinct_size_count", &distinct_size_count, py::arg("instance"));
    m.def(
        "normalize_and_partition",
        [](const Instance& inst) {
            const PreparedInstance prep = normalize_and_partition(inst);
            return py::make_tuple(prep.scale, prep.small, prep.medium, prep.large, prep.instance);
        },
        py::arg("instance"), "returns (scale, small_ids, medium_ids, large_ids, rescaled_instance)");

    // list engine
    m.def("run_list_schedule",
          py::overload_cast<const Instance&, const Realization&, const ListOrder&, const LoadVector&>(
              &run_list_schedule),
          py::arg("instance"), py::arg("realization"), py::arg("order"), py::arg("initial"));
    m.def("run_list_schedule",
          py::overload_cast<const Instance&, const Realization&, const ListOrder&>(
              &run_list_schedule),
          py::arg("instance"), py::arg("realization"), py::arg("order"));
    m.def("total_completion", &total_completion, py::arg("trace"));
    m.def("free_time_after", &free_time_after, py::arg("trace"), py::arg("i"));
    m.def("weighted_free_time", &weighted_free_time, py::arg("trace"), py::arg("n"));
    m.def("makespan", &makespan, py::arg("trace"));

    // policies
    m.def("spt_order", &spt_order, py::arg("instance"), py::arg("realization"));
    m.def("bernoulli_size_order", &bernoulli_size_order, py::arg("instance"));
    m.def("random_order", &random_order, py::arg("instance"), py::arg("seed"));
    m.def("sept_order", &sept_order, py::arg("instance"));
    m.def("choose_jobs", &choose_jobs, py::arg("instance"));
    m.def("stoch_free_order", &stoch_free_order, py::arg("instance"));
    m.def("rescale_wrapper_order", &rescale_wrapper_order, py::arg("instance"));
    m.def("halve_machines_order", &halve_machines_order, py::arg("instance"), py::arg("realization"));

    // oracle
    m.def(
        "opt_adaptive_completion",
        [](const Instance& inst) { return opt_adaptive_completion(inst).value; },
        py::arg("instance"));
    m.def(
        "opt_adaptive_trace",
        [](const Instance& inst, const Realization& r) { return opt_adaptive_trace(inst, r); },
        py::arg("instance"), py::arg("realization"));
    m.def("opt_free_time_det", &opt_free_time_det, py::arg("jobs"), py::arg("m"), py::arg("initial"),
          py::arg("cap") = 9);
    m.def("opt_batch_free_times", &opt_batch_free_times, py::arg("plan"), py::arg("instance"),
          py::arg("realization"), py::arg("m"), py::arg("cap") = 9);
    m.def("check_exchange_property",
          [](const Instance& inst) { return check_exchange_property(inst); }, py::arg("instance"));

    // io
    m.def("instance_to_json", &instance_to_json, py::arg("instance"));
    m.def("instance_from_json", &instance_from_json, py::arg("text"));

    // experiments
    py::class_<MonteCarloEstimate>(m, "MonteCarloEstimate")
        .def_readonly("mean", &MonteCarloEstimate::mean)
        .def_readonly("ci95", &MonteCarloEstimate::ci95)
        .def_readonly("trials", &MonteCarloEstimate::trials);

    py::class_<SuiteOutcome>(m, "SuiteOutcome")
        .def_readonly("check", &SuiteOutcome::check)
        .def_readonly("cases", &SuiteOutcome::cases)
        .def_readonly("failures", &SuiteOutcome::failures)
        .def_readonly("worst_slack", &SuiteOutcome::worst_slack)
        .def("passed", &SuiteOutcome::passed);

    m.def(
        "monte_carlo_metric",
        [](const Instance& inst, const std::string& algorithm, const std::string& metric, int trials,
           std::uint64_t seed) {
            return monte_carlo_metric(inst, order_rule_from_name(algorithm),
                                      metric_from_name(metric), trials, seed);
        },
        py::arg("instance"), py::arg("algorithm"), py::arg("metric"), py::arg("trials"),
        py::arg("seed"));
    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed) {
            SuiteConfig config;
            config.seed = seed;
            for (const auto& [suite_name, fn] : suite_registry())
                if (suite_name == name) return fn(config);
            throw ArgumentError("unknown suite: " + name);
        },
        py::arg("name"), py::arg("seed"));
    m.def("known_order_rules", &known_order_rules);
    m.def("known_suites", [] {
        std::vector<std::string> names;
        for (const auto& [name, fn] : suite_registry()) names.push_back(name);
        return names;
    });
}
