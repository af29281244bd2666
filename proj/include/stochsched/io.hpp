#pragma once

#include <iosfwd>
#include <string>

#include "stochsched/experiments.hpp"
#include "stochsched/job_model.hpp"
#include "stochsched/list_engine.hpp"

namespace stochsched {

// Instance JSON:
//   {"machines": m, "jobs": [{"id": 0, "dist": {"type": "bernoulli",
//    "size": 10, "prob": 0.5}}, ...]}
// type is one of bernoulli/deterministic/discrete; discrete carries
// "support": [[value, prob], ...].
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

// CSV columns: job_id, machine, start, completion, size
void write_trace_csv(std::ostream& os, const Trace& trace);
// CSV columns: i, F_i
void write_free_time_csv(std::ostream& os, const Trace& trace);

// CSV columns: instance_id, alg, metric, mean, ci95, baseline, ratio, trials, seed
void write_report_header(std::ostream& os);
void write_report_row(std::ostream& os, const RatioReport& report);

// {"check": ..., "cases": ..., "failures": [...], "worst_slack": ...}
std::string suite_outcome_to_json(const SuiteOutcome& outcome);

// Canonical number formatting shared by all emitters so identical runs
// produce byte-identical files.
std::string format_number(double value);

}  // namespace stochsched
