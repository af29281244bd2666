#include "stochsched/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace stochsched {

using nlohmann::json;

namespace {

json dist_to_json(const Distribution& dist) {
    json out;
    if (const auto* b = std::get_if<Bernoulli>(&dist.raw())) {
        out["type"] = "bernoulli";
        out["size"] = b->size;
        out["prob"] = b->prob;
    } else if (const auto* d = std::get_if<Deterministic>(&dist.raw())) {
        out["type"] = "deterministic";
        out["size"] = d->size;
    } else {
        out["type"] = "discrete";
        out["support"] = json::array();
        for (const auto& [value, prob] : std::get<Discrete>(dist.raw()).support)
            out["support"].push_back(json::array({value, prob}));
    }
    return out;
}

Distribution dist_from_json(const json& node) {
    const std::string type = node.at("type").get<std::string>();
    if (type == "bernoulli")
        return Distribution::bernoulli(node.at("size").get<double>(), node.at("prob").get<double>());
    if (type == "deterministic") return Distribution::deterministic(node.at("size").get<double>());
    if (type == "discrete") {
        std::vector<std::pair<double, double>> support;
        for (const auto& entry : node.at("support"))
            support.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
        return Distribution::discrete(std::move(support));
    }
    throw ArgumentError("unknown distribution type: " + type);
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
    json out;
    out["machines"] = instance.machines;
    out["jobs"] = json::array();
    for (const JobSpec& job : instance.jobs)
        out["jobs"].push_back({{"id", job.id}, {"dist", dist_to_json(job.dist)}});
    return out.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    json node;
    try {
        node = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ArgumentError(std::string("invalid instance JSON: ") + e.what());
    }
    Instance instance;
    instance.machines = node.at("machines").get<int>();
    std::set<int> seen;
    std::vector<JobSpec> jobs;
    for (const auto& entry : node.at("jobs")) {
        JobSpec job;
        job.id = entry.at("id").get<int>();
        if (!seen.insert(job.id).second)
            throw ArgumentError("duplicate job id: " + std::to_string(job.id));
        job.dist = dist_from_json(entry.at("dist"));
        jobs.push_back(std::move(job));
    }
    std::sort(jobs.begin(), jobs.end(), [](const JobSpec& a, const JobSpec& b) { return a.id < b.id; });
    instance.jobs = std::move(jobs);
    instance.validate();
    return instance;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open instance file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return instance_from_json(buffer.str());
}

void save_instance(const Instance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write instance file: " + path);
    out << instance_to_json(instance);
}

std::string format_number(double value) {
    if (value == std::floor(value) && std::abs(value) < 1e15) {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%.0f", value);
        return buffer;
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

void write_trace_csv(std::ostream& os, const Trace& trace) {
    os << "job_id,machine,start,completion,size\n";
    for (const ScheduledJob& job : trace.jobs)
        os << job.job_id << ',' << job.machine << ',' << format_number(job.start) << ','
           << format_number(job.completion) << ',' << format_number(job.size) << '\n';
}

void write_free_time_csv(std::ostream& os, const Trace& trace) {
    os << "i,F_i\n";
    for (std::size_t i = 0; i < trace.free_times.size(); ++i)
        os << i << ',' << format_number(trace.free_times[i]) << '\n';
}

void write_report_header(std::ostream& os) {
    os << "instance_id,alg,metric,mean,ci95,baseline,ratio,trials,seed\n";
}

void write_report_row(std::ostream& os, const RatioReport& report) {
    os << report.instance_id << ',' << report.algorithm << ',' << metric_name(report.metric) << ','
       << format_number(report.estimate.mean) << ',' << format_number(report.estimate.ci95) << ','
       << format_number(report.baseline) << ',' << format_number(report.ratio) << ','
       << report.estimate.trials << ',' << report.seed << '\n';
}

std::string suite_outcome_to_json(const SuiteOutcome& outcome) {
    json out;
    out["check"] = outcome.check;
    out["cases"] = outcome.cases;
    out["failures"] = outcome.failures;
    if (std::isfinite(outcome.worst_slack))
        out["worst_slack"] = outcome.worst_slack;
    else
        out["worst_slack"] = nullptr;
    return out.dump(2);
}

}  // namespace stochsched
