#pragma once

#include <string>
#include <vector>

#include "purejump/experiments.hpp"
#include "purejump/model.hpp"
#include "purejump/teststat.hpp"

namespace purejump {

// JSON plumbing lives behind string interfaces so the public headers do not
// depend on the vendored parser.

std::string report_to_json(const TestReport& report);

std::string model_to_json(const ModelSpec& model);
ModelSpec model_from_json(const std::string& text);

// Plan files drive the `mc` subcommand. "kind" selects a plain grid run, a
// one-parameter sweep, a histogram export, or the three-column count table.
struct PlanConfig {
    enum class Kind { grid, sweep, histogram, table1 };
    Kind kind = Kind::grid;
    ExperimentPlan plan;
    std::string sweep_parameter;
    std::vector<double> sweep_values;
    HistogramRequest histogram;
};

PlanConfig plan_from_json(const std::string& text);
PlanConfig plan_from_json_file(const std::string& filename);

}  // namespace purejump
