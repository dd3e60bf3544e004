#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triloc/sweep.hpp"

namespace triloc {

/// One CSV file of a figure preset.
struct FigureSeries {
  std::string file_stem;  // e.g. "fig4_R20_T0.01"
  std::string label;
  std::vector<double> r_values;
  double tau_max = 0.0;
  int points = 0;
  ZenoSchedule schedule;
  MetricSet metrics;
};

struct FigurePreset {
  std::string name;
  std::string description;
  std::vector<FigureSeries> series;
};

/// fig1..fig5; nullopt for unknown names (table1 is handled separately).
std::optional<FigurePreset> figure_preset(const std::string& name);

std::vector<std::string> preset_names();

struct Table1Row {
  double p;
  double theta;
  double theta3;
  double reference_s;
  double reference_bound;
  std::string label;
};

/// Parameter rows of the GHZ-class benchmark with their reference values.
const std::vector<Table1Row>& table1_rows();

}  // namespace triloc
