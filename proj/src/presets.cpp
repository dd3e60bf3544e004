#include "triloc/presets.hpp"

#include <numbers>

namespace triloc {
namespace {

MetricSet metrics_of(bool s, bool chsh, bool pi) { return {s, chsh, pi, true}; }

// Strong coupling is resolved on tau in [0, 2], weak coupling on [0, 30].
std::vector<FigureSeries> coupling_panels(const std::string& prefix, MetricSet m) {
  return {
      {prefix + "a", "surface over (tau, R)", {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}, 5.0, 101, {}, m},
      {prefix + "b", "strong coupling", {10.0, 20.0}, 2.0, 401, {}, m},
      {prefix + "c", "weak coupling", {0.1, 0.2}, 30.0, 301, {}, m},
  };
}

std::vector<FigureSeries> zeno_panels(const std::string& prefix, MetricSet m) {
  std::vector<FigureSeries> out;
  out.push_back({prefix + "_R20_free", "R=20 free", {20.0}, 2.0, 201, ZenoSchedule::none(), m});
  for (const char* t : {"0.01", "0.005", "0.001"})
    out.push_back({prefix + "_R20_T" + t, std::string("R=20 lambda T=") + t, {20.0}, 2.0, 201, ZenoSchedule::every(std::stod(t)), m});
  out.push_back({prefix + "_R0.1_free", "R=0.1 free", {0.1}, 30.0, 301, ZenoSchedule::none(), m});
  for (const char* t : {"5", "1", "0.1"})
    out.push_back({prefix + "_R0.1_T" + t, std::string("R=0.1 lambda T=") + t, {0.1}, 30.0, 301, ZenoSchedule::every(std::stod(t)), m});
  return out;
}

}  // namespace

std::optional<FigurePreset> figure_preset(const std::string& name) {
  if (name == "fig1") return FigurePreset{name, "Svetlichny value versus tau and R", coupling_panels("fig1", metrics_of(true, false, false))};
  if (name == "fig2")
    return FigurePreset{name,
                        "Svetlichny value and pairwise CHSH for R = 20 and R = 0.1",
                        {{"fig2_R20", "R=20", {20.0}, 2.0, 401, {}, metrics_of(true, true, false)},
                         {"fig2_R0.1", "R=0.1", {0.1}, 30.0, 301, {}, metrics_of(true, true, false)}}};
  if (name == "fig3") return FigurePreset{name, "pi-tangle versus tau and R", coupling_panels("fig3", metrics_of(false, false, true))};
  if (name == "fig4") return FigurePreset{name, "Svetlichny value with and without measurements", zeno_panels("fig4", metrics_of(true, false, false))};
  if (name == "fig5") return FigurePreset{name, "pi-tangle with and without measurements", zeno_panels("fig5", metrics_of(false, false, true))};
  return std::nullopt;
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "fig4", "fig5", "table1"}; }

const std::vector<Table1Row>& table1_rows() {
  using std::numbers::pi;
  static const std::vector<Table1Row> rows = {
      {1.0, pi / 3, pi / 2, 4.8990, 4.8990, "p=1, theta=pi/3, theta3=pi/2"},
      {0.8, pi / 3, pi / 2, 3.9192, 3.9192, "p=0.8, theta=pi/3, theta3=pi/2"},
      {0.998, pi / 3, 0.6216, 3.8610, 4.0006, "p=0.998, theta=pi/3, theta3=0.6216"},
      {0.99, pi / 3, 0.6215, 3.8298, 3.9684, "p=0.99, theta=pi/3, theta3=0.6215"},
      {1.0, pi / 4, pi / 2, 5.6569, 5.6569, "p=1, theta=pi/4, theta3=pi/2"},
      {0.8, pi / 4, pi / 2, 4.5255, 4.5255, "p=0.8, theta=pi/4, theta3=pi/2"},
  };
  return rows;
}

}  // namespace triloc
