#include <doctest.h>

#include <sstream>

#include "triloc/error.hpp"
#include "triloc/presets.hpp"
#include "triloc/report.hpp"
#include "triloc/sweep.hpp"

using namespace triloc;

namespace {

SweepSpec small_spec() {
  SweepSpec spec;
  spec.r_values = {0.1, 20.0};
  spec.taus = linspace(0.0, 1.0, 6);
  spec.optimizer.starts = 8;
  return spec;
}

std::string csv_of(const std::vector<SweepRow>& rows) {
  std::ostringstream ss;
  write_sweep_csv(ss, rows);
  return ss.str();
}

}  // namespace

TEST_CASE("linspace") {
  const auto g = linspace(0.0, 2.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g[1] == 0.5);
  CHECK(g.back() == 2.0);
  CHECK(linspace(1.0, 3.0, 1) == std::vector<double>{1.0});
  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), Error);
}

TEST_CASE("parse_metrics") {
  const auto m = parse_metrics("svetlichny,survival");
  CHECK(m.svetlichny);
  CHECK(m.survival);
  CHECK_FALSE(m.chsh);
  CHECK_FALSE(m.pi_tangle);
  CHECK(parse_metrics("all").pi_tangle);
  CHECK_THROWS_AS(parse_metrics("svetlichny,entropy"), Error);
}

TEST_CASE("sweep: row order and agreement with the serial reference") {
  const auto spec = small_spec();
  const auto rows = sweep(spec);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].r == 0.1);
  CHECK(rows[5].tau == 1.0);
  CHECK(rows[6].r == 20.0);
  CHECK(rows[6].tau == 0.0);
  CHECK(csv_of(rows) == csv_of(sweep_serial(spec)));
  CHECK(rows[0].survival == doctest::Approx(1.0));
  CHECK(*rows[0].s_svetlichny == doctest::Approx(4.3546).epsilon(1e-4));
  for (const auto& row : rows) {
    CHECK_FALSE(row.error.has_value());
    CHECK(*row.s_svetlichny <= *row.s_bound + 1e-9);
  }
}

TEST_CASE("sweep: grid errors") {
  auto spec = small_spec();
  spec.taus = {};
  CHECK_THROWS_AS(sweep(spec), Error);
  spec = small_spec();
  spec.taus = {0.0, 0.5, 0.5};
  CHECK_THROWS_AS(sweep(spec), Error);
  spec = small_spec();
  spec.r_values = {2.0, 1.0};
  CHECK_THROWS_AS(sweep_serial(spec), Error);
}

TEST_CASE("sweep CSV: header, number format and reruns") {
  const auto spec = small_spec();
  const std::string a = csv_of(sweep(spec));
  CHECK(a.rfind("tau,r,delta,s_svetlichny,s_bound,chsh_ab,pi_tangle,survival,error\n", 0) == 0);
  CHECK(a == csv_of(sweep(spec)));
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(4.0 * std::sqrt(2.0)) == "5.65685424949");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(0.0) == "0");
}

TEST_CASE("sweep CSV: unrequested metrics stay empty") {
  auto spec = small_spec();
  spec.metrics = parse_metrics("survival");
  const auto rows = sweep(spec);
  CHECK_FALSE(rows[0].s_svetlichny.has_value());
  const std::string csv = csv_of(rows);
  CHECK(csv.find("\n0,0.1,0,,,,,1,\n") != std::string::npos);
}

TEST_CASE("sweep: a failing row reports its error and the rest still run") {
  SweepSpec spec;
  spec.r_values = {0.1};
  spec.taus = {0.0, 1.0};
  spec.metrics = parse_metrics("survival");
  spec.schedule = ZenoSchedule::every(1e5);  // survival underflows at the interval
  const auto rows = sweep(spec);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].error.has_value());
  CHECK(error_count(rows) == 2);
  const std::string csv = csv_of(rows);
  CHECK(csv.find(",\"") != std::string::npos);

  spec.schedule = ZenoSchedule::every(1.0);
  CHECK(error_count(sweep(spec)) == 0);
}

TEST_CASE("figure presets") {
  for (const auto& name : preset_names()) {
    if (name == "table1") continue;
    const auto p = figure_preset(name);
    REQUIRE(p.has_value());
    CHECK_FALSE(p->series.empty());
    for (const auto& s : p->series) {
      CHECK(s.points > 1);
      CHECK(s.metrics.survival);
    }
  }
  CHECK_FALSE(figure_preset("fig9").has_value());
  const auto fig4 = figure_preset("fig4");
  REQUIRE(fig4.has_value());
  int zeno = 0;
  for (const auto& s : fig4->series) zeno += s.schedule.enabled;
  CHECK(zeno == 6);
  CHECK(table1_rows().size() == 6);
}
