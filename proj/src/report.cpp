#include "triloc/report.hpp"

#include <charconv>
#include <ostream>

namespace triloc {
namespace {

std::string csv_field(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

// Errors are free text; quote them per RFC 4180.
std::string csv_text(const std::optional<std::string>& s) {
  if (!s) return {};
  std::string out = "\"";
  for (char c : *s) {
    if (c == '"') out += '"';
    out += (c == '\n' || c == '\r') ? ' ' : c;
  }
  return out + '"';
}

nlohmann::json vec_json(const Vec3& v) { return nlohmann::json::array({v[0], v[1], v[2]}); }

nlohmann::json opt_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : rows) {
    out << format_number(row.tau) << ',' << format_number(row.r) << ',' << format_number(row.delta) << ','
        << csv_field(row.s_svetlichny) << ',' << csv_field(row.s_bound) << ',' << csv_field(row.chsh_ab) << ','
        << csv_field(row.pi_tangle) << ',' << csv_field(row.survival) << ',' << csv_text(row.error) << '\n';
  }
}

nlohmann::json to_json(const SvetlichnyResult& r) {
  const auto& s = r.best_settings;
  return {
      {"value", r.value},
      {"angles", {{"alpha", s.alpha}, {"beta", s.beta}}},
      {"z", vec_json(s.z())},
      {"z_prime", vec_json(s.z_prime())},
      {"y", vec_json(s.y())},
      {"y_prime", vec_json(s.y_prime())},
      {"x", vec_json(r.optimal_x)},
      {"x_prime", vec_json(r.optimal_x_prime)},
      {"seed", r.seed},
      {"starts", r.starts_used},
  };
}

nlohmann::json to_json(const OptimizerConfig& cfg) {
  return {{"starts", cfg.starts},     {"coarse_grid", cfg.coarse_grid}, {"max_iters", cfg.max_iters},
          {"tol", cfg.tol},           {"seed", cfg.seed},               {"refine_best", cfg.refine_best}};
}

nlohmann::json to_json(const PiTangleBreakdown& p) {
  return {{"pi_a", p.pi_a},
          {"pi_b", p.pi_b},
          {"pi_c", p.pi_c},
          {"pi_abc", p.pi_abc},
          {"n_one_vs_two", {{"a_bc", p.n_one_vs_two[0]}, {"b_ac", p.n_one_vs_two[1]}, {"c_ab", p.n_one_vs_two[2]}}},
          {"n_pairwise",
           {{"ab", p.n_pairwise[0]},
            {"ac", p.n_pairwise[1]},
            {"ba", p.n_pairwise[2]},
            {"bc", p.n_pairwise[3]},
            {"ca", p.n_pairwise[4]},
            {"cb", p.n_pairwise[5]}}}};
}

nlohmann::json to_json(const SweepRow& row) {
  return {{"tau", row.tau},
          {"r", row.r},
          {"delta", row.delta},
          {"s_svetlichny", opt_json(row.s_svetlichny)},
          {"s_bound", opt_json(row.s_bound)},
          {"chsh_ab", opt_json(row.chsh_ab)},
          {"pi_tangle", opt_json(row.pi_tangle)},
          {"survival", opt_json(row.survival)},
          {"error", row.error ? nlohmann::json(*row.error) : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const ZenoSchedule& s) {
  if (!s.enabled) return {{"enabled", false}};
  return {{"enabled", true}, {"interval", s.interval}};
}

std::size_t error_count(const std::vector<SweepRow>& rows) {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.error.has_value();
  return n;
}

}  // namespace triloc
