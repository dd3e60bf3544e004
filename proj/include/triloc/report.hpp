#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "triloc/entanglement.hpp"
#include "triloc/sweep.hpp"

namespace triloc {

/// Sweep CSV header, fixed.
inline constexpr const char* kSweepCsvHeader = "tau,r,delta,s_svetlichny,s_bound,chsh_ab,pi_tangle,survival,error";

/// 12 significant digits, '.' decimal separator, independent of the locale.
std::string format_number(double value);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

nlohmann::json to_json(const SvetlichnyResult& r);
nlohmann::json to_json(const OptimizerConfig& cfg);
nlohmann::json to_json(const PiTangleBreakdown& p);
nlohmann::json to_json(const SweepRow& row);
nlohmann::json to_json(const ZenoSchedule& s);

std::size_t error_count(const std::vector<SweepRow>& rows);

}  // namespace triloc
