#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "corput/discrepancy.hpp"
#include "corput/greedy.hpp"
#include "corput/piecewise.hpp"
#include "corput/verify.hpp"

namespace corput {

// One point per line, decimal or "p/q". The exact list is kept when every
// line parses as a rational (decimals count); otherwise floats only.
TorusPointSet read_points_file(const std::string& path);
TorusPointSet parse_points_text(const std::string& text);

// Exact strings when available, shortest round-trip decimals otherwise.
std::string points_csv(const TorusPointSet& ps);

nlohmann::json points_json(const TorusPointSet& ps);
nlohmann::json report_json(const DiscrepancyReport& rep);
nlohmann::json piecewise_json(const PiecewiseAffine& pa);
nlohmann::json trajectory_json(const GreedyTrajectory& traj);
nlohmann::json leveque_json(const LevequeResult& res);
nlohmann::json match_json(const MatchResult& res);

std::string double_str(double x);  // shortest round-trip decimal

}  // namespace corput
