#include "corput/io.hpp"

#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace corput {

using nlohmann::json;

std::string double_str(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

TorusPointSet parse_points_text(const std::string& text) {
  std::vector<double> pts;
  std::vector<Rational> exact;
  bool all_exact = true;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    // strip comments and blanks
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string tok;
    std::istringstream ls(line);
    if (!(ls >> tok)) continue;
    if (auto q = parse_rational(tok)) {
      pts.push_back(to_double(*q));
      if (all_exact) exact.push_back(*q);
    } else {
      try {
        std::size_t used = 0;
        pts.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (...) {
        throw std::invalid_argument("unreadable point: '" + tok + "'");
      }
      all_exact = false;
    }
  }
  TorusPointSet ps;
  ps.points = std::move(pts);
  if (all_exact) ps.exact = std::move(exact);
  validate(ps);
  return ps;
}

TorusPointSet read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open points file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_points_text(buf.str());
}

std::string points_csv(const TorusPointSet& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    if (ps.exact)
      out += rational_str((*ps.exact)[i]);
    else
      out += double_str(ps.points[i]);
    out += '\n';
  }
  return out;
}

json points_json(const TorusPointSet& ps) {
  json arr = json::array();
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    json item;
    item["index"] = i;
    item["value_float"] = ps.points[i];
    item["value_exact"] =
        ps.exact ? json(rational_str((*ps.exact)[i])) : json(nullptr);
    arr.push_back(std::move(item));
  }
  return arr;
}

json report_json(const DiscrepancyReport& rep) {
  json j;
  j["n"] = rep.n;
  j["method"] = rep.method;
  j["error_bound"] = rep.error_bound;
  if (rep.d_exact) {
    j["d"] = rational_str(*rep.d_exact);
    j["d_plus"] = rational_str(*rep.d_plus_exact);
    j["d_minus"] = rational_str(*rep.d_minus_exact);
  } else {
    j["d"] = rep.d;
    j["d_plus"] = rep.d_plus;
    j["d_minus"] = rep.d_minus;
  }
  j["d_float"] = rep.d;
  return j;
}

json piecewise_json(const PiecewiseAffine& pa) {
  json j;
  json bps = json::array(), vals = json::array();
  for (const Rational& x : pa.breakpoints()) bps.push_back(rational_str(x));
  for (const Rational& v : pa.values()) vals.push_back(rational_str(v));
  j["breakpoints"] = std::move(bps);
  j["values"] = std::move(vals);
  return j;
}

json trajectory_json(const GreedyTrajectory& traj) {
  json j;
  j["kernel"] = traj.kernel_name;
  j["policy"] = traj.policy.str();
  j["tie_tolerance"] = traj.tie_tolerance;
  j["n"] = traj.total_points();
  j["points"] = points_json(traj.point_set());
  json steps = json::array();
  for (const auto& cs : traj.candidates_per_step) {
    json st = json::array();
    for (std::size_t i = 0; i < cs.args.size(); ++i) {
      if (cs.exact)
        st.push_back(rational_str((*cs.exact)[i]));
      else
        st.push_back(cs.args[i]);
    }
    steps.push_back(std::move(st));
  }
  j["candidates_per_step"] = std::move(steps);
  return j;
}

json leveque_json(const LevequeResult& res) {
  json j;
  j["bound"] = res.bound;
  j["bracket_partial"] = res.bracket_partial;
  j["bracket_tail"] = res.bracket_tail;
  j["k_max"] = res.k_max;
  return j;
}

json match_json(const MatchResult& res) {
  json j;
  j["ok"] = res.ok;
  j["m"] = res.m;
  j["sigma"] = res.ok ? json(res.sigma.str()) : json(nullptr);
  j["matched_prefix_length"] = res.matched_prefix_length;
  j["max_residual"] = res.max_residual;
  if (!res.ok) {
    j["error"] = res.error;
    j["first_bad_index"] = res.first_bad_index;
  }
  return j;
}

}  // namespace corput
