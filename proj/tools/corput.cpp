// Command-line front end: greedy generation, radical-inverse sequences,
// permutation-family tooling, discrepancy reports, psi exports, asymptotic
// bounds and the cross-module verification suites.
//
// Exit codes: 0 success, 1 invalid input, 2 verification failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "corput/io.hpp"
#include "corput/verify.hpp"

using namespace corput;
using nlohmann::json;

namespace {

struct CommonOut {
  std::string format = "json";
  std::string output;

  void emit(const json& j, const std::string& csv) const {
    const std::string text = format == "csv" ? csv : j.dump(2) + "\n";
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output);
      if (!out) throw std::invalid_argument("cannot open output file: " + output);
      out << text;
    }
  }
};

void add_common(CLI::App* cmd, CommonOut& out) {
  cmd->add_option("--format", out.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output,-o", out.output, "write to file instead of stdout");
}

TorusPointSet seed_from_options(const std::string& points_file,
                                const std::string& inline_seed) {
  if (!points_file.empty()) return read_points_file(points_file);
  std::string text = inline_seed.empty() ? "0" : inline_seed;
  for (char& c : text)
    if (c == ',') c = '\n';
  return parse_points_text(text);
}

Permutation perm_from_option(const std::string& s, int base) {
  if (s.empty()) return Permutation::identity(base);
  auto p = Permutation::parse(s);
  if (!p) throw std::invalid_argument("malformed permutation: " + s);
  if (p->base() != base)
    throw std::invalid_argument("permutation size does not match base");
  return *p;
}

int run(int argc, char** argv) {
  CLI::App app{"greedy energy minimization and permuted van der Corput toolkit"};
  app.require_subcommand(1);

  // ---- generate ----
  auto* generate = app.add_subcommand("generate", "run the greedy dynamical system");
  std::string g_kernel = "logsin", g_policy = "smallest", g_seed, g_points_file;
  int g_n = 16;
  std::uint64_t g_rng = 0;
  double g_tie = 1e-9;
  bool g_no_candidates = false;
  CommonOut g_out;
  generate->add_option("--kernel", g_kernel, "logsin|bernoulli2|power:<p>");
  generate->add_option("--n", g_n, "total number of points")->required();
  generate->add_option("--policy", g_policy, "smallest|largest|index:<k>|random:<seed>");
  generate->add_option("--rng-seed", g_rng, "seed for --policy random");
  generate->add_option("--seed-points", g_seed, "comma-separated seed (default: 0)");
  generate->add_option("--points", g_points_file, "seed points file, one per line");
  generate->add_option("--tie-tol", g_tie, "relative tie tolerance");
  generate->add_flag("--no-candidates", g_no_candidates, "omit candidate sets");
  add_common(generate, g_out);

  // ---- vdc ----
  auto* vdc = app.add_subcommand("vdc", "radical-inverse prefix or segment");
  int v_base = 2;
  long long v_n = -1, v_n1 = 0, v_n2 = -1;
  std::string v_perm;
  CommonOut v_out;
  vdc->add_option("--base", v_base, "integer base >= 2");
  vdc->add_option("--n", v_n, "prefix length (points 0..n-1)");
  vdc->add_option("--n1", v_n1, "segment start");
  vdc->add_option("--n2", v_n2, "segment end (exclusive)");
  vdc->add_option("--perm", v_perm, "digit permutation, e.g. 0,2,1,3");
  add_common(vdc, v_out);

  // ---- family ----
  auto* family = app.add_subcommand("family", "permutation family tooling");
  int f_m = 2;
  bool f_enumerate = false, f_count = false;
  int f_sample = 0;
  std::uint64_t f_rng = 1;
  std::string f_member;
  CommonOut f_out;
  family->add_option("--m", f_m, "family level (base 2^m)")->required();
  family->add_flag("--enumerate", f_enumerate, "list every member (m <= 4)");
  family->add_flag("--count", f_count, "member count");
  family->add_option("--sample", f_sample, "draw this many members");
  family->add_option("--rng-seed", f_rng, "sampling seed");
  family->add_option("--member", f_member, "membership test for a permutation");
  add_common(family, f_out);

  // ---- discrepancy ----
  auto* disc = app.add_subcommand("discrepancy", "extreme and one-sided discrepancy");
  std::string d_method = "geometric", d_points_file, d_perm;
  int d_base = 2, d_n = 0, d_n_max = 0;
  CommonOut d_out;
  disc->add_option("--method", d_method, "geometric|faure")
      ->check(CLI::IsMember({"geometric", "faure"}));
  disc->add_option("--points", d_points_file, "points file (geometric only)");
  disc->add_option("--base", d_base, "sequence base (used without --points)");
  disc->add_option("--perm", d_perm, "digit permutation");
  disc->add_option("--n", d_n, "prefix length");
  disc->add_option("--n-max", d_n_max, "emit reports for n = 1..n-max");
  add_common(disc, d_out);

  // ---- psi ----
  auto* psi = app.add_subcommand("psi", "export phi/psi/F_m as exact data");
  int p_base = 2, p_samples = 0;
  std::string p_perm, p_which = "psi";
  CommonOut p_out;
  psi->add_option("--base", p_base, "base >= 2");
  psi->add_option("--perm", p_perm, "digit permutation");
  psi->add_option("--which", p_which, "psi|psi+|psi-|phi:<h>|fm:<m>");
  psi->add_option("--csv-samples", p_samples, "sampled CSV rows (x, psi+, psi-, psi)");
  add_common(psi, p_out);

  // ---- alpha ----
  auto* alpha = app.add_subcommand("alpha", "scale-averaged discrepancy bound sequence");
  int a_base = 2, a_m_max = 16;
  std::string a_perm;
  CommonOut a_out;
  alpha->add_option("--base", a_base, "base >= 2");
  alpha->add_option("--perm", a_perm, "digit permutation");
  alpha->add_option("--m-max", a_m_max, "largest averaging depth");
  add_common(alpha, a_out);

  // ---- bound ----
  auto* bound = app.add_subcommand("bound", "exponential-sum discrepancy bound");
  std::string b_points_file;
  int b_n = 0;
  long long b_kmax = 10000;
  CommonOut b_out;
  bound->add_option("--points", b_points_file, "points file")->required();
  bound->add_option("--n", b_n, "prefix length (default: all)");
  bound->add_option("--k-max", b_kmax, "frequency cutoff");
  add_common(bound, b_out);

  // ---- energy ----
  auto* energy = app.add_subcommand("energy", "pair-energy report");
  std::string e_points_file, e_kernel = "bernoulli2";
  CommonOut e_out;
  energy->add_option("--points", e_points_file, "points file")->required();
  energy->add_option("--kernel", e_kernel, "bounded kernel");
  add_common(energy, e_out);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "cross-module check suites");
  std::string w_check = "all", w_kernel = "logsin", w_seed;
  int w_n = 64, w_m = 3, w_n_max = 64, w_sample = 0, w_trials = 100;
  std::uint64_t w_rng = 1;
  CommonOut w_out;
  verify->add_option("--check", w_check,
                     "greedy-vdc|trajectory-match|family-equiv|self-similarity|explore|one-sided-probe|all");
  verify->add_option("--kernel", w_kernel, "kernel for greedy checks");
  verify->add_option("--n", w_n, "trajectory length");
  verify->add_option("--m", w_m, "family level");
  verify->add_option("--n-max", w_n_max, "largest prefix length");
  verify->add_option("--sample", w_sample, "sampled members (0 = enumerate)");
  verify->add_option("--trials", w_trials, "self-similarity trials");
  verify->add_option("--rng-seed", w_rng, "seed for sampled checks");
  verify->add_option("--seed-points", w_seed, "seed for explore");
  add_common(verify, w_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (generate->parsed()) {
    const KernelPtr k = kernel_from_string(g_kernel);
    auto policy = SelectionPolicy::parse(g_policy);
    if (!policy) throw std::invalid_argument("unknown policy: " + g_policy);
    if (policy->kind == SelectionPolicy::Kind::Random && g_rng != 0)
      policy->rng_seed = g_rng;
    const TorusPointSet seed = seed_from_options(g_points_file, g_seed);
    const GreedyTrajectory traj = greedy_run(seed, *k, g_n, *policy, g_tie);
    json j = trajectory_json(traj);
    if (g_no_candidates) j.erase("candidates_per_step");
    // candidates for the next point, the state the run would branch on
    const CandidateSet next = candidate_minima(traj.point_set(), *k, g_tie);
    json next_j = json::array();
    for (std::size_t i = 0; i < next.args.size(); ++i) {
      if (next.exact)
        next_j.push_back(rational_str((*next.exact)[i]));
      else
        next_j.push_back(next.args[i]);
    }
    j["next_candidates"] = std::move(next_j);
    g_out.emit(j, points_csv(traj.point_set()));
    return 0;
  }

  if (vdc->parsed()) {
    if (v_base < 2) throw std::invalid_argument("base must be >= 2");
    const Permutation sigma = perm_from_option(v_perm, v_base);
    long long n1 = v_n1, n2 = v_n2;
    if (v_n >= 0) {
      n1 = 0;
      n2 = v_n;
    }
    if (n2 < 0) throw std::invalid_argument("need --n or --n1/--n2");
    const TorusPointSet pts = vdc_segment(n1, n2, v_base, sigma);
    json j;
    j["base"] = v_base;
    j["perm"] = sigma.str();
    j["n1"] = n1;
    j["n2"] = n2;
    j["points"] = points_json(pts);
    v_out.emit(j, points_csv(pts));
    return 0;
  }

  if (family->parsed()) {
    json j;
    j["m"] = f_m;
    std::string csv;
    if (f_count) {
      j["count"] = family_count(f_m).str();
      csv = family_count(f_m).str() + "\n";
    } else if (f_enumerate) {
      json arr = json::array();
      for (const Permutation& s : enumerate_family(f_m)) {
        arr.push_back(s.str());
        csv += s.str() + "\n";
      }
      j["permutations"] = std::move(arr);
    } else if (f_sample > 0) {
      json arr = json::array();
      for (int i = 0; i < f_sample; ++i) {
        const Permutation s = sample_family(f_m, f_rng, static_cast<std::uint64_t>(i));
        arr.push_back(s.str());
        csv += s.str() + "\n";
      }
      j["permutations"] = std::move(arr);
      j["rng_seed"] = f_rng;
    } else if (!f_member.empty()) {
      auto p = Permutation::parse(f_member);
      if (!p) throw std::invalid_argument("malformed permutation: " + f_member);
      const bool member = family_membership(*p);
      j["permutation"] = p->str();
      j["member"] = member;
      csv = std::string(member ? "true" : "false") + "\n";
    } else {
      throw std::invalid_argument(
          "family needs one of --enumerate, --count, --sample, --member");
    }
    f_out.emit(j, csv);
    return 0;
  }

  if (disc->parsed()) {
    const int n_hi = d_n_max > 0 ? d_n_max : d_n;
    if (n_hi <= 0) throw std::invalid_argument("need --n or --n-max");
    const int n_lo = d_n_max > 0 ? 1 : d_n;
    json reports = json::array();
    std::string csv = "n,d,d_plus,d_minus\n";
    if (d_method == "geometric") {
      TorusPointSet pts;
      if (!d_points_file.empty())
        pts = read_points_file(d_points_file);
      else
        pts = vdc_segment(0, n_hi, d_base, perm_from_option(d_perm, d_base));
      for (int n = n_lo; n <= n_hi; ++n) {
        const DiscrepancyReport rep = extreme_discrepancy(pts, n);
        reports.push_back(report_json(rep));
        csv += std::to_string(n) + "," + double_str(rep.d) + "," +
               double_str(rep.d_plus) + "," + double_str(rep.d_minus) + "\n";
      }
    } else {
      const Permutation sigma = perm_from_option(d_perm, d_base);
      const PsiTriple t = psi_functions(d_base, sigma);
      for (int n = n_lo; n <= n_hi; ++n) {
        const FaureSeries s = faure_discrepancy_series(t, n);
        DiscrepancyReport rep;
        rep.n = n;
        rep.method = "faure-series";
        rep.error_bound = 0.0;
        rep.d_exact = Rational(s.nd / n);
        rep.d_plus_exact = Rational(s.nd_plus / n);
        rep.d_minus_exact = Rational(s.nd_minus / n);
        rep.d = to_double(*rep.d_exact);
        rep.d_plus = to_double(*rep.d_plus_exact);
        rep.d_minus = to_double(*rep.d_minus_exact);
        reports.push_back(report_json(rep));
        csv += std::to_string(n) + "," + double_str(rep.d) + "," +
               double_str(rep.d_plus) + "," + double_str(rep.d_minus) + "\n";
      }
    }
    d_out.emit(d_n_max > 0 ? json(reports) : reports.back(), csv);
    return 0;
  }

  if (psi->parsed()) {
    const Permutation sigma = perm_from_option(p_perm, p_base);
    const PsiTriple t = psi_functions(p_base, sigma);
    const PiecewiseAffine* which = &t.psi;
    PiecewiseAffine storage;
    if (p_which == "psi+") {
      which = &t.plus;
    } else if (p_which == "psi-") {
      which = &t.minus;
    } else if (p_which.rfind("phi:", 0) == 0) {
      storage = phi_function(p_base, sigma, std::stoi(p_which.substr(4)));
      which = &storage;
    } else if (p_which.rfind("fm:", 0) == 0) {
      storage = f_m_function(p_base, sigma, std::stoi(p_which.substr(3)));
      which = &storage;
    } else if (p_which != "psi") {
      throw std::invalid_argument("unknown --which: " + p_which);
    }
    json j = piecewise_json(*which);
    j["base"] = p_base;
    j["perm"] = sigma.str();
    j["which"] = p_which;
    std::string csv = "x,psi_plus,psi_minus,psi\n";
    const int rows = p_samples > 0 ? p_samples : 64;
    for (int i = 0; i <= rows; ++i) {
      const Rational x(i, rows);
      csv += rational_str(x) + "," + double_str(to_double(t.plus.eval(x))) + "," +
             double_str(to_double(t.minus.eval(x))) + "," +
             double_str(to_double(t.psi.eval(x))) + "\n";
    }
    p_out.emit(j, csv);
    return 0;
  }

  if (alpha->parsed()) {
    const Permutation sigma = perm_from_option(a_perm, a_base);
    const auto seq = f_m_and_alpha(a_base, sigma, a_m_max);
    json arr = json::array();
    std::string csv = "m,bound,bound_float\n";
    for (const auto& [m, q] : seq) {
      json item;
      item["m"] = m;
      item["bound"] = rational_str(q);
      item["bound_float"] = to_double(q);
      arr.push_back(std::move(item));
      csv += std::to_string(m) + "," + rational_str(q) + "," +
             double_str(to_double(q)) + "\n";
    }
    json j;
    j["base"] = a_base;
    j["perm"] = sigma.str();
    j["sequence"] = std::move(arr);
    a_out.emit(j, csv);
    return 0;
  }

  if (bound->parsed()) {
    const TorusPointSet pts = read_points_file(b_points_file);
    const int n = b_n > 0 ? b_n : static_cast<int>(pts.size());
    const LevequeResult res = leveque_bound(pts, n, b_kmax);
    json j = leveque_json(res);
    j["n"] = n;
    b_out.emit(j, double_str(res.bound) + "\n");
    return 0;
  }

  if (energy->parsed()) {
    const TorusPointSet pts = read_points_file(e_points_file);
    const KernelPtr k = kernel_from_string(e_kernel);
    const double total = total_pair_energy(pts, *k);
    const double cap = static_cast<double>(pts.size()) * k->eval(0.0);
    json j;
    j["n"] = pts.size();
    j["kernel"] = k->name();
    j["total_pair_energy"] = total;
    j["n_times_f0"] = cap;
    j["within_pair_bound"] = total <= cap + 1e-9;
    e_out.emit(j, double_str(total) + "\n");
    return 0;
  }

  if (verify->parsed()) {
    const KernelPtr k = kernel_from_string(w_kernel);
    json checks = json::array();
    bool all_pass = true;
    auto note = [&](const std::string& name, bool pass, json detail) {
      detail["name"] = name;
      detail["pass"] = pass;
      checks.push_back(std::move(detail));
      all_pass = all_pass && pass;
    };

    if (w_check == "greedy-vdc" || w_check == "all") {
      const auto rep = check_greedy_equals_vdc(*k, w_n);
      json d;
      d["n"] = rep.n;
      if (!rep.pass) {
        d["first_fail_index"] = rep.first_fail_index;
        d["note"] = rep.note;
      }
      note("greedy-vdc", rep.pass, std::move(d));
    }
    if (w_check == "trajectory-match" || w_check == "all") {
      bool pass = true;
      json runs = json::array();
      for (std::uint64_t s = 0; s < 10; ++s) {
        const auto traj = greedy_run(make_exact_point_set({Rational(0)}), *k, w_n,
                                     SelectionPolicy::random(w_rng + s));
        const MatchResult res = match_trajectory_to_permutation(traj);
        pass = pass && res.ok;
        runs.push_back(match_json(res));
      }
      json d;
      d["runs"] = std::move(runs);
      note("trajectory-match", pass, std::move(d));
    }
    if (w_check == "family-equiv" || w_check == "all") {
      const auto rep = check_family_equivalences(w_m, w_n_max, w_sample, w_rng);
      json d;
      d["m"] = rep.m;
      d["n_max"] = rep.n_max;
      d["checked"] = rep.checked;
      d["violations"] = rep.violations;
      note("family-equiv", rep.pass, std::move(d));
    }
    if (w_check == "self-similarity" || w_check == "all") {
      const auto rep = check_self_similarity(w_trials, w_rng);
      json d;
      d["trials"] = rep.trials;
      d["failures"] = rep.failures;
      if (!rep.pass) d["first_failure"] = rep.first_failure;
      note("self-similarity", rep.pass, std::move(d));
    }
    if (w_check == "one-sided-probe") {
      // the one-sided discrepancies are not family-invariant; this check is
      // expected to fail and demonstrates the exit-2 path
      const auto rep = check_family_equivalences(w_m, w_n_max, w_sample, w_rng,
                                                 /*include_one_sided=*/true);
      json d;
      d["m"] = rep.m;
      d["checked"] = rep.checked;
      d["violations"] = rep.violations;
      note("one-sided-probe", rep.pass, std::move(d));
    }
    if (w_check == "explore") {
      const TorusPointSet seed = seed_from_options("", w_seed.empty() ? "0" : w_seed);
      const auto rep = explore_candidate_counts(seed, *k, w_n);
      json d;
      d["candidate_counts"] = rep.candidate_counts;
      note("explore", true, std::move(d));
    }
    if (checks.empty()) throw std::invalid_argument("unknown check: " + w_check);

    json j;
    j["checks"] = std::move(checks);
    j["all_pass"] = all_pass;
    std::string csv;
    for (const auto& c : j["checks"])
      csv += c["name"].get<std::string>() + "," +
             (c["pass"].get<bool>() ? "pass" : "fail") + "\n";
    w_out.emit(j, csv);
    return all_pass ? 0 : 2;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
