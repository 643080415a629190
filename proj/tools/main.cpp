// Command line harness for centrally symmetric polytope certification.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "csn/dominance.hpp"
#include "csn/face.hpp"
#include "csn/family.hpp"
#include "csn/io.hpp"
#include "csn/parallel.hpp"
#include "csn/sampling.hpp"
#include "csn/transform.hpp"

using namespace csn;

namespace {

uint64_t splitmix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t trial_seed(uint64_t seed, int d, int n, int trial) {
  return splitmix(seed ^ splitmix((uint64_t(d) << 42) ^ (uint64_t(n) << 21) ^
                                  uint64_t(trial)));
}

struct IntRange {
  int lo = 0, hi = 0;
};

IntRange parse_range(const std::string& text) {
  IntRange r;
  auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, sep));
      r.hi = std::stoi(text.substr(sep + 2));
    }
  } catch (const std::exception&) {
    throw ParseError("bad range '" + text + "'; use N or A..B");
  }
  if (r.lo < 1 || r.hi < r.lo) throw ParseError("empty range '" + text + "'");
  return r;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ParseError("cannot open " + out_path + " for writing");
  f << text;
}

DominanceMethod method_from_name(const std::string& name) {
  if (name == "dual-sign") return DominanceMethod::DualSignEnum;
  return DominanceMethod::DualFaceScan;
}

std::string format_rat_vec(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

// Upper bound on the face-scan LP count for the guard.
double facescan_lp_estimate(int m, int cap) {
  double total = 0, binom = 1;
  for (int k = 1; k <= cap; ++k) {
    binom = binom * (m - k + 1) / k;
    total += binom * std::pow(2.0, k - 1);
    if (total > 1e18) break;
  }
  return total;
}

int run_transform(const std::string& input, const std::string& out) {
  CsConfiguration c = read_configuration_file(input);
  CsConfiguration image = c.role() == Role::Primal ? cs_transform(c)
                                                   : inverse_transform(c);
  emit(configuration_to_json(image), out);
  return 0;
}

int run_certify(const std::string& input, int max_k, const std::string& method,
                bool force, const std::string& out) {
  CsConfiguration c = read_configuration_file(input);
  std::ostringstream rep;

  bool want_primal = method == "primal" || method == "both";
  bool want_dual = method != "primal";

  CsConfiguration transform =
      c.role() == Role::Transform ? c : cs_transform(c);
  CsConfiguration primal =
      c.role() == Role::Primal ? c : inverse_transform(c);
  int m = transform.count();

  std::optional<NeighborlinessReport> dual_rep;
  if (want_dual) {
    DominanceMethod dm = method_from_name(method == "both" ? "dual-face" : method);
    if (dm == DominanceMethod::DualSignEnum && m > 16)
      throw GuardError("dual-sign enumeration is limited to m <= 16");
    int cap = (max_k < 0 || max_k > m) ? m : max_k;
    if (!force && transform.dim() > 0 && facescan_lp_estimate(m, cap) > 1e7)
      throw GuardError("estimated LP count above 10^7; rerun with --force");
    dual_rep = max_neighborliness(transform, dm, max_k);
  }

  std::optional<PrimalNeighborliness> primal_rep;
  if (want_primal) {
    if (!force && m > 9)
      throw GuardError("primal oracle is limited to m <= 9; rerun with --force");
    primal_rep = max_neighborliness_primal(primal);
  }

  if (dual_rep && primal_rep && dual_rep->exact &&
      dual_rep->k_max != primal_rep->k_max) {
    std::cerr << "method disagreement: dual " << dual_rep->k_max << " vs primal "
              << primal_rep->k_max << "\n";
    return 1;
  }

  rep << "m = " << m << ", primal dim = " << primal.dim()
      << ", transform dim = " << transform.dim() << "\n";
  const NeighborlinessReport* nr = dual_rep ? &*dual_rep : nullptr;
  if (nr) {
    rep << "k_max " << (nr->exact ? "= " : ">= ") << nr->k_max << " (method "
        << (nr->method == CertifyMethod::DualSignEnum ? "dual-sign" : "dual-face")
        << ")\n";
    if (nr->min_dominant)
      rep << "min dominant subset size = " << *nr->min_dominant << "\n";
    else if (nr->exact)
      rep << "no dominant subset exists (dimension-0 transform)\n";
    if (nr->witness) {
      rep << "dominant subset witness: indices {";
      for (size_t i = 0; i < nr->witness->subset.size(); ++i)
        rep << (i ? "," : "") << nr->witness->subset[i] + 1;
      rep << "}, sigma = (";
      for (size_t i = 0; i < nr->witness->sign_pattern.size(); ++i)
        rep << (i ? "," : "") << (nr->witness->sign_pattern[i] > 0 ? "+" : "-");
      rep << "), u = " << format_rat_vec(nr->witness->witness) << "\n";
    }
    if (nr->duplicate_warning || primal.has_duplicates())
      rep << "warning: duplicate vectors up to sign; the signed vectors are "
             "not all distinct\n";
  }
  if (primal_rep) {
    rep << "primal oracle k_max = " << primal_rep->k_max << "\n";
    if (primal_rep->failing_subset)
      rep << "first non-face subset: " << primal_rep->failing_subset->str() << "\n";
  }
  std::cout << rep.str();
  if (!out.empty()) emit(rep.str(), out);
  return 0;
}

std::string format_median(const std::vector<int>& sorted) {
  size_t n = sorted.size();
  int twice = (n % 2) ? 2 * sorted[n / 2] : sorted[n / 2 - 1] + sorted[n / 2];
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice / 2) + ".5";
}

int run_kcurve(const std::string& d_range, const std::string& n_range, int trials,
               uint64_t seed, const std::string& method, bool cross_check,
               unsigned precision, bool stable_output, const std::string& out) {
  IntRange dr = parse_range(d_range);
  IntRange nr = parse_range(n_range);
  if (trials < 1) throw ParseError("trials must be >= 1");
  DominanceMethod dm = method_from_name(method);
  if (dm == DominanceMethod::DualSignEnum && dr.hi + nr.hi > 16)
    throw GuardError("dual-sign enumeration is limited to m <= 16");

  std::ostringstream csv;
  csv << "d,n,m,trials,k_min,k_med,k_max,valid_frac,seconds\n";

  for (int d = dr.lo; d <= dr.hi; ++d) {
    for (int n = nr.lo; n <= nr.hi; ++n) {
      auto started = std::chrono::steady_clock::now();
      int m = d + n;
      struct TrialResult {
        bool valid = false;
        int k = 0;
      };
      std::vector<TrialResult> results(trials);
      std::string cross_error;
      std::mutex err_mutex;
      parallel_for(trials, [&](int trial) {
        CsConfiguration t = sample_gaussian_configuration(
            m, n, trial_seed(seed, d, n, trial), precision);
        TrialResult r;
        r.valid = is_valid_vertex_transform(t).valid;
        if (r.valid) {
          NeighborlinessReport nrep = max_neighborliness(t, dm);
          r.k = nrep.k_max;
          if (cross_check && m <= 7) {
            int primal_k = max_neighborliness_primal(inverse_transform(t)).k_max;
            if (primal_k != nrep.k_max) {
              std::lock_guard<std::mutex> lock(err_mutex);
              cross_error = "cross-check mismatch at d=" + std::to_string(d) +
                            " n=" + std::to_string(n) +
                            " trial=" + std::to_string(trial);
            }
          }
        }
        results[trial] = r;
      });
      if (!cross_error.empty()) {
        std::cerr << cross_error << "\n";
        return 1;
      }
      std::vector<int> ks;
      for (const auto& r : results)
        if (r.valid) ks.push_back(r.k);
      std::sort(ks.begin(), ks.end());
      double secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - started)
                        .count();
      char frac[32], time_buf[32];
      std::snprintf(frac, sizeof frac, "%.4f", double(ks.size()) / trials);
      std::snprintf(time_buf, sizeof time_buf, "%.3f", stable_output ? 0.0 : secs);
      csv << d << "," << n << "," << m << "," << trials << ",";
      if (ks.empty()) {
        csv << ",,,";
      } else {
        csv << ks.front() << "," << format_median(ks) << "," << ks.back() << ",";
      }
      csv << frac << "," << time_buf << "\n";
    }
  }
  emit(csv.str(), out);
  return 0;
}

int run_family(int m, int s, const std::string& order, uint64_t seed,
               const std::string& out) {
  FamilyOrder fo = order == "shuffle" ? FamilyOrder::SeededShuffle : FamilyOrder::Lex;
  SetFamily fam = greedy_family(m, s, fo, seed);
  emit(family_to_json(fam), out);
  std::cerr << "family size " << fam.members.size() << "\n";
  return 0;
}

int run_pack(const std::string& input, int s, const std::string& family_path) {
  CsConfiguration c = read_configuration_file(input);
  SetFamily fam = read_family_file(family_path, c.count(), s);
  PackingReport rep = translate_packing_check(c, s, fam);
  if (rep.pass) {
    std::cout << "PASS: " << rep.pairs_checked << " pair"
              << (rep.pairs_checked == 1 ? "" : "s") << " disjoint, "
              << rep.translates_checked << " translates inside 3P\n";
    return 0;
  }
  for (auto [a, b] : rep.overlapping_pairs)
    std::cout << "FAIL: members " << a + 1 << " and " << b + 1
              << " have overlapping interiors\n";
  for (int a : rep.escaped_translates)
    std::cout << "FAIL: translate of member " << a + 1 << " leaves 3P\n";
  return 1;
}

int run_bound(int d, int m, int s) {
  std::cout << (nonexistence_bound(d, m, s) == BoundVerdict::RuledOut
                    ? "RuledOut"
                    : "Inconclusive")
            << "\n";
  return 0;
}

int run_sample(int m, int n, int kashin_d, uint64_t seed, unsigned precision,
               const std::string& out) {
  if (kashin_d > 0) {
    emit(configuration_to_json(kashin_configuration(kashin_d, seed)), out);
    return 0;
  }
  if (m <= 0 || n <= 0) throw ParseError("sample needs --m and --n, or --kashin");
  emit(configuration_to_json(sample_gaussian_configuration(m, n, seed, precision)),
       out);
  return 0;
}

int run_gelfand(const std::string& input, int s, bool all) {
  CsConfiguration c = read_configuration_file(input);
  CsConfiguration t = c.role() == Role::Transform ? c : cs_transform(c);
  int lo = all ? 1 : s, hi = all ? t.count() : s;
  if (!all && (s < 1 || s > t.count())) throw ParseError("s out of range");
  for (int i = lo; i <= hi; ++i)
    std::cout << "s=" << i << " ratio=" << subspace_ratio(t, i).str() << "\n";
  return 0;
}

int run_distortion(const std::string& input, int kashin_d, int samples,
                   uint64_t seed) {
  char buf[64];
  if (kashin_d > 0) {
    Matrix u = random_orthogonal(kashin_d, seed);
    DistortionReport rep = kashin_margin(u, samples, seed);
    std::snprintf(buf, sizeof buf, "%.9f", rep.value);
    std::cout << "kashin margin (worst ratio over " << rep.samples
              << " samples) = " << buf << "\n";
    std::cout << "consistent with the two-sided bound: "
              << (rep.value <= 1.0 ? "yes" : "no") << "\n";
    return 0;
  }
  CsConfiguration c = read_configuration_file(input);
  CsConfiguration t = c.role() == Role::Transform ? c : cs_transform(c);
  int d = t.count() - t.dim();
  DistortionOutcome dist = euclidean_l1_distortion(t, seed, samples);
  if (dist.exact) {
    std::cout << "distortion^2 = " << dist.squared.str() << " (exact)\n";
  } else {
    std::cout << "mode = sampled lower bound over " << dist.samples << " samples\n";
  }
  std::snprintf(buf, sizeof buf, "%.9f", dist.value);
  std::cout << "distortion = " << buf << "\n";
  if (d >= 1) {
    DistortionReport gg = gg_margin(t, d);
    std::snprintf(buf, sizeof buf, "%.9f", gg.implied_constant);
    std::cout << "implied constant vs sqrt((1+log(m/d))/d) = " << buf << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"centrally symmetric polytope construction and certification"};
  app.require_subcommand(1);

  std::string input, out, family_path;
  std::string method = "dual-face";
  std::string order = "lex";
  std::string d_range = "2", n_range = "2";
  int max_k = -1, s = 1, m = 0, n = 0, d = 1, trials = 1, samples = 4096;
  int kashin_d = 0;
  uint64_t seed = 1;
  unsigned precision = 32;
  bool force = false, cross_check = false, stable_output = false, all_s = false;

  auto* t_cmd = app.add_subcommand("transform", "apply the cs transform (direction from the role tag)");
  t_cmd->add_option("input", input)->required();
  t_cmd->add_option("-o,--out", out);

  auto* c_cmd = app.add_subcommand("certify", "exact neighborliness certification");
  c_cmd->add_option("input", input)->required();
  c_cmd->add_option("--max-k", max_k);
  c_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"dual-face", "dual-sign", "primal", "both"}));
  c_cmd->add_flag("--force", force);
  c_cmd->add_option("-o,--out", out);

  auto* k_cmd = app.add_subcommand("kcurve", "empirical neighborliness table (CSV)");
  k_cmd->add_option("--d", d_range)->required();
  k_cmd->add_option("--n", n_range)->required();
  k_cmd->add_option("--trials", trials)->required();
  k_cmd->add_option("--seed", seed);
  k_cmd->add_option("--method", method)->check(CLI::IsMember({"dual-face", "dual-sign"}));
  k_cmd->add_flag("--cross-check", cross_check);
  k_cmd->add_option("--precision", precision);
  k_cmd->add_flag("--stable-output", stable_output,
                  "zero the seconds column for byte-stable comparisons");
  k_cmd->add_option("-o,--out", out);

  auto* f_cmd = app.add_subcommand("family", "greedy bounded-intersection family");
  f_cmd->add_option("m", m)->required();
  f_cmd->add_option("s", s)->required();
  f_cmd->add_option("--order", order)->check(CLI::IsMember({"lex", "shuffle"}));
  f_cmd->add_option("--seed", seed);
  f_cmd->add_option("-o,--out", out);

  auto* p_cmd = app.add_subcommand("pack", "translate packing verification");
  p_cmd->add_option("input", input)->required();
  p_cmd->add_option("--s", s)->required();
  p_cmd->add_option("--family", family_path)->required();

  auto* b_cmd = app.add_subcommand("bound", "counting-based nonexistence test");
  b_cmd->add_option("d", d)->required();
  b_cmd->add_option("m", m)->required();
  b_cmd->add_option("s", s)->required();

  auto* s_cmd = app.add_subcommand("sample", "draw a random transform configuration");
  s_cmd->add_option("--m", m);
  s_cmd->add_option("--n", n);
  s_cmd->add_option("--kashin", kashin_d, "build the 2d-vector orthogonal-pair set");
  s_cmd->add_option("--seed", seed);
  s_cmd->add_option("--precision", precision);
  s_cmd->add_option("-o,--out", out);

  auto* g_cmd = app.add_subcommand("gelfand", "per-subspace s-max-norm ratio");
  g_cmd->add_option("input", input)->required();
  g_cmd->add_option("--s", s);
  g_cmd->add_flag("--all", all_s);

  auto* dist_cmd = app.add_subcommand("distortion", "l2/l1 subspace distortion reports");
  dist_cmd->add_option("input", input);
  dist_cmd->add_option("--kashin", kashin_d, "report the orthogonal-pair margin instead");
  dist_cmd->add_option("--samples", samples);
  dist_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*t_cmd) return run_transform(input, out);
    if (*c_cmd) return run_certify(input, max_k, method, force, out);
    if (*k_cmd)
      return run_kcurve(d_range, n_range, trials, seed, method, cross_check,
                        precision, stable_output, out);
    if (*f_cmd) return run_family(m, s, order, seed, out);
    if (*p_cmd) return run_pack(input, s, family_path);
    if (*b_cmd) return run_bound(d, m, s);
    if (*s_cmd) return run_sample(m, n, kashin_d, seed, precision, out);
    if (*g_cmd) return run_gelfand(input, s, all_s);
    if (*dist_cmd) {
      if (input.empty() && kashin_d <= 0)
        throw ParseError("distortion needs a configuration or --kashin");
      return run_distortion(input, kashin_d, samples, seed);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
