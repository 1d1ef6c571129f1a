// coinproof -- verify, analyze, generate and search balance-scale
// strategies that prove a fake-coin count without revealing coin
// identities, plus the mod-m average-sensitivity calculator.
//
// Exit codes: 0 = ok / strategy proven, 2 = strategy not proven,
// 1 = parse or validation error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coinproof/analytic.hpp"
#include "coinproof/model.hpp"
#include "coinproof/sensitivity.hpp"
#include "coinproof/strategies.hpp"
#include "coinproof/strategy_io.hpp"
#include "coinproof/verifier.hpp"

namespace {

using namespace coinproof;

std::uint64_t oracle_cap_default() {
  if (const char* env = std::getenv("COINPROOF_ORACLE_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("COINPROOF_ORACLE_CAP: not a valid nonnegative integer");
    }
  }
  return kDefaultOracleCap;
}

std::vector<long long> parse_csv(const std::string& text, const std::string& what) {
  std::vector<long long> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      values.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": expected comma-separated integers, got '" + text + "'");
    }
  }
  if (values.empty()) throw std::invalid_argument(what + ": empty list");
  return values;
}

std::pair<long long, long long> parse_range(const std::string& text, const std::string& what) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const long long v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected N or LO:HI, got '" + text + "'");
  }
}

std::string syndrome_string(const Syndrome& syndrome) {
  std::string out;
  for (int s : syndrome) {
    if (!out.empty()) out += ' ';
    out += s == 1 ? "+1" : (s == -1 ? "-1" : "0");
  }
  return out.empty() ? "(empty)" : out;
}

void print_report(const Strategy& strategy, const AdmissibleReport& report) {
  const Params& p = strategy.params;
  std::cout << "t = " << p.t << ", f = " << p.f << ", d = " << p.d
            << ", weighings = " << strategy.weighings.size() << "\n";
  std::cout << "syndrome: " << syndrome_string(report.syndrome) << "\n";
  std::cout << "count_f = " << report.count_f.str() << "\n";
  std::cout << "count_d = " << report.count_d.str() << "\n";
  std::cout << "success: " << (report.success ? "yes" : "no") << "\n";
  std::cout << "discreet: " << (report.discreet ? "yes" : "no") << "\n";
  std::cout << "X = " << binomial(p.t, p.f).str() << "/" << report.count_f.str() << " ≈ "
            << report.X.decimal_string(4) << "\n";
  std::cout << "R = " << report.R.fraction_string() << " ≈ " << report.R.decimal_string(4) << "\n";
  std::cout << "per-class admissible fake counts (f hypothesis):\n";
  for (size_t i = 0; i < report.per_class.size(); ++i) {
    std::cout << "  class " << i << " (size " << report.class_sizes[i] << "): {";
    bool first = true;
    for (long long v : report.per_class[i]) {
      if (!first) std::cout << ", ";
      std::cout << v;
      first = false;
    }
    std::cout << "}\n";
  }
}

int run_verify_on(const Strategy& strategy, bool use_oracle, std::uint64_t cap, bool json_mode) {
  ValidationReport validation = validate(strategy);
  if (!validation.valid()) {
    for (const ValidationIssue& issue : validation.errors) {
      std::cerr << "error: " << issue.where << ": " << issue.message << "\n";
    }
    return 1;
  }
  for (const ValidationIssue& issue : validation.warnings) {
    std::cerr << "warning: " << issue.where << ": " << issue.message << "\n";
  }

  AdmissibleReport report = verify(strategy);

  bool oracle_ok = true;
  std::string oracle_note;
  if (use_oracle) {
    try {
      const Count of = oracle_admissible_count(strategy, strategy.params.f, report.syndrome, cap);
      const Count od = oracle_admissible_count(strategy, strategy.params.d, report.syndrome, cap);
      oracle_ok = of == report.count_f && od == report.count_d;
      oracle_note = oracle_ok ? "agrees" : "MISMATCH: coin-level " + of.str() + "/" + od.str();
    } catch (const OracleCapExceeded& e) {
      oracle_note = e.what();
    }
  }

  if (json_mode) {
    Json j = report_to_json(report);
    if (use_oracle) j["oracle"] = oracle_note;
    std::cout << j.dump(2) << "\n";
  } else {
    print_report(strategy, report);
    if (use_oracle) std::cout << "oracle check: " << oracle_note << "\n";
  }
  if (!oracle_ok) {
    std::cerr << "error: oracle disagrees with class-level counts\n";
    return 1;
  }
  return report.success ? 0 : 2;
}

std::string weighing_label(const std::vector<int>& indices) {
  if (indices.empty()) return "(none)";
  std::string out;
  for (int i : indices) {
    if (!out.empty()) out += ' ';
    out += "h" + std::to_string(i + 1);
  }
  return out;
}

Strategy generate_family(const std::string& family, long long t, long long f, long long d, long long a,
                         const std::string& prover_family, const std::string& c_text,
                         const std::string& g_text, const std::string& placement_text) {
  if (family == "shapovalov") return gen_shapovalov(t, f, d);
  if (family == "divisibility") return gen_divisibility(t, f, d, a);
  if (family == "indiscreet") return gen_indiscreet_piles(t, f, d, a);
  if (family == "three-family") {
    if (prover_family.size() != 1) throw std::invalid_argument("--prover-family must be A, B or C");
    return gen_three_family(t, f, d, prover_family[0]);
  }
  if (family == "three-family-augmented") return gen_three_family_augmented(t, f, d);
  if (family == "lincomb") {
    LinCombConfig config{parse_csv(c_text, "--c"), parse_csv(g_text, "--g")};
    SolutionVector placement;
    if (!placement_text.empty()) {
      placement.x = parse_csv(placement_text, "--placement");
    } else {
      auto sols = solve_solution_vectors(config.c, config.g, f);
      if (sols.empty()) throw std::invalid_argument("lincomb: f has no solution vector for this config");
      placement = sols.front();
    }
    return gen_linear_combination(t, f, d, config, placement);
  }
  throw std::invalid_argument("unknown family '" + family +
                              "' (expected shapovalov|divisibility|indiscreet|three-family|"
                              "three-family-augmented|lincomb)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balance-scale fake-count proof toolkit"};
  app.require_subcommand(1);

  std::string file;
  bool json_mode = false;
  bool use_oracle = false;
  std::uint64_t cap = 0;
  bool with_best_order = false;

  auto* cmd_verify = app.add_subcommand("verify", "verify a strategy file");
  cmd_verify->add_option("file", file, "strategy JSON file")->required();
  cmd_verify->add_flag("--oracle", use_oracle, "cross-check counts against the coin-level brute force");
  cmd_verify->add_option("--oracle-cap", cap, "max coin subsets the oracle may enumerate");
  cmd_verify->add_flag("--json", json_mode, "machine-readable output");

  auto* cmd_table = app.add_subcommand("table", "admissible counts for every weighing subset");
  cmd_table->add_option("file", file, "strategy JSON file")->required();
  cmd_table->add_flag("--best-order", with_best_order, "append the greedy least-revealing order");
  cmd_table->add_flag("--json", json_mode, "machine-readable output");

  std::string family, prover_family = "A", c_text, g_text, placement_text, out_path;
  long long t = 0, f = 0, d = 0, a = 0;
  bool verify_after = false;
  auto* cmd_generate = app.add_subcommand("generate", "generate a strategy from a family");
  cmd_generate
      ->add_option("family", family,
                   "shapovalov|divisibility|indiscreet|three-family|three-family-augmented|lincomb")
      ->required();
  cmd_generate->add_option("--t", t, "total coins")->required();
  cmd_generate->add_option("--f", f, "fake coins")->required();
  cmd_generate->add_option("--d", d, "count to disprove")->required();
  cmd_generate->add_option("--a", a, "pile count (divisibility/indiscreet)");
  cmd_generate->add_option("--prover-family", prover_family, "prover family for three-family (A|B|C)");
  cmd_generate->add_option("--c", c_text, "group multiplicities, comma-separated (lincomb)");
  cmd_generate->add_option("--g", g_text, "group pile sizes, comma-separated (lincomb)");
  cmd_generate->add_option("--placement", placement_text, "prover solution vector (lincomb)");
  cmd_generate->add_option("-o,--out", out_path, "write the strategy file here (default stdout)");
  cmd_generate->add_flag("--verify", verify_after, "verify the generated strategy");
  cmd_generate->add_flag("--json", json_mode, "machine-readable verify output");

  int max_groups = 3;
  long long max_c = 0, max_g = 0;
  int top = 10;
  std::string emit_best;
  auto* cmd_search = app.add_subcommand("search", "search linear-combination configurations");
  cmd_search->add_option("--t", t, "total coins")->required();
  cmd_search->add_option("--f", f, "fake coins")->required();
  cmd_search->add_option("--d", d, "count to disprove")->required();
  cmd_search->add_option("--max-groups", max_groups, "max number of groups (default 3)");
  cmd_search->add_option("--max-c", max_c, "cap on group multiplicities");
  cmd_search->add_option("--max-g", max_g, "cap on pile sizes");
  cmd_search->add_option("--top", top, "how many results to print (default 10)");
  cmd_search->add_option("--emit-best", emit_best, "write the best configuration as a strategy file");
  cmd_search->add_flag("--json", json_mode, "machine-readable output");

  std::string n_range_text, m_range_text;
  auto* cmd_sensitivity =
      app.add_subcommand("sensitivity", "average sensitivity of the mod-m fake-count test");
  cmd_sensitivity->add_option("--n", n_range_text, "input length N or range LO:HI")->required();
  cmd_sensitivity->add_option("--m", m_range_text, "modulus M or range LO:HI")->required();
  cmd_sensitivity->add_flag("--json", json_mode, "machine-readable output");

  long long target = 0;
  auto* cmd_solve =
      app.add_subcommand("solve", "enumerate all bounded solution vectors of Sum c_i x_i = target");
  cmd_solve->add_option("--c", c_text, "coefficients, comma-separated")->required();
  cmd_solve->add_option("--g", g_text, "per-variable upper bounds, comma-separated")->required();
  cmd_solve->add_option("--target", target, "target sum")->required();
  cmd_solve->add_flag("--json", json_mode, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cap == 0) cap = oracle_cap_default();

    if (cmd_verify->parsed()) {
      return run_verify_on(strategy_from_file(file), use_oracle, cap, json_mode);
    }

    if (cmd_table->parsed()) {
      Strategy strategy = strategy_from_file(file);
      require_valid(strategy);
      std::vector<SubsetRow> rows = subset_table(strategy);
      if (json_mode) {
        if (with_best_order) {
          Json j;
          j["table"] = subset_table_to_json(rows);
          j["best_order"] = best_order(strategy);
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << subset_table_to_json(rows).dump(2) << "\n";
        }
      } else {
        std::cout << "weighings | count_f | count_d\n";
        for (const SubsetRow& row : rows) {
          std::cout << weighing_label(row.weighing_indices) << " | " << row.count_f.str() << " | "
                    << row.count_d.str() << "\n";
        }
        if (with_best_order) std::cout << "best order: " << weighing_label(best_order(strategy)) << "\n";
      }
      return 0;
    }

    if (cmd_generate->parsed()) {
      Strategy strategy =
          generate_family(family, t, f, d, a, prover_family, c_text, g_text, placement_text);
      require_valid(strategy);
      if (!out_path.empty()) {
        strategy_to_file(strategy, out_path);
      } else if (!verify_after) {
        std::cout << strategy_to_json(strategy).dump(2) << "\n";
      }
      if (verify_after) return run_verify_on(strategy, use_oracle, cap, json_mode);
      return 0;
    }

    if (cmd_search->parsed()) {
      SearchLimits limits;
      limits.max_groups = max_groups;
      limits.max_c = max_c;
      limits.max_g = max_g;
      SearchResult result = search_lincomb(t, f, d, limits);
      if (json_mode) {
        Json j;
        j["complete"] = result.complete;
        j["results"] = Json::array();
        int shown = 0;
        for (const auto& [config, count] : result.ranked) {
          if (shown++ >= top) break;
          j["results"].push_back({{"c", config.c}, {"g", config.g}, {"count", count.str()}});
        }
        std::cout << j.dump(2) << "\n";
      } else {
        if (!result.complete) std::cout << "partial results: enumeration budget exhausted\n";
        std::cout << result.ranked.size() << " feasible configuration(s)\n";
        int shown = 0;
        for (const auto& [config, count] : result.ranked) {
          if (shown++ >= top) break;
          std::cout << "c=(";
          for (size_t i = 0; i < config.c.size(); ++i) std::cout << (i ? "," : "") << config.c[i];
          std::cout << ") g=(";
          for (size_t i = 0; i < config.g.size(); ++i) std::cout << (i ? "," : "") << config.g[i];
          std::cout << ") count=" << count.str() << "\n";
        }
      }
      if (!emit_best.empty() && !result.ranked.empty()) {
        const LinCombConfig& best = result.ranked.front().first;
        auto sols = solve_solution_vectors(best.c, best.g, f);
        strategy_to_file(gen_linear_combination(t, f, d, best, sols.front()), emit_best);
      }
      return 0;
    }

    if (cmd_sensitivity->parsed()) {
      auto [n_lo, n_hi] = parse_range(n_range_text, "--n");
      auto [m_lo, m_hi] = parse_range(m_range_text, "--m");
      Json rows = Json::array();
      if (!json_mode) std::cout << "n m alpha alpha_dec trig 2n/m bound\n";
      for (long long n = n_lo; n <= n_hi; ++n) {
        for (long long m = m_lo; m <= m_hi; ++m) {
          SensitivityResult r = sensitivity_summary(n, m);
          if (json_mode) {
            rows.push_back({{"n", n},
                            {"m", m},
                            {"exact", ratio_to_json(r.exact)},
                            {"trig", r.trig},
                            {"asymptote", ratio_to_json(r.asymptote)},
                            {"bound_order", r.bound_order}});
          } else {
            std::cout << n << " " << m << " " << r.exact.fraction_string() << " "
                      << r.exact.decimal_string(4) << " " << r.trig << " "
                      << r.asymptote.decimal_string(4) << " " << r.bound_order << "\n";
          }
        }
      }
      if (json_mode) std::cout << rows.dump(2) << "\n";
      return 0;
    }

    if (cmd_solve->parsed()) {
      auto c = parse_csv(c_text, "--c");
      auto g = parse_csv(g_text, "--g");
      auto sols = solve_solution_vectors(c, g, target);
      if (json_mode) {
        Json j = Json::array();
        for (const SolutionVector& sv : sols) j.push_back(sv.x);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << sols.size() << " solution vector(s)\n";
        for (const SolutionVector& sv : sols) {
          std::cout << "(";
          for (size_t i = 0; i < sv.x.size(); ++i) std::cout << (i ? "," : "") << sv.x[i];
          std::cout << ")\n";
        }
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
