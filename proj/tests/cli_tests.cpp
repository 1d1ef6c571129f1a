// Integration tests for the coinproof command-line tool. Takes the path
// to the built binary as argv[1]; prints one line per check.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "coinproof/strategies.hpp"
#include "coinproof/strategy_io.hpp"

namespace {

std::string g_binary;
std::string g_dir;
int g_failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = g_dir + "/stdout.txt";
  const std::string err_path = g_dir + "/stderr.txt";
  const std::string command = "\"" + g_binary + "\" " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

void check(bool ok, const std::string& label, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << label << "\n";
  if (!ok) {
    ++g_failures;
    if (!detail.empty()) std::cout << "     " << detail << "\n";
  }
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-coinproof-binary>\n";
    return 2;
  }
  g_binary = argv[1];
  char dir_template[] = "/tmp/coinproof_cli_XXXXXX";
  if (!mkdtemp(dir_template)) {
    std::cerr << "cannot create temp dir\n";
    return 2;
  }
  g_dir = dir_template;

  using namespace coinproof;

  const std::string strategy1 = g_dir + "/strategy1.json";
  strategy_to_file(gen_shapovalov(), strategy1);

  {
    RunResult r = run("verify " + strategy1);
    check(r.exit_code == 0, "verify showcase exits 0", "exit=" + std::to_string(r.exit_code) + " err=" + r.err);
    check(contains(r.out, "82160/8000 ≈ 10.2700"), "verify prints the revealing factor line", r.out);
    check(contains(r.out, "discreet: yes"), "verify reports discreet");
    check(contains(r.out, "count_f = 8000"), "verify prints count_f");
  }

  {
    RunResult r = run("verify " + strategy1 + " --oracle");
    check(r.exit_code == 0 && contains(r.out, "oracle check: agrees"), "verify --oracle cross-checks",
          r.out + r.err);
  }

  {
    RunResult r = run("verify " + strategy1 + " --json");
    bool ok = r.exit_code == 0;
    std::string detail;
    try {
      auto j = nlohmann::json::parse(r.out);
      ok = ok && j.at("count_f") == "8000" && j.at("count_d") == "0" && j.at("success") == true &&
           j.at("X").at("fraction") == "1027/100";
      // stable key order: counts come before verdicts before ratios
      ok = ok && r.out.find("\"count_f\"") < r.out.find("\"success\"") &&
           r.out.find("\"success\"") < r.out.find("\"X\"");
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    check(ok, "verify --json emits the machine-readable report", detail);
  }

  {
    const std::string bad = g_dir + "/unequal.json";
    std::ofstream(bad) << R"({"t":5,"f":1,"d":2,"piles":[{"id":"A","size":3,"fakes":1},{"id":"B","size":2,"fakes":0}],"weighings":[{"left":["A"],"right":["B"]}]})";
    RunResult r = run("verify " + bad);
    check(r.exit_code == 1 && contains(r.err, "unequal pans"), "unequal pans exits 1",
          "exit=" + std::to_string(r.exit_code) + " err=" + r.err);
  }

  {
    const std::string unknown = g_dir + "/unknown.json";
    std::ofstream(unknown) << R"({"t":4,"f":1,"d":2,"piles":[{"id":"A","size":4,"fakes":1}],"weighings":[],"junk":true})";
    RunResult r = run("verify " + unknown);
    check(r.exit_code == 1 && contains(r.err, "unknown key"), "unknown JSON key exits 1", r.err);
  }

  {
    const std::string unproven = g_dir + "/three_family_d5.json";
    strategy_to_file(gen_three_family(13, 3, 5), unproven);
    RunResult r = run("verify " + unproven);
    check(r.exit_code == 2 && contains(r.out, "success: no"), "unproven strategy exits 2",
          "exit=" + std::to_string(r.exit_code));
  }

  {
    RunResult r = run("table " + strategy1);
    check(r.exit_code == 0, "table exits 0");
    check(contains(r.out, "(none) | 82160 | 3160"), "table has the empty-subset row", r.out);
    check(contains(r.out, "h1 h2 h3 | 8000 | 0"), "table has the full-subset row", r.out);
  }

  {
    RunResult r = run("table " + strategy1 + " --best-order");
    check(r.exit_code == 0 && contains(r.out, "best order: h3 h2 h1"), "table --best-order", r.out);
  }

  {
    RunResult r = run("table " + strategy1 + " --json");
    bool ok = r.exit_code == 0;
    std::string detail;
    try {
      auto j = nlohmann::json::parse(r.out);
      ok = ok && j.is_array() && j.size() == 8 && j[0].at("count_f") == "82160";
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    check(ok, "table --json emits the 8-row array", detail);

    RunResult rb = run("table " + strategy1 + " --json --best-order");
    try {
      auto j = nlohmann::json::parse(rb.out);
      check(rb.exit_code == 0 && j.at("best_order") == std::vector<int>{2, 1, 0},
            "table --json --best-order includes the greedy order");
    } catch (const std::exception& e) {
      check(false, "table --json --best-order includes the greedy order", e.what());
    }
  }

  {
    RunResult r = run("generate lincomb --t 70 --f 7 --d 1 --c 2,2,3 --g 10,10,10 --verify");
    check(r.exit_code == 0 && contains(r.out, "1198774720/14050000 ≈ 85.3220"),
          "generate lincomb --verify shows the 70-coin revealing factor", r.out + r.err);
  }

  {
    RunResult r = run("generate divisibility --t 8 --f 2 --d 1 --a 2 --verify");
    check(r.exit_code == 0 && contains(r.out, "count_f = 16"), "generate divisibility --verify", r.out);
  }

  {
    RunResult r = run("generate three-family --t 9 --f 2 --d 1 --verify");
    check(r.exit_code == 0 && contains(r.out, "count_f = 6"), "generate three-family --verify", r.out);
  }

  {
    // round-trip: generated file re-verifies to identical counts
    const std::string out_file = g_dir + "/lincomb70.json";
    RunResult gen = run("generate lincomb --t 70 --f 7 --d 1 --c 2,2,3 --g 10,10,10 -o " + out_file);
    RunResult ver = run("verify " + out_file + " --json");
    bool ok = gen.exit_code == 0 && ver.exit_code == 0;
    std::string detail = "exit=" + std::to_string(gen.exit_code) + "/" + std::to_string(ver.exit_code);
    try {
      auto j = nlohmann::json::parse(ver.out);
      ok = ok && j.at("count_f") == "14050000" && j.at("discreet") == true;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    check(ok, "generate -o round-trips through verify", detail);
  }

  {
    RunResult r = run("generate divisibility --t 9 --f 2 --d 1 --a 2");
    check(r.exit_code == 1 && contains(r.err, "divide t"), "generator precondition failures exit 1", r.err);
  }

  {
    RunResult r = run("solve --c 2,2,3 --g 10,10,10 --target 7");
    check(r.exit_code == 0 && contains(r.out, "3 solution vector(s)") && contains(r.out, "(0,2,1)") &&
              contains(r.out, "(1,1,1)") && contains(r.out, "(2,0,1)"),
          "solve lists the three solution vectors", r.out);
  }

  {
    RunResult r = run("solve --c 2,2,3 --g 10,10,10 --target 1 --json");
    check(r.exit_code == 0 && r.out == "[]\n", "solve --json with no solutions prints []", r.out);
  }

  {
    RunResult r = run("search --t 4 --f 2 --d 1 --max-groups 1");
    check(r.exit_code == 0 && contains(r.out, "c=(2) g=(2)"), "search finds the 4-coin config", r.out);
  }

  {
    RunResult r = run("search --t 70 --f 7 --d 1 --max-c 7 --max-g 35 --top 3 --json");
    bool ok = r.exit_code == 0;
    std::string detail;
    try {
      auto j = nlohmann::json::parse(r.out);
      ok = ok && j.at("complete") == true && !j.at("results").empty();
      const auto& best = j.at("results")[0];
      ok = ok && std::stoll(best.at("count").get<std::string>()) >= 14050000;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    check(ok, "search --json ranks the 70-coin configurations", detail);
  }

  {
    RunResult r = run("sensitivity --n 6 --m 3");
    check(r.exit_code == 0 && contains(r.out, "33/8") && contains(r.out, "4.1250"),
          "sensitivity table prints the exact fraction", r.out);
  }

  {
    RunResult r = run("sensitivity --n 4:6 --m 2:3 --json");
    bool ok = r.exit_code == 0;
    std::string detail;
    try {
      auto j = nlohmann::json::parse(r.out);
      ok = ok && j.size() == 6;
      for (const auto& row : j) {
        if (row.at("m") == 2) {
          // m = 2: alpha = n exactly
          ok = ok && row.at("exact").at("fraction") == std::to_string(row.at("n").get<long long>()) + "/1";
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    check(ok, "sensitivity --json covers the requested ranges", detail);
  }

  std::cout << (g_failures == 0 ? "ALL CLI CHECKS PASSED" : "CLI FAILURES: " + std::to_string(g_failures))
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
