// End-to-end checks of the command-line tool: flag handling, exit codes,
// output formats, table import/export and the verify negative control.
// argv[1] is the path to the gibbspk binary.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_dir;
int g_failures = 0;

void expect(bool ok, const std::string& what) {
  std::printf("[%s] %s\n", ok ? "ok" : "FAILED", what.c_str());
  if (!ok) ++g_failures;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const fs::path out_path = g_dir / "stdout.txt";
  const std::string cmd = g_cli + " " + args + " > " + out_path.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

// parse "shape",count,probability,log_probability rows
struct EppfRow {
  std::string shape;
  long long count;
  double probability;
};

std::vector<EppfRow> parse_eppf_csv(const std::string& text) {
  std::vector<EppfRow> rows;
  for (const auto& line : lines_of(text)) {
    if (line.rfind("shape,", 0) == 0) continue;
    const auto q2 = line.find('"', 1);
    EppfRow row;
    row.shape = line.substr(1, q2 - 1);
    const auto rest = line.substr(q2 + 2);
    std::istringstream in(rest);
    std::string count_s, p_s;
    std::getline(in, count_s, ',');
    std::getline(in, p_s, ',');
    row.count = std::stoll(count_s);
    row.probability = std::strtod(p_s.c_str(), nullptr);
    rows.push_back(row);
  }
  return rows;
}

void test_eppf_basics() {
  auto r = run_cli("eppf --model pd --alpha 0 --theta 1 --n 2");
  expect(r.exit_code == 0, "eppf pd exit code 0");
  const auto rows = parse_eppf_csv(r.out);
  bool halves = rows.size() == 2;
  for (const auto& row : rows) halves = halves && row.probability == 0.5;
  expect(halves, "eppf pd n=2 rows are (1,1) -> 1/2 and (2) -> 1/2");

  auto one = run_cli("eppf --model pd --alpha 0.5 --theta 0.5 --n 1");
  const auto one_rows = parse_eppf_csv(one.out);
  expect(one_rows.size() == 1 && one_rows[0].probability == 1.0, "eppf n=1 gives (1) -> 1");

  auto gg = run_cli("eppf --model gg --alpha 0.5 --delta 1 --zeta 1 --n 4");
  const auto gg_rows = parse_eppf_csv(gg.out);
  double weighted = 0.0;
  for (const auto& row : gg_rows) weighted += static_cast<double>(row.count) * row.probability;
  expect(gg.exit_code == 0 && gg_rows.size() == 5, "eppf gg n=4 emits the 5 shapes");
  expect(std::abs(weighted - 1.0) < 1e-6, "re-parsed gg table renormalizes to 1e-6");

  // 17-digit decimals round-trip exactly: a re-parsed closed-form table
  // renormalizes at closed-form accuracy
  auto pd = run_cli("eppf --model pd --alpha 0.3 --theta 2 --n 6");
  double pd_weighted = 0.0;
  for (const auto& row : parse_eppf_csv(pd.out))
    pd_weighted += static_cast<double>(row.count) * row.probability;
  expect(std::abs(pd_weighted - 1.0) < 1e-10, "re-parsed pd table renormalizes to 1e-10");
}

void test_eppf_errors() {
  expect(run_cli("eppf --model pd --alpha 0 --n 2").exit_code == 2,
         "missing --theta is a usage error (exit 2)");
  expect(run_cli("eppf --model nosuch --alpha 0.5 --n 2").exit_code == 2,
         "unknown model is a usage error (exit 2)");
  expect(run_cli("eppf --model pd --alpha 2 --theta 1 --n 2").exit_code == 2,
         "alpha >= 1 is a usage error (exit 2)");
  expect(run_cli("eppf --model pd --alpha 0 --theta 1 --n 99").exit_code == 2,
         "n beyond the enumeration ceiling is a usage error (exit 2)");
  expect(run_cli("eppf --model gg --alpha 0.5 --delta 1 --zeta 1 --n 4 --rel-tol 1e-15 "
                 "--max-panels 18")
                 .exit_code == 3,
         "unreachable quadrature tolerance is a numerical failure (exit 3)");
}

void test_table_roundtrip() {
  const fs::path table = g_dir / "gg_table.json";
  auto save = run_cli("eppf --model gg --alpha 0.5 --delta 1 --zeta 1 --n 4 --table-out " +
                      table.string());
  expect(save.exit_code == 0 && fs::exists(table), "table export writes a JSON file");

  auto direct = run_cli("eppf --model gg --alpha 0.5 --delta 1 --zeta 1 --n 4");
  auto imported = run_cli("eppf --table-in " + table.string() + " --n 4");
  expect(imported.exit_code == 0, "table import evaluates");
  expect(direct.out == imported.out, "imported table reproduces the table output byte-for-byte");

  auto verify_good = run_cli("verify --table-in " + table.string());
  expect(verify_good.exit_code == 0, "verify accepts the exported table (exit 0)");

  // corrupt one weight (keep V_{1,1}) and expect the recursion check to fail
  std::ifstream in(table);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  const auto pos = text.rfind("\"0.");
  text.replace(pos + 3, 1, "9");
  const fs::path corrupted = g_dir / "gg_table_corrupted.json";
  std::ofstream(corrupted) << text;
  auto verify_bad = run_cli("verify --table-in " + corrupted.string());
  expect(verify_bad.exit_code == 1, "verify flags the corrupted table (exit 1)");
  expect(verify_bad.out.find("[FAIL]") != std::string::npos, "failure appears in the summary");
}

void test_sampling() {
  auto ones = run_cli("sample --model pd --alpha 0 --theta 1 --n 1 --count 5 --seed 7");
  const auto one_lines = lines_of(ones.out);
  bool all_trivial = one_lines.size() == 5;
  for (const auto& l : one_lines) all_trivial = all_trivial && l == "{1}";
  expect(all_trivial, "sampling n=1 yields five copies of {1}");

  auto a = run_cli("sample --model gg --alpha 0.5 --delta 1 --zeta 1 --n 6 --count 40 --seed 3");
  auto b = run_cli("sample --model gg --alpha 0.5 --delta 1 --zeta 1 --n 6 --count 40 --seed 3");
  auto c = run_cli("sample --model gg --alpha 0.5 --delta 1 --zeta 1 --n 6 --count 40 --seed 4");
  expect(a.exit_code == 0 && a.out == b.out, "identical seeds give identical streams");
  expect(a.out != c.out, "different seeds give different streams");

  auto fisher =
      run_cli("sample --model fisher --alpha -1 --m 2 --n 6 --count 1000 --seed 1");
  bool bound = fisher.exit_code == 0;
  for (const auto& line : lines_of(fisher.out)) {
    int blocks = 0;
    for (char ch : line)
      if (ch == '{') ++blocks;
    bound = bound && blocks <= 2;
  }
  expect(bound, "fisher stream never exceeds m=2 blocks");
}

void test_histogram_against_eppf() {
  auto table = run_cli("eppf --model pd --alpha 0.5 --theta 0.5 --n 5");
  const double total = 1000000.0;
  auto hist =
      run_cli("sample --model pd --alpha 0.5 --theta 0.5 --n 5 --count 1000000 --seed 11 "
              "--histogram");
  expect(hist.exit_code == 0, "histogram mode runs");

  const auto expected = parse_eppf_csv(table.out);
  std::vector<EppfRow> observed = parse_eppf_csv(hist.out);  // shape,count,frequency
  bool within = observed.size() == expected.size();
  for (const auto& exp_row : expected) {
    bool found = false;
    for (const auto& obs : observed) {
      if (obs.shape != exp_row.shape) continue;
      found = true;
      const double p = exp_row.probability * static_cast<double>(exp_row.count);
      const double sigma = std::sqrt(total * p * (1.0 - p));
      within = within && std::abs(static_cast<double>(obs.count) - total * p) < 4.0 * sigma;
    }
    within = within && found;
  }
  expect(within, "1e6-draw histogram sits within 4 sigma of the eppf table per shape");
}

void test_verify_suite() {
  auto r = run_cli("verify --suite proposition2 --n 3 --output " +
                   (g_dir / "report.json").string() + " --format json");
  expect(r.exit_code == 0, "proposition2 suite passes (exit 0)");
  std::ifstream report(g_dir / "report.json");
  std::ostringstream buf;
  buf << report.rdbuf();
  expect(buf.str().find("\"suite\": \"proposition2\"") != std::string::npos,
         "JSON report lands in --output with the suite name");
  expect(r.out.find("all checks passed") != std::string::npos,
         "plain-text summary still reaches stdout");
  expect(run_cli("verify --suite nosuch").exit_code == 2, "unknown suite is a usage error");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_driver <path-to-gibbspk-binary>\n");
    return 2;
  }
  g_cli = argv[1];
  g_dir = fs::temp_directory_path() / ("gibbspk_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(g_dir);

  test_eppf_basics();
  test_eppf_errors();
  test_table_roundtrip();
  test_sampling();
  test_histogram_against_eppf();
  test_verify_suite();

  fs::remove_all(g_dir);
  std::printf("%s: %d failures\n", g_failures == 0 ? "CLI TESTS PASSED" : "CLI TESTS FAILED",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
