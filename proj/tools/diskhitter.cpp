// Command-line front end over the diskhitter C API.
//
// Exit codes: 0 success / YES / certified, 1 NO / not certified,
// 2 usage or input errors, 3 undecided because every decomposition overflowed.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diskhitter/diskhitter.h"

namespace {

constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

struct InstanceDeleter {
  void operator()(dh_instance* p) const { dh_instance_free(p); }
};
struct ReportDeleter {
  void operator()(dh_report* p) const { dh_report_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { dh_string_free(p); }
};
using Instance = std::unique_ptr<dh_instance, InstanceDeleter>;
using Report = std::unique_ptr<dh_report, ReportDeleter>;
using Text = std::unique_ptr<char, StringDeleter>;

int report_failure(dh_status s) {
  std::fprintf(stderr, "error: %s: %s\n", dh_status_name(s), dh_last_error());
  return kExitUsage;
}

bool load(const std::string& path, Instance& out, int& code) {
  dh_instance* raw = nullptr;
  const dh_status s = dh_instance_read(path.c_str(), &raw);
  if (s != DH_OK) {
    code = report_failure(s);
    return false;
  }
  out.reset(raw);
  return true;
}

bool problem_of(const std::string& name, dh_problem& out, int& code) {
  const dh_status s = dh_parse_problem(name.c_str(), &out);
  if (s != DH_OK) code = report_failure(s);
  return s == DH_OK;
}

struct GenArgs {
  int n = 0;
  int ply = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  dh_instance* raw = nullptr;
  dh_status s = dh_instance_generate(a.n, a.ply, a.seed, &raw);
  if (s != DH_OK) return report_failure(s);
  Instance inst(raw);
  if (!a.out.empty()) {
    s = dh_instance_write(inst.get(), a.out.c_str());
    return s == DH_OK ? 0 : report_failure(s);
  }
  char* text = nullptr;
  s = dh_instance_json(inst.get(), &text);
  if (s != DH_OK) return report_failure(s);
  Text owned(text);
  std::fputs(text, stdout);
  return 0;
}

struct SolveArgs {
  std::string problem;
  int k = 0;
  std::string input;
  bool robust = false;
  int p = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string report;
};

int cmd_solve(const SolveArgs& a) {
  int code = 0;
  dh_solve_options opts;
  dh_solve_options_init(&opts);
  Instance inst;
  if (!problem_of(a.problem, opts.problem, code) || !load(a.input, inst, code)) return code;
  opts.robust = a.robust ? 1 : 0;
  opts.p = a.p;
  opts.seed = a.seed;
  opts.jobs = a.jobs;

  dh_report* raw = nullptr;
  const dh_status s = dh_solve(inst.get(), a.k, &opts, &raw);
  if (s != DH_OK) return report_failure(s);
  Report rep(raw);

  if (!a.report.empty()) {
    char* text = nullptr;
    if (dh_report_json(rep.get(), &text) != DH_OK) return report_failure(DH_ERR_INTERNAL);
    Text owned(text);
    std::FILE* f = std::fopen(a.report.c_str(), "wb");
    if (!f || std::fputs(text, f) < 0 || std::fclose(f) != 0) {
      std::fprintf(stderr, "error: cannot write %s\n", a.report.c_str());
      return kExitUsage;
    }
  }

  switch (dh_report_answer(rep.get())) {
    case DH_YES: {
      std::vector<std::int32_t> ids(dh_report_solution(rep.get(), nullptr, 0));
      dh_report_solution(rep.get(), ids.data(), ids.size());
      std::string line = "[";
      for (std::size_t i = 0; i < ids.size(); ++i) line += (i ? ", " : "") + std::to_string(ids[i]);
      std::printf("YES\n%s]\n", line.c_str());
      return 0;
    }
    case DH_NO:
      std::puts("NO");
      return kExitNo;
    case DH_UNKNOWN:
      std::puts("UNKNOWN");
      return kExitUnknown;
  }
  return kExitUnknown;
}

struct VerifyArgs {
  std::string problem;
  std::string input;
  std::string solution;
  int k = 0;
};

int cmd_verify(const VerifyArgs& a) {
  int code = 0;
  dh_problem problem = DH_THS;
  Instance inst;
  if (!problem_of(a.problem, problem, code) || !load(a.input, inst, code)) return code;
  int certified = 0;
  const dh_status s = dh_verify_file(inst.get(), problem, a.solution.c_str(), a.k, &certified);
  if (s != DH_OK) return report_failure(s);
  std::puts(certified ? "certified" : "not certified");
  return certified ? 0 : kExitNo;
}

struct OracleArgs {
  std::string problem;
  std::string input;
  int kmax = 0;
};

int cmd_oracle(const OracleArgs& a) {
  int code = 0;
  dh_problem problem = DH_THS;
  Instance inst;
  if (!problem_of(a.problem, problem, code) || !load(a.input, inst, code)) return code;
  char* text = nullptr;
  const dh_status s = dh_oracle(inst.get(), problem, a.kmax, nullptr, &text);
  if (s != DH_OK) return report_failure(s);
  Text owned(text);
  std::fputs(text, stdout);
  return 0;
}

struct StatsArgs {
  std::string input;
  std::string td;
  bool robust = false;
  int k = -1;
  int p = 0;
};

int cmd_stats(const StatsArgs& a) {
  int code = 0;
  Instance inst;
  if (!load(a.input, inst, code)) return code;
  char* text = nullptr;
  const dh_status s = dh_stats(inst.get(), a.robust ? 1 : 0, a.k, a.p, a.td.empty() ? nullptr : a.td.c_str(), &text);
  if (s != DH_OK) return report_failure(s);
  Text owned(text);
  std::fputs(text, stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle hitting, feedback vertex set and odd cycle transversal on disk graphs"};
  app.require_subcommand(1);
  const auto problems = CLI::IsMember({"ths", "fvs", "oct"});

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write a random disk instance");
  g->add_option("--n", gen.n, "Number of disks")->required();
  g->add_option("--ply", gen.ply, "Maximum ply")->required();
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--out", gen.out, "Output file (stdout if omitted)");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Decide whether a solution of size k exists");
  s->add_option("--problem", solve.problem)->required()->check(problems);
  s->add_option("--k", solve.k)->required()->check(CLI::NonNegativeNumber);
  s->add_option("--input", solve.input)->required();
  s->add_flag("--robust", solve.robust, "Ignore disks and use only the graph");
  s->add_option("--p", solve.p, "Branching parameter (default depends on problem and k)")->check(CLI::Range(3, 1 << 20));
  s->add_option("--seed", solve.seed);
  s->add_option("--jobs", solve.jobs)->check(CLI::PositiveNumber);
  s->add_option("--report", solve.report, "Write a JSON report");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a solution file");
  v->add_option("--problem", verify.problem)->required()->check(problems);
  v->add_option("--input", verify.input)->required();
  v->add_option("--solution", verify.solution)->required();
  v->add_option("--k", verify.k)->required()->check(CLI::NonNegativeNumber);

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exact optimum by exhaustive search");
  o->add_option("--problem", oracle.problem)->required()->check(problems);
  o->add_option("--input", oracle.input)->required();
  o->add_option("--kmax", oracle.kmax)->required()->check(CLI::NonNegativeNumber);

  StatsArgs stats;
  auto* st = app.add_subcommand("stats", "Print instance metrics as CSV");
  st->add_option("--input", stats.input)->required();
  st->add_option("--td", stats.td, "Write the decomposition in PACE format");
  st->add_flag("--robust", stats.robust);
  st->add_option("--k", stats.k, "Budget for the kernel columns")->check(CLI::NonNegativeNumber);
  st->add_option("--p", stats.p)->check(CLI::Range(3, 1 << 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (g->parsed()) return cmd_gen(gen);
  if (s->parsed()) return cmd_solve(solve);
  if (v->parsed()) return cmd_verify(verify);
  if (o->parsed()) return cmd_oracle(oracle);
  return cmd_stats(stats);
}
