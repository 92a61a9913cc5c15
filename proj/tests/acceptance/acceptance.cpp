#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "jetlie/suite.hpp"

namespace fs = std::filesystem;
using namespace jetlie;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<bool(const suite::CheckResult&)> member;
};

bool in_group(const suite::CheckResult& c, const std::string& g) { return c.group == g; }
bool has_prefix(const suite::CheckResult& c, const std::string& p) { return c.id.rfind(p, 0) == 0; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool run_cli(const std::string& exe, const fs::path& report) {
  std::string cmd = "\"" + exe + "\" verify-paper --seed 20100901 --report \"" + report.string() + "\" > /dev/null";
  return std::system(cmd.c_str()) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::string exe = argc > 1 ? argv[1] : JETLIE_CLI_PATH;

  suite::Options opt;
  opt.seed = kDefaultSeed;
  auto report = suite::run(opt);

  auto theorem = [](int k) {
    return [k](const suite::CheckResult& c) {
      std::string t = "theorem" + std::to_string(k);
      return in_group(c, t) || has_prefix(c, "exclusions." + t + ".");
    };
  };
  std::vector<Criterion> criteria{
      {1, "commutator tables", [](const auto& c) { return in_group(c, "tables"); }},
      {2, "Jacobi identity", [](const auto& c) { return in_group(c, "jacobi"); }},
      {3, "prolongation term by term", [](const auto& c) { return in_group(c, "prolongation"); }},
      {4, "theorem 1", theorem(1)},
      {5, "theorem 2", theorem(2)},
      {6, "theorem 3", theorem(3)},
      {7, "theorem 4 and ea1 ranks",
       [t = theorem(4)](const auto& c) { return t(c) || has_prefix(c, "ranks.ea1."); }},
      {8, "theorem 5", theorem(5)},
      {9, "theorem 6", theorem(6)},
      {10, "theorem 7, ECGA ranks, Ustar and Vstar",
       [t = theorem(7)](const auto& c) {
         return t(c) || has_prefix(c, "ranks.ecga.") || c.id == "identities.Ustar" || c.id == "identities.Vstar";
       }},
      {11, "systems", [](const auto& c) { return in_group(c, "systems"); }},
      {12, "transformation consistency", [](const auto& c) { return in_group(c, "consistency"); }},
      {13, "mutation sensitivity", [](const auto& c) { return in_group(c, "mutation"); }},
  };

  bool all = true;
  for (const auto& cr : criteria) {
    std::size_t total = 0, passed = 0;
    std::string first_failure;
    for (const auto& c : report.checks) {
      if (!cr.member(c)) continue;
      ++total;
      if (c.status == suite::Status::Pass)
        ++passed;
      else if (first_failure.empty())
        first_failure = c.id;
    }
    bool ok = total > 0 && passed == total;
    if (cr.number == 13) {
      std::size_t mutants = suite::mutations().size();
      ok = ok && mutants >= 10;
    }
    all = all && ok;
    std::printf("criterion %2d %-40s %s  (%zu/%zu checks)%s%s\n", cr.number, cr.title.c_str(), ok ? "PASS" : "FAIL",
                passed, total, first_failure.empty() ? "" : "  first failure: ", first_failure.c_str());
  }

  auto dir = fs::temp_directory_path() / ("jetlie_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  bool a = run_cli(exe, dir / "a.jsonl");
  bool b = run_cli(exe, dir / "b.jsonl");
  std::string ra = slurp(dir / "a.jsonl"), rb = slurp(dir / "b.jsonl");
  bool same = a && b && !ra.empty() && ra == rb;
  fs::remove_all(dir);
  all = all && same;
  std::printf("criterion 14 %-40s %s  (%zu bytes per report)\n", "deterministic structured report", same ? "PASS" : "FAIL",
              ra.size());
  return all ? 0 : 1;
}
