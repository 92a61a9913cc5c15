#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "jetlie/invariance.hpp"
#include "jetlie/pointtransform.hpp"

namespace jetlie::suite {

enum class Status { Pass, Fail, Error };
std::string_view status_name(Status s);

// what a check observed; a check passes when `holds` matches its expectation
struct Outcome {
  bool holds = false;
  std::string residual;
  std::string witness;
  std::string detail;
};

struct Check {
  std::string id;
  std::string group;
  std::string description;
  bool expect_holds = true;
  std::vector<std::string> keys;  // catalog entries exercised
  std::function<Outcome(std::uint64_t seed)> run;
};

struct CheckResult {
  std::string id, group, description;
  std::vector<std::string> keys;
  bool expect_holds = true;
  Status status = Status::Error;
  Outcome outcome;
  std::string error;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> only;  // group names or check id prefixes; empty: everything
  bool timings = false;
};

struct Report {
  std::uint64_t seed = kDefaultSeed;
  std::vector<CheckResult> checks;
  std::size_t count(Status s) const;
  int exit_code() const;  // any error 2, any failure 1, else 0
};

const std::vector<Check>& all_checks();
std::vector<std::string> groups();
bool selected(const Check& c, const std::vector<std::string>& only);

CheckResult run_check(const Check& c, std::uint64_t seed);
Report run(const Options& opt);

// catalog keys no check refers to
std::vector<std::string> uncovered(const std::vector<Check>& checks);

// single mutation of the exotic realization: one term of one coefficient flipped
struct Mutation {
  std::string field;
  std::string coordinate;
  std::size_t term = 0;
  std::string label() const;
};
std::vector<Mutation> mutations();
Outcome detect(const Mutation& m, std::uint64_t seed);

// building blocks shared with the command-line tool
Outcome table_check(const std::vector<VectorField>& fields, const CommutatorTable& table);
Outcome strict_check(const std::vector<VectorField>& fields, const std::vector<NamedExpr>& exprs, std::uint64_t seed);
// X e reduced on the solution manifold of sys
Outcome reduced_check(const std::vector<VectorField>& fields, const std::vector<NamedExpr>& exprs, const PdeSystem& sys,
                      std::uint64_t seed);
Outcome manifold_check(const std::vector<VectorField>& fields, const PdeSystem& sys, std::uint64_t seed);
Outcome conditional_check(const std::vector<VectorField>& fields, const PdeSystem& sys, const NamedExpr& condition,
                          Symbol lead, std::uint64_t seed);
Outcome identity_check(const PointTransformation& t, const Expr& lhs, const Expr& rhs, std::uint64_t seed);
Outcome rank_check(const RankResult& r, std::optional<std::size_t> expect, const std::string& what);
CheckResult single(std::string id, std::string group, std::string description, std::vector<std::string> keys,
                   bool expect_holds, const std::function<Outcome(std::uint64_t)>& run, std::uint64_t seed);

// JSON lines: header, one record per check, summary
void write_structured(std::ostream& out, const Report& r, bool timings);
void write_human(std::ostream& out, const Report& r, bool timings);

std::string version();
std::string flow_convention();

}  // namespace jetlie::suite
