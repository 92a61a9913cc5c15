#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jetlie/jetspace.hpp"

namespace jetlie {

// First-order operator sum_c coef_c d/dc over base coordinates plus an
// optional zero-order multiplier.
class VectorField {
 public:
  VectorField() = default;
  VectorField(JetSpace space, std::string name, const std::map<Symbol, Expr>& coefficients,
              std::optional<Expr> multiplier = std::nullopt);

  const JetSpace& space() const noexcept { return space_; }
  const std::string& name() const noexcept { return name_; }
  const std::map<Symbol, Expr>& coefficients() const noexcept { return coef_; }
  Expr coefficient(Symbol s) const;
  Expr xi(std::size_t i) const { return coefficient(space_.independents().at(i)); }
  Expr eta(std::size_t a) const { return coefficient(space_.dependents().at(a)); }
  const std::optional<Expr>& multiplier() const noexcept { return multiplier_; }
  bool is_zero() const;

  VectorField renamed(std::string name) const;
  VectorField scaled(const Expr& c) const;
  VectorField with_coefficient(Symbol s, const Expr& c) const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend bool operator==(const VectorField& a, const VectorField& b);

  std::string to_string() const;  // DSL body, e.g. -t^2*@t - 2*t*x*@x

 private:
  JetSpace space_;
  std::string name_;
  std::map<Symbol, Expr> coef_;  // nonzero entries only
  std::optional<Expr> multiplier_;
};

class ProlongedField {
 public:
  ProlongedField() = default;
  ProlongedField(VectorField base, unsigned order, std::map<Symbol, Expr> coefficients)
      : base_(std::move(base)), order_(order), coef_(std::move(coefficients)) {}
  const VectorField& base() const noexcept { return base_; }
  unsigned order() const noexcept { return order_; }
  // all nonzero coefficients, base and jet coordinates
  const std::map<Symbol, Expr>& coefficients() const noexcept { return coef_; }
  Expr coefficient(Symbol s) const;

 private:
  VectorField base_;
  unsigned order_ = 0;
  std::map<Symbol, Expr> coef_;
};

ProlongedField prolong(const VectorField& f, unsigned order);

Expr apply(const VectorField& f, const Expr& e);
Expr apply(const ProlongedField& f, const Expr& e);
// apply plus multiplier * e
Expr apply_operator(const VectorField& f, const Expr& e);
// the individual products coef_c * de/dc whose sum is apply(f, e)
std::vector<std::pair<Expr, Expr>> apply_terms(const ProlongedField& f, const Expr& e);

VectorField lie_bracket(const VectorField& a, const VectorField& b);
std::map<Symbol, Expr> lie_bracket(const ProlongedField& a, const ProlongedField& b);

struct LinearTerm {
  Expr coefficient;
  std::string generator;
};
using LinearCombination = std::vector<LinearTerm>;

// Antisymmetric table; unlisted pairs are zero.
class CommutatorTable {
 public:
  void set(const std::string& a, const std::string& b, LinearCombination value);
  LinearCombination get(const std::string& a, const std::string& b) const;
  bool listed(const std::string& a, const std::string& b) const;
  // pairs whose bracket leaves the realized generator set; verify_table skips them
  void leave_unchecked(const std::string& a, const std::string& b);
  bool unchecked(const std::string& a, const std::string& b) const;
  const std::set<std::pair<std::string, std::string>>& unchecked_pairs() const noexcept { return unchecked_; }
  std::vector<std::string> names() const;
  const std::map<std::pair<std::string, std::string>, LinearCombination>& entries() const noexcept { return entries_; }

 private:
  std::map<std::pair<std::string, std::string>, LinearCombination> entries_;
  std::set<std::pair<std::string, std::string>> unchecked_;
};

VectorField combine(const LinearCombination& lc, const std::vector<VectorField>& fields, const JetSpace& space);
std::string to_string(const LinearCombination& lc);

struct PairResult {
  std::string a, b;
  bool pass = false;
  LinearCombination expected;
  VectorField residual;
};

struct TableReport {
  std::vector<PairResult> pairs;
  std::size_t skipped = 0;
  bool all_pass() const;
  std::size_t failures() const;
};

TableReport verify_table(const std::vector<VectorField>& fields, const CommutatorTable& table);

// [[A,B],C] + [[B,C],A] + [[C,A],B]
VectorField jacobiator(const VectorField& a, const VectorField& b, const VectorField& c);

}  // namespace jetlie
