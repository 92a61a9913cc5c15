#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetlie/evaluate.hpp"
#include "jetlie/liefield.hpp"

namespace jetlie {

using NamedExpr = std::pair<std::string, Expr>;

// Equations e = 0 with an optional solved form for chosen leading derivatives.
// The solved form is composed until no right-hand side mentions a leading
// derivative, then checked against every equation.
class PdeSystem {
 public:
  PdeSystem() = default;
  PdeSystem(std::string name, JetSpace space, std::vector<NamedExpr> equations, Substitution solved_form = {},
            AssumptionRegistry reg = {});

  const std::string& name() const noexcept { return name_; }
  const JetSpace& space() const noexcept { return space_; }
  const std::vector<NamedExpr>& equations() const noexcept { return equations_; }
  const Substitution& solved_form() const noexcept { return solved_; }
  const AssumptionRegistry& registry() const noexcept { return reg_; }
  unsigned order() const;

  Expr on_manifold(const Expr& e) const;
  PdeSystem augmented(std::string name, const std::vector<NamedExpr>& conditions, const Substitution& extra) const;

 private:
  std::string name_;
  JetSpace space_;
  std::vector<NamedExpr> equations_;
  Substitution solved_;
  AssumptionRegistry reg_;
};

// v from e = a*v + b with a, b free of v
Expr solve_linear(const Expr& e, Symbol v);

struct InvarianceEntry {
  std::string field, equation;
  bool invariant = false;
  Expr residual;
  std::vector<std::pair<Monomial, Expr>> split;  // residual coefficients when split variables were given
  std::optional<Assignment> witness;
  Rational witness_value;
  std::vector<Symbol> substituted;
};

struct InvarianceReport {
  std::vector<InvarianceEntry> entries;
  bool all_invariant() const;
  std::size_t failures() const;
};

struct InvarianceOptions {
  std::vector<Symbol> split;
  std::uint64_t seed = kDefaultSeed;
  AssumptionRegistry registry;
};

InvarianceReport strict_invariance(const std::vector<VectorField>& fields, const std::vector<NamedExpr>& exprs,
                                   const InvarianceOptions& opt = {});
InvarianceReport manifold_invariance(const std::vector<VectorField>& fields, const PdeSystem& sys,
                                     const InvarianceOptions& opt = {});
InvarianceReport conditional_invariance(const std::vector<VectorField>& fields, const PdeSystem& sys,
                                        const std::vector<NamedExpr>& conditions, const Substitution& condition_solved,
                                        const InvarianceOptions& opt = {});

// point where a nonzero residual evaluates to a nonzero rational part
std::optional<std::pair<Assignment, Rational>> find_witness(const Expr& e, std::uint64_t seed, int tries = 16);

struct RankResult {
  std::size_t rank = 0;
  std::size_t columns = 0;
  std::vector<Assignment> points;
};

RankResult orbit_rank(const std::vector<VectorField>& fields, const JetSpace& space, unsigned order,
                      std::uint64_t seed = kDefaultSeed);
RankResult functional_rank(const std::vector<Expr>& exprs, const JetSpace& space, std::uint64_t seed = kDefaultSeed);

std::size_t rank_of(std::vector<std::vector<Rational>> m);

}  // namespace jetlie
