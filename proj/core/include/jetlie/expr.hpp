#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetlie/rational_function.hpp"

namespace jetlie {

struct RadicalFactor {
  Polynomial base;
  Rational exponent;  // in (0, 1)
  friend bool operator==(const RadicalFactor& a, const RadicalFactor& b) {
    return a.base == b.base && a.exponent == b.exponent;
  }
};

// Product of radical factors with distinct bases, sorted by base.
class RadicalMonomial {
 public:
  RadicalMonomial() = default;
  static RadicalMonomial single(Polynomial base, Rational exponent);

  const std::vector<RadicalFactor>& factors() const noexcept { return f_; }
  bool is_one() const noexcept { return f_.empty(); }
  bool contains(Symbol s) const;

  // (*this)*(o) = coefficient * monomial
  std::pair<RationalFunction, RadicalMonomial> times(const RadicalMonomial& o) const;
  // 1/(*this) = coefficient * monomial
  std::pair<RationalFunction, RadicalMonomial> inverse() const;

  friend bool operator==(const RadicalMonomial& a, const RadicalMonomial& b) { return a.f_ == b.f_; }
  friend bool operator<(const RadicalMonomial& a, const RadicalMonomial& b);
  std::string to_string() const;

 private:
  std::vector<RadicalFactor> f_;
};

// Polynomials assumed strictly positive when pulling factors out of radicals.
class AssumptionRegistry {
 public:
  AssumptionRegistry() = default;
  AssumptionRegistry(std::initializer_list<Polynomial> positive);
  void add_positive(const Polynomial& q);
  // For a monic polynomial s: +1 if s > 0 is known, -1 if s < 0 is known.
  std::optional<int> sign_of(const Polynomial& monic_s) const;
  const std::vector<Polynomial>& positive() const noexcept { return positive_; }
  const std::vector<std::pair<Polynomial, int>>& monic_forms() const noexcept { return monic_; }
  bool empty() const noexcept { return positive_.empty(); }

 private:
  std::vector<Polynomial> positive_;
  std::vector<std::pair<Polynomial, int>> monic_;
};

class Expr {
 public:
  using Term = std::pair<RadicalMonomial, RationalFunction>;

  Expr() = default;
  Expr(long c) : Expr(RationalFunction(c)) {}  // NOLINT
  Expr(const Rational& c) : Expr(RationalFunction(c)) {}  // NOLINT
  Expr(Symbol s) : Expr(RationalFunction(Polynomial::variable(s))) {}  // NOLINT
  Expr(const Polynomial& p) : Expr(RationalFunction(p)) {}  // NOLINT
  Expr(const RationalFunction& r);  // NOLINT
  static Expr from_terms(std::vector<Term> terms);
  static Expr radical(const RadicalMonomial& m, const RationalFunction& c);

  const std::vector<Term>& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }
  bool is_rational_function() const noexcept { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  RationalFunction as_rational_function() const;  // pre: is_rational_function
  std::optional<Rational> as_constant() const;
  bool has_radicals() const { return !is_rational_function(); }

  bool contains(Symbol s) const;
  std::vector<Symbol> free_symbols() const;

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  Expr& operator/=(const Expr& o) { return *this = *this / o; }
  friend bool operator==(const Expr& a, const Expr& b) { return a.t_ == b.t_; }

  Expr pow(long n) const;
  Expr inverse() const;  // UnsupportedRadical for sums involving radicals
  Expr derivative(Symbol s) const;

  std::string to_string() const;

 private:
  std::vector<Term> t_;  // sorted by monomial, empty monomial first
};

Expr pow(const Expr& e, const Rational& q, const AssumptionRegistry& reg = {});
Expr radical_power(const Polynomial& p, const Rational& q, const AssumptionRegistry& reg = {});

inline Expr differentiate(const Expr& e, Symbol s) { return e.derivative(s); }

using Substitution = std::map<Symbol, Expr>;
Expr substitute(const Expr& e, const Substitution& sigma, const AssumptionRegistry& reg = {});

inline bool is_zero(const Expr& e) { return e.is_zero(); }

// Terms of e grouped by monomials in the split symbols (descending grlex).
std::vector<std::pair<Monomial, Expr>> collect(const Expr& e, const std::vector<Symbol>& split);

// Replace v^2 by square_value everywhere (side relation such as s^2 = 1 - c^2).
struct SideRelation {
  Symbol var;
  Polynomial square_value;
};
Polynomial reduce(const Polynomial& p, const SideRelation& rel);
Expr reduce(const Expr& e, const SideRelation& rel);

Expr det(const std::vector<std::vector<Expr>>& m);

}  // namespace jetlie
