#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jetlie/rational.hpp"
#include "jetlie/symbol.hpp"

namespace jetlie {

struct VarPower {
  std::uint32_t var;
  std::uint32_t exp;
  friend bool operator==(const VarPower&, const VarPower&) = default;
};

// Power product, factors sorted by symbol id.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Symbol s, std::uint32_t exp = 1);
  static Monomial from_factors(std::vector<VarPower> factors);

  const std::vector<VarPower>& factors() const noexcept { return f_; }
  std::uint32_t degree() const noexcept { return deg_; }
  std::uint32_t degree_in(Symbol s) const;
  bool is_one() const noexcept { return f_.empty(); }
  bool contains(Symbol s) const { return degree_in(s) > 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // *this | o
  Monomial quotient(const Monomial& divisor) const;
  Monomial gcd(const Monomial& o) const;
  Monomial without(Symbol s) const;
  Monomial restricted_to(const std::vector<Symbol>& keep) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  std::vector<VarPower> f_;
  std::uint32_t deg_ = 0;
};

// Graded lexicographic order; smaller symbol id ranks higher.
int grlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

using Assignment = std::map<Symbol, Rational>;

class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Polynomial() = default;
  Polynomial(long c);  // NOLINT
  Polynomial(const Rational& c);  // NOLINT
  static Polynomial variable(Symbol s);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return t_; }
  std::size_t size() const noexcept { return t_.size(); }
  bool is_zero() const noexcept { return t_.empty(); }
  bool is_constant() const noexcept { return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one()); }
  Rational constant_value() const;  // pre: is_constant
  bool is_one() const;
  const Term& leading() const;
  const Rational& leading_coeff() const { return leading().coeff; }

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(Symbol s) const;
  std::vector<Symbol> variables() const;
  bool contains(Symbol s) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned n) const;
  Polynomial derivative(Symbol s) const;

  // Exact quotient if divisor divides *this, otherwise nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  Monomial monomial_content() const;
  Polynomial monic() const;

  Rational evaluate(const Assignment& at) const;
  Polynomial partial_evaluate(const Assignment& at) const;
  Polynomial substitute(const std::unordered_map<std::uint32_t, Polynomial>& images) const;

  // Coefficients with respect to s: result[k] multiplies s^k.
  std::vector<Polynomial> coefficients_in(Symbol s) const;
  static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, Symbol s);

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  std::vector<Term> t_;  // descending grlex, nonzero coefficients
};

std::string term_string(const Rational& c, const Monomial& m, bool leading);

}  // namespace jetlie
