#pragma once

#include <string>
#include <unordered_map>

#include "jetlie/polynomial.hpp"

namespace jetlie {

// num/den in lowest terms, den monic (leading coefficient 1 in grlex order).
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  bool contains(Symbol s) const { return num_.contains(s) || den_.contains(s); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
    if (!(a.num_ == b.num_)) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  RationalFunction pow(long n) const;
  RationalFunction inverse() const;
  RationalFunction derivative(Symbol s) const;
  RationalFunction scaled(const Rational& c) const;
  Rational evaluate(const Assignment& at) const;  // SingularPoint when den vanishes
  RationalFunction substitute(const std::unordered_map<std::uint32_t, RationalFunction>& images) const;

  std::string to_string() const;

 private:
  struct Raw {};
  RationalFunction(Polynomial num, Polynomial den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  static RationalFunction make_reduced(Polynomial num, Polynomial den);

  Polynomial num_;
  Polynomial den_;
};

}  // namespace jetlie
