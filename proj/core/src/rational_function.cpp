#include "jetlie/rational_function.hpp"

#include <map>

#include "jetlie/errors.hpp"
#include "jetlie/polynomial_gcd.hpp"

namespace jetlie {

namespace {

Polynomial quo(const Polynomial& a, const Polynomial& b) {
  if (b.is_one()) return a;
  auto q = a.divide_exact(b);
  if (!q) throw Error(ErrorCode::InternalError, "inexact division in rational function arithmetic");
  return *q;
}

}  // namespace

RationalFunction RationalFunction::make_reduced(Polynomial num, Polynomial den) {
  if (num.is_zero()) return RationalFunction();
  const Rational& lc = den.leading_coeff();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RationalFunction(std::move(num), std::move(den), Raw{});
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den.is_constant()) {
    *this = make_reduced(num, den);
    return;
  }
  Polynomial g = gcd(num, den);
  *this = make_reduced(quo(num, g), quo(den, g));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Raw{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ + b.num_, Polynomial(1), RationalFunction::Raw{});
  if (a.den_.is_one()) return RationalFunction::make_reduced(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_one()) return RationalFunction::make_reduced(a.num_ + b.num_ * a.den_, a.den_);
  if (a.den_ == b.den_) {
    Polynomial n = a.num_ + b.num_;
    if (n.is_zero()) return RationalFunction();
    Polynomial h = gcd(n, a.den_);
    return RationalFunction::make_reduced(quo(n, h), quo(a.den_, h));
  }
  Polynomial g = gcd(a.den_, b.den_);
  Polynomial ad = quo(a.den_, g), bd = quo(b.den_, g);
  Polynomial n = a.num_ * bd + b.num_ * ad;
  if (n.is_zero()) return RationalFunction();
  Polynomial den = a.den_ * bd;
  if (g.is_one()) return RationalFunction::make_reduced(std::move(n), std::move(den));
  Polynomial h = gcd(n, g);
  return RationalFunction::make_reduced(quo(n, h), quo(den, h));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_, Polynomial(1), RationalFunction::Raw{});
  Polynomial g1 = b.den_.is_one() ? Polynomial(1) : gcd(a.num_, b.den_);
  Polynomial g2 = a.den_.is_one() ? Polynomial(1) : gcd(b.num_, a.den_);
  Polynomial n = quo(a.num_, g1) * quo(b.num_, g2);
  Polynomial d = quo(a.den_, g2) * quo(b.den_, g1);
  return RationalFunction::make_reduced(std::move(n), std::move(d));
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return make_reduced(den_, num_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  if (n == 0) return RationalFunction(1);
  return RationalFunction(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)), Raw{});
}

RationalFunction RationalFunction::derivative(Symbol s) const {
  if (den_.is_one()) return RationalFunction(num_.derivative(s));
  Polynomial dn = num_.derivative(s), dd = den_.derivative(s);
  if (dd.is_zero()) return RationalFunction(dn, den_);
  return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
  if (c == 0) return RationalFunction();
  return RationalFunction(num_.scaled(c), den_, Raw{});
}

Rational RationalFunction::evaluate(const Assignment& at) const {
  Rational d = den_.evaluate(at);
  if (d == 0) throw Error(ErrorCode::SingularPoint, "denominator " + den_.to_string() + " vanishes");
  return num_.evaluate(at) / d;
}

RationalFunction RationalFunction::substitute(const std::unordered_map<std::uint32_t, RationalFunction>& images) const {
  bool polynomial_images = true;
  std::unordered_map<std::uint32_t, Polynomial> pimg;
  for (const auto& [v, img] : images) {
    if (!img.den_.is_one()) polynomial_images = false;
    if (num_.contains(Symbol::from_id(v)) || den_.contains(Symbol::from_id(v))) pimg.emplace(v, img.num_);
  }
  if (pimg.empty()) return *this;
  if (polynomial_images) return RationalFunction(num_.substitute(pimg), den_.substitute(pimg));

  // clear image denominators with a shared power per variable
  std::unordered_map<std::uint32_t, std::uint32_t> top;
  for (const auto& [v, img] : pimg) {
    (void)img;
    Symbol s = Symbol::from_id(v);
    top[v] = std::max(num_.degree_in(s), den_.degree_in(s));
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> npow, dpow;
  auto power = [](std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial>& cache, std::uint32_t v,
                  std::uint32_t e, const Polynomial& base) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, base.pow(e)).first->second;
  };
  auto homogenize = [&](const Polynomial& p) {
    Polynomial out;
    for (const auto& t : p.terms()) {
      Polynomial f(t.coeff);
      std::vector<VarPower> rest;
      std::map<std::uint32_t, std::uint32_t> seen;
      for (const auto& vp : t.mono.factors()) {
        if (pimg.count(vp.var))
          seen[vp.var] = vp.exp;
        else
          rest.push_back(vp);
      }
      for (const auto& [v, d] : top) {
        const auto& img = images.at(v);
        std::uint32_t e = seen.count(v) ? seen[v] : 0;
        if (e > 0) f = f * power(npow, v, e, img.num_);
        if (d - e > 0 && !img.den_.is_one()) f = f * power(dpow, v, d - e, img.den_);
      }
      out += f.times_monomial(Monomial::from_factors(std::move(rest)), 1);
    }
    return out;
  };
  return RationalFunction(homogenize(num_), homogenize(den_));
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.size() == 1 && num_.terms()[0].mono.is_one() ? num_.to_string() : "(" + num_.to_string() + ")";
  return n + "/(" + den_.to_string() + ")";
}

}  // namespace jetlie
