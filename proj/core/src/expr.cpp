#include "jetlie/expr.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "jetlie/errors.hpp"
#include "jetlie/polynomial_gcd.hpp"

namespace jetlie {

// ---- RadicalMonomial

RadicalMonomial RadicalMonomial::single(Polynomial base, Rational exponent) {
  RadicalMonomial m;
  m.f_.push_back({std::move(base), std::move(exponent)});
  return m;
}

bool RadicalMonomial::contains(Symbol s) const {
  for (const auto& f : f_)
    if (f.base.contains(s)) return true;
  return false;
}

std::pair<RationalFunction, RadicalMonomial> RadicalMonomial::times(const RadicalMonomial& o) const {
  if (o.f_.empty()) return {RationalFunction(1), *this};
  if (f_.empty()) return {RationalFunction(1), o};
  RadicalMonomial r;
  Polynomial extra(1);
  std::size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    if (j == o.f_.size() || (i < f_.size() && f_[i].base < o.f_[j].base)) {
      r.f_.push_back(f_[i++]);
    } else if (i == f_.size() || o.f_[j].base < f_[i].base) {
      r.f_.push_back(o.f_[j++]);
    } else {
      Rational e = f_[i].exponent + o.f_[j].exponent;
      if (e >= 1) {
        extra = extra * f_[i].base;
        e -= 1;
      }
      if (e != 0) r.f_.push_back({f_[i].base, e});
      ++i;
      ++j;
    }
  }
  return {RationalFunction(extra), r};
}

std::pair<RationalFunction, RadicalMonomial> RadicalMonomial::inverse() const {
  RadicalMonomial r;
  Polynomial den(1);
  for (const auto& f : f_) {
    den = den * f.base;
    r.f_.push_back({f.base, 1 - f.exponent});
  }
  return {RationalFunction(Polynomial(1), den), r};
}

bool operator<(const RadicalMonomial& a, const RadicalMonomial& b) {
  std::size_t n = std::min(a.f_.size(), b.f_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a.f_[i].base == b.f_[i].base)) return a.f_[i].base < b.f_[i].base;
    if (a.f_[i].exponent != b.f_[i].exponent) return a.f_[i].exponent < b.f_[i].exponent;
  }
  return a.f_.size() < b.f_.size();
}

std::string RadicalMonomial::to_string() const {
  std::string s;
  for (const auto& f : f_) {
    if (!s.empty()) s += "*";
    s += "(" + f.base.to_string() + ")^(" + jetlie::to_string(f.exponent) + ")";
  }
  return s.empty() ? "1" : s;
}

// ---- AssumptionRegistry

AssumptionRegistry::AssumptionRegistry(std::initializer_list<Polynomial> positive) {
  for (const auto& p : positive) add_positive(p);
}

void AssumptionRegistry::add_positive(const Polynomial& q) {
  if (q.is_constant()) return;
  for (const auto& p : positive_)
    if (p == q) return;
  positive_.push_back(q);
  monic_.emplace_back(q.monic(), q.leading_coeff() > 0 ? 1 : -1);
}

std::optional<int> AssumptionRegistry::sign_of(const Polynomial& monic_s) const {
  for (const auto& [m, sign] : monic_)
    if (m == monic_s) return sign;
  return std::nullopt;
}

// ---- Expr

Expr::Expr(const RationalFunction& r) {
  if (!r.is_zero()) t_.emplace_back(RadicalMonomial(), r);
}

Expr Expr::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Expr e;
  for (auto& t : terms) {
    if (!e.t_.empty() && e.t_.back().first == t.first) {
      e.t_.back().second += t.second;
      if (e.t_.back().second.is_zero()) e.t_.pop_back();
    } else if (!t.second.is_zero()) {
      e.t_.push_back(std::move(t));
    }
  }
  return e;
}

Expr Expr::radical(const RadicalMonomial& m, const RationalFunction& c) {
  Expr e;
  if (!c.is_zero()) e.t_.emplace_back(m, c);
  return e;
}

RationalFunction Expr::as_rational_function() const {
  if (t_.empty()) return RationalFunction();
  if (!is_rational_function()) throw Error(ErrorCode::InvalidArgument, "expression contains radicals");
  return t_[0].second;
}

std::optional<Rational> Expr::as_constant() const {
  if (t_.empty()) return Rational(0);
  if (!is_rational_function() || !t_[0].second.is_constant()) return std::nullopt;
  return t_[0].second.num().constant_value();
}

bool Expr::contains(Symbol s) const {
  for (const auto& [m, c] : t_)
    if (c.contains(s) || m.contains(s)) return true;
  return false;
}

std::vector<Symbol> Expr::free_symbols() const {
  std::set<Symbol> out;
  for (const auto& [m, c] : t_) {
    for (auto s : c.num().variables()) out.insert(s);
    for (auto s : c.den().variables()) out.insert(s);
    for (const auto& f : m.factors())
      for (auto s : f.base.variables()) out.insert(s);
  }
  return {out.begin(), out.end()};
}

Expr Expr::operator-() const {
  Expr r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.t_.empty()) return b;
  if (b.t_.empty()) return a;
  Expr r;
  std::size_t i = 0, j = 0;
  while (i < a.t_.size() || j < b.t_.size()) {
    if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
      r.t_.push_back(a.t_[i++]);
    } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
      r.t_.push_back(b.t_[j++]);
    } else {
      RationalFunction c = a.t_[i].second + b.t_[j].second;
      if (!c.is_zero()) r.t_.emplace_back(a.t_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.t_.empty() || b.t_.empty()) return {};
  if (a.is_rational_function() && b.is_rational_function())
    return Expr(a.t_[0].second * b.t_[0].second);
  std::vector<Expr::Term> terms;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      auto [extra, m] = ma.times(mb);
      terms.emplace_back(std::move(m), ca * cb * extra);
    }
  return Expr::from_terms(std::move(terms));
}

Expr Expr::inverse() const {
  if (t_.empty()) throw Error(ErrorCode::DivisionByZero, "division by an expression that is zero");
  if (t_.size() != 1)
    throw Error(ErrorCode::UnsupportedRadical, "division by a sum of distinct radical monomials: " + to_string());
  auto [c, m] = t_[0].first.inverse();
  return Expr::radical(m, c * t_[0].second.inverse());
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by an expression that is zero");
  if (a.is_zero()) return {};
  if (a.is_rational_function() && b.is_rational_function())
    return Expr(a.t_[0].second / b.t_[0].second);
  return a * b.inverse();
}

Expr Expr::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Expr result(1), base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Expr Expr::derivative(Symbol s) const {
  std::vector<Term> terms;
  for (const auto& [m, c] : t_) {
    RationalFunction d = c.derivative(s);
    for (const auto& f : m.factors()) {
      Polynomial db = f.base.derivative(s);
      if (db.is_zero()) continue;
      d += c * RationalFunction(db.scaled(f.exponent), f.base);
    }
    if (!d.is_zero()) terms.emplace_back(m, std::move(d));
  }
  Expr e;
  e.t_ = std::move(terms);  // monomials unchanged, order kept
  return e;
}

std::string Expr::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const auto& [m, c] = t_[i];
    std::string term;
    if (m.is_one()) {
      term = c.to_string();
    } else {
      std::string cs = c.to_string();
      if (c == RationalFunction(1))
        term = m.to_string();
      else if (c == RationalFunction(-1))
        term = "-" + m.to_string();
      else if (c.is_polynomial() && c.num().size() == 1)
        term = cs + "*" + m.to_string();
      else
        term = "(" + cs + ")*" + m.to_string();
    }
    if (i == 0)
      s = term;
    else if (term[0] == '-')
      s += " - " + term.substr(1);
    else
      s += " + " + term;
  }
  return s;
}

// ---- radicals

namespace {

// coefficient * base^e with e folded into an integer part and a fraction in (0,1)
void add_power(const Polynomial& base, const Rational& e, RationalFunction& coeff, RadicalMonomial& mono) {
  Integer k = floor(e);
  Rational frac = e - Rational(k);
  if (k != 0) coeff *= RationalFunction(base).pow(k.get_si());
  if (frac != 0) {
    auto [extra, m] = mono.times(RadicalMonomial::single(base, frac));
    coeff *= extra;
    mono = std::move(m);
  }
}

}  // namespace

Expr radical_power(const Polynomial& p, const Rational& q, const AssumptionRegistry& reg) {
  if (is_integer(q)) return Expr(p).pow(q.get_num().get_si());
  if (p.is_zero()) {
    if (q > 0) return Expr();
    throw Error(ErrorCode::DivisionByZero, "zero raised to a negative power");
  }
  const Integer n = q.get_num();
  const unsigned long d = q.get_den().get_ui();
  RationalFunction coeff(1);
  RadicalMonomial mono;

  auto constant_power = [&](Rational c) {
    if (c == 1) return;
    if (c < 0) {
      if (d % 2 == 0) throw Error(ErrorCode::UnsupportedRadical, "even root of a negative constant");
      if (n % 2 != 0) coeff = -coeff;
      c = -c;
    }
    if (auto r = exact_root(c, d)) {
      coeff *= RationalFunction(jetlie::pow(*r, n.get_si()));
      return;
    }
    add_power(Polynomial(c), q, coeff, mono);
  };

  if (p.is_constant()) {
    constant_power(p.constant_value());
    return Expr::radical(mono, coeff);
  }

  Polynomial rest = p;
  Rational sign = 1;
  for (const auto& [s, sgn] : reg.monic_forms()) {
    unsigned m = 0;
    while (!rest.is_constant()) {
      auto qq = rest.divide_exact(s);
      if (!qq) break;
      rest = std::move(*qq);
      ++m;
    }
    if (m == 0) continue;
    Polynomial positive_form = sgn > 0 ? s : -s;
    if (sgn < 0 && m % 2 == 1) sign = -sign;
    add_power(positive_form, q * m, coeff, mono);
  }

  Rational c = rest.leading_coeff() * sign;
  Polynomial combined(1);
  if (!rest.is_constant()) {
    auto [lc, parts] = squarefree_decomposition(rest.monic());
    (void)lc;
    for (const auto& [s, i] : parts) {
      unsigned long a = i / d, b = i % d;
      if (a > 0) {
        if (d % 2 == 0 && a % 2 == 1)
          throw Error(ErrorCode::UnsupportedRadical,
                      "sign of " + s.to_string() + " is unknown; register it as positive to extract it from a radical");
        coeff *= RationalFunction(s).pow(static_cast<long>(a) * n.get_si());
      }
      if (b > 0) combined = combined * s.pow(static_cast<unsigned>(b));
    }
  }
  if (c < 0 && !combined.is_constant()) {
    combined = -combined;
    c = -c;
  }
  constant_power(c);
  if (!combined.is_constant()) add_power(combined, q, coeff, mono);
  return Expr::radical(mono, coeff);
}

Expr pow(const Expr& e, const Rational& q, const AssumptionRegistry& reg) {
  if (is_integer(q)) return e.pow(q.get_num().get_si());
  if (e.is_zero()) {
    if (q > 0) return Expr();
    throw Error(ErrorCode::DivisionByZero, "zero raised to a negative power");
  }
  if (e.terms().size() != 1)
    throw Error(ErrorCode::UnsupportedRadical, "rational power of a sum of distinct radical monomials");
  const auto& [m, c] = e.terms()[0];
  RationalFunction coeff(1);
  RadicalMonomial mono;
  for (const auto& f : m.factors()) add_power(f.base, f.exponent * q, coeff, mono);
  Expr result = Expr::radical(mono, coeff);
  result = result * radical_power(c.num(), q, reg);
  if (!c.den().is_one()) result = result * radical_power(c.den(), -q, reg);
  return result;
}

// ---- substitution

namespace {

Expr poly_in_exprs(const Polynomial& p, const std::unordered_map<std::uint32_t, Expr>& img) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, Expr> cache;
  Expr out;
  for (const auto& t : p.terms()) {
    Expr term(t.coeff);
    std::vector<VarPower> rest;
    for (const auto& f : t.mono.factors()) {
      auto it = img.find(f.var);
      if (it == img.end()) {
        rest.push_back(f);
        continue;
      }
      auto key = std::make_pair(f.var, f.exp);
      auto c = cache.find(key);
      if (c == cache.end()) c = cache.emplace(key, it->second.pow(f.exp)).first;
      term = term * c->second;
    }
    out += term * Expr(Polynomial::monomial(Monomial::from_factors(std::move(rest)), 1));
  }
  return out;
}

}  // namespace

Expr substitute(const Expr& e, const Substitution& sigma, const AssumptionRegistry& reg) {
  if (sigma.empty() || e.is_zero()) return e;
  bool touched = false;
  for (const auto& [s, img] : sigma)
    if (e.contains(s)) {
      touched = true;
      break;
    }
  if (!touched) return e;

  bool rational_images = true;
  std::unordered_map<std::uint32_t, RationalFunction> rimg;
  std::unordered_map<std::uint32_t, Expr> eimg;
  for (const auto& [s, img] : sigma) {
    if (!e.contains(s)) continue;
    if (img.is_rational_function())
      rimg.emplace(s.id(), img.as_rational_function());
    else
      rational_images = false;
    eimg.emplace(s.id(), img);
  }

  Expr out;
  for (const auto& [m, c] : e.terms()) {
    Expr term;
    if (rational_images) {
      term = Expr(c.substitute(rimg));
    } else {
      term = poly_in_exprs(c.num(), eimg) / poly_in_exprs(c.den(), eimg);
    }
    for (const auto& f : m.factors()) {
      bool hit = false;
      for (const auto& [v, img] : eimg)
        if (f.base.contains(Symbol::from_id(v))) {
          hit = true;
          break;
        }
      if (!hit) {
        term = term * Expr::radical(RadicalMonomial::single(f.base, f.exponent), RationalFunction(1));
        continue;
      }
      if (rational_images) {
        RationalFunction b = RationalFunction(f.base).substitute(rimg);
        Expr r = radical_power(b.num(), f.exponent, reg);
        if (!b.den().is_one()) r = r * radical_power(b.den(), -f.exponent, reg);
        term = term * r;
      } else {
        term = term * pow(poly_in_exprs(f.base, eimg), f.exponent, reg);
      }
    }
    out += term;
  }
  return out;
}

// ---- collect

std::vector<std::pair<Monomial, Expr>> collect(const Expr& e, const std::vector<Symbol>& split) {
  std::vector<std::pair<Monomial, std::vector<Expr::Term>>> groups;
  auto group_of = [&](const Monomial& key) -> std::vector<Expr::Term>& {
    for (auto& g : groups)
      if (g.first == key) return g.second;
    groups.emplace_back(key, std::vector<Expr::Term>{});
    return groups.back().second;
  };
  for (const auto& [m, c] : e.terms()) {
    for (auto s : split) {
      if (m.contains(s)) throw Error(ErrorCode::NotPolynomialInSplitVars, s.name() + " appears under a radical");
      if (c.den().contains(s)) throw Error(ErrorCode::NotPolynomialInSplitVars, s.name() + " appears in a denominator");
    }
    std::vector<std::pair<Monomial, std::vector<Polynomial::Term>>> parts;
    for (const auto& t : c.num().terms()) {
      Monomial key = t.mono.restricted_to(split);
      Monomial rest = t.mono.quotient(key);
      auto it = std::find_if(parts.begin(), parts.end(), [&](const auto& p) { return p.first == key; });
      if (it == parts.end()) {
        parts.emplace_back(key, std::vector<Polynomial::Term>{});
        it = std::prev(parts.end());
      }
      it->second.push_back({rest, t.coeff});
    }
    for (auto& [key, terms] : parts)
      group_of(key).emplace_back(m, RationalFunction(Polynomial::from_terms(std::move(terms)), c.den()));
  }
  std::vector<std::pair<Monomial, Expr>> out;
  for (auto& [key, terms] : groups) {
    Expr coeff = Expr::from_terms(std::move(terms));
    if (!coeff.is_zero()) out.emplace_back(key, std::move(coeff));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return grlex_compare(a.first, b.first) > 0; });
  return out;
}

// ---- side relations

Polynomial reduce(const Polynomial& p, const SideRelation& rel) {
  if (p.degree_in(rel.var) < 2) return p;
  std::vector<Polynomial> powers{Polynomial(1)};
  Polynomial out;
  std::vector<Polynomial::Term> keep;
  for (const auto& t : p.terms()) {
    auto e = t.mono.degree_in(rel.var);
    if (e < 2) {
      keep.push_back(t);
      continue;
    }
    while (powers.size() <= e / 2) powers.push_back(powers.back() * rel.square_value);
    Monomial rest = t.mono.without(rel.var) * Monomial::of(rel.var, e % 2);
    out += powers[e / 2].times_monomial(rest, t.coeff);
  }
  return out + Polynomial::from_terms(std::move(keep));
}

Expr reduce(const Expr& e, const SideRelation& rel) {
  std::vector<Expr::Term> terms;
  for (const auto& [m, c] : e.terms()) {
    if (!c.contains(rel.var)) {
      terms.emplace_back(m, c);
      continue;
    }
    terms.emplace_back(m, RationalFunction(reduce(c.num(), rel), reduce(c.den(), rel)));
  }
  return Expr::from_terms(std::move(terms));
}

Expr det(const std::vector<std::vector<Expr>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::ArityError, "determinant of a non-square matrix");
  if (n == 0) return Expr(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Expr out;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Expr>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Expr> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Expr term = m[0][j] * det(minor);
    out = j % 2 == 0 ? out + term : out - term;
  }
  return out;
}

}  // namespace jetlie
