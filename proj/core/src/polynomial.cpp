#include "jetlie/polynomial.hpp"

#include <algorithm>
#include <functional>

#include "jetlie/errors.hpp"

namespace jetlie {

// ---- Monomial

Monomial Monomial::of(Symbol s, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.f_.push_back({s.id(), exp});
    m.deg_ = exp;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<VarPower> factors) {
  std::sort(factors.begin(), factors.end(), [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.f_.empty() && m.f_.back().var == f.var)
      m.f_.back().exp += f.exp;
    else
      m.f_.push_back(f);
    m.deg_ += f.exp;
  }
  return m;
}

std::uint32_t Monomial::degree_in(Symbol s) const {
  for (const auto& f : f_)
    if (f.var == s.id()) return f.exp;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto i = f_.begin(), j = o.f_.begin();
  while (i != f_.end() && j != o.f_.end()) {
    if (i->var < j->var) r.f_.push_back(*i++);
    else if (j->var < i->var) r.f_.push_back(*j++);
    else {
      r.f_.push_back({i->var, i->exp + j->exp});
      ++i;
      ++j;
    }
  }
  r.f_.insert(r.f_.end(), i, f_.end());
  r.f_.insert(r.f_.end(), j, o.f_.end());
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  auto j = o.f_.begin();
  for (const auto& f : f_) {
    while (j != o.f_.end() && j->var < f.var) ++j;
    if (j == o.f_.end() || j->var != f.var || j->exp < f.exp) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r;
  auto j = divisor.f_.begin();
  for (const auto& f : f_) {
    std::uint32_t e = f.exp;
    if (j != divisor.f_.end() && j->var == f.var) {
      e -= j->exp;
      ++j;
    }
    if (e > 0) r.f_.push_back({f.var, e});
    r.deg_ += e;
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  auto j = o.f_.begin();
  for (const auto& f : f_) {
    while (j != o.f_.end() && j->var < f.var) ++j;
    if (j != o.f_.end() && j->var == f.var) {
      auto e = std::min(f.exp, j->exp);
      r.f_.push_back({f.var, e});
      r.deg_ += e;
    }
  }
  return r;
}

Monomial Monomial::without(Symbol s) const {
  Monomial r;
  for (const auto& f : f_)
    if (f.var != s.id()) {
      r.f_.push_back(f);
      r.deg_ += f.exp;
    }
  return r;
}

Monomial Monomial::restricted_to(const std::vector<Symbol>& keep) const {
  Monomial r;
  for (const auto& f : f_)
    if (std::find(keep.begin(), keep.end(), Symbol::from_id(f.var)) != keep.end()) {
      r.f_.push_back(f);
      r.deg_ += f.exp;
    }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& f : f_) {
    h ^= (static_cast<std::size_t>(f.var) << 20) ^ f.exp;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& f : f_) {
    if (!s.empty()) s += "*";
    s += Symbol::from_id(f.var).name();
    if (f.exp != 1) s += "^" + std::to_string(f.exp);
  }
  return s.empty() ? "1" : s;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].var == fb[j].var) {
      if (fa[i].exp != fb[j].exp) return fa[i].exp < fb[j].exp ? -1 : 1;
      ++i;
      ++j;
    } else if (fa[i].var < fb[j].var) {
      return 1;
    } else {
      return -1;
    }
  }
  if (i < fa.size()) return 1;
  if (j < fb.size()) return -1;
  return 0;
}

// ---- Polynomial

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) { return grlex_compare(a.mono, b.mono) > 0; }

}  // namespace

Polynomial::Polynomial(long c) {
  if (c != 0) t_.push_back({Monomial(), Rational(c)});
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) t_.push_back({Monomial(), c});
}

Polynomial Polynomial::variable(Symbol s) { return monomial(Monomial::of(s), 1); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.t_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  p.t_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().mono == t.mono) {
      p.t_.back().coeff += t.coeff;
      if (p.t_.back().coeff == 0) p.t_.pop_back();
    } else if (t.coeff != 0) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Polynomial::constant_value() const {
  if (t_.empty()) return 0;
  if (!is_constant()) throw Error(ErrorCode::InternalError, "polynomial is not constant");
  return t_[0].coeff;
}

bool Polynomial::is_one() const { return t_.size() == 1 && t_[0].mono.is_one() && t_[0].coeff == 1; }

const Polynomial::Term& Polynomial::leading() const {
  if (t_.empty()) throw Error(ErrorCode::InternalError, "leading term of zero polynomial");
  return t_.front();
}

std::uint32_t Polynomial::total_degree() const { return t_.empty() ? 0 : t_.front().mono.degree(); }

std::uint32_t Polynomial::degree_in(Symbol s) const {
  std::uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.mono.degree_in(s));
  return d;
}

std::vector<Symbol> Polynomial::variables() const {
  std::vector<std::uint32_t> ids;
  for (const auto& t : t_)
    for (const auto& f : t.mono.factors()) ids.push_back(f.var);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Symbol> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(Symbol::from_id(id));
  return out;
}

bool Polynomial::contains(Symbol s) const {
  for (const auto& t : t_)
    if (t.mono.contains(s)) return true;
  return false;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.t_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a, const std::vector<Polynomial::Term>& b,
                                    bool subtract) {
  std::vector<Polynomial::Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(b[j++]);
      if (subtract) r.back().coeff = -r.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) r.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) {
    r.push_back(b[j]);
    if (subtract) r.back().coeff = -r.back().coeff;
  }
  return r;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  t_ = merge(t_, o.t_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.t_.empty()) return *this;
  t_ = merge(t_, o.t_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r;
  if (c == 0) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.t_.empty() || b.t_.empty()) return {};
  if (a.t_.size() == 1) return b.times_monomial(a.t_[0].mono, a.t_[0].coeff);
  if (b.t_.size() == 1) return a.times_monomial(b.t_[0].mono, b.t_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.t_.size() * b.t_.size());
  Rational prod;
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) {
      prod = x.coeff * y.coeff;
      auto [it, inserted] = acc.try_emplace(x.mono * y.mono, prod);
      if (!inserted) it->second += prod;
    }
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial r;
  r.t_ = std::move(terms);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (!(a.t_[i].mono == b.t_[i].mono) || a.t_[i].coeff != b.t_[i].coeff) return false;
  return true;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::min(a.t_.size(), b.t_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = grlex_compare(a.t_[i].mono, b.t_[i].mono);
    if (c != 0) return c < 0;
    if (a.t_[i].coeff != b.t_[i].coeff) return a.t_[i].coeff < b.t_[i].coeff;
  }
  return a.t_.size() < b.t_.size();
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.t_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1), base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(Symbol s) const {
  std::vector<Term> terms;
  for (const auto& t : t_) {
    auto e = t.mono.degree_in(s);
    if (e == 0) continue;
    std::vector<VarPower> f = t.mono.factors();
    for (auto& vp : f)
      if (vp.var == s.id()) vp.exp -= 1;
    terms.push_back({Monomial::from_factors(std::move(f)), t.coeff * e});
  }
  return from_terms(std::move(terms));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (is_zero()) return Polynomial();
  if (divisor.t_.size() == 1) {
    const auto& d = divisor.t_[0];
    Polynomial q;
    q.t_.reserve(t_.size());
    for (const auto& t : t_) {
      if (!d.mono.divides(t.mono)) return std::nullopt;
      q.t_.push_back({t.mono.quotient(d.mono), t.coeff / d.coeff});
    }
    return q;
  }
  const auto& lt = divisor.leading();
  if (total_degree() < divisor.total_degree()) return std::nullopt;
  for (const auto& v : divisor.variables())
    if (degree_in(v) < divisor.degree_in(v)) return std::nullopt;
  Polynomial rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const auto& r = rem.leading();
    if (!lt.mono.divides(r.mono)) return std::nullopt;
    Term q{r.mono.quotient(lt.mono), r.coeff / lt.coeff};
    rem -= divisor.times_monomial(q.mono, q.coeff);
    quot.push_back(std::move(q));
  }
  Polynomial q;
  q.t_ = std::move(quot);  // produced in descending order
  return q;
}

Monomial Polynomial::monomial_content() const {
  if (t_.empty()) return {};
  Monomial g = t_[0].mono;
  for (std::size_t i = 1; i < t_.size() && !g.is_one(); ++i) g = g.gcd(t_[i].mono);
  return g;
}

Polynomial Polynomial::monic() const {
  if (t_.empty()) return {};
  return scaled(1 / t_.front().coeff);
}

Rational Polynomial::evaluate(const Assignment& at) const {
  Rational sum = 0, term;
  std::unordered_map<std::uint32_t, const Rational*> vals;
  for (const auto& t : t_) {
    term = t.coeff;
    for (const auto& f : t.mono.factors()) {
      auto it = vals.find(f.var);
      if (it == vals.end()) {
        auto a = at.find(Symbol::from_id(f.var));
        if (a == at.end())
          throw Error(ErrorCode::InvalidArgument, "no value for symbol " + Symbol::from_id(f.var).name());
        it = vals.emplace(f.var, &a->second).first;
      }
      term *= jetlie::pow(*it->second, f.exp);
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::partial_evaluate(const Assignment& at) const {
  std::vector<Term> terms;
  terms.reserve(t_.size());
  for (const auto& t : t_) {
    Rational c = t.coeff;
    std::vector<VarPower> rest;
    for (const auto& f : t.mono.factors()) {
      auto a = at.find(Symbol::from_id(f.var));
      if (a == at.end())
        rest.push_back(f);
      else
        c *= jetlie::pow(a->second, f.exp);
    }
    terms.push_back({Monomial::from_factors(std::move(rest)), std::move(c)});
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::substitute(const std::unordered_map<std::uint32_t, Polynomial>& images) const {
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> powers;
  auto power_of = [&](std::uint32_t var, std::uint32_t e) -> const Polynomial& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, images.at(var).pow(e)).first->second;
  };
  Polynomial result;
  std::vector<Term> untouched;
  for (const auto& t : t_) {
    std::vector<VarPower> rest;
    Polynomial factor(t.coeff);
    bool replaced = false;
    for (const auto& f : t.mono.factors()) {
      if (images.count(f.var)) {
        factor = factor * power_of(f.var, f.exp);
        replaced = true;
      } else {
        rest.push_back(f);
      }
    }
    if (!replaced) {
      untouched.push_back(t);
      continue;
    }
    result += factor.times_monomial(Monomial::from_factors(std::move(rest)), 1);
  }
  if (!untouched.empty()) result += from_terms(std::move(untouched));
  return result;
}

std::vector<Polynomial> Polynomial::coefficients_in(Symbol s) const {
  std::vector<std::vector<Term>> buckets(degree_in(s) + 1);
  for (const auto& t : t_) {
    auto e = t.mono.degree_in(s);
    buckets[e].push_back({t.mono.without(s), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(const std::vector<Polynomial>& coeffs, Symbol s) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial m = Monomial::of(s, static_cast<std::uint32_t>(k));
    for (const auto& t : coeffs[k].terms()) terms.push_back({t.mono * m, t.coeff});
  }
  return from_terms(std::move(terms));
}

std::size_t Polynomial::hash() const noexcept {
  std::size_t h = t_.size();
  for (const auto& t : t_) h = h * 31 + (t.mono.hash() ^ hash_value(t.coeff));
  return h;
}

std::string term_string(const Rational& c, const Monomial& m, bool leading) {
  std::string s;
  Rational a = abs(c);
  if (leading) {
    if (c < 0) s += "-";
  } else {
    s += c < 0 ? " - " : " + ";
  }
  if (m.is_one()) return s + to_string(a);
  if (a != 1) s += to_string(a) + "*";
  return s + m.to_string();
}

std::string Polynomial::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < t_.size(); ++i) s += term_string(t_[i].coeff, t_[i].mono, i == 0);
  return s;
}

}  // namespace jetlie
