#include "jetlie/evaluate.hpp"

#include <cstdlib>
#include <string>

#include "jetlie/errors.hpp"

namespace jetlie {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("JETLIE_SEED")) {
    try {
      std::size_t pos = 0;
      std::string s(env);
      auto v = std::stoull(s, &pos);
      if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

PointSampler::PointSampler(std::uint64_t seed) : seed_(seed), gen_(seed) {}

Rational PointSampler::next() {
  long num = static_cast<long>(gen_() % 101) - 50;
  long den = static_cast<long>(gen_() % 50) + 1;
  return make_rational(num, den);
}

Assignment PointSampler::sample(const std::vector<Symbol>& symbols) {
  Assignment a;
  for (auto s : symbols) a[s] = next();
  return a;
}

namespace {

Rational radical_value(const RadicalFactor& f, const Assignment& at) {
  Rational v = f.base.evaluate(at);
  unsigned long d = f.exponent.get_den().get_ui();
  long n = f.exponent.get_num().get_si();
  if (v == 0) {
    if (n > 0) return 0;
    throw Error(ErrorCode::SingularPoint, "radical base " + f.base.to_string() + " vanishes");
  }
  auto r = exact_root(v, d);
  if (!r) throw Error(ErrorCode::IrrationalValue, "radical base " + f.base.to_string() + " = " + to_string(v));
  return pow(*r, n);
}

}  // namespace

Rational eval_exact(const Expr& e, const Assignment& at) {
  Rational sum = 0;
  for (const auto& [m, c] : e.terms()) {
    Rational v = c.evaluate(at);
    for (const auto& f : m.factors()) v *= radical_value(f, at);
    sum += v;
  }
  return sum;
}

NumericParts eval_parts(const Expr& e, const Assignment& at) {
  NumericParts out;
  for (const auto& [m, c] : e.terms()) {
    Rational v = c.evaluate(at);
    if (v != 0) out.emplace(m, v);
  }
  return out;
}

NumericParts multiply_parts(const NumericParts& a, const NumericParts& b, const Assignment& at) {
  NumericParts out;
  for (const auto& [ma, va] : a)
    for (const auto& [mb, vb] : b) {
      auto [extra, m] = ma.times(mb);
      Rational v = va * vb * extra.evaluate(at);
      auto [it, inserted] = out.emplace(m, v);
      if (!inserted) it->second += v;
    }
  return out;
}

void add_parts(NumericParts& acc, const NumericParts& b) {
  for (const auto& [m, v] : b) {
    auto [it, inserted] = acc.emplace(m, v);
    if (!inserted) it->second += v;
  }
}

bool parts_zero(const NumericParts& p) {
  for (const auto& [m, v] : p)
    if (v != 0) return false;
  return true;
}

}  // namespace jetlie
