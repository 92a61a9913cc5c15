#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "jetlie/expr.hpp"

namespace jetlie {

constexpr std::uint64_t kDefaultSeed = 20100901;

// JETLIE_SEED from the environment when set and numeric, else kDefaultSeed.
std::uint64_t default_seed();

// Seeded rational sampler: numerator in [-50, 50], denominator in [1, 50].
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed);
  Rational next();
  Assignment sample(const std::vector<Symbol>& symbols);
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

// Exact value; SingularPoint when a denominator vanishes, IrrationalValue
// when a radical does not evaluate to a rational.
Rational eval_exact(const Expr& e, const Assignment& at);

// Values of the radical-free coefficient of each radical monomial.
using NumericParts = std::map<RadicalMonomial, Rational>;
NumericParts eval_parts(const Expr& e, const Assignment& at);
NumericParts multiply_parts(const NumericParts& a, const NumericParts& b, const Assignment& at);
void add_parts(NumericParts& acc, const NumericParts& b);
bool parts_zero(const NumericParts& p);

}  // namespace jetlie
