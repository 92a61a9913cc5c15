#pragma once

#include <utility>
#include <vector>

#include "jetlie/polynomial.hpp"

namespace jetlie {

// Monic gcd over Q (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Monic gcd of the coefficients of p with respect to s.
Polynomial content_in(const Polynomial& p, Symbol s);

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Symbol s);

// p = c * prod f_i^{m_i} with monic square-free, pairwise coprime f_i.
struct SquareFreeFactor {
  Polynomial factor;
  unsigned multiplicity;
};
std::pair<Rational, std::vector<SquareFreeFactor>> squarefree_decomposition(const Polynomial& p);

}  // namespace jetlie
