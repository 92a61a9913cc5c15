#include "jetlie/polynomial_gcd.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "jetlie/errors.hpp"

namespace jetlie {

namespace {

using Dense = std::vector<Rational>;  // index = power

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_rem(Dense a, const Dense& b) {
  const std::size_t n = b.size() - 1;
  while (a.size() > n && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

void make_monic(Dense& p) {
  if (p.empty() || p.back() == 1) return;
  Rational inv = 1 / p.back();
  for (auto& c : p) c *= inv;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  make_monic(a);
  make_monic(b);
  while (!b.empty()) {
    Dense r = dense_rem(a, b);
    make_monic(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::size_t dense_gcd_degree(Dense a, Dense b) {
  Dense g = dense_gcd(std::move(a), std::move(b));
  return g.empty() ? 0 : g.size() - 1;
}

Dense to_dense(const Polynomial& p, Symbol x) {
  Dense d(p.degree_in(x) + 1, Rational(0));
  for (const auto& t : p.terms()) d[t.mono.degree_in(x)] += t.coeff;
  trim(d);
  return d;
}

Polynomial exact(const Polynomial& a, const Polynomial& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error(ErrorCode::InternalError, "expected exact division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return *q;
}

// coprime integer coefficients
Polynomial integral(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer num = 0, den = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational f(den, num);
  f.canonicalize();
  return f == 1 ? p : p.scaled(f);
}

Polynomial primitive_in(const Polynomial& p, Symbol x) {
  Polynomial c = content_in(p, x);
  if (c.is_constant()) return integral(p);
  return integral(exact(p, c));
}

Polynomial gcd_core(const Polynomial& a, const Polynomial& b);

// gcd(a, b) where b does not involve some variable of a
Polynomial gcd_with_coefficients(const Polynomial& a, Symbol x, const Polynomial& b) {
  Polynomial g = b;
  for (const auto& c : a.coefficients_in(x)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g.monic();
}

// Small deterministic integers for evaluation homomorphisms.
long eval_value(std::size_t var_index, int attempt) {
  static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  long base = primes[(var_index + static_cast<std::size_t>(attempt) * 5) % 14];
  return (var_index % 2 == 0 ? base : -base) + attempt;
}

// Least degree in x of gcd(a, b) over a few evaluation points; an upper bound for the true degree.
std::optional<std::size_t> image_degree(const Polynomial& a, const Polynomial& b, Symbol x,
                                        const std::vector<Symbol>& others) {
  const auto lca = a.coefficients_in(x).back();
  const auto lcb = b.coefficients_in(x).back();
  std::optional<std::size_t> best;
  for (int attempt = 0; attempt < 4 && best != 0u; ++attempt) {
    Assignment at;
    for (std::size_t i = 0; i < others.size(); ++i) at[others[i]] = eval_value(i, attempt);
    if (lca.evaluate(at) == 0 || lcb.evaluate(at) == 0) continue;
    auto d = dense_gcd_degree(to_dense(a.partial_evaluate(at), x), to_dense(b.partial_evaluate(at), x));
    if (!best || d < *best) best = d;
  }
  return best;
}

// lc(b)^(deg a - deg b + 1) * a mod b
Polynomial full_prem(const Polynomial& a, const Polynomial& b, Symbol x) {
  const auto n = b.degree_in(x);
  const Polynomial lcb = b.coefficients_in(x).back();
  long missing = static_cast<long>(a.degree_in(x)) - static_cast<long>(n) + 1;
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(x) >= n) {
    auto m = r.degree_in(x);
    Polynomial lcr = r.coefficients_in(x).back();
    r = r * lcb - (lcr * b).times_monomial(Monomial::of(x, m - n), 1);
    --missing;
  }
  for (; missing > 0; --missing) r = r * lcb;
  return r;
}

Integer content_z(const Polynomial& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  return g;
}

Integer max_norm(const Polynomial& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) m = std::max<Integer>(m, abs(t.coeff.get_num()));
  return m;
}

// symmetric xi-adic expansion of h as a polynomial in x
Polynomial xi_adic(Polynomial h, const Integer& xi, Symbol x) {
  std::vector<Polynomial::Term> out;
  const Integer half = xi / 2;
  const Rational inv(Integer(1), xi);
  for (std::uint32_t i = 0; !h.is_zero(); ++i) {
    std::vector<Polynomial::Term> digit;
    for (const auto& t : h.terms()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) digit.push_back({t.mono, Rational(r)});
    }
    Polynomial d = Polynomial::from_terms(digit);
    for (const auto& t : d.terms()) out.push_back({t.mono * Monomial::of(x, i), t.coeff});
    h = (h - d).scaled(inv);
  }
  return Polynomial::from_terms(std::move(out));
}

// gcd over Z of integer polynomials by evaluation at large integers; nullopt when it gives up
std::optional<Polynomial> heu(const Polynomial& f, const Polynomial& g, std::vector<Symbol> vars) {
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  Integer cf = content_z(f), cg = content_z(g), c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (vars.empty()) return Polynomial(Rational(c));
  Polynomial F = f.scaled(Rational(Integer(1), cf)), G = g.scaled(Rational(Integer(1), cg));

  Symbol x = vars.back();
  vars.pop_back();
  Integer nf = max_norm(F), ng = max_norm(G);
  Integer b = 2 * std::min(nf, ng) + 29;
  Integer xi = std::min<Integer>(b, 99 * sqrt(b));
  Integer lf = abs(F.leading_coeff().get_num()), lg = abs(G.leading_coeff().get_num());
  xi = std::max<Integer>(xi, 2 * std::min<Integer>(nf / lf, ng / lg) + 2);

  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) > 4096) break;
    Assignment at{{x, Rational(xi)}};
    Polynomial ff = F.partial_evaluate(at), gg = G.partial_evaluate(at);
    if (auto h = heu(ff, gg, vars)) {
      Polynomial H = xi_adic(*h, xi, x);
      if (!H.is_zero()) {
        H = H.scaled(Rational(Integer(1), content_z(H)));
        if (F.divide_exact(H) && G.divide_exact(H)) return H.scaled(Rational(c));
      }
    }
    xi = xi * 73794 * sqrt(sqrt(xi)) / 27011;
  }
  return std::nullopt;
}

// heuristic gcd, accepted only when its degree in every variable meets the evaluation bound
std::optional<Polynomial> heuristic_gcd(const Polynomial& a, const Polynomial& b, const std::vector<Symbol>& vars) {
  auto h = heu(integral(a), integral(b), vars);
  if (!h) return std::nullopt;
  for (auto v : vars) {
    std::vector<Symbol> others;
    for (auto w : vars)
      if (w != v) others.push_back(w);
    auto bound = image_degree(a, b, v, others);
    if (!bound || h->degree_in(v) != *bound) return std::nullopt;
  }
  return h->monic();
}

Polynomial gcd_core(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.size() >= b.size()) {
    if (a.divide_exact(b)) return b.monic();
  } else if (b.divide_exact(a)) {
    return a.monic();
  }
  auto va = a.variables();
  auto vb = b.variables();
  for (auto v : va)
    if (!std::binary_search(vb.begin(), vb.end(), v)) return gcd_with_coefficients(a, v, b);
  for (auto v : vb)
    if (!std::binary_search(va.begin(), va.end(), v)) return gcd_with_coefficients(b, v, a);

  Symbol x = va.front();
  std::uint32_t best = ~0u;
  for (auto v : va) {
    auto d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      x = v;
    }
  }
  std::vector<Symbol> others;
  for (auto v : va)
    if (v != x) others.push_back(v);

  if (!others.empty())
    if (auto h = heuristic_gcd(a, b, va)) return *h;

  if (others.empty()) {
    Dense da = dense_gcd(to_dense(a, x), to_dense(b, x));
    std::vector<Polynomial> coeffs;
    for (auto& c : da) coeffs.emplace_back(c);
    return Polynomial::from_coefficients(coeffs, x).monic();
  }

  Polynomial ca = content_in(a, x);
  Polynomial cb = content_in(b, x);
  Polynomial c = gcd(ca, cb);
  Polynomial pa = integral(ca.is_constant() ? a : exact(a, ca));
  Polynomial pb = integral(cb.is_constant() ? b : exact(b, cb));

  auto bound = image_degree(pa, pb, x, others);
  if (bound && *bound == 0) return c.monic();

  if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);
  const Polynomial a0 = pa, b0 = pb;
  auto try_candidate = [&](const Polynomial& q) -> std::optional<Polynomial> {
    Polynomial g = primitive_in(q, x);
    if (a0.divide_exact(g) && b0.divide_exact(g)) return g;
    return std::nullopt;
  };
  // subresultant remainder sequence
  Polynomial g(1), h(1);
  while (true) {
    if (bound && pb.degree_in(x) == *bound)
      if (auto cand = try_candidate(pb)) return (c * *cand).monic();
    const auto delta = pa.degree_in(x) - pb.degree_in(x);
    Polynomial r = full_prem(pa, pb, x);
    if (r.is_zero()) break;
    if (r.degree_in(x) == 0) return c.monic();
    pa = std::move(pb);
    pb = exact(r, g * h.pow(delta));
    g = pa.coefficients_in(x).back();
    h = delta == 0 ? h : exact(g.pow(delta), h.pow(delta - 1));
  }
  return (c * primitive_in(pb, x)).monic();
}

}  // namespace

Polynomial content_in(const Polynomial& p, Symbol s) {
  if (p.is_zero()) return {};
  if (!p.contains(s)) return p.monic();
  auto coeffs = p.coefficients_in(s);
  std::stable_sort(coeffs.begin(), coeffs.end(),
                   [](const Polynomial& u, const Polynomial& v) { return u.size() < v.size(); });
  Polynomial g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Symbol s) {
  const auto n = b.degree_in(s);
  auto bc = b.coefficients_in(s);
  const Polynomial& lcb = bc.back();
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(s) >= n) {
    auto m = r.degree_in(s);
    Polynomial lcr = r.coefficients_in(s).back();
    r = r * lcb - (lcr * b).times_monomial(Monomial::of(s, m - n), 1);
  }
  return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  Monomial mg = ma.gcd(mb);
  Polynomial ra = ma.is_one() ? a : *a.divide_exact(Polynomial::monomial(ma, 1));
  Polynomial rb = mb.is_one() ? b : *b.divide_exact(Polynomial::monomial(mb, 1));
  return gcd_core(ra, rb).times_monomial(mg, 1).monic();
}

std::pair<Rational, std::vector<SquareFreeFactor>> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "square-free decomposition of zero");
  Rational lc = p.leading_coeff();
  std::map<unsigned, Polynomial> parts;
  auto add = [&](const Polynomial& f, unsigned m) {
    if (f.is_constant()) return;
    auto it = parts.find(m);
    if (it == parts.end())
      parts.emplace(m, f.monic());
    else
      it->second = (it->second * f).monic();
  };
  Polynomial rest = p.monic();
  // monomial content first
  Monomial mc = rest.monomial_content();
  for (const auto& f : mc.factors()) add(Polynomial::variable(Symbol::from_id(f.var)), f.exp);
  if (!mc.is_one()) rest = *rest.divide_exact(Polynomial::monomial(mc, 1));

  while (!rest.is_constant()) {
    Symbol x = rest.variables().front();
    Polynomial c = content_in(rest, x);
    Polynomial f = c.is_constant() ? rest : exact(rest, c);
    // Yun
    Polynomial fp = f.derivative(x);
    Polynomial a0 = gcd(f, fp);
    Polynomial b = exact(f, a0);
    Polynomial cc = exact(fp, a0);
    Polynomial d = cc - b.derivative(x);
    unsigned i = 1;
    while (!b.is_constant()) {
      Polynomial ai = gcd(b, d);
      b = exact(b, ai);
      cc = exact(d, ai);
      d = cc - b.derivative(x);
      add(ai, i);
      ++i;
    }
    rest = c;
  }
  std::vector<SquareFreeFactor> out;
  for (auto& [m, f] : parts) out.push_back({f, m});
  return {lc, out};
}

}  // namespace jetlie
