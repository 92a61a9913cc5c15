#include <random>

#include "doctest.h"
#include "jetlie/errors.hpp"
#include "jetlie/evaluate.hpp"
#include "jetlie/expr.hpp"
#include "jetlie/polynomial_gcd.hpp"

using namespace jetlie;

namespace {

Expr sym(const char* n) { return Expr(Symbol::intern(n)); }
Polynomial psym(const char* n) { return Polynomial::variable(Symbol::intern(n)); }
Rational q(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_CASE("polynomial storage is canonical") {
  auto x = psym("x"), y = psym("y");
  Polynomial a = (x + y) * (x - y);
  Polynomial b = x * x - y * y;
  CHECK(a == b);
  CHECK((a - b).is_zero());
  CHECK(a.to_string() == "x^2 - y^2");
  CHECK(Polynomial(0).is_zero());
  CHECK((x * y - y * x).is_zero());
}

TEST_CASE("grlex order ranks earlier symbols first") {
  auto x = psym("x"), y = psym("y");
  Polynomial p = y * y + x * y + x * x * x + x + 1;
  CHECK(p.to_string() == "x^3 + x*y + y^2 + x + 1");
}

TEST_CASE("exact division and gcd") {
  auto x = psym("x"), y = psym("y"), z = psym("z");
  Polynomial f = (x + y) * (x + y) * (z - 1);
  Polynomial g = (x + y) * (x - 2 * z);
  CHECK(gcd(f, g) == x + y);
  CHECK(gcd(f, Polynomial(0)) == f.monic());
  CHECK(gcd(x * y, x * z) == x);
  CHECK(gcd(x * x + y * y, x) == Polynomial(1));
  CHECK(f.divide_exact(x + y).has_value());
  CHECK_FALSE(f.divide_exact(x - y).has_value());
  Polynomial h = (2 * x * y + z) * (x * x * z - y + 3) * (y * z - x);
  Polynomial k = (2 * x * y + z) * (y * z - x) * (x + z * z);
  CHECK(gcd(h, k) == ((2 * x * y + z) * (y * z - x)).monic());
}

TEST_CASE("gcd of larger multivariate products") {
  auto x = psym("x"), y = psym("y"), z = psym("z");
  Polynomial common = (2 * x * y + z) * (y * z - x);
  Polynomial a = common * (x * x * z - y + 3);
  Polynomial b = common * (x + z * z);
  for (int i = 1; i < 5; ++i) {
    a = a * (x + y + i);
    b = b * (y - z * i);
  }
  CHECK(gcd(a, b) == common.monic());
  CHECK(gcd(a.scaled(q(3, 7)), b.scaled(q(-5, 2))) == common.monic());

  Polynomial shared = (x - y) * (x - y) * (z + q(1, 3));
  Polynomial u = shared * (x * y * z + 1) * (x - 4);
  Polynomial v = shared * (x + y) * (z - 5) * 6;
  CHECK(gcd(u, v) == shared.monic());
  CHECK(gcd(u * (x + y), v) == (shared * (x + y)).monic());
  CHECK(gcd(u + 1, v) == Polynomial(1));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-4, 4);
  auto random_poly = [&] {
    Polynomial p;
    for (int i = 0; i < 5; ++i) p += Polynomial(c(rng)) * x.pow(rng() % 3) * y.pow(rng() % 3) * z.pow(rng() % 2);
    return p + 1;
  };
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial g = random_poly(), f1 = random_poly(), f2 = random_poly();
    Polynomial d = gcd(g * f1, g * f2);
    CHECK((g * f1).divide_exact(d).has_value());
    CHECK((g * f2).divide_exact(d).has_value());
    CHECK(d.divide_exact(g.monic()).has_value());
    CHECK(d == gcd(f1, f2) * g.monic());
  }
}

TEST_CASE("square-free decomposition") {
  auto x = psym("x"), y = psym("y"), p = psym("p"), t = psym("t");
  Polynomial s = Polynomial(1) - p * t;
  Polynomial f = s.pow(4) * (x * x + y * y);
  auto [lc, parts] = squarefree_decomposition(f);
  CHECK(lc == 1);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].multiplicity == 1);
  CHECK(parts[0].factor == x * x + y * y);
  CHECK(parts[1].multiplicity == 4);
  CHECK(parts[1].factor == p * t - 1);
  Polynomial m = x * x * x * y;
  auto [lc2, parts2] = squarefree_decomposition(m.scaled(q(-3)));
  CHECK(lc2 == -3);
  CHECK(parts2.size() == 2);
}

TEST_CASE("rational functions are reduced with monic denominators") {
  auto x = psym("x"), y = psym("y");
  RationalFunction r((x * x - y * y).scaled(q(2)), (x + y).scaled(q(4)));
  CHECK(r.num() == (x - y).scaled(q(1, 2)));
  CHECK(r.den() == Polynomial(1));
  RationalFunction a(Polynomial(1), x), b(Polynomial(1), y);
  RationalFunction s = a + b;
  CHECK(s.num() == x + y);
  CHECK(s.den() == x * y);
  CHECK((s - a - b).is_zero());
  CHECK_THROWS_AS(RationalFunction(x, Polynomial(0)), Error);
}

TEST_CASE("normalize examples") {
  Symbol u1 = Symbol::intern("u1_x"), u2 = Symbol::intern("u1_y");
  Expr uu = Expr(u1) * Expr(u1) + Expr(u2) * Expr(u2);
  Expr e = pow(uu, q(-5, 2)) * uu;
  REQUIRE(e.terms().size() == 1);
  Expr expected = pow(uu, q(-3, 2));
  CHECK(e == expected);
  const auto& [m, c] = e.terms()[0];
  REQUIRE(m.factors().size() == 1);
  CHECK(m.factors()[0].exponent == q(1, 2));
  CHECK(c.den() == uu.as_rational_function().num().pow(2));

  Symbol p = Symbol::intern("p"), t = Symbol::intern("t");
  Expr s = Expr(1) - Expr(p) * Expr(t);
  AssumptionRegistry reg{s.as_rational_function().num(), uu.as_rational_function().num()};
  Expr r = pow(s.pow(4) * uu, q(1, 2), reg);
  CHECK(r == s.pow(2) * pow(uu, q(1, 2), reg));
  Expr r2 = pow(s.pow(4) * uu, q(1, 2));
  CHECK(r2 == r);

  Expr zero = (Expr(t) * Expr(t) - Expr(t) * Expr(t)) / Expr(u1);
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(Expr(1) / (Expr(t) - Expr(t)), Error);
}

TEST_CASE("differentiate examples") {
  Symbol p = Symbol::intern("p"), t = Symbol::intern("t");
  Expr s = Expr(1) - Expr(p) * Expr(t);
  CHECK(differentiate(s.pow(2), t) == Expr(-2) * Expr(p) * s);
  Symbol u1 = Symbol::intern("u1_x"), u2 = Symbol::intern("u1_y");
  Expr uu = Expr(u1).pow(2) + Expr(u2).pow(2);
  CHECK(differentiate(pow(uu, q(-5, 2)), u1) == Expr(-5) * Expr(u1) * pow(uu, q(-7, 2)));
  Symbol ut = Symbol::intern("u_t"), ux = Symbol::intern("u_x");
  CHECK(differentiate(Expr(ut) * Expr(ux), ut) == Expr(ux));
}

TEST_CASE("substitute examples") {
  Symbol u1 = Symbol::intern("u1_x"), u2 = Symbol::intern("u1_y");
  Symbol p = Symbol::intern("p"), t = Symbol::intern("t");
  Expr s = Expr(1) - Expr(p) * Expr(t);
  CHECK(substitute(Expr(u1), {{u1, Expr(u1) * s.pow(2)}}) == Expr(u1) * s.pow(2));
  Expr e = Expr(u1) / (Expr(u2) + 3);
  CHECK(substitute(e, {}) == e);
  Expr root = pow(Expr(u1).pow(2) + Expr(u2).pow(2), q(1, 2));
  CHECK_THROWS_AS(substitute(root, {{u2, Expr(0)}}), Error);
  AssumptionRegistry reg{Polynomial::variable(u1)};
  CHECK(substitute(root, {{u2, Expr(0)}}, reg) == Expr(u1));
  Expr img = Expr(t) / s;
  Expr sub = substitute(Expr(t) * Expr(t) + Expr(p), {{t, img}});
  CHECK(sub == img * img + Expr(p));
}

TEST_CASE("is_zero examples") {
  auto S = [](const char* n) { return Expr(Symbol::intern(n)); };
  Expr ux = S("u_x"), uy = S("u_y"), uxx = S("u_xx"), uxy = S("u_xy"), uyy = S("u_yy");
  Expr ut = S("u_t"), utt = S("u_tt"), utx = S("u_tx"), uty = S("u_ty");
  Expr uu = ux * ux + uy * uy;
  Expr Z1 = (uxx + uyy) / uu;
  Expr Z2 = (ux * ux * uxx + Expr(2) * ux * uy * uxy + uy * uy * uyy) / uu.pow(2);
  Expr WIII = det({{Expr(0), ux, uy}, {ux, uxx, uxy}, {uy, uxy, uyy}});
  CHECK(WIII == Expr(2) * ux * uy * uxy - ux * ux * uyy - uy * uy * uxx);
  CHECK(is_zero(Z1 - Z2 + WIII / uu.pow(2)));
  Expr WII = det({{utt, utx, uty}, {utx, uxx, uxy}, {uty, uxy, uyy}});
  CHECK_FALSE(is_zero(WII));
  CHECK(is_zero(S("u1") * S("u2") - S("u2") * S("u1")));
}

TEST_CASE("collect examples") {
  Symbol a1 = Symbol::intern("alpha1"), a2 = Symbol::intern("alpha2"), t = Symbol::intern("t");
  Symbol u1 = Symbol::intern("u1"), u2 = Symbol::intern("u2");
  Expr e = Expr(a1) * Expr(t) * Expr(u1) + Expr(a2) * Expr(u2);
  auto parts = collect(e, {a1, a2, t});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == Monomial::of(a1) * Monomial::of(t));
  CHECK(parts[0].second == Expr(u1));
  CHECK(parts[1].first == Monomial::of(a2));
  CHECK(parts[1].second == Expr(u2));
  CHECK(collect(Expr(0), {Symbol::intern("p")}).empty());
  CHECK_THROWS_AS(collect(Expr(1) / Expr(t), {t}), Error);
}

TEST_CASE("eval_exact examples") {
  Symbol ux = Symbol::intern("u_x"), uy = Symbol::intern("u_y"), uxx = Symbol::intern("u_xx"),
         uyy = Symbol::intern("u_yy"), ut = Symbol::intern("u_t");
  Expr uu = Expr(ux).pow(2) + Expr(uy).pow(2);
  Expr Z1 = (Expr(uxx) + Expr(uyy)) / uu;
  CHECK(eval_exact(Z1, {{ux, 1}, {uy, 0}, {uxx, 2}, {uyy, 3}}) == 5);
  CHECK(eval_exact(Expr(ut), {{ut, q(7, 3)}}) == q(7, 3));
  CHECK(eval_exact(pow(uu, q(1, 2)), {{ux, 3}, {uy, 4}}) == 5);
  CHECK_THROWS_AS(eval_exact(pow(uu, q(1, 2)), {{ux, 1}, {uy, 1}}), Error);
  CHECK_THROWS_AS(eval_exact(Z1, {{ux, 0}, {uy, 0}, {uxx, 2}, {uyy, 3}}), Error);
}

TEST_CASE("side relation reduction") {
  Symbol c = Symbol::intern("c"), s = Symbol::intern("s");
  SideRelation rel{s, Polynomial(1) - Polynomial::variable(c).pow(2)};
  Expr e = Expr(c) * Expr(c) + Expr(s) * Expr(s);
  CHECK(reduce(e, rel) == Expr(1));
  Expr f = Expr(s).pow(3) / (Expr(c).pow(2) + Expr(s).pow(2));
  CHECK(reduce(f, rel) == Expr(s) - Expr(s) * Expr(c) * Expr(c));
}

namespace {

struct Gen {
  std::mt19937 rng;
  std::vector<Symbol> vars;
  AssumptionRegistry reg;
  Expr root;
  explicit Gen(unsigned seed) : rng(seed) {
    for (const char* n : {"a", "b", "c"}) vars.push_back(Symbol::intern(n));
    Polynomial base = Polynomial::variable(vars[0]).pow(2) + Polynomial::variable(vars[1]).pow(2) + 1;
    reg.add_positive(base);
    root = pow(Expr(base), q(1, 2), reg);
  }
  Expr leaf() {
    int k = static_cast<int>(rng() % 5);
    if (k < 3) return Expr(vars[k]);
    if (k == 3) return Expr(q(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
    return root;
  }
  Expr tree(int depth) {
    if (depth == 0) return leaf();
    Expr a = tree(depth - 1), b = tree(depth - 1);
    switch (rng() % 4) {
      case 0: return a + b;
      case 1: return a - b;
      case 2: return a * b;
      default: return (b.is_zero() || b.terms().size() != 1) ? a * b : a / b;
    }
  }
};

}  // namespace

TEST_CASE("ring axioms, derivation and evaluation on random trees") {
  Gen g(7);
  PointSampler sampler(kDefaultSeed);
  for (int i = 0; i < 60; ++i) {
    Expr a = g.tree(2), b = g.tree(2), c = g.tree(2);
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(Expr::from_terms(a.terms()) == a);
    Symbol x = g.vars[i % 3];
    CHECK(differentiate(a * b, x) == differentiate(a, x) * b + a * differentiate(b, x));
    CHECK(differentiate(a + b, x) == differentiate(a, x) + differentiate(b, x));

    Substitution sigma{{g.vars[2], Expr(g.vars[0]) + Expr(q(1, 2))}};
    Expr sub = substitute(a - b, sigma, g.reg);
    for (int k = 0; k < 3; ++k) {
      Assignment pt{{g.vars[0], q(3)}, {g.vars[1], q(4)}, {g.vars[2], sampler.next()}};
      Assignment moved = pt;
      moved[g.vars[2]] = pt[g.vars[0]] + q(1, 2);
      try {
        auto lhs = eval_parts(sub, pt);
        auto rhs = eval_parts(a - b, moved);
        CHECK(lhs == rhs);
        CHECK(parts_zero(lhs) == (sub.is_zero()));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularPoint);
      }
    }
  }
}

TEST_CASE("sampler is deterministic") {
  PointSampler a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  PointSampler c(kDefaultSeed);
  Rational v = c.next();
  CHECK(abs(v.get_num()) <= 50);
  CHECK(v.get_den() <= 50);
}
