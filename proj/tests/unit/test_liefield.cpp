#include "doctest.h"
#include "jetlie/errors.hpp"
#include "jetlie/liefield.hpp"

using namespace jetlie;

namespace {

struct Cga {
  JetSpace sp = JetSpace::build({"t", "x", "y"}, {"u"}, 2, "lf_cga");
  Expr t{sp.independent("t")}, x{sp.independent("x")}, y{sp.independent("y")};
  Symbol st = sp.independent("t"), sx = sp.independent("x"), sy = sp.independent("y");

  std::vector<VectorField> fields() const {
    std::vector<VectorField> f;
    f.emplace_back(sp, "Xm1", std::map<Symbol, Expr>{{st, Expr(-1)}});
    f.emplace_back(sp, "X0", std::map<Symbol, Expr>{{st, -t}, {sx, -x}, {sy, -y}});
    f.emplace_back(sp, "X1", std::map<Symbol, Expr>{{st, -t * t}, {sx, Expr(-2) * t * x}, {sy, Expr(-2) * t * y}});
    f.emplace_back(sp, "Y1m1", std::map<Symbol, Expr>{{sx, Expr(-1)}});
    f.emplace_back(sp, "Y10", std::map<Symbol, Expr>{{sx, -t}});
    f.emplace_back(sp, "Y11", std::map<Symbol, Expr>{{sx, -t * t}});
    f.emplace_back(sp, "Y2m1", std::map<Symbol, Expr>{{sy, Expr(-1)}});
    f.emplace_back(sp, "Y20", std::map<Symbol, Expr>{{sy, -t}});
    f.emplace_back(sp, "Y21", std::map<Symbol, Expr>{{sy, -t * t}});
    return f;
  }

  CommutatorTable table() const {
    CommutatorTable tb;
    const char* X[] = {"Xm1", "X0", "X1"};
    for (int n = -1; n <= 1; ++n)
      for (int m = n + 1; m <= 1; ++m)
        if (n + m >= -1 && n + m <= 1) tb.set(X[n + 1], X[m + 1], {{Expr(n - m), X[n + m + 1]}});
    const char* Y[2][3] = {{"Y1m1", "Y10", "Y11"}, {"Y2m1", "Y20", "Y21"}};
    for (int a = 0; a < 2; ++a)
      for (int n = -1; n <= 1; ++n)
        for (int m = -1; m <= 1; ++m)
          if (n + m >= -1 && n + m <= 1 && n != m) tb.set(X[n + 1], Y[a][m + 1], {{Expr(n - m), Y[a][n + m + 1]}});
    return tb;
  }
};

}  // namespace

TEST_CASE("apply and prolong examples") {
  Cga c;
  auto f = c.fields();
  Expr ut(*c.sp.parse_jet("u_t")), ux(*c.sp.parse_jet("u_x"));
  CHECK(apply(f[0], c.t * ux) == -ux);
  auto p0 = prolong(f[1], 2);
  CHECK(p0.coefficient(*c.sp.parse_jet("u_t")) == ut);
  CHECK(apply(p0, ut) == ut);
  CHECK(p0.coefficient(*c.sp.parse_jet("u_tt")) == Expr(2) * Expr(*c.sp.parse_jet("u_tt")));
  auto pt = prolong(f[0], 2);
  for (auto s : c.sp.jet_coordinates(2)) CHECK(pt.coefficient(s).is_zero());
  auto p1 = prolong(f[0], 1);
  CHECK_THROWS_AS(apply(p1, Expr(*c.sp.parse_jet("u_tt"))), Error);
  VectorField m(c.sp, "M", {}, Expr(Symbol::intern("lf_lambda")));
  CHECK_THROWS_AS(prolong(m, 1), Error);
  CHECK_THROWS_AS(prolong(f[0], 3), Error);
}

TEST_CASE("bracket examples") {
  Cga c;
  auto f = c.fields();
  auto b = lie_bracket(f[2], f[0]);
  CHECK(b.coefficient(c.st) == Expr(-2) * c.t);
  CHECK(b.coefficient(c.sx) == Expr(-2) * c.x);
  CHECK(b == f[1].scaled(Expr(2)));
  CHECK(lie_bracket(f[4], f[4]).is_zero());
  auto other = JetSpace::build({"t"}, {"u"}, 1, "lf_other");
  VectorField g(other, "g", std::map<Symbol, Expr>{{other.independent("t"), Expr(1)}});
  CHECK_THROWS_AS(lie_bracket(f[0], g), Error);
}

TEST_CASE("multiplier participates in brackets") {
  Cga c;
  Expr lam(Symbol::intern("lf_lambda"));
  VectorField a(c.sp, "A", std::map<Symbol, Expr>{{c.st, -c.t * c.t}}, Expr(-2) * lam * c.t);
  VectorField b(c.sp, "B", std::map<Symbol, Expr>{{c.st, Expr(-1)}});
  auto r = lie_bracket(a, b);
  REQUIRE(r.multiplier().has_value());
  CHECK(*r.multiplier() == Expr(-2) * lam);
}

TEST_CASE("commutator table verification") {
  Cga c;
  auto f = c.fields();
  auto rep = verify_table(f, c.table());
  CHECK(rep.all_pass());
  CHECK(rep.pairs.size() == 36);

  auto bad = f;
  bad[4] = bad[4].scaled(Expr(-1));
  auto rep2 = verify_table(bad, c.table());
  for (const auto& p : rep2.pairs) {
    bool touches = p.a == "Y10" || p.b == "Y10" || !c.table().get(p.a, p.b).empty();
    if (!p.pass) CHECK(touches);
  }
  CHECK(rep2.failures() > 0);

  CommutatorTable unknown;
  unknown.set("Xm1", "Nope", {});
  CHECK_THROWS_AS(verify_table(f, unknown), Error);
}

TEST_CASE("table antisymmetry") {
  Cga c;
  auto tb = c.table();
  CHECK(to_string(tb.get("X1", "Xm1")) == "2*X0");
  CHECK(to_string(tb.get("Xm1", "X1")) == "-2*X0");
  CHECK(tb.get("Y10", "Y20").empty());
}

TEST_CASE("jacobi and prolongation homomorphism") {
  Cga c;
  auto f = c.fields();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      for (std::size_t k = j + 1; k < f.size(); ++k) CHECK(jacobiator(f[i], f[j], f[k]).is_zero());
  for (unsigned order : {1u, 2u})
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        auto lhs = prolong(lie_bracket(f[i], f[j]), order).coefficients();
        auto rhs = lie_bracket(prolong(f[i], order), prolong(f[j], order));
        CHECK(lhs.size() == rhs.size());
        for (const auto& [s, e] : lhs) CHECK((e - rhs[s]).is_zero());
      }
}

TEST_CASE("apply is a derivation and prolong is linear") {
  Cga c;
  auto f = c.fields();
  Expr u(c.sp.dependent("u")), ux(*c.sp.parse_jet("u_x")), uxy(*c.sp.parse_jet("u_xy"));
  Expr e = c.t * ux + u * u, g = uxy / (c.x + Expr(1));
  auto p = prolong(f[2], 2);
  CHECK(apply(p, e * g) == apply(p, e) * g + e * apply(p, g));
  auto sum = f[2].scaled(Expr(3)) + f[5].scaled(Expr(-2));
  auto ps = prolong(sum, 2), pa = prolong(f[2], 2), pb = prolong(f[5], 2);
  for (auto s : c.sp.coordinates(2))
    CHECK(ps.coefficient(s) == Expr(3) * pa.coefficient(s) + Expr(-2) * pb.coefficient(s));
}

TEST_CASE("field printing") {
  Cga c;
  auto f = c.fields();
  CHECK(f[2].to_string() == "-t^2*@t - 2*t*x*@x - 2*t*y*@y");
  CHECK(f[0].to_string() == "-@t");
  CHECK(VectorField(c.sp, "z", {}).to_string() == "0");
}
