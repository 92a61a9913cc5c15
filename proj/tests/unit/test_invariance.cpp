#include "doctest.h"
#include "jetlie/errors.hpp"
#include "jetlie/invariance.hpp"

using namespace jetlie;

namespace {

struct Scalar {
  JetSpace sp = JetSpace::build({"t", "x", "y"}, {"u"}, 2, "inv_scalar");
  Symbol st = sp.independent("t"), sx = sp.independent("x"), sy = sp.independent("y");
  Expr t{st}, x{sx}, y{sy}, u{sp.dependent("u")};
  Expr j(const char* n) const { return Expr(*sp.parse_jet(n)); }
  Expr uu() const { return j("u_x") * j("u_x") + j("u_y") * j("u_y"); }

  std::vector<VectorField> gal0() const {
    return {VectorField(sp, "Xm1", {{st, Expr(-1)}}),
            VectorField(sp, "R", {{sx, y}, {sy, -x}}),
            VectorField(sp, "Y1m1", {{sx, Expr(-1)}}),
            VectorField(sp, "Y10", {{sx, -t}}),
            VectorField(sp, "Y2m1", {{sy, Expr(-1)}}),
            VectorField(sp, "Y20", {{sy, -t}})};
  }
  VectorField x1() const { return VectorField(sp, "X1", {{st, -t * t}, {sx, Expr(-2) * t * x}, {sy, Expr(-2) * t * y}}); }
  VectorField y11() const { return VectorField(sp, "Y11", {{sx, -t * t}}); }
  Expr wi() const {
    return det({{j("u_t"), j("u_x"), j("u_y")}, {j("u_tx"), j("u_xx"), j("u_xy")}, {j("u_ty"), j("u_xy"), j("u_yy")}});
  }
  Expr wii() const {
    return det({{j("u_tt"), j("u_tx"), j("u_ty")}, {j("u_tx"), j("u_xx"), j("u_xy")}, {j("u_ty"), j("u_xy"), j("u_yy")}});
  }
  Expr wiii() const {
    return det({{Expr(0), j("u_x"), j("u_y")}, {j("u_x"), j("u_xx"), j("u_xy")}, {j("u_y"), j("u_xy"), j("u_yy")}});
  }
};

}  // namespace

TEST_CASE("strict invariance verdicts") {
  Scalar c;
  auto rep = strict_invariance(c.gal0(), {{"WI", c.wi()}});
  CHECK(rep.all_invariant());
  CHECK(rep.entries.size() == 6);
  auto neg = strict_invariance({c.y11()}, {{"WII", c.wii()}});
  REQUIRE(neg.failures() == 1);
  const auto& e = neg.entries[0];
  CHECK_FALSE(e.residual.is_zero());
  REQUIRE(e.witness.has_value());
  CHECK(e.witness_value != 0);
  CHECK(eval_exact(e.residual, *e.witness) == e.witness_value);
}

TEST_CASE("conditional invariance") {
  Scalar c;
  Symbol ut = *c.sp.parse_jet("u_t"), uxx = *c.sp.parse_jet("u_xx");
  PdeSystem sys("WI=0", c.sp, {{"WI", c.wi()}}, {{ut, solve_linear(c.wi(), ut)}});
  auto plain = manifold_invariance({c.x1()}, sys);
  CHECK_FALSE(plain.all_invariant());
  auto cond = conditional_invariance({c.x1()}, sys, {{"WIII", c.wiii()}}, {{uxx, solve_linear(c.wiii(), uxx)}});
  CHECK(cond.all_invariant());
  CHECK(cond.entries.size() == 2);
  auto same = conditional_invariance({c.x1()}, sys, {}, {});
  CHECK(same.failures() == plain.failures());
  CHECK(same.entries[0].residual == plain.entries[0].residual);
}

TEST_CASE("remark two locus") {
  Scalar c;
  Symbol uxx = *c.sp.parse_jet("u_xx");
  Expr z1 = (c.j("u_xx") + c.j("u_yy")) / c.uu();
  Expr z2 = (c.j("u_x").pow(2) * c.j("u_xx") + Expr(2) * c.j("u_x") * c.j("u_y") * c.j("u_xy") +
             c.j("u_y").pow(2) * c.j("u_yy")) /
            c.uu().pow(2);
  PdeSystem cond("WIII=0", c.sp, {{"WIII", c.wiii()}}, {{uxx, solve_linear(c.wiii(), uxx)}});
  CHECK(cond.on_manifold(z1 - z2).is_zero());
}

TEST_CASE("solved form validation") {
  Scalar c;
  Symbol ut = *c.sp.parse_jet("u_t"), ux = *c.sp.parse_jet("u_x");
  Expr heat = c.j("u_t") - c.j("u_xx");
  CHECK_NOTHROW(PdeSystem("heat", c.sp, {{"heat", heat}}, {{ut, c.j("u_xx")}}));
  CHECK_THROWS_AS(PdeSystem("bad", c.sp, {{"heat", heat}}, {{ut, c.j("u_yy")}}), Error);
  CHECK_THROWS_AS(PdeSystem("cyc", c.sp, {{"a", c.j("u_t") - c.j("u_x")}}, {{ut, c.j("u_x")}, {ux, c.j("u_t")}}), Error);
  PdeSystem chain("chain", c.sp, {{"a", c.j("u_t") - c.j("u_x")}, {"b", c.j("u_x") - c.j("u_yy")}},
                  {{ut, c.j("u_x")}, {ux, c.j("u_yy")}});
  CHECK(chain.solved_form().at(ut) == c.j("u_yy"));
  CHECK_THROWS_AS(solve_linear(c.j("u_t") * c.j("u_t"), ut), Error);
}

TEST_CASE("orbit and functional ranks") {
  Scalar c;
  auto r = orbit_rank(c.gal0(), c.sp, 2);
  CHECK(r.rank == 6);
  CHECK(r.columns == 13);
  CHECK(r.points.size() == 2);
  Expr z1 = (c.j("u_xx") + c.j("u_yy")) / c.uu();
  CHECK(functional_rank({z1, z1}, c.sp).rank == 1);
  Expr z3 = (c.j("u_xx") * c.j("u_yy") - c.j("u_xy").pow(2)) / c.uu().pow(2);
  Expr z4 = c.wi() * radical_power(c.uu().as_rational_function().num(), make_rational(-5, 2));
  CHECK(functional_rank({c.u, z1, z3, z4}, c.sp).rank == 4);
  std::vector<std::vector<Rational>> m{{1, 2}, {2, 4}};
  CHECK(rank_of(m) == 1);
}
