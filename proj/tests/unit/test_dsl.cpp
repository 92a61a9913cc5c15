#include "doctest.h"
#include "jetlie/dsl.hpp"
#include "jetlie/errors.hpp"

using namespace jetlie;
using namespace jetlie::dsl;

namespace {

ErrorCode code_of(const std::string& src) {
  try {
    parse(src);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

std::string message_of(const std::string& src) {
  try {
    parse(src);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const char* kUnit = R"(
space S { independent t, x; dependent u; order 2 }
space S2 { independent t, x, y; dependent u; order 2 }
param q;
assume on S2 positive u_x^2 + u_y^2;
field T on S = -@t;
field X1 on S = -t^2*@t - 2*t*x*@x;
field W on S = -t*@t - x*@x + scalar(1/2);
expr Z1 on S2 = (u_xx + u_yy) / (u_x^2 + u_y^2);
expr Z4 on S2 = det[[u_xx, u_xy], [u_xy, u_yy]] * (u_x^2 + u_y^2)^(-5/2);
expr heat on S = u_t - q*u_xx;
system H on S { eq E: u_t - u_xx; solve u_t from E; }
transform Sh on S param p { x -> x + p; }
table tb { [T, X1] = -2*W + q*T; [T, W] = T; }
)";

}  // namespace

TEST_CASE("parse: simple field") {
  auto u = parse("space S { independent t, x; dependent u; order 2 } field T on S = -@t;");
  const auto& f = u.field("T");
  const auto& sp = u.space("S");
  REQUIRE(f.coefficients().size() == 1);
  CHECK(f.coefficients().at(sp.independent("t")) == Expr(-1));
  CHECK_FALSE(f.multiplier().has_value());
}

TEST_CASE("parse: X1 restriction") {
  auto base = parse("space S { independent t, x; dependent u; order 2 }");
  auto u = parse("field X1 on S = -t^2*@t - 2*t*x*@x;", &base);
  const auto& sp = u.space("S");
  Expr t{sp.independent("t")}, x{sp.independent("x")};
  const auto& f = u.field("X1");
  CHECK(f.coefficients().at(sp.independent("t")) == -t * t);
  CHECK(f.coefficients().at(sp.independent("x")) == Expr(-2) * t * x);
  CHECK(f.to_string() == "-t^2*@t - 2*t*x*@x");
}

TEST_CASE("parse: Z1 expression") {
  auto u = parse("space S2 { independent t, x, y; dependent u; order 2 }\n"
                 "expr Z1 on S2 = (u_xx + u_yy) / (u_x^2 + u_y^2);");
  const auto& sp = u.space("S2");
  auto j = [&](const char* n) { return Expr(*sp.parse_jet(n)); };
  CHECK(u.expr("Z1").value == (j("u_xx") + j("u_yy")) / (j("u_x") * j("u_x") + j("u_y") * j("u_y")));
}

TEST_CASE("parse: precedence and literals") {
  auto sp = JetSpace::build({"t", "x"}, {"u"}, 2, "dsl_prec");
  Expr x{sp.independent("x")};
  CHECK(parse_expr("-x^2", sp) == -(x * x));
  CHECK(parse_expr("2^3^2", sp) == Expr(512));
  CHECK(parse_expr("1/2*x", sp) == Expr(Rational(1, 2)) * x);
  CHECK(parse_expr("x - 1 - 1", sp) == x - Expr(2));
  CHECK(parse_expr("2*x^-1", sp) == Expr(2) / x);
  CHECK(parse_expr("u_xt", sp) == Expr(*sp.parse_jet("u_tx")));
  CHECK(parse_expr("det[[1, x], [x, 1]]", sp) == Expr(1) - x * x);
}

TEST_CASE("parse: full unit") {
  auto u = parse(kUnit);
  CHECK(u.declarations.size() == 13);
  CHECK(u.fields_on("S").size() == 3);
  CHECK(u.field("W").multiplier() == Expr(Rational(1, 2)));
  CHECK(u.system("H").solved_form().size() == 1);
  CHECK(u.transform("Sh").parameter().has_value());
  const auto& tb = u.table("tb");
  CHECK(tb.generators == std::vector<std::string>{"T", "X1", "W"});
  auto lc = tb.table.get("X1", "T");
  REQUIRE(lc.size() == 2);
}

TEST_CASE("round trip") {
  auto u = parse(kUnit);
  std::string printed = u.to_string();
  auto v = parse(printed);
  CHECK(v.to_string() == printed);
  for (const auto& [n, f] : u.fields) CHECK(v.field(n) == f);
  for (const auto& [n, e] : u.exprs) CHECK(v.expr(n).value == e.value);
  for (const auto& [n, s] : u.systems) {
    CHECK(v.system(n).equations().size() == s.equations().size());
    CHECK(v.system(n).solved_form() == s.solved_form());
  }
  CHECK(v.transform("Sh").to_string() == u.transform("Sh").to_string());
}

TEST_CASE("diagnostics") {
  CHECK(code_of("space S { independent t; order 1 } expr e on S = t +;") == ErrorCode::SyntaxError);
  CHECK(code_of("space S { independent t; order 1 } expr e on S = z;") == ErrorCode::UnknownSymbol);
  CHECK(code_of("space S { independent t; order 1 } expr e on S = det[[1, t]];") == ErrorCode::ArityError);
  CHECK(code_of("space S { independent t; order 1 } space S { independent x; order 1 }") ==
        ErrorCode::DuplicateName);
  CHECK(code_of("space S { independent t; order 1 } expr e on S = @t;") == ErrorCode::SyntaxError);
  CHECK(code_of("space S { independent t; order 1 } field f on S = t^t*@t;") == ErrorCode::SyntaxError);
  CHECK(code_of("space S { independent t; order 1 } field f on S = @t*@t;") == ErrorCode::SyntaxError);
  CHECK(code_of("space S { independent t; order 1 } expr e on S = 1/0;") == ErrorCode::DivisionByZero);
  CHECK(code_of("space S { independent t; order 1 } expr e on S = t $ 1;") == ErrorCode::SyntaxError);
  CHECK(code_of("expr e on Nowhere = 1;") == ErrorCode::UnknownSymbol);
  CHECK(message_of("space S { independent t; order 1 }\nexpr e on S =\n  t + zz;").find(" 3:7: ") != std::string::npos);
}
