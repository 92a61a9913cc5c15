#include "jetlie/suite.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "jetlie/catalog.hpp"
#include "jetlie/errors.hpp"

namespace jetlie::suite {

namespace cat = jetlie::catalog;

namespace {

const dsl::SourceUnit& scratch() {
  static const dsl::SourceUnit u = [] {
    dsl::SourceUnit c = cat::unit();
    c.params.push_back(Symbol::intern("p"));
    return c;
  }();
  return u;
}

Expr ex(const std::string& text, const std::string& space) {
  return dsl::parse_expr(text, cat::space(space), &scratch());
}

Expr inv(const std::string& key) { return cat::unit().expr(key).value; }

std::string clip(std::string s) {
  if (s.size() > 320) {
    s.resize(320);
    s += " ...";
  }
  return s;
}

std::string witness_text(const Assignment& a, const Rational& v) {
  std::vector<std::pair<std::string, std::string>> kv;
  for (const auto& [s, q] : a) kv.emplace_back(s.name(), to_string(q));
  std::sort(kv.begin(), kv.end());
  std::string out;
  for (const auto& [k, v2] : kv) out += (out.empty() ? "" : ", ") + k + "=" + v2;
  return (out.empty() ? "constant" : out) + " -> " + to_string(v);
}

Outcome from_residual(const Expr& r, std::uint64_t seed, const std::string& label = {}) {
  Outcome o;
  o.holds = r.is_zero();
  if (!o.holds) {
    o.residual = clip((label.empty() ? "" : label + ": ") + r.to_string());
    if (auto w = find_witness(r, seed)) o.witness = witness_text(w->first, w->second);
  }
  return o;
}

Outcome from_report(const InvarianceReport& r) {
  Outcome o;
  o.holds = r.all_invariant();
  o.detail = std::to_string(r.entries.size()) + " field/expression pairs";
  for (const auto& e : r.entries) {
    if (e.invariant) continue;
    o.residual = clip(e.field + " on " + e.equation + ": " + e.residual.to_string());
    if (e.witness) o.witness = witness_text(*e.witness, e.witness_value);
    break;
  }
  return o;
}

InvarianceOptions options(std::uint64_t seed) {
  InvarianceOptions o;
  o.seed = seed;
  o.registry = cat::unit().registry;
  return o;
}

Outcome strict(const std::vector<VectorField>& fields, const std::vector<std::string>& keys, std::uint64_t seed) {
  std::vector<NamedExpr> exprs;
  for (const auto& k : keys) exprs.emplace_back(k, inv(k));
  return from_report(strict_invariance(fields, exprs, options(seed)));
}

Outcome on_system(const std::vector<VectorField>& fields, const PdeSystem& sys, std::uint64_t seed) {
  return from_report(manifold_invariance(fields, sys, options(seed)));
}

Outcome table_outcome(const std::vector<VectorField>& fields, const CommutatorTable& table) {
  auto r = verify_table(fields, table);
  Outcome o;
  o.holds = r.all_pass();
  o.detail = std::to_string(r.pairs.size()) + " pairs, " + std::to_string(r.skipped) + " outside the realized levels";
  for (const auto& p : r.pairs)
    if (!p.pass) {
      o.residual = clip("[" + p.a + ", " + p.b + "] - (" + to_string(p.expected) + ") = " + p.residual.to_string());
      break;
    }
  return o;
}

Outcome table_outcome(const cat::Algebra& a) { return table_outcome(a.fields, a.table); }

PointTransformation prolonged(const PointTransformation& t, const Expr& e) {
  unsigned order = t.target().order_of(e);
  auto r = order > t.order() ? prolong_transformation(t, order) : t;
  return r.with_registry(cat::unit().registry);
}

Outcome identity(const PointTransformation& t, const Expr& lhs, const Expr& rhs, std::uint64_t seed) {
  auto r = verify_transform_identity(prolonged(t, lhs), lhs, rhs);
  return from_residual(r.residual, seed);
}

std::vector<VectorField> fields_of(const std::string& alg, const std::vector<std::string>& names) {
  return cat::algebra(alg).select(names);
}

// Jacobi identity on the realized fields and on the abstract structure constants
Outcome jacobi(const cat::Algebra& a, std::uint64_t seed) {
  const auto& f = a.fields;
  const std::size_t n = f.size();
  std::vector<std::vector<VectorField>> br(n, std::vector<VectorField>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      br[i][j] = lie_bracket(f[i], f[j]);
      br[j][i] = br[i][j].scaled(Expr(-1));
    }
  std::size_t triples = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        ++triples;
        auto s = lie_bracket(br[i][j], f[k]) + lie_bracket(br[j][k], f[i]) + lie_bracket(br[k][i], f[j]);
        if (!s.is_zero()) {
          Outcome o;
          o.residual = clip("(" + f[i].name() + ", " + f[j].name() + ", " + f[k].name() + "): " + s.to_string());
          return o;
        }
      }
  // structure constants
  const auto& t = a.table;
  auto bracket = [&](const std::map<std::string, Expr>& x, const std::string& g, bool& skip) {
    std::map<std::string, Expr> out;
    for (const auto& [h, c] : x) {
      if (t.unchecked(h, g)) skip = true;
      for (const auto& term : t.get(h, g)) out[term.generator] += c * term.coefficient;
    }
    return out;
  };
  std::size_t abstract = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::string &A = f[i].name(), &B = f[j].name(), &C = f[k].name();
        bool skip = false;
        std::map<std::string, Expr> sum;
        for (auto [x, y, z] : {std::tuple{A, B, C}, std::tuple{B, C, A}, std::tuple{C, A, B}}) {
          if (t.unchecked(x, y)) skip = true;
          std::map<std::string, Expr> xy;
          for (const auto& term : t.get(x, y)) xy[term.generator] += term.coefficient;
          for (const auto& [g, c] : bracket(xy, z, skip)) sum[g] += c;
        }
        if (skip) continue;
        ++abstract;
        for (const auto& [g, c] : sum)
          if (!c.is_zero()) {
            Outcome o;
            o.residual = "structure constants (" + A + ", " + B + ", " + C + "): " + g + " coefficient " + c.to_string();
            return o;
          }
      }
  (void)seed;
  Outcome o;
  o.holds = true;
  o.detail = std::to_string(triples) + " field triples, " + std::to_string(abstract) + " structure-constant triples";
  return o;
}

Outcome all_of(const std::vector<Outcome>& parts) {
  Outcome o;
  o.holds = true;
  for (const auto& p : parts)
    if (!p.holds) return p;
  o.detail = std::to_string(parts.size()) + " parts";
  return o;
}

Outcome conditional(const VectorField& f, const std::string& system, const std::string& condition, const std::string& lead,
                    std::uint64_t seed) {
  const auto& sys = cat::system(system);
  Expr c = inv(condition);
  return conditional_check({f}, sys, {condition, c}, *sys.space().parse_jet(lead), seed);
}

// image of one system's equations under a change of variables, up to constant factors
Outcome rescaled_system(const PointTransformation& t, std::uint64_t seed) {
  const auto& from = cat::system("sys_4_1");
  const auto& to = cat::system("sys_4_2");
  const auto& sp = to.space();
  Substitution incompressible{{*sp.parse_jet("u2_y"), -Expr(*sp.parse_jet("u1_x"))}};
  Outcome o;
  o.holds = true;
  for (std::size_t k = 0; k < from.equations().size(); ++k) {
    const auto& [name, e] = from.equations()[k];
    Expr image = pullback(prolonged(t, e), e);
    Expr target = to.equations()[k].second;
    auto c = (image / target).as_constant();
    if (!c) {
      image = substitute(image, incompressible);
      target = substitute(target, incompressible);
      if (target.is_zero()) return from_residual(image, seed, name);
      c = (image / target).as_constant();
    }
    if (!c) {
      Expr ratio = image / target;
      o.holds = false;
      o.residual = clip(name + ": image/target = " + ratio.to_string());
      if (auto w = find_witness(image - target, seed)) o.witness = witness_text(w->first, w->second);
      return o;
    }
    o.detail += (o.detail.empty() ? "" : ", ") + name + " -> " + to_string(*c) + "*" + to.equations()[k].first;
  }
  return o;
}

Outcome stated_map(const cat::Transformation& t, Symbol jet) {
  auto pt = prolong_transformation(t.transform, t.transform.target().order_of(Expr(jet)));
  Expr computed = pt.derivative_maps().at(jet);
  Expr stated = t.stated_maps.at(jet);
  return from_residual(pt.normalize(computed - stated), kDefaultSeed);
}

// ---------------------------------------------------------------------------

struct Builder {
  std::vector<Check> checks;
  std::string group;
  void add(std::string id, std::string description, bool expect, std::vector<std::string> keys,
           std::function<Outcome(std::uint64_t)> run) {
    checks.push_back({group + "." + id, group, std::move(description), expect, std::move(keys), std::move(run)});
  }
};

const std::vector<std::string> kEcga{"Xm1", "X0", "X1", "Y1m1", "Y10", "Y11", "Y2m1", "Y20", "Y21", "R", "Theta"};

cat::Algebra replace(cat::Algebra a, const std::string& name, const VectorField& f) {
  for (auto& g : a.fields)
    if (g.name() == name) g = f.renamed(name);
  return a;
}

void tables(Builder& b) {
  b.group = "tables";
  for (const char* k : {"cga2", "cga2_pair", "cga3", "gal0", "galilei_thm1"}) {
    std::string table = std::string(k) == "cga3" ? "cga_scalar3_table" : "cga2_table";
    b.add(k, std::string("commutators of ") + k, true, {k, table},
          [k = std::string(k)](std::uint64_t) { return table_outcome(cat::algebra(k)); });
  }
  for (unsigned n : {2u, 3u})
    for (int lo : {-1, -3}) {
      cat::AlgebraParams p{n, lo, -lo};
      std::string id = "cga_general.N" + std::to_string(n) + ".levels" + std::to_string(-lo);
      b.add(id, "general realization, N = " + std::to_string(n) + ", levels " + std::to_string(lo) + ".." +
                    std::to_string(-lo) + ", symbolic weight and phases",
            true, {"cga_general", "altrep_table"}, [p](std::uint64_t) { return table_outcome(cat::algebra("cga_general", p)); });
    }
  for (const char* k : {"ecga", "ea1", "ea2", "ea3"})
    b.add(k, std::string("commutators of ") + k, true, {k, "ecga_table"},
          [k = std::string(k)](std::uint64_t) { return table_outcome(cat::algebra(k)); });
  b.add("ecga.central", "central brackets equal Theta, -2 Theta, -2 Theta exactly", true, {"ecga"}, [](std::uint64_t seed) {
    auto a = cat::algebra("ecga");
    const auto& th = a.field("Theta");
    return all_of({from_residual((lie_bracket(a.field("Y10"), a.field("Y20")) - th).coefficient(th.space().dependent("u3")), seed,
                                 "[Y10,Y20]"),
                   from_residual((lie_bracket(a.field("Y1m1"), a.field("Y21")) + th.scaled(Expr(2))).coefficient(th.space().dependent("u3")),
                                 seed, "[Y1m1,Y21]"),
                   from_residual((lie_bracket(a.field("Y11"), a.field("Y2m1")) + th.scaled(Expr(2))).coefficient(th.space().dependent("u3")),
                                 seed, "[Y11,Y2m1]")});
  });
  b.add("ecga_wave", "commutators of the six-variable realization", true, {"ecga_wave", "ecga_wave_table"},
        [](std::uint64_t) { return table_outcome(cat::algebra("ecga_wave")); });
  b.add("shallow_water_mai", "commutators of the shallow-water algebra", true, {"shallow_water_mai", "shallow_water_table"},
        [](std::uint64_t) { return table_outcome(cat::algebra("shallow_water_mai")); });
  b.add("ea3_fluid", "ea3 in fluid coordinates keeps its table", true, {"ea3_fluid", "fluid_variables"},
        [](std::uint64_t) { return table_outcome(cat::algebra("ea3_fluid")); });
}

void jacobi_checks(Builder& b) {
  b.group = "jacobi";
  for (const char* k : {"cga2", "cga2_pair", "cga3", "ecga", "ecga_wave", "shallow_water_mai", "ea3_fluid", "xinf", "xinf_ecga"})
    b.add(k, std::string("Jacobi identity for ") + k, true, {k},
          [k = std::string(k)](std::uint64_t seed) { return jacobi(cat::algebra(k), seed); });
  for (unsigned n : {2u, 3u})
    for (int top : {1, 3})
      b.add("cga_general.N" + std::to_string(n) + ".levels" + std::to_string(top),
            "Jacobi identity for the general realization, levels -" + std::to_string(top) + ".." + std::to_string(top), true,
            {"cga_general"}, [n, top](std::uint64_t seed) { return jacobi(cat::algebra("cga_general", {n, -top, top}), seed); });
}

void prolongation(Builder& b) {
  b.group = "prolongation";
  static const std::vector<std::pair<const char*, const char*>> expected{
      {"u1_t", "-2*(a1 + a1*t*u1_x + a2*t*u1_y)"},
      {"u1_x", "0"},
      {"u1_y", "0"},
      {"u2_t", "-2*(a2 + a2*t*u2_y + a1*t*u2_x)"},
      {"u2_x", "0"},
      {"u2_y", "0"},
      {"u3_t", "a1*u2 - a2*u1 + a1*t*(u2_t - 2*u3_x) - a2*t*(u1_t + 2*u3_y)"},
      {"u3_x", "-2*a2 - a2*t*u1_x + a1*t*u2_x"},
      {"u3_y", "2*a1 - a2*t*u1_y + a1*t*u2_y"},
  };
  auto field = [] {
    auto a = cat::algebra("ecga");
    return (a.field("Y11").scaled(-ex("a1", "ecga_space")) - a.field("Y21").scaled(ex("a2", "ecga_space"))).renamed("Xa");
  };
  b.add("base", "acceleration combination -a1 Y11 - a2 Y21 on the base coordinates", true, {"ecga"}, [field](std::uint64_t seed) {
    auto f = field();
    const auto& sp = f.space();
    std::vector<Outcome> parts;
    std::vector<std::pair<const char*, const char*>> base{{"t", "0"},
                                                          {"x", "a1*t^2"},
                                                          {"y", "a2*t^2"},
                                                          {"u1", "-2*a1*t"},
                                                          {"u2", "-2*a2*t"},
                                                          {"u3", "a1*(2*y + t*u2) - a2*(2*x + t*u1)"}};
    for (const auto& [c, e] : base) {
      std::string n = c;
      Symbol s = n[0] == 'u' ? sp.dependent(n) : sp.independent(n);
      parts.push_back(from_residual(f.coefficient(s) - ex(e, "ecga_space"), seed, c));
    }
    return all_of(parts);
  });
  for (const auto& [jet, value] : expected)
    b.add(jet, std::string("first prolongation coefficient of ") + jet, true, {"ecga"},
          [field, jet = std::string(jet), value = std::string(value)](std::uint64_t seed) {
            auto f = field();
            auto pf = prolong(f, 1);
            Symbol s = *f.space().parse_jet(jet);
            return from_residual(pf.coefficient(s) - ex(value, "ecga_space"), seed);
          });
}

void theorem1(Builder& b) {
  b.group = "theorem1";
  b.add("strict", "u, Z1..Z4 annihilated by the seven Galilei generators with dilatation", true,
        {"galilei_thm1", "galilei_arg1", "Z1", "Z2", "Z3", "Z4"}, [](std::uint64_t seed) {
          return strict(cat::algebra("galilei_thm1").fields, {"galilei_arg1", "Z1", "Z2", "Z3", "Z4"}, seed);
        });
  b.add("galilei_args", "seven Galilei arguments annihilated by the massless Galilei algebra", true,
        {"gal0", "galilei_arg1", "galilei_arg2", "galilei_arg3", "galilei_arg4", "galilei_arg5", "galilei_arg6",
         "galilei_arg7", "WI", "WII"},
        [](std::uint64_t seed) {
          return strict(cat::algebra("gal0").fields,
                        {"galilei_arg1", "galilei_arg2", "galilei_arg3", "galilei_arg4", "galilei_arg5", "galilei_arg6",
                         "galilei_arg7"},
                        seed);
        });
  for (const char* y : {"Y11", "Y21"})
    b.add(std::string("WII_") + y, std::string("WII is not annihilated by ") + y, false, {"cga2", "WII"},
          [y = std::string(y)](std::uint64_t seed) { return strict({cat::algebra("cga2").field(y)}, {"WII"}, seed); });
  b.add("Z4_X1", "Z4 is not annihilated by the projective generator", false, {"cga2", "Z4"},
        [](std::uint64_t seed) { return strict({cat::algebra("cga2").field("X1")}, {"Z4"}, seed); });
  b.add("3d.gal0", "three-dimensional determinants annihilated by the massless Galilei algebra", true,
        {"cga3", "WI_3d", "WII_3d", "WIII_3d"}, [](std::uint64_t seed) {
          return strict(fields_of("cga3", {"Xm1", "Y1m1", "Y10", "Y2m1", "Y20", "Y3m1", "Y30", "R12", "R13", "R23"}),
                        {"WI_3d", "WII_3d", "WIII_3d"}, seed);
        });
  b.add("3d.WII_Y11", "three-dimensional WII is not annihilated by Y11", false, {"cga3", "WII_3d"},
        [](std::uint64_t seed) { return strict({cat::algebra("cga3").field("Y11")}, {"WII_3d"}, seed); });
}

void theorem2(Builder& b) {
  b.group = "theorem2";
  for (const char* z : {"Z1", "Z2", "Z3"})
    b.add(std::string("pullback.") + z, std::string(z) + " unchanged by the projective map", true, {"projective_2_11", z},
          [z = std::string(z)](std::uint64_t seed) {
            return identity(cat::transformation("projective_2_11").transform, inv(z), inv(z), seed);
          });
  b.add("pullback.Z4", "Z4 picks up -2p/(1-pt) WIII (u_a u_a)^(-5/2)", true, {"projective_2_11", "Z4", "WIII"},
        [](std::uint64_t seed) {
          return identity(cat::transformation("projective_2_11").transform, inv("Z4"),
                          ex("Z4 - 2*p/(1 - p*t)*WIII*uu^(-5/2)", "cga_scalar"), seed);
        });
  b.add("conditional", "WI = 0 with WIII = 0 is invariant under X1", true, {"wi_equation", "WI", "WIII", "cga2"},
        [](std::uint64_t seed) {
          return conditional(cat::algebra("cga2").field("X1"), "wi_equation", "WIII", "u_xx", seed);
        });
  b.add("unconditional", "WI = 0 alone is not invariant under X1", false, {"wi_equation", "cga2"}, [](std::uint64_t seed) {
    return on_system({cat::algebra("cga2").field("X1")}, cat::system("wi_equation"), seed);
  });
  b.add("3d.conditional", "three-dimensional WI = 0 with WIII = 0 is invariant under X1", true,
        {"wi_equation_3d", "WI_3d", "WIII_3d", "cga3"}, [](std::uint64_t seed) {
          return conditional(cat::algebra("cga3").field("X1"), "wi_equation_3d", "WIII_3d", "u_xx", seed);
        });
}

void theorem3(Builder& b) {
  b.group = "theorem3";
  std::vector<std::string> zs{"Zu1", "Zv1", "Zu2", "Zv2", "Zu3", "Zv3", "Zu4", "Zv4"};
  b.add("strict", "Zu1..Zu4, Zv1..Zv4 annihilated by all ten generators", true, [&] {
    auto k = zs;
    k.push_back("cga2_pair");
    return k;
  }(), [zs](std::uint64_t seed) { return strict(cat::algebra("cga2_pair").fields, zs, seed); });
  b.add("Zuv", "Zuv annihilated by all generators except X1", true, {"cga2_pair", "Zuv"}, [](std::uint64_t seed) {
    auto a = cat::algebra("cga2_pair");
    std::vector<VectorField> f;
    for (const auto& g : a.fields)
      if (g.name() != "X1") f.push_back(g);
    return strict(f, {"Zuv"}, seed);
  });
  b.add("Zuv.X1", "X1 Zuv vanishes on the companion condition", true, {"cga2_pair", "Zuv", "Zuv_condition", "pair_condition"},
        [](std::uint64_t seed) {
          const auto& sys = cat::system("pair_condition");
          auto f = cat::algebra("cga2_pair").field("X1");
          Expr r = sys.on_manifold(apply(prolong(f, 2), inv("Zuv")));
          return from_residual(r, seed);
        });
}

void theorem4(Builder& b) {
  b.group = "theorem4";
  b.add("strict", "u1_x, u1_y, u2_x, u2_y, W1, W2, W3 annihilated by ea1", true, {"ea1", "W1", "W2", "W3"},
        [](std::uint64_t seed) {
          std::vector<NamedExpr> e;
          for (const char* j : {"u1_x", "u1_y", "u2_x", "u2_y"}) e.emplace_back(j, ex(j, "ecga_space"));
          for (const char* w : {"W1", "W2", "W3"}) e.emplace_back(w, inv(w));
          return from_report(strict_invariance(cat::algebra("ea1").fields, e, options(seed)));
        });
}

void theorem5(Builder& b) {
  b.group = "theorem5";
  for (const char* j : {"u1_x", "u1_y", "u2_x", "u2_y"})
    b.add(std::string("law.") + j, std::string("projective image of ") + j, true, {"ecga_projective"},
          [j = std::string(j)](std::uint64_t) {
            auto t = cat::transformation("ecga_projective");
            return stated_map(t, *t.transform.target().parse_jet(j));
          });
  for (const char* w : {"W1", "W2", "W3"})
    b.add(std::string("law.") + w, std::string(w) + " scales by (1-pt)^2", true, {"ecga_projective", w},
          [w = std::string(w)](std::uint64_t seed) {
            return identity(cat::transformation("ecga_projective").transform, inv(w), ex("(1 - p*t)^2*" + w, "ecga_space"),
                            seed);
          });
  b.add("strict", "five ratios annihilated by ea2", true,
        {"ea2", "Wstar1", "Wstar2", "Wstar3", "shear_ratio", "cross_ratio"}, [](std::uint64_t seed) {
          return strict(cat::algebra("ea2").fields, {"Wstar1", "Wstar2", "Wstar3", "shear_ratio", "cross_ratio"}, seed);
        });
}

const std::vector<std::string> kTheorem6{"W12star", "W3star", "Wstar", "divergence_ratio", "U_ratio"};

void theorem6(Builder& b) {
  b.group = "theorem6";
  b.add("strict", "five quantities annihilated by ea3", true, [] {
    auto k = kTheorem6;
    k.push_back("ea3");
    return k;
  }(), [](std::uint64_t seed) { return strict(cat::algebra("ea3").fields, kTheorem6, seed); });
  for (const auto& q : kTheorem6)
    b.add("rotation." + q, q + " unchanged by the finite rotation", true, {"rotation", q}, [q](std::uint64_t seed) {
      return identity(cat::transformation("rotation").transform, inv(q), inv(q), seed);
    });
}

void theorem7(Builder& b) {
  b.group = "theorem7";
  for (const char* q : {"W12star", "W3star", "Ustar", "Vstar"})
    b.add(std::string("strict.") + q, std::string(q) + " annihilated by all eleven generators", true, {"ecga", q},
          [q = std::string(q)](std::uint64_t seed) { return strict(cat::algebra("ecga").fields, {q}, seed); });
  static const std::vector<std::pair<const char*, const char*>> laws{
      {"W12star", "W12star"},
      {"W3star", "W3star"},
      {"Wstar", "Wstar - 2*p*W12star/((1 - p*t)*curl)"},
      {"divergence_ratio", "divergence_ratio - 4*p/((1 - p*t)*curl)"},
      {"U_ratio", "U_ratio + 8*p^2/((1 - p*t)^2*curl^2) - 4*p*(u1_x + u2_y)/((1 - p*t)*curl^2)"},
  };
  for (const auto& [q, rhs] : laws)
    b.add(std::string("transform.") + q, std::string("finite projective law for ") + q, true, {"ecga_projective", q},
          [q = std::string(q), rhs = std::string(rhs)](std::uint64_t seed) {
            return identity(cat::transformation("ecga_projective").transform, inv(q), ex(rhs, "ecga_space"), seed);
          });
}

Outcome rank_is(const RankResult& r, std::size_t expect, const std::string& what) {
  Outcome o;
  o.holds = r.rank == expect;
  o.detail = what + " rank " + std::to_string(r.rank) + " of " + std::to_string(r.columns) + " columns";
  if (!o.holds) o.residual = "expected rank " + std::to_string(expect) + ", found " + std::to_string(r.rank);
  return o;
}

void ranks(Builder& b) {
  b.group = "ranks";
  for (int shift : {0, 1})
    b.add("ea1.orbit.seed" + std::to_string(shift), "ea1 orbits on the first jet space have dimension 8", true, {"ea1"},
          [shift](std::uint64_t seed) {
            return rank_is(orbit_rank(cat::algebra("ea1").fields, cat::space("ecga_space"), 1, seed + shift), 8, "orbit");
          });
  b.add("ea1.invariants", "the seven ea1 invariants are functionally independent", true, {"ea1", "W1", "W2", "W3"},
        [](std::uint64_t seed) {
          std::vector<Expr> e;
          for (const char* k : {"u1_x", "u1_y", "u2_x", "u2_y", "W1", "W2", "W3"}) e.push_back(ex(k, "ecga_space"));
          return rank_is(functional_rank(e, cat::space("ecga_space"), seed), 7, "functional");
        });
  b.add("ecga.orbit", "ECGA orbits on the first jet space have dimension 11", true, {"ecga"}, [](std::uint64_t seed) {
    return rank_is(orbit_rank(cat::algebra("ecga").fields, cat::space("ecga_space"), 1, seed), 11, "orbit");
  });
  b.add("ecga.invariants", "the four ECGA invariants are functionally independent", true,
        {"W12star", "W3star", "Ustar", "Vstar"}, [](std::uint64_t seed) {
          std::vector<Expr> e;
          for (const char* k : {"W12star", "W3star", "Ustar", "Vstar"}) e.push_back(inv(k));
          return rank_is(functional_rank(e, cat::space("ecga_space"), seed), 4, "functional");
        });
}

void identities(Builder& b) {
  b.group = "identities";
  b.add("Ustar", "Ustar = 2 U_ratio - divergence_ratio^2", true, {"Ustar", "U_ratio", "divergence_ratio"},
        [](std::uint64_t seed) {
          return from_residual(inv("Ustar") - ex("2*U_ratio - divergence_ratio^2", "ecga_space"), seed);
        });
  b.add("Vstar", "Vstar = 2 Wstar - divergence_ratio W12star", true, {"Vstar", "Wstar", "W12star"}, [](std::uint64_t seed) {
    return from_residual(inv("Vstar") - ex("2*Wstar - divergence_ratio*W12star", "ecga_space"), seed);
  });
  b.add("WIII", "Z1 - Z2 = -WIII/(u_a u_a)^2", true, {"WIII", "Z1", "Z2"}, [](std::uint64_t seed) {
    return from_residual(inv("Z1") - inv("Z2") + ex("WIII/uu^2", "cga_scalar"), seed);
  });
}

void systems(Builder& b) {
  b.group = "systems";
  b.add("shallow_water.mai", "shallow-water equations admit all nine generators", true,
        {"shallow_water", "shallow_water_mai"}, [](std::uint64_t seed) {
          return on_system(cat::algebra("shallow_water_mai").fields, cat::system("shallow_water"), seed);
        });
  b.add("shallow_water.Y11", "shallow-water equations do not admit the exotic Y11", false, {"shallow_water"},
        [](std::uint64_t seed) {
          return on_system({cat::field("shallow_water_mai:ecga_Y11")}, cat::system("shallow_water"), seed);
        });
  b.add("sys_4_2.ea3", "incompressible system admits ea3 in fluid coordinates", true, {"sys_4_2", "ea3_fluid"},
        [](std::uint64_t seed) { return on_system(cat::algebra("ea3_fluid").fields, cat::system("sys_4_2"), seed); });
  b.add("sys_4_2.xinf", "incompressible system admits w -> w + phi(t), phi = t^k, k <= 3", true, {"sys_4_2", "xinf"},
        [](std::uint64_t seed) { return on_system(cat::algebra("xinf").fields, cat::system("sys_4_2"), seed); });
  b.add("sys_4_2.X1", "incompressible system does not admit the projective generator", false, {"sys_4_2", "ecga"},
        [](std::uint64_t seed) {
          return on_system({cat::field("ecga:X1", cat::space("fluid_space"))}, cat::system("sys_4_2"), seed);
        });
  b.add("sys_4_1.ea3", "W1 = W2 = 0 with zero divergence admits ea3", true, {"sys_4_1", "ea3"},
        [](std::uint64_t seed) { return on_system(cat::algebra("ea3").fields, cat::system("sys_4_1"), seed); });
  b.add("sys_4_1.xinf", "W1 = W2 = 0 with zero divergence admits u3 -> u3 + phi(t)", true, {"sys_4_1", "xinf_ecga"},
        [](std::uint64_t seed) { return on_system(cat::algebra("xinf_ecga").fields, cat::system("sys_4_1"), seed); });
  b.add("sys_4_1.X1", "W1 = W2 = 0 with zero divergence does not admit X1", false, {"sys_4_1", "ecga"},
        [](std::uint64_t seed) { return on_system({cat::algebra("ecga").field("X1")}, cat::system("sys_4_1"), seed); });
  for (const char* s : {"sys_4_7", "sys_4_8"})
    b.add(std::string(s) + ".ecga", std::string(s) + " admits all eleven generators", true, {s, "ecga"},
          [s = std::string(s)](std::uint64_t seed) { return on_system(cat::algebra("ecga").fields, cat::system(s), seed); });
  b.add("mt_wave.ecga", "six-variable wave equation admits all eleven generators", true, {"mt_wave", "ecga_wave"},
        [](std::uint64_t seed) { return on_system(cat::algebra("ecga_wave").fields, cat::system("mt_wave"), seed); });
  b.add("change_of_variables", "rescaling maps W1 = W2 = 0, zero divergence onto the incompressible system", true,
        {"fluid_variables", "sys_4_1", "sys_4_2"},
        [](std::uint64_t seed) { return rescaled_system(cat::change_of_variables(), seed); });
}

std::vector<std::string> transformation_keys() {
  std::vector<std::string> k{"acceleration_2_8", "projective_2_11", "ecga_projective", "rotation"};
  for (int i = 0; i <= 3; ++i) k.push_back("xinf_phi_t" + std::to_string(i));
  for (int i = 0; i <= 3; ++i) k.push_back("xinf_ecga_t" + std::to_string(i));
  return k;
}

void consistency(Builder& b) {
  b.group = "consistency";
  for (const auto& key : transformation_keys()) {
    b.add("generator." + key, "infinitesimal of " + key + " equals its catalog generator", true, {key},
          [key](std::uint64_t seed) {
            auto t = cat::transformation(key);
            auto d = infinitesimal(t.transform) - t.generator->scaled(Expr(t.sign));
            Outcome o;
            o.holds = d.is_zero();
            if (!o.holds) o.residual = clip(d.to_string());
            (void)seed;
            return o;
          });
    b.add("first_order." + key, "first order in p of " + key + " matches the prolonged generator", true, {key},
          [key](std::uint64_t seed) {
            auto t = cat::transformation(key);
            std::vector<Outcome> parts;
            for (const auto& e : t.probes) {
              auto r = first_order_consistency(prolonged(t.transform, e), *t.generator, e, Expr(t.sign));
              parts.push_back(from_residual(r.residual, seed));
            }
            return all_of(parts);
          });
  }
  for (const char* j : {"u_x", "u_y", "u_t", "u_xx", "u_xy", "u_yy", "u_tx", "u_ty"})
    b.add(std::string("maps.projective_2_11.") + j, std::string("projective image of ") + j, true, {"projective_2_11"},
          [j = std::string(j)](std::uint64_t) {
            auto t = cat::transformation("projective_2_11");
            return stated_map(t, *t.transform.target().parse_jet(j));
          });
  b.add("rotation.identity", "rotation with c = 1, s = 0 is the identity", true, {"rotation"}, [](std::uint64_t seed) {
    auto t = cat::transformation("rotation").transform;
    Substitution at{{Symbol::intern("c"), Expr(1)}, {Symbol::intern("s"), Expr(0)}};
    std::vector<Outcome> parts;
    for (const auto& [s, e] : t.base_maps()) parts.push_back(from_residual(substitute(e, at) - Expr(s), seed, s.name()));
    return all_of(parts);
  });
}

void exclusions(Builder& b) {
  b.group = "exclusions";
  b.add("theorem3.Zuv_X1", "Zuv alone is not annihilated by X1", false, {"cga2_pair", "Zuv"},
        [](std::uint64_t seed) { return strict({cat::algebra("cga2_pair").field("X1")}, {"Zuv"}, seed); });
  b.add("theorem4.u1_x_X0", "u1_x is not annihilated by the dilatation", false, {"ecga"}, [](std::uint64_t seed) {
    return from_report(
        strict_invariance({cat::algebra("ecga").field("X0")}, {{"u1_x", ex("u1_x", "ecga_space")}}, options(seed)));
  });
  b.add("theorem5.Wstar1_R", "Wstar1 is not annihilated by the rotation", false, {"ecga", "Wstar1"},
        [](std::uint64_t seed) { return strict({cat::algebra("ecga").field("R")}, {"Wstar1"}, seed); });
  b.add("theorem6.Wstar_X1", "Wstar is not annihilated by X1", false, {"ecga", "Wstar"},
        [](std::uint64_t seed) { return strict({cat::algebra("ecga").field("X1")}, {"Wstar"}, seed); });
  b.add("theorem7.divergence_ratio_X1", "divergence ratio is not annihilated by X1", false, {"ecga", "divergence_ratio"},
        [](std::uint64_t seed) { return strict({cat::algebra("ecga").field("X1")}, {"divergence_ratio"}, seed); });
}

void errata(Builder& b) {
  b.group = "errata";
  b.add("ecga.X1_printed", "projective generator with x, y instead of 2x, 2y breaks the table", false, {"ecga"},
        [](std::uint64_t) {
          auto a = cat::algebra("ecga");
          return table_outcome(replace(a, "X1", cat::field("ecga:X1_printed")));
        });
  b.add("ecga_projective_printed", "opposite sign in the u3 image breaks W1 -> (1-pt)^2 W1", false,
        {"ecga_projective_printed", "W1"}, [](std::uint64_t seed) {
          return identity(cat::transformation("ecga_projective_printed").transform, inv("W1"),
                          ex("(1 - p*t)^2*W1", "ecga_space"), seed);
        });
  for (const char* f : {"X0", "X1"})
    b.add(std::string("shallow_water.") + f + "_printed", std::string("printed ") + f + " is not a shallow-water symmetry",
          false, {"shallow_water"}, [f = std::string(f)](std::uint64_t seed) {
            return on_system({cat::field("shallow_water_mai:" + f + "_printed")}, cat::system("shallow_water"), seed);
          });
  b.add("Z4_without_radical", "Z4 law with WIII lacking (u_a u_a)^(-5/2)", false, {"projective_2_11", "Z4"},
        [](std::uint64_t seed) {
          return identity(cat::transformation("projective_2_11").transform, inv("Z4"),
                          ex("Z4 - 2*p/(1 - p*t)*WIII", "cga_scalar"), seed);
        });
  b.add("fluid_variables_stated", "rescaling without reversing the velocities", false, {"fluid_variables_stated"},
        [](std::uint64_t seed) { return rescaled_system(cat::change_of_variables_without_reflection(), seed); });
  b.add("mt_wave.X1_bare", "projective generator without the Psi weight", false, {"mt_wave", "ecga_wave"},
        [](std::uint64_t seed) { return on_system({cat::field("ecga_wave:X1_bare")}, cat::system("mt_wave"), seed); });
}

void mutation_checks(Builder& b) {
  b.group = "mutation";
  b.add("count", "mutation list has at least ten entries", true, {}, [](std::uint64_t) {
    Outcome o;
    o.holds = mutations().size() >= 10;
    o.detail = std::to_string(mutations().size()) + " mutations";
    return o;
  });
  for (const auto& m : mutations())
    b.add(m.label(), "flipped term detected", true, {"ecga", "ecga_table"}, [m](std::uint64_t seed) { return detect(m, seed); });
}

std::vector<Check> build() {
  Builder b;
  tables(b);
  jacobi_checks(b);
  prolongation(b);
  theorem1(b);
  theorem2(b);
  theorem3(b);
  theorem4(b);
  theorem5(b);
  theorem6(b);
  theorem7(b);
  ranks(b);
  identities(b);
  systems(b);
  consistency(b);
  exclusions(b);
  errata(b);
  mutation_checks(b);
  b.group = "coverage";
  b.add("catalog", "every catalog entry is exercised by some check", true, {}, [](std::uint64_t) {
    auto missing = uncovered(all_checks());
    Outcome o;
    o.holds = missing.empty();
    for (const auto& k : missing) o.residual += (o.residual.empty() ? "" : ", ") + k;
    o.detail = std::to_string(cat::entries().size()) + " entries";
    return o;
  });
  return b.checks;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "?";
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

int Report::exit_code() const {
  if (count(Status::Error)) return 2;
  if (count(Status::Fail)) return 1;
  return 0;
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> c = build();
  return c;
}

std::vector<std::string> groups() {
  std::vector<std::string> g;
  for (const auto& c : all_checks())
    if (std::find(g.begin(), g.end(), c.group) == g.end()) g.push_back(c.group);
  return g;
}

bool selected(const Check& c, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& o : only)
    if (c.group == o || c.id == o || c.id.rfind(o + ".", 0) == 0) return true;
  return false;
}

CheckResult run_check(const Check& c, std::uint64_t seed) {
  CheckResult r;
  r.id = c.id;
  r.group = c.group;
  r.description = c.description;
  r.keys = c.keys;
  r.expect_holds = c.expect_holds;
  auto start = std::chrono::steady_clock::now();
  try {
    r.outcome = c.run(seed);
    r.status = r.outcome.holds == c.expect_holds ? Status::Pass : Status::Fail;
  } catch (const std::exception& e) {
    r.status = Status::Error;
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report run(const Options& opt) {
  Report r;
  r.seed = opt.seed;
  for (const auto& g : opt.only) {
    bool any = std::any_of(all_checks().begin(), all_checks().end(),
                           [&](const Check& c) { return selected(c, {g}); });
    if (!any) throw Error(ErrorCode::UnknownKey, "no check matches '" + g + "'");
  }
  for (const auto& c : all_checks())
    if (selected(c, opt.only)) r.checks.push_back(run_check(c, opt.seed));
  return r;
}

std::vector<std::string> uncovered(const std::vector<Check>& checks) {
  std::set<std::string> used;
  for (const auto& c : checks) used.insert(c.keys.begin(), c.keys.end());
  std::vector<std::string> out;
  for (const auto& e : cat::entries())
    if (!used.count(e.key)) out.push_back(e.key);
  return out;
}

std::string Mutation::label() const { return field + "." + coordinate + "." + std::to_string(term); }

std::vector<Mutation> mutations() {
  static const std::vector<Mutation> list = [] {
    std::vector<Mutation> out;
    auto a = cat::algebra("ecga");
    for (const auto& name : kEcga) {
      const auto& f = a.field(name);
      std::vector<std::pair<std::string, std::size_t>> coords;
      for (const auto& [s, c] : f.coefficients()) coords.emplace_back(s.name(), c.as_rational_function().num().size());
      std::sort(coords.begin(), coords.end());
      for (const auto& [s, n] : coords)
        for (std::size_t k = 0; k < n; ++k) out.push_back({name, s, k});
    }
    return out;
  }();
  return list;
}

namespace {

VectorField mutated(const VectorField& f, const Mutation& m) {
  Symbol s = Symbol::intern(m.coordinate);
  Polynomial num = f.coefficient(s).as_rational_function().num();
  std::vector<Polynomial::Term> terms = num.terms();
  std::sort(terms.begin(), terms.end(), [](const Polynomial::Term& x, const Polynomial::Term& y) {
    return Expr(Polynomial::monomial(x.mono, 1)).to_string() < Expr(Polynomial::monomial(y.mono, 1)).to_string();
  });
  const auto& t = terms.at(m.term);
  Expr flipped = f.coefficient(s) - Expr(2) * Expr(Polynomial::monomial(t.mono, t.coeff));
  return f.with_coefficient(s, flipped);
}

}  // namespace

Outcome detect(const Mutation& m, std::uint64_t seed) {
  auto a = cat::algebra("ecga");
  for (auto& f : a.fields)
    if (f.name() == m.field) f = mutated(f, m);
  Outcome o;
  auto table = table_outcome(a);
  if (!table.holds) {
    o.holds = true;
    o.detail = "table: " + table.residual.substr(0, table.residual.find(']') + 1);
    return o;
  }
  auto invariance = strict(a.fields, {"W12star", "W3star", "Ustar", "Vstar"}, seed);
  if (!invariance.holds) {
    o.holds = true;
    o.detail = "invariance: " + invariance.residual.substr(0, invariance.residual.find(':'));
    return o;
  }
  o.residual = "mutant passes table and invariance checks";
  return o;
}

Outcome table_check(const std::vector<VectorField>& fields, const CommutatorTable& table) {
  return table_outcome(fields, table);
}

Outcome strict_check(const std::vector<VectorField>& fields, const std::vector<NamedExpr>& exprs, std::uint64_t seed) {
  return from_report(strict_invariance(fields, exprs, options(seed)));
}

Outcome manifold_check(const std::vector<VectorField>& fields, const PdeSystem& sys, std::uint64_t seed) {
  return on_system(fields, sys, seed);
}

Outcome reduced_check(const std::vector<VectorField>& fields, const std::vector<NamedExpr>& exprs, const PdeSystem& sys,
                      std::uint64_t seed) {
  Outcome o;
  o.holds = true;
  o.detail = std::to_string(fields.size() * exprs.size()) + " field/expression pairs";
  for (const auto& f : fields) {
    auto p = prolong(f, f.space().max_order());
    for (const auto& [name, e] : exprs) {
      Expr r = sys.on_manifold(apply(p, e));
      if (r.is_zero()) continue;
      Outcome bad = from_residual(r, seed, f.name() + " on " + name);
      bad.detail = o.detail;
      return bad;
    }
  }
  return o;
}

Outcome conditional_check(const std::vector<VectorField>& fields, const PdeSystem& sys, const NamedExpr& condition,
                          Symbol lead, std::uint64_t seed) {
  Substitution solved{{lead, solve_linear(condition.second, lead)}};
  return from_report(conditional_invariance(fields, sys, {condition}, solved, options(seed)));
}

Outcome identity_check(const PointTransformation& t, const Expr& lhs, const Expr& rhs, std::uint64_t seed) {
  return identity(t, lhs, rhs, seed);
}

Outcome rank_check(const RankResult& r, std::optional<std::size_t> expect, const std::string& what) {
  if (expect) return rank_is(r, *expect, what);
  Outcome o = rank_is(r, r.rank, what);
  return o;
}

CheckResult single(std::string id, std::string group, std::string description, std::vector<std::string> keys,
                   bool expect_holds, const std::function<Outcome(std::uint64_t)>& run, std::uint64_t seed) {
  return run_check({std::move(id), std::move(group), std::move(description), expect_holds, std::move(keys), run}, seed);
}

std::string version() { return JETLIE_VERSION; }

std::string flow_convention() { return "generator = -d/dp at p = 0"; }

}  // namespace jetlie::suite
