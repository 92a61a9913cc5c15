#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>

#include "jetlie/catalog.hpp"
#include "jetlie/errors.hpp"
#include "jetlie/suite.hpp"

namespace jetlie::cli {

namespace cat = jetlie::catalog;
using suite::Outcome;

namespace {

struct Settings {
  std::uint64_t seed = default_seed();
  std::string report_path;
  bool timings = false;
  std::string file;
  std::vector<std::string> only;

  std::string algebra;
  unsigned n = 2;
  int lowest = -1, highest = 1;
  std::string table;
  std::vector<std::string> fields;
  unsigned order = 1;
  std::vector<std::string> invariants;
  std::string system;
  std::string condition;
  std::string solve_for;
  std::optional<std::size_t> expect_rank;
  std::string transformation;
  std::string lhs, rhs;
  bool expect_fail = false;
};

class Context {
 public:
  explicit Context(const Settings& s) {
    if (!s.file.empty()) user_ = dsl::parse_file(s.file, &cat::unit());
  }

  const dsl::SourceUnit& unit() const { return user_ ? *user_ : cat::unit(); }

  VectorField field(const std::string& ref, const std::optional<JetSpace>& on = std::nullopt) const {
    if (ref.find(':') != std::string::npos) return cat::field(ref, on);
    if (user_ && user_->fields.count(ref)) return user_->field(ref);
    throw Error(ErrorCode::UnknownKey, "unknown field '" + ref + "' (catalog fields are written algebra:name)");
  }

  NamedExpr invariant(const std::string& key) const {
    if (user_ && user_->exprs.count(key)) return {key, user_->expr(key).value};
    return {key, cat::invariant(key).value};
  }

  const PdeSystem& system(const std::string& key) const {
    if (user_ && user_->systems.count(key)) return user_->system(key);
    return cat::system(key);
  }

  std::vector<VectorField> fields(const Settings& s, const std::optional<JetSpace>& on = std::nullopt) const {
    std::vector<VectorField> out;
    if (!s.algebra.empty()) {
      auto a = cat::algebra(s.algebra, {s.n, s.lowest, s.highest});
      for (const auto& f : a.fields) out.push_back(on && !(f.space() == *on) ? cat::field(s.algebra + ":" + f.name(), on) : f);
    }
    for (const auto& r : s.fields) out.push_back(field(r, on));
    if (out.empty()) throw Error(ErrorCode::InvalidArgument, "give --algebra or at least one --field");
    return out;
  }

 private:
  std::optional<dsl::SourceUnit> user_;
};

void emit(const suite::Report& r, const Settings& s, std::ostream& out) {
  suite::write_human(out, r, s.timings);
  if (!s.report_path.empty()) {
    std::ofstream f(s.report_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + s.report_path);
    suite::write_structured(f, r, s.timings);
  }
}

suite::Report one(const Settings& s, suite::CheckResult c) {
  suite::Report r;
  r.seed = s.seed;
  r.checks.push_back(std::move(c));
  return r;
}

int cmd_table(const Settings& s, std::ostream& out) {
  Context ctx(s);
  std::string id;
  std::vector<VectorField> fields;
  CommutatorTable table;
  std::vector<std::string> keys;
  if (!s.table.empty()) {
    const auto& decl = ctx.unit().table(s.table);
    for (const auto& g : decl.generators) fields.push_back(ctx.field(g));
    table = decl.table;
    id = s.table;
  } else {
    auto a = cat::algebra(s.algebra.empty() ? "ecga" : s.algebra, {s.n, s.lowest, s.highest});
    fields = a.fields;
    table = a.table;
    id = a.key;
    keys.push_back(a.key);
  }
  auto r = one(s, suite::single("table." + id, "table", "commutators of " + id, keys, !s.expect_fail,
                                [&](std::uint64_t) { return suite::table_check(fields, table); }, s.seed));
  emit(r, s, out);
  return r.exit_code();
}

int cmd_prolong(const Settings& s, std::ostream& out) {
  Context ctx(s);
  if (s.fields.size() != 1) throw Error(ErrorCode::InvalidArgument, "prolong takes exactly one --field");
  auto f = ctx.field(s.fields[0]);
  auto p = prolong(f, s.order);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& c : f.space().coordinates(s.order)) {
    Expr e = p.coefficient(c);
    if (!e.is_zero()) rows.emplace_back(c.name(), e.to_string());
  }
  out << f.name() << " prolonged to order " << s.order << '\n';
  for (const auto& [c, e] : rows) out << "  " << c << ": " << e << '\n';
  if (f.multiplier()) out << "  multiplier: " << f.multiplier()->to_string() << '\n';
  return 0;
}

int cmd_bracket(const Settings& s, std::ostream& out) {
  Context ctx(s);
  if (s.fields.size() != 2) throw Error(ErrorCode::InvalidArgument, "bracket takes exactly two --field options");
  auto b = lie_bracket(ctx.field(s.fields[0]), ctx.field(s.fields[1]));
  out << "[" << s.fields[0] << ", " << s.fields[1] << "] = " << (b.is_zero() ? std::string("0") : b.to_string()) << '\n';
  return 0;
}

int cmd_invariance(const Settings& s, std::ostream& out) {
  Context ctx(s);
  std::function<Outcome(std::uint64_t)> run;
  std::string what;
  std::vector<std::string> keys;
  if (!s.algebra.empty()) keys.push_back(s.algebra);
  if (!s.condition.empty() && (s.system.empty() || !s.invariants.empty()))
    throw Error(ErrorCode::InvalidArgument, "--condition needs --system and no --invariant");
  if (!s.solve_for.empty() && s.condition.empty()) throw Error(ErrorCode::InvalidArgument, "--solve-for needs --condition");
  if (!s.system.empty() && !s.invariants.empty()) {
    const auto& sys = ctx.system(s.system);
    std::vector<NamedExpr> exprs;
    for (const auto& k : s.invariants) exprs.push_back(ctx.invariant(k));
    auto fields = ctx.fields(s, sys.space());
    keys.push_back(s.system);
    keys.insert(keys.end(), s.invariants.begin(), s.invariants.end());
    what = "invariance on the solution manifold of " + s.system;
    run = [&sys, fields, exprs](std::uint64_t seed) { return suite::reduced_check(fields, exprs, sys, seed); };
  } else if (!s.system.empty()) {
    const auto& sys = ctx.system(s.system);
    auto fields = ctx.fields(s, sys.space());
    keys.push_back(s.system);
    if (!s.condition.empty()) {
      if (s.solve_for.empty()) throw Error(ErrorCode::InvalidArgument, "--condition needs --solve-for");
      auto cond = ctx.invariant(s.condition);
      auto lead = sys.space().parse_jet(s.solve_for);
      if (!lead) throw Error(ErrorCode::UnknownSymbol, "no jet coordinate " + s.solve_for);
      keys.push_back(s.condition);
      what = "conditional invariance of " + s.system + " with " + s.condition + " = 0";
      run = [&sys, fields, cond, l = *lead](std::uint64_t seed) {
        return suite::conditional_check(fields, sys, cond, l, seed);
      };
    } else {
      what = "invariance of the solution manifold of " + s.system;
      run = [&sys, fields](std::uint64_t seed) { return suite::manifold_check(fields, sys, seed); };
    }
  } else {
    if (s.invariants.empty()) throw Error(ErrorCode::InvalidArgument, "give --system or --invariant");
    std::vector<NamedExpr> exprs;
    for (const auto& k : s.invariants) exprs.push_back(ctx.invariant(k));
    auto fields = ctx.fields(s);
    keys.insert(keys.end(), s.invariants.begin(), s.invariants.end());
    what = "strict invariance";
    run = [fields, exprs](std::uint64_t seed) { return suite::strict_check(fields, exprs, seed); };
  }
  auto r = one(s, suite::single("invariance", "invariance", what, keys, !s.expect_fail, run, s.seed));
  emit(r, s, out);
  return r.exit_code();
}

int cmd_rank(const Settings& s, std::ostream& out) {
  Context ctx(s);
  std::function<Outcome(std::uint64_t)> run;
  std::vector<std::string> keys;
  std::string what;
  if (!s.invariants.empty()) {
    std::vector<Expr> exprs;
    for (const auto& k : s.invariants) exprs.push_back(ctx.invariant(k).second);
    auto fields_space = cat::space(cat::invariant(s.invariants.front()).space_name);
    keys = s.invariants;
    what = "functional rank";
    run = [exprs, fields_space, &s](std::uint64_t seed) {
      return suite::rank_check(functional_rank(exprs, fields_space, seed), s.expect_rank, "functional");
    };
  } else {
    auto fields = ctx.fields(s);
    keys.push_back(s.algebra);
    what = "orbit rank at order " + std::to_string(s.order);
    run = [fields, &s](std::uint64_t seed) {
      return suite::rank_check(orbit_rank(fields, fields.front().space(), s.order, seed), s.expect_rank, "orbit");
    };
  }
  auto r = one(s, suite::single("rank", "rank", what, keys, true, run, s.seed));
  emit(r, s, out);
  out << "  " << r.checks.front().outcome.detail << '\n';
  return r.exit_code();
}

int cmd_transform(const Settings& s, std::ostream& out) {
  Context ctx(s);
  suite::Report r;
  r.seed = s.seed;
  if (!s.lhs.empty()) {
    const auto& t = ctx.unit().transform(s.transformation);
    dsl::SourceUnit scratch = ctx.unit();
    if (t.parameter()) scratch.params.push_back(*t.parameter());
    Expr lhs = dsl::parse_expr(s.lhs, t.target(), &scratch);
    Expr rhs = dsl::parse_expr(s.rhs.empty() ? s.lhs : s.rhs, t.space(), &scratch);
    r.checks.push_back(suite::single("transform.identity", "transform", "pullback of lhs equals rhs", {s.transformation},
                                     !s.expect_fail,
                                     [&](std::uint64_t seed) { return suite::identity_check(t, lhs, rhs, seed); }, s.seed));
  } else {
    if (!cat::has(s.transformation)) throw Error(ErrorCode::UnknownKey, "unknown transformation '" + s.transformation + "'");
    for (const auto& c : suite::all_checks())
      if (std::find(c.keys.begin(), c.keys.end(), s.transformation) != c.keys.end() && c.group != "mutation")
        r.checks.push_back(suite::run_check(c, s.seed));
  }
  emit(r, s, out);
  return r.exit_code();
}

int cmd_verify(const Settings& s, std::ostream& out) {
  suite::Options opt;
  opt.seed = s.seed;
  opt.only = s.only;
  opt.timings = s.timings;
  auto r = suite::run(opt);
  emit(r, s, out);
  return r.exit_code();
}

void common(CLI::App* c, Settings& s) {
  c->add_option("--seed", s.seed, "seed for random evaluation points (default 20100901, or JETLIE_SEED)");
  c->add_option("--report", s.report_path, "write the structured report (JSON lines) to this path");
  c->add_flag("--timings", s.timings, "include per-check durations");
  c->add_option("--file", s.file, "DSL file whose declarations are added to the catalog");
}

void algebra_opts(CLI::App* c, Settings& s) {
  c->add_option("--algebra", s.algebra, "catalog algebra key");
  c->add_option("--n", s.n, "space dimension for cga_general");
  c->add_option("--lowest", s.lowest, "lowest level for cga_general");
  c->add_option("--highest", s.highest, "highest level for cga_general");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"jetlie: exact symmetry and invariance checks for PDE systems", "jetlie"};
  app.require_subcommand(1);
  app.set_version_flag("--version", suite::version());

  auto* table = app.add_subcommand("table", "verify a commutator table");
  common(table, s);
  algebra_opts(table, s);
  table->add_option("--table", s.table, "table declared in --file");
  table->add_flag("--expect-fail", s.expect_fail, "the table is expected not to hold");

  auto* prolong_cmd = app.add_subcommand("prolong", "print a prolonged field");
  common(prolong_cmd, s);
  prolong_cmd->add_option("--field", s.fields, "field reference, e.g. ecga:X1")->required();
  prolong_cmd->add_option("--order", s.order, "prolongation order");

  auto* bracket = app.add_subcommand("bracket", "print the Lie bracket of two fields");
  common(bracket, s);
  bracket->add_option("--field", s.fields, "two field references")->required();

  auto* invariance = app.add_subcommand("invariance", "strict, manifold or conditional invariance");
  common(invariance, s);
  algebra_opts(invariance, s);
  invariance->add_option("--field", s.fields, "field reference (repeatable)");
  invariance->add_option("--invariant", s.invariants, "expression key (repeatable)");
  invariance->add_option("--system", s.system, "system key");
  invariance->add_option("--condition", s.condition, "expression whose vanishing is adjoined");
  invariance->add_option("--solve-for", s.solve_for, "jet coordinate the condition is solved for");
  invariance->add_flag("--expect-fail", s.expect_fail, "invariance is expected not to hold");

  auto* rank = app.add_subcommand("rank", "orbit rank of an algebra or functional rank of expressions");
  common(rank, s);
  algebra_opts(rank, s);
  rank->add_option("--field", s.fields, "field reference (repeatable)");
  rank->add_option("--order", s.order, "jet order for orbit rank");
  rank->add_option("--invariant", s.invariants, "expression key (repeatable)");
  rank->add_option("--expect", s.expect_rank, "expected rank");

  auto* transform = app.add_subcommand("transform", "identity checks for a point transformation");
  common(transform, s);
  transform->add_option("--transformation", s.transformation, "transformation key")->required();
  transform->add_option("--lhs", s.lhs, "expression on the target space");
  transform->add_option("--rhs", s.rhs, "its expected pullback (defaults to lhs)");
  transform->add_flag("--expect-fail", s.expect_fail, "the identity is expected not to hold");

  auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
  common(verify, s);
  verify->add_option("--only", s.only, "restrict to groups or check ids: " + [] {
    std::string g;
    for (const auto& x : suite::groups()) g += (g.empty() ? "" : ", ") + x;
    return g;
  }());

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*table) return cmd_table(s, out);
    if (*prolong_cmd) return cmd_prolong(s, out);
    if (*bracket) return cmd_bracket(s, out);
    if (*invariance) return cmd_invariance(s, out);
    if (*rank) return cmd_rank(s, out);
    if (*transform) return cmd_transform(s, out);
    if (*verify) return cmd_verify(s, out);
  } catch (const std::exception& e) {
    err << "jetlie: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace jetlie::cli
