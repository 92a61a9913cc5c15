#include "jetlie/invariance.hpp"

#include <algorithm>
#include <set>

#include "jetlie/errors.hpp"

namespace jetlie {

namespace {

std::vector<Symbol> by_name(std::vector<Symbol> v) {
  std::sort(v.begin(), v.end(), [](Symbol a, Symbol b) { return a.name() < b.name(); });
  return v;
}

bool mentions_any(const Expr& e, const Substitution& keys) {
  for (auto s : e.free_symbols())
    if (keys.count(s)) return true;
  return false;
}

Substitution compose(const std::string& name, Substitution sf, const AssumptionRegistry& reg) {
  for (const auto& [k, v] : sf)
    if (v.contains(k)) throw Error(ErrorCode::InconsistentSolvedForm, name + ": " + k.name() + " occurs in its own solution");
  for (std::size_t round = 0; round <= sf.size(); ++round) {
    bool dirty = false;
    for (auto& [k, v] : sf)
      if (mentions_any(v, sf)) {
        dirty = true;
        v = substitute(v, sf, reg);
      }
    if (!dirty) return sf;
  }
  throw Error(ErrorCode::InconsistentSolvedForm, name + ": solved form is cyclic");
}

}  // namespace

PdeSystem::PdeSystem(std::string name, JetSpace space, std::vector<NamedExpr> equations, Substitution solved_form,
                     AssumptionRegistry reg)
    : name_(std::move(name)), space_(std::move(space)), equations_(std::move(equations)), reg_(std::move(reg)) {
  for (const auto& [k, v] : solved_form)
    if (space_.info(k).role == CoordinateRole::Other)
      throw Error(ErrorCode::InvalidArgument, name_ + ": " + k.name() + " is not a coordinate of " + space_.name());
  solved_ = compose(name_, std::move(solved_form), reg_);
  if (solved_.empty()) return;
  for (const auto& [n, e] : equations_)
    if (!substitute(e, solved_, reg_).is_zero())
      throw Error(ErrorCode::InconsistentSolvedForm, name_ + ": solved form does not satisfy equation " + n);
}

unsigned PdeSystem::order() const {
  unsigned o = 0;
  for (const auto& [n, e] : equations_) o = std::max(o, space_.order_of(e));
  return o;
}

Expr PdeSystem::on_manifold(const Expr& e) const {
  if (solved_.empty()) return e;
  Expr r = substitute(e, solved_, reg_);
  for (auto s : r.free_symbols())
    if (solved_.count(s))
      throw Error(ErrorCode::LeadingDerivativeRemains, name_ + ": " + s.name() + " remains after substitution");
  return r;
}

PdeSystem PdeSystem::augmented(std::string name, const std::vector<NamedExpr>& conditions,
                               const Substitution& extra) const {
  auto eqs = equations_;
  eqs.insert(eqs.end(), conditions.begin(), conditions.end());
  Substitution sf;
  for (const auto& [k, v] : solved_) sf.emplace(k, v);
  for (const auto& [k, v] : extra) {
    if (sf.count(k)) throw Error(ErrorCode::InconsistentSolvedForm, name + ": " + k.name() + " solved twice");
    sf.emplace(k, v);
  }
  return PdeSystem(std::move(name), space_, std::move(eqs), std::move(sf), reg_);
}

Expr solve_linear(const Expr& e, Symbol v) {
  Expr a = e.derivative(v);
  if (a.is_zero() || a.contains(v))
    throw Error(ErrorCode::InvalidArgument, v.name() + " does not occur linearly");
  Expr b = e - a * Expr(v);
  if (b.contains(v)) throw Error(ErrorCode::InvalidArgument, v.name() + " does not occur linearly");
  return -b / a;
}

bool InvarianceReport::all_invariant() const { return failures() == 0; }

std::size_t InvarianceReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const InvarianceEntry& e) { return !e.invariant; }));
}

std::optional<std::pair<Assignment, Rational>> find_witness(const Expr& e, std::uint64_t seed, int tries) {
  if (e.is_zero()) return std::nullopt;
  PointSampler rng(seed);
  auto syms = by_name(e.free_symbols());
  for (int k = 0; k < tries; ++k) {
    Assignment at = rng.sample(syms);
    try {
      auto parts = eval_parts(e, at);
      std::optional<Rational> only;
      int nonzero = 0;
      for (const auto& [m, v] : parts)
        if (v != 0) {
          ++nonzero;
          only = v;
        }
      if (nonzero == 1) return std::make_pair(at, *only);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::SingularPoint && err.code() != ErrorCode::IrrationalValue) throw;
    }
  }
  return std::nullopt;
}

namespace {

InvarianceEntry make_entry(const std::string& field, const std::string& eq, Expr residual,
                           const InvarianceOptions& opt) {
  InvarianceEntry out;
  out.field = field;
  out.equation = eq;
  out.residual = std::move(residual);
  if (!opt.split.empty() && !out.residual.is_zero()) out.split = collect(out.residual, opt.split);
  out.invariant = out.residual.is_zero();
  if (!out.invariant) {
    if (auto w = find_witness(out.residual, opt.seed)) {
      out.witness = w->first;
      out.witness_value = w->second;
    }
  }
  return out;
}

unsigned max_order(const JetSpace& sp, const std::vector<NamedExpr>& exprs) {
  unsigned o = 0;
  for (const auto& [n, e] : exprs) o = std::max(o, sp.order_of(e));
  return o;
}

}  // namespace

InvarianceReport strict_invariance(const std::vector<VectorField>& fields, const std::vector<NamedExpr>& exprs,
                                   const InvarianceOptions& opt) {
  InvarianceReport rep;
  for (const auto& f : fields) {
    auto pf = prolong(f, max_order(f.space(), exprs));
    for (const auto& [n, e] : exprs) rep.entries.push_back(make_entry(f.name(), n, apply(pf, e), opt));
  }
  return rep;
}

InvarianceReport manifold_invariance(const std::vector<VectorField>& fields, const PdeSystem& sys,
                                     const InvarianceOptions& opt) {
  InvarianceReport rep;
  std::vector<Symbol> leading;
  for (const auto& [k, v] : sys.solved_form()) leading.push_back(k);
  leading = by_name(leading);
  for (const auto& f : fields) {
    if (!(f.space() == sys.space()))
      throw Error(ErrorCode::SpaceMismatch, f.name() + " and " + sys.name() + " live on different spaces");
    auto pf = prolong(f, sys.order());
    for (const auto& [n, e] : sys.equations()) {
      auto entry = make_entry(f.name(), n, sys.on_manifold(apply(pf, e)), opt);
      entry.substituted = leading;
      rep.entries.push_back(std::move(entry));
    }
  }
  return rep;
}

InvarianceReport conditional_invariance(const std::vector<VectorField>& fields, const PdeSystem& sys,
                                        const std::vector<NamedExpr>& conditions, const Substitution& condition_solved,
                                        const InvarianceOptions& opt) {
  if (conditions.empty() && condition_solved.empty()) return manifold_invariance(fields, sys, opt);
  return manifold_invariance(fields, sys.augmented(sys.name() + "+conditions", conditions, condition_solved), opt);
}

std::size_t rank_of(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Each row may carry one common radical factor, which does not change the rank.
std::vector<Rational> eval_row(const std::vector<Expr>& row, const Assignment& at) {
  std::optional<RadicalMonomial> common;
  std::vector<Rational> out;
  for (const auto& e : row) {
    Rational v = 0;
    for (const auto& [m, x] : eval_parts(e, at)) {
      if (x == 0) continue;
      if (common && !(*common == m))
        throw Error(ErrorCode::IrrationalValue, "row mixes radical factors");
      common = m;
      v = x;
    }
    out.push_back(v);
  }
  return out;
}

RankResult rank_at_two_points(const std::vector<std::vector<Expr>>& rows, std::size_t cols, std::uint64_t seed) {
  std::set<Symbol> syms;
  for (const auto& r : rows)
    for (const auto& e : r)
      for (auto s : e.free_symbols()) syms.insert(s);
  auto order = by_name({syms.begin(), syms.end()});
  RankResult res;
  res.columns = cols;
  std::vector<std::size_t> ranks;
  for (std::uint64_t sd : {seed, seed ^ std::uint64_t{0x9e3779b97f4a7c15}}) {
    PointSampler rng(sd);
    bool done = false;
    for (int attempt = 0; attempt < 16 && !done; ++attempt) {
      Assignment at = rng.sample(order);
      try {
        std::vector<std::vector<Rational>> m;
        for (const auto& r : rows) m.push_back(eval_row(r, at));
        ranks.push_back(rank_of(std::move(m)));
        res.points.push_back(at);
        done = true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularPoint) throw;
      }
    }
    if (!done) throw Error(ErrorCode::DegeneratePoint, "no regular sample point found");
  }
  if (ranks[0] != ranks[1])
    throw Error(ErrorCode::RankDisagreement,
                "ranks " + std::to_string(ranks[0]) + " and " + std::to_string(ranks[1]) + " disagree");
  res.rank = ranks[0];
  return res;
}

}  // namespace

RankResult orbit_rank(const std::vector<VectorField>& fields, const JetSpace& space, unsigned order,
                      std::uint64_t seed) {
  auto coords = space.coordinates(order);
  std::vector<std::vector<Expr>> rows;
  for (const auto& f : fields) {
    if (!(f.space() == space)) throw Error(ErrorCode::SpaceMismatch, f.name() + " is not on " + space.name());
    auto pf = prolong(f, order);
    std::vector<Expr> row;
    for (auto c : coords) row.push_back(pf.coefficient(c));
    rows.push_back(std::move(row));
  }
  return rank_at_two_points(rows, coords.size(), seed);
}

RankResult functional_rank(const std::vector<Expr>& exprs, const JetSpace& space, std::uint64_t seed) {
  auto coords = space.coordinates(space.max_order());
  std::vector<std::vector<Expr>> rows;
  for (const auto& e : exprs) {
    std::vector<Expr> row;
    for (auto c : coords) row.push_back(e.derivative(c));
    rows.push_back(std::move(row));
  }
  return rank_at_two_points(rows, coords.size(), seed);
}

}  // namespace jetlie
