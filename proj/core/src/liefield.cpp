#include "jetlie/liefield.hpp"

#include <algorithm>
#include <set>

#include "jetlie/errors.hpp"

namespace jetlie {

namespace {

std::string scaled_term(const Expr& c, const std::string& what) {
  if (c == Expr(1)) return what;
  if (c == Expr(-1)) return "-" + what;
  std::string cs = c.to_string();
  bool simple = c.is_rational_function() && !c.terms().empty() && c.terms()[0].second.is_polynomial() &&
                c.terms()[0].second.num().size() == 1;
  return simple ? cs + "*" + what : "(" + cs + ")*" + what;
}

void append_signed(std::string& out, const std::string& term) {
  if (out.empty())
    out = term;
  else if (term[0] == '-')
    out += " - " + term.substr(1);
  else
    out += " + " + term;
}

}  // namespace

VectorField::VectorField(JetSpace space, std::string name, const std::map<Symbol, Expr>& coefficients,
                         std::optional<Expr> multiplier)
    : space_(std::move(space)), name_(std::move(name)) {
  if (!space_.valid()) throw Error(ErrorCode::InvalidArgument, "vector field without a space");
  for (const auto& [s, c] : coefficients) {
    if (!space_.is_base(s))
      throw Error(ErrorCode::InvalidArgument, s.name() + " is not a base coordinate of space " + space_.name());
    for (auto v : c.free_symbols())
      if (space_.info(v).role == CoordinateRole::Jet)
        throw Error(ErrorCode::InvalidArgument, "coefficient of " + s.name() + " involves jet coordinate " + v.name());
    if (!c.is_zero()) coef_.emplace(s, c);
  }
  if (multiplier && !multiplier->is_zero()) multiplier_ = multiplier;
}

Expr VectorField::coefficient(Symbol s) const {
  auto it = coef_.find(s);
  return it == coef_.end() ? Expr() : it->second;
}

bool VectorField::is_zero() const { return coef_.empty() && !multiplier_; }

VectorField VectorField::renamed(std::string name) const {
  VectorField r = *this;
  r.name_ = std::move(name);
  return r;
}

VectorField VectorField::scaled(const Expr& c) const {
  std::map<Symbol, Expr> m;
  for (const auto& [s, e] : coef_) m.emplace(s, c * e);
  std::optional<Expr> mult;
  if (multiplier_) mult = c * *multiplier_;
  return VectorField(space_, name_, m, mult);
}

VectorField VectorField::with_coefficient(Symbol s, const Expr& c) const {
  auto m = coef_;
  m[s] = c;
  return VectorField(space_, name_, m, multiplier_);
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  if (!(a.space_ == b.space_)) throw Error(ErrorCode::SpaceMismatch, "adding fields on different spaces");
  auto m = a.coef_;
  for (const auto& [s, e] : b.coef_) m[s] = m.count(s) ? m[s] + e : e;
  std::optional<Expr> mult = a.multiplier_;
  if (b.multiplier_) mult = mult ? *mult + *b.multiplier_ : *b.multiplier_;
  return VectorField(a.space_, a.name_, m, mult);
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + b.scaled(Expr(-1)); }

bool operator==(const VectorField& a, const VectorField& b) {
  if (!(a.space_ == b.space_) || a.coef_.size() != b.coef_.size()) return false;
  for (const auto& [s, e] : a.coef_) {
    auto it = b.coef_.find(s);
    if (it == b.coef_.end() || !(it->second == e)) return false;
  }
  if (a.multiplier_.has_value() != b.multiplier_.has_value()) return false;
  return !a.multiplier_ || *a.multiplier_ == *b.multiplier_;
}

std::string VectorField::to_string() const {
  std::string out;
  auto emit = [&](Symbol s) {
    auto it = coef_.find(s);
    if (it != coef_.end()) append_signed(out, scaled_term(it->second, "@" + s.name()));
  };
  for (auto s : space_.independents()) emit(s);
  for (auto s : space_.dependents()) emit(s);
  if (multiplier_) append_signed(out, "scalar(" + multiplier_->to_string() + ")");
  return out.empty() ? "0" : out;
}

Expr ProlongedField::coefficient(Symbol s) const {
  auto it = coef_.find(s);
  return it == coef_.end() ? Expr() : it->second;
}

ProlongedField prolong(const VectorField& f, unsigned order) {
  if (f.multiplier())
    throw Error(ErrorCode::MultiplierNotProlongable, "field " + f.name() + " carries a zero-order multiplier");
  const JetSpace& sp = f.space();
  if (order > sp.max_order())
    throw Error(ErrorCode::OrderExceeded, "prolongation order " + std::to_string(order) + " beyond space " + sp.name());
  const std::size_t n = sp.independents().size();
  std::map<Symbol, Expr> coef = f.coefficients();
  // D_i xi^j
  std::vector<std::vector<Expr>> dxi(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dxi[i][j] = total_derivative(f.xi(j), i, sp);

  std::map<Symbol, Expr> all;  // includes zero entries for parents
  for (std::size_t a = 0; a < sp.dependents().size(); ++a) all[sp.dependents()[a]] = f.eta(a);
  {
    for (auto s : sp.jet_coordinates(order)) {
      auto inf = sp.info(s);
      std::size_t i = n;
      while (i > 0 && inf.multi.counts[i - 1] == 0) --i;
      --i;
      MultiIndex parent = inf.multi;
      parent.counts[i] -= 1;
      Symbol ps = sp.jet(inf.index, parent);
      Expr v = total_derivative(all[ps], i, sp);
      for (std::size_t j = 0; j < n; ++j)
        if (!dxi[i][j].is_zero()) v -= dxi[i][j] * Expr(sp.jet(inf.index, parent.plus(j)));
      all[s] = v;
      if (!v.is_zero()) coef[s] = v;
    }
  }
  return ProlongedField(f, order, std::move(coef));
}

Expr apply(const VectorField& f, const Expr& e) {
  Expr out;
  for (const auto& [s, c] : f.coefficients()) {
    if (!e.contains(s)) continue;
    out += c * e.derivative(s);
  }
  return out;
}

Expr apply_operator(const VectorField& f, const Expr& e) {
  Expr out = apply(f, e);
  if (f.multiplier()) out += *f.multiplier() * e;
  return out;
}

std::vector<std::pair<Expr, Expr>> apply_terms(const ProlongedField& f, const Expr& e) {
  const JetSpace& sp = f.base().space();
  std::vector<std::pair<Expr, Expr>> out;
  for (auto s : e.free_symbols()) {
    auto inf = sp.info(s);
    if (inf.role == CoordinateRole::Jet && inf.order() > f.order())
      throw Error(ErrorCode::OrderExceeded, s.name() + " is beyond prolongation order " + std::to_string(f.order()));
    auto it = f.coefficients().find(s);
    if (it == f.coefficients().end()) continue;
    out.emplace_back(it->second, e.derivative(s));
  }
  return out;
}

Expr apply(const ProlongedField& f, const Expr& e) {
  Expr out;
  for (const auto& [c, d] : apply_terms(f, e)) out += c * d;
  return out;
}

VectorField lie_bracket(const VectorField& a, const VectorField& b) {
  if (!(a.space() == b.space()))
    throw Error(ErrorCode::SpaceMismatch, "bracket of " + a.name() + " and " + b.name() + " on different spaces");
  std::set<Symbol> keys;
  for (const auto& [s, c] : a.coefficients()) keys.insert(s);
  for (const auto& [s, c] : b.coefficients()) keys.insert(s);
  std::map<Symbol, Expr> m;
  for (auto s : keys) m[s] = apply(a, b.coefficient(s)) - apply(b, a.coefficient(s));
  std::optional<Expr> mult;
  if (a.multiplier() || b.multiplier()) {
    Expr a0 = a.multiplier().value_or(Expr()), b0 = b.multiplier().value_or(Expr());
    mult = apply(a, b0) - apply(b, a0);
  }
  return VectorField(a.space(), "[" + a.name() + "," + b.name() + "]", m, mult);
}

std::map<Symbol, Expr> lie_bracket(const ProlongedField& a, const ProlongedField& b) {
  std::set<Symbol> keys;
  for (const auto& [s, c] : a.coefficients()) keys.insert(s);
  for (const auto& [s, c] : b.coefficients()) keys.insert(s);
  std::map<Symbol, Expr> out;
  for (auto s : keys) {
    Expr v = apply(a, b.coefficient(s)) - apply(b, a.coefficient(s));
    if (!v.is_zero()) out.emplace(s, v);
  }
  return out;
}

void CommutatorTable::set(const std::string& a, const std::string& b, LinearCombination value) {
  entries_[{a, b}] = std::move(value);
}

bool CommutatorTable::listed(const std::string& a, const std::string& b) const {
  return entries_.count({a, b}) || entries_.count({b, a});
}

void CommutatorTable::leave_unchecked(const std::string& a, const std::string& b) { unchecked_.insert({a, b}); }

bool CommutatorTable::unchecked(const std::string& a, const std::string& b) const {
  return unchecked_.count({a, b}) || unchecked_.count({b, a});
}

LinearCombination CommutatorTable::get(const std::string& a, const std::string& b) const {
  if (auto it = entries_.find({a, b}); it != entries_.end()) return it->second;
  if (auto it = entries_.find({b, a}); it != entries_.end()) {
    LinearCombination neg = it->second;
    for (auto& t : neg) t.coefficient = -t.coefficient;
    return neg;
  }
  return {};
}

std::vector<std::string> CommutatorTable::names() const {
  std::set<std::string> out;
  for (const auto& [k, v] : entries_) {
    out.insert(k.first);
    out.insert(k.second);
    for (const auto& t : v) out.insert(t.generator);
  }
  return {out.begin(), out.end()};
}

VectorField combine(const LinearCombination& lc, const std::vector<VectorField>& fields, const JetSpace& space) {
  VectorField out(space, "", {});
  for (const auto& t : lc) {
    auto it = std::find_if(fields.begin(), fields.end(), [&](const VectorField& f) { return f.name() == t.generator; });
    if (it == fields.end()) throw Error(ErrorCode::UnknownGeneratorName, "unknown generator " + t.generator);
    out = out + it->scaled(t.coefficient);
  }
  return out;
}

std::string to_string(const LinearCombination& lc) {
  std::string out;
  for (const auto& t : lc) append_signed(out, scaled_term(t.coefficient, t.generator));
  return out.empty() ? "0" : out;
}

bool TableReport::all_pass() const { return failures() == 0; }

std::size_t TableReport::failures() const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const PairResult& p) { return !p.pass; }));
}

TableReport verify_table(const std::vector<VectorField>& fields, const CommutatorTable& table) {
  std::set<std::string> known;
  for (const auto& f : fields) known.insert(f.name());
  for (const auto& n : table.names())
    if (!known.count(n)) throw Error(ErrorCode::UnknownGeneratorName, "table mentions unknown generator " + n);
  TableReport report;
  if (fields.empty()) return report;
  const JetSpace& space = fields.front().space();
  for (std::size_t i = 0; i < fields.size(); ++i)
    for (std::size_t j = i + 1; j < fields.size(); ++j) {
      if (table.unchecked(fields[i].name(), fields[j].name())) {
        ++report.skipped;
        continue;
      }
      PairResult r;
      r.a = fields[i].name();
      r.b = fields[j].name();
      r.expected = table.get(r.a, r.b);
      VectorField br = lie_bracket(fields[i], fields[j]);
      r.residual = (br - combine(r.expected, fields, space)).renamed("residual");
      r.pass = r.residual.is_zero();
      report.pairs.push_back(std::move(r));
    }
  return report;
}

VectorField jacobiator(const VectorField& a, const VectorField& b, const VectorField& c) {
  return lie_bracket(lie_bracket(a, b), c) + lie_bracket(lie_bracket(b, c), a) + lie_bracket(lie_bracket(c, a), b);
}

}  // namespace jetlie
