#include "jetlie/jetspace.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "jetlie/errors.hpp"

namespace jetlie {

unsigned MultiIndex::order() const {
  unsigned n = 0;
  for (auto c : counts) n += c;
  return n;
}

MultiIndex MultiIndex::plus(std::size_t i) const {
  MultiIndex r = *this;
  r.counts.at(i) += 1;
  return r;
}

namespace {

struct MultiLess {
  bool operator()(const std::pair<std::size_t, std::vector<unsigned>>& a,
                  const std::pair<std::size_t, std::vector<unsigned>>& b) const {
    return a < b;
  }
};

// multisets of size k over n symbols in combinations-with-replacement order
void enumerate(std::size_t n, unsigned k, std::size_t start, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.counts[i] += 1;
    enumerate(n, k - 1, i, cur, out);
    cur.counts[i] -= 1;
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

struct JetSpace::Data {
  std::string name;
  std::vector<Symbol> ind, dep;
  unsigned order = 0;
  unsigned built_order = 0;
  bool separated = false;
  std::map<std::pair<std::size_t, std::vector<unsigned>>, Symbol, MultiLess> jets;
  std::unordered_map<std::uint32_t, CoordinateInfo> info;
  std::vector<std::vector<MultiIndex>> by_order;  // multi-indices of each order
};

JetSpace JetSpace::build(const std::vector<std::string>& independents, const std::vector<std::string>& dependents,
                         unsigned order, std::string name) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "jet space order must be at least 1");
  if (independents.empty()) throw Error(ErrorCode::InvalidArgument, "jet space needs an independent variable");
  std::set<std::string> names;
  for (const auto& n : independents)
    if (!names.insert(n).second) throw Error(ErrorCode::DuplicateName, "duplicate name " + n);
  for (const auto& n : dependents)
    if (!names.insert(n).second) throw Error(ErrorCode::DuplicateName, "duplicate name " + n);

  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->order = order;
  d->built_order = order + 2;
  d->separated = std::any_of(independents.begin(), independents.end(), [](const auto& n) { return n.size() != 1; });
  const std::size_t n = independents.size();
  for (std::size_t i = 0; i < n; ++i) {
    Symbol s = Symbol::intern(independents[i], SymbolKind::Independent);
    d->ind.push_back(s);
    d->info[s.id()] = CoordinateInfo{CoordinateRole::Independent, i, {}};
  }
  d->by_order.resize(d->built_order + 1);
  d->by_order[0].push_back(MultiIndex{std::vector<unsigned>(n, 0)});
  for (unsigned k = 1; k <= d->built_order; ++k) {
    MultiIndex cur{std::vector<unsigned>(n, 0)};
    enumerate(n, k, 0, cur, d->by_order[k]);
  }
  JetSpace space;
  space.d_ = d;
  for (std::size_t a = 0; a < dependents.size(); ++a) {
    Symbol s = Symbol::intern(dependents[a], SymbolKind::Dependent);
    d->dep.push_back(s);
    MultiIndex zero{std::vector<unsigned>(n, 0)};
    d->info[s.id()] = CoordinateInfo{CoordinateRole::Dependent, a, zero};
    d->jets[{a, zero.counts}] = s;
  }
  for (unsigned k = 1; k <= d->built_order; ++k)
    for (std::size_t a = 0; a < dependents.size(); ++a)
      for (const auto& J : d->by_order[k]) {
        std::string jn = space.jet_name(a, J);
        if (names.count(jn)) throw Error(ErrorCode::DuplicateName, "jet coordinate " + jn + " clashes with a variable");
        Symbol s = Symbol::intern(jn, SymbolKind::JetCoordinate);
        d->jets[{a, J.counts}] = s;
        d->info[s.id()] = CoordinateInfo{CoordinateRole::Jet, a, J};
      }
  return space;
}

const std::string& JetSpace::name() const { return d_->name; }
const std::vector<Symbol>& JetSpace::independents() const { return d_->ind; }
const std::vector<Symbol>& JetSpace::dependents() const { return d_->dep; }
unsigned JetSpace::max_order() const { return d_->order; }

std::string JetSpace::jet_name(std::size_t dependent, const MultiIndex& J) const {
  std::string s = d_->dep.at(dependent).name();
  if (J.order() == 0) return s;
  s += "_";
  bool first = true;
  for (std::size_t i = 0; i < J.counts.size(); ++i)
    for (unsigned c = 0; c < J.counts[i]; ++c) {
      if (d_->separated && !first) s += "_";
      s += d_->ind[i].name();
      first = false;
    }
  return s;
}

Symbol JetSpace::jet(std::size_t dependent, const MultiIndex& J) const {
  if (J.order() > d_->built_order)
    throw Error(ErrorCode::OrderExceeded, "jet order " + std::to_string(J.order()) + " beyond space " + d_->name);
  auto it = d_->jets.find({dependent, J.counts});
  if (it == d_->jets.end()) throw Error(ErrorCode::InvalidArgument, "unknown jet coordinate");
  return it->second;
}

Symbol JetSpace::jet(std::size_t dependent, const std::vector<std::size_t>& indices) const {
  MultiIndex J{std::vector<unsigned>(d_->ind.size(), 0)};
  for (auto i : indices) J.counts.at(i) += 1;
  return jet(dependent, J);
}

Symbol JetSpace::independent(std::string_view name) const {
  for (auto s : d_->ind)
    if (s.name() == name) return s;
  throw Error(ErrorCode::UnknownSymbol, "no independent variable " + std::string(name) + " in " + d_->name);
}

Symbol JetSpace::dependent(std::string_view name) const {
  for (auto s : d_->dep)
    if (s.name() == name) return s;
  throw Error(ErrorCode::UnknownSymbol, "no dependent variable " + std::string(name) + " in " + d_->name);
}

std::vector<Symbol> JetSpace::coordinates(unsigned order) const {
  std::vector<Symbol> out = d_->ind;
  out.insert(out.end(), d_->dep.begin(), d_->dep.end());
  auto jets = jet_coordinates(order);
  out.insert(out.end(), jets.begin(), jets.end());
  return out;
}

std::vector<Symbol> JetSpace::jet_coordinates(unsigned order) const {
  if (order > d_->order) throw Error(ErrorCode::OrderExceeded, "order beyond max_order of " + d_->name);
  std::vector<Symbol> out;
  for (unsigned k = 1; k <= order; ++k)
    for (std::size_t a = 0; a < d_->dep.size(); ++a)
      for (const auto& J : d_->by_order[k]) out.push_back(jet(a, J));
  return out;
}

std::size_t JetSpace::coordinate_count(unsigned order) const {
  const std::size_t n = d_->ind.size();
  std::size_t per_dep = 0;
  for (unsigned k = 0; k <= order; ++k) per_dep += binomial(n + k - 1, k);
  return n + d_->dep.size() * per_dep;
}

CoordinateInfo JetSpace::info(Symbol s) const {
  auto it = d_->info.find(s.id());
  if (it == d_->info.end()) return {};
  return it->second;
}

bool JetSpace::is_base(Symbol s) const {
  auto r = info(s).role;
  return r == CoordinateRole::Independent || r == CoordinateRole::Dependent;
}

unsigned JetSpace::order_of(const Expr& e) const {
  unsigned k = 0;
  for (auto s : e.free_symbols()) {
    auto i = info(s);
    if (i.role == CoordinateRole::Jet) k = std::max(k, i.order());
  }
  return k;
}

std::optional<Symbol> JetSpace::parse_jet(std::string_view spelling) const {
  for (std::size_t a = 0; a < d_->dep.size(); ++a) {
    const std::string& dn = d_->dep[a].name();
    if (spelling.size() <= dn.size() + 1 || spelling.substr(0, dn.size()) != dn || spelling[dn.size()] != '_') continue;
    std::string_view rest = spelling.substr(dn.size() + 1);
    MultiIndex J{std::vector<unsigned>(d_->ind.size(), 0)};
    bool ok = true;
    if (d_->separated) {
      std::size_t pos = 0;
      while (pos <= rest.size() && ok) {
        auto next = rest.find('_', pos);
        std::string_view part = rest.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        auto it = std::find_if(d_->ind.begin(), d_->ind.end(), [&](Symbol s) { return s.name() == part; });
        if (it == d_->ind.end()) ok = false;
        else J.counts[static_cast<std::size_t>(it - d_->ind.begin())] += 1;
        if (next == std::string_view::npos) break;
        pos = next + 1;
      }
    } else {
      for (char ch : rest) {
        auto it = std::find_if(d_->ind.begin(), d_->ind.end(), [&](Symbol s) { return s.name()[0] == ch; });
        if (it == d_->ind.end()) {
          ok = false;
          break;
        }
        J.counts[static_cast<std::size_t>(it - d_->ind.begin())] += 1;
      }
    }
    if (ok && J.order() > 0 && J.order() <= d_->built_order) return jet(a, J);
  }
  return std::nullopt;
}

bool operator==(const JetSpace& a, const JetSpace& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return a.d_->ind == b.d_->ind && a.d_->dep == b.d_->dep && a.d_->order == b.d_->order;
}

std::string JetSpace::to_string() const {
  std::string s = "space " + d_->name + " { independent ";
  for (std::size_t i = 0; i < d_->ind.size(); ++i) s += (i ? ", " : "") + d_->ind[i].name();
  s += "; dependent ";
  for (std::size_t i = 0; i < d_->dep.size(); ++i) s += (i ? ", " : "") + d_->dep[i].name();
  s += "; order " + std::to_string(d_->order) + " }";
  return s;
}

Expr total_derivative(const Expr& e, std::size_t i, const JetSpace& space, bool allow_escalation) {
  Expr out = e.derivative(space.independents().at(i));
  for (auto s : e.free_symbols()) {
    auto inf = space.info(s);
    if (inf.role != CoordinateRole::Dependent && inf.role != CoordinateRole::Jet) continue;
    if (!allow_escalation && inf.order() >= space.max_order())
      throw Error(ErrorCode::OrderExceeded, "total derivative of " + s.name() + " exceeds order " +
                                                std::to_string(space.max_order()) + " of space " + space.name());
    Expr d = e.derivative(s);
    if (d.is_zero()) continue;
    out += Expr(space.jet(inf.index, inf.multi.plus(i))) * d;
  }
  return out;
}

}  // namespace jetlie
