#include "jetlie/pointtransform.hpp"

#include "jetlie/errors.hpp"

namespace jetlie {

PointTransformation::PointTransformation(std::string name, JetSpace space, std::optional<Symbol> parameter,
                                         Substitution base_maps, JetSpace target)
    : name_(std::move(name)), space_(std::move(space)), target_(std::move(target)), parameter_(parameter),
      base_(std::move(base_maps)) {
  if (!target_.valid()) target_ = space_;
  for (const auto& [s, e] : base_) {
    if (!target_.is_base(s))
      throw Error(ErrorCode::InvalidArgument, s.name() + " is not a base coordinate of " + target_.name());
    for (auto v : e.free_symbols())
      if (space_.info(v).role == CoordinateRole::Jet)
        throw Error(ErrorCode::InvalidArgument, "map of " + s.name() + " involves jet coordinate " + v.name());
  }
}

PointTransformation PointTransformation::with_registry(AssumptionRegistry reg) const {
  auto r = *this;
  r.reg_ = std::move(reg);
  return r;
}

PointTransformation PointTransformation::with_side_relation(SideRelation rel) const {
  auto r = *this;
  r.side_ = std::move(rel);
  return r;
}

PointTransformation PointTransformation::with_series(Substitution series) const {
  auto r = *this;
  r.series_ = std::move(series);
  return r;
}

PointTransformation PointTransformation::with_derivative_maps(Substitution maps, unsigned order) const {
  auto r = *this;
  r.jets_ = std::move(maps);
  r.order_ = order;
  return r;
}

Expr PointTransformation::image(Symbol c) const {
  if (auto it = base_.find(c); it != base_.end()) return it->second;
  if (auto it = jets_.find(c); it != jets_.end()) return it->second;
  if (target_.info(c).role == CoordinateRole::Jet)
    throw Error(ErrorCode::MissingDerivativeMap, "no derivative map for " + c.name() + " in " + name_);
  return Expr(c);
}

Expr PointTransformation::normalize(const Expr& e) const { return side_ ? reduce(e, *side_) : e; }

std::string PointTransformation::to_string() const {
  std::string out;
  auto emit = [&](Symbol s) {
    if (auto it = base_.find(s); it != base_.end()) {
      if (!out.empty()) out += ", ";
      out += s.name() + " -> " + it->second.to_string();
    }
  };
  for (auto s : target_.independents()) emit(s);
  for (auto s : target_.dependents()) emit(s);
  return out;
}

std::vector<std::vector<Expr>> inverse_matrix(std::vector<std::vector<Expr>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::ArityError, "matrix is not square");
  std::vector<std::vector<Expr>> inv(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Expr(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorCode::SingularJacobian, "singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Expr p = m[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] = m[col][j] * p;
      inv[col][j] = inv[col][j] * p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Expr f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

PointTransformation prolong_transformation(const PointTransformation& t, unsigned order) {
  const JetSpace& src = t.space();
  const JetSpace& tgt = t.target();
  if (order > src.max_order() || order > tgt.max_order())
    throw Error(ErrorCode::OrderExceeded, "transformation prolongation beyond space order");
  const std::size_t n = src.independents().size();
  if (tgt.independents().size() != n)
    throw Error(ErrorCode::SpaceMismatch, "source and target differ in number of independents");

  // A[i][j] = D_i X^j
  std::vector<std::vector<Expr>> a(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = t.normalize(total_derivative(t.image(tgt.independents()[j]), i, src));
  std::vector<std::vector<Expr>> ainv;
  try {
    ainv = inverse_matrix(a);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularJacobian) throw;
    throw Error(ErrorCode::SingularJacobian, "Jacobian of " + t.name() + " is singular");
  }
  for (auto& row : ainv)
    for (auto& x : row) x = t.normalize(x);

  Substitution maps;
  auto image_of = [&](Symbol s) -> Expr {
    if (auto it = maps.find(s); it != maps.end()) return it->second;
    return t.image(s);
  };
  for (auto s : tgt.jet_coordinates(order)) {
    if (maps.count(s)) continue;
    auto inf = tgt.info(s);
    std::size_t i = n;
    while (i > 0 && inf.multi.counts[i - 1] == 0) --i;
    MultiIndex parent = inf.multi;
    parent.counts[i - 1] -= 1;
    Expr up = image_of(tgt.jet(inf.index, parent));
    std::vector<Expr> b(n);
    for (std::size_t k = 0; k < n; ++k) b[k] = total_derivative(up, k, src);
    // U_{J+e_j} = sum_k Ainv[j][k] b_k
    for (std::size_t j = 0; j < n; ++j) {
      Symbol child = tgt.jet(inf.index, parent.plus(j));
      if (maps.count(child)) continue;
      Expr v;
      for (std::size_t k = 0; k < n; ++k)
        if (!ainv[j][k].is_zero() && !b[k].is_zero()) v += ainv[j][k] * b[k];
      maps.emplace(child, t.normalize(v));
    }
  }
  return t.with_derivative_maps(std::move(maps), order);
}

Expr pullback(const PointTransformation& t, const Expr& e) {
  Substitution sigma;
  for (auto s : e.free_symbols()) {
    auto inf = t.target().info(s);
    if (inf.role == CoordinateRole::Other) continue;
    Expr img = t.image(s);
    if (!(img == Expr(s))) sigma.emplace(s, img);
  }
  return t.normalize(substitute(e, sigma, t.registry()));
}

namespace {

Expr d_dp_at_zero(const PointTransformation& t, const Expr& e) {
  if (!t.parameter()) throw Error(ErrorCode::InvalidArgument, t.name() + " has no parameter");
  Symbol p = *t.parameter();
  Expr x = t.series().empty() ? e : substitute(e, t.series(), t.registry());
  return substitute(x.derivative(p), Substitution{{p, Expr(0)}}, t.registry());
}

}  // namespace

VectorField infinitesimal(const PointTransformation& t, std::string name) {
  if (!(t.space() == t.target()))
    throw Error(ErrorCode::SpaceMismatch, "infinitesimal needs a transformation of one space onto itself");
  std::map<Symbol, Expr> coef;
  for (const auto& [s, e] : t.base_maps()) coef.emplace(s, -d_dp_at_zero(t, e));
  return VectorField(t.space(), name.empty() ? t.name() : std::move(name), coef);
}

VectorField transport(const VectorField& f, const PointTransformation& t) {
  if (!(f.space() == t.target())) throw Error(ErrorCode::SpaceMismatch, "field does not live on the target space");
  if (t.parameter()) throw Error(ErrorCode::InvalidArgument, "transport needs a parameter-free change of variables");
  std::vector<Symbol> olds, news;
  for (auto s : t.target().independents()) olds.push_back(s);
  for (auto s : t.target().dependents()) olds.push_back(s);
  for (auto s : t.space().independents()) news.push_back(s);
  for (auto s : t.space().dependents()) news.push_back(s);
  if (olds.size() != news.size()) throw Error(ErrorCode::SingularJacobian, "spaces differ in dimension");
  std::vector<std::vector<Expr>> m(olds.size(), std::vector<Expr>(news.size()));
  for (std::size_t c = 0; c < olds.size(); ++c)
    for (std::size_t k = 0; k < news.size(); ++k) m[c][k] = t.image(olds[c]).derivative(news[k]);
  auto inv = inverse_matrix(m);
  Substitution sigma;
  for (auto s : olds) sigma[s] = t.image(s);
  std::vector<Expr> a;
  for (auto s : olds) a.push_back(t.normalize(substitute(f.coefficient(s), sigma, t.registry())));
  std::map<Symbol, Expr> coef;
  for (std::size_t k = 0; k < news.size(); ++k) {
    Expr b(0);
    for (std::size_t c = 0; c < olds.size(); ++c) b = b + inv[k][c] * a[c];
    coef[news[k]] = t.normalize(b);
  }
  std::optional<Expr> mult;
  if (f.multiplier()) mult = t.normalize(substitute(*f.multiplier(), sigma, t.registry()));
  return VectorField(t.space(), f.name(), coef, mult);
}

IdentityResult verify_transform_identity(const PointTransformation& t, const Expr& lhs, const Expr& rhs) {
  IdentityResult r;
  r.residual = t.normalize(pullback(t, lhs) - rhs);
  r.pass = r.residual.is_zero();
  return r;
}

IdentityResult first_order_consistency(const PointTransformation& t, const VectorField& generator, const Expr& e,
                                       const Expr& sign) {
  unsigned order = t.target().order_of(e);
  auto pt = t.order() >= order ? t : prolong_transformation(t, order);
  Expr lhs = d_dp_at_zero(pt, pullback(pt, e));
  IdentityResult r;
  r.residual = lhs + sign * apply(prolong(generator, order), e);
  r.pass = r.residual.is_zero();
  return r;
}

}  // namespace jetlie
