#include "jetlie/catalog.hpp"

#include <algorithm>
#include <mutex>

#include "catalog_internal.hpp"
#include "jetlie/errors.hpp"

namespace jetlie::catalog {

using namespace detail;

namespace {

const std::vector<std::string> kCga2Order{"Xm1", "X0", "X1", "Y1m1", "Y10", "Y11", "Y2m1", "Y20", "Y21", "R"};
const std::vector<std::string> kEcgaOrder{"Xm1", "X0",  "X1",  "Y1m1", "Y10",  "Y11",
                                          "Y2m1", "Y20", "Y21", "R",    "Theta"};
const std::vector<std::string> kYs{"Y1m1", "Y10", "Y11", "Y2m1", "Y20", "Y21"};

std::vector<std::string> join(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const dsl::SourceUnit& cached(const std::string& key, const std::string& text) {
  static std::map<std::string, std::unique_ptr<dsl::SourceUnit>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = cache.find(key);
  if (it == cache.end()) {
    static const dsl::SourceUnit base = dsl::parse(kBase);
    auto u = std::make_unique<dsl::SourceUnit>(key == "base" ? base : dsl::parse(text, &base));
    it = cache.emplace(key, std::move(u)).first;
  }
  return *it->second;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size()))
    s.replace(at, from.size(), to);
  return s;
}

CgaText cga3_spec() { return {"cga_scalar3", {"x", "y", "z"}, {}, "u", -1, 1}; }

CgaText general_spec(const AlgebraParams& p) {
  CgaText c;
  c.space_name = "altrep" + std::to_string(p.n);
  if (p.lowest != -1 || p.highest != 1)
    c.space_name += "_" + level_name('L', p.lowest).substr(1) + "_" + level_name('L', p.highest).substr(1);
  for (unsigned j = 1; j <= p.n; ++j) {
    c.space_coordinates.push_back("r" + std::to_string(j));
    c.phases.push_back("g" + std::to_string(j));
  }
  c.lowest = p.lowest;
  c.highest = p.highest;
  return c;
}

struct UnitRef {
  const dsl::SourceUnit* unit;
  std::string table;
  std::vector<std::string> members;
};

UnitRef unit_for(const std::string& key, const AlgebraParams& params) {
  if (key == "cga2") return {&cached("cga2", kCga2), "cga2_table", kCga2Order};
  if (key == "gal0") return {&cached("cga2", kCga2), "cga2_table", {"Xm1", "Y1m1", "Y10", "Y2m1", "Y20", "R"}};
  if (key == "galilei_thm1")
    return {&cached("cga2", kCga2), "cga2_table", {"Xm1", "X0", "Y1m1", "Y10", "Y2m1", "Y20", "R"}};
  if (key == "cga2_pair")
    return {&cached("cga2_pair", replace_all(kCga2, "cga_scalar", "cga_pair")), "cga2_table", kCga2Order};
  if (key == "cga3") {
    std::vector<std::string> m{"Xm1", "X0", "X1"};
    for (int j = 1; j <= 3; ++j)
      for (int n = -1; n <= 1; ++n) m.push_back(level_name('Y', n).insert(1, std::to_string(j)));
    m.insert(m.end(), {"R12", "R13", "R23"});
    return {&cached("cga3", cga_text(cga3_spec(), false)), "cga_scalar3_table", m};
  }
  if (key == "cga_general") {
    if ((params.n != 2 && params.n != 3) || params.lowest > params.highest || params.lowest < -3 ||
        params.highest > 3 || params.lowest > -1 || params.highest < 1)
      throw Error(ErrorCode::BadParams, "cga_general needs N in {2,3} and levels with -3 <= low <= -1 < 1 <= high <= 3");
    auto spec = general_spec(params);
    std::vector<std::string> m;
    for (int n = params.lowest; n <= params.highest; ++n) m.push_back(level_name('X', n));
    for (unsigned j = 1; j <= params.n; ++j)
      for (int n = params.lowest; n <= params.highest; ++n)
        m.push_back(level_name('Y', n).insert(1, std::to_string(j)));
    for (unsigned j = 1; j <= params.n; ++j)
      for (unsigned k = j + 1; k <= params.n; ++k) m.push_back("R" + std::to_string(j) + std::to_string(k));
    return {&cached(spec.space_name, cga_text(spec, true)), spec.space_name + "_table", m};
  }
  if (key == "ecga") return {&cached("ecga", kEcga), "ecga_table", kEcgaOrder};
  if (key == "ea1") return {&cached("ecga", kEcga), "ecga_table", join(join({"Xm1"}, kYs), {"Theta"})};
  if (key == "ea2") return {&cached("ecga", kEcga), "ecga_table", join(join({"Xm1", "X0", "X1"}, kYs), {"Theta"})};
  if (key == "ea3") return {&cached("ecga", kEcga), "ecga_table", join(join({"Xm1", "X0"}, kYs), {"Theta", "R"})};
  if (key == "xinf_ecga")
    return {&cached("ecga", kEcga), "", {"Xinf_t0", "Xinf_t1", "Xinf_t2", "Xinf_t3"}};
  if (key == "ecga_wave") return {&cached("ecga_wave", kWave), "ecga_wave_table", kEcgaOrder};
  if (key == "shallow_water_mai")
    return {&cached("fluid", kFluid),
            "shallow_water_table",
            {"Xm1", "Y1m1", "Y2m1", "Y10", "Y20", "X0", "X1", "R", "D"}};
  if (key == "xinf") return {&cached("fluid", kFluid), "", {"Xinf_t0", "Xinf_t1", "Xinf_t2", "Xinf_t3"}};
  throw Error(ErrorCode::UnknownKey, "unknown algebra '" + key + "'");
}

CommutatorTable restricted(const CommutatorTable& t, const std::vector<std::string>& names) {
  auto in = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  CommutatorTable out;
  for (const auto& [k, v] : t.entries()) {
    if (!in(k.first) || !in(k.second)) continue;
    for (const auto& term : v)
      if (!in(term.generator))
        throw Error(ErrorCode::InternalError, "selection " + k.first + "," + k.second + " is not closed");
    out.set(k.first, k.second, v);
  }
  for (const auto& [a, b] : t.unchecked_pairs())
    if (in(a) && in(b)) out.leave_unchecked(a, b);
  return out;
}

const std::vector<std::string>& invariant_keys() {
  static const std::vector<std::string> k{
      "WI", "WII", "WIII", "galilei_arg1", "galilei_arg2", "galilei_arg3", "galilei_arg4", "galilei_arg5",
      "galilei_arg6", "galilei_arg7", "Z1", "Z2", "Z3", "Z4", "WI_3d", "WII_3d", "WIII_3d", "Zu1", "Zv1", "Zu2",
      "Zv2", "Zu3", "Zv3", "Zu4", "Zv4", "Zuv", "Zuv_condition", "W1", "W2", "W3", "Wstar1", "Wstar2", "Wstar3",
      "shear_ratio", "cross_ratio", "W12star", "W3star", "Wstar", "divergence_ratio", "U_ratio", "Ustar", "Vstar"};
  return k;
}

Substitution maps_from(const JetSpace& sp, const std::vector<std::pair<const char*, const char*>>& text) {
  Substitution out;
  dsl::SourceUnit scratch = unit();
  scratch.params.push_back(Symbol::intern("p"));
  for (const auto& [jet, value] : text) {
    auto j = sp.parse_jet(jet);
    if (!j) throw Error(ErrorCode::InternalError, std::string("bad jet ") + jet);
    out[*j] = dsl::parse_expr(value, sp, &scratch);
  }
  return out;
}

std::vector<Expr> probes_from(const JetSpace& sp, const std::vector<const char*>& text) {
  std::vector<Expr> out;
  for (const char* t : text) out.push_back(dsl::parse_expr(t, sp, &unit()));
  return out;
}

}  // namespace

std::string_view kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::Algebra: return "algebra";
    case EntryKind::Invariant: return "invariant";
    case EntryKind::System: return "system";
    case EntryKind::Transformation: return "transformation";
    case EntryKind::Table: return "table";
  }
  return "?";
}

const dsl::SourceUnit& unit() { return cached("base", ""); }

std::string_view source() { return kBase; }

const VectorField& Algebra::field(const std::string& name) const {
  for (const auto& f : fields)
    if (f.name() == name) return f;
  throw Error(ErrorCode::UnknownKey, "algebra " + key + " has no field '" + name + "'");
}

std::vector<VectorField> Algebra::select(const std::vector<std::string>& names) const {
  std::vector<VectorField> out;
  for (const auto& n : names) out.push_back(field(n));
  return out;
}

std::vector<CatalogEntry> entries() {
  using K = EntryKind;
  static const std::vector<CatalogEntry> list = [] {
    std::vector<CatalogEntry> e{
        {"cga2", K::Algebra, "conformal Galilei algebra in two space dimensions acting on one scalar"},
        {"cga2_pair", K::Algebra, "the same realization acting on a pair of scalars"},
        {"cga3", K::Algebra, "conformal Galilei algebra in three space dimensions acting on one scalar"},
        {"cga_general", K::Algebra, "realization with scaling weight and phase coordinates, N and level range as parameters"},
        {"gal0", K::Algebra, "massless Galilei subalgebra"},
        {"galilei_thm1", K::Algebra, "massless Galilei subalgebra plus dilatation"},
        {"ecga", K::Algebra, "exotic conformal Galilei algebra on three unknowns"},
        {"ea1", K::Algebra, "8-dimensional subalgebra: translations, boosts, accelerations, central element"},
        {"ea2", K::Algebra, "10-dimensional subalgebra with dilatation and projective generator"},
        {"ea3", K::Algebra, "10-dimensional subalgebra with dilatation and rotation"},
        {"ea3_fluid", K::Algebra, "ea3 carried to the fluid coordinates"},
        {"ecga_wave", K::Algebra, "exotic algebra on six independent variables with weighted dilatations"},
        {"shallow_water_mai", K::Algebra, "nine-dimensional symmetry algebra of the shallow-water system"},
        {"xinf", K::Algebra, "shifts of w by t^k, k = 0..3"},
        {"xinf_ecga", K::Algebra, "shifts of u3 by t^k, k = 0..3"},
        {"cga2_table", K::Table, "commutators of cga2"},
        {"cga_scalar3_table", K::Table, "commutators of cga3 including rotations among themselves"},
        {"altrep_table", K::Table, "commutators of the general realization, generated per N and level range"},
        {"ecga_table", K::Table, "cga2 commutators plus the central extension"},
        {"ecga_wave_table", K::Table, "exotic commutators on the six-variable space"},
        {"shallow_water_table", K::Table, "commutators of the shallow-water algebra"},
        {"sys_4_1", K::System, "W1 = W2 = 0 with vanishing divergence"},
        {"sys_4_2", K::System, "incompressible flow with rotational forcing"},
        {"shallow_water", K::System, "shallow-water equations"},
        {"sys_4_7", K::System, "W1 = W2 = 0 with vanishing curl"},
        {"sys_4_8", K::System, "W1 = W2 = W3 = 0"},
        {"mt_wave", K::System, "second-order linear equation on six independent variables"},
        {"wi_equation", K::System, "WI = 0"},
        {"wi_equation_3d", K::System, "WI = 0 in three space dimensions"},
        {"pair_condition", K::System, "linear combination of WIII determinants for a pair of scalars"},
        {"acceleration_2_8", K::Transformation, "constant acceleration along x"},
        {"projective_2_11", K::Transformation, "projective map on the scalar space"},
        {"ecga_projective", K::Transformation, "projective map on the exotic space, flow of X1"},
        {"ecga_projective_printed", K::Transformation, "projective map with the opposite sign in the u3 image"},
        {"rotation", K::Transformation, "rotation with c^2 + s^2 = 1"},
        {"fluid_variables", K::Transformation, "rescaling from the exotic space to fluid coordinates"},
        {"fluid_variables_stated", K::Transformation, "rescaling without reversing the velocities"},
    };
    for (int k = 0; k <= 3; ++k) {
      e.push_back({"xinf_phi_t" + std::to_string(k), K::Transformation, "w shifted by p*t^" + std::to_string(k)});
      e.push_back({"xinf_ecga_t" + std::to_string(k), K::Transformation, "u3 shifted by p*t^" + std::to_string(k)});
    }
    for (const auto& k : invariant_keys()) e.push_back({k, K::Invariant, "differential expression " + k});
    return e;
  }();
  return list;
}

bool has(const std::string& key) {
  auto e = entries();
  return std::any_of(e.begin(), e.end(), [&](const CatalogEntry& c) { return c.key == key; });
}

Algebra algebra(const std::string& key, const AlgebraParams& params) {
  if (key == "ea3_fluid") {
    Algebra a = algebra("ea3");
    a.key = key;
    a.space_name = "fluid_space";
    a.space = space("fluid_space");
    for (auto& f : a.fields) f = to_fluid_space(f);
    return a;
  }
  auto ref = unit_for(key, params);
  Algebra a;
  a.key = key;
  for (const auto& n : ref.members) {
    auto it = ref.unit->fields.find(n);
    if (it == ref.unit->fields.end()) throw Error(ErrorCode::InternalError, "missing field " + n);
    a.fields.push_back(it->second);
  }
  a.space = a.fields.front().space();
  for (const auto& [n, sp] : ref.unit->spaces)
    if (sp == a.space) a.space_name = n;
  if (!ref.table.empty()) a.table = restricted(ref.unit->table(ref.table).table, ref.members);
  return a;
}

Invariant invariant(const std::string& key) {
  if (std::find(invariant_keys().begin(), invariant_keys().end(), key) == invariant_keys().end())
    throw Error(ErrorCode::UnknownKey, "unknown invariant '" + key + "'");
  const auto& b = unit().expr(key);
  return {key, b.space, b.value};
}

const PdeSystem& system(const std::string& key) {
  auto it = unit().systems.find(key);
  if (it == unit().systems.end()) throw Error(ErrorCode::UnknownKey, "unknown system '" + key + "'");
  return it->second;
}

const JetSpace& space(const std::string& name) {
  auto it = unit().spaces.find(name);
  if (it == unit().spaces.end()) throw Error(ErrorCode::UnknownKey, "unknown space '" + name + "'");
  return it->second;
}

Transformation transformation(const std::string& key) {
  auto it = unit().transforms.find(key);
  if (it == unit().transforms.end()) throw Error(ErrorCode::UnknownKey, "unknown transformation '" + key + "'");
  Transformation t;
  t.key = key;
  t.transform = it->second;
  const JetSpace& sp = t.transform.target();
  if (key == "acceleration_2_8") {
    t.generator = algebra("cga2").field("Y11");
    t.probes = probes_from(sp, {"Z1", "Z2", "Z3", "WI", "WII", "u_tx"});
  } else if (key == "projective_2_11") {
    t.generator = algebra("cga2").field("X1");
    t.probes = probes_from(sp, {"Z1", "Z2", "Z3", "Z4", "WIII", "u_tt"});
    t.stated_maps = maps_from(sp, {{"u_x", "u_x*(1 - p*t)^2"},
                                   {"u_y", "u_y*(1 - p*t)^2"},
                                   {"u_t", "u_t*(1 - p*t)^2 - 2*p*(x*u_x + y*u_y)*(1 - p*t)"},
                                   {"u_xx", "u_xx*(1 - p*t)^4"},
                                   {"u_xy", "u_xy*(1 - p*t)^4"},
                                   {"u_yy", "u_yy*(1 - p*t)^4"},
                                   {"u_tx", "(1 - p*t)^3*((1 - p*t)*u_tx - 2*p*(x*u_xx + y*u_xy) - 2*p*u_x)"},
                                   {"u_ty", "(1 - p*t)^3*((1 - p*t)*u_ty - 2*p*(x*u_xy + y*u_yy) - 2*p*u_y)"}});
  } else if (key == "ecga_projective") {
    t.generator = algebra("ecga").field("X1");
    t.probes = probes_from(sp, {"W1", "W2", "W3", "W12star", "divergence_ratio", "Wstar"});
    t.stated_maps = maps_from(sp, {{"u1_x", "(1 - p*t)^2*u1_x - 2*p*(1 - p*t)"},
                                   {"u2_y", "(1 - p*t)^2*u2_y - 2*p*(1 - p*t)"},
                                   {"u1_y", "(1 - p*t)^2*u1_y"},
                                   {"u2_x", "(1 - p*t)^2*u2_x"}});
  } else if (key == "rotation") {
    t.generator = algebra("ecga").field("R");
    t.sign = -1;
    t.probes = probes_from(sp, {"W1", "W12star", "W3star", "Wstar", "U_ratio", "divergence_ratio"});
  } else if (key.rfind("xinf_phi_t", 0) == 0) {
    t.generator = algebra("xinf").field("Xinf_" + key.substr(9));
    t.sign = -1;
    t.probes = probes_from(sp, {"w_t + u1*w_x", "w_x*w_y", "u1_t + q*w_y"});
  } else if (key.rfind("xinf_ecga_t", 0) == 0) {
    t.generator = algebra("xinf_ecga").field("Xinf_" + key.substr(10));
    t.sign = -1;
    t.probes = probes_from(sp, {"W1", "W3", "u3_t*u3_x"});
  }
  return t;
}

const PointTransformation& change_of_variables() { return unit().transform("fluid_variables"); }
const PointTransformation& change_of_variables_without_reflection() {
  return unit().transform("fluid_variables_stated");
}

VectorField to_fluid_space(const VectorField& f) { return transport(f, change_of_variables()); }

VectorField field(const std::string& ref, const std::optional<JetSpace>& on) {
  auto colon = ref.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::UnknownKey, "field reference must look like algebra:name");
  std::string alg = ref.substr(0, colon), name = ref.substr(colon + 1);
  VectorField f;
  if (alg == "ea3_fluid") {
    f = algebra(alg).field(name);
  } else {
    auto u = unit_for(alg, {});
    auto it = u.unit->fields.find(name);
    if (it == u.unit->fields.end()) throw Error(ErrorCode::UnknownKey, "unknown field '" + ref + "'");
    f = it->second;
  }
  if (!on || *on == f.space()) return f;
  if (f.space() == change_of_variables().target() && *on == change_of_variables().space()) return to_fluid_space(f);
  throw Error(ErrorCode::SpaceMismatch, "no change of variables from the space of " + ref);
}

}  // namespace jetlie::catalog
