#include "jetlie/dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "jetlie/errors.hpp"

namespace jetlie::dsl {

namespace {

enum class Tok { End, Name, Number, Direction, Punct };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Location where;
};

std::string at(const Location& l) { return std::to_string(l.line) + ":" + std::to_string(l.column) + ": "; }

[[noreturn]] void fail(ErrorCode code, const Location& l, const std::string& msg) { throw Error(code, at(l) + msg); }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  Location loc;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
  };
  auto ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.where = loc;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && ident(src[j])) ++j;
      t.kind = Tok::Name;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && ident(src[j])) fail(ErrorCode::SyntaxError, loc, "malformed number");
      t.kind = Tok::Number;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (c == '@') {
      std::size_t j = i + 1;
      while (j < src.size() && ident(src[j])) ++j;
      if (j == i + 1) fail(ErrorCode::SyntaxError, loc, "expected a coordinate name after @");
      t.kind = Tok::Direction;
      t.text = std::string(src.substr(i + 1, j - i - 1));
      advance(j - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      t.kind = Tok::Punct;
      t.text = "->";
      advance(2);
    } else if (std::string_view("{}()[],;:=+-*/^").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      fail(ErrorCode::SyntaxError, loc, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.where = loc;
  out.push_back(end);
  return out;
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"space", "independent", "dependent", "order", "param", "assume",
                                       "positive", "expr", "field", "system", "transform", "table",
                                       "on", "to", "eq", "solve", "from", "relation", "series", "det",
                                       "scalar", "unchecked"};
  return k;
}

Symbol direction_marker(const std::string& name) { return Symbol::intern("@" + name); }
Symbol scalar_marker() { return Symbol::intern("@"); }
Symbol generator_marker(const std::string& name) { return Symbol::intern("#" + name); }

class Parser {
 public:
  Parser(std::string_view src, SourceUnit& unit) : toks_(lex(src)), unit_(unit) {}

  void unit() {
    while (peek().kind != Tok::End) statement();
  }

  Expr standalone_expr(const JetSpace& space) {
    space_ = &space;
    Expr e = expr();
    expect_end();
    return e;
  }

  VectorField standalone_field(const std::string& name, const JetSpace& space) {
    space_ = &space;
    Location l = peek().where;
    auto f = field_body(name, l);
    expect_end();
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SourceUnit& unit_;
  const JetSpace* space_ = nullptr;
  std::string space_name_;
  bool field_mode_ = false;
  std::map<std::string, Symbol> local_params_;
  const std::map<std::string, Symbol>* generators_ = nullptr;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool is(const char* punct) const { return peek().kind == Tok::Punct && peek().text == punct; }
  bool is_word(const char* w) const { return peek().kind == Tok::Name && peek().text == w; }
  bool accept(const char* punct) {
    if (!is(punct)) return false;
    ++pos_;
    return true;
  }
  bool accept_word(const char* w) {
    if (!is_word(w)) return false;
    ++pos_;
    return true;
  }
  void expect(const char* punct) {
    if (!accept(punct)) fail(ErrorCode::SyntaxError, peek().where, std::string("expected '") + punct + "'" + found());
  }
  void expect_word(const char* w) {
    if (!accept_word(w)) fail(ErrorCode::SyntaxError, peek().where, std::string("expected '") + w + "'" + found());
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail(ErrorCode::SyntaxError, peek().where, "unexpected trailing input" + found());
  }
  std::string found() const {
    if (peek().kind == Tok::End) return ", found end of input";
    return ", found '" + (peek().kind == Tok::Direction ? "@" + peek().text : peek().text) + "'";
  }
  Token name() {
    if (peek().kind != Tok::Name) fail(ErrorCode::SyntaxError, peek().where, "expected a name" + found());
    return take();
  }
  std::vector<std::string> name_list() {
    std::vector<std::string> out{name().text};
    while (accept(",")) out.push_back(name().text);
    return out;
  }

  void declare(DeclKind kind, const Token& n) {
    for (const auto& d : unit_.declarations)
      if (d.name == n.text && d.kind != DeclKind::Assume)
        fail(ErrorCode::DuplicateName, n.where, "'" + n.text + "' is already declared");
    if (keywords().count(n.text)) fail(ErrorCode::SyntaxError, n.where, "'" + n.text + "' is a reserved word");
    unit_.declarations.push_back({kind, n.text, n.where});
  }

  void use_space(const Token& n) {
    auto it = unit_.spaces.find(n.text);
    if (it == unit_.spaces.end()) fail(ErrorCode::UnknownSymbol, n.where, "unknown space '" + n.text + "'");
    space_ = &it->second;
    space_name_ = n.text;
  }

  void statement() {
    Token kw = name();
    local_params_.clear();
    if (kw.text == "space") return space_stmt();
    if (kw.text == "param") return param_stmt();
    if (kw.text == "assume") return assume_stmt(kw);
    if (kw.text == "expr") return expr_stmt();
    if (kw.text == "field") return field_stmt();
    if (kw.text == "system") return system_stmt();
    if (kw.text == "transform") return transform_stmt();
    if (kw.text == "table") return table_stmt();
    fail(ErrorCode::SyntaxError, kw.where, "unknown statement '" + kw.text + "'");
  }

  void space_stmt() {
    Token n = name();
    expect("{");
    expect_word("independent");
    auto ind = name_list();
    expect(";");
    std::vector<std::string> dep;
    if (accept_word("dependent")) {
      dep = name_list();
      expect(";");
    }
    expect_word("order");
    Token o = take();
    if (o.kind != Tok::Number) fail(ErrorCode::SyntaxError, o.where, "expected the order");
    accept(";");
    expect("}");
    accept(";");
    for (const auto& s : ind)
      if (keywords().count(s)) fail(ErrorCode::SyntaxError, n.where, "'" + s + "' is a reserved word");
    for (const auto& s : dep)
      if (keywords().count(s)) fail(ErrorCode::SyntaxError, n.where, "'" + s + "' is a reserved word");
    declare(DeclKind::Space, n);
    try {
      unit_.spaces.emplace(n.text, JetSpace::build(ind, dep, static_cast<unsigned>(std::stoul(o.text)), n.text));
    } catch (const Error& e) {
      fail(e.code(), n.where, e.what());
    }
  }

  void param_stmt() {
    Location l = peek().where;
    auto names = name_list();
    expect(";");
    for (const auto& s : names) {
      Token t{Tok::Name, s, l};
      declare(DeclKind::Param, t);
      unit_.params.push_back(Symbol::intern(s));
    }
  }

  void assume_stmt(const Token& kw) {
    expect_word("on");
    use_space(name());
    expect_word("positive");
    Location l = peek().where;
    Expr e = expr();
    expect(";");
    if (!e.is_rational_function() || !e.as_rational_function().is_polynomial())
      fail(ErrorCode::InvalidArgument, l, "assumptions must be polynomials");
    Polynomial p = e.as_rational_function().num();
    unit_.registry.add_positive(p);
    unit_.assumptions.emplace_back(space_name_, p);
    unit_.declarations.push_back({DeclKind::Assume, space_name_, kw.where});
  }

  void expr_stmt() {
    Token n = name();
    expect_word("on");
    use_space(name());
    expect("=");
    Expr e = expr();
    expect(";");
    declare(DeclKind::Expr, n);
    unit_.exprs[n.text] = BoundExpr{space_name_, e};
  }

  VectorField field_body(const std::string& fname, const Location& l) {
    field_mode_ = true;
    Expr body = expr();
    field_mode_ = false;
    std::vector<Symbol> markers;
    std::map<Symbol, Symbol> coord_of;
    for (auto c : space_->independents()) {
      markers.push_back(direction_marker(c.name()));
      coord_of[markers.back()] = c;
    }
    for (auto c : space_->dependents()) {
      markers.push_back(direction_marker(c.name()));
      coord_of[markers.back()] = c;
    }
    markers.push_back(scalar_marker());
    std::map<Symbol, Expr> coef;
    std::optional<Expr> mult;
    std::vector<std::pair<Monomial, Expr>> parts;
    try {
      parts = collect(body, markers);
    } catch (const Error& e) {
      fail(ErrorCode::SyntaxError, l, "field terms must be linear in the directions");
    }
    for (const auto& [m, c] : parts) {
      if (m.degree() != 1) fail(ErrorCode::SyntaxError, l, "every field term needs exactly one direction");
      Symbol mk = Symbol::from_id(m.factors()[0].var);
      if (mk == scalar_marker())
        mult = c;
      else
        coef[coord_of.at(mk)] = c;
    }
    try {
      return VectorField(*space_, fname, coef, mult);
    } catch (const Error& e) {
      fail(e.code(), l, e.what());
    }
  }

  void field_stmt() {
    Token n = name();
    expect_word("on");
    use_space(name());
    expect("=");
    auto f = field_body(n.text, n.where);
    expect(";");
    declare(DeclKind::Field, n);
    unit_.fields[n.text] = f;
  }

  Symbol jet_symbol(const Token& t) {
    auto j = space_->parse_jet(t.text);
    if (!j) fail(ErrorCode::UnknownSymbol, t.where, "'" + t.text + "' is not a jet coordinate of " + space_->name());
    return *j;
  }

  void system_stmt() {
    Token n = name();
    expect_word("on");
    use_space(name());
    expect("{");
    std::vector<NamedExpr> eqs;
    Substitution solved;
    while (!accept("}")) {
      if (accept_word("eq")) {
        Token en = name();
        expect(":");
        eqs.emplace_back(en.text, expr());
        expect(";");
      } else if (accept_word("solve")) {
        Token v = name();
        Symbol s = jet_symbol(v);
        if (accept_word("from")) {
          Token en = name();
          auto it = std::find_if(eqs.begin(), eqs.end(), [&](const NamedExpr& e) { return e.first == en.text; });
          if (it == eqs.end()) fail(ErrorCode::UnknownSymbol, en.where, "unknown equation '" + en.text + "'");
          try {
            solved[s] = solve_linear(it->second, s);
          } catch (const Error& e) {
            fail(e.code(), v.where, e.what());
          }
        } else {
          expect("=");
          solved[s] = expr();
        }
        expect(";");
      } else {
        fail(ErrorCode::SyntaxError, peek().where, "expected 'eq' or 'solve'" + found());
      }
    }
    accept(";");
    declare(DeclKind::System, n);
    try {
      unit_.systems[n.text] = PdeSystem(n.text, *space_, eqs, solved, unit_.registry);
    } catch (const Error& e) {
      fail(e.code(), n.where, e.what());
    }
  }

  void transform_stmt() {
    Token n = name();
    expect_word("on");
    use_space(name());
    const JetSpace* source = space_;
    const JetSpace* target = source;
    if (accept_word("to")) {
      Token tn = name();
      auto it = unit_.spaces.find(tn.text);
      if (it == unit_.spaces.end()) fail(ErrorCode::UnknownSymbol, tn.where, "unknown space '" + tn.text + "'");
      target = &it->second;
    }
    std::optional<Symbol> param;
    if (accept_word("param")) {
      Token p = name();
      param = Symbol::intern(p.text);
      local_params_[p.text] = *param;
    }
    expect("{");
    Substitution maps, series;
    std::optional<SideRelation> rel;
    while (!accept("}")) {
      if (accept_word("relation")) {
        Token v = name();
        expect("^");
        Token two = take();
        if (two.text != "2") fail(ErrorCode::SyntaxError, two.where, "relations take the form s^2 = ...");
        expect("=");
        Location l = peek().where;
        Expr e = expr();
        expect(";");
        if (!e.is_rational_function() || !e.as_rational_function().is_polynomial())
          fail(ErrorCode::InvalidArgument, l, "relation value must be a polynomial");
        rel = SideRelation{resolve_plain(v), e.as_rational_function().num()};
      } else if (accept_word("series")) {
        Token v = name();
        expect("->");
        series[resolve_plain(v)] = expr();
        expect(";");
      } else {
        Token k = name();
        std::optional<Symbol> key;
        for (auto c : target->independents())
          if (c.name() == k.text) key = c;
        for (auto c : target->dependents())
          if (c.name() == k.text) key = c;
        if (!key) fail(ErrorCode::UnknownSymbol, k.where, "'" + k.text + "' is not a base coordinate of " + target->name());
        expect("->");
        maps[*key] = expr();
        expect(";");
      }
    }
    accept(";");
    declare(DeclKind::Transform, n);
    try {
      PointTransformation t(n.text, *source, param, maps, *target);
      t = t.with_registry(unit_.registry);
      if (rel) t = t.with_side_relation(*rel);
      if (!series.empty()) t = t.with_series(series);
      unit_.transforms[n.text] = t;
    } catch (const Error& e) {
      fail(e.code(), n.where, e.what());
    }
  }

  void table_stmt() {
    Token n = name();
    expect("{");
    TableDecl td;
    std::map<std::string, Symbol> gens;
    auto note = [&](const std::string& g) {
      if (!gens.count(g)) {
        gens[g] = generator_marker(g);
        td.generators.push_back(g);
      }
    };
    generators_ = &gens;
    while (!accept("}")) {
      expect("[");
      Token a = name();
      expect(",");
      Token b = name();
      expect("]");
      expect("=");
      note(a.text);
      note(b.text);
      if (accept_word("unchecked")) {
        expect(";");
        td.table.leave_unchecked(a.text, b.text);
        continue;
      }
      field_mode_ = true;
      Location l = peek().where;
      std::size_t before = pos_;
      // generator names mentioned on the right-hand side
      while (!is(";") && peek().kind != Tok::End) {
        const Token& t = take();
        if (t.kind == Tok::Name && !keywords().count(t.text) && !is_param(t.text)) note(t.text);
      }
      pos_ = before;
      Expr rhs = expr();
      field_mode_ = false;
      expect(";");
      std::vector<Symbol> markers;
      std::map<Symbol, std::string> back;
      for (const auto& [g, m] : gens) {
        markers.push_back(m);
        back[m] = g;
      }
      LinearCombination lc;
      std::vector<std::pair<Monomial, Expr>> parts;
      try {
        parts = collect(rhs, markers);
      } catch (const Error&) {
        fail(ErrorCode::SyntaxError, l, "table entries must be linear in the generators");
      }
      for (const auto& [m, c] : parts) {
        if (m.degree() != 1) fail(ErrorCode::SyntaxError, l, "every table term needs exactly one generator");
        lc.push_back(LinearTerm{c, back.at(Symbol::from_id(m.factors()[0].var))});
      }
      std::sort(lc.begin(), lc.end(), [&](const LinearTerm& x, const LinearTerm& y) {
        auto ix = std::find(td.generators.begin(), td.generators.end(), x.generator);
        auto iy = std::find(td.generators.begin(), td.generators.end(), y.generator);
        return ix < iy;
      });
      td.table.set(a.text, b.text, lc);
    }
    generators_ = nullptr;
    accept(";");
    declare(DeclKind::Table, n);
    unit_.tables[n.text] = td;
  }

  bool is_param(const std::string& s) const {
    if (local_params_.count(s)) return true;
    for (auto p : unit_.params)
      if (p.name() == s) return true;
    return false;
  }

  Symbol resolve_plain(const Token& t) {
    if (auto it = local_params_.find(t.text); it != local_params_.end()) return it->second;
    for (auto p : unit_.params)
      if (p.name() == t.text) return p;
    fail(ErrorCode::UnknownSymbol, t.where, "unknown parameter '" + t.text + "'");
  }

  Expr resolve(const Token& t) {
    if (generators_) {
      if (auto it = generators_->find(t.text); it != generators_->end() && !is_param(t.text)) return Expr(it->second);
    }
    if (auto it = local_params_.find(t.text); it != local_params_.end()) return Expr(it->second);
    if (space_) {
      for (auto c : space_->independents())
        if (c.name() == t.text) return Expr(c);
      for (auto c : space_->dependents())
        if (c.name() == t.text) return Expr(c);
      if (auto j = space_->parse_jet(t.text)) return Expr(*j);
    }
    for (auto p : unit_.params)
      if (p.name() == t.text) return Expr(p);
    if (auto it = unit_.exprs.find(t.text); it != unit_.exprs.end()) {
      if (space_ && unit_.spaces.count(it->second.space) && !(unit_.spaces.at(it->second.space) == *space_))
        fail(ErrorCode::UnknownSymbol, t.where, "'" + t.text + "' lives on space " + it->second.space);
      return it->second.value;
    }
    fail(ErrorCode::UnknownSymbol, t.where, "unknown symbol '" + t.text + "'");
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (accept("+"))
        e = e + term();
      else if (accept("-"))
        e = e - term();
      else
        return e;
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept("*")) {
        e = e * unary();
      } else if (is("/")) {
        Location l = take().where;
        Expr d = unary();
        if (d.is_zero()) fail(ErrorCode::DivisionByZero, l, "division by zero");
        try {
          e = e / d;
        } catch (const Error& err) {
          fail(err.code(), l, err.what());
        }
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  Expr exponent_operand() {
    if (accept("-")) return -exponent_operand();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!is("^")) return base;
    Location l = take().where;
    Expr ex = exponent_operand();
    auto q = ex.as_constant();
    if (!q) fail(ErrorCode::SyntaxError, l, "exponents must be rational constants");
    try {
      if (is_integer(*q)) return base.pow(q->get_num().get_si());
      return pow(base, *q, unit_.registry);
    } catch (const Error& err) {
      fail(err.code(), l, err.what());
    }
  }

  Expr primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      take();
      return Expr(*parse_rational(t.text));
    }
    if (t.kind == Tok::Direction) {
      Token d = take();
      if (!field_mode_ || !space_ || generators_)
        fail(ErrorCode::SyntaxError, d.where, "directions are only allowed in field definitions");
      bool ok = false;
      for (auto c : space_->independents()) ok = ok || c.name() == d.text;
      for (auto c : space_->dependents()) ok = ok || c.name() == d.text;
      if (!ok) fail(ErrorCode::UnknownSymbol, d.where, "'" + d.text + "' is not a base coordinate of " + space_->name());
      return Expr(direction_marker(d.text));
    }
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    if (t.kind == Tok::Name && t.text == "det") {
      Location l = take().where;
      return det_literal(l);
    }
    if (t.kind == Tok::Name && t.text == "scalar") {
      Location l = take().where;
      if (!field_mode_ || generators_) fail(ErrorCode::SyntaxError, l, "scalar(...) is only allowed in field definitions");
      expect("(");
      bool saved = field_mode_;
      field_mode_ = false;
      Expr e = expr();
      field_mode_ = saved;
      expect(")");
      return e * Expr(scalar_marker());
    }
    if (t.kind == Tok::Name) {
      Token n = take();
      if (keywords().count(n.text) && !is_param(n.text))
        fail(ErrorCode::SyntaxError, n.where, "unexpected keyword '" + n.text + "'");
      return resolve(n);
    }
    fail(ErrorCode::SyntaxError, t.where, "expected an expression" + found());
  }

  Expr det_literal(const Location& l) {
    expect("[");
    std::vector<std::vector<Expr>> rows;
    do {
      expect("[");
      std::vector<Expr> row{expr()};
      while (accept(",")) row.push_back(expr());
      expect("]");
      rows.push_back(std::move(row));
    } while (accept(","));
    expect("]");
    for (const auto& r : rows)
      if (r.size() != rows.size()) fail(ErrorCode::ArityError, l, "det needs a square matrix");
    return det(rows);
  }
};

std::string join(const std::vector<Symbol>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].name();
  return out;
}

std::string space_name_of(const SourceUnit& u, const JetSpace& s) {
  for (const auto& [n, sp] : u.spaces)
    if (sp == s) return n;
  return s.name();
}

}  // namespace

const JetSpace& SourceUnit::space(const std::string& n) const {
  auto it = spaces.find(n);
  if (it == spaces.end()) throw Error(ErrorCode::UnknownSymbol, "unknown space '" + n + "'");
  return it->second;
}

const VectorField& SourceUnit::field(const std::string& n) const {
  auto it = fields.find(n);
  if (it == fields.end()) throw Error(ErrorCode::UnknownSymbol, "unknown field '" + n + "'");
  return it->second;
}

const BoundExpr& SourceUnit::expr(const std::string& n) const {
  auto it = exprs.find(n);
  if (it == exprs.end()) throw Error(ErrorCode::UnknownSymbol, "unknown expression '" + n + "'");
  return it->second;
}

const PdeSystem& SourceUnit::system(const std::string& n) const {
  auto it = systems.find(n);
  if (it == systems.end()) throw Error(ErrorCode::UnknownSymbol, "unknown system '" + n + "'");
  return it->second;
}

const PointTransformation& SourceUnit::transform(const std::string& n) const {
  auto it = transforms.find(n);
  if (it == transforms.end()) throw Error(ErrorCode::UnknownSymbol, "unknown transformation '" + n + "'");
  return it->second;
}

const TableDecl& SourceUnit::table(const std::string& n) const {
  auto it = tables.find(n);
  if (it == tables.end()) throw Error(ErrorCode::UnknownSymbol, "unknown table '" + n + "'");
  return it->second;
}

std::vector<VectorField> SourceUnit::fields_on(const std::string& s) const {
  const JetSpace& sp = space(s);
  std::vector<VectorField> out;
  for (const auto& d : declarations)
    if (d.kind == DeclKind::Field && fields.at(d.name).space() == sp) out.push_back(fields.at(d.name));
  return out;
}

std::string print_space(const std::string& name, const JetSpace& s) {
  std::string out = "space " + name + " { independent " + join(s.independents()) + ";";
  if (!s.dependents().empty()) out += " dependent " + join(s.dependents()) + ";";
  return out + " order " + std::to_string(s.max_order()) + "; }";
}

std::string print_field(const VectorField& f, const std::string& space_name) {
  return "field " + f.name() + " on " + space_name + " = " + f.to_string() + ";";
}

std::string print_system(const PdeSystem& s, const std::string& space_name) {
  std::string out = "system " + s.name() + " on " + space_name + " {\n";
  for (const auto& [n, e] : s.equations()) out += "  eq " + n + ": " + e.to_string() + ";\n";
  for (const auto& [k, v] : s.solved_form()) out += "  solve " + k.name() + " = " + v.to_string() + ";\n";
  return out + "}";
}

std::string print_transform(const PointTransformation& t, const std::string& space_name,
                            const std::string& target_name) {
  std::string out = "transform " + t.name() + " on " + space_name;
  if (!(t.target() == t.space())) out += " to " + target_name;
  if (t.parameter()) out += " param " + t.parameter()->name();
  out += " {\n";
  auto emit = [&](Symbol s) {
    auto it = t.base_maps().find(s);
    if (it != t.base_maps().end()) out += "  " + s.name() + " -> " + it->second.to_string() + ";\n";
  };
  for (auto s : t.target().independents()) emit(s);
  for (auto s : t.target().dependents()) emit(s);
  if (t.side_relation())
    out += "  relation " + t.side_relation()->var.name() + "^2 = " + t.side_relation()->square_value.to_string() + ";\n";
  for (const auto& [k, v] : t.series()) out += "  series " + k.name() + " -> " + v.to_string() + ";\n";
  return out + "}";
}

std::string print_table(const std::string& name, const TableDecl& t) {
  std::string out = "table " + name + " {\n";
  for (const auto& [k, v] : t.table.entries())
    out += "  [" + k.first + ", " + k.second + "] = " + to_string(v) + ";\n";
  for (const auto& [a, b] : t.table.unchecked_pairs()) out += "  [" + a + ", " + b + "] = unchecked;\n";
  return out + "}";
}

std::string SourceUnit::to_string() const {
  std::ostringstream out;
  std::size_t assume_index = 0;
  for (const auto& d : declarations) {
    switch (d.kind) {
      case DeclKind::Space:
        out << print_space(d.name, spaces.at(d.name)) << "\n";
        break;
      case DeclKind::Param:
        out << "param " << d.name << ";\n";
        break;
      case DeclKind::Assume: {
        const auto& [sp, p] = assumptions.at(assume_index++);
        out << "assume on " << sp << " positive " << p.to_string() << ";\n";
        break;
      }
      case DeclKind::Expr: {
        const auto& b = exprs.at(d.name);
        out << "expr " << d.name << " on " << b.space << " = " << b.value.to_string() << ";\n";
        break;
      }
      case DeclKind::Field: {
        const auto& f = fields.at(d.name);
        out << print_field(f, space_name_of(*this, f.space())) << "\n";
        break;
      }
      case DeclKind::System: {
        const auto& s = systems.at(d.name);
        out << print_system(s, space_name_of(*this, s.space())) << "\n";
        break;
      }
      case DeclKind::Transform: {
        const auto& t = transforms.at(d.name);
        out << print_transform(t, space_name_of(*this, t.space()), space_name_of(*this, t.target())) << "\n";
        break;
      }
      case DeclKind::Table:
        out << print_table(d.name, tables.at(d.name)) << "\n";
        break;
    }
  }
  return out.str();
}

SourceUnit parse(std::string_view text, const SourceUnit* base) {
  SourceUnit unit = base ? *base : SourceUnit{};
  Parser(text, unit).unit();
  return unit;
}

SourceUnit parse_file(const std::string& path, const SourceUnit* base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), base);
}

Expr parse_expr(std::string_view text, const JetSpace& space, const SourceUnit* unit) {
  SourceUnit scratch = unit ? *unit : SourceUnit{};
  return Parser(text, scratch).standalone_expr(space);
}

VectorField parse_field(std::string_view name, std::string_view text, const JetSpace& space, const SourceUnit* unit) {
  SourceUnit scratch = unit ? *unit : SourceUnit{};
  return Parser(text, scratch).standalone_field(std::string(name), space);
}

}  // namespace jetlie::dsl
