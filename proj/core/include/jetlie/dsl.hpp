#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jetlie/invariance.hpp"
#include "jetlie/pointtransform.hpp"

namespace jetlie::dsl {

struct Location {
  int line = 1, column = 1;
};

enum class DeclKind { Space, Param, Assume, Expr, Field, System, Transform, Table };

struct Declaration {
  DeclKind kind;
  std::string name;
  Location where;
};

struct BoundExpr {
  std::string space;
  jetlie::Expr value;
};

struct TableDecl {
  CommutatorTable table;
  std::vector<std::string> generators;  // in order of first mention
};

class SourceUnit {
 public:
  std::vector<Declaration> declarations;
  std::map<std::string, JetSpace> spaces;
  std::vector<Symbol> params;
  std::vector<std::pair<std::string, Polynomial>> assumptions;  // space, positive polynomial
  AssumptionRegistry registry;
  std::map<std::string, BoundExpr> exprs;
  std::map<std::string, VectorField> fields;
  std::map<std::string, PdeSystem> systems;
  std::map<std::string, PointTransformation> transforms;
  std::map<std::string, TableDecl> tables;

  const JetSpace& space(const std::string& name) const;
  const VectorField& field(const std::string& name) const;
  const BoundExpr& expr(const std::string& name) const;
  const PdeSystem& system(const std::string& name) const;
  const PointTransformation& transform(const std::string& name) const;
  const TableDecl& table(const std::string& name) const;
  // fields declared on a space, in declaration order
  std::vector<VectorField> fields_on(const std::string& space) const;

  std::string to_string() const;
};

// Parses text; declarations from base (if given) are visible and kept.
SourceUnit parse(std::string_view text, const SourceUnit* base = nullptr);
SourceUnit parse_file(const std::string& path, const SourceUnit* base = nullptr);

// Expression on a space, resolving names through the unit.
Expr parse_expr(std::string_view text, const JetSpace& space, const SourceUnit* unit = nullptr);
VectorField parse_field(std::string_view name, std::string_view text, const JetSpace& space,
                        const SourceUnit* unit = nullptr);

std::string print_space(const std::string& name, const JetSpace& s);
std::string print_field(const VectorField& f, const std::string& space_name);
std::string print_system(const PdeSystem& s, const std::string& space_name);
std::string print_transform(const PointTransformation& t, const std::string& space_name,
                            const std::string& target_name);
std::string print_table(const std::string& name, const TableDecl& t);

}  // namespace jetlie::dsl
