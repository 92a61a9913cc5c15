#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetlie/dsl.hpp"

namespace jetlie::catalog {

enum class EntryKind { Algebra, Invariant, System, Transformation, Table };

std::string_view kind_name(EntryKind k);

struct CatalogEntry {
  std::string key;
  EntryKind kind;
  std::string description;
};

struct Algebra {
  std::string key;
  std::string space_name;
  JetSpace space;
  std::vector<VectorField> fields;
  CommutatorTable table;

  const VectorField& field(const std::string& name) const;
  std::vector<VectorField> select(const std::vector<std::string>& names) const;
};

struct AlgebraParams {
  unsigned n = 2;
  int lowest = -1, highest = 1;
};

struct Invariant {
  std::string key;
  std::string space_name;
  Expr value;
};

// A transformation with the generator its flow should reproduce:
// infinitesimal(transform) == sign * generator.
struct Transformation {
  std::string key;
  PointTransformation transform;
  std::optional<VectorField> generator;
  int sign = 1;
  std::vector<Expr> probes;     // expressions used for first-order checks
  Substitution stated_maps;     // derivative maps as written down by hand, empty if none
};

const dsl::SourceUnit& unit();

std::vector<CatalogEntry> entries();
bool has(const std::string& key);

Algebra algebra(const std::string& key, const AlgebraParams& params = {});
Invariant invariant(const std::string& key);
const PdeSystem& system(const std::string& key);
Transformation transformation(const std::string& key);
const JetSpace& space(const std::string& name);

// "ecga:X1" or a bare field name of an algebra; moved through the change
// of variables when the requested space differs
VectorField field(const std::string& ref, const std::optional<JetSpace>& on = std::nullopt);

// change of variables carrying the first-order ECGA space onto the fluid space
const PointTransformation& change_of_variables();
const PointTransformation& change_of_variables_without_reflection();
VectorField to_fluid_space(const VectorField& f);

// DSL source text of the built-in catalog
std::string_view source();

}  // namespace jetlie::catalog
