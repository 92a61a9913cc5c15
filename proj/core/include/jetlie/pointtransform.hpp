#pragma once

#include <optional>
#include <string>

#include "jetlie/liefield.hpp"

namespace jetlie {

// Images of target coordinates as expressions in source coordinates and an
// optional group parameter. Target defaults to the source space.
class PointTransformation {
 public:
  PointTransformation() = default;
  PointTransformation(std::string name, JetSpace space, std::optional<Symbol> parameter, Substitution base_maps,
                      JetSpace target = {});

  const std::string& name() const noexcept { return name_; }
  const JetSpace& space() const noexcept { return space_; }
  const JetSpace& target() const noexcept { return target_; }
  const std::optional<Symbol>& parameter() const noexcept { return parameter_; }
  const Substitution& base_maps() const noexcept { return base_; }
  const Substitution& derivative_maps() const noexcept { return jets_; }
  unsigned order() const noexcept { return order_; }
  const AssumptionRegistry& registry() const noexcept { return reg_; }
  const std::optional<SideRelation>& side_relation() const noexcept { return side_; }
  const Substitution& series() const noexcept { return series_; }

  PointTransformation with_registry(AssumptionRegistry reg) const;
  PointTransformation with_side_relation(SideRelation rel) const;
  // truncations substituted before differentiating in the parameter, e.g. c -> 1, s -> p
  PointTransformation with_series(Substitution series) const;
  PointTransformation with_derivative_maps(Substitution maps, unsigned order) const;

  // image of a target coordinate; identity for base coordinates without an entry
  Expr image(Symbol coordinate) const;
  Expr normalize(const Expr& e) const;  // side relation, if any
  std::string to_string() const;

 private:
  std::string name_;
  JetSpace space_, target_;
  std::optional<Symbol> parameter_;
  Substitution base_, jets_;
  unsigned order_ = 0;
  AssumptionRegistry reg_;
  std::optional<SideRelation> side_;
  Substitution series_;
};

PointTransformation prolong_transformation(const PointTransformation& t, unsigned order);

Expr pullback(const PointTransformation& t, const Expr& e);

// -(d/dp) of the base maps at p = 0
VectorField infinitesimal(const PointTransformation& t, std::string name = {});

// a field on t.target() rewritten in the coordinates of t.space(); t must carry no parameter
VectorField transport(const VectorField& f, const PointTransformation& t);

struct IdentityResult {
  bool pass = false;
  Expr residual;
};

IdentityResult verify_transform_identity(const PointTransformation& t, const Expr& lhs, const Expr& rhs);

// d/dp pullback(e) at p = 0 against -sign * prolong(generator)(e)
IdentityResult first_order_consistency(const PointTransformation& t, const VectorField& generator, const Expr& e,
                                       const Expr& sign = Expr(1));

// inverse of a square matrix by exact elimination; SingularJacobian when singular
std::vector<std::vector<Expr>> inverse_matrix(std::vector<std::vector<Expr>> m);

}  // namespace jetlie
