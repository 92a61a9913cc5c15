#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jetlie/expr.hpp"

namespace jetlie {

struct MultiIndex {
  std::vector<unsigned> counts;  // per independent variable
  unsigned order() const;
  MultiIndex plus(std::size_t i) const;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

enum class CoordinateRole { Independent, Dependent, Jet, Other };

struct CoordinateInfo {
  CoordinateRole role = CoordinateRole::Other;
  std::size_t index = 0;  // independent or dependent index
  MultiIndex multi;       // for Dependent (order 0) and Jet
  unsigned order() const { return multi.order(); }
};

class JetSpace {
 public:
  JetSpace() = default;
  static JetSpace build(const std::vector<std::string>& independents, const std::vector<std::string>& dependents,
                        unsigned order, std::string name = {});

  const std::string& name() const;
  const std::vector<Symbol>& independents() const;
  const std::vector<Symbol>& dependents() const;
  unsigned max_order() const;
  bool valid() const noexcept { return static_cast<bool>(d_); }

  Symbol jet(std::size_t dependent, const MultiIndex& J) const;
  // jet by a list of independent indices with repetition, e.g. {0, 1} for u_tx
  Symbol jet(std::size_t dependent, const std::vector<std::size_t>& indices) const;
  Symbol independent(std::string_view name) const;
  Symbol dependent(std::string_view name) const;

  // Independents, dependents, then jets by order, dependent, multi-index.
  std::vector<Symbol> coordinates(unsigned order) const;
  std::vector<Symbol> jet_coordinates(unsigned order) const;  // orders 1..order
  std::size_t coordinate_count(unsigned order) const;         // closed formula

  CoordinateInfo info(Symbol s) const;
  bool is_base(Symbol s) const;
  unsigned order_of(const Expr& e) const;  // highest jet order occurring in e

  // Jet name for a dependent and multi-index in this space's naming scheme.
  std::string jet_name(std::size_t dependent, const MultiIndex& J) const;
  // Canonical symbol for a spelling such as u_xt (reordered to u_tx), if any.
  std::optional<Symbol> parse_jet(std::string_view spelling) const;

  friend bool operator==(const JetSpace& a, const JetSpace& b);
  std::string to_string() const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

// D_i e. With allow_escalation the result may reach max_order + 1;
// otherwise OrderExceeded is raised when it would.
Expr total_derivative(const Expr& e, std::size_t i, const JetSpace& space, bool allow_escalation = false);

}  // namespace jetlie
