#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace jetlie {

enum class SymbolKind { Independent, Dependent, JetCoordinate, Parameter };

std::string_view symbol_kind_name(SymbolKind kind);

// Interned scalar symbol. Identity is the name; the id fixes the term order.
// The kind is recorded at first interning. Roles of coordinates are decided
// by the jet space that uses them, since one name can be an independent
// variable in one space and a dependent variable in another.
class Symbol {
 public:
  Symbol() = default;
  static Symbol intern(std::string_view name, SymbolKind kind = SymbolKind::Parameter);
  static Symbol lookup(std::string_view name);  // id 0 when unknown
  static bool exists(std::string_view name);

  std::uint32_t id() const noexcept { return id_; }
  bool valid() const noexcept { return id_ != 0; }
  const std::string& name() const;
  SymbolKind kind() const;

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.id_ == b.id_; }
  friend auto operator<=>(Symbol a, Symbol b) noexcept { return a.id_ <=> b.id_; }

  static Symbol from_id(std::uint32_t id) noexcept {
    Symbol s;
    s.id_ = id;
    return s;
  }

 private:
  std::uint32_t id_ = 0;
};

std::size_t interned_symbol_count();

}  // namespace jetlie

template <>
struct std::hash<jetlie::Symbol> {
  std::size_t operator()(jetlie::Symbol s) const noexcept { return std::hash<std::uint32_t>{}(s.id()); }
};
