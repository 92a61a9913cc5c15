#include "jetlie/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "jetlie/errors.hpp"

namespace jetlie {

namespace {

struct Entry {
  std::string name;
  SymbolKind kind;
};

class Interner {
 public:
  Symbol intern(std::string_view name, SymbolKind kind) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(std::string(name)); it != ids_.end()) return Symbol::from_id(it->second);
    }
    std::unique_lock lock(mutex_);
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return Symbol::from_id(it->second);
    entries_.push_back(Entry{std::string(name), kind});
    auto id = static_cast<std::uint32_t>(entries_.size());
    ids_.emplace(std::string(name), id);
    return Symbol::from_id(id);
  }

  Symbol lookup(std::string_view name) const {
    std::shared_lock lock(mutex_);
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return Symbol::from_id(it->second);
    return {};
  }

  const Entry& entry(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    if (id == 0 || id > entries_.size()) throw Error(ErrorCode::InternalError, "invalid symbol id");
    return entries_[id - 1];  // deque keeps references stable
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::deque<Entry> entries_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

Interner& interner() {
  static Interner instance;
  return instance;
}

}  // namespace

std::string_view symbol_kind_name(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::Independent: return "independent";
    case SymbolKind::Dependent: return "dependent";
    case SymbolKind::JetCoordinate: return "jet";
    case SymbolKind::Parameter: return "parameter";
  }
  return "?";
}

Symbol Symbol::intern(std::string_view name, SymbolKind kind) {
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "empty symbol name");
  return interner().intern(name, kind);
}

Symbol Symbol::lookup(std::string_view name) { return interner().lookup(name); }

bool Symbol::exists(std::string_view name) { return lookup(name).valid(); }

const std::string& Symbol::name() const { return interner().entry(id_).name; }

SymbolKind Symbol::kind() const { return interner().entry(id_).kind; }

std::size_t interned_symbol_count() { return interner().size(); }

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedRadical: return "UnsupportedRadical";
    case ErrorCode::NotPolynomialInSplitVars: return "NotPolynomialInSplitVars";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::IrrationalValue: return "IrrationalValue";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
    case ErrorCode::MultiplierNotProlongable: return "MultiplierNotProlongable";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::UnknownGeneratorName: return "UnknownGeneratorName";
    case ErrorCode::SingularJacobian: return "SingularJacobian";
    case ErrorCode::MissingDerivativeMap: return "MissingDerivativeMap";
    case ErrorCode::LeadingDerivativeRemains: return "LeadingDerivativeRemains";
    case ErrorCode::InconsistentSolvedForm: return "InconsistentSolvedForm";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::RankDisagreement: return "RankDisagreement";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Error";
}

}  // namespace jetlie
