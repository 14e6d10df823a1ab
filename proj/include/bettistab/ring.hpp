#pragma once

#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"

namespace bettistab {

/// A polynomial ring k[x_1, ..., x_n] over a field of characteristic zero.
/// Only the variable list has a runtime representation; the coefficient
/// field is implicit in every homology computation (exact rational ranks).
class RingContext {
public:
  explicit RingContext(std::vector<std::string> variable_names)
      : names_(std::move(variable_names)) {
    if (names_.empty())
      throw error(errc::argument, "ring context needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
      if (name.empty())
        throw error(errc::argument, "ring variable names must be nonempty");
      if (!seen.insert(name).second)
        throw error(errc::argument, "duplicate ring variable name '" + name + "'");
    }
  }

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::string& variable_name(std::size_t v) const { return names_[v]; }

  /// Index of a variable name, or npos when absent.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return npos;
  }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.names_ == b.names_;
  }

private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(std::vector<std::string> variable_names) {
  return std::make_shared<const RingContext>(std::move(variable_names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace bettistab
