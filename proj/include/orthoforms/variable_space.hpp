#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "orthoforms/errors.hpp"

namespace orthoforms {

class VariableSpace;
using SpacePtr = std::shared_ptr<const VariableSpace>;

/// An ordered list of named variables with one nonnegative integer weight
/// each. The order is fixed for the lifetime of the space; polynomials keep
/// a shared reference to theirs.
class VariableSpace {
public:
  static SpacePtr create(std::vector<std::string> names,
                         std::vector<long> weights);

  /// All weights 1 (plain total degree equals weighted degree).
  static SpacePtr create_unit(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  long weight(std::size_t i) const { return weights_[i]; }
  std::span<const long> weights() const { return weights_; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  /// Structural equality: same names in the same order with the same weights.
  bool same_as(const VariableSpace& other) const;

private:
  VariableSpace(std::vector<std::string> names, std::vector<long> weights);

  std::vector<std::string> names_;
  std::vector<long> weights_;
  std::unordered_map<std::string_view, std::size_t> index_;
};

/// True when the two spaces are the same object or structurally equal.
inline bool compatible(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace orthoforms
