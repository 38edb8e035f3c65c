#include "orthoforms/variable_space.hpp"

#include <unordered_set>

namespace orthoforms {

VariableSpace::VariableSpace(std::vector<std::string> names,
                             std::vector<long> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
}

SpacePtr VariableSpace::create(std::vector<std::string> names,
                               std::vector<long> weights) {
  if (names.size() != weights.size())
    throw PreconditionError("variable space: names/weights length mismatch");
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw PreconditionError("variable space: empty name");
    if (!seen.insert(n).second)
      throw PreconditionError("variable space: duplicate name " + n);
  }
  for (long w : weights)
    if (w < 0) throw PreconditionError("variable space: negative weight");
  return SpacePtr(new VariableSpace(std::move(names), std::move(weights)));
}

SpacePtr VariableSpace::create_unit(std::vector<std::string> names) {
  std::vector<long> weights(names.size(), 1);
  return create(std::move(names), std::move(weights));
}

std::optional<std::size_t> VariableSpace::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableSpace::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx)
    throw UnboundVariableError("unknown variable " + std::string(name));
  return *idx;
}

bool VariableSpace::same_as(const VariableSpace& other) const {
  return names_ == other.names_ && weights_ == other.weights_;
}

}  // namespace orthoforms
