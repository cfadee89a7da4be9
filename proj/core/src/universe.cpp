#include "brsc/universe.hpp"

#include <algorithm>

#include "brsc/errors.hpp"

namespace brsc {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw UsageError("universe must have at least one vertex");
  if (labels_.size() > Mask::kMaxVertices)
    throw CapError("universe has " + std::to_string(labels_.size()) +
                   " vertices; at most 63 are supported");
  for (int i = 0; i < size(); ++i) {
    const std::string& l = labels_[static_cast<std::size_t>(i)];
    if (l.empty()) throw UsageError("vertex labels must be nonempty");
    if (!index_.emplace(l, i).second) throw UsageError("duplicate vertex label \"" + l + "\"");
  }
}

Universe Universe::numbered(int n, int first) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
  return Universe(std::move(labels));
}

std::optional<int> Universe::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Universe::index(const std::string& label) const {
  if (auto v = find(label)) return *v;
  throw UsageError("unknown vertex label \"" + label + "\"");
}

Mask Universe::mask_of(std::span<const std::string> labels) const {
  Mask m;
  for (const auto& l : labels) m = m.with(index(l));
  return m;
}

std::vector<std::string> Universe::labels_of(Mask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](int v) { out.push_back(label(v)); });
  return out;
}

std::string Universe::set_string(Mask m) const {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](int v) {
    if (!first) out += ',';
    out += label(v);
    first = false;
  });
  return out + "}";
}

std::pair<Universe, std::vector<int>> Universe::restricted(Mask m) const {
  std::vector<std::string> labels;
  std::vector<int> remap(static_cast<std::size_t>(size()), -1);
  for_each_bit(m, [&](int v) {
    remap[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
    labels.push_back(label(v));
  });
  return {Universe(std::move(labels)), std::move(remap)};
}

}  // namespace brsc
