#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "brsc/mask.hpp"

namespace brsc {

// Ordered list of distinct vertex labels. Vertices are handled as indices
// into this list everywhere inside the library; labels only matter at the
// I/O boundary and in error messages.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> labels);

  // Labels "first", "first+1", ..., "first+n-1".
  static Universe numbered(int n, int first = 1);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> find(const std::string& label) const;
  int index(const std::string& label) const;  // throws UsageError when unknown

  Mask all() const { return Mask::full(size()); }
  Mask mask_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(Mask m) const;

  // Render a subset for messages and reports, e.g. "{1,35,b2}".
  std::string set_string(Mask m) const;

  // Universe of the sub-labels selected by m, in index order. Returns the new
  // universe and the map old-index -> new-index (-1 when dropped).
  std::pair<Universe, std::vector<int>> restricted(Mask m) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace brsc
