#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace brsc {

// Subset of a vertex universe, one bit per vertex index. Universes are capped
// at 63 vertices so every subset fits in a single word and subset scans can
// index plain arrays by mask value.
struct Mask {
  std::uint64_t bits = 0;

  static constexpr int kMaxVertices = 63;

  static constexpr Mask full(int n) { return {(std::uint64_t{1} << n) - 1}; }
  static constexpr Mask single(int v) { return {std::uint64_t{1} << v}; }

  constexpr bool test(int v) const { return bits >> v & 1; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr int lowest() const { return std::countr_zero(bits); }

  constexpr Mask with(int v) const { return {bits | std::uint64_t{1} << v}; }
  constexpr Mask without(int v) const { return {bits & ~(std::uint64_t{1} << v)}; }
  constexpr bool subset_of(Mask o) const { return (bits & ~o.bits) == 0; }
  constexpr bool intersects(Mask o) const { return (bits & o.bits) != 0; }

  friend constexpr Mask operator&(Mask a, Mask b) { return {a.bits & b.bits}; }
  friend constexpr Mask operator|(Mask a, Mask b) { return {a.bits | b.bits}; }
  // Set difference.
  friend constexpr Mask operator-(Mask a, Mask b) { return {a.bits & ~b.bits}; }
  friend constexpr bool operator==(Mask, Mask) = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }
};

template <class F>
constexpr void for_each_bit(Mask m, F f) {
  for (std::uint64_t b = m.bits; b; b &= b - 1) f(std::countr_zero(b));
}

// Visits every subset of m, from m itself down to the empty set.
template <class F>
constexpr void for_each_subset(Mask m, F f) {
  std::uint64_t s = m.bits;
  while (true) {
    f(Mask{s});
    if (s == 0) break;
    s = (s - 1) & m.bits;
  }
}

// Visits the k-element subsets of {0..n-1} in increasing numeric order.
template <class F>
void for_each_combination(int n, int k, F f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{});
    return;
  }
  std::uint64_t m = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (m < limit) {
    f(Mask{m});
    // Gosper's hack: next k-subset in numeric order.
    const std::uint64_t c = m & -m;
    const std::uint64_t r = m + c;
    if (r >= limit) break;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

// Visits the k-element subsets of m in increasing numeric order.
template <class F>
void for_each_subset_of_size(Mask m, int k, F f) {
  const std::vector<int> elems = m.elements();
  for_each_combination(static_cast<int>(elems.size()), k, [&](Mask positions) {
    Mask out;
    for_each_bit(positions, [&](int i) { out = out.with(elems[static_cast<std::size_t>(i)]); });
    f(out);
  });
}

// Orders masks as sorted vertex sequences: {0,3} precedes {1,2}, and a set
// precedes every superset that extends it on the high side. Used for all
// deterministic witness and output ordering.
constexpr bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const int v = std::countr_zero(a.bits ^ b.bits);
  return a.test(v) ? (b.bits >> (v + 1)) != 0 : (a.bits >> (v + 1)) == 0;
}

// Size-major ordering used when listing families of sets.
constexpr bool size_lex_less(Mask a, Mask b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return lex_less(a, b);
}

}  // namespace brsc
