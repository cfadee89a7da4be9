#include "brsc/moore.hpp"

#include <algorithm>
#include <unordered_set>

#include "brsc/errors.hpp"

namespace brsc {

MooreFamily::MooreFamily(Universe universe, std::vector<Mask> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  for (const Mask m : members_)
    if (!m.subset_of(universe_.all()))
      throw UsageError("family member lies outside the universe");
  std::sort(members_.begin(), members_.end(), size_lex_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.back() != universe_.all())
    throw UsageError("family must contain the full vertex set");
  std::unordered_set<std::uint64_t> present;
  for (const Mask m : members_) present.insert(m.bits);
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      const Mask meet = members_[i] & members_[j];
      if (!present.contains(meet.bits))
        throw UsageError("family is not intersection closed: misses " +
                         universe_.set_string(meet));
    }
}

MooreFamily MooreFamily::trusted(Universe universe, std::vector<Mask> members) {
  MooreFamily out;
  out.universe_ = std::move(universe);
  out.members_ = std::move(members);
  for (const Mask m : out.members_)
    if (!m.subset_of(out.universe_.all()))
      throw UsageError("family member lies outside the universe");
  std::sort(out.members_.begin(), out.members_.end(), size_lex_less);
  out.members_.erase(std::unique(out.members_.begin(), out.members_.end()),
                     out.members_.end());
  if (out.members_.empty() || out.members_.back() != out.universe_.all())
    throw UsageError("family must contain the full vertex set");
  return out;
}

bool MooreFamily::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m, size_lex_less);
}

Mask MooreFamily::closure_of(Mask x) const {
  Mask out = universe_.all();
  for (const Mask m : members_)
    if (x.subset_of(m)) out = out & m;
  return out;
}

namespace {

// Depth-first search over the orderings of x; the set of elements already
// placed determines the running closure, so dead sets memoize the failure.
bool tr_extend(const MooreFamily& f, Mask x, Mask used, Mask closed,
               std::unordered_set<std::uint64_t>& dead,
               std::vector<int>* order) {
  if (used == x) return true;
  if (dead.contains(used.bits)) return false;
  bool found = false;
  for_each_bit(x - used, [&](int v) {
    if (found || closed.test(v)) return;
    if (order) order->push_back(v);
    if (tr_extend(f, x, used.with(v), f.closure_of(closed.with(v)), dead, order))
      found = true;
    else if (order)
      order->pop_back();
  });
  if (!found) dead.insert(used.bits);
  return found;
}

}  // namespace

bool tr_contains(const MooreFamily& f, Mask x) {
  if (!x.subset_of(f.universe().all()))
    throw UsageError("set lies outside the universe");
  std::unordered_set<std::uint64_t> dead;
  return tr_extend(f, x, Mask{}, f.bottom(), dead, nullptr);
}

std::optional<std::vector<int>> tr_order(const MooreFamily& f, Mask x) {
  if (!x.subset_of(f.universe().all()))
    throw UsageError("set lies outside the universe");
  std::vector<int> order;
  std::unordered_set<std::uint64_t> dead;
  if (!tr_extend(f, x, Mask{}, f.bottom(), dead, &order)) return std::nullopt;
  return order;
}

SimplicialComplex transversals(const MooreFamily& f, int max_vertices) {
  if (!f.bottom().empty())
    throw UsageError(
        "family closes the empty set to " + f.universe().set_string(f.bottom()) +
        ", so its transversals miss those vertices and form no complex");
  const int n = f.universe().size();
  if (n > max_vertices)
    throw CapError("universe has " + std::to_string(n) + " vertices, cap is " +
                   std::to_string(max_vertices));

  // cl[x] over all subsets, built per added element from cl of a subset.
  std::vector<std::uint64_t> cl(std::size_t{1} << n);
  cl[0] = f.bottom().bits;
  std::vector<char> member(std::size_t{1} << n, 0);
  member[0] = 1;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const Mask x{bits};
    const int v = x.lowest();
    cl[bits] = f.closure_of(Mask{cl[x.without(v).bits]}.with(v)).bits;
    for_each_bit(x, [&](int u) {
      if (member[bits]) return;
      const Mask rest = x.without(u);
      if (member[rest.bits] && !Mask{cl[rest.bits]}.test(u)) member[bits] = 1;
    });
  }

  std::vector<Mask> facets;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (!member[bits]) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!Mask{bits}.test(v) && member[bits | Mask::single(v).bits]) maximal = false;
    if (maximal) facets.push_back(Mask{bits});
  }
  return SimplicialComplex(f.universe(), std::move(facets));
}

BooleanMatrix matrix_from_moore_family(const MooreFamily& f) {
  std::vector<std::string> labels;
  std::vector<Mask> rows;
  labels.reserve(f.members().size());
  rows.reserve(f.members().size());
  for (const Mask m : f.members()) {
    labels.push_back(f.universe().set_string(m));
    rows.push_back(f.universe().all() - m);
  }
  return BooleanMatrix(f.universe(), std::move(labels), std::move(rows));
}

}  // namespace brsc
