#include "brsc/classify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "brsc/errors.hpp"
#include "brsc/flats.hpp"
#include "brsc/matroid.hpp"
#include "brsc/tbrsc.hpp"
#include "brsc/topology.hpp"

namespace brsc {
namespace {

enum class Atom { kTbrsc, kBr, kSimple, kPure, kPaving, kMatroid, kConnected };
constexpr int kAtomCount = 7;

// ---- filter expressions ----

struct Token {
  enum Kind { kIdent, kNot, kAnd, kOr, kOpen, kClose, kEnd } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& filter) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < filter.size()) {
    const char c = filter[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '!') {
      out.push_back({Token::kNot, "!"});
      ++i;
    } else if (c == '&') {
      out.push_back({Token::kAnd, "&"});
      ++i;
    } else if (c == '|') {
      out.push_back({Token::kOr, "|"});
      ++i;
    } else if (c == '(') {
      out.push_back({Token::kOpen, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::kClose, ")"});
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (i < filter.size() &&
             (std::isalnum(static_cast<unsigned char>(filter[i])) ||
              filter[i] == '_'))
        ident.push_back(filter[i++]);
      out.push_back({Token::kIdent, std::move(ident)});
    } else {
      throw UsageError(std::string("filter: unexpected character '") + c +
                       "'");
    }
  }
  out.push_back({Token::kEnd, ""});
  return out;
}

Atom atom_of(const std::string& name) {
  if (name == "tbrsc") return Atom::kTbrsc;
  if (name == "br") return Atom::kBr;
  if (name == "simple") return Atom::kSimple;
  if (name == "pure") return Atom::kPure;
  if (name == "paving") return Atom::kPaving;
  if (name == "matroid") return Atom::kMatroid;
  if (name == "connected") return Atom::kConnected;
  throw UsageError("filter: unknown property \"" + name + "\"");
}

struct Node {
  enum Kind { kAtomNode, kNotNode, kAndNode, kOrNode } kind;
  Atom atom{};
  std::unique_ptr<Node> lhs, rhs;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::unique_ptr<Node> parse() {
    auto expr = parse_or();
    if (tokens_[pos_].kind != Token::kEnd)
      throw UsageError("filter: trailing input after the expression");
    return expr;
  }

 private:
  std::unique_ptr<Node> parse_or() {
    auto lhs = parse_and();
    while (tokens_[pos_].kind == Token::kOr) {
      ++pos_;
      auto node = std::make_unique<Node>();
      node->kind = Node::kOrNode;
      node->lhs = std::move(lhs);
      node->rhs = parse_and();
      lhs = std::move(node);
    }
    return lhs;
  }

  std::unique_ptr<Node> parse_and() {
    auto lhs = parse_not();
    while (tokens_[pos_].kind == Token::kAnd) {
      ++pos_;
      auto node = std::make_unique<Node>();
      node->kind = Node::kAndNode;
      node->lhs = std::move(lhs);
      node->rhs = parse_not();
      lhs = std::move(node);
    }
    return lhs;
  }

  std::unique_ptr<Node> parse_not() {
    if (tokens_[pos_].kind == Token::kNot) {
      ++pos_;
      auto node = std::make_unique<Node>();
      node->kind = Node::kNotNode;
      node->lhs = parse_not();
      return node;
    }
    return parse_atom();
  }

  std::unique_ptr<Node> parse_atom() {
    const Token& t = tokens_[pos_];
    if (t.kind == Token::kIdent) {
      ++pos_;
      auto node = std::make_unique<Node>();
      node->kind = Node::kAtomNode;
      node->atom = atom_of(t.text);
      return node;
    }
    if (t.kind == Token::kOpen) {
      ++pos_;
      auto expr = parse_or();
      if (tokens_[pos_].kind != Token::kClose)
        throw UsageError("filter: missing ')'");
      ++pos_;
      return expr;
    }
    throw UsageError("filter: expected a property name");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <typename FlagFn>
bool eval_node(const Node& node, FlagFn& flag) {
  switch (node.kind) {
    case Node::kAtomNode:
      return flag(node.atom);
    case Node::kNotNode:
      return !eval_node(*node.lhs, flag);
    case Node::kAndNode:
      return eval_node(*node.lhs, flag) && eval_node(*node.rhs, flag);
    case Node::kOrNode:
      return eval_node(*node.lhs, flag) || eval_node(*node.rhs, flag);
  }
  return false;
}

// ---- candidate evaluation over precomputed tables ----
//
// A candidate is a bitmask over the (d+1)-sets ("tops"); the complex it
// stands for carries all d-sets plus the selected tops. All per-candidate
// tests reduce to bit arithmetic against these tables; subsets of the
// vertex set index bitmaps of at most 2^6 = 64 bits.

struct Tables {
  int n = 0, d = 0, t = 0, size = 0;
  std::uint32_t all_tops = 0;
  std::vector<Mask> tops;    // lex order
  std::vector<Mask> esets;   // d-sets, lex order
  std::array<int, 64> top_id{};
  std::vector<std::uint32_t> meet_tops;    // [x] tops meeting x in d points
  std::vector<std::uint32_t> tops_inside;  // [x] tops contained in x
  std::vector<std::uint64_t> meet_sets;    // [i] sets meeting top i in d points
  std::vector<std::uint32_t> cover;        // [e] tops containing d-set e
  std::vector<std::vector<std::uint32_t>> ext;   // [e][x] tops e+p with p outside x
  std::vector<std::vector<std::uint32_t>> exch;  // [i][e] tops e+v with v in top i
};

Tables build_tables(int n, int d) {
  Tables tb;
  tb.n = n;
  tb.d = d;
  tb.size = 1 << n;
  for_each_combination(n, d + 1, [&](Mask m) { tb.tops.push_back(m); });
  for_each_combination(n, d, [&](Mask m) { tb.esets.push_back(m); });
  tb.t = static_cast<int>(tb.tops.size());
  tb.all_tops = (tb.t == 32) ? ~0u : ((1u << tb.t) - 1);
  tb.top_id.fill(-1);
  for (int i = 0; i < tb.t; ++i)
    tb.top_id[static_cast<std::size_t>(tb.tops[static_cast<std::size_t>(i)].bits)] = i;

  tb.meet_tops.assign(static_cast<std::size_t>(tb.size), 0);
  tb.tops_inside.assign(static_cast<std::size_t>(tb.size), 0);
  tb.meet_sets.assign(static_cast<std::size_t>(tb.t), 0);
  for (int x = 0; x < tb.size; ++x) {
    for (int i = 0; i < tb.t; ++i) {
      const int c = std::popcount(static_cast<std::uint64_t>(x) &
                                  tb.tops[static_cast<std::size_t>(i)].bits);
      if (c == d) {
        tb.meet_tops[static_cast<std::size_t>(x)] |= 1u << i;
        tb.meet_sets[static_cast<std::size_t>(i)] |= std::uint64_t{1} << x;
      } else if (c == d + 1) {
        tb.tops_inside[static_cast<std::size_t>(x)] |= 1u << i;
      }
    }
  }

  const std::size_t ne = tb.esets.size();
  tb.cover.assign(ne, 0);
  tb.ext.assign(ne, std::vector<std::uint32_t>(static_cast<std::size_t>(tb.size), 0));
  for (std::size_t e = 0; e < ne; ++e) {
    const Mask es = tb.esets[e];
    for (int i = 0; i < tb.t; ++i)
      if (es.subset_of(tb.tops[static_cast<std::size_t>(i)]))
        tb.cover[e] |= 1u << i;
    for (int x = 0; x < tb.size; ++x) {
      std::uint32_t bits = 0;
      for (int p = 0; p < n; ++p) {
        if ((x >> p) & 1) continue;
        if (es.test(p)) continue;
        bits |= 1u << tb.top_id[static_cast<std::size_t>(es.with(p).bits)];
      }
      tb.ext[e][static_cast<std::size_t>(x)] = bits;
    }
  }

  tb.exch.assign(static_cast<std::size_t>(tb.t),
                 std::vector<std::uint32_t>(ne, 0));
  for (int i = 0; i < tb.t; ++i) {
    for (std::size_t e = 0; e < ne; ++e) {
      std::uint32_t bits = 0;
      for_each_bit(tb.tops[static_cast<std::size_t>(i)] - tb.esets[e], [&](int v) {
        bits |= 1u << tb.top_id[static_cast<std::size_t>(tb.esets[e].with(v).bits)];
      });
      tb.exch[static_cast<std::size_t>(i)][e] = bits;
    }
  }
  return tb;
}

// The empty candidate is the one complex in the scan of dimension d-1; it
// is scored with the general-purpose library routines instead of the
// tables, which assume dimension exactly d.
std::array<bool, kAtomCount> zero_candidate_flags(int n, int d) {
  std::vector<Mask> faces;
  for_each_combination(n, d, [&](Mask m) { faces.push_back(m); });
  const SimplicialComplex s(Universe::numbered(n), std::move(faces));
  std::array<bool, kAtomCount> out{};
  out[static_cast<int>(Atom::kTbrsc)] = is_tbrsc(s).holds;
  out[static_cast<int>(Atom::kBr)] = is_boolean_representable(s).holds;
  out[static_cast<int>(Atom::kSimple)] = is_simple(s);
  out[static_cast<int>(Atom::kPure)] = is_pure(s);
  out[static_cast<int>(Atom::kPaving)] = is_paving(s);
  out[static_cast<int>(Atom::kMatroid)] = is_matroid(s);
  out[static_cast<int>(Atom::kConnected)] = is_connected(s);
  return out;
}

class CandidateFlags {
 public:
  CandidateFlags(const Tables& tb, std::uint32_t m,
                 const std::array<bool, kAtomCount>& zero)
      : tb_(tb), m_(m), zero_(zero) {}

  bool operator()(Atom a) {
    const int i = static_cast<int>(a);
    if (!(done_ & (1u << i))) {
      if (compute(a)) value_ |= 1u << i;
      done_ |= 1u << i;
    }
    return (value_ >> i) & 1u;
  }

 private:
  bool compute(Atom a) const {
    if (m_ == 0) return zero_[static_cast<int>(a)];
    switch (a) {
      case Atom::kPaving:
        return true;  // the scan only produces pavings
      case Atom::kSimple:
        // For d >= 2 every pair is in the skeleton; for d = 1 the pairs
        // are exactly the tops.
        return tb_.d >= 2 || m_ == tb_.all_tops;
      case Atom::kPure: {
        for (std::size_t e = 0; e < tb_.esets.size(); ++e)
          if ((m_ & tb_.cover[e]) == 0) return false;
        return true;
      }
      case Atom::kConnected:
        return tb_.d >= 2 || graph_connected();
      case Atom::kMatroid: {
        for (std::uint32_t rest = m_; rest; rest &= rest - 1) {
          const std::size_t i =
              static_cast<std::size_t>(std::countr_zero(rest));
          for (std::size_t e = 0; e < tb_.esets.size(); ++e)
            if ((m_ & tb_.exch[i][e]) == 0) return false;
        }
        return true;
      }
      case Atom::kTbrsc: {
        const std::uint64_t eps = eps_bitmap();
        for (std::uint32_t rest = m_; rest; rest &= rest - 1)
          if ((eps & tb_.meet_sets[static_cast<std::size_t>(
                         std::countr_zero(rest))]) == 0)
            return false;
        return true;
      }
      case Atom::kBr: {
        const std::uint64_t fl = flats_bitmap();
        for (std::uint32_t rest = m_; rest; rest &= rest - 1)
          if ((fl & tb_.meet_sets[static_cast<std::size_t>(
                        std::countr_zero(rest))]) == 0)
            return false;
        return true;
      }
    }
    return false;
  }

  // A set is closed when no missing top meets it in exactly d points.
  std::uint64_t eps_bitmap() const {
    const std::uint32_t missing = tb_.all_tops & ~m_;
    std::uint64_t out = 0;
    for (int x = 0; x < tb_.size; ++x)
      if ((missing & tb_.meet_tops[static_cast<std::size_t>(x)]) == 0)
        out |= std::uint64_t{1} << x;
    return out;
  }

  // A proper set is a flat when no present top sits inside it and every
  // d-subset extends outside it using present tops only. A d-subset with a
  // missing outside extension breaks it either way: if some outside
  // extension is present that extension is a facet meeting the set in the
  // d-subset, and if none is present the d-subset itself is a facet (its
  // inside extensions are excluded along with the first condition).
  std::uint64_t flats_bitmap() const {
    std::uint64_t out = std::uint64_t{1} << (tb_.size - 1);  // the full set
    for (int x = 0; x < tb_.size - 1; ++x) {
      if (m_ & tb_.tops_inside[static_cast<std::size_t>(x)]) continue;
      bool ok = true;
      for (std::size_t e = 0; ok && e < tb_.esets.size(); ++e) {
        if ((tb_.esets[e].bits & ~static_cast<std::uint64_t>(x)) != 0)
          continue;  // not a subset of x
        const std::uint32_t need = tb_.ext[e][static_cast<std::size_t>(x)];
        if ((m_ & need) != need) ok = false;
      }
      if (ok) out |= std::uint64_t{1} << x;
    }
    return out;
  }

  bool graph_connected() const {
    std::array<std::uint32_t, 6> adj{};
    for (std::uint32_t rest = m_; rest; rest &= rest - 1) {
      const Mask edge =
          tb_.tops[static_cast<std::size_t>(std::countr_zero(rest))];
      const auto ends = edge.elements();
      adj[static_cast<std::size_t>(ends[0])] |= 1u << ends[1];
      adj[static_cast<std::size_t>(ends[1])] |= 1u << ends[0];
    }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t rest = frontier; rest; rest &= rest - 1)
        next |= adj[static_cast<std::size_t>(std::countr_zero(rest))];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (1u << tb_.n) - 1;
  }

  const Tables& tb_;
  std::uint32_t m_;
  const std::array<bool, kAtomCount>& zero_;
  mutable std::uint32_t done_ = 0;
  mutable std::uint32_t value_ = 0;
};

std::vector<std::vector<int>> top_permutation_actions(const Tables& tb) {
  std::vector<int> perm(static_cast<std::size_t>(tb.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> actions;
  do {
    std::vector<int> action(static_cast<std::size_t>(tb.t));
    for (int i = 0; i < tb.t; ++i) {
      Mask image;
      for_each_bit(tb.tops[static_cast<std::size_t>(i)], [&](int v) {
        image = image.with(perm[static_cast<std::size_t>(v)]);
      });
      action[static_cast<std::size_t>(i)] =
          tb.top_id[static_cast<std::size_t>(image.bits)];
    }
    actions.push_back(std::move(action));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return actions;
}

std::uint32_t canonical_mask(std::uint32_t m,
                             const std::vector<std::vector<int>>& actions) {
  std::uint32_t best = ~0u;
  for (const std::vector<int>& action : actions) {
    std::uint32_t image = 0;
    for (std::uint32_t rest = m; rest; rest &= rest - 1)
      image |= 1u
               << action[static_cast<std::size_t>(std::countr_zero(rest))];
    best = std::min(best, image);
  }
  return best;
}

}  // namespace

ClassifyResult classify_pavings(int n, int d, const std::string& filter,
                                int threads) {
  if (n < 2) throw UsageError("classify requires n >= 2");
  if (n > 6)
    throw CapError("classify caps at 6 vertices; the candidate space is "
                   "2^binom(n,d+1)");
  if (d < 1 || d > n - 1) throw UsageError("classify requires 1 <= d <= n-1");

  const std::unique_ptr<Node> expr = Parser(tokenize(filter)).parse();
  const Tables tb = build_tables(n, d);
  const std::array<bool, kAtomCount> zero = zero_candidate_flags(n, d);
  const std::vector<std::vector<int>> actions = top_permutation_actions(tb);
  const std::uint64_t total = std::uint64_t{1} << tb.t;

  threads = std::clamp(threads, 1, 64);
  struct Shard {
    std::map<std::uint32_t, long long> classes;
    long long matched = 0;
  };
  std::vector<Shard> shards(static_cast<std::size_t>(threads));

  auto work = [&](int k) {
    Shard& shard = shards[static_cast<std::size_t>(k)];
    const std::uint64_t begin = total * static_cast<std::uint64_t>(k) /
                                static_cast<std::uint64_t>(threads);
    const std::uint64_t end = total * (static_cast<std::uint64_t>(k) + 1) /
                              static_cast<std::uint64_t>(threads);
    for (std::uint64_t m = begin; m < end; ++m) {
      CandidateFlags flags(tb, static_cast<std::uint32_t>(m), zero);
      if (!eval_node(*expr, flags)) continue;
      ++shard.matched;
      ++shard.classes[canonical_mask(static_cast<std::uint32_t>(m), actions)];
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int k = 0; k < threads; ++k) pool.emplace_back(work, k);
    for (std::thread& th : pool) th.join();
  }

  std::map<std::uint32_t, long long> merged;
  ClassifyResult result;
  result.n = n;
  result.d = d;
  result.scanned = static_cast<long long>(total);
  for (const Shard& shard : shards) {
    result.matched += shard.matched;
    for (const auto& [mask, count] : shard.classes) merged[mask] += count;
  }

  for (const auto& [mask, count] : merged) {
    std::vector<Mask> top_faces;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1)
      top_faces.push_back(
          tb.tops[static_cast<std::size_t>(std::countr_zero(rest))]);
    std::sort(top_faces.begin(), top_faces.end(), lex_less);
    std::vector<Mask> faces = top_faces;
    for_each_combination(n, d, [&](Mask m) { faces.push_back(m); });
    result.classes.push_back(
        PavingClass{SimplicialComplex(Universe::numbered(n), std::move(faces)),
                    std::move(top_faces), count});
  }
  return result;
}

}  // namespace brsc
