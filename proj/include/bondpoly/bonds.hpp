#pragma once

#include <bit>
#include <cstdint>
#include <optional>

#include "bondpoly/graph.hpp"

namespace bondpoly {

class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// A bond: vertex bipartition with both sides connected, identified by its
// unordered bipartition. side_s is canonical: it contains the lowest vertex.
struct Bond {
  std::set<int> side_s;
  std::set<VertexPair> cut_edges;
  Rational weight;

  bool operator==(const Bond& o) const { return side_s == o.side_s; }
  bool operator<(const Bond& o) const { return side_s < o.side_s; }
};

using EdgeSet = std::set<VertexPair>;
using BondFamily = std::set<EdgeSet>;

struct Constraint {
  enum Kind { None, SameSide, Opposite };
  Kind kind = None;
  int u = -1, v = -1;

  static Constraint none() { return {}; }
  static Constraint same_side(int u, int v) { return {SameSide, u, v}; }
  static Constraint opposite(int u, int v) { return {Opposite, u, v}; }
};

namespace detail {

constexpr int kEnumGuard = 24;

struct BitGraph {
  std::vector<int> labels;              // bit index -> vertex label
  std::map<int, int> index;             // vertex label -> bit index
  std::vector<std::uint32_t> adj;       // adjacency masks
  std::vector<std::pair<VertexPair, Rational>> edge_list;

  explicit BitGraph(const Graph& g) {
    if (g.vertex_count() > kEnumGuard)
      throw GuardError("bond enumeration guard exceeded (|V| > 24)");
    for (int v : g.vertices()) {
      index[v] = static_cast<int>(labels.size());
      labels.push_back(v);
    }
    adj.assign(labels.size(), 0);
    for (const auto& [p, w] : g.edges()) {
      int a = index.at(p.first), b = index.at(p.second);
      adj[a] |= 1u << b;
      adj[b] |= 1u << a;
      edge_list.emplace_back(p, w);
    }
  }

  int n() const { return static_cast<int>(labels.size()); }

  bool connected(std::uint32_t mask) const {
    if (mask == 0) return false;
    std::uint32_t start = mask & (~mask + 1);
    std::uint32_t seen = start, frontier = start;
    while (frontier) {
      std::uint32_t next = 0;
      std::uint32_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v] & mask & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    return seen == mask;
  }
};

inline Bond bond_from_mask(const BitGraph& bg, std::uint32_t side) {
  Bond b;
  b.weight = 0;
  for (int i = 0; i < bg.n(); ++i)
    if (side & (1u << i)) b.side_s.insert(bg.labels[i]);
  for (const auto& [p, w] : bg.edge_list) {
    bool a = (side >> bg.index.at(p.first)) & 1u;
    bool c = (side >> bg.index.at(p.second)) & 1u;
    if (a != c) {
      b.cut_edges.insert(p);
      b.weight += w;
    }
  }
  return b;
}

}  // namespace detail

// Enumerates all bonds of a connected graph by iterating over vertex subsets
// containing the lowest-labeled vertex and testing both sides connected.
inline std::vector<Bond> enumerate_bonds(const Graph& g) {
  if (!is_connected(g)) throw GraphError("enumerate_bonds: graph not connected");
  detail::BitGraph bg(g);
  std::vector<Bond> out;
  int n = bg.n();
  if (n < 2) return out;
  std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  // bit 0 is the lowest label; enumerate the rest of side_s
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    std::uint32_t side = (rest << 1) | 1u;
    std::uint32_t other = full & ~side;
    if (other == 0) continue;
    if (!bg.connected(side) || !bg.connected(other)) continue;
    out.push_back(detail::bond_from_mask(bg, side));
  }
  return out;
}

inline BondFamily enumerate_bond_family(const Graph& g) {
  BondFamily fam;
  for (const Bond& b : enumerate_bonds(g)) fam.insert(b.cut_edges);
  return fam;
}

inline bool satisfies(const Bond& b, const Constraint& c) {
  switch (c.kind) {
    case Constraint::None: return true;
    case Constraint::SameSide: return b.side_s.count(c.u) == b.side_s.count(c.v);
    case Constraint::Opposite: return b.side_s.count(c.u) != b.side_s.count(c.v);
  }
  return true;
}

// Maximum-weight bond subject to an optional side constraint; absent when no
// bond satisfies the constraint. Ties break toward the lexicographically
// smallest canonical side.
inline std::optional<Bond> maxbond_bruteforce(const Graph& g,
                                              const Constraint& c = Constraint::none()) {
  std::optional<Bond> best;
  for (const Bond& b : enumerate_bonds(g)) {
    if (!satisfies(b, c)) continue;
    if (!best || b.weight > best->weight ||
        (b.weight == best->weight && b.side_s < best->side_s))
      best = b;
  }
  return best;
}

// The families C_uv(G) (mode separated) and C_{u'v'}(G) (mode together) of
// cut-edge sets.
enum class FamilyMode { Separated, Together };

inline BondFamily bond_family(const Graph& g, int u, int v, FamilyMode mode) {
  if (u == v) throw GraphError("bond_family requires u != v");
  Constraint c = mode == FamilyMode::Separated ? Constraint::opposite(u, v)
                                               : Constraint::same_side(u, v);
  BondFamily fam;
  for (const Bond& b : enumerate_bonds(g))
    if (satisfies(b, c)) fam.insert(b.cut_edges);
  return fam;
}

// All pairwise unions {C1 ∪ C2 : C1 in f1, C2 in f2}.
inline BondFamily pairwise_union(const BondFamily& f1, const BondFamily& f2) {
  BondFamily out;
  for (const EdgeSet& a : f1)
    for (const EdgeSet& b : f2) {
      EdgeSet u = a;
      u.insert(b.begin(), b.end());
      out.insert(std::move(u));
    }
  return out;
}

}  // namespace bondpoly
