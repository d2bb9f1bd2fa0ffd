#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bondpoly/rational.hpp"

namespace bondpoly {

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Unordered vertex pair, stored as (min, max).
using VertexPair = std::pair<int, int>;

inline VertexPair vpair(int u, int v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

inline std::string pair_str(const VertexPair& p) {
  return std::to_string(p.first) + "-" + std::to_string(p.second);
}

// Undirected simple graph with exact rational edge weights and a tracked set
// of augmented non-edges. Operations elsewhere treat graphs as immutable
// values; the mutators exist for constructors, parsers and composition.
class Graph {
 public:
  void add_vertex(int v) {
    if (v < 0) throw GraphError("vertex labels must be nonnegative");
    vertices_.insert(v);
  }

  void add_edge(int u, int v, const Rational& w) {
    require_endpoints(u, v);
    VertexPair p = vpair(u, v);
    if (edges_.count(p)) throw GraphError("duplicate edge " + pair_str(p));
    if (non_edges_.count(p)) throw GraphError("edge/non-edge conflict " + pair_str(p));
    edges_.emplace(p, w);
  }

  void add_non_edge(int u, int v) {
    require_endpoints(u, v);
    VertexPair p = vpair(u, v);
    if (edges_.count(p)) throw GraphError("edge/non-edge conflict " + pair_str(p));
    non_edges_.insert(p);
  }

  void remove_edge(int u, int v) {
    auto it = edges_.find(vpair(u, v));
    if (it == edges_.end()) throw GraphError("no such edge " + pair_str(vpair(u, v)));
    edges_.erase(it);
  }

  void set_weight(int u, int v, const Rational& w) {
    auto it = edges_.find(vpair(u, v));
    if (it == edges_.end()) throw GraphError("no such edge " + pair_str(vpair(u, v)));
    it->second = w;
  }

  const std::set<int>& vertices() const { return vertices_; }
  const std::map<VertexPair, Rational>& edges() const { return edges_; }
  const std::set<VertexPair>& non_edges() const { return non_edges_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(int v) const { return vertices_.count(v) != 0; }
  bool has_edge(int u, int v) const { return edges_.count(vpair(u, v)) != 0; }
  bool has_non_edge(int u, int v) const { return non_edges_.count(vpair(u, v)) != 0; }

  const Rational& weight(int u, int v) const {
    auto it = edges_.find(vpair(u, v));
    if (it == edges_.end()) throw GraphError("no such edge " + pair_str(vpair(u, v)));
    return it->second;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [p, w] : edges_) {
      if (p.first == v) out.push_back(p.second);
      else if (p.second == v) out.push_back(p.first);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int degree(int v) const {
    int d = 0;
    for (const auto& [p, w] : edges_)
      if (p.first == v || p.second == v) ++d;
    return d;
  }

  bool operator==(const Graph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_ && non_edges_ == o.non_edges_;
  }

 private:
  void require_endpoints(int u, int v) {
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (!has_vertex(u) || !has_vertex(v))
      throw GraphError("edge endpoint not a vertex: " + pair_str(vpair(u, v)));
  }

  std::set<int> vertices_;
  std::map<VertexPair, Rational> edges_;
  std::set<VertexPair> non_edges_;
};

// --- basic connectivity -----------------------------------------------------

// True iff the induced subgraph g[s] is connected and s is nonempty.
inline bool is_connected(const Graph& g, const std::set<int>& s) {
  if (s.empty()) return false;
  for (int v : s)
    if (!g.has_vertex(v)) throw GraphError("subset vertex not in graph");
  std::set<int> seen;
  std::vector<int> stack{*s.begin()};
  seen.insert(*s.begin());
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [p, w] : g.edges()) {
      int other = -1;
      if (p.first == v && s.count(p.second)) other = p.second;
      else if (p.second == v && s.count(p.first)) other = p.first;
      if (other >= 0 && seen.insert(other).second) stack.push_back(other);
    }
  }
  return seen.size() == s.size();
}

inline bool is_connected(const Graph& g) {
  if (g.vertices().empty()) return false;
  return is_connected(g, g.vertices());
}

inline Graph induced_subgraph(const Graph& g, const std::set<int>& s) {
  Graph out;
  for (int v : s) out.add_vertex(v);
  for (const auto& [p, w] : g.edges())
    if (s.count(p.first) && s.count(p.second)) out.add_edge(p.first, p.second, w);
  for (const auto& p : g.non_edges())
    if (s.count(p.first) && s.count(p.second)) out.add_non_edge(p.first, p.second);
  return out;
}

inline Graph minus_edge(const Graph& g, int u, int v) {
  Graph out = g;
  out.remove_edge(u, v);
  return out;
}

inline Graph with_weight(const Graph& g, int u, int v, const Rational& w) {
  Graph out = g;
  out.set_weight(u, v, w);
  return out;
}

// --- the five base piece families -------------------------------------------

// Wheel W_n: rim vertices 0..n-1 in cyclic order, hub labeled n.
// Spoke i has weight a_i = w(i, hub); rim edge {i, i+1 mod n} has weight b_i.
inline Graph make_wheel(int n, const std::vector<Rational>& spoke_weights,
                        const std::vector<Rational>& rim_weights) {
  if (n < 3) throw GraphError("wheel requires n >= 3");
  if (static_cast<int>(spoke_weights.size()) != n || static_cast<int>(rim_weights.size()) != n)
    throw GraphError("wheel weight arrays must have length n");
  Graph g;
  for (int i = 0; i <= n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, n, spoke_weights[i]);
    g.add_edge(i, (i + 1) % n, rim_weights[i]);
  }
  return g;
}

inline Graph make_wheel_unit(int n) {
  return make_wheel(n, std::vector<Rational>(n, Rational(1)), std::vector<Rational>(n, Rational(1)));
}

inline Graph make_complete(int k) {
  if (k < 2 || k > 5) throw GraphError("make_complete supports k in [2,5]");
  Graph g;
  for (int i = 0; i < k; ++i) g.add_vertex(i);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j, Rational(1));
  return g;
}

// Triangles {0,1,2} and {3,4,5} joined by the matching i -- i+3.
inline Graph make_prism() {
  Graph g;
  for (int i = 0; i < 6; ++i) g.add_vertex(i);
  for (int i = 0; i < 3; ++i) {
    g.add_edge(i, (i + 1) % 3, Rational(1));
    g.add_edge(3 + i, 3 + (i + 1) % 3, Rational(1));
    g.add_edge(i, i + 3, Rational(1));
  }
  return g;
}

inline Graph make_k33() {
  Graph g;
  for (int i = 0; i < 6; ++i) g.add_vertex(i);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) g.add_edge(i, j, Rational(1));
  return g;
}

// --- piece classification ---------------------------------------------------

enum class PieceKind { Wheel, Prism, K2, K3, K33, NotAPiece };

inline std::string piece_kind_str(PieceKind k) {
  switch (k) {
    case PieceKind::Wheel: return "wheel";
    case PieceKind::Prism: return "prism";
    case PieceKind::K2: return "k2";
    case PieceKind::K3: return "k3";
    case PieceKind::K33: return "k33";
    default: return "not-a-piece";
  }
}

struct PieceInfo {
  PieceKind kind = PieceKind::NotAPiece;
  int wheel_n = 0;          // rim length when kind == Wheel
  int hub = -1;             // hub label when kind == Wheel
  std::vector<int> rim;     // rim labels in cyclic order, starting at the
                            // lowest rim label, toward its lower neighbor
};

namespace detail {

// Checks whether g is a wheel with the given hub; fills rim order on success.
inline bool wheel_with_hub(const Graph& g, int hub, PieceInfo& info) {
  int n = g.vertex_count() - 1;
  std::set<int> rim_set = g.vertices();
  rim_set.erase(hub);
  std::map<int, std::vector<int>> rim_adj;
  for (int v : rim_set) {
    if (!g.has_edge(v, hub)) return false;
    for (const auto& [p, w] : g.edges()) {
      if (p.first == v && p.second != hub && rim_set.count(p.second))
        rim_adj[v].push_back(p.second);
      else if (p.second == v && p.first != hub && rim_set.count(p.first))
        rim_adj[v].push_back(p.first);
    }
    if (static_cast<int>(rim_adj[v].size()) != 2) return false;
  }
  // walk the rim cycle from the lowest label toward its smaller neighbor
  int start = *rim_set.begin();
  std::vector<int> order{start};
  int prev = start;
  int cur = std::min(rim_adj[start][0], rim_adj[start][1]);
  while (cur != start) {
    order.push_back(cur);
    int next = rim_adj[cur][0] == prev ? rim_adj[cur][1] : rim_adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) return false;  // rim splits into several cycles
  info.kind = PieceKind::Wheel;
  info.wheel_n = n;
  info.hub = hub;
  info.rim = order;
  return true;
}

inline bool is_triangle(const Graph& g, int a, int b, int c) {
  return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
}

inline bool bipartition(const Graph& g, std::set<int>& side) {
  std::map<int, int> color;
  for (int root : g.vertices()) {
    if (color.count(root)) continue;
    color[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v)) {
        if (!color.count(u)) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  for (auto& [v, c] : color)
    if (c == 0) side.insert(v);
  return true;
}

}  // namespace detail

// Classifies g as one of the base piece families, ignoring weights.
// W_3 and K_4 are the same graph; it is reported as Wheel(3) with the
// lowest-labeled vertex as hub so the choice is deterministic.
inline PieceInfo classify_piece(const Graph& g) {
  PieceInfo info;
  int nv = g.vertex_count(), ne = g.edge_count();
  if (nv == 2 && ne == 1) {
    info.kind = PieceKind::K2;
    return info;
  }
  if (nv == 3 && ne == 3) {
    info.kind = PieceKind::K3;
    return info;
  }
  if (nv >= 4 && ne == 2 * (nv - 1)) {
    int n = nv - 1;
    if (n == 3) {
      // K4: every hub choice works; take the lowest label
      if (detail::wheel_with_hub(g, *g.vertices().begin(), info)) return info;
    } else {
      for (int v : g.vertices()) {
        if (g.degree(v) == n) {
          if (detail::wheel_with_hub(g, v, info)) return info;
          break;  // the degree-n vertex is unique for n >= 4
        }
      }
    }
  }
  if (nv == 6 && ne == 9) {
    bool cubic = true;
    for (int v : g.vertices()) cubic = cubic && g.degree(v) == 3;
    if (cubic) {
      std::set<int> side;
      if (detail::bipartition(g, side)) {
        if (side.size() == 3) {  // 3-regular bipartite on 3+3 is complete bipartite
          info.kind = PieceKind::K33;
          return info;
        }
      } else {
        // prism: two disjoint triangles joined by a perfect matching
        std::vector<int> vs(g.vertices().begin(), g.vertices().end());
        for (int i = 0; i < 6 && info.kind == PieceKind::NotAPiece; ++i)
          for (int j = i + 1; j < 6 && info.kind == PieceKind::NotAPiece; ++j)
            for (int k = j + 1; k < 6; ++k) {
              if (!detail::is_triangle(g, vs[i], vs[j], vs[k])) continue;
              std::set<int> rest = g.vertices();
              rest.erase(vs[i]);
              rest.erase(vs[j]);
              rest.erase(vs[k]);
              auto it = rest.begin();
              int a = *it++, b = *it++, c = *it;
              if (detail::is_triangle(g, a, b, c)) {
                info.kind = PieceKind::Prism;
                return info;
              }
            }
      }
    }
  }
  return info;
}

}  // namespace bondpoly
