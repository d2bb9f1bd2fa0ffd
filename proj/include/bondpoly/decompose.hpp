#pragma once

#include <memory>

#include "bondpoly/graph.hpp"
#include "bondpoly/sums.hpp"

namespace bondpoly {

class NotMinorFreeError : public std::runtime_error {
 public:
  explicit NotMinorFreeError(const std::string& what) : std::runtime_error(what) {}
};

// --- biconnected components ---------------------------------------------------

struct BlockDecomposition {
  std::vector<Graph> blocks;      // discovery order
  std::set<int> articulations;
};

// Blocks (2-connected components and bridge edges) of a connected graph,
// with the articulation vertices joining them. Reassembling the blocks via
// OneSum at articulation vertices yields the graph back.
inline BlockDecomposition biconnected_components(const Graph& g) {
  if (!is_connected(g)) throw GraphError("biconnected_components: graph not connected");
  BlockDecomposition out;
  if (g.vertex_count() < 2) return out;

  std::map<int, int> disc, low;
  std::vector<VertexPair> edge_stack;
  int timer = 0;

  auto emit_block = [&](const VertexPair& until) {
    std::set<int> vs;
    std::vector<VertexPair> es;
    while (true) {
      VertexPair e = edge_stack.back();
      edge_stack.pop_back();
      es.push_back(e);
      vs.insert(e.first);
      vs.insert(e.second);
      if (e == until) break;
    }
    Graph block;
    for (int v : vs) block.add_vertex(v);
    for (const VertexPair& e : es) block.add_edge(e.first, e.second, g.weight(e.first, e.second));
    out.blocks.push_back(std::move(block));
  };

  // iterative DFS, neighbors in sorted order
  struct Frame {
    int v, parent;
    std::vector<int> nbrs;
    std::size_t next = 0;
    int children = 0;
  };
  int root = *g.vertices().begin();
  std::vector<Frame> stack;
  stack.push_back({root, -1, g.neighbors(root)});
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < f.nbrs.size()) {
      int w = f.nbrs[f.next++];
      if (w == f.parent) continue;
      if (!disc.count(w)) {
        ++f.children;
        edge_stack.push_back(vpair(f.v, w));
        disc[w] = low[w] = timer++;
        stack.push_back({w, f.v, g.neighbors(w)});
      } else if (disc[w] < disc[f.v]) {
        edge_stack.push_back(vpair(f.v, w));
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    } else {
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) out.articulations.insert(done.v);
        break;
      }
      Frame& p = stack.back();
      low[p.v] = std::min(low[p.v], low[done.v]);
      if (low[done.v] >= disc[p.v]) {
        if (p.parent != -1) out.articulations.insert(p.v);
        else if (p.children >= 2) out.articulations.insert(p.v);
        emit_block(vpair(p.v, done.v));
      }
    }
  }
  return out;
}

inline bool is_biconnected(const Graph& g) {
  if (g.vertex_count() < 3) return g.vertex_count() == 2 && g.edge_count() == 1;
  if (!is_connected(g)) return false;
  return biconnected_components(g).blocks.size() == 1;
}

// --- split pairs ----------------------------------------------------------------

struct SplitPair {
  int u, v;
  std::set<int> side1, side2;  // both include u and v; side1 holds the lowest
                               // vertex among components of g minus {u,v}
};

// A 2-vertex separator of a 2-connected graph with its two merged sides, or
// absent when the graph is 3-connected. Deterministic: lexicographically
// smallest (u, v).
inline std::optional<SplitPair> find_split_pair(const Graph& g) {
  if (g.vertex_count() < 4 || !is_biconnected(g))
    throw GraphError("find_split_pair requires a 2-connected graph on >= 4 vertices");
  for (int u : g.vertices()) {
    for (int v : g.vertices()) {
      if (v <= u) continue;
      std::set<int> rest = g.vertices();
      rest.erase(u);
      rest.erase(v);
      if (is_connected(g, rest)) continue;
      // collect the component of the lowest remaining vertex
      std::set<int> comp;
      std::vector<int> bfs{*rest.begin()};
      comp.insert(*rest.begin());
      while (!bfs.empty()) {
        int x = bfs.back();
        bfs.pop_back();
        for (int y : g.neighbors(x))
          if (rest.count(y) && comp.insert(y).second) bfs.push_back(y);
      }
      SplitPair sp;
      sp.u = u;
      sp.v = v;
      sp.side1 = comp;
      sp.side1.insert(u);
      sp.side1.insert(v);
      for (int x : rest)
        if (!comp.count(x)) sp.side2.insert(x);
      sp.side2.insert(u);
      sp.side2.insert(v);
      return sp;
    }
  }
  return std::nullopt;
}

// --- sum decomposition -----------------------------------------------------------

// Left-deep expression tree: every internal node joins the accumulated left
// subtree with a single leaf piece, matching G1 (+) G2 (+) ... (+) Gl.
struct DecompNode {
  bool is_leaf = false;
  Graph piece;            // leaf payload
  PieceInfo piece_info;   // valid for leaves
  SumOp op{SumOp::OneSum, -1, -1};
  std::unique_ptr<DecompNode> left, right;
};

struct SumDecomposition {
  std::unique_ptr<DecompNode> root;

  std::vector<const DecompNode*> leaves() const {
    std::vector<const DecompNode*> out;
    collect(root.get(), out);
    return out;
  }

 private:
  static void collect(const DecompNode* n, std::vector<const DecompNode*>& out) {
    if (!n) return;
    if (n->is_leaf) {
      out.push_back(n);
      return;
    }
    collect(n->left.get(), out);
    collect(n->right.get(), out);
  }
};

namespace detail {

struct Join {
  Graph piece;
  PieceInfo info;
  SumOp op{SumOp::OneSum, -1, -1};  // join with everything before; unused at index 0
};

// Peels classifiable pieces off a block, base piece first. When keep >= 0 the
// base piece must contain vertex `keep` (the articulation the block hangs on).
inline void peel_block(const Graph& block, int keep, std::vector<Join>& out) {
  PieceInfo info = classify_piece(block);
  if (info.kind != PieceKind::NotAPiece) {
    out.push_back({block, info, SumOp::one_sum(-1)});
    return;
  }
  if (block.vertex_count() >= 4) {
    for (int u : block.vertices()) {
      for (int v : block.vertices()) {
        if (v <= u) continue;
        std::set<int> rest = block.vertices();
        rest.erase(u);
        rest.erase(v);
        if (is_connected(block, rest)) continue;
        // components of block minus {u,v}, ordered by their lowest vertex
        std::vector<std::set<int>> comps;
        std::set<int> unseen = rest;
        while (!unseen.empty()) {
          std::set<int> comp{*unseen.begin()};
          std::vector<int> bfs{*unseen.begin()};
          while (!bfs.empty()) {
            int x = bfs.back();
            bfs.pop_back();
            for (int y : block.neighbors(x))
              if (unseen.count(y) && !comp.count(y) && rest.count(y)) {
                comp.insert(y);
                bfs.push_back(y);
              }
          }
          for (int x : comp) unseen.erase(x);
          comps.push_back(std::move(comp));
        }
        bool real_edge = block.has_edge(u, v);
        for (const std::set<int>& comp : comps) {
          if (keep >= 0 && comp.count(keep)) continue;
          std::set<int> side_vs = comp;
          side_vs.insert(u);
          side_vs.insert(v);
          Graph side = induced_subgraph(block, side_vs);
          if (!real_edge) side.add_edge(u, v, Rational(0));
          PieceInfo side_info = classify_piece(side);
          if (side_info.kind == PieceKind::NotAPiece) continue;
          std::set<int> rest_vs;
          for (int x : block.vertices())
            if (!comp.count(x)) rest_vs.insert(x);
          Graph rest_graph = induced_subgraph(block, rest_vs);
          if (!real_edge) rest_graph.add_edge(u, v, Rational(0));
          peel_block(rest_graph, keep, out);
          SumOp op = real_edge ? SumOp::two_sum(u, v) : SumOp::two_sum_minus(u, v);
          out.push_back({std::move(side), side_info, op});
          return;
        }
      }
    }
  }
  throw NotMinorFreeError("block is not decomposable over wheel/Prism/K2/K3/K33 pieces");
}

}  // namespace detail

// Decomposes a connected graph into the sum expression over the five piece
// families: blocks joined by OneSum at articulation vertices, split pairs
// inside blocks joined by TwoSum (shared edge) or TwoSumMinus (virtual edge,
// weight 0 inside the pieces). Throws NotMinorFreeError when some leaf fails
// classification, which by Wagner's characterization certifies a K5-minus-
// edge minor.
inline SumDecomposition decompose(const Graph& g) {
  if (!is_connected(g)) throw GraphError("decompose: graph not connected");
  if (g.vertex_count() < 2) throw GraphError("decompose: need at least 2 vertices");

  BlockDecomposition bd = biconnected_components(g);

  // chain blocks so each next one shares exactly one vertex with the union
  std::vector<Graph> order;
  std::vector<int> attach;  // articulation vertex joining block i (i >= 1)
  std::vector<bool> used(bd.blocks.size(), false);
  std::set<int> covered;
  for (std::size_t step = 0; step < bd.blocks.size(); ++step) {
    bool placed = false;
    for (std::size_t i = 0; i < bd.blocks.size() && !placed; ++i) {
      if (used[i]) continue;
      if (step == 0) {
        used[i] = true;
        order.push_back(bd.blocks[i]);
        attach.push_back(-1);
        covered.insert(bd.blocks[i].vertices().begin(), bd.blocks[i].vertices().end());
        placed = true;
      } else {
        std::vector<int> shared;
        for (int v : bd.blocks[i].vertices())
          if (covered.count(v)) shared.push_back(v);
        if (shared.size() == 1) {
          used[i] = true;
          order.push_back(bd.blocks[i]);
          attach.push_back(shared[0]);
          covered.insert(bd.blocks[i].vertices().begin(), bd.blocks[i].vertices().end());
          placed = true;
        }
      }
    }
    if (!placed) throw GraphError("decompose: block chaining failed");
  }

  std::vector<detail::Join> joins;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t base = joins.size();
    detail::peel_block(order[i], attach[i], joins);
    if (i > 0) joins[base].op = SumOp::one_sum(attach[i]);
  }

  SumDecomposition d;
  for (std::size_t i = 0; i < joins.size(); ++i) {
    auto leaf = std::make_unique<DecompNode>();
    leaf->is_leaf = true;
    leaf->piece = std::move(joins[i].piece);
    leaf->piece_info = std::move(joins[i].info);
    if (i == 0) {
      d.root = std::move(leaf);
    } else {
      auto node = std::make_unique<DecompNode>();
      node->op = joins[i].op;
      node->left = std::move(d.root);
      node->right = std::move(leaf);
      d.root = std::move(node);
    }
  }
  return d;
}

// Evaluates the expression tree back into a graph. TwoSumMinus deletes the
// shared (virtual) edge; TwoSum keeps it and requires agreeing weights.
inline Graph recompose_node(const DecompNode* n) {
  if (!n) throw GraphError("recompose: empty tree");
  if (n->is_leaf) return n->piece;
  Graph left = recompose_node(n->left.get());
  Graph right = recompose_node(n->right.get());
  return compose_sum(n->op, left, right);
}

inline Graph recompose(const SumDecomposition& d) { return recompose_node(d.root.get()); }

}  // namespace bondpoly
