#pragma once

#include "bondpoly/bonds.hpp"
#include "bondpoly/graph.hpp"

namespace bondpoly {

// Clique-sum operation joining two graphs over one shared vertex (OneSum)
// or a shared vertex pair. TwoSum keeps the shared edge, TwoSumMinus deletes
// it from the composed graph, so the pair becomes a non-edge there.
struct SumOp {
  enum Kind { OneSum, TwoSum, TwoSumMinus };
  Kind kind;
  int u = -1, v = -1;  // v unused for OneSum

  static SumOp one_sum(int v) { return {OneSum, v, -1}; }
  static SumOp two_sum(int u, int v) { return {TwoSum, u, v}; }
  static SumOp two_sum_minus(int u, int v) { return {TwoSumMinus, u, v}; }

  bool operator==(const SumOp& o) const { return kind == o.kind && u == o.u && v == o.v; }
};

// Evaluates g1 <op> g2. Vertices with equal labels are identified; the
// operands must overlap exactly in the named shared labels. For TwoSum the
// shared edge must carry the same weight on both sides.
inline Graph compose_sum(const SumOp& op, const Graph& g1, const Graph& g2) {
  std::set<int> overlap;
  for (int v : g1.vertices())
    if (g2.has_vertex(v)) overlap.insert(v);
  std::set<int> expected = op.kind == SumOp::OneSum ? std::set<int>{op.u}
                                                    : std::set<int>{op.u, op.v};
  if (overlap != expected) throw GraphError("compose_sum: operands overlap mismatch");

  Graph out = g1;
  if (op.kind != SumOp::OneSum) {
    if (!g1.has_edge(op.u, op.v) || !g2.has_edge(op.u, op.v))
      throw GraphError("compose_sum: shared pair must be an edge of both operands");
    if (op.kind == SumOp::TwoSum && g1.weight(op.u, op.v) != g2.weight(op.u, op.v))
      throw GraphError("compose_sum: shared edge weight mismatch");
  }
  for (int v : g2.vertices())
    if (!out.has_vertex(v)) out.add_vertex(v);
  for (const auto& [p, w] : g2.edges()) {
    if (p == vpair(op.u, op.v) && op.kind != SumOp::OneSum) continue;
    out.add_edge(p.first, p.second, w);
  }
  for (const auto& p : g2.non_edges())
    if (!out.has_non_edge(p.first, p.second)) out.add_non_edge(p.first, p.second);
  if (op.kind == SumOp::TwoSumMinus) {
    out.remove_edge(op.u, op.v);
  }
  return out;
}

// Bond family of a 1-/2-sum predicted from the operand families, without
// enumerating the composition. Case split:
//   1. shared vertex:            C(G1) ∪ C(G2)
//   2. shared edge kept:         C_e'(G1) ∪ C_e'(G2) ∪ (C_e(G1) ⊎ C_e(G2))
//   3. shared edge deleted, exactly one of Gi∖e connected (G1 the connected
//      one):                     C(G1∖e) ∪ C_e'(G2)
//   4. shared edge deleted, both connected:
//                                C_e'(G1) ∪ C_e'(G2) ∪ (C_uv(G1∖e) ⊎ C_uv(G2∖e))
inline BondFamily predicted_bonds(const SumOp& op, const Graph& g1, const Graph& g2) {
  if (!is_connected(g1) || !is_connected(g2))
    throw GraphError("predicted_bonds: operands must be connected");

  if (op.kind == SumOp::OneSum) {
    BondFamily out = enumerate_bond_family(g1);
    BondFamily f2 = enumerate_bond_family(g2);
    out.insert(f2.begin(), f2.end());
    return out;
  }

  int u = op.u, v = op.v;
  if (!g1.has_edge(u, v) || !g2.has_edge(u, v))
    throw GraphError("predicted_bonds: shared pair must be an edge of both operands");

  if (op.kind == SumOp::TwoSum) {
    BondFamily out = bond_family(g1, u, v, FamilyMode::Together);
    BondFamily same2 = bond_family(g2, u, v, FamilyMode::Together);
    out.insert(same2.begin(), same2.end());
    BondFamily cross = pairwise_union(bond_family(g1, u, v, FamilyMode::Separated),
                                      bond_family(g2, u, v, FamilyMode::Separated));
    out.insert(cross.begin(), cross.end());
    return out;
  }

  // TwoSumMinus: orient by connectivity of the sides after edge removal
  // rather than by operand order.
  Graph d1 = minus_edge(g1, u, v), d2 = minus_edge(g2, u, v);
  bool c1 = is_connected(d1), c2 = is_connected(d2);
  if (c1 && c2) {
    BondFamily out = bond_family(g1, u, v, FamilyMode::Together);
    BondFamily same2 = bond_family(g2, u, v, FamilyMode::Together);
    out.insert(same2.begin(), same2.end());
    BondFamily cross = pairwise_union(bond_family(d1, u, v, FamilyMode::Separated),
                                      bond_family(d2, u, v, FamilyMode::Separated));
    out.insert(cross.begin(), cross.end());
    return out;
  }
  if (c1 != c2) {
    const Graph& conn_minus = c1 ? d1 : d2;    // G1∖e in the lemma's orientation
    const Graph& other = c1 ? g2 : g1;         // G2 with the edge still present
    BondFamily out = enumerate_bond_family(conn_minus);
    BondFamily same = bond_family(other, u, v, FamilyMode::Together);
    out.insert(same.begin(), same.end());
    return out;
  }
  throw GraphError("predicted_bonds: both sides disconnect after removing the shared edge");
}

}  // namespace bondpoly
