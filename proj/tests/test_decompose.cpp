#include <catch2/catch_amalgamated.hpp>

#include "bondpoly/decompose.hpp"
#include "bondpoly/io.hpp"
#include "bondpoly/minor.hpp"
#include "bondpoly/sexpr.hpp"

using namespace bondpoly;

namespace {

Graph relabel(const Graph& g, const std::map<int, int>& map) {
  Graph out;
  for (int v : g.vertices()) out.add_vertex(map.at(v));
  for (const auto& [p, w] : g.edges()) out.add_edge(map.at(p.first), map.at(p.second), w);
  return out;
}

Graph two_k4_shared_edge() {
  Graph a = make_complete(4);
  Graph b = relabel(make_complete(4), {{0, 0}, {1, 1}, {2, 4}, {3, 5}});
  return compose_sum(SumOp::two_sum(0, 1), a, b);
}

}  // namespace

TEST_CASE("biconnected components") {
  Graph a = make_complete(3);
  Graph b = relabel(make_complete(3), {{0, 0}, {1, 3}, {2, 4}});
  Graph g = compose_sum(SumOp::one_sum(0), a, b);
  BlockDecomposition bd = biconnected_components(g);
  REQUIRE(bd.blocks.size() == 2);
  REQUIRE(bd.articulations == std::set<int>{0});

  REQUIRE(biconnected_components(make_complete(4)).blocks.size() == 1);

  Graph path = parse_graph("v 3\ne 0 1 1\ne 1 2 1\n");
  BlockDecomposition pd = biconnected_components(path);
  REQUIRE(pd.blocks.size() == 2);
  REQUIRE(pd.articulations == std::set<int>{1});
}

TEST_CASE("find_split_pair") {
  auto sp = find_split_pair(two_k4_shared_edge());
  REQUIRE(sp.has_value());
  REQUIRE(sp->u == 0);
  REQUIRE(sp->v == 1);

  REQUIRE_FALSE(find_split_pair(make_wheel_unit(6)).has_value());

  Graph c4 = parse_graph("v 4\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 0 1\n");
  auto c = find_split_pair(c4);
  REQUIRE(c.has_value());
  REQUIRE(c->u == 0);
  REQUIRE(c->v == 2);
  REQUIRE(c->side1 == std::set<int>{0, 1, 2});
  REQUIRE(c->side2 == std::set<int>{0, 2, 3});

  REQUIRE_THROWS_AS(find_split_pair(make_complete(3)), GraphError);
}

TEST_CASE("decompose single pieces") {
  SumDecomposition d = decompose(make_wheel_unit(5));
  REQUIRE(d.root->is_leaf);
  REQUIRE(d.root->piece_info.kind == PieceKind::Wheel);
  REQUIRE(d.root->piece_info.wheel_n == 5);
  REQUIRE(recompose(d) == make_wheel_unit(5));
}

TEST_CASE("decompose two K4 over an edge") {
  Graph g = two_k4_shared_edge();
  SumDecomposition d = decompose(g);
  REQUIRE_FALSE(d.root->is_leaf);
  REQUIRE(d.root->op == SumOp::two_sum(0, 1));
  REQUIRE(d.root->left->is_leaf);
  REQUIRE(d.root->right->is_leaf);
  REQUIRE(d.root->left->piece_info.kind == PieceKind::Wheel);
  REQUIRE(d.root->left->piece_info.wheel_n == 3);
  REQUIRE(d.root->right->piece_info.wheel_n == 3);
  REQUIRE(recompose(d) == g);
}

TEST_CASE("decompose 4-cycle into triangles over a virtual edge") {
  Graph c4 = parse_graph("v 4\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 0 1\n");
  SumDecomposition d = decompose(c4);
  REQUIRE_FALSE(d.root->is_leaf);
  REQUIRE(d.root->op.kind == SumOp::TwoSumMinus);
  REQUIRE(d.root->left->piece_info.kind == PieceKind::K3);
  REQUIRE(d.root->right->piece_info.kind == PieceKind::K3);
  // virtual edge carries weight 0 inside the pieces
  REQUIRE(d.root->left->piece.weight(d.root->op.u, d.root->op.v) == 0);
  REQUIRE(recompose(d) == c4);
}

TEST_CASE("decompose rejects K5") {
  REQUIRE(has_k5e_minor(make_complete(5)));
  REQUIRE_THROWS_AS(decompose(make_complete(5)), NotMinorFreeError);
}

TEST_CASE("every leaf classifies and the tree is left-deep") {
  Graph g = two_k4_shared_edge();
  Graph h = relabel(make_wheel_unit(4), {{0, 1}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  Graph sum = compose_sum(SumOp::one_sum(1), g, h);
  SumDecomposition d = decompose(sum);
  for (const DecompNode* leaf : d.leaves())
    REQUIRE(leaf->piece_info.kind != PieceKind::NotAPiece);
  const DecompNode* n = d.root.get();
  while (!n->is_leaf) {
    REQUIRE(n->right->is_leaf);
    n = n->left.get();
  }
  REQUIRE(recompose(d) == sum);
  REQUIRE_FALSE(has_k5e_minor(sum));
}

TEST_CASE("sexpr round-trip") {
  Graph c4 = parse_graph("v 4\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 0 1\n");
  SumDecomposition d = decompose(c4);
  std::string text = render_sexpr(d);
  REQUIRE(text.substr(0, 6) == "(2sum-");
  SumDecomposition back = parse_sexpr(text);
  REQUIRE(recompose(back) == c4);
  REQUIRE(render_sexpr(back) == text);

  REQUIRE_THROWS_AS(parse_sexpr("(piece k3 (v 0 1 2) (e 0 1 1))"), GraphError);
}
