#pragma once

#include <cctype>
#include <sstream>

#include "bondpoly/decompose.hpp"

namespace bondpoly {

// Decomposition trees serialize as s-expressions:
//   expr  := piece | (1sum <v> expr expr) | (2sum <u> <v> expr expr)
//            | (2sum- <u> <v> expr expr)
//   piece := (piece <kind> (v <label>...) (e <u> <v> <weight>)...)
//   kind  := k2 | k3 | k33 | prism | wheel <n> <hub>
// The second argument of every operator node is itself a piece (trees are
// left-deep).

namespace detail {

inline void render_node(const DecompNode* n, std::ostringstream& out) {
  if (n->is_leaf) {
    out << "(piece " << piece_kind_str(n->piece_info.kind);
    if (n->piece_info.kind == PieceKind::Wheel)
      out << " " << n->piece_info.wheel_n << " " << n->piece_info.hub;
    out << " (v";
    for (int v : n->piece.vertices()) out << " " << v;
    out << ")";
    for (const auto& [p, w] : n->piece.edges())
      out << " (e " << p.first << " " << p.second << " " << rat_str(w) << ")";
    out << ")";
    return;
  }
  switch (n->op.kind) {
    case SumOp::OneSum: out << "(1sum " << n->op.u << " "; break;
    case SumOp::TwoSum: out << "(2sum " << n->op.u << " " << n->op.v << " "; break;
    case SumOp::TwoSumMinus: out << "(2sum- " << n->op.u << " " << n->op.v << " "; break;
  }
  render_node(n->left.get(), out);
  out << " ";
  render_node(n->right.get(), out);
  out << ")";
}

struct SexprTokens {
  std::vector<std::string> toks;
  std::size_t pos = 0;

  explicit SexprTokens(const std::string& text) {
    std::string cur;
    for (char c : text) {
      if (c == '(' || c == ')') {
        if (!cur.empty()) toks.push_back(cur), cur.clear();
        toks.push_back(std::string(1, c));
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) toks.push_back(cur), cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) toks.push_back(cur);
  }

  const std::string& next() {
    if (pos >= toks.size()) throw GraphError("s-expression: unexpected end");
    return toks[pos++];
  }
  void expect(const std::string& s) {
    if (next() != s) throw GraphError("s-expression: expected '" + s + "'");
  }
  const std::string& peek() {
    if (pos >= toks.size()) throw GraphError("s-expression: unexpected end");
    return toks[pos];
  }
};

inline std::unique_ptr<DecompNode> parse_node(SexprTokens& t) {
  t.expect("(");
  std::string head = t.next();
  auto node = std::make_unique<DecompNode>();
  if (head == "piece") {
    node->is_leaf = true;
    std::string kind = t.next();
    if (kind == "wheel") {
      t.next();  // n, re-derived by classify below
      t.next();  // hub
    }
    t.expect("(");
    t.expect("v");
    while (t.peek() != ")") node->piece.add_vertex(std::stoi(t.next()));
    t.expect(")");
    while (t.peek() == "(") {
      t.expect("(");
      t.expect("e");
      int u = std::stoi(t.next());
      int v = std::stoi(t.next());
      Rational w = parse_rational(t.next());
      t.expect(")");
      node->piece.add_edge(u, v, w);
    }
    t.expect(")");
    node->piece_info = classify_piece(node->piece);
    if (node->piece_info.kind == PieceKind::NotAPiece)
      throw GraphError("s-expression: leaf is not a valid piece");
    if (piece_kind_str(node->piece_info.kind) != kind)
      throw GraphError("s-expression: piece kind mismatch");
    return node;
  }
  if (head == "1sum") {
    node->op = SumOp::one_sum(std::stoi(t.next()));
  } else if (head == "2sum") {
    int u = std::stoi(t.next()), v = std::stoi(t.next());
    node->op = SumOp::two_sum(u, v);
  } else if (head == "2sum-") {
    int u = std::stoi(t.next()), v = std::stoi(t.next());
    node->op = SumOp::two_sum_minus(u, v);
  } else {
    throw GraphError("s-expression: unknown operator '" + head + "'");
  }
  node->left = parse_node(t);
  node->right = parse_node(t);
  t.expect(")");
  return node;
}

}  // namespace detail

inline std::string render_sexpr(const SumDecomposition& d) {
  std::ostringstream out;
  detail::render_node(d.root.get(), out);
  return out.str();
}

inline SumDecomposition parse_sexpr(const std::string& text) {
  detail::SexprTokens t(text);
  SumDecomposition d;
  d.root = detail::parse_node(t);
  if (t.pos != t.toks.size()) throw GraphError("s-expression: trailing tokens");
  return d;
}

}  // namespace bondpoly
