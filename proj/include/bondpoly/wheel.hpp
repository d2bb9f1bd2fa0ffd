#pragma once

#include "bondpoly/bonds.hpp"
#include "bondpoly/graph.hpp"

namespace bondpoly {

// Weighted wheel W_n: a_i = w(i, hub), b_i = w(i, i+1 mod n). Rim vertices
// are 0..n-1, the hub is n.
struct WheelWeights {
  int n = 0;
  std::vector<Rational> a, b;

  WheelWeights() = default;
  WheelWeights(int n_, std::vector<Rational> a_, std::vector<Rational> b_)
      : n(n_), a(std::move(a_)), b(std::move(b_)) {
    if (n < 3) throw GraphError("wheel weights require n >= 3");
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
      throw GraphError("wheel weight arrays must have length n");
  }
};

struct MaxBondResult {
  Rational value;
  Bond bond;
};

namespace detail {

// Every non-trivial wheel bond cuts off a rim path ("arc"). The three scan
// families cover all of them:
//   type 1: arcs within {1..n-1}      (avoid vertex 0)
//   type 2: type 1 rotated by one     (avoid vertex 1)
//   type 3: arcs containing edge {0,1}
// An arc {i..j} within the window costs b_{i-1} + b_j + sum a_[i..j].
struct ArcScanResult {
  Rational value;
  int i = 0, j = 0;  // arc endpoints in rotated coordinates
};

// Kadane-style scan over arcs {i..j}, 1 <= i <= j <= n-1, on weights rotated
// by `rot` (index k reads a[(k+rot) % n]). State mirrors the classic
// best-so-far / suffix-best pair; ties pick the lexicographically smallest
// (i, j).
template <typename Vec>
ArcScanResult scan_type1(int n, const Vec& a, const Vec& b, int rot) {
  auto A = [&](int k) -> const Rational& { return a[(k + rot) % n]; };
  auto B = [&](int k) -> const Rational& { return b[(k + rot) % n]; };

  // open suffix best: max_i b_{i-1} + sum a_[i..j], without the closing b_j
  Rational suffix = B(0) + A(1);
  int suffix_i = 1;
  Rational best = suffix + B(1);
  int best_i = 1, best_j = 1;
  for (int j = 2; j <= n - 1; ++j) {
    if (suffix < B(j - 1)) {  // restart at i = j; on ties keep the smaller i
      suffix = B(j - 1);
      suffix_i = j;
    }
    suffix += A(j);
    Rational cand = suffix + B(j);
    if (cand > best || (cand == best && std::pair(suffix_i, j) < std::pair(best_i, best_j))) {
      best = cand;
      best_i = suffix_i;
      best_j = j;
    }
  }
  return {best, best_i, best_j};
}

// Arcs through edge {0,1}: S = {j..n-1, 0, 1..i} with 1 <= i, i+2 <= j <= n
// (j = n means the left half is just vertex 0). Cut: b_i, b_{j-1}, spokes of
// S. Scanned with running prefix/suffix sums, O(1) extra space.
struct Type3Result {
  Rational value;
  int i = 0, j = 0;
};

inline std::optional<Type3Result> scan_type3(const WheelWeights& w) {
  int n = w.n;
  if (n < 3) return std::nullopt;
  // right half value R(i) = b_i + sum a_[1..i]; left half value
  // L(j) = b_{j-1} + a_0 + sum a_[j..n-1]. Answer: max R(i) + maxL(i+2).
  Rational pa = 0;  // sum a_[1..i]
  for (int l = 1; l <= n - 2; ++l) pa += w.a[l];

  Rational best_left = w.b[n - 1] + w.a[0];  // L(n)
  int best_left_j = n;
  Rational sa = 0;  // suffix sum a_[j..n-1] for the next j to enter
  std::optional<Type3Result> best;
  for (int i = n - 2; i >= 1; --i) {
    // ensure best_left covers j in [i+2, n]
    // (entering j = i+2 when i steps down; at i = n-2 only j = n qualifies)
    Rational right = w.b[i] + pa;
    Rational cand = right + best_left;
    if (!best || cand > best->value ||
        (cand == best->value && std::pair(i, best_left_j) < std::pair(best->i, best->j)))
      best = Type3Result{cand, i, best_left_j};
    pa -= w.a[i];
    // j = i+1 becomes eligible for the next iteration (i-1): include it
    int j = i + 1;
    if (j >= 3) {
      sa += w.a[j];  // now sa = sum a_[j..n-1]
      Rational lj = w.b[j - 1] + w.a[0] + sa;
      if (lj > best_left || (lj == best_left && j < best_left_j)) {
        best_left = lj;
        best_left_j = j;
      }
    }
  }
  return best;
}

inline std::set<int> arc_vertices(int n, int i, int j, int rot) {
  std::set<int> s;
  for (int k = i; k <= j; ++k) s.insert((k + rot) % n);
  return s;
}

inline Bond wheel_bond_from_side(const WheelWeights& w, const std::set<int>& rim_side) {
  // rim_side is the cut-off arc; canonical side must contain vertex 0
  Bond b;
  std::set<int> side = rim_side;
  if (!side.count(0)) {
    side.clear();
    for (int v = 0; v < w.n; ++v)
      if (!rim_side.count(v)) side.insert(v);
    side.insert(w.n);  // hub
  }
  b.side_s = side;
  b.weight = 0;
  auto crosses = [&](int u, int v) { return side.count(u) != side.count(v); };
  for (int k = 0; k < w.n; ++k) {
    if (crosses(k, w.n)) {
      b.cut_edges.insert(vpair(k, w.n));
      b.weight += w.a[k];
    }
    if (crosses(k, (k + 1) % w.n)) {
      b.cut_edges.insert(vpair(k, (k + 1) % w.n));
      b.weight += w.b[k];
    }
  }
  return b;
}

}  // namespace detail

// Best bond whose cut-off rim path avoids vertex 0, with the smallest (i, j)
// attaining it: max over 1 <= i <= j <= n-1 of b_{i-1} + b_j + sum a_[i..j].
struct WheelType1Result {
  Rational value;
  int i, j;
};

inline WheelType1Result wheel_best_bond_type1(const WheelWeights& w) {
  detail::ArcScanResult r = detail::scan_type1(w.n, w.a, w.b, 0);
  return {r.value, r.i, r.j};
}

// Best bond whose cut-off rim path wraps around vertex 0 via edge {0,1}.
inline Rational wheel_best_bond_type3(const WheelWeights& w) {
  auto r = detail::scan_type3(w);
  if (!r) throw GraphError("type-3 scan requires n >= 3");
  return r->value;
}

// Maximum-weight bond of a wheel in O(n): the best of the trivial bond
// (hub versus rim), the three arc families, with bond reconstruction.
inline MaxBondResult wheel_maxbond(const WheelWeights& w) {
  int n = w.n;
  struct Candidate {
    Rational value;
    std::set<int> arc;  // empty means trivial bond
  };
  std::vector<Candidate> cands;

  Rational trivial = 0;
  for (const Rational& x : w.a) trivial += x;
  cands.push_back({trivial, {}});

  detail::ArcScanResult t1 = detail::scan_type1(n, w.a, w.b, 0);
  cands.push_back({t1.value, detail::arc_vertices(n, t1.i, t1.j, 0)});

  detail::ArcScanResult t2 = detail::scan_type1(n, w.a, w.b, 1);
  cands.push_back({t2.value, detail::arc_vertices(n, t2.i, t2.j, 1)});

  if (auto t3 = detail::scan_type3(w)) {
    std::set<int> arc;
    for (int k = t3->j; k <= n - 1; ++k) arc.insert(k);
    for (int k = 0; k <= t3->i; ++k) arc.insert(k);
    cands.push_back({t3->value, arc});
  }

  const Candidate* best = &cands[0];
  for (const Candidate& c : cands)
    if (c.value > best->value) best = &c;

  // rebuild all best-valued bonds and pick the lexicographically smallest side
  std::optional<Bond> bond;
  for (const Candidate& c : cands) {
    if (c.value != best->value) continue;
    std::set<int> side = c.arc;
    if (side.empty())  // trivial bond: the whole rim against the hub
      for (int k = 0; k < n; ++k) side.insert(k);
    Bond b = detail::wheel_bond_from_side(w, side);
    if (!bond || b.side_s < bond->side_s) bond = b;
  }
  return {best->value, *bond};
}

// Wheel weights read off a classified wheel piece: position k of the rim
// order maps to rim vertex k, the hub maps to n.
inline WheelWeights wheel_weights_from_piece(const Graph& g, const PieceInfo& info) {
  if (info.kind != PieceKind::Wheel) throw GraphError("not a wheel piece");
  int n = info.wheel_n;
  std::vector<Rational> a(n), b(n);
  for (int k = 0; k < n; ++k) {
    a[k] = g.weight(info.rim[k], info.hub);
    b[k] = g.weight(info.rim[k], info.rim[(k + 1) % n]);
  }
  return WheelWeights(n, std::move(a), std::move(b));
}

}  // namespace bondpoly
