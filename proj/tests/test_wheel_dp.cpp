#include <catch2/catch_amalgamated.hpp>

#include "bondpoly/wheel.hpp"
#include "test_util.hpp"

using namespace bondpoly;

namespace {

// Independent oracle for type 1: brute force over all (i, j) pairs of the
// closed-form objective.
std::pair<Rational, std::pair<int, int>> type1_pairs_oracle(const WheelWeights& w) {
  std::optional<Rational> best;
  std::pair<int, int> arg{0, 0};
  for (int i = 1; i <= w.n - 1; ++i) {
    Rational sum = 0;
    for (int j = i; j <= w.n - 1; ++j) {
      sum += w.a[j];
      Rational val = w.b[i - 1] + w.b[j] + sum;
      if (!best || val > *best) {
        best = val;
        arg = {i, j};
      }
    }
  }
  return {*best, arg};
}

// Independent oracle for type 3: enumerate every wrapping arc through the
// edge {0,1}.
Rational type3_wrap_oracle(const WheelWeights& w) {
  std::optional<Rational> best;
  for (int i = 1; i <= w.n - 2; ++i)
    for (int j = i + 2; j <= w.n; ++j) {
      Rational val = w.b[i] + w.b[j - 1] + w.a[0];
      for (int l = 1; l <= i; ++l) val += w.a[l];
      for (int l = j; l <= w.n - 1; ++l) val += w.a[l];
      if (!best || val > *best) best = val;
    }
  return *best;
}

WheelWeights random_wheel(TestRng& rng, int n, int lo = -20, int hi = 20) {
  std::vector<Rational> a(n), b(n);
  for (int k = 0; k < n; ++k) {
    a[k] = Rational(rng.range(lo, hi));
    b[k] = Rational(rng.range(lo, hi));
  }
  return WheelWeights(n, std::move(a), std::move(b));
}

}  // namespace

TEST_CASE("type 1 frozen examples") {
  // n=4, a=(0,1,1,1), b=1: best is the full window (1,3) with value 5
  WheelWeights w(4, {0, 1, 1, 1}, {1, 1, 1, 1});
  auto r = wheel_best_bond_type1(w);
  REQUIRE(r.value == 5);
  REQUIRE(r.i == 1);
  REQUIRE(r.j == 3);

  // n=3 with a parametric middle spoke
  for (int x : {-3, 0, 2, 7}) {
    WheelWeights v(3, {0, Rational(x), 0}, {1, 0, 1});
    auto oracle = type1_pairs_oracle(v);
    auto got = wheel_best_bond_type1(v);
    REQUIRE(got.value == oracle.first);
    if (x >= -1) REQUIRE(got.value == Rational(2 + x));
  }

  // all spokes heavily negative: best arc is a single vertex, value 2 - 10
  WheelWeights neg(5, {-10, -10, -10, -10, -10}, {1, 1, 1, 1, 1});
  auto rn = wheel_best_bond_type1(neg);
  REQUIRE(rn.value == -8);
  REQUIRE(rn.i == 1);
  REQUIRE(rn.j == 1);
}

TEST_CASE("type 1 matches the pair oracle with tracked indices") {
  TestRng rng(101);
  for (int n = 3; n <= 10; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      WheelWeights w = random_wheel(rng, n);
      auto oracle = type1_pairs_oracle(w);
      auto got = wheel_best_bond_type1(w);
      REQUIRE(got.value == oracle.first);
      // tracked indices reproduce the tracked value
      Rational re = w.b[got.i - 1] + w.b[got.j];
      for (int l = got.i; l <= got.j; ++l) re += w.a[l];
      REQUIRE(re == got.value);
    }
  }
}

TEST_CASE("type 3 frozen examples") {
  WheelWeights w4(4, {1, 1, 1, 1}, {1, 1, 1, 1});
  REQUIRE(wheel_best_bond_type3(w4) == 5);  // path {3,0,1}

  TestRng rng(7);
  WheelWeights w5 = random_wheel(rng, 5, 1, 1);
  w5.a[0] = 100;
  REQUIRE(wheel_best_bond_type3(w5) == type3_wrap_oracle(w5));

  WheelWeights z(4, {0, 0, 0, 0}, {0, 0, 0, 0});
  REQUIRE(wheel_best_bond_type3(z) == 0);
}

TEST_CASE("type 3 matches the wrapping oracle") {
  TestRng rng(555);
  for (int n = 3; n <= 10; ++n)
    for (int trial = 0; trial < 100; ++trial) {
      WheelWeights w = random_wheel(rng, n);
      REQUIRE(wheel_best_bond_type3(w) == type3_wrap_oracle(w));
    }
}

TEST_CASE("wheel_maxbond frozen examples") {
  REQUIRE(wheel_maxbond(WheelWeights(4, {1, 1, 1, 1}, {1, 1, 1, 1})).value == 5);
  REQUIRE(wheel_maxbond(WheelWeights(5, std::vector<Rational>(5, 1), std::vector<Rational>(5, 1)))
              .value == 6);
  REQUIRE(wheel_maxbond(WheelWeights(3, {10, 10, 10}, {0, 0, 0})).value == 30);
}

TEST_CASE("wheel_maxbond equals the bond enumeration oracle") {
  TestRng rng(2024);
  for (int n = 3; n <= 9; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      WheelWeights w = random_wheel(rng, n);
      Graph g = make_wheel(n, w.a, w.b);
      auto oracle = maxbond_bruteforce(g);
      MaxBondResult got = wheel_maxbond(w);
      INFO("n=" << n << " trial=" << trial);
      REQUIRE(got.value == oracle->weight);
      // reconstructed bond is valid and consistent
      std::set<int> other;
      for (int v : g.vertices())
        if (!got.bond.side_s.count(v)) other.insert(v);
      REQUIRE(is_connected(g, got.bond.side_s));
      REQUIRE(is_connected(g, other));
      REQUIRE(got.bond.weight == got.value);
    }
  }
}

TEST_CASE("families cover every nontrivial bond") {
  TestRng rng(31337);
  for (int n = 4; n <= 8; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      WheelWeights w = random_wheel(rng, n);
      Graph g = make_wheel(n, w.a, w.b);
      Rational t1 = wheel_best_bond_type1(w).value;
      Rational t2 = detail::scan_type1(n, w.a, w.b, 1).value;
      Rational t3 = wheel_best_bond_type3(w);
      Rational trivial = 0;
      for (const Rational& x : w.a) trivial += x;
      for (const Bond& b : enumerate_bonds(g)) {
        if (b.cut_edges.size() == static_cast<std::size_t>(n) && b.weight == trivial) continue;
        bool covered = t1 >= b.weight || t2 >= b.weight || t3 >= b.weight;
        REQUIRE(covered);
      }
    }
  }
}

TEST_CASE("lexicographic tie-breaking is deterministic") {
  WheelWeights w(4, {0, 0, 0, 0}, {1, 1, 1, 1});
  MaxBondResult r1 = wheel_maxbond(w);
  MaxBondResult r2 = wheel_maxbond(w);
  REQUIRE(r1.bond.side_s == r2.bond.side_s);
  REQUIRE(r1.value == 2);
}
