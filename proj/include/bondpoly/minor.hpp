#pragma once

#include <bit>
#include <cstdint>

#include "bondpoly/bonds.hpp"
#include "bondpoly/graph.hpp"

namespace bondpoly {

namespace detail {

// Branch-set search for a K5-minus-one-edge minor inside one connected
// component, given as bitmask adjacency. Looks for a partition of the
// component into 5 connected parts with at most one non-adjacent part pair.
// (A model with unused vertices extends to a full partition by absorbing
// each unused vertex into an adjacent part, which only adds adjacencies.)
class K5eSearch {
 public:
  explicit K5eSearch(const std::vector<std::uint32_t>& adj) : adj_(adj) {}

  bool run(std::uint32_t mask) {
    if (std::popcount(mask) < 5) return false;
    return extend(mask, 0);
  }

 private:
  bool extend(std::uint32_t remaining, int depth) {
    if (depth == 4) {
      if (remaining == 0) return false;
      if (!connected(remaining)) return false;
      int missing = missing_;
      for (int i = 0; i < 4; ++i)
        if ((reach_[i] & remaining) == 0) ++missing;
      return missing <= 1;
    }
    int root = std::countr_zero(remaining);
    std::uint32_t root_bit = 1u << root;
    bool found = false;
    enumerate_connected(root_bit, remaining, 0, [&](std::uint32_t part) {
      if (found) return;
      std::uint32_t rest = remaining & ~part;
      if (std::popcount(rest) < 4 - depth) return;
      int add = 0;
      for (int i = 0; i < depth; ++i)
        if ((reach_[i] & part) == 0) ++add;
      if (missing_ + add > 1) return;
      reach_[depth] = neighborhood(part);
      missing_ += add;
      if (extend(rest, depth + 1)) found = true;
      missing_ -= add;
    });
    return found;
  }

  template <typename F>
  void enumerate_connected(std::uint32_t cur, std::uint32_t allowed, std::uint32_t banned,
                           const F& emit) {
    emit(cur);
    std::uint32_t ext = neighborhood(cur) & allowed & ~cur & ~banned;
    std::uint32_t local_ban = banned;
    while (ext) {
      std::uint32_t v = ext & (~ext + 1);
      ext &= ext - 1;
      enumerate_connected(cur | v, allowed, local_ban, emit);
      local_ban |= v;
    }
  }

  std::uint32_t neighborhood(std::uint32_t mask) const {
    std::uint32_t out = 0;
    std::uint32_t m = mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      out |= adj_[v];
    }
    return out & ~mask;
  }

  bool connected(std::uint32_t mask) const {
    std::uint32_t start = mask & (~mask + 1);
    std::uint32_t seen = start, frontier = start;
    while (frontier) {
      std::uint32_t next = 0, f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj_[v] & mask & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    return seen == mask;
  }

  const std::vector<std::uint32_t>& adj_;
  std::uint32_t reach_[4] = {0, 0, 0, 0};
  int missing_ = 0;
};

}  // namespace detail

// True iff K5 minus one edge is a minor of g. Pure brute force over branch
// sets; exists as a test oracle only, never on the main path.
inline bool has_k5e_minor(const Graph& g) {
  int n = g.vertex_count();
  if (n > 14) throw GuardError("minor test guard exceeded (|V| > 14)");
  if (n < 5) return false;

  std::vector<int> labels(g.vertices().begin(), g.vertices().end());
  std::map<int, int> index;
  for (int i = 0; i < n; ++i) index[labels[i]] = i;
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [p, w] : g.edges()) {
    adj[index[p.first]] |= 1u << index[p.second];
    adj[index[p.second]] |= 1u << index[p.first];
  }

  // fast accept: a K5\e subgraph on 5 vertices (at most one missing pair)
  std::vector<int> pick;
  auto subgraph_scan = [&](auto&& self, int start, int count) -> bool {
    if (count == 5) {
      int missing = 0;
      for (int i = 0; i < 5 && missing <= 1; ++i)
        for (int j = i + 1; j < 5; ++j)
          if (!(adj[pick[i]] >> pick[j] & 1u)) ++missing;
      return missing <= 1;
    }
    for (int v = start; v <= n - (5 - count); ++v) {
      pick.push_back(v);
      if (self(self, v + 1, count + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (subgraph_scan(subgraph_scan, 0, 0)) return true;

  // per-component branch-set partitions
  std::uint32_t left = n == 32 ? ~0u : (1u << n) - 1;
  detail::K5eSearch search(adj);
  while (left) {
    std::uint32_t start = left & (~left + 1);
    std::uint32_t comp = start, frontier = start;
    while (frontier) {
      std::uint32_t next = 0, f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v] & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    left &= ~comp;
    if (search.run(comp)) return true;
  }
  return false;
}

}  // namespace bondpoly
