#ifndef WALKDET_ENUMERATE_HPP
#define WALKDET_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <walkdet/graph.hpp>

namespace walkdet {

// These helpers pack the upper triangle of the adjacency matrix into a
// 64-bit key, in graph6 bit order (x01, x02, x12, x03, ...) with the first
// bit most significant, so integer comparison is lexicographic comparison
// of adjacency bitstrings. Usable up to order 11 (55 bits).

inline std::uint64_t adjacency_key(const Graph& g) {
  const std::size_t n = g.order();
  if (n * (n - 1) / 2 > 63) throw std::invalid_argument("adjacency_key: order too large");
  std::uint64_t key = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) key = (key << 1) | (g.has_edge(i, j) ? 1u : 0u);
  return key;
}

inline Graph graph_from_key(std::size_t order, std::uint64_t key) {
  Graph g(order);
  const std::size_t nbits = order * (order - 1) / 2;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < order; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if ((key >> (nbits - 1 - bit)) & 1u) g.add_edge(i, j);
  return g;
}

// Minimal adjacency bitstring over all order! vertex relabelings; the dedup
// key for isomorphism classes. Permutations that can no longer beat the
// current minimum are abandoned at the first losing bit.
inline std::uint64_t canonical_key(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t nbits = n * (n - 1) / 2;
  if (nbits > 63) throw std::invalid_argument("canonical_key: order too large");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t(0) >> (64 - (nbits == 0 ? 1 : nbits));
  do {
    std::uint64_t key = 0;
    std::size_t bit = 0;
    bool tied = true, worse = false;
    for (std::size_t j = 1; j < n && !worse; ++j) {
      for (std::size_t i = 0; i < j; ++i, ++bit) {
        const unsigned b = g.has_edge(perm[i], perm[j]) ? 1u : 0u;
        if (tied) {
          const unsigned bb = (best >> (nbits - 1 - bit)) & 1u;
          if (b > bb) {
            worse = true;
            break;
          }
          if (b < bb) tied = false;
        }
        key = (key << 1) | b;
      }
    }
    if (!worse && key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && g.has_edge(u, v)) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

// Vertex orbits under the full automorphism group, found by the naive
// order!-permutation pass. Returns, for each vertex, the smallest vertex of
// its orbit.
inline std::vector<std::size_t> automorphism_orbit_map(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool automorphism = true;
    for (std::size_t j = 1; j < n && automorphism; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (g.has_edge(i, j) != g.has_edge(perm[i], perm[j])) {
          automorphism = false;
          break;
        }
    if (automorphism)
      for (std::size_t v = 0; v < n; ++v) {
        const std::size_t a = find(v), b = find(perm[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::size_t> orbit(n);
  for (std::size_t v = 0; v < n; ++v) orbit[v] = find(v);
  return orbit;
}

// The smallest vertex of each orbit, ascending.
inline std::vector<std::size_t> automorphism_orbit_reps(const Graph& g) {
  const std::vector<std::size_t> orbit = automorphism_orbit_map(g);
  std::vector<std::size_t> reps;
  for (std::size_t v = 0; v < orbit.size(); ++v)
    if (orbit[v] == v) reps.push_back(v);
  return reps;
}

// Exactly one representative per isomorphism class, in ascending order of
// canonical key. Built by extending the (order-1) representatives with one
// new vertex over every neighborhood, then deduplicating by canonical key;
// every class on `order` vertices arises this way. Capped at order 7, where
// the order!-canonicalization is still comfortable.
inline std::vector<Graph> enumerate_graphs(std::size_t order, bool connected_only = false) {
  if (order < 1 || order > 7) {
    throw std::invalid_argument(
        "enumerate_graphs: built-in enumeration covers orders 1..7; "
        "feed larger orders as a graph6 stream");
  }
  std::set<std::uint64_t> keys;
  if (order == 1) {
    keys.insert(0);
  } else {
    for (const Graph& base : enumerate_graphs(order - 1, false)) {
      const std::size_t b = order - 1;
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << b); ++mask) {
        Graph candidate(order);
        for (const auto& [u, v] : base.edges()) candidate.add_edge(u, v);
        for (std::size_t u = 0; u < b; ++u)
          if ((mask >> u) & 1u) candidate.add_edge(u, b);
        keys.insert(canonical_key(candidate));
      }
    }
  }
  std::vector<Graph> out;
  for (const std::uint64_t key : keys) {
    Graph g = graph_from_key(order, key);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

// Erdos-Renyi G(n, 1/2) from the generator's raw bit stream, one draw per
// vertex pair, so the sample is reproducible across platforms.
inline Graph random_graph(std::size_t order, std::mt19937& rng) {
  Graph g(order);
  for (std::size_t j = 1; j < order; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (rng() & 1u) g.add_edge(i, j);
  return g;
}

}  // namespace walkdet

#endif  // WALKDET_ENUMERATE_HPP
