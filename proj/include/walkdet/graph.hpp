#ifndef WALKDET_GRAPH_HPP
#define WALKDET_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <walkdet/bigint.hpp>
#include <walkdet/matrix.hpp>

namespace walkdet {

// Undirected simple graph on vertices 0..n-1, adjacency stored as bitset
// rows for O(1) edge tests.
class Graph {
 public:
  explicit Graph(std::size_t order)
      : n_(order), words_((order + 63) / 64), bits_(n_ * words_) {
    if (order == 0) throw std::invalid_argument("Graph: order must be at least 1");
  }

  std::size_t order() const { return n_; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
    bits_[u * words_ + v / 64] |= std::uint64_t(1) << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t(1) << (u % 64);
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < n_; ++u) d += has_edge(v, u);
    return d;
  }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t v = 0; v < n_; ++v) e += degree(v);
    return e / 2;
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

inline Graph graph_from_edges(std::size_t order,
                              std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(std::size_t m) {
  Graph g(m);
  for (std::size_t i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(std::size_t m) {
  if (m < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  Graph g = path_graph(m);
  g.add_edge(m - 1, 0);
  return g;
}

// Triangle on {0,1,2} with the pendant vertex 3 attached to 2; vertex 0 is
// the root used throughout the examples.
inline Graph paw_graph() { return graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

struct RootedGraph {
  Graph graph;
  std::size_t root;

  RootedGraph(Graph g, std::size_t root_vertex) : graph(std::move(g)), root(root_vertex) {
    if (root >= graph.order()) throw std::out_of_range("RootedGraph: root out of range");
  }
};

// Selects which matrix is associated with a graph: adjacency A, signless
// Laplacian Q = D + A, or A_alpha = alpha*D + (1-alpha)*A with rational
// alpha in [0, 1).
class MatrixKind {
 public:
  enum class Family { adjacency, signless_laplacian, a_alpha };

  static MatrixKind adjacency() { return MatrixKind(Family::adjacency, Rat(0)); }
  static MatrixKind signless_laplacian() { return MatrixKind(Family::signless_laplacian, Rat(0)); }
  static MatrixKind a_alpha(const Rat& alpha) {
    if (alpha < 0 || alpha >= 1) throw std::invalid_argument("a_alpha: need 0 <= alpha < 1");
    return MatrixKind(Family::a_alpha, alpha);
  }

  Family family() const { return family_; }
  const Rat& alpha() const { return alpha_; }

  std::string label() const {
    switch (family_) {
      case Family::adjacency: return "A";
      case Family::signless_laplacian: return "Q";
      default: return "A_{" + alpha_.str() + "}";
    }
  }

 private:
  MatrixKind(Family f, Rat a) : family_(f), alpha_(std::move(a)) {}
  Family family_;
  Rat alpha_;
};

// Integer matrix of a graph for the given kind, together with the scale that
// clears denominators: A and Q come back with scale 1; A_alpha = p/q comes
// back as q*A_alpha = p*D + (q-p)*A with scale q. Callers recover exact
// A_alpha quantities through det W(c*M) = c^{n(n-1)/2} det W(M).
struct ScaledMatrix {
  IntMatrix matrix;
  BigInt scale;
};

inline ScaledMatrix matrix_of(const Graph& g, const MatrixKind& kind) {
  const std::size_t n = g.order();
  IntMatrix m(n);
  BigInt diag_unit(0), off_unit(1), scale(1);
  if (kind.family() == MatrixKind::Family::signless_laplacian) {
    diag_unit = 1;
  } else if (kind.family() == MatrixKind::Family::a_alpha) {
    const BigInt p = boost::multiprecision::numerator(kind.alpha());
    const BigInt q = boost::multiprecision::denominator(kind.alpha());
    diag_unit = p;
    off_unit = q - p;
    scale = q;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (diag_unit != 0) m(i, i) = diag_unit * BigInt(g.degree(i));
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.has_edge(i, j)) m(i, j) = m(j, i) = off_unit;
  }
  if (!m.is_symmetric()) throw std::logic_error("matrix_of: result not symmetric");
  return {std::move(m), std::move(scale)};
}

// Rooted product G o H^(v): one copy of H per vertex of G, the root of copy i
// identified with vertex i of G. Vertex ordering contract: the pair
// (H-vertex u, G-vertex i) gets index u*n + i, with the root keeping its
// position v inside H. Under this ordering
//   M(G o H) = M(H) (x) I_n + D_v (x) M(G)
// holds entrywise for every kind, matching kron's row-major blocks.
inline Graph rooted_product(const Graph& g, const RootedGraph& h) {
  const std::size_t n = g.order(), m = h.graph.order(), v = h.root;
  Graph out(n * m);
  for (const auto& [u1, u2] : h.graph.edges())
    for (std::size_t i = 0; i < n; ++i) out.add_edge(u1 * n + i, u2 * n + i);
  for (const auto& [i1, i2] : g.edges()) out.add_edge(v * n + i1, v * n + i2);
  return out;
}

}  // namespace walkdet

#endif  // WALKDET_GRAPH_HPP
