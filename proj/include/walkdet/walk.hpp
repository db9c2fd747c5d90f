#ifndef WALKDET_WALK_HPP
#define WALKDET_WALK_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <walkdet/bigint.hpp>
#include <walkdet/graph.hpp>
#include <walkdet/matrix.hpp>
#include <walkdet/poly.hpp>

namespace walkdet {

// Walk matrix [e, Me, ..., M^{n-1}e], e the all-ones vector. Columns are
// built by repeated matrix-vector products, never full matrix powers.
inline IntMatrix walk_matrix(const IntMatrix& m) {
  const std::size_t n = m.order();
  IntMatrix w(n);
  std::vector<BigInt> col(n, BigInt(1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) w(i, j) = col[i];
    if (j + 1 < n) col = mat_vec(m, col);
  }
  return w;
}

inline BigInt walk_det_raw(const IntMatrix& m) { return det_bareiss(walk_matrix(m)); }

// det W_M(G), exact. Integer for A and Q; for A_alpha the scaled-integer
// determinant is divided back by scale^{n(n-1)/2}, per
// det W(c*M) = c^{n(n-1)/2} det W(M).
inline Rat walk_det(const Graph& g, const MatrixKind& kind) {
  const auto [m, scale] = matrix_of(g, kind);
  const BigInt raw = walk_det_raw(m);
  if (scale == 1) return Rat(raw);
  const std::size_t n = g.order();
  return Rat(raw) / Rat(pow_big(scale, static_cast<unsigned long>(n) * (n - 1) / 2));
}

// h(lambda) = det W(M + lambda*D_v) for an m x m symmetric integer matrix M.
// Column j of W(M + lambda*D_v) has entries of degree <= j in lambda, so
// deg h <= m(m-1)/2; h is recovered from the integer evaluations at
// lambda = 0..m(m-1)/2 by exact interpolation.
inline IntPoly root_perturbed_walk_poly(const IntMatrix& m, std::size_t root) {
  const std::size_t order = m.order();
  if (root >= order) throw std::out_of_range("root_perturbed_walk_poly: root out of range");
  const std::size_t bound = order * (order - 1) / 2;
  const IntMatrix dv = IntMatrix::unit_diag(order, root);
  std::vector<std::pair<BigInt, BigInt>> points;
  points.reserve(bound + 1);
  for (std::size_t t = 0; t <= bound; ++t) {
    points.emplace_back(BigInt(t), walk_det_raw(mat_add_scaled(m, dv, BigInt(t))));
  }
  return interpolate_exact(points, bound);
}

// h for a rooted graph under a scale-1 kind (A or Q).
inline IntPoly h_poly(const RootedGraph& h, const MatrixKind& kind) {
  const auto [m, scale] = matrix_of(h.graph, kind);
  if (scale != 1)
    throw std::invalid_argument("h_poly: kind has a denominator; use h_poly_rational");
  return root_perturbed_walk_poly(m, h.root);
}

struct RatPoly {
  std::vector<Rat> coeffs;  // index i = coefficient of lambda^i
};

// h for any kind, with exact rational coefficients. Computed on the cleared-
// denominator matrix S = q*M and mapped back: if p(mu) = det W(S + mu*D_v)
// then h(lambda) = p(q*lambda) / q^{m(m-1)/2}.
inline RatPoly h_poly_rational(const RootedGraph& h, const MatrixKind& kind) {
  const auto [m, scale] = matrix_of(h.graph, kind);
  const IntPoly scaled = root_perturbed_walk_poly(m, h.root);
  const std::size_t order = h.graph.order();
  const Rat denom(pow_big(scale, static_cast<unsigned long>(order) * (order - 1) / 2));
  RatPoly out;
  out.coeffs.resize(static_cast<std::size_t>(scaled.degree() + 1));
  BigInt qpow(1);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = Rat(scaled.coeff(i) * qpow) / denom;
    qpow *= scale;
  }
  return out;
}

// Everything needed to compare det W_M(G o H^(v)) against its factored form
//   +- Res(phi(M_H), phi(M_H minus root))^{n(n-1)/2} * det h(M_G) * det W_M(G)^m.
// The formula holds up to sign, so the verdict compares absolute values; the
// signed factors are still reported. For A_alpha all values refer to the
// cleared-denominator matrices q*M (scale = q), for which the identity holds
// verbatim; A and Q have scale 1.
struct ProductFormulaReport {
  std::size_t n = 0;        // order of G
  std::size_t m = 0;        // order of H
  BigInt scale;             // denominator cleared from the kind
  BigInt lhs;               // det W(M(G o H)), computed directly on the product
  BigInt res_factor;        // Res(phi(M_H), phi(M_H minus root))
  IntPoly h;                // det W(M_H + lambda*D_root)
  BigInt det_h_of_mg;       // det h(M_G), as Res(phi(M_G), h)
  BigInt det_w_of_g;        // det W(M_G)
  BigInt rhs_abs;           // |res|^{n(n-1)/2} * |det h(M_G)| * |det W(M_G)|^m
  bool verdict = false;     // |lhs| == rhs_abs
};

// det h(M) = prod h(lambda_i) over the eigenvalues of M, evaluated without
// eigenvalues as Res(phi(M), h): phi is monic, so the resultant is exactly
// that product.
inline BigInt det_poly_of_matrix(const IntPoly& charpoly_of_m, const IntPoly& h) {
  return sylvester_resultant(charpoly_of_m, h);
}

inline ProductFormulaReport verify_product_formula(const Graph& g, const RootedGraph& h,
                                                   const MatrixKind& kind) {
  ProductFormulaReport r;
  r.n = g.order();
  r.m = h.graph.order();

  const auto [mg, scale_g] = matrix_of(g, kind);
  const auto [mh, scale_h] = matrix_of(h.graph, kind);
  r.scale = scale_g;

  r.lhs = walk_det_raw(matrix_of(rooted_product(g, h), kind).matrix);
  r.res_factor = sylvester_resultant(charpoly(mh), charpoly(delete_row_col(mh, h.root)));
  r.h = root_perturbed_walk_poly(mh, h.root);
  r.det_h_of_mg = det_poly_of_matrix(charpoly(mg), r.h);
  r.det_w_of_g = walk_det_raw(mg);

  const unsigned long half = static_cast<unsigned long>(r.n) * (r.n - 1) / 2;
  r.rhs_abs = pow_big(abs_big(r.res_factor), half) * abs_big(r.det_h_of_mg) *
              pow_big(abs_big(r.det_w_of_g), static_cast<unsigned long>(r.m));
  r.verdict = abs_big(r.lhs) == r.rhs_abs;
  return r;
}

// G o H^(v) is M-controllable iff (i) G is M-controllable, (ii) phi(M_H) and
// phi(M_H minus root) are coprime, and (iii) B(lambda) = M_H + lambda*D_v is
// controllable at every eigenvalue lambda of M_G. Condition (iii) is decided
// exactly as Res(phi(M_G), h) != 0, which avoids irrational eigenvalues.
// The direct determinant of the product is computed as a cross-check.
struct ControllabilityReport {
  bool g_controllable = false;           // (i)  det W_M(G) != 0
  bool charpolys_coprime = false;        // (ii) Res(phi(M_H), phi(M_H - v)) != 0
  bool h_nonzero_at_eigenvalues = false; // (iii) Res(phi(M_G), h) != 0
  bool verdict = false;
  BigInt product_walk_det;               // det W_M(G o H), directly
  bool matches_direct = false;           // verdict == (product_walk_det != 0)
};

inline ControllabilityReport controllability_check(const Graph& g, const RootedGraph& h,
                                                   const MatrixKind& kind) {
  ControllabilityReport r;
  const auto [mg, scale_g] = matrix_of(g, kind);
  const auto [mh, scale_h] = matrix_of(h.graph, kind);
  r.g_controllable = walk_det_raw(mg) != 0;
  r.charpolys_coprime =
      sylvester_resultant(charpoly(mh), charpoly(delete_row_col(mh, h.root))) != 0;
  r.h_nonzero_at_eigenvalues =
      det_poly_of_matrix(charpoly(mg), root_perturbed_walk_poly(mh, h.root)) != 0;
  r.verdict = r.g_controllable && r.charpolys_coprime && r.h_nonzero_at_eigenvalues;
  r.product_walk_det = walk_det_raw(matrix_of(rooted_product(g, h), kind).matrix);
  r.matches_direct = r.verdict == (r.product_walk_det != 0);
  return r;
}

// Membership in F_n: det A(G) = +-1 and det W_A(G) = +-2^{floor(n/2)}.
// F_n is empty for odd n (det A is even there), so odd orders return
// immediately.
struct FMembership {
  bool member = false;
  BigInt det_a;
  BigInt det_w;
};

inline FMembership f_report(const Graph& g) {
  FMembership r;
  const IntMatrix a = matrix_of(g, MatrixKind::adjacency()).matrix;
  r.det_a = det_bareiss(a);
  r.det_w = walk_det_raw(a);
  if (g.order() % 2 != 0) return r;
  r.member = abs_big(r.det_a) == 1 && abs_big(r.det_w) == pow_big(BigInt(2), g.order() / 2);
  return r;
}

inline bool f_membership(const Graph& g) { return f_report(g).member; }

// The three F-preserver conditions for a rooted graph H^(v), order m, all
// over the adjacency matrix:
//   dets:     (det A(H), det A^{(v)}(H)) is (+-1, 0) or (0, +-1),
//   res:      Res(phi(A(H)), phi(A^{(v)}(H))) = +-1,
//   monomial: det W(A(H) + lambda*D_v) = +-lambda^k.
// Together they are sufficient for H^(v) to map every member of F to a
// member of F. Every preserver found so far has k = floor(m/2); the
// conjecture_ok flag records that comparison. Evaluation order is cheapest
// first (dets, then res, then the interpolated monomial test); with
// short_circuit the later conditions are left unevaluated once one fails.
// K_1 rooted at its vertex passes all three degenerately (it is the trivial
// preserver, G o K_1 = G).
struct PreserverReport {
  std::size_t order = 0;
  BigInt det_a;
  BigInt det_a_minus_root;
  bool cond_dets = false;
  std::optional<BigInt> res;
  bool cond_res = false;
  std::optional<IntPoly> h;
  std::optional<std::size_t> monomial_k;
  bool cond_monomial = false;
  bool is_preserver = false;
  std::optional<bool> conjecture_ok;
};

inline PreserverReport preserver_check(const RootedGraph& h, bool short_circuit = false) {
  PreserverReport r;
  r.order = h.graph.order();
  const IntMatrix a = matrix_of(h.graph, MatrixKind::adjacency()).matrix;
  const IntMatrix av = delete_row_col(a, h.root);
  r.det_a = det_bareiss(a);
  r.det_a_minus_root = det_bareiss(av);
  r.cond_dets = (abs_big(r.det_a) == 1 && r.det_a_minus_root == 0) ||
                (r.det_a == 0 && abs_big(r.det_a_minus_root) == 1);
  if (!short_circuit || r.cond_dets) {
    r.res = sylvester_resultant(charpoly(a), charpoly(av));
    r.cond_res = abs_big(*r.res) == 1;
  }
  if (!short_circuit || (r.cond_dets && r.cond_res)) {
    r.h = root_perturbed_walk_poly(a, h.root);
    r.monomial_k = is_pm_monomial(*r.h);
    r.cond_monomial = r.monomial_k.has_value();
  }
  r.is_preserver = r.cond_dets && r.cond_res && r.cond_monomial;
  if (r.is_preserver) r.conjecture_ok = (*r.monomial_k == r.order / 2);
  return r;
}

// One step of the DGS-family construction: G in F and H^(v) a verified
// preserver give G o H^(v), whose F-membership is recomputed from scratch,
// never assumed. A certification failure here would contradict the
// preserver condition itself, so it is surfaced loudly.
struct FamilyStep {
  Graph product;
  FMembership certificate;
};

inline FamilyStep dgs_family_step(const Graph& g, const RootedGraph& h) {
  if (!f_membership(g))
    throw std::invalid_argument("dgs_family_step: the seed graph is not in F");
  if (!preserver_check(h).is_preserver)
    throw std::invalid_argument("dgs_family_step: the rooted graph is not a verified preserver");
  Graph product = rooted_product(g, h);
  FMembership cert = f_report(product);
  if (!cert.member) {
    throw std::runtime_error(
        "dgs_family_step: CERTIFICATION FAILURE, the product of an F-member and a verified "
        "preserver is not in F (order " +
        std::to_string(product.order()) + ", det A = " + cert.det_a.str() +
        ", det W = " + cert.det_w.str() + "); this contradicts the preserver condition");
  }
  return {std::move(product), std::move(cert)};
}

}  // namespace walkdet

#endif  // WALKDET_WALK_HPP
