#pragma once

// Integrals, the distinguished group-like mu, left cointegrals and the trace
// formula.
//
//   t in int_l:  h t = eps(h) t          t in int_r:  t h = eps(h) t
//   t h = mu(h) t for t in int_l
//   lambda in L: lambda(V2 h_2 U2) V1 h_1 U1 = mu(x1) lambda(h S(x2)) x3
//   Tr(chi) = mu(q1_1 x1) lambda(chi(q2 x3 r_2 p2) S(q1_2 x2 r_1 p1))   when lambda(S(r)) = 1
//
// Here q = q_R, p = p_R, and x = Phi^{-1}.

#include <random>

#include "qhopf/double.hpp"
#include "qhopf/dual.hpp"
#include "qhopf/representations.hpp"

namespace qhopf {

struct IntegralSpaces {
  Vector left;   // generator of int_l, first nonzero coordinate 1
  Vector right;  // generator of int_r, same normalization
  Vector mu;
  bool mu_is_counit = false;
};

namespace detail {

/// Generator of the kernel of a stacked system, with first nonzero coordinate 1.
inline Vector unique_kernel(const Matrix& m, ErrorCode code, const std::string& what) {
  const auto ker = kernel(m);
  if (ker.size() != 1) throw Error(code, what + " space has dimension " + std::to_string(ker.size()));
  Vector v = ker.front();
  std::size_t p = 0;
  while (v[p].is_zero()) ++p;
  const Scalar inv = v[p].inverse();
  for (auto& c : v) c *= inv;
  return v;
}

inline std::size_t first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

}  // namespace detail

inline IntegralSpaces solve_integrals(const QuasiHopfAlgebra& H) {
  const Structure& h = H.structure();
  const std::size_t n = h.dim();
  Matrix left(n * n, n), right(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = basis_vector(n, i);
    const Matrix L = h.left_mult_matrix(e), R = h.right_mult_matrix(e);
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar d = m == c ? h.counit(i) : Scalar();
        left(i * n + m, c) = L(m, c) - d;
        right(i * n + m, c) = R(m, c) - d;
      }
  }
  IntegralSpaces out;
  out.left = detail::unique_kernel(left, ErrorCode::IntegralDimensionAnomaly, "left integral");
  out.right = detail::unique_kernel(right, ErrorCode::IntegralDimensionAnomaly, "right integral");

  // t e_i = mu(e_i) t; t has coordinate 1 at its first nonzero slot.
  const std::size_t p = detail::first_nonzero(out.left);
  out.mu = Vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector te = h.multiply(out.left, basis_vector(n, i));
    out.mu[i] = te[p];
    for (std::size_t c = 0; c < n; ++c)
      if (te[c] != out.mu[i] * out.left[c])
        throw Error(ErrorCode::IntegralDimensionAnomaly, "int_l is not stable under right multiplication");
  }
  out.mu_is_counit = out.mu == h.counit_vector();
  return out;
}

/// The left cointegral, as the kernel of the n^2 x n system obtained by
/// reading the defining equation coordinatewise for each basis h.
inline Vector solve_cointegral(const QuasiHopfAlgebra& H, const DerivedPack& d, const Vector& mu) {
  const Structure& h = H.structure();
  const std::size_t n = h.dim();
  // slots (k, m, j): e_k the quantified basis element, e_m the output, e_j the argument of lambda
  const auto lhs = contract(h, {label_delta(h), d.V, d.U}, {{{0, 0}}, {{1, 0}, {0, 1}, {2, 0}}, {{1, 1}, {0, 2}, {2, 1}}});
  const auto rhs = contract(h, {label_plain(h), H.phi_inv()},
                            {{{0, 0}}, {{1, 2}}, {{0, 1}, {1, 1, Map::S}}, Word({{1, 0}}).paired(mu)});
  Matrix sys(n * n, n);
  for (const auto& [f, c] : lhs.terms()) {
    const auto idx = lhs.unflatten(f);
    sys(idx[0] * n + idx[1], idx[2]) += c;
  }
  for (const auto& [f, c] : rhs.terms()) {
    const auto idx = rhs.unflatten(f);
    sys(idx[0] * n + idx[1], idx[2]) -= c;
  }
  return detail::unique_kernel(sys, ErrorCode::CointegralDimensionAnomaly, "left cointegral");
}

struct NormalizedPair {
  Vector lambda;
  Vector r;
};

/// Scales the right integral so that lambda(S(r)) = 1.
inline NormalizedPair normalize_pair(const QuasiHopfAlgebra& H, const Vector& lambda, const Vector& r0) {
  const Structure& h = H.structure();
  if (detail::first_nonzero(lambda) == lambda.size()) throw Error(ErrorCode::NormalizationImpossible, "lambda is zero");
  const Scalar s = pair(lambda, h.apply(Map::S, r0));
  if (s.is_zero()) throw Error(ErrorCode::NormalizationImpossible, "lambda(S(r)) = 0");
  NormalizedPair out{lambda, r0};
  const Scalar inv = s.inverse();
  for (auto& c : out.r) c *= inv;
  return out;
}

// ---- Projections onto int_l ----

/// Matrix of P(h) = sum_i <e^i, beta S^2(q2 (e_i)_2) h> q1 (e_i)_1.
inline Matrix projection_P(const QuasiHopfAlgebra& H, const DerivedPack& d) {
  const Structure& h = H.structure();
  // slots (i, i', out, h) before the trace over (i, i')
  const auto t = contract(h, {label_delta(h), d.qR, element_tensor(H.beta()), label_plain(h)},
                          {{{0, 0}}, {{2, 0}, {1, 1, Map::S2}, {0, 2, Map::S2}, {3, 0}}, {{1, 0}, {0, 1}}, {{3, 1}}});
  const auto m = trace_slots(t, 0, 1);
  Matrix out(h.dim(), h.dim());
  for (const auto& [f, c] : m.terms()) out(f / h.dim(), f % h.dim()) = c;
  return out;
}

/// Matrix of P~(h) = sum_i <e^i, S^{-1}(beta) S^{-2}(q~1 (e_i)_1) h> q~2 (e_i)_2, q~ = q_L.
inline Matrix projection_P_tilde(const QuasiHopfAlgebra& H, const DerivedPack& d) {
  const Structure& h = H.structure();
  const auto t =
      contract(h, {label_delta(h), d.qL, element_tensor(H.beta()), label_plain(h)},
               {{{0, 0}}, {{2, 0, Map::Sinv}, {1, 0, Map::Sinv2}, {0, 1, Map::Sinv2}, {3, 0}}, {{1, 1}, {0, 2}}, {{3, 1}}});
  const auto m = trace_slots(t, 0, 1);
  Matrix out(h.dim(), h.dim());
  for (const auto& [f, c] : m.terms()) out(f / h.dim(), f % h.dim()) = c;
  return out;
}

/// Image inside int_l and identity on int_l.
inline SuiteReport projection_suite(const QuasiHopfAlgebra& H, const Matrix& P, const Vector& t, const std::string& name) {
  const Structure& h = H.structure();
  const std::size_t n = h.dim();
  SuiteReport rep;
  std::string bad;
  for (std::size_t j = 0; j < n && bad.empty(); ++j) {
    const Vector img = P.column(j);
    const std::size_t p = detail::first_nonzero(t);
    for (std::size_t c = 0; c < n; ++c)
      if (img[c] != img[p] * t[c]) bad = "P(e_" + std::to_string(j) + ") is not a multiple of t";
  }
  rep.add(name + "_into_int_l", bad.empty(), bad);
  Vector pt(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) pt[r] += P(r, c) * t[c];
  rep.add(name + "_fixes_int_l", pt == t, "P(t) != t");
  return rep;
}

// ---- Trace formula ----

/// The right-hand side of the trace formula is Tr(chi M) for a fixed matrix
/// M = W Lambda^T, with W(a, b) the coefficients of mu(q1_1 x1) q2 x3 r_2 p2 (x) S(q1_2 x2 r_1 p1)
/// and Lambda(c, b) = lambda(e_c e_b). The formula holds for all chi iff M = 1.
class TraceFormula {
 public:
  TraceFormula(const QuasiHopfAlgebra& H, const DerivedPack& d, const Vector& lambda, const Vector& r, const Vector& mu) {
    const Structure& h = H.structure();
    const std::size_t n = h.dim();
    if (!pair(lambda, h.apply(Map::S, r)).is_one()) throw Error(ErrorCode::NotNormalized, "lambda(S(r)) != 1");
    const auto W = contract(h, {detail::delta_at(h, d.qR, {0}), H.phi_inv(), coproduct_at(h, element_tensor(r), 0), d.pR},
                            {{{0, 2}, {1, 2}, {2, 1}, {3, 1}},
                             Word({{0, 1}, {1, 1}, {2, 0}, {3, 0}}).then(Map::S),
                             Word({{0, 0}, {1, 0}}).paired(mu)});
    Matrix Lam(n, n);
    for (std::uint32_t c = 0; c < n; ++c)
      for (std::uint32_t b = 0; b < n; ++b)
        for (const auto& [k, m] : h.product(c, b)) Lam(c, b) += m * lambda[k];
    Matrix Wm(n, n);
    for (const auto& [f, c] : W.terms()) Wm(f / n, f % n) = c;
    M_ = Wm * Lam.transpose();
  }

  Scalar evaluate(const Matrix& chi) const { return trace(chi * M_); }
  bool holds_identically() const { return M_ == Matrix::identity(M_.rows()); }

 private:
  Matrix M_;
};

inline Scalar trace_formula(const QuasiHopfAlgebra& H, const DerivedPack& d, const Vector& lambda, const Vector& r, const Vector& mu,
                            const Matrix& chi) {
  return TraceFormula(H, d, lambda, r, mu).evaluate(chi);
}

/// h |-> beta S(alpha) S^2(h) S(beta) alpha.
inline Matrix trace_test_map(const QuasiHopfAlgebra& H) {
  const Structure& h = H.structure();
  const Vector left = h.multiply(H.beta(), h.apply(Map::S, H.alpha()));
  const Vector right = h.multiply(h.apply(Map::S, H.beta()), H.alpha());
  return h.left_mult_matrix(left) * h.right_mult_matrix(right) * h.map_matrix(Map::S2);
}

/// Entries drawn uniformly from [-range, range].
inline Matrix random_endomorphism(std::size_t n, std::mt19937_64& rng, long range = 3) {
  Matrix m(n, n);
  const auto span = static_cast<std::uint64_t>(2 * range + 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(static_cast<long>(rng() % span) - range);
  return m;
}

// ---- Identities and semisimplicity ----

/// lambda(S^{-1}(h) h') = mu(h_1) lambda(h' S(h_2)) for all basis h, h'.
inline CheckResult check_lambda_antipode(const QuasiHopfAlgebra& H, const Vector& lambda, const Vector& mu) {
  const Structure& h = H.structure();
  const auto lhs = contract(h, {label_plain(h), label_plain(h)},
                            {{{0, 0}}, {{1, 0}}, Word({{0, 1, Map::Sinv}, {1, 1}}).paired(lambda)});
  const auto rhs = contract(h, {label_delta(h), label_plain(h)},
                            {{{0, 0}}, {{1, 0}}, Word({{0, 1}}).paired(mu), Word({{1, 1}, {0, 2, Map::S}}).paired(lambda)});
  return compare("lambda_antipode_identity", lhs, rhs);
}

/// r_1 (x) r_2 = r_1 p1 (x) r_2 p2 alpha = r_1 p1 S^{-1}(alpha) (x) r_2 p2.
inline SuiteReport check_right_integral_coproduct(const QuasiHopfAlgebra& H, const DerivedPack& d, const Vector& r) {
  const Structure& h = H.structure();
  const auto dr = coproduct_at(h, element_tensor(r), 0);
  const auto al = element_tensor(H.alpha());
  SuiteReport rep;
  check(rep, "r_coproduct_alpha_right", dr, contract(h, {dr, d.pR, al}, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}, {2, 0}}}));
  check(rep, "r_coproduct_alpha_left", dr,
        contract(h, {dr, d.pR, al}, {{{0, 0}, {1, 0}, {2, 0, Map::Sinv}}, {{0, 1}, {1, 1}}}));
  return rep;
}

/// Semisimplicity in characteristic 0: the form Tr(L_a L_b) is nondegenerate.
inline bool is_semisimple(const QuasiHopfAlgebra& H) {
  const Structure& h = H.structure();
  const std::size_t n = h.dim();
  std::vector<Scalar> tr(n);
  for (std::size_t k = 0; k < n; ++k) tr[k] = trace(h.left_mult_matrix(basis_vector(n, k)));
  Matrix form(n, n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (const auto& [k, m] : h.product(a, b)) form(a, b) += m * tr[k];
  return rank(form) == n;
}

// ---- Full analysis ----

struct IntegralData {
  IntegralSpaces spaces;
  DerivedPack pack;
  Vector lambda;  // left cointegral, first nonzero coordinate 1
  Vector r;       // right integral with lambda(S(r)) = 1
  Scalar lambda_S_inv_alpha_beta;  // lambda(S^{-1}(alpha) beta); nonzero iff cosemisimple
};

inline IntegralData compute_integrals(const QuasiHopfAlgebra& H) {
  IntegralData out;
  out.spaces = solve_integrals(H);
  out.pack = compute_pack(H);
  out.lambda = solve_cointegral(H, out.pack, out.spaces.mu);
  out.r = normalize_pair(H, out.lambda, out.spaces.right).r;
  const Structure& h = H.structure();
  out.lambda_S_inv_alpha_beta = pair(out.lambda, h.multiply(h.apply(Map::Sinv, H.alpha()), H.beta()));
  return out;
}

struct RankReport {
  Vector lambda_op;  // left cointegral of H^op
  Vector r;          // right integral of H with lambda_op(r) = 1
  Scalar epsilon_r;
  Scalar lambda_pairing;  // lambda_op(S^{-1}(alpha) beta)
  Scalar rank_scalar;     // epsilon_r * lambda_pairing
  Scalar closed_form;     // Tr(h |-> S^{-2}(S(beta) alpha h beta S(alpha)))
  Scalar via_double;      // eps_D(beta -> lambda_op |><| r)
  bool three_way_equal = false;
};

/// The rank through integrals: a cointegral of H^op paired against a right
/// integral of H, compared with the closed form and the counit of the double.
inline RankReport rank_via_integrals(const QuantumDouble& D) {
  const QuasiHopfAlgebra& H = D.base();
  const Structure& h = H.structure();
  const QuasiHopfAlgebra Hop(op_cop(H, Opposite::Op));
  const auto op_spaces = solve_integrals(Hop);
  RankReport out;
  out.lambda_op = solve_cointegral(Hop, compute_pack(Hop), op_spaces.mu);
  const Vector r0 = solve_integrals(H).right;
  const Scalar s = pair(out.lambda_op, r0);
  if (s.is_zero()) throw Error(ErrorCode::NormalizationImpossible, "lambda_op(r) = 0");
  out.r = r0;
  const Scalar inv = s.inverse();
  for (auto& c : out.r) c *= inv;
  out.epsilon_r = h.counit_of(out.r);
  out.lambda_pairing = pair(out.lambda_op, h.multiply(h.apply(Map::Sinv, H.alpha()), H.beta()));
  out.rank_scalar = out.epsilon_r * out.lambda_pairing;
  out.closed_form = qdim_closed_form(H);
  const Vector z = D.pure(left_hit(h, H.beta(), out.lambda_op), out.r);
  out.via_double = pair(D.algebra().counit(), z);
  out.three_way_equal = out.rank_scalar == out.closed_form && out.closed_form == out.via_double;
  return out;
}

/// Informational: is beta -> lambda |><| r a left integral of D(H)? Uses the
/// cointegral of H itself and the pair normalized by lambda(S(r)) = 1.
inline bool conjecture_probe(const QuantumDouble& D, const IntegralData& data) {
  const Structure& dh = D.algebra().structure();
  const Vector z = D.pure(left_hit(D.base().structure(), D.base().beta(), data.lambda), data.r);
  const Vector& eps = D.algebra().counit();
  for (std::size_t i = 0; i < D.dim(); ++i) {
    const Vector prod = dh.multiply(basis_vector(D.dim(), i), z);
    for (std::size_t c = 0; c < D.dim(); ++c)
      if (prod[c] != eps[i] * z[c]) return false;
  }
  return true;
}

}  // namespace qhopf
