#pragma once

// The quantum double D(H) = H* |><| H as an explicit presentation of
// dimension n^2, with its R-matrix. The basis element e^i |><| e_j has index
// i * n + j, so a base-n multi-index (i, j, k, l, ...) over H flattens to the
// same integer as the pairs ((i, j), (k, l), ...) over D(H).
//
// Writing <x -> phi <- y, h> = phi(y h x), the structure is
//   (phi |><| h)(psi |><| h') = (O1 -> phi <- O5)(O2 h_(1,1) -> psi <- S^{-1}(h_2) O4) |><| O3 h_(1,2) h'
//   Delta_D(phi |><| h) = (eps |><| X1 Y1)(p1_1 x1 -> phi_2 <- Y2 S^{-1}(p2) |><| p1_2 x2 h_1)
//                          (x) (X2_1 -> phi_1 <- S^{-1}(X3) |><| X2_2 Y3 x3 h_2)
//   eps_D(phi |><| h) = eps(h) phi(S^{-1}(alpha))
//   S_D(phi |><| h) = (eps |><| S(h) f1)(p1_1 U1 -> Sbar^{-1}(phi) <- f2 S^{-1}(p2) |><| p1_2 U2)
//   Phi_D, alpha_D, beta_D are the images of Phi, alpha, beta under h |-> eps |><| h,
//   R_D = sum_i (eps |><| S^{-1}(p2) e_i p1_1) (x) (e^i |><| p1_2).
// Every coefficient is read off by pairing e^a with a word in H, so each
// table is a single contraction with basis labels.

#include <string>

#include "qhopf/derived.hpp"
#include "qhopf/dual.hpp"

namespace qhopf {

namespace detail {

/// Reads an arity-k tensor over H (2k slots, pairs adjacent) as an arity-k tensor over D(H).
inline TensorElement as_double_tensor(const TensorElement& t) {
  if (t.arity() % 2 != 0) throw Error(ErrorCode::ShapeMismatch, "double tensor needs paired slots");
  const std::size_t n = t.dim();
  return TensorElement::from_terms(n * n, t.arity() / 2, {t.terms().begin(), t.terms().end()});
}

/// eps |><| (.) applied to every slot of a tensor over H.
inline TensorElement embed_tensor(const TensorElement& t, const Vector& eps) {
  const std::size_t n = t.dim();
  std::vector<std::vector<std::pair<std::vector<std::uint32_t>, Scalar>>> table(n);
  for (std::uint32_t j = 0; j < n; ++j)
    for (std::uint32_t i = 0; i < n; ++i)
      if (!eps[i].is_zero()) table[j].push_back({{i, j}, eps[i]});
  TensorElement out = t;
  for (std::size_t s = 0; s < t.arity(); ++s)
    out = replace_slot(out, 2 * s, 2, [&](std::uint32_t j) -> const auto& { return table[j]; });
  return as_double_tensor(out);
}

}  // namespace detail

/// (qt1)-(qt4) for a candidate R-matrix, plus invertibility of R.
inline SuiteReport verify_quasitriangular(const QuasiHopfAlgebra& A, const TensorElement& R) {
  const Structure& h = A.structure();
  const auto& Phi = A.phi();
  const auto& Phii = A.phi_inv();
  SuiteReport rep;
  // (Delta (x) id)(R) = Phi_312 R_13 Phi^{-1}_132 R_23 Phi
  check(rep, "qt1_delta_left", coproduct_at(h, R, 0),
        contract(h, {Phi, R, Phii, R, Phi},
                 {{{0, 1}, {1, 0}, {2, 0}, {4, 0}}, {{0, 2}, {2, 2}, {3, 0}, {4, 1}}, {{0, 0}, {1, 1}, {2, 1}, {3, 1}, {4, 2}}}));
  // (id (x) Delta)(R) = Phi^{-1}_231 R_13 Phi_213 R_12 Phi^{-1}
  check(rep, "qt2_delta_right", coproduct_at(h, R, 1),
        contract(h, {Phii, R, Phi, R, Phii},
                 {{{0, 2}, {1, 0}, {2, 1}, {3, 0}, {4, 0}}, {{0, 0}, {2, 0}, {3, 1}, {4, 1}}, {{0, 1}, {1, 1}, {2, 2}, {4, 2}}}));
  // Delta^op(h) R = R Delta(h), quantified over basis h (slot 0 of the witness)
  const auto l = label_delta(h);
  check(rep, "qt3_quasi_cocommutative", contract(h, {l, R}, {{{0, 0}}, {{0, 2}, {1, 0}}, {{0, 1}, {1, 1}}}),
        contract(h, {l, R}, {{{0, 0}}, {{1, 0}, {0, 1}}, {{1, 1}, {0, 2}}}));
  const auto one = element_tensor(h.unit_vector());
  check(rep, "qt4_left_counit", counit_at(h, R, 0), one);
  check(rep, "qt4_right_counit", counit_at(h, R, 1), one);
  const auto inv = try_inverse(h, R);
  rep.add("R_invertible", inv.has_value(), "no inverse of R in the tensor square");
  return rep;
}

class QuantumDouble {
 public:
  explicit QuantumDouble(QuasiHopfAlgebra base)
      : base_(std::move(base)), pack_(compute_pack(base_)), omega_(qhopf::omega(base_, pack_)), algebra_(assemble()) {
    R_ = compute_r();
    qt_ = verify_quasitriangular(algebra_, R_);
    if (!qt_.all_pass()) throw Error(ErrorCode::DoubleValidationFailure, "R-matrix fails: " + qt_.failures());
  }

  const QuasiHopfAlgebra& base() const noexcept { return base_; }
  const QuasiHopfAlgebra& algebra() const noexcept { return algebra_; }
  const DerivedPack& pack() const noexcept { return pack_; }
  const TensorElement& omega() const noexcept { return omega_; }
  const TensorElement& R() const noexcept { return R_; }
  const SuiteReport& quasitriangular() const noexcept { return qt_; }
  std::size_t base_dim() const noexcept { return base_.dim(); }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * base_.dim() + j; }

  /// phi |><| h
  Vector pure(const Vector& phi, const Vector& h) const {
    const std::size_t n = base_dim();
    Vector out(n * n);
    for (std::size_t i = 0; i < n; ++i)
      if (!phi[i].is_zero())
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = phi[i] * h[j];
    return out;
  }

  /// i_D(h) = eps |><| h
  Vector embed(const Vector& h) const { return pure(base_.counit(), h); }

 private:
  AlgebraPresentation build_presentation() const;
  QuasiHopfAlgebra assemble() const {
    try {
      return QuasiHopfAlgebra(build_presentation());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidPresentation) throw;
      throw Error(ErrorCode::DoubleValidationFailure, std::string("double presentation: ") + e.what());
    }
  }
  TensorElement compute_r() const;

  QuasiHopfAlgebra base_;
  DerivedPack pack_;
  TensorElement omega_;
  QuasiHopfAlgebra algebra_;
  TensorElement R_;
  SuiteReport qt_;
};

inline AlgebraPresentation QuantumDouble::build_presentation() const {
  const Structure& h = base_.structure();
  const std::size_t n = h.dim();
  const std::size_t N = n * n;
  const Map Si = Map::Sinv;
  const Vector& eps = base_.counit();
  const auto& bp = base_.presentation();
  using detail::delta_at;

  AlgebraPresentation p;
  p.dim = N;
  p.field_order = base_.field_order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.basis_labels.push_back(bp.basis_labels[i] + "*|" + bp.basis_labels[j]);

  // Multiplication; output slots (a, b, c, d, i, l) for e^i|><|e_l in (e^a|><|e_b)(e^c|><|e_d).
  p.mult = detail::as_double_tensor(
      contract(h, {omega_, delta_at(h, label_plain(h), {1, 1}), label_delta(h), label_plain(h)},
               {{{0, 4}, {2, 1}, {0, 0}},
                {{1, 0}},
                {{1, 3, Si}, {0, 3}, {2, 2}, {0, 1}, {1, 1}},
                {{3, 0}},
                {{2, 0}},
                {{0, 2}, {1, 2}, {3, 1}}}));

  // Comultiplication; output slots (a, b, i, j, k, l). The left factor is
  // multiplied by eps |><| z, z = X1 Y1, which only sees O2, O3, O4.
  {
    const auto om = counit_at(h, counit_at(h, omega_, 4), 0);
    p.comult = detail::as_double_tensor(
        contract(h,
                 {delta_at(h, base_.phi(), {0, 0, 3}), delta_at(h, base_.phi(), {0, 0}), base_.phi_inv(),
                  delta_at(h, pack_.pR, {0}), om, label_plain(h), label_plain(h), label_delta(h)},
                 {{{0, 5, Si}, {5, 1}, {0, 3}, {1, 3}, {3, 2, Si}, {1, 2, Si}, {0, 2, Si}, {4, 2}, {6, 1}, {4, 0}, {0, 0}, {1, 0}, {3, 0}, {2, 0}},
                  {{7, 0}},
                  {{6, 0}},
                  {{4, 1}, {0, 1}, {1, 1}, {3, 1}, {2, 1}, {7, 1}},
                  {{5, 0}},
                  {{0, 4}, {1, 4}, {2, 2}, {7, 2}}}));
  }

  // Antipode; output slots (a, b, i, l), row (a, b) of the matrix is S_D(e^a|><|e_b).
  {
    const auto om = counit_at(h, counit_at(h, omega_, 4), 0);
    const auto t = contract(h,
                            {delta_at(h, map_at(h, label_plain(h), 1, Map::S), {1, 1}), delta_at(h, pack_.f, {0, 0}),
                             delta_at(h, pack_.pR, {0}), pack_.U, om, label_plain(h)},
                            {{{3, 0, Si}, {2, 0, Si}, {1, 0, Si}, {0, 1, Si}, {4, 0, Si}, {5, 1, Si}, {4, 2, Si}, {0, 3, Map::Sinv2}, {1, 2, Map::Sinv2},
                              {2, 2, Map::Sinv2}, {1, 3, Si}},
                             {{0, 0}},
                             {{5, 0}},
                             {{4, 1}, {0, 2}, {1, 1}, {2, 1}, {3, 1}}});
    p.antipode = Matrix(N, N);
    const auto st = detail::as_double_tensor(t);
    for (const auto& [f, c] : st.terms()) p.antipode(f / N, f % N) = c;
  }

  p.counit = Vector(N);
  const Vector sa = h.apply(Map::Sinv, base_.alpha());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) p.counit[a * n + b] = eps[b] * sa[a];
  p.unit = embed(h.unit_vector());
  p.alpha = embed(base_.alpha());
  p.beta = embed(base_.beta());
  p.phi = detail::embed_tensor(base_.phi(), eps);
  p.phi_inv = detail::embed_tensor(base_.phi_inv(), eps);
  return p;
}

inline TensorElement QuantumDouble::compute_r() const {
  const Structure& h = base_.structure();
  // slots (d, i, l): R = sum (eps |><| e_d) (x) (e^i |><| e_l)
  const auto t = contract(h, {detail::delta_at(h, pack_.pR, {0}), label_plain(h)},
                          {{{0, 2, Map::Sinv}, {1, 1}, {0, 0}}, {{1, 0}}, {{0, 1}}});
  const Vector& eps = base_.counit();
  const std::size_t n = h.dim();
  TensorBuilder b(n * n, 2);
  for (const auto& [f, c] : t.terms()) {
    const auto idx = t.unflatten(f);
    for (std::size_t i = 0; i < n; ++i)
      if (!eps[i].is_zero()) b.add(Flat(index(i, idx[0])) * (n * n) + index(idx[1], idx[2]), c * eps[i]);
  }
  return std::move(b).build();
}

}  // namespace qhopf
