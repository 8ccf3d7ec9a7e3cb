#pragma once

// Left modules, the rigid and braided structure on them, the elements u and
// eta of a quasitriangular algebra, and the Schrodinger representation of
// D(H) on H.

#include <string>
#include <vector>

#include "qhopf/double.hpp"

namespace qhopf {

/// rho(e_i) for every basis element, as matrices acting on columns.
struct ModuleAction {
  QuasiHopfAlgebra algebra;
  std::size_t vdim = 0;
  std::vector<Matrix> action;
  std::string label;

  Matrix of(const Vector& a) const {
    Matrix m(vdim, vdim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero()) m = m + action[i].scaled(a[i]);
    return m;
  }

  SuiteReport check() const {
    SuiteReport rep;
    const Structure& h = algebra.structure();
    std::string witness;
    for (std::uint32_t i = 0; i < h.dim() && witness.empty(); ++i)
      for (std::uint32_t j = 0; j < h.dim() && witness.empty(); ++j) {
        Matrix rhs(vdim, vdim);
        for (const auto& [k, c] : h.product(i, j)) rhs = rhs + action[k].scaled(c);
        if (!(action[i] * action[j] == rhs)) witness = "basis (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    rep.add("module_multiplicative", witness.empty(), witness);
    rep.add("module_unital", of(algebra.unit()) == Matrix::identity(vdim), "rho(1) is not the identity");
    return rep;
  }
};

/// Builds and verifies a module; throws InvalidModule.
inline ModuleAction make_module(const QuasiHopfAlgebra& H, std::vector<Matrix> action, std::string label) {
  if (action.size() != H.dim()) throw Error(ErrorCode::InvalidModule, "one matrix per basis element is required");
  const std::size_t d = action.empty() ? 0 : action[0].rows();
  for (const auto& m : action)
    if (m.rows() != d || m.cols() != d) throw Error(ErrorCode::InvalidModule, "action matrices must be square of one size");
  ModuleAction v{H, d, std::move(action), std::move(label)};
  const auto rep = v.check();
  if (!rep.all_pass()) throw Error(ErrorCode::InvalidModule, v.label + ": " + rep.failures());
  return v;
}

inline ModuleAction regular_module(const QuasiHopfAlgebra& H) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < H.dim(); ++i) act.push_back(H.structure().left_mult_matrix(basis_vector(H.dim(), i)));
  return make_module(H, std::move(act), "regular");
}

inline ModuleAction trivial_module(const QuasiHopfAlgebra& H) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < H.dim(); ++i) {
    Matrix m(1, 1);
    m(0, 0) = H.counit()[i];
    act.push_back(std::move(m));
  }
  return make_module(H, std::move(act), "trivial");
}

/// Module from a tensor with slots (algebra basis, input, output).
inline ModuleAction module_from_tensor(const QuasiHopfAlgebra& H, const TensorElement& t, std::size_t vdim, std::string label) {
  std::vector<Matrix> act(H.dim(), Matrix(vdim, vdim));
  for (const auto& [f, c] : t.terms()) {
    const Flat out = f % vdim;
    const Flat in = (f / vdim) % vdim;
    const Flat a = f / (Flat(vdim) * vdim);
    act[a](out, in) = c;
  }
  return make_module(H, std::move(act), std::move(label));
}

/// Left dual V* with <h.phi, v> = <phi, S(h).v>, ev(phi (x) v) = phi(alpha.v)
/// and coev(1) = sum_i beta.v_i (x) v^i. V* (x) V and V (x) V* are indexed
/// first-factor major.
struct DualData {
  ModuleAction dual;
  Matrix ev;    // 1 x d^2 on V* (x) V
  Matrix coev;  // d^2 x 1 into V (x) V*
  SuiteReport zigzag;
};

namespace detail {

/// a_{U,V,W} = sum rho_U(X1) (x) rho_V(X2) (x) rho_W(X3) for a given Phi.
inline Matrix associator(const TensorElement& phi, const ModuleAction& u, const ModuleAction& v, const ModuleAction& w) {
  Matrix a(u.vdim * v.vdim * w.vdim, u.vdim * v.vdim * w.vdim);
  for (const auto& [f, c] : phi.terms()) {
    const auto x = phi.unflatten(f);
    a = a + kronecker(kronecker(u.action[x[0]], v.action[x[1]]), w.action[x[2]]).scaled(c);
  }
  return a;
}

}  // namespace detail

inline DualData dual_ev_coev(const ModuleAction& V) {
  const auto& H = V.algebra;
  const Structure& h = H.structure();
  const std::size_t d = V.vdim;
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < H.dim(); ++i) act.push_back(V.of(h.apply(Map::S, basis_vector(H.dim(), i))).transpose());
  DualData out{make_module(H, std::move(act), V.label + "*"), Matrix(1, d * d), Matrix(d * d, 1), {}};
  const Matrix ra = V.of(H.alpha()), rb = V.of(H.beta());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      out.ev(0, i * d + j) = ra(i, j);
      out.coev(i * d + j, 0) = rb(i, j);
    }
  // r_V (id (x) ev) a_{V,V*,V} (coev (x) id) l_V^{-1} = id_V
  const Matrix id = Matrix::identity(d);
  const Matrix first = kronecker(id, out.ev) * detail::associator(H.phi(), V, out.dual, V) * kronecker(out.coev, id);
  out.zigzag.add("zigzag_V", first == id, "composite differs from the identity of V");
  // l_{V*} (ev (x) id) a^{-1}_{V*,V,V*} (id (x) coev) r_{V*}^{-1} = id_{V*}
  const Matrix second = kronecker(out.ev, id) * detail::associator(H.phi_inv(), out.dual, V, out.dual) * kronecker(id, out.coev);
  out.zigzag.add("zigzag_Vstar", second == id, "composite differs from the identity of V*");
  return out;
}

struct UElements {
  Vector u, u_inv, eta;
  SuiteReport checks;
};

namespace detail {

inline UElements u_eta_unchecked(const QuasiHopfAlgebra& A, const TensorElement& R) {
  const Structure& h = A.structure();
  const auto al = element_tensor(A.alpha());
  const auto be = element_tensor(A.beta());
  const auto pR = contract(h, {A.phi_inv(), be}, {{{0, 0}}, {{0, 1}, {1, 0}, {0, 2, Map::S}}});
  UElements out;
  // u = S(R2 p2) alpha R1 p1
  out.u = tensor_vector(contract(h, {R, pR, al}, {{{1, 1, Map::S}, {0, 1, Map::S}, {2, 0}, {0, 0}, {1, 0}}}));
  out.u_inv = inverse(h, out.u);
  // eta = S(R2) alpha R1 beta
  out.eta = tensor_vector(contract(h, {R, al, be}, {{{0, 1, Map::S}, {1, 0}, {0, 0}, {2, 0}}}));
  const auto l = label_plain(h);
  check(out.checks, "S2_is_conjugation_by_u", contract(h, {l, element_tensor(out.u), element_tensor(out.u_inv)}, {{{0, 0}}, {{1, 0}, {0, 1}, {2, 0}}}),
        contract(h, {l}, {{{0, 0}}, {{0, 1, Map::S2}}}));
  check(out.checks, "SR2_alpha_R1_is_Salpha_u", contract(h, {R, al}, {{{0, 1, Map::S}, {1, 0}, {0, 0}}}),
        element_tensor(h.multiply(h.apply(Map::S, A.alpha()), out.u)));
  check(out.checks, "eta_is_u_Sinv_alpha_beta", element_tensor(out.eta),
        element_tensor(h.multiply({out.u, h.apply(Map::Sinv, A.alpha()), A.beta()})));
  return out;
}

}  // namespace detail

/// u = S(R2 p2) alpha R1 p1 and eta = S(R2) alpha R1 beta; throws NotQuasiTriangular.
inline UElements compute_u_eta(const QuasiHopfAlgebra& A, const TensorElement& R) {
  const auto qt = verify_quasitriangular(A, R);
  if (!qt.all_pass()) throw Error(ErrorCode::NotQuasiTriangular, qt.failures());
  auto out = detail::u_eta_unchecked(A, R);
  out.checks.append(qt);
  return out;
}

/// The double's R-matrix was verified on construction.
inline UElements compute_u_eta(const QuantumDouble& D) { return detail::u_eta_unchecked(D.algebra(), D.R()); }

/// Closed forms in D(H): u_D = sum_i beta -> Sbar^{-1}(e^i) |><| e_i and
/// eta_D = sum_i beta -> Sbar^{-1}(e^i) |><| e_i S^{-1}(alpha) beta.
inline std::pair<Vector, Vector> double_u_eta_closed_form(const QuantumDouble& D) {
  const QuasiHopfAlgebra& H = D.base();
  const Structure& h = H.structure();
  const std::size_t n = h.dim();
  const Vector tail = h.multiply(h.apply(Map::Sinv, H.alpha()), H.beta());
  Vector u(n * n), eta(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    // <beta -> Sbar^{-1}(e^i), e_a> = e^i(S^{-1}(e_a beta))
    const Vector ei = basis_vector(n, i);
    const Vector lhs = hit(h, H.beta(), dual_map(h, Map::Sinv, ei), h.unit_vector());
    const Vector right = h.multiply(ei, tail);
    for (std::size_t a = 0; a < n; ++a) {
      if (lhs[a].is_zero()) continue;
      u[D.index(a, i)] += lhs[a];
      for (std::size_t j = 0; j < n; ++j) eta[D.index(a, j)] += lhs[a] * right[j];
    }
  }
  return {u, eta};
}

struct QuantumDimension {
  Scalar trace_eta;
  Scalar categorical;
  bool equal() const { return trace_eta == categorical; }
};

/// Tr(rho(eta)) and ev o c_{V,V*} o coev with c(u (x) v) = R2.v (x) R1.u.
inline QuantumDimension quantum_dimension(const ModuleAction& V, const TensorElement& R, const Vector& eta) {
  const std::size_t d = V.vdim;
  const auto dd = dual_ev_coev(V);
  QuantumDimension q;
  q.trace_eta = trace(V.of(eta));
  // coev(1) = sum W(k,i) v_k (x) v^i, braided to R2.v^i (x) R1.v_k and
  // evaluated with ev(v^a (x) v_b) = E(a,b): the sum is Tr(E r1 W r2^T).
  Matrix E(d, d), W(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      E(i, j) = dd.ev(0, i * d + j);
      W(i, j) = dd.coev(i * d + j, 0);
    }
  for (const auto& [f, c] : R.terms()) {
    const auto r = R.unflatten(f);
    q.categorical += c * trace(E * V.action[r[0]] * W * dd.dual.action[r[1]].transpose());
  }
  return q;
}

inline QuantumDimension quantum_dimension(const ModuleAction& V, const TensorElement& R) {
  return quantum_dimension(V, R, detail::u_eta_unchecked(V.algebra, R).eta);
}

// ---- The algebra H_0 and the Schrodinger representation ----

/// Multiplication of H_0: h o h' = X1 h S(x1 X2) alpha x2 X3_1 h' S(x3 X3_2); slots (h, h', out).
inline TensorElement h0_product(const QuasiHopfAlgebra& H) {
  const Structure& h = H.structure();
  const Map S = Map::S;
  return contract(h, {detail::delta_at(h, H.phi(), {2}), H.phi_inv(), element_tensor(H.alpha()), label_plain(h), label_plain(h)},
                  {{{3, 0}},
                   {{4, 0}},
                   {{0, 0}, {3, 1}, {0, 1, S}, {1, 0, S}, {2, 0}, {1, 1}, {0, 2}, {4, 1}, {0, 3, S}, {1, 2, S}}});
}

/// Left adjoint action h |> h' = h_1 h' S(h_2); slots (h, h', out).
inline TensorElement adjoint_action(const QuasiHopfAlgebra& H) {
  const Structure& h = H.structure();
  return contract(h, {label_delta(h), label_plain(h)}, {{{0, 0}}, {{1, 0}}, {{0, 1}, {1, 1}, {0, 2, Map::S}}});
}

/// (phi |><| h) -> h' = <phi, S^{-1}(q~1 w_1 U1 Y3) Y1_1 y1> q~2 w_2 U2 with
/// w = Y1_2 y2 (h |> h') S(Y2 y3); slots (a, b, h', out) for phi = e^a, h = e_b.
inline TensorElement schrodinger_tensor(const QuasiHopfAlgebra& H, const DerivedPack& d) {
  const Structure& h = H.structure();
  const Map S = Map::S, Si = Map::Sinv;
  // slots (b, h', Y1_1 y1, w, Y3)
  const auto t = contract(h, {detail::delta_at(h, H.phi(), {0}), H.phi_inv(), label_delta(h), label_plain(h)},
                          {{{2, 0}},
                           {{3, 0}},
                           {{0, 0}, {1, 0}},
                           {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {2, 2, S}, {1, 2, S}, {0, 2, S}},
                           {{0, 3}}});
  return contract(h, {coproduct_at(h, t, 3), d.qL, d.U},
                  {{{0, 5, Si}, {2, 0, Si}, {0, 3, Si}, {1, 0, Si}, {0, 2}}, {{0, 0}}, {{0, 1}}, {{1, 1}, {0, 4}, {2, 1}}});
}

/// The same action in its original form
/// <phi, q2 x3 y3_2 S^{-1}(q~1 y2_1 k_1 g1) y1> q1_1 x1 q~2 y2_2 k_2 g2 S(q1_2 x2 y3_1), k = h |> h'.
inline TensorElement schrodinger_tensor_direct(const QuasiHopfAlgebra& H, const DerivedPack& d) {
  const Structure& h = H.structure();
  const Map S = Map::S, Si = Map::Sinv;
  const auto k = coproduct_at(h, adjoint_action(H), 2);  // (b, h', k1, k2)
  return contract(h,
                  {k, detail::delta_at(h, d.qR, {0}), H.phi_inv(), detail::delta_at(h, H.phi_inv(), {2, 1}), d.qL, d.f_inv},
                  {{{1, 2}, {2, 2}, {3, 4}, {5, 0, Si}, {0, 2, Si}, {3, 1, Si}, {4, 0, Si}, {3, 0}},
                   {{0, 0}},
                   {{0, 1}},
                   {{1, 0}, {2, 0}, {4, 1}, {3, 2}, {0, 3}, {5, 1}, {3, 3, S}, {2, 1, S}, {1, 1, S}}});
}

/// Right H-coaction on H_0:
/// m -> x1 q~2 y2_2 m_2 g2 S(x2 y3_1) (x) x3 y3_2 S^{-1}(q~1 y2_1 m_1 g1) y1; slots (m, m_(0), m_(1)).
inline TensorElement h0_coaction(const QuasiHopfAlgebra& H, const DerivedPack& d) {
  const Structure& h = H.structure();
  const Map S = Map::S, Si = Map::Sinv;
  return contract(h, {label_delta(h), H.phi_inv(), detail::delta_at(h, H.phi_inv(), {2, 1}), d.qL, d.f_inv},
                  {{{0, 0}},
                   {{1, 0}, {3, 1}, {2, 2}, {0, 2}, {4, 1}, {2, 3, S}, {1, 1, S}},
                   {{1, 2}, {2, 4}, {4, 0, Si}, {0, 1, Si}, {2, 1, Si}, {3, 0, Si}, {2, 0}}});
}

/// The Schrodinger representation through the Yetter-Drinfeld route:
/// (phi |><| h) -> m = <phi, q2 (h.m)_(1)> q1 . (h.m)_(0), with h.m = h |> m.
/// Computed with dense loops as an independent check of the contraction forms.
inline TensorElement schrodinger_tensor_via_coaction(const QuasiHopfAlgebra& H, const DerivedPack& d) {
  const Structure& h = H.structure();
  const std::size_t n = h.dim();
  const auto adj = adjoint_action(H);
  const auto rho = h0_coaction(H, d);
  std::vector<Matrix> adj_m(n, Matrix(n, n));
  for (const auto& [f, c] : adj.terms()) adj_m[f / (n * n)]((f % n), (f / n) % n) = c;
  TensorBuilder out(n, 4);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t m = 0; m < n; ++m) {
      const Vector k = adj_m[b].column(m);
      for (const auto& [f, c] : rho.terms()) {
        const auto idx = rho.unflatten(f);
        if (k[idx[0]].is_zero()) continue;
        for (const auto& [fq, cq] : d.qR.terms()) {
          const auto q = d.qR.unflatten(fq);
          const Vector dual_part = h.multiply(basis_vector(n, q[1]), basis_vector(n, idx[2]));
          const Vector module_part = adj_m[q[0]].column(idx[1]);
          const Scalar coeff = k[idx[0]] * c * cq;
          for (std::size_t a = 0; a < n; ++a) {
            if (dual_part[a].is_zero()) continue;
            for (std::size_t l = 0; l < n; ++l)
              if (!module_part[l].is_zero())
                out.add(((Flat(a) * n + b) * n + m) * n + l, coeff * dual_part[a] * module_part[l]);
          }
        }
      }
    }
  return std::move(out).build();
}

inline ModuleAction schrodinger_action(const QuantumDouble& D) {
  return module_from_tensor(D.algebra(), schrodinger_tensor(D.base(), D.pack()), D.base_dim(), "schrodinger");
}

/// The action makes H_0 a D(H)-module algebra: chi -> (a o b) = (chi_1 -> a) o (chi_2 -> b),
/// chi -> beta = eps_D(chi) beta, and H_0 is quasi-associative with unit beta.
inline SuiteReport module_algebra_suite(const QuantumDouble& D, const ModuleAction& V) {
  const QuasiHopfAlgebra& H = D.base();
  const Structure& h = H.structure();
  const Structure& dd = D.algebra().structure();
  const std::size_t n = h.dim();
  const auto prod = h0_product(H);
  std::vector<Matrix> circ(n, Matrix(n, n));  // circ[a] column b = a o b
  for (const auto& [f, c] : prod.terms()) circ[f / (n * n)](f % n, (f / n) % n) = c;
  auto o = [&](const Vector& a, const Vector& b) {
    Vector r(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!a[i].is_zero()) {
        const Vector t = circ[i] * b;
        for (std::size_t k = 0; k < n; ++k) r[k] += a[i] * t[k];
      }
    return r;
  };
  SuiteReport rep;
  std::string law, unit;
  for (std::uint32_t x = 0; x < D.dim(); ++x) {
    for (std::size_t a = 0; a < n && law.empty(); ++a)
      for (std::size_t b = 0; b < n && law.empty(); ++b) {
        const Vector ea = basis_vector(n, a), eb = basis_vector(n, b);
        const Vector lhs = V.action[x] * o(ea, eb);
        Vector rhs(n);
        for (const auto& t : dd.coproduct(x)) {
          const Vector r = o(V.action[t.left] * ea, V.action[t.right] * eb);
          for (std::size_t k = 0; k < n; ++k) rhs[k] += t.coeff * r[k];
        }
        if (lhs != rhs) law = "chi " + std::to_string(x) + ", basis (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    if (unit.empty()) {
      Vector expect = H.beta();
      for (auto& v : expect) v *= dd.counit(x);
      if (V.action[x] * H.beta() != expect) unit = "chi " + std::to_string(x);
    }
  }
  rep.add("module_algebra_product", law.empty(), law);
  rep.add("module_algebra_unit", unit.empty(), unit);
  std::string unital, assoc;
  for (std::size_t a = 0; a < n && unital.empty(); ++a) {
    const Vector ea = basis_vector(n, a);
    if (o(H.beta(), ea) != ea || o(ea, H.beta()) != ea) unital = "basis " + std::to_string(a);
  }
  rep.add("h0_unit_beta", unital.empty(), unital);
  // (a o b) o c = (X1 |> a) o ((X2 |> b) o (X3 |> c))
  const auto adj = adjoint_action(H);
  std::vector<Matrix> adj_m(n, Matrix(n, n));
  for (const auto& [f, c] : adj.terms()) adj_m[f / (n * n)](f % n, (f / n) % n) = c;
  for (std::size_t a = 0; a < n && assoc.empty(); ++a)
    for (std::size_t b = 0; b < n && assoc.empty(); ++b)
      for (std::size_t c = 0; c < n && assoc.empty(); ++c) {
        const Vector ea = basis_vector(n, a), eb = basis_vector(n, b), ec = basis_vector(n, c);
        const Vector lhs = o(o(ea, eb), ec);
        Vector rhs(n);
        for (const auto& [f, cf] : H.phi().terms()) {
          const auto x = H.phi().unflatten(f);
          const Vector r = o(adj_m[x[0]] * ea, o(adj_m[x[1]] * eb, adj_m[x[2]] * ec));
          for (std::size_t k = 0; k < n; ++k) rhs[k] += cf * r[k];
        }
        if (lhs != rhs) assoc = "basis (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
      }
  rep.add("h0_quasi_associative", assoc.empty(), assoc);
  return rep;
}

// ---- Quantum dimension of H ----

/// Tr(h |-> S^{-2}(S(beta) alpha h beta S(alpha))).
inline Scalar qdim_closed_form(const QuasiHopfAlgebra& H) {
  const Structure& h = H.structure();
  const Vector left = h.multiply(h.apply(Map::S, H.beta()), H.alpha());
  const Vector right = h.multiply(H.beta(), h.apply(Map::S, H.alpha()));
  return trace(h.map_matrix(Map::Sinv2) * h.left_mult_matrix(left) * h.right_mult_matrix(right));
}

/// Trace of eta_D through the Schrodinger representation.
inline Scalar qdim_schrodinger(const QuantumDouble&, const ModuleAction& V, const UElements& ud) { return trace(V.of(ud.eta)); }

/// Trace of left multiplication by eta_D on D(H).
inline Scalar qdim_double_regular(const QuantumDouble& D, const UElements& ud) {
  return trace(D.algebra().structure().left_mult_matrix(ud.eta));
}

}  // namespace qhopf
