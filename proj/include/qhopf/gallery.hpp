#pragma once

// Concrete algebras: group algebras, twisted dual group algebras, Sweedler's H4.

#include <array>
#include <string>
#include <vector>

#include "qhopf/double.hpp"
#include "qhopf/error.hpp"
#include "qhopf/presentation.hpp"
#include "qhopf/scalar.hpp"

namespace qhopf {

struct GroupTable {
  std::size_t order = 0;
  std::vector<std::size_t> mult;  // mult[a * order + b] = ab
  std::vector<std::size_t> inverse;
  std::size_t identity = 0;
  std::vector<std::string> labels;

  std::size_t op(std::size_t a, std::size_t b) const { return mult[a * order + b]; }

  /// Exhaustive group axiom check; throws InvalidGroup.
  void validate() const {
    const std::size_t n = order;
    if (n == 0 || mult.size() != n * n || inverse.size() != n || identity >= n) {
      throw Error(ErrorCode::InvalidGroup, "malformed group table");
    }
    for (auto v : mult)
      if (v >= n) throw Error(ErrorCode::InvalidGroup, "product out of range");
    for (std::size_t a = 0; a < n; ++a) {
      if (op(identity, a) != a || op(a, identity) != a) throw Error(ErrorCode::InvalidGroup, "identity fails");
      if (op(a, inverse[a]) != identity || op(inverse[a], a) != identity) {
        throw Error(ErrorCode::InvalidGroup, "inverse fails at " + std::to_string(a));
      }
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (op(op(a, b), c) != op(a, op(b, c))) throw Error(ErrorCode::InvalidGroup, "associativity fails");
    }
  }
};

/// Z_n = {g^0, ..., g^{n-1}}.
inline GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidGroup, "cyclic group order must be positive");
  GroupTable g;
  g.order = n;
  g.mult.resize(n * n);
  g.inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.mult[a * n + b] = (a + b) % n;
    g.inverse[a] = (n - a) % n;
    g.labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
  }
  return g;
}

/// S_3 as permutations of {0,1,2} in lexicographic order; (st)(x) = s(t(x)).
inline GroupTable symmetric_group3() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index = [&](const std::array<int, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return i;
    throw Error(ErrorCode::InvalidGroup, "not a permutation");
  };
  GroupTable g;
  g.order = 6;
  g.mult.resize(36);
  g.inverse.resize(6);
  for (std::size_t a = 0; a < 6; ++a) {
    std::array<int, 3> inv{};
    for (int x = 0; x < 3; ++x) inv[perms[a][x]] = x;
    g.inverse[a] = index(inv);
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      g.mult[a * 6 + b] = index(c);
    }
    g.labels.push_back(std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]));
  }
  return g;
}

struct ThreeCocycle {
  GroupTable group;
  unsigned field_order = 1;
  std::vector<Scalar> values;  // values[(a * n + b) * n + c] = omega(a, b, c)

  const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    const std::size_t n = group.order;
    return values[(a * n + b) * n + c];
  }

  /// Empty when omega is a normalized 3-cocycle; otherwise a description of
  /// the first failing tuple.
  std::string defect() const {
    const std::size_t n = group.order;
    if (values.size() != n * n * n) return "value array must have n^3 entries";
    const std::size_t e = group.identity;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!(*this)(e, a, b).is_one() || !(*this)(a, e, b).is_one() || !(*this)(a, b, e).is_one()) {
          return "not normalized at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d) {
            const Scalar lhs = (*this)(a, b, group.op(c, d)) * (*this)(group.op(a, b), c, d);
            const Scalar rhs = (*this)(b, c, d) * (*this)(a, group.op(b, c), d) * (*this)(a, b, c);
            if (lhs != rhs) {
              return "cocycle identity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + "," + std::to_string(d) + ")";
            }
          }
      }
    return {};
  }

  void validate() const {
    group.validate();
    const std::string d = defect();
    if (!d.empty()) throw Error(ErrorCode::CocycleInvalid, d);
  }
};

/// omega(g^a, g^b, g^c) = zeta_n^{q a floor((b + c) / n)}.
inline ThreeCocycle cocycle_cyclic(std::size_t n, std::size_t q) {
  if (n == 0 || q >= n) throw Error(ErrorCode::CocycleInvalid, "need n >= 1 and 0 <= q < n");
  ThreeCocycle w;
  w.group = cyclic_group(n);
  w.field_order = n <= 2 ? 1 : static_cast<unsigned>(n);
  w.values.reserve(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        w.values.push_back(root_of_unity(static_cast<unsigned>(n), static_cast<long long>(q * a * ((b + c) / n))));
  return w;
}

namespace detail {

inline AlgebraPresentation empty_presentation(std::size_t n) {
  AlgebraPresentation p;
  p.dim = n;
  p.mult = TensorElement(n, 3);
  p.comult = TensorElement(n, 3);
  p.phi = TensorElement(n, 3);
  p.unit = Vector(n);
  p.counit = Vector(n);
  p.alpha = Vector(n);
  p.beta = Vector(n);
  p.antipode = Matrix(n, n);
  return p;
}

inline Flat flat3(std::size_t n, std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; }

}  // namespace detail

/// kG: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}, trivial reassociator.
inline AlgebraPresentation group_algebra(const GroupTable& g) {
  g.validate();
  const std::size_t n = g.order;
  AlgebraPresentation p = detail::empty_presentation(n);
  p.basis_labels = g.labels;
  std::vector<TensorElement::Term> m, d;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m.emplace_back(detail::flat3(n, a, b, g.op(a, b)), Scalar(1));
    d.emplace_back(detail::flat3(n, a, a, a), Scalar(1));
    p.counit[a] = Scalar(1);
    p.antipode(a, g.inverse[a]) = Scalar(1);
  }
  p.mult = TensorElement::from_terms(n, 3, m);
  p.comult = TensorElement::from_terms(n, 3, d);
  const std::size_t e = g.identity;
  p.unit[e] = p.alpha[e] = p.beta[e] = Scalar(1);
  p.phi = TensorElement::from_terms(n, 3, {{detail::flat3(n, e, e, e), Scalar(1)}});
  return p;
}

/// H*_omega on the delta-function basis: pointwise product,
/// Delta(d_g) = sum_{xy=g} d_x (x) d_y, Phi = sum omega^{-1}(a,b,c) d_a (x) d_b (x) d_c,
/// alpha = 1, beta = sum_g omega(g, g^{-1}, g) d_g, S(d_g) = d_{g^{-1}}.
inline AlgebraPresentation dual_group_algebra_twisted(const ThreeCocycle& w) {
  w.validate();
  const GroupTable& g = w.group;
  const std::size_t n = g.order;
  AlgebraPresentation p = detail::empty_presentation(n);
  p.field_order = w.field_order;
  for (const auto& l : g.labels) p.basis_labels.push_back("d_" + l);
  std::vector<TensorElement::Term> m, d, phi, phi_inv;
  for (std::size_t a = 0; a < n; ++a) {
    m.emplace_back(detail::flat3(n, a, a, a), Scalar(1));
    for (std::size_t b = 0; b < n; ++b) {
      d.emplace_back(detail::flat3(n, g.op(a, b), a, b), Scalar(1));
      for (std::size_t c = 0; c < n; ++c) {
        phi.emplace_back(detail::flat3(n, a, b, c), w(a, b, c).inverse());
        phi_inv.emplace_back(detail::flat3(n, a, b, c), w(a, b, c));
      }
    }
    p.unit[a] = p.alpha[a] = Scalar(1);
    p.beta[a] = w(a, g.inverse[a], a);
    p.antipode(a, g.inverse[a]) = Scalar(1);
  }
  p.counit[g.identity] = Scalar(1);
  p.mult = TensorElement::from_terms(n, 3, m);
  p.comult = TensorElement::from_terms(n, 3, d);
  p.phi = TensorElement::from_terms(n, 3, phi);
  p.phi_inv = TensorElement::from_terms(n, 3, phi_inv);
  return p;
}

/// Sweedler's four-dimensional Hopf algebra on the basis {1, g, x, gx}.
inline AlgebraPresentation sweedler_h4() {
  const std::size_t n = 4;
  enum : std::size_t { One = 0, G = 1, X = 2, GX = 3 };
  AlgebraPresentation p = detail::empty_presentation(n);
  p.basis_labels = {"1", "g", "x", "gx"};
  std::vector<TensorElement::Term> m;
  auto prod = [&](std::size_t a, std::size_t b, std::size_t c, long s) { m.emplace_back(detail::flat3(n, a, b, c), Scalar(s)); };
  for (std::size_t b = 0; b < n; ++b) prod(One, b, b, 1);
  prod(G, One, G, 1);
  prod(G, G, One, 1);
  prod(G, X, GX, 1);
  prod(G, GX, X, 1);
  prod(X, One, X, 1);
  prod(X, G, GX, -1);
  prod(GX, One, GX, 1);
  prod(GX, G, X, -1);
  p.mult = TensorElement::from_terms(n, 3, m);
  p.comult = TensorElement::from_terms(n, 3,
                                       {{detail::flat3(n, One, One, One), Scalar(1)},
                                        {detail::flat3(n, G, G, G), Scalar(1)},
                                        {detail::flat3(n, X, X, One), Scalar(1)},
                                        {detail::flat3(n, X, G, X), Scalar(1)},
                                        {detail::flat3(n, GX, GX, G), Scalar(1)},
                                        {detail::flat3(n, GX, One, GX), Scalar(1)}});
  p.counit[One] = p.counit[G] = Scalar(1);
  p.unit[One] = p.alpha[One] = p.beta[One] = Scalar(1);
  p.antipode(One, One) = Scalar(1);
  p.antipode(G, G) = Scalar(1);
  p.antipode(X, GX) = Scalar(-1);
  p.antipode(GX, X) = Scalar(1);
  p.phi = TensorElement::from_terms(n, 3, {{detail::flat3(n, One, One, One), Scalar(1)}});
  return p;
}

/// The twisted quantum double D^omega(G) = D(H*_omega), of dimension |G|^2.
inline QuantumDouble dpr_double(const ThreeCocycle& w) { return QuantumDouble(QuasiHopfAlgebra(dual_group_algebra_twisted(w))); }

}  // namespace qhopf
