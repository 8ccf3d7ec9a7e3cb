#pragma once

// The dual H*, with functionals stored by their values on the basis of H:
// phi[i] = <phi, e_i>, so phi = sum_i phi[i] e^i.
//
// <phi psi, h> = phi(h_1) psi(h_2), <h -> phi, h'> = phi(h' h),
// <phi <- h, h'> = phi(h h'), <Sbar(phi), h> = phi(S(h)).

#include "qhopf/structure.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

inline Scalar pair(const Vector& phi, const Vector& h) {
  if (phi.size() != h.size()) throw Error(ErrorCode::ShapeMismatch, "pairing lengths");
  Scalar s;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero() && !phi[i].is_zero()) s += phi[i] * h[i];
  return s;
}

/// Convolution product, the multiplication of H*. Quasi-associative only.
inline Vector convolution(const Structure& h, const Vector& phi, const Vector& psi) {
  Vector out(h.dim());
  for (std::uint32_t i = 0; i < h.dim(); ++i)
    for (const auto& t : h.coproduct(i)) out[i] += t.coeff * phi[t.left] * psi[t.right];
  return out;
}

/// Dual coproduct as an arity-2 tensor of dual-basis coefficients:
/// coefficient (r, s) is phi(e_r e_s).
inline TensorElement dual_coproduct(const Structure& h, const Vector& phi) {
  const std::size_t n = h.dim();
  TensorBuilder b(n, 2);
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t s = 0; s < n; ++s) {
      Scalar c;
      for (const auto& [k, m] : h.product(r, s)) c += m * phi[k];
      b.add(Flat(r) * n + s, c);
    }
  return std::move(b).build();
}

/// x -> phi <- y, i.e. h' |-> phi(y h' x).
inline Vector hit(const Structure& h, const Vector& x, const Vector& phi, const Vector& y) {
  Vector out(h.dim());
  for (std::uint32_t i = 0; i < h.dim(); ++i) out[i] = pair(phi, h.multiply({y, basis_vector(h.dim(), i), x}));
  return out;
}

inline Vector left_hit(const Structure& h, const Vector& x, const Vector& phi) { return hit(h, x, phi, h.unit_vector()); }
inline Vector right_hit(const Structure& h, const Vector& phi, const Vector& y) { return hit(h, h.unit_vector(), phi, y); }

/// phi composed with one of the antipode maps: Sbar = dual_map(S), Sbar^{-1} = dual_map(Sinv).
inline Vector dual_map(const Structure& h, Map m, const Vector& phi) {
  Vector out(h.dim());
  for (std::uint32_t i = 0; i < h.dim(); ++i)
    for (const auto& [k, c] : h.image(m, i)) out[i] += c * phi[k];
  return out;
}

}  // namespace qhopf
