#pragma once

// Structure-dependent operations on elements of H^{\otimes k}.

#include <functional>
#include <span>
#include <vector>

#include "qhopf/structure.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

namespace detail {

/// Adds coeff * (v_0 (x) v_1 (x) ...) into b, one sparse vector per slot.
inline void add_outer(TensorBuilder& b, std::size_t n, std::span<const SparseVec* const> slots, const Scalar& coeff) {
  const std::size_t k = slots.size();
  for (auto* s : slots)
    if (s->empty()) return;
  std::vector<std::size_t> pos(k, 0);
  while (true) {
    Flat f = 0;
    Scalar c = coeff;
    for (std::size_t s = 0; s < k; ++s) {
      const auto& [idx, val] = (*slots[s])[pos[s]];
      f = f * n + idx;
      c *= val;
    }
    b.add(f, c);
    std::size_t s = k;
    while (s > 0) {
      --s;
      if (++pos[s] < slots[s]->size()) break;
      pos[s] = 0;
      if (s == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace detail

inline TensorElement element_tensor(const Vector& v) { return TensorElement::from_dense(v.size(), 1, v); }

inline Vector tensor_vector(const TensorElement& t) {
  if (t.arity() != 1) throw Error(ErrorCode::ShapeMismatch, "expected an arity-1 tensor");
  return t.dense();
}

/// Scalar value of an arity-0 tensor.
inline Scalar tensor_scalar(const TensorElement& t) {
  if (t.arity() != 0) throw Error(ErrorCode::ShapeMismatch, "expected an arity-0 tensor");
  return t.coeff(Flat(0));
}

/// 1 (x) ... (x) 1 with k factors.
inline TensorElement unit_tensor(const Structure& h, std::size_t k) {
  TensorElement u = TensorElement::from_terms(h.dim(), 0, {{0, Scalar(1)}});
  const TensorElement one = element_tensor(h.unit_vector());
  for (std::size_t i = 0; i < k; ++i) u = tensor_product(u, one);
  return u;
}

/// Slotwise product in the algebra H^{\otimes k}.
inline TensorElement multiply(const Structure& h, const TensorElement& a, const TensorElement& b) {
  if (a.arity() != b.arity() || a.dim() != h.dim() || b.dim() != h.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "tensor multiply shapes");
  }
  const std::size_t k = a.arity();
  TensorBuilder out(h.dim(), k);
  std::vector<const SparseVec*> slots(k);
  std::vector<std::vector<std::size_t>> bidx;
  bidx.reserve(b.nnz());
  for (const auto& [fb, cb] : b.terms()) bidx.push_back(b.unflatten(fb));
  for (const auto& [fa, ca] : a.terms()) {
    const auto ia = a.unflatten(fa);
    std::size_t t = 0;
    for (const auto& [fb, cb] : b.terms()) {
      const auto& ib = bidx[t++];
      bool zero = false;
      for (std::size_t s = 0; s < k; ++s) {
        slots[s] = &h.product(static_cast<std::uint32_t>(ia[s]), static_cast<std::uint32_t>(ib[s]));
        if (slots[s]->empty()) zero = true;
      }
      if (!zero) detail::add_outer(out, h.dim(), slots, ca * cb);
    }
  }
  return std::move(out).build();
}

inline TensorElement multiply(const Structure& h, std::initializer_list<TensorElement> factors) {
  auto it = factors.begin();
  TensorElement acc = *it++;
  for (; it != factors.end(); ++it) acc = multiply(h, acc, *it);
  return acc;
}

/// Applies a per-index expansion to one slot: slot s with basis index i
/// becomes expand(i), a tensor of arity `width` (0 removes the slot).
inline TensorElement replace_slot(const TensorElement& t, std::size_t slot, std::size_t width,
                                  const std::function<const std::vector<std::pair<std::vector<std::uint32_t>, Scalar>>&(
                                      std::uint32_t)>& expand) {
  if (slot >= t.arity()) throw Error(ErrorCode::ShapeMismatch, "slot out of range");
  const std::size_t n = t.dim();
  const std::size_t out_arity = t.arity() - 1 + width;
  TensorBuilder b(n, out_arity);
  const Flat tail = checked_power(n, t.arity() - 1 - slot);
  const Flat tail_out = checked_power(n, t.arity() - 1 - slot);
  const Flat mid = checked_power(n, width);
  for (const auto& [f, c] : t.terms()) {
    const Flat low = f % tail;
    const Flat rest = f / tail;
    const auto i = static_cast<std::uint32_t>(rest % n);
    const Flat high = rest / n;
    for (const auto& [legs, v] : expand(i)) {
      Flat m = 0;
      for (auto l : legs) m = m * n + l;
      b.add((high * mid + m) * tail_out + low, c * v);
    }
  }
  return std::move(b).build();
}

/// Delta applied to one slot; the two new legs sit at positions slot, slot+1.
inline TensorElement coproduct_at(const Structure& h, const TensorElement& t, std::size_t slot) {
  std::vector<std::vector<std::pair<std::vector<std::uint32_t>, Scalar>>> table(h.dim());
  for (std::uint32_t i = 0; i < h.dim(); ++i)
    for (const auto& term : h.coproduct(i)) table[i].push_back({{term.left, term.right}, term.coeff});
  return replace_slot(t, slot, 2, [&](std::uint32_t i) -> const auto& { return table[i]; });
}

/// Pairs one slot with a functional given by its values on the basis.
inline TensorElement functional_at(const TensorElement& t, std::size_t slot, const Vector& phi) {
  if (phi.size() != t.dim()) throw Error(ErrorCode::ShapeMismatch, "functional length");
  std::vector<std::vector<std::pair<std::vector<std::uint32_t>, Scalar>>> table(t.dim());
  for (std::uint32_t i = 0; i < t.dim(); ++i)
    if (!phi[i].is_zero()) table[i].push_back({{}, phi[i]});
  return replace_slot(t, slot, 0, [&](std::uint32_t i) -> const auto& { return table[i]; });
}

inline TensorElement counit_at(const Structure& h, const TensorElement& t, std::size_t slot) {
  return functional_at(t, slot, h.counit_vector());
}

inline TensorElement map_at(const Structure& h, const TensorElement& t, std::size_t slot, Map m) {
  std::vector<std::vector<std::pair<std::vector<std::uint32_t>, Scalar>>> table(h.dim());
  for (std::uint32_t i = 0; i < h.dim(); ++i)
    for (const auto& [k, c] : h.image(m, i)) table[i].push_back({{k}, c});
  return replace_slot(t, slot, 1, [&](std::uint32_t i) -> const auto& { return table[i]; });
}

/// Linear map on one slot given as a matrix acting on coordinate columns.
inline TensorElement matrix_at(const TensorElement& t, std::size_t slot, const Matrix& a) {
  if (a.rows() != t.dim() || a.cols() != t.dim()) throw Error(ErrorCode::ShapeMismatch, "slot matrix shape");
  std::vector<std::vector<std::pair<std::vector<std::uint32_t>, Scalar>>> table(t.dim());
  for (std::uint32_t i = 0; i < t.dim(); ++i)
    for (std::uint32_t k = 0; k < t.dim(); ++k)
      if (!a(k, i).is_zero()) table[i].push_back({{k}, a(k, i)});
  return replace_slot(t, slot, 1, [&](std::uint32_t i) -> const auto& { return table[i]; });
}

/// Sum over the diagonal of two slots (pairing a dual-basis slot with a
/// primal slot); both slots are removed.
inline TensorElement trace_slots(const TensorElement& t, std::size_t a, std::size_t b) {
  if (a == b || a >= t.arity() || b >= t.arity()) throw Error(ErrorCode::ShapeMismatch, "trace_slots indices");
  TensorBuilder out(t.dim(), t.arity() - 2);
  std::vector<std::size_t> keep;
  for (std::size_t s = 0; s < t.arity(); ++s)
    if (s != a && s != b) keep.push_back(s);
  for (const auto& [f, c] : t.terms()) {
    const auto idx = t.unflatten(f);
    if (idx[a] != idx[b]) continue;
    Flat g = 0;
    for (auto s : keep) g = g * t.dim() + idx[s];
    out.add(g, c);
  }
  return std::move(out).build();
}

/// Sum_i e_i (x) e_i: the identity of H read as an element of H (x) H.
inline TensorElement identity_tensor(std::size_t n) {
  std::vector<TensorElement::Term> terms;
  for (std::size_t i = 0; i < n; ++i) terms.emplace_back(i * n + i, Scalar(1));
  return TensorElement::from_terms(n, 2, std::move(terms));
}

/// Inverse in the algebra H^{\otimes k} through the minimal polynomial of a:
/// once a^d is a combination of lower powers, a is invertible iff the
/// constant coefficient is nonzero.
inline std::optional<TensorElement> try_inverse(const Structure& h, const TensorElement& a) {
  const std::size_t k = a.arity();
  std::vector<TensorElement> powers{unit_tensor(h, k)};
  // Incremental elimination over sparse power vectors.
  struct Row {
    Flat pivot;
    std::unordered_map<Flat, Scalar> v;     // reduced coordinates
    std::vector<Scalar> combo;              // coefficients over the powers
  };
  std::vector<Row> rows;
  auto reduce = [&](const TensorElement& t, std::size_t index) -> std::optional<std::vector<Scalar>> {
    std::unordered_map<Flat, Scalar> v;
    for (const auto& [f, c] : t.terms()) v.emplace(f, c);
    std::vector<Scalar> combo(index + 1);
    combo[index] = Scalar(1);
    for (const auto& r : rows) {
      auto it = v.find(r.pivot);
      if (it == v.end() || it->second.is_zero()) continue;
      const Scalar factor = it->second;
      for (const auto& [f, c] : r.v) {
        auto [jt, inserted] = v.try_emplace(f, -(factor * c));
        if (!inserted) jt->second -= factor * c;
      }
      for (std::size_t i = 0; i < r.combo.size(); ++i)
        if (!r.combo[i].is_zero()) combo[i] -= factor * r.combo[i];
    }
    std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
    if (v.empty()) return combo;  // sum combo[i] a^i = 0
    Flat pivot = v.begin()->first;
    for (const auto& kv : v) pivot = std::min(pivot, kv.first);
    const Scalar inv = v[pivot].inverse();
    for (auto& kv : v) kv.second *= inv;
    for (auto& c : combo) c *= inv;
    rows.push_back({pivot, std::move(v), std::move(combo)});
    return std::nullopt;
  };
  if (reduce(powers[0], 0)) return std::nullopt;
  const std::size_t limit = a.is_zero() ? 1 : a.size() + 1;
  for (std::size_t d = 1; d <= limit; ++d) {
    powers.push_back(multiply(h, powers.back(), a));
    if (auto rel = reduce(powers.back(), d)) {
      // rel: sum_{i<=d} rel[i] a^i = 0. Rows hold combos with leading index < d,
      // so rel[d] = 1 exactly.
      const Scalar& c0 = (*rel)[0];
      if (c0.is_zero()) return std::nullopt;
      // a^{-1} = -(1/c0) sum_{i>=1} rel[i] a^{i-1}
      TensorElement inv(h.dim(), k);
      for (std::size_t i = 1; i <= d; ++i)
        if (!(*rel)[i].is_zero()) inv = inv + powers[i - 1].scaled((*rel)[i]);
      return inv.scaled(-c0.inverse());
    }
  }
  return std::nullopt;
}

inline TensorElement inverse(const Structure& h, const TensorElement& a) {
  auto inv = try_inverse(h, a);
  if (!inv) throw Error(ErrorCode::NotInvertible, "element is not invertible");
  return *inv;
}

inline Vector inverse(const Structure& h, const Vector& a) { return tensor_vector(inverse(h, element_tensor(a))); }

}  // namespace qhopf
