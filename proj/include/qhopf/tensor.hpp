#pragma once

// Elements of H^{\otimes k} stored as sparse coordinate lists over the
// product basis. Flat indices are big-endian: slot 0 is the most significant
// digit, so (i_0, ..., i_{k-1}) maps to sum_s i_s * n^{k-1-s}.

#include <algorithm>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhopf/error.hpp"
#include "qhopf/matrix.hpp"
#include "qhopf/scalar.hpp"

namespace qhopf {

enum class Variance : std::uint8_t { Primal, Dual };

using Flat = std::uint64_t;

inline Flat checked_power(std::size_t base, std::size_t exp) {
  Flat out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > (Flat(1) << 62) / base) {
      throw Error(ErrorCode::ShapeMismatch, "tensor index space exceeds 64 bits");
    }
    out *= base;
  }
  return out;
}

class TensorElement {
 public:
  using Term = std::pair<Flat, Scalar>;

  TensorElement() = default;
  TensorElement(std::size_t dim, std::size_t arity)
      : dim_(dim), arity_(arity), variance_(arity, Variance::Primal), size_(checked_power(dim, arity)) {}

  /// Dense coordinate array of length dim^arity.
  static TensorElement from_dense(std::size_t dim, std::size_t arity, std::span<const Scalar> coords) {
    TensorElement t(dim, arity);
    if (coords.size() != t.size_) throw Error(ErrorCode::ShapeMismatch, "dense coordinate length");
    for (Flat i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero()) t.terms_.emplace_back(i, coords[i]);
    return t;
  }

  static TensorElement basis(std::size_t dim, std::size_t i) {
    TensorElement t(dim, 1);
    t.terms_.emplace_back(i, Scalar(1));
    return t;
  }

  /// Takes ownership of unsorted terms; duplicates are summed and zeros dropped.
  static TensorElement from_terms(std::size_t dim, std::size_t arity, std::vector<Term> terms) {
    TensorElement t(dim, arity);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& term : terms) {
      if (!t.terms_.empty() && t.terms_.back().first == term.first) {
        t.terms_.back().second += term.second;
      } else {
        t.terms_.push_back(std::move(term));
      }
    }
    std::erase_if(t.terms_, [](const Term& x) { return x.second.is_zero(); });
    return t;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t arity() const noexcept { return arity_; }
  Flat size() const noexcept { return size_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t nnz() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const std::vector<Variance>& variance() const noexcept { return variance_; }
  TensorElement& set_variance(std::vector<Variance> v) {
    if (v.size() != arity_) throw Error(ErrorCode::ShapeMismatch, "variance list length");
    variance_ = std::move(v);
    return *this;
  }

  Flat flatten(std::span<const std::size_t> idx) const {
    if (idx.size() != arity_) throw Error(ErrorCode::ShapeMismatch, "multi-index length");
    Flat f = 0;
    for (auto i : idx) f = f * dim_ + i;
    return f;
  }

  std::vector<std::size_t> unflatten(Flat f) const {
    std::vector<std::size_t> idx(arity_);
    for (std::size_t s = arity_; s-- > 0;) {
      idx[s] = static_cast<std::size_t>(f % dim_);
      f /= dim_;
    }
    return idx;
  }

  Scalar coeff(Flat f) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), f,
                               [](const Term& t, Flat key) { return t.first < key; });
    if (it != terms_.end() && it->first == f) return it->second;
    return Scalar();
  }

  Scalar coeff(std::initializer_list<std::size_t> idx) const {
    std::vector<std::size_t> v(idx);
    return coeff(flatten(v));
  }

  Vector dense() const {
    Vector out(size_);
    for (const auto& [f, c] : terms_) out[f] = c;
    return out;
  }

  TensorElement scaled(const Scalar& s) const {
    TensorElement out = *this;
    if (s.is_zero()) {
      out.terms_.clear();
      return out;
    }
    for (auto& t : out.terms_) t.second *= s;
    return out;
  }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
    a.require_same_shape(b);
    std::vector<Term> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return from_terms(a.dim_, a.arity_, std::move(all)).set_variance(a.variance_);
  }

  friend TensorElement operator-(const TensorElement& a, const TensorElement& b) {
    return a + b.scaled(Scalar(-1));
  }

  /// First flat index where two same-shaped tensors differ, if any.
  friend std::optional<Flat> first_difference(const TensorElement& a, const TensorElement& b) {
    a.require_same_shape(b);
    const TensorElement d = a - b;
    if (d.is_zero()) return std::nullopt;
    return d.terms_.front().first;
  }

 private:
  void require_same_shape(const TensorElement& o) const {
    if (dim_ != o.dim_ || arity_ != o.arity_) throw Error(ErrorCode::ShapeMismatch, "tensor shapes differ");
  }

  std::size_t dim_ = 0;
  std::size_t arity_ = 0;
  std::vector<Variance> variance_;
  Flat size_ = 1;
  std::vector<Term> terms_;
};

/// Accumulates coordinate contributions and emits a canonical TensorElement.
class TensorBuilder {
 public:
  TensorBuilder(std::size_t dim, std::size_t arity) : dim_(dim), arity_(arity) {}

  void add(Flat f, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(f, c);
    if (!inserted) it->second += c;
  }

  TensorElement build() && {
    std::vector<TensorElement::Term> terms;
    terms.reserve(acc_.size());
    for (auto& [f, c] : acc_)
      if (!c.is_zero()) terms.emplace_back(f, std::move(c));
    return TensorElement::from_terms(dim_, arity_, std::move(terms));
  }

 private:
  std::size_t dim_;
  std::size_t arity_;
  std::unordered_map<Flat, Scalar> acc_;
};

/// a \otimes b: arities add, coordinates form the outer product.
inline TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "tensor_product dimensions differ");
  TensorElement out(a.dim(), a.arity() + b.arity());
  const Flat shift = b.size();
  std::vector<TensorElement::Term> terms;
  terms.reserve(a.nnz() * b.nnz());
  for (const auto& [fa, ca] : a.terms())
    for (const auto& [fb, cb] : b.terms()) terms.emplace_back(fa * shift + fb, ca * cb);
  std::vector<Variance> var = a.variance();
  var.insert(var.end(), b.variance().begin(), b.variance().end());
  return TensorElement::from_terms(a.dim(), a.arity() + b.arity(), std::move(terms)).set_variance(std::move(var));
}

/// Reorders slots: output slot s holds input slot perm[s].
inline TensorElement permute_slots(const TensorElement& t, std::span<const std::size_t> perm) {
  if (perm.size() != t.arity()) throw Error(ErrorCode::ShapeMismatch, "permutation length");
  TensorBuilder b(t.dim(), t.arity());
  std::vector<std::size_t> out(t.arity());
  for (const auto& [f, c] : t.terms()) {
    auto idx = t.unflatten(f);
    for (std::size_t s = 0; s < perm.size(); ++s) out[s] = idx[perm[s]];
    b.add(t.flatten(out), c);
  }
  return std::move(b).build();
}

inline TensorElement permute_slots(const TensorElement& t, std::initializer_list<std::size_t> perm) {
  std::vector<std::size_t> p(perm);
  return permute_slots(t, p);
}

}  // namespace qhopf
