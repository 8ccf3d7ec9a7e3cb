#pragma once

// Raw presentation data and the sparse lookup tables every computation runs on.

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qhopf/error.hpp"
#include "qhopf/matrix.hpp"
#include "qhopf/scalar.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Linear maps that may decorate a Sweedler factor.
enum class Map : std::uint8_t { Id, S, Sinv, S2, Sinv2 };

/// A finite-dimensional quasi-Hopf algebra by structure constants.
///  mult(i,j,k):   e_i e_j = sum_k mult(i,j,k) e_k
///  comult(i,j,k): Delta(e_i) = sum comult(i,j,k) e_j (x) e_k
///  antipode(i,j): coefficient of e_j in S(e_i)
struct AlgebraPresentation {
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  unsigned field_order = 1;  // 1 means Q, otherwise Q(zeta_order)
  TensorElement mult;
  Vector unit;
  TensorElement comult;
  Vector counit;
  TensorElement phi;
  Matrix antipode;
  Vector alpha;
  Vector beta;
  // Known inverse of phi; when absent it is computed.
  std::optional<TensorElement> phi_inv;
};

inline SparseVec to_sparse(const Vector& v) {
  SparseVec out;
  for (std::uint32_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

inline Vector to_dense(const SparseVec& v, std::size_t n) {
  Vector out(n);
  for (const auto& [i, c] : v) out[i] += c;
  return out;
}

inline Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = Scalar(1);
  return v;
}

/// Dense scratch space for accumulating sparse linear combinations.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : vals_(n), used_(n, false) {}

  void add(std::uint32_t i, const Scalar& c) {
    if (!used_[i]) {
      used_[i] = true;
      touched_.push_back(i);
      vals_[i] = c;
    } else {
      vals_[i] += c;
    }
  }

  /// Emits the nonzero entries (ascending index) and resets.
  SparseVec take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    out.reserve(touched_.size());
    for (auto i : touched_) {
      if (!vals_[i].is_zero()) out.emplace_back(i, std::move(vals_[i]));
      vals_[i] = Scalar();
      used_[i] = false;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<Scalar> vals_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> touched_;
};

struct CoproductTerm {
  std::uint32_t left;
  std::uint32_t right;
  Scalar coeff;
};

/// Sparse algebra, coalgebra and antipode tables of a presentation.
class Structure {
 public:
  Structure() = default;

  explicit Structure(const AlgebraPresentation& p) : n_(p.dim) {
    check_shapes(p);
    products_.resize(n_ * n_);
    for (const auto& [f, c] : p.mult.terms()) {
      const auto k = static_cast<std::uint32_t>(f % n_);
      const auto ij = f / n_;
      products_[ij].emplace_back(k, c);
    }
    coproducts_.resize(n_);
    for (const auto& [f, c] : p.comult.terms()) {
      const auto idx = p.comult.unflatten(f);
      coproducts_[idx[0]].push_back({static_cast<std::uint32_t>(idx[1]), static_cast<std::uint32_t>(idx[2]), c});
    }
    unit_ = to_sparse(p.unit);
    counit_ = p.counit;
    maps_[static_cast<int>(Map::Id)].resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) maps_[0][i] = {{i, Scalar(1)}};
    Matrix s_cols = p.antipode.transpose();  // column i holds S(e_i)
    set_map(Map::S, s_cols);
    set_map(Map::S2, s_cols * s_cols);
    try {
      Matrix inv = inverse(s_cols);
      set_map(Map::Sinv, inv);
      set_map(Map::Sinv2, inv * inv);
      invertible_antipode_ = true;
    } catch (const Error&) {
      invertible_antipode_ = false;
    }
  }

  std::size_t dim() const noexcept { return n_; }
  bool antipode_invertible() const noexcept { return invertible_antipode_; }

  const SparseVec& product(std::uint32_t i, std::uint32_t j) const { return products_[i * n_ + j]; }
  const std::vector<CoproductTerm>& coproduct(std::uint32_t i) const { return coproducts_[i]; }
  const Scalar& counit(std::uint32_t i) const { return counit_[i]; }
  const Vector& counit_vector() const noexcept { return counit_; }
  const SparseVec& unit() const noexcept { return unit_; }

  const SparseVec& image(Map m, std::uint32_t i) const {
    if ((m == Map::Sinv || m == Map::Sinv2) && !invertible_antipode_) {
      throw Error(ErrorCode::NotInvertible, "antipode is not invertible");
    }
    return maps_[static_cast<int>(m)][i];
  }

  Vector unit_vector() const { return to_dense(unit_, n_); }

  Vector multiply(const Vector& a, const Vector& b) const {
    require_len(a);
    require_len(b);
    Vector out(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::uint32_t j = 0; j < n_; ++j) {
        if (b[j].is_zero()) continue;
        const Scalar c = a[i] * b[j];
        for (const auto& [k, m] : product(i, j)) out[k] += c * m;
      }
    }
    return out;
  }

  /// Product of several elements, left to right.
  Vector multiply(std::initializer_list<Vector> factors) const {
    Vector acc = unit_vector();
    for (const auto& f : factors) acc = multiply(acc, f);
    return acc;
  }

  Vector apply(Map m, const Vector& a) const {
    require_len(a);
    Vector out(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (a[i].is_zero()) continue;
      for (const auto& [k, c] : image(m, i)) out[k] += a[i] * c;
    }
    return out;
  }

  Scalar counit_of(const Vector& a) const {
    require_len(a);
    Scalar s;
    for (std::uint32_t i = 0; i < n_; ++i)
      if (!a[i].is_zero() && !counit_[i].is_zero()) s += a[i] * counit_[i];
    return s;
  }

  /// Matrix of left multiplication by a (column j = a e_j).
  Matrix left_mult_matrix(const Vector& a) const {
    Matrix m(n_, n_);
    for (std::uint32_t j = 0; j < n_; ++j) {
      Vector col = multiply(a, basis_vector(n_, j));
      for (std::uint32_t k = 0; k < n_; ++k) m(k, j) = col[k];
    }
    return m;
  }

  Matrix right_mult_matrix(const Vector& a) const {
    Matrix m(n_, n_);
    for (std::uint32_t j = 0; j < n_; ++j) {
      Vector col = multiply(basis_vector(n_, j), a);
      for (std::uint32_t k = 0; k < n_; ++k) m(k, j) = col[k];
    }
    return m;
  }

  Matrix map_matrix(Map m) const {
    Matrix out(n_, n_);
    for (std::uint32_t j = 0; j < n_; ++j)
      for (const auto& [k, c] : image(m, j)) out(k, j) = c;
    return out;
  }

 private:
  void require_len(const Vector& a) const {
    if (a.size() != n_) throw Error(ErrorCode::ShapeMismatch, "element length differs from algebra dimension");
  }

  void check_shapes(const AlgebraPresentation& p) const {
    const std::size_t n = p.dim;
    if (n == 0) throw Error(ErrorCode::ShapeMismatch, "dimension must be positive");
    auto need = [](bool ok, const char* what) {
      if (!ok) throw Error(ErrorCode::ShapeMismatch, what);
    };
    need(p.mult.dim() == n && p.mult.arity() == 3, "mult must be n x n x n");
    need(p.comult.dim() == n && p.comult.arity() == 3, "comult must be n x n x n");
    need(p.phi.dim() == n && p.phi.arity() == 3, "phi must be n x n x n");
    need(p.unit.size() == n, "unit length");
    need(p.counit.size() == n, "counit length");
    need(p.alpha.size() == n, "alpha length");
    need(p.beta.size() == n, "beta length");
    need(p.antipode.rows() == n && p.antipode.cols() == n, "antipode must be n x n");
    need(p.basis_labels.empty() || p.basis_labels.size() == n, "basis_labels length");
    if (p.phi_inv) need(p.phi_inv->dim() == n && p.phi_inv->arity() == 3, "phi_inv must be n x n x n");
  }

  void set_map(Map m, const Matrix& cols) {
    auto& table = maps_[static_cast<int>(m)];
    table.assign(n_, {});
    for (std::uint32_t j = 0; j < n_; ++j)
      for (std::uint32_t k = 0; k < n_; ++k)
        if (!cols(k, j).is_zero()) table[j].emplace_back(k, cols(k, j));
  }

  std::size_t n_ = 0;
  std::vector<SparseVec> products_;
  std::vector<std::vector<CoproductTerm>> coproducts_;
  SparseVec unit_;
  Vector counit_;
  std::vector<SparseVec> maps_[5];
  bool invertible_antipode_ = false;
};

}  // namespace qhopf
