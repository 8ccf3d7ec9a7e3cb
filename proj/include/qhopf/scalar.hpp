#pragma once

// Exact scalars: rationals and elements of cyclotomic fields Q(zeta_n).
//
// A Scalar carries its ambient order n (1 for plain rationals) and a
// coefficient vector of length phi(n) in the power basis 1, z, ..., z^{phi(n)-1}
// modulo the n-th cyclotomic polynomial. Rationals embed into every Q(zeta_n);
// two different cyclotomic orders never mix.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/error.hpp"

namespace qhopf {

namespace poly {

using Poly = std::vector<mpq_class>;  // low degree first

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

/// Euclidean division; divisor must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, mpq_class(0));
  const mpq_class& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    mpq_class factor = a.back() / lead;
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline const Poly& cyclotomic_locked(unsigned n, std::map<unsigned, Poly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 = prod_{d | n} Phi_d
  Poly p(n + 1, mpq_class(0));
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = divmod(p, cyclotomic_locked(d, cache)).first;
  }
  return cache.emplace(n, std::move(p)).first->second;
}

/// Cyclotomic polynomial Phi_n, computed once per order and cached.
inline const Poly& cyclotomic(unsigned n) {
  static std::mutex guard;
  static std::map<unsigned, Poly> cache;
  std::lock_guard<std::mutex> lock(guard);
  return cyclotomic_locked(n, cache);
}

}  // namespace poly

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

class Scalar {
 public:
  Scalar() : c_{mpq_class(0)} {}
  Scalar(long value) : c_{mpq_class(value)} {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : c_{mpq_class(value)} {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class value) : c_{std::move(value)} { c_[0].canonicalize(); }  // NOLINT

  static Scalar rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }

  /// Element of Q(zeta_order) from power-basis coefficients (length phi(order)).
  static Scalar cyclotomic(unsigned order, std::vector<mpq_class> coeffs) {
    if (order == 0) throw Error(ErrorCode::FieldMismatch, "cyclotomic order must be positive");
    const unsigned deg = euler_phi(order);
    if (coeffs.size() != deg) {
      throw Error(ErrorCode::ShapeMismatch, "cyclotomic coefficient vector must have length phi(n)");
    }
    Scalar s;
    if (order <= 2) {
      s.c_ = {coeffs[0]};
      return s;
    }
    s.order_ = order;
    s.c_ = std::move(coeffs);
    for (auto& c : s.c_) c.canonicalize();
    return s;
  }

  unsigned order() const noexcept { return order_; }
  bool is_cyclotomic() const noexcept { return order_ > 1; }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (c != 0) return false;
    return true;
  }

  bool is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  /// True when the value lies in Q, whatever the ambient order.
  bool is_rational_value() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  const mpq_class& rational_part() const { return c_[0]; }

  Scalar operator-() const {
    Scalar out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  Scalar& operator+=(const Scalar& o) {
    if (order_ == o.order_) {
      for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
      return *this;
    }
    promote_to(common_order(o));
    c_[0] += o.c_[0];
    for (std::size_t i = 1; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }

  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) {
    if (order_ == 1 && o.order_ == 1) {
      c_[0] *= o.c_[0];
      return *this;
    }
    if (o.order_ == 1) {
      for (auto& c : c_) c *= o.c_[0];
      return *this;
    }
    if (order_ == 1) {
      mpq_class k = c_[0];
      *this = o;
      for (auto& c : c_) c *= k;
      return *this;
    }
    common_order(o);
    poly::Poly prod = poly::mul(c_, o.c_);
    set_reduced(std::move(prod));
    return *this;
  }

  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (order_ == 1) return Scalar(mpq_class(1) / c_[0]);
    // Extended Euclid: find s with s*a = 1 mod Phi_n.
    const poly::Poly& modulus = poly::cyclotomic(order_);
    poly::Poly r0 = modulus, r1 = c_;
    poly::trim(r1);
    poly::Poly s0, s1{mpq_class(1)};
    while (!r1.empty()) {
      auto [q, r] = poly::divmod(r0, r1);
      poly::Poly s2 = poly::sub(s0, poly::mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant because Phi_n is irreducible.
    if (r0.size() != 1) throw Error(ErrorCode::DivisionByZero, "non-invertible cyclotomic residue");
    mpq_class scale = mpq_class(1) / r0[0];
    for (auto& c : s0) c *= scale;
    Scalar out;
    out.order_ = order_;
    out.set_reduced(std::move(s0));
    return out;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    if (a.order_ != 1 && b.order_ != 1) {
      throw Error(ErrorCode::FieldMismatch, "comparing different cyclotomic orders");
    }
    const Scalar& cyc = a.order_ == 1 ? b : a;
    const Scalar& rat = a.order_ == 1 ? a : b;
    return cyc.is_rational_value() && cyc.c_[0] == rat.c_[0];
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Human-readable rendering, e.g. "3/2" or "1 + 2*z3".
  std::string to_string() const {
    if (is_rational_value()) return c_[0].get_str();
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      std::string coeff = c_[i].get_str();
      if (i == 0) {
        out += coeff;
        continue;
      }
      std::string power = "z" + std::to_string(order_) + (i > 1 ? "^" + std::to_string(i) : "");
      if (c_[i] == 1) {
        out += power;
      } else {
        out += coeff + "*" + power;
      }
    }
    return out;
  }

 private:
  unsigned common_order(const Scalar& o) const {
    if (order_ == o.order_) return order_;
    if (order_ == 1) return o.order_;
    if (o.order_ == 1) return order_;
    throw Error(ErrorCode::FieldMismatch,
                "cyclotomic orders " + std::to_string(order_) + " and " + std::to_string(o.order_));
  }

  void promote_to(unsigned order) {
    if (order == order_) return;
    order_ = order;
    c_.resize(euler_phi(order), mpq_class(0));
  }

  void set_reduced(poly::Poly p) {
    const poly::Poly& modulus = poly::cyclotomic(order_);
    const std::size_t deg = modulus.size() - 1;
    // Phi_n is monic, so reduction is exact subtraction from the top.
    for (std::size_t top = p.size(); top-- > deg;) {
      if (p[top] == 0) continue;
      mpq_class factor = p[top];
      for (std::size_t i = 0; i <= deg; ++i) p[top - deg + i] -= factor * modulus[i];
    }
    p.resize(deg, mpq_class(0));
    c_ = std::move(p);
  }

  unsigned order_ = 1;
  std::vector<mpq_class> c_;
};

/// zeta_n^k; plain rationals for n in {1, 2}.
inline Scalar root_of_unity(unsigned n, long long k) {
  if (n == 0) throw Error(ErrorCode::FieldMismatch, "root_of_unity order must be positive");
  long long e = k % static_cast<long long>(n);
  if (e < 0) e += n;
  if (n == 1) return Scalar(1);
  if (n == 2) return Scalar(e == 0 ? 1 : -1);
  const unsigned deg = euler_phi(n);
  // x^e mod Phi_n via the reducing multiplication.
  std::vector<mpq_class> z(deg, mpq_class(0));
  z[0] = 1;
  Scalar acc = Scalar::cyclotomic(n, z);
  if (e == 0) return acc;
  std::vector<mpq_class> gen(deg, mpq_class(0));
  if (deg > 1) {
    gen[1] = 1;
  } else {
    // phi(n) == 1 only for n <= 2, handled above.
    gen[0] = 1;
  }
  Scalar zeta = Scalar::cyclotomic(n, gen);
  for (long long i = 0; i < e; ++i) acc *= zeta;
  return acc;
}

/// Inverse of Scalar::to_string: terms "c", "z<n>", "z<n>^k" or "c*z<n>^k"
/// joined by '+'. Throws ParseError.
inline Scalar parse_scalar(const std::string& text) {
  auto bad = [&]() { return Error(ErrorCode::ParseError, "malformed scalar \"" + text + "\""); };
  auto strip = [](std::string t) {
    const auto b = t.find_first_not_of(' ');
    if (b == std::string::npos) return std::string();
    return t.substr(b, t.find_last_not_of(' ') - b + 1);
  };
  auto rational = [&](const std::string& t) {
    if (t.empty() || t.find_first_not_of("-0123456789/") != std::string::npos) throw bad();
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw bad();
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return Scalar(q);
  };
  Scalar total;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = text.find('+', start);
    const std::string term = strip(text.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
    const std::size_t z = term.find('z');
    if (z == std::string::npos) {
      total += rational(term);
    } else {
      Scalar coeff(1);
      if (z > 0) {
        if (z < 2 || term[z - 1] != '*') throw bad();
        coeff = rational(term.substr(0, z - 1));
      }
      const std::string power = term.substr(z + 1);
      const std::size_t caret = power.find('^');
      const std::string ns = power.substr(0, caret);
      const std::string ks = caret == std::string::npos ? "1" : power.substr(caret + 1);
      if (ns.empty() || ks.empty() || ns.find_first_not_of("0123456789") != std::string::npos ||
          ks.find_first_not_of("0123456789") != std::string::npos || ns.size() > 6 || ks.size() > 6) {
        throw bad();
      }
      const unsigned n = static_cast<unsigned>(std::stoul(ns));
      if (n == 0) throw bad();
      total += coeff * root_of_unity(n, std::stoll(ks));
    }
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return total;
}

}  // namespace qhopf
