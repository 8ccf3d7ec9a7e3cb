#pragma once

// Axiom verification, the validated algebra type, op/cop and normalization.

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "qhopf/contraction.hpp"
#include "qhopf/error.hpp"
#include "qhopf/report.hpp"
#include "qhopf/structure.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

/// Sum_h e_h (x) Delta-expansions of e_h; slot 0 carries the basis label.
inline TensorElement label_plain(const Structure& h) { return identity_tensor(h.dim()); }
inline TensorElement label_delta(const Structure& h) { return coproduct_at(h, identity_tensor(h.dim()), 1); }
/// label, h_(1,1), h_(1,2), h_2
inline TensorElement label_delta_left(const Structure& h) { return coproduct_at(h, label_delta(h), 1); }
/// label, h_1, h_(2,1), h_(2,2)
inline TensorElement label_delta_right(const Structure& h) { return coproduct_at(h, label_delta(h), 2); }

namespace detail {

struct Validation {
  Structure structure;
  std::optional<TensorElement> phi_inv;
  SuiteReport report;
};

inline std::string triple_witness(std::size_t i, std::size_t j, std::size_t k) {
  return "basis (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

inline Validation run_validation(const AlgebraPresentation& p) {
  Validation v{Structure(p), std::nullopt, {}};
  const Structure& h = v.structure;
  SuiteReport& rep = v.report;
  const std::size_t n = h.dim();
  const TensorElement one = element_tensor(h.unit_vector());
  const TensorElement alpha = element_tensor(p.alpha);
  const TensorElement beta = element_tensor(p.beta);
  const TensorElement eps = element_tensor(p.counit);

  // Algebra axioms, directly on the tables.
  {
    std::string witness;
    Accumulator acc(n);
    for (std::uint32_t i = 0; i < n && witness.empty(); ++i)
      for (std::uint32_t j = 0; j < n && witness.empty(); ++j)
        for (std::uint32_t k = 0; k < n && witness.empty(); ++k) {
          for (const auto& [a, ca] : h.product(i, j))
            for (const auto& [b, cb] : h.product(a, k)) acc.add(b, ca * cb);
          SparseVec left = acc.take();
          for (const auto& [a, ca] : h.product(j, k))
            for (const auto& [b, cb] : h.product(i, a)) acc.add(b, ca * cb);
          if (left != acc.take()) witness = triple_witness(i, j, k);
        }
    rep.add("associativity", witness.empty(), witness);
  }
  {
    Contraction c(h);
    const auto l = c.add(label_plain(h));
    const auto u = c.add(one);
    const auto left = c.evaluate({{{l, 0}}, {{u, 0}, {l, 1}}});
    Contraction d(h);
    const auto l2 = d.add(label_plain(h));
    const auto u2 = d.add(one);
    const auto right = d.evaluate({{{l2, 0}}, {{l2, 1}, {u2, 0}}});
    rep.add("unit", compare("", left, label_plain(h)).pass && compare("", right, label_plain(h)).pass,
            compare("unit", left, label_plain(h)).witness + compare("unit", right, label_plain(h)).witness);
  }
  // Delta and epsilon are algebra maps.
  {
    Contraction c(h);
    const auto a = c.add(label_delta(h));
    const auto b = c.add(label_delta(h));
    const auto lhs = c.evaluate({{{a, 0}}, {{b, 0}}, {{a, 1}, {b, 1}}, {{a, 2}, {b, 2}}});
    Contraction d(h);
    const auto a2 = d.add(label_plain(h));
    const auto b2 = d.add(label_plain(h));
    const auto prod = d.evaluate({{{a2, 0}}, {{b2, 0}}, {{a2, 1}, {b2, 1}}});
    check(rep, "comult_multiplicative", lhs, coproduct_at(h, prod, 2));
    check(rep, "comult_unital", coproduct_at(h, one, 0), tensor_product(one, one));
    const auto eps_prod = counit_at(h, prod, 2);
    check(rep, "counit_multiplicative", eps_prod, tensor_product(eps, eps));
    rep.add("counit_unital", h.counit_of(h.unit_vector()).is_one(), "eps(1) = " + h.counit_of(h.unit_vector()).to_string());
  }
  // Phi invertibility.
  {
    if (p.phi_inv) {
      v.phi_inv = *p.phi_inv;
      const bool ok = multiply(h, p.phi, *p.phi_inv) == unit_tensor(h, 3) &&
                      multiply(h, *p.phi_inv, p.phi) == unit_tensor(h, 3);
      rep.add("phi_invertible", ok, "supplied inverse does not invert phi");
      if (!ok) v.phi_inv.reset();
    } else {
      v.phi_inv = try_inverse(h, p.phi);
      rep.add("phi_invertible", v.phi_inv.has_value(), "phi has no inverse");
    }
  }
  const bool have_inv = v.phi_inv.has_value();
  // (q1)
  if (have_inv) {
    const auto lhs = coproduct_at(h, label_delta(h), 2);
    Contraction c(h);
    const auto X = c.add(p.phi);
    const auto l = c.add(label_delta_left(h));
    const auto x = c.add(*v.phi_inv);
    const auto rhs = c.evaluate({{{l, 0}}, {{X, 0}, {l, 1}, {x, 0}}, {{X, 1}, {l, 2}, {x, 1}}, {{X, 2}, {l, 3}, {x, 2}}});
    check(rep, "q1_quasi_coassociativity", lhs, rhs);
  } else {
    rep.add("q1_quasi_coassociativity", false, "phi not invertible");
  }
  // (q2)
  {
    check(rep, "q2_right_counit", counit_at(h, label_delta(h), 2), label_plain(h));
    check(rep, "q2_left_counit", counit_at(h, label_delta(h), 1), label_plain(h));
  }
  // (q3)
  {
    Contraction c(h);
    const auto a = c.add(p.phi);
    const auto b = c.add(coproduct_at(h, p.phi, 1));
    const auto d = c.add(p.phi);
    const auto lhs = c.evaluate({{{b, 0}, {d, 0}}, {{a, 0}, {b, 1}, {d, 1}}, {{a, 1}, {b, 2}, {d, 2}}, {{a, 2}, {b, 3}}});
    Contraction e(h);
    const auto r1 = e.add(coproduct_at(h, p.phi, 2));
    const auto r2 = e.add(coproduct_at(h, p.phi, 0));
    const auto rhs = e.evaluate({{{r1, 0}, {r2, 0}}, {{r1, 1}, {r2, 1}}, {{r1, 2}, {r2, 2}}, {{r1, 3}, {r2, 3}}});
    check(rep, "q3_pentagon", lhs, rhs);
  }
  // (q4), (q7)
  {
    const auto one2 = unit_tensor(h, 2);
    check(rep, "q4_middle_counit", counit_at(h, p.phi, 1), one2);
    check(rep, "q7_left_counit", counit_at(h, p.phi, 0), one2);
    check(rep, "q7_right_counit", counit_at(h, p.phi, 2), one2);
  }
  // (q5)
  {
    Contraction c(h);
    const auto l = c.add(label_delta(h));
    const auto a = c.add(alpha);
    const auto lhs = c.evaluate({{{l, 0}}, {{l, 1, Map::S}, {a, 0}, {l, 2}}});
    check(rep, "q5_alpha", lhs, tensor_product(eps, alpha));
    Contraction d(h);
    const auto l2 = d.add(label_delta(h));
    const auto b = d.add(beta);
    const auto lhs2 = d.evaluate({{{l2, 0}}, {{l2, 1}, {b, 0}, {l2, 2, Map::S}}});
    check(rep, "q5_beta", lhs2, tensor_product(eps, beta));
  }
  // (q6)
  {
    Contraction c(h);
    const auto X = c.add(p.phi);
    const auto b = c.add(beta);
    const auto a = c.add(alpha);
    const auto lhs = c.evaluate({{{X, 0}, {b, 0}, {X, 1, Map::S}, {a, 0}, {X, 2}}});
    check(rep, "q6_phi", lhs, one);
    if (have_inv) {
      Contraction d(h);
      const auto x = d.add(*v.phi_inv);
      const auto a2 = d.add(alpha);
      const auto b2 = d.add(beta);
      const auto lhs2 = d.evaluate({{{x, 0, Map::S}, {a2, 0}, {x, 1}, {b2, 0}, {x, 2, Map::S}}});
      check(rep, "q6_phi_inverse", lhs2, one);
    } else {
      rep.add("q6_phi_inverse", false, "phi not invertible");
    }
  }
  // Antipode properties.
  {
    std::string witness;
    for (std::uint32_t i = 0; i < n && witness.empty(); ++i) {
      Scalar s;
      for (const auto& [k, c] : h.image(Map::S, i)) s += c * h.counit(k);
      if (s != h.counit(i)) witness = "basis " + std::to_string(i);
    }
    rep.add("counit_antipode", witness.empty(), witness);
    const Scalar ea = h.counit_of(p.alpha), eb = h.counit_of(p.beta);
    rep.add("eps_alpha_eps_beta", (ea * eb).is_one(),
            "eps(alpha) eps(beta) = " + (ea * eb).to_string());
    rep.add("antipode_invertible", h.antipode_invertible(), "antipode matrix is singular");
    Contraction c(h);
    const auto i = c.add(label_plain(h));
    const auto j = c.add(label_plain(h));
    const auto lhs = c.evaluate({{{i, 0}}, {{j, 0}}, {{j, 1, Map::S}, {i, 1, Map::S}}});
    Contraction d(h);
    const auto i2 = d.add(label_plain(h));
    const auto j2 = d.add(label_plain(h));
    const auto rhs = d.evaluate({{{i2, 0}}, {{j2, 0}}, Word{{i2, 1}, {j2, 1}}.then(Map::S)});
    check(rep, "antipode_antimultiplicative", lhs, rhs);
  }
  return v;
}

}  // namespace detail

inline SuiteReport validate_presentation(const AlgebraPresentation& p) { return detail::run_validation(p).report; }

/// A presentation that has passed every axiom check. Derived computations
/// only accept this type.
class QuasiHopfAlgebra {
 public:
  explicit QuasiHopfAlgebra(AlgebraPresentation p) {
    auto v = detail::run_validation(p);
    if (!v.report.all_pass()) {
      throw Error(ErrorCode::InvalidPresentation, "axioms fail: " + v.report.failures());
    }
    auto d = std::make_shared<Data>();
    d->structure = std::move(v.structure);
    p.phi_inv = std::move(*v.phi_inv);
    d->pres = std::move(p);
    d->report = std::move(v.report);
    data_ = std::move(d);
  }

  const AlgebraPresentation& presentation() const noexcept { return data_->pres; }
  const Structure& structure() const noexcept { return data_->structure; }
  const SuiteReport& validation() const noexcept { return data_->report; }
  std::size_t dim() const noexcept { return data_->pres.dim; }
  unsigned field_order() const noexcept { return data_->pres.field_order; }
  const TensorElement& phi() const noexcept { return data_->pres.phi; }
  const TensorElement& phi_inv() const noexcept { return *data_->pres.phi_inv; }
  const Vector& alpha() const noexcept { return data_->pres.alpha; }
  const Vector& beta() const noexcept { return data_->pres.beta; }
  const Vector& counit() const noexcept { return data_->pres.counit; }
  Vector unit() const { return data_->structure.unit_vector(); }

  operator const Structure&() const noexcept { return data_->structure; }  // NOLINT

 private:
  struct Data {
    AlgebraPresentation pres;
    Structure structure;
    SuiteReport report;
  };
  std::shared_ptr<const Data> data_;
};

enum class Opposite { Op, Cop };

/// H^op or H^cop with the reassociator, antipode, alpha and beta replaced.
inline AlgebraPresentation op_cop(const QuasiHopfAlgebra& H, Opposite which) {
  const auto& p = H.presentation();
  const Structure& h = H.structure();
  AlgebraPresentation out = p;
  if (which == Opposite::Op) {
    out.mult = permute_slots(p.mult, {1, 0, 2});
    out.phi = H.phi_inv();
    out.phi_inv = H.phi();
    out.alpha = h.apply(Map::Sinv, p.beta);
    out.beta = h.apply(Map::Sinv, p.alpha);
  } else {
    out.comult = permute_slots(p.comult, {0, 2, 1});
    out.phi = permute_slots(H.phi_inv(), {2, 1, 0});
    out.phi_inv = permute_slots(H.phi(), {2, 1, 0});
    out.alpha = h.apply(Map::Sinv, p.alpha);
    out.beta = h.apply(Map::Sinv, p.beta);
  }
  out.antipode = h.map_matrix(Map::Sinv).transpose();
  return out;
}

struct Normalized {
  AlgebraPresentation presentation;
  Scalar alpha_scale;  // alpha was divided by this
  Scalar beta_scale;
};

/// Rescales alpha and beta so that eps(alpha) = eps(beta) = 1.
inline Normalized normalize(AlgebraPresentation p) {
  Structure h(p);
  const Scalar ea = h.counit_of(p.alpha), eb = h.counit_of(p.beta);
  if (ea.is_zero() || eb.is_zero()) throw Error(ErrorCode::NormalizationImpossible, "eps(alpha) eps(beta) = 0");
  const Scalar ia = ea.inverse(), ib = eb.inverse();
  for (auto& c : p.alpha) c *= ia;
  for (auto& c : p.beta) c *= ib;
  return {std::move(p), ea, eb};
}

inline bool is_normalized(const QuasiHopfAlgebra& H) {
  return H.structure().counit_of(H.alpha()).is_one() && H.structure().counit_of(H.beta()).is_one();
}

}  // namespace qhopf
