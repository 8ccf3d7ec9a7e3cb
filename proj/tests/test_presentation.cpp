#include <gtest/gtest.h>

#include "qhopf/gallery.hpp"
#include "qhopf/presentation.hpp"

using namespace qhopf;

namespace {

std::vector<std::pair<std::string, AlgebraPresentation>> gallery() {
  return {{"kZ2", group_algebra(cyclic_group(2))},
          {"kZ3", group_algebra(cyclic_group(3))},
          {"kZ4", group_algebra(cyclic_group(4))},
          {"kS3", group_algebra(symmetric_group3())},
          {"H4", sweedler_h4()},
          {"dual_omega_Z2_1", dual_group_algebra_twisted(cocycle_cyclic(2, 1))},
          {"dual_omega_Z3_1", dual_group_algebra_twisted(cocycle_cyclic(3, 1))}};
}

}  // namespace

TEST(Presentation, GalleryValidates) {
  for (const auto& [name, p] : gallery()) {
    const auto rep = validate_presentation(p);
    EXPECT_TRUE(rep.all_pass()) << name << ": " << rep.failures();
    EXPECT_NO_THROW(QuasiHopfAlgebra{p}) << name;
  }
}

TEST(Presentation, ValidationHasEveryAxiomRow) {
  const auto rep = validate_presentation(sweedler_h4());
  for (const char* row : {"associativity", "unit", "comult_multiplicative", "counit_multiplicative", "q1_quasi_coassociativity",
                          "q2_left_counit", "q2_right_counit", "q3_pentagon", "q4_middle_counit", "q7_left_counit",
                          "q7_right_counit", "q5_alpha", "q5_beta", "q6_phi", "q6_phi_inverse", "counit_antipode",
                          "eps_alpha_eps_beta", "phi_invertible", "antipode_invertible", "antipode_antimultiplicative"}) {
    EXPECT_NE(rep.find(row), nullptr) << row;
  }
}

TEST(Presentation, BruteForceSweedlerAxioms) {
  // Independent oracle: Delta(ab) = Delta(a) Delta(b) and associativity over all basis triples,
  // computed with dense element arithmetic instead of the contraction engine.
  const auto p = sweedler_h4();
  Structure h(p);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b)
      for (std::uint32_t c = 0; c < 4; ++c) {
        const Vector ea = basis_vector(4, a), eb = basis_vector(4, b), ec = basis_vector(4, c);
        EXPECT_EQ(h.multiply(h.multiply(ea, eb), ec), h.multiply(ea, h.multiply(eb, ec)));
      }
  // S^2 is diagonal (1, 1, -1, -1).
  const Matrix s2 = h.map_matrix(Map::S2);
  EXPECT_EQ(s2(0, 0), Scalar(1));
  EXPECT_EQ(s2(1, 1), Scalar(1));
  EXPECT_EQ(s2(2, 2), Scalar(-1));
  EXPECT_EQ(s2(3, 3), Scalar(-1));
  EXPECT_TRUE(trace(s2).is_zero());
}

TEST(Presentation, CounitFaultInjection) {
  // Flipping omega^{-1}(g, e, g) breaks the middle counit axiom.
  auto dual = dual_group_algebra_twisted(cocycle_cyclic(2, 1));
  dual.phi_inv.reset();
  std::vector<TensorElement::Term> terms = dual.phi.terms();
  for (auto& [f, c] : terms)
    if (f == 5) c = -c;
  dual.phi = TensorElement::from_terms(2, 3, terms);
  const auto rep = validate_presentation(dual);
  EXPECT_FALSE(rep.passed("q4_middle_counit"));
  EXPECT_THROW(QuasiHopfAlgebra{dual}, Error);
}

TEST(Presentation, PentagonFailsForNonCocycle) {
  // Only the (g,g,g) value flipped: still normalized, so only the cocycle
  // condition (pentagon) can catch it. For Z2 the flipped pattern is the
  // nontrivial cocycle itself, so flip (g,g,g) on Z3 instead.
  auto w = cocycle_cyclic(3, 1);
  w.values[(1 * 3 + 1) * 3 + 1] = -w.values[(1 * 3 + 1) * 3 + 1];
  EXPECT_THROW(dual_group_algebra_twisted(w), Error);
  auto good = dual_group_algebra_twisted(cocycle_cyclic(3, 1));
  good.phi_inv.reset();
  std::vector<TensorElement::Term> terms = good.phi.terms();
  for (auto& [f, c] : terms)
    if (f == 13) c = -c;  // (1,1,1)
  good.phi = TensorElement::from_terms(3, 3, terms);
  const auto rep = validate_presentation(good);
  EXPECT_FALSE(rep.passed("q3_pentagon"));
  EXPECT_FALSE(rep.find("q3_pentagon")->witness.empty());
  EXPECT_TRUE(rep.passed("q4_middle_counit"));
}

TEST(Presentation, OpCop) {
  for (const auto& [name, p] : gallery()) {
    QuasiHopfAlgebra H(p);
    const auto op = op_cop(H, Opposite::Op);
    const auto cop = op_cop(H, Opposite::Cop);
    EXPECT_TRUE(validate_presentation(op).all_pass()) << name << " op: " << validate_presentation(op).failures();
    EXPECT_TRUE(validate_presentation(cop).all_pass()) << name << " cop: " << validate_presentation(cop).failures();
    QuasiHopfAlgebra Hop(op);
    const auto opop = op_cop(Hop, Opposite::Op);
    EXPECT_EQ(opop.mult, p.mult) << name;
    EXPECT_EQ(opop.phi, H.phi()) << name;
    EXPECT_EQ(opop.alpha, p.alpha) << name;
    EXPECT_EQ(opop.beta, p.beta) << name;
    EXPECT_EQ(opop.antipode, p.antipode) << name;
  }
  // Abelian group algebra: op is the same presentation.
  QuasiHopfAlgebra kz3(group_algebra(cyclic_group(3)));
  const auto op = op_cop(kz3, Opposite::Op);
  EXPECT_EQ(op.mult, kz3.presentation().mult);
  EXPECT_EQ(op.phi, kz3.phi());
  EXPECT_EQ(op.alpha, kz3.alpha());
}

TEST(Presentation, Normalizer) {
  auto p = sweedler_h4();
  for (auto& c : p.alpha) c *= Scalar(3);
  for (auto& c : p.beta) c *= Scalar::rational(1, 3);
  EXPECT_TRUE(validate_presentation(p).all_pass());
  const auto n = normalize(p);
  EXPECT_EQ(n.alpha_scale, Scalar(3));
  EXPECT_EQ(n.presentation.alpha, sweedler_h4().alpha);
  EXPECT_EQ(n.presentation.beta, sweedler_h4().beta);
}

TEST(Presentation, SingularAntipodeRejected) {
  auto p = sweedler_h4();
  p.antipode = Matrix(4, 4);
  const auto rep = validate_presentation(p);
  EXPECT_FALSE(rep.passed("antipode_invertible"));
}
