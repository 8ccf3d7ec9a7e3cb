#include <gtest/gtest.h>

#include "qhopf/gallery.hpp"
#include "qhopf/integrals.hpp"

using namespace qhopf;

namespace {

std::vector<std::pair<std::string, AlgebraPresentation>> gallery() {
  return {{"kZ2", group_algebra(cyclic_group(2))},
          {"kZ3", group_algebra(cyclic_group(3))},
          {"kS3", group_algebra(symmetric_group3())},
          {"H4", sweedler_h4()},
          {"dual_omega_Z2_1", dual_group_algebra_twisted(cocycle_cyclic(2, 1))},
          {"dual_omega_Z3_1", dual_group_algebra_twisted(cocycle_cyclic(3, 1))}};
}

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(Integrals, GroupAlgebraSumOfElements) {
  for (const auto& g : {cyclic_group(3), symmetric_group3()}) {
    QuasiHopfAlgebra H(group_algebra(g));
    const auto s = solve_integrals(H);
    EXPECT_EQ(s.left, Vector(g.order, Scalar(1)));
    EXPECT_EQ(s.right, Vector(g.order, Scalar(1)));
    EXPECT_TRUE(s.mu_is_counit);
    EXPECT_EQ(H.structure().counit_of(s.left), Scalar(static_cast<long>(g.order)));
  }
}

TEST(Integrals, SweedlerIsNotUnimodular) {
  QuasiHopfAlgebra H(sweedler_h4());
  const auto s = solve_integrals(H);
  // basis {1, g, x, gx}: left x + gx, right x - gx, mu(g) = -1
  EXPECT_EQ(s.left, vec({0, 0, 1, 1}));
  EXPECT_EQ(s.right, vec({0, 0, 1, -1}));
  EXPECT_EQ(s.mu, vec({1, -1, 0, 0}));
  EXPECT_FALSE(s.mu_is_counit);
  EXPECT_TRUE(H.structure().counit_of(s.left).is_zero());
}

TEST(Integrals, DefiningEquationsAndMuIsAlgebraMap) {
  for (const auto& [name, p] : gallery()) {
    QuasiHopfAlgebra H(p);
    const Structure& h = H.structure();
    const std::size_t n = h.dim();
    const auto s = solve_integrals(H);
    EXPECT_EQ(pair(s.mu, h.unit_vector()), Scalar(1)) << name;
    for (std::size_t i = 0; i < n; ++i) {
      const Vector e = basis_vector(n, i);
      Vector el = s.left, er = s.right, mt = s.left;
      for (auto& c : el) c *= h.counit(i);
      for (auto& c : er) c *= h.counit(i);
      for (auto& c : mt) c *= s.mu[i];
      EXPECT_EQ(h.multiply(e, s.left), el) << name;
      EXPECT_EQ(h.multiply(s.right, e), er) << name;
      EXPECT_EQ(h.multiply(s.left, e), mt) << name;
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(pair(s.mu, h.multiply(e, basis_vector(n, j))), s.mu[i] * s.mu[j]) << name;
    }
    // S maps int_l onto int_r
    const Vector st = h.apply(Map::S, s.left);
    const std::size_t k = detail::first_nonzero(s.right);
    for (std::size_t c = 0; c < n; ++c) EXPECT_EQ(st[c], st[k] * s.right[c]) << name;
  }
}

TEST(Integrals, DegenerateKernelIsReported) {
  try {
    detail::unique_kernel(Matrix(4, 2), ErrorCode::IntegralDimensionAnomaly, "test");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IntegralDimensionAnomaly);
  }
}

TEST(Cointegral, GroupAlgebraIsUnitCoefficient) {
  for (const auto& g : {cyclic_group(2), symmetric_group3()}) {
    QuasiHopfAlgebra H(group_algebra(g));
    const auto d = compute_integrals(H);
    EXPECT_EQ(d.lambda, basis_vector(g.order, g.identity));
    EXPECT_TRUE(d.lambda_S_inv_alpha_beta.is_one());
  }
}

TEST(Cointegral, HopfReductionOracle) {
  // With trivial reassociator the equation reads lambda(h_2) h_1 = lambda(h) 1.
  QuasiHopfAlgebra H(sweedler_h4());
  const Structure& h = H.structure();
  const auto d = compute_integrals(H);
  for (std::uint32_t i = 0; i < h.dim(); ++i) {
    Vector lhs(h.dim());
    for (const auto& t : h.coproduct(i)) lhs[t.left] += t.coeff * d.lambda[t.right];
    Vector rhs = h.unit_vector();
    for (auto& c : rhs) c *= d.lambda[i];
    EXPECT_EQ(lhs, rhs);
  }
  // Sweedler is not cosemisimple
  EXPECT_TRUE(d.lambda_S_inv_alpha_beta.is_zero());
}

TEST(Cointegral, ZeroMuHasNoSolution) {
  // mu(1) = 0 forces lambda(h_2) h_1 to vanish, hence lambda = 0
  QuasiHopfAlgebra H(dual_group_algebra_twisted(cocycle_cyclic(2, 1)));
  try {
    solve_cointegral(H, compute_pack(H), Vector(H.dim()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CointegralDimensionAnomaly);
  }
}

TEST(Cointegral, AntipodeIdentityAndRightIntegralCoproduct) {
  for (const auto& [name, p] : gallery()) {
    QuasiHopfAlgebra H(p);
    const auto d = compute_integrals(H);
    const auto c = check_lambda_antipode(H, d.lambda, d.spaces.mu);
    EXPECT_TRUE(c.pass) << name << ": " << c.witness;
    const auto rep = check_right_integral_coproduct(H, d.pack, d.r);
    EXPECT_TRUE(rep.all_pass()) << name << ": " << rep.failures();
  }
}

TEST(Cointegral, NormalizedPair) {
  QuasiHopfAlgebra H(group_algebra(cyclic_group(2)));
  const auto d = compute_integrals(H);
  EXPECT_EQ(d.r, vec({1, 1}));
  for (const auto& [name, p] : gallery()) {
    QuasiHopfAlgebra A(p);
    const Structure& h = A.structure();
    const auto dd = compute_integrals(A);
    EXPECT_TRUE(pair(dd.lambda, h.apply(Map::S, dd.r)).is_one()) << name;
    // lambda(h S(r)) = eps(h)
    const Vector sr = h.apply(Map::S, dd.r);
    for (std::size_t i = 0; i < h.dim(); ++i)
      EXPECT_EQ(pair(dd.lambda, h.multiply(basis_vector(h.dim(), i), sr)), h.counit(i)) << name;
  }
  EXPECT_THROW(normalize_pair(H, Vector(2), d.r), Error);
}

TEST(Projections, LandInLeftIntegralsAndFixThem) {
  for (const auto& [name, p] : gallery()) {
    QuasiHopfAlgebra H(p);
    const auto pack = compute_pack(H);
    const auto t = solve_integrals(H).left;
    const auto a = projection_suite(H, projection_P(H, pack), t, "P");
    const auto b = projection_suite(H, projection_P_tilde(H, pack), t, "P_tilde");
    EXPECT_TRUE(a.all_pass()) << name << ": " << a.failures();
    EXPECT_TRUE(b.all_pass()) << name << ": " << b.failures();
  }
}

TEST(Projections, GroupAlgebraAndIdempotence) {
  QuasiHopfAlgebra G(group_algebra(symmetric_group3()));
  const Matrix P = projection_P(G, compute_pack(G));
  const Vector p1 = P.column(0);
  for (const auto& c : p1) EXPECT_EQ(c, p1[0]);
  EXPECT_FALSE(p1[0].is_zero());

  QuasiHopfAlgebra H(sweedler_h4());
  const Matrix Q = projection_P(H, compute_pack(H));
  EXPECT_EQ(Q * Q, Q);
}

TEST(TraceFormula, SeededRandomEndomorphisms) {
  for (const auto& [name, p] : gallery()) {
    QuasiHopfAlgebra H(p);
    const auto d = compute_integrals(H);
    const TraceFormula tf(H, d.pack, d.lambda, d.r, d.spaces.mu);
    EXPECT_TRUE(tf.holds_identically()) << name;
    std::mt19937_64 rng(0);
    for (int k = 0; k < 20; ++k) {
      const Matrix chi = random_endomorphism(H.dim(), rng);
      EXPECT_EQ(tf.evaluate(chi), trace(chi)) << name << " trial " << k;
    }
    EXPECT_TRUE(tf.evaluate(Matrix(H.dim(), H.dim())).is_zero());
  }
}

TEST(TraceFormula, IdentityOnKZ2AndUnnormalizedPair) {
  QuasiHopfAlgebra H(group_algebra(cyclic_group(2)));
  const auto d = compute_integrals(H);
  EXPECT_EQ(trace_formula(H, d.pack, d.lambda, d.r, d.spaces.mu, Matrix::identity(2)), Scalar(2));
  Vector r2 = d.r;
  for (auto& c : r2) c *= Scalar(2);
  try {
    TraceFormula(H, d.pack, d.lambda, r2, d.spaces.mu);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
  }
}

TEST(TraceFormula, SquaredAntipodeTrace) {
  for (const auto& [name, p] : gallery()) {
    QuasiHopfAlgebra H(p);
    const auto d = compute_integrals(H);
    const Scalar expected = H.structure().counit_of(d.r) * d.lambda_S_inv_alpha_beta;
    const Matrix chi = trace_test_map(H);
    EXPECT_EQ(trace(chi), expected) << name;
    EXPECT_EQ(trace_formula(H, d.pack, d.lambda, d.r, d.spaces.mu, chi), expected) << name;
  }
}

TEST(Semisimplicity, CounitOfIntegralMatchesTraceForm) {
  for (const auto& [name, p] : gallery()) {
    QuasiHopfAlgebra H(p);
    const auto d = compute_integrals(H);
    EXPECT_EQ(!H.structure().counit_of(d.r).is_zero(), is_semisimple(H)) << name;
  }
  EXPECT_FALSE(is_semisimple(QuasiHopfAlgebra(sweedler_h4())));
  EXPECT_TRUE(is_semisimple(QuasiHopfAlgebra(group_algebra(symmetric_group3()))));
}

TEST(Rank, OppositeMuIsMuComposedWithAntipode) {
  for (const auto& [name, p] : gallery()) {
    QuasiHopfAlgebra H(p);
    QuasiHopfAlgebra Hop(op_cop(H, Opposite::Op));
    const auto mu = solve_integrals(H).mu;
    EXPECT_EQ(solve_integrals(Hop).mu, dual_map(H.structure(), Map::S, mu)) << name;
  }
}

TEST(Rank, ThreeWayEquality) {
  const std::vector<std::pair<std::string, long>> expected = {
      {"kZ2", 2}, {"kZ3", 3}, {"kS3", 6}, {"H4", 0}, {"dual_omega_Z2_1", 2}, {"dual_omega_Z3_1", 3}};
  const auto g = gallery();
  for (std::size_t i = 0; i < g.size(); ++i) {
    QuantumDouble D(QuasiHopfAlgebra{g[i].second});
    const auto rep = rank_via_integrals(D);
    EXPECT_TRUE(rep.three_way_equal) << g[i].first;
    EXPECT_EQ(rep.rank_scalar, Scalar(expected[i].second)) << g[i].first;
    EXPECT_TRUE(pair(rep.lambda_op, rep.r).is_one());
  }
}

TEST(Rank, ConjectureProbeHopfCase) {
  QuantumDouble D(QuasiHopfAlgebra{group_algebra(cyclic_group(2))});
  EXPECT_TRUE(conjecture_probe(D, compute_integrals(D.base())));
}

TEST(Rank, IntegralsOfTheDouble) {
  QuantumDouble D(QuasiHopfAlgebra{dual_group_algebra_twisted(cocycle_cyclic(2, 1))});
  const auto s = solve_integrals(D.algebra());
  EXPECT_FALSE(D.algebra().structure().counit_of(s.left).is_zero());
  EXPECT_TRUE(is_semisimple(D.algebra()));
}
