#include <gtest/gtest.h>

#include "qhopf/gallery.hpp"
#include "qhopf/representations.hpp"

using namespace qhopf;

namespace {

std::vector<std::pair<std::string, AlgebraPresentation>> small_gallery() {
  return {{"kZ2", group_algebra(cyclic_group(2))},
          {"kZ3", group_algebra(cyclic_group(3))},
          {"H4", sweedler_h4()},
          {"dual_omega_Z2_1", dual_group_algebra_twisted(cocycle_cyclic(2, 1))},
          {"dual_omega_Z3_1", dual_group_algebra_twisted(cocycle_cyclic(3, 1))}};
}

}  // namespace

TEST(Modules, RegularAndTrivial) {
  QuasiHopfAlgebra H(sweedler_h4());
  EXPECT_TRUE(regular_module(H).check().all_pass());
  EXPECT_TRUE(trivial_module(H).check().all_pass());
  std::vector<Matrix> bad(4, Matrix::identity(2));
  EXPECT_THROW(make_module(H, bad, "bad"), Error);
}

TEST(Modules, ZigZagIdentities) {
  for (const auto& [name, p] : small_gallery()) {
    QuasiHopfAlgebra H(p);
    for (const auto& V : {regular_module(H), trivial_module(H)}) {
      const auto dd = dual_ev_coev(V);
      EXPECT_TRUE(dd.zigzag.all_pass()) << name << " " << V.label << ": " << dd.zigzag.failures();
    }
  }
  // trivial module: ev o coev = eps(alpha) eps(beta) = 1
  QuasiHopfAlgebra H(dual_group_algebra_twisted(cocycle_cyclic(2, 1)));
  const auto dd = dual_ev_coev(trivial_module(H));
  EXPECT_TRUE((dd.ev * dd.coev)(0, 0).is_one());
}

TEST(UElements, HopfGroupAlgebraWithTrivialR) {
  QuasiHopfAlgebra H(group_algebra(symmetric_group3()));
  const auto ue = compute_u_eta(H, unit_tensor(H.structure(), 2));
  EXPECT_EQ(ue.u, H.unit());
  EXPECT_EQ(ue.eta, H.unit());
  EXPECT_TRUE(ue.checks.all_pass()) << ue.checks.failures();
}

TEST(UElements, NotQuasitriangularIsRejected) {
  QuasiHopfAlgebra H(sweedler_h4());
  EXPECT_THROW(compute_u_eta(H, unit_tensor(H.structure(), 2)), Error);
}

TEST(UElements, DoubleMatchesClosedForm) {
  for (const auto& [name, p] : small_gallery()) {
    QuantumDouble D(QuasiHopfAlgebra{p});
    const auto ue = compute_u_eta(D);
    EXPECT_TRUE(ue.checks.all_pass()) << name << ": " << ue.checks.failures();
    const auto [u, eta] = double_u_eta_closed_form(D);
    EXPECT_EQ(ue.u, u) << name;
    EXPECT_EQ(ue.eta, eta) << name;
  }
}

TEST(QuantumDimension, TwoPathsAgree) {
  for (const auto& [name, p] : small_gallery()) {
    QuantumDouble D(QuasiHopfAlgebra{p});
    const auto V = schrodinger_action(D);
    const auto q = quantum_dimension(V, D.R());
    EXPECT_TRUE(q.equal()) << name << ": " << q.trace_eta.to_string() << " vs " << q.categorical.to_string();
    const auto t = quantum_dimension(trivial_module(D.algebra()), D.R());
    EXPECT_TRUE(t.trace_eta.is_one()) << name;
    EXPECT_TRUE(t.equal()) << name;
  }
}

TEST(Schrodinger, ThreeFormsAgree) {
  for (const auto& [name, p] : small_gallery()) {
    QuasiHopfAlgebra H(p);
    const auto d = compute_pack(H);
    const auto a = schrodinger_tensor(H, d);
    EXPECT_EQ(a, schrodinger_tensor_direct(H, d)) << name;
    EXPECT_EQ(a, schrodinger_tensor_via_coaction(H, d)) << name;
  }
}

TEST(Schrodinger, HopfRestrictionIsAdjointAction) {
  QuantumDouble D(QuasiHopfAlgebra{sweedler_h4()});
  const auto V = schrodinger_action(D);
  const Structure& h = D.base().structure();
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t c = 0; c < 4; ++c) {
      Vector expect(4);
      for (const auto& t : h.coproduct(static_cast<std::uint32_t>(b))) {
        const Vector r = h.multiply({basis_vector(4, t.left), basis_vector(4, c), h.apply(Map::S, basis_vector(4, t.right))});
        for (std::size_t k = 0; k < 4; ++k) expect[k] += t.coeff * r[k];
      }
      EXPECT_EQ(V.of(D.embed(basis_vector(4, b))) * basis_vector(4, c), expect);
    }
  EXPECT_EQ(V.of(D.algebra().unit()), Matrix::identity(4));
}

TEST(Schrodinger, ModuleAlgebraLaw) {
  for (auto p : {group_algebra(cyclic_group(2)), dual_group_algebra_twisted(cocycle_cyclic(2, 1)), sweedler_h4(),
                 dual_group_algebra_twisted(cocycle_cyclic(3, 1))}) {
    QuantumDouble D(QuasiHopfAlgebra{p});
    const auto rep = module_algebra_suite(D, schrodinger_action(D));
    EXPECT_TRUE(rep.all_pass()) << rep.failures();
  }
}

TEST(QuantumDimension, ThreeWayEquality) {
  const std::vector<std::pair<AlgebraPresentation, long>> cases = {{group_algebra(cyclic_group(2)), 2},
                                                                   {sweedler_h4(), 0},
                                                                   {dual_group_algebra_twisted(cocycle_cyclic(2, 1)), 2},
                                                                   {dual_group_algebra_twisted(cocycle_cyclic(3, 1)), 3}};
  for (const auto& [p, expect] : cases) {
    QuantumDouble D(QuasiHopfAlgebra{p});
    const auto ue = compute_u_eta(D);
    const auto V = schrodinger_action(D);
    const Scalar c = qdim_closed_form(D.base());
    EXPECT_EQ(c, Scalar(expect));
    EXPECT_EQ(qdim_schrodinger(D, V, ue), c);
    EXPECT_EQ(qdim_double_regular(D, ue), c);
  }
}
