#include <gtest/gtest.h>

#include "qhopf/io.hpp"

using namespace qhopf;

namespace {

const std::string data_dir = QHOPF_DATA_DIR;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::DivisionByZero;
}

}  // namespace

TEST(Io, PresentationRoundTrip) {
  for (const char* name : {"group:Z2", "group:S3", "sweedler", "dual-omega:Z2:1", "dual-omega:Z3:1"}) {
    const auto p = example_input(name).presentation;
    const Json j = presentation_json(p);
    const auto back = presentation_from_json(Json::parse(j.dump()));
    EXPECT_EQ(presentation_json(back), j) << name;
    EXPECT_EQ(back.mult, p.mult) << name;
    EXPECT_EQ(back.comult, p.comult) << name;
    EXPECT_EQ(back.phi, p.phi) << name;
    EXPECT_FALSE(back.phi_inv.has_value()) << name;
    EXPECT_TRUE(validate_presentation(back).all_pass()) << name;
  }
}

TEST(Io, DataFilesLoad) {
  for (const char* f : {"sweedler_h4.json", "dual_omega_z2.json", "dual_omega_z3.json", "group_s3.json"}) {
    const auto in = input_from_file(data_dir + "/" + f);
    EXPECT_FALSE(in.double_focus) << f;
    EXPECT_TRUE(validate_presentation(in.presentation).all_pass()) << f;
  }
  const auto dpr = input_from_file(data_dir + "/dpr_z2.json");
  EXPECT_TRUE(dpr.double_focus);
  EXPECT_EQ(dpr.presentation.dim, 2u);
}

TEST(Io, DoubleSerialization) {
  const QuantumDouble D = dpr_double(cocycle_cyclic(2, 1));
  const Json j = double_json(D);
  EXPECT_EQ(j["dim"], 4);
  EXPECT_EQ(j["r_matrix"].size(), 16u);  // n^4 for the base dimension n = 2
  const auto inner = presentation_from_json(j);
  EXPECT_TRUE(validate_presentation(inner).all_pass());
  // the serialized double and the one rebuilt from its source agree
  const QuantumDouble again(QuasiHopfAlgebra(presentation_from_json(j["source"])));
  EXPECT_EQ(double_json(again), j);
}

TEST(Io, CocycleDocument) {
  const auto in = input_from_file(data_dir + "/cocycle_z3.json");
  EXPECT_TRUE(in.double_focus);
  const auto ref = dual_group_algebra_twisted(cocycle_cyclic(3, 1));
  EXPECT_EQ(in.presentation.phi, ref.phi);
  EXPECT_EQ(in.presentation.beta, ref.beta);
}

TEST(Io, BrokenPentagonHasWitness) {
  const auto in = input_from_file(data_dir + "/broken_pentagon.json");
  const auto rep = validate_presentation(in.presentation);
  const auto* row = rep.find("q3_pentagon");
  ASSERT_NE(row, nullptr);
  EXPECT_FALSE(row->pass);
  EXPECT_FALSE(row->witness.empty());
}

TEST(Io, NormalizationOnIngestion) {
  Json j = presentation_json(sweedler_h4());
  j["alpha"][0] = "2";
  j["beta"][0] = "1/2";
  const auto in = input_from_json(j, "scaled");
  EXPECT_EQ(in.alpha_scale, Scalar(2));
  EXPECT_EQ(in.beta_scale, Scalar::rational(1, 2));
  EXPECT_EQ(in.presentation.alpha, sweedler_h4().alpha);
  EXPECT_TRUE(validate_presentation(in.presentation).all_pass());
}

TEST(Io, MalformedInputs) {
  EXPECT_EQ(code_of([] { example_input("group:Q8"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { example_input("dual-omega:Z2:2"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { example_input("dpr:S3:1"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { input_from_file("/nonexistent/file.json"); }), ErrorCode::ParseError);
  Json j = presentation_json(sweedler_h4());
  j.erase("mult");
  EXPECT_EQ(code_of([&] { presentation_from_json(j); }), ErrorCode::ParseError);
  j = presentation_json(sweedler_h4());
  j["unit"] = Json::array({"1", "0"});
  EXPECT_EQ(code_of([&] { presentation_from_json(j); }), ErrorCode::ParseError);
  j = presentation_json(sweedler_h4());
  j["beta"][1] = "z3";
  EXPECT_EQ(code_of([&] { presentation_from_json(j); }), ErrorCode::ParseError);
  j = presentation_json(sweedler_h4());
  j["alpha"][0] = 1.5;
  EXPECT_EQ(code_of([&] { presentation_from_json(j); }), ErrorCode::ParseError);
}
