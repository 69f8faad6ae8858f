#include <gtest/gtest.h>

#include "invalg/io.hpp"
#include "support.hpp"

using namespace invalg;

namespace {

const std::string kData = INVALG_DATA_DIR;

void expect_input_error(const std::string& text, const std::string& fragment) {
  try {
    parse_algebra(text);
    FAIL() << "accepted: " << text;
  } catch (const InputError& e) {
    EXPECT_NE(std::string{e.what()}.find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(AlgebraFile, ShippedFilesLoad) {
  const auto m2 = read_algebra_file(kData + "/m2_q11.json");
  EXPECT_EQ(m2.algebra.dim(), 4u);
  EXPECT_EQ(invariant_subalgebra(m2.algebra, m2.q).dim(), 3u);

  const auto lt = read_algebra_file(kData + "/lower_tri_gf3.json");
  EXPECT_EQ(lt.algebra.field(), Field::prime(3));
  EXPECT_EQ(lt.algebra.table(), fixtures::lower_triangular(Field::prime(3)).table());

  const auto lt_q = read_algebra_file(kData + "/lower_tri_q.json");
  EXPECT_EQ(lt_q.algebra.table(), fixtures::lower_triangular(Field::rationals()).table());
}

TEST(AlgebraFile, FieldOverride) {
  const auto a = read_algebra_file(kData + "/lower_tri_q.json", Field::prime(5));
  EXPECT_EQ(a.algebra.field(), Field::prime(5));
}

TEST(AlgebraFile, RoundTripIsCanonical) {
  const auto a = read_algebra_file(kData + "/m2_q11.json");
  const std::string text = write_algebra(a.algebra, a.q);
  const auto b = parse_algebra(text);
  EXPECT_EQ(b.algebra.table(), a.algebra.table());
  EXPECT_EQ(b.algebra.unit(), a.algebra.unit());
  EXPECT_EQ(b.q, a.q);
  EXPECT_EQ(write_algebra(b.algebra, b.q), text);
}

TEST(AlgebraFile, RejectsFloats) {
  expect_input_error(R"({"field":"Q","dim":1,"unit":[1.0],"structure":[[0,0,0,"1"]],"q":["1"]})", "floating point");
  expect_input_error(R"({"field":"Q","dim":1,"unit":["0.5"],"structure":[[0,0,0,"1"]],"q":["1"]})", "floating point");
  expect_input_error(R"({"field":"Q","dim":1,"unit":["1e0"],"structure":[[0,0,0,"1"]],"q":["1"]})", "floating point");
}

TEST(AlgebraFile, ErrorsNameTheField) {
  expect_input_error("not json", "not valid JSON");
  expect_input_error(R"({"field":"Q","dim":1,"unit":["1"],"q":["1"]})", "missing field \"structure\"");
  expect_input_error(R"({"field":"Q","dim":1,"unit":["1"],"structure":[[0,0,3,"1"]],"q":["1"]})", "structure[0]");
  expect_input_error(R"({"field":"Q","dim":1,"unit":["1","0"],"structure":[[0,0,0,"1"]],"q":["1"]})", "unit");
  expect_input_error(R"({"field":"R","dim":1,"unit":["1"],"structure":[[0,0,0,"1"]],"q":["1"]})", "field");
  expect_input_error(R"({"field":"Q","dim":-1,"unit":[],"structure":[],"q":[]})", "dim");
  expect_input_error(R"({"field":"Fp:3","dim":1,"unit":["1/3"],"structure":[[0,0,0,"1"]],"q":["1"]})", "unit[0]");
  EXPECT_THROW(read_algebra_file(kData + "/does_not_exist.json"), InputError);
}

TEST(AlgebraFile, BadAlgebraIsAlgebraError) {
  EXPECT_THROW(parse_algebra(R"({"field":"Q","dim":1,"unit":["2"],"structure":[[0,0,0,"1"]],"q":["1"]})"),
               AlgebraError);
}

TEST(ModuleFile, ShippedFilesLoadAndRoundTrip) {
  for (const char* name : {"/reg.json", "/gf2_3irr.json"}) {
    const auto m = read_module_file(kData + name);
    EXPECT_TRUE(check_module_axioms(m).passed()) << name;
    const std::string text = write_module(m);
    EXPECT_EQ(parse_module(text), m) << name;
    EXPECT_EQ(write_module(parse_module(text)), text);
  }
  EXPECT_EQ(read_module_file(kData + "/gf2_3irr.json"), fixtures::gf2_three_irreducible());
  EXPECT_EQ(read_module_file(kData + "/reg.json"),
            regular_module(fixtures::lower_triangular_inv(Field::rationals()),
                           make_cvector(Field::rationals(), {1, 0, 0, 0, 0, 0, 0, 0})));
}

TEST(ModuleFile, Errors) {
  EXPECT_THROW(parse_module(R"({"field":"Q","dim":1,"star":[],"vdim":1,"action":[[0,0,1,"1"]],
                               "W":[],"qmat":[["1"]],"c":["1","0","0","0","0","0","0","0"]})"),
               InputError);
  EXPECT_THROW(parse_module(R"({"field":"Q","dim":1,"star":[],"vdim":1,"action":[],
                               "W":[],"qmat":[["1"]],"c":["1","0"]})"),
               InputError);
  EXPECT_THROW(parse_module(R"({"field":"Q","dim":1,"star":[],"vdim":2,"action":[],
                               "W":[["1","0"],["2","0"]],"qmat":[["0","0"],["0","0"]],"c":[1,0,0,0,0,0,0,0]})"),
               InputError);
}

TEST(MapFile, ParseAndWrite) {
  const Field Q = Field::rationals();
  const Matrix m = read_map_file(kData + "/reg_identity.json", Q, 3, 3);
  EXPECT_EQ(m, Matrix::identity(Q, 3));
  EXPECT_EQ(parse_map(write_map(m), Q, 3, 3), m);
  EXPECT_THROW(read_map_file(kData + "/reg_identity.json", Q, 2, 3), InputError);
  const auto s = parse_subspace(R"({"basis":[["1","1"],["2","2"]]})", Q, 2);
  EXPECT_EQ(s.dim(), 1u);
}
