#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hg/error.hpp"
#include "hg/serialize.hpp"

using namespace hg;

TEST_CASE("rational parsing accepts three shapes") {
  CHECK(rat_from_json(Json(7)) == Rat(7));
  CHECK(rat_from_json(Json("3/4")) == Rat(3, 4));
  CHECK(rat_from_json(Json::array({3, 4})) == Rat(3, 4));
  CHECK(rat_from_json(Json("-12")) == Rat(-12));
  CHECK_THROWS_AS(rat_from_json(Json("x")), Error);
}

TEST_CASE("matrix set round trip") {
  auto qi = NumberField::create({Int(1), Int(0), Int(1)});
  MatrixSet F;
  F.field = qi;
  F.d = 2;
  F.sl = true;
  KMatrix m = KMatrix::identity(qi, 2);
  m.at(0, 1) = FieldElement::generator(qi);
  F.mats.push_back(m);
  Json j = matrix_set_to_json(F);
  MatrixSet G = matrix_set_from_json(j);
  CHECK(G.d == 2);
  CHECK(G.field->degree() == 2);
  CHECK(G.mats.size() == 1);
  CHECK(G.mats[0] == F.mats[0]);
  CHECK(G.sl == F.sl);
}

TEST_CASE("element parsing is fixed by the field degree") {
  auto qi = NumberField::create({Int(1), Int(0), Int(1)});
  // scalars are rationals, arrays are coefficient vectors of full length
  CHECK(element_from_json(qi, Json(5)) == FieldElement::from_rational(qi, 5));
  FieldElement x = element_from_json(qi, Json::array({"1/2", "3"}));
  CHECK(x == FieldElement(qi, {Rat(1, 2), Rat(3)}));
  CHECK_THROWS_AS(element_from_json(qi, Json::array({1, 2, 3})), Error);  // wrong length
  CHECK_THROWS_AS(element_from_json(qi, Json::array({1})), Error);
}

TEST_CASE("file loader rejects malformed input") {
  const char* path = "hg_test_bad.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_matrix_set(path), Error);
  std::remove(path);
  CHECK_THROWS_AS(load_matrix_set("hg_no_such_file.json"), Error);
}

TEST_CASE("file loader accepts a rational matrix set") {
  const char* path = "hg_test_ok.json";
  {
    std::ofstream out(path);
    out << R"({"field":{"min_poly":["0","1"]},"d":2,
               "mats":[[["1","2"],["0","1"]],[["1","0"],["2","1"]]]})";
  }
  MatrixSet F = load_matrix_set(path);
  std::remove(path);
  CHECK(F.d == 2);
  CHECK(F.field->is_rationals());
  REQUIRE(F.mats.size() == 2);
  CHECK(F.mats[0].at(0, 1) == FieldElement::from_rational(F.field, 2));
}
