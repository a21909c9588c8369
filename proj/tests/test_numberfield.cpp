#include <doctest.h>

#include <cmath>

#include "hg/error.hpp"
#include "hg/numberfield.hpp"

using namespace hg;

namespace {
FieldPtr rationals() { return NumberField::create({Int(0), Int(1)}); }
FieldPtr gauss() { return NumberField::create({Int(1), Int(0), Int(1)}); }
FieldPtr golden() { return NumberField::create({Int(-1), Int(-1), Int(1)}); }
}  // namespace

TEST_CASE("field creation and discriminants") {
  CHECK(golden()->discriminant() == 5);
  CHECK(gauss()->discriminant() == -4);
  CHECK(rationals()->is_rationals());
  CHECK_THROWS_AS(NumberField::create({Int(-1), Int(0), Int(1)}), Error);  // reducible
  CHECK_THROWS_AS(NumberField::create({Int(1), Int(2)}), Error);           // not monic
}

TEST_CASE("archimedean places") {
  auto g = golden();
  REQUIRE(g->arch_places().size() == 2);
  for (auto& v : g->arch_places()) CHECK(v.is_real);
  auto qi = gauss();
  REQUIRE(qi->arch_places().size() == 1);
  CHECK(qi->arch_places()[0].n_v == 2);
  CHECK(!qi->arch_places()[0].is_real);
}

TEST_CASE("finite places of the Gaussian field") {
  auto qi = gauss();
  auto at5 = qi->finite_places(Int(5));
  REQUIRE(at5.size() == 2);
  CHECK(at5[0].local_degree == 1);
  CHECK(at5[1].local_degree == 1);
  auto at2 = qi->finite_places(Int(2));
  REQUIRE(at2.size() == 1);
  CHECK(at2[0].local_degree == 2);
  CHECK(at2[0].ramification_index == 2);
  auto at3 = qi->finite_places(Int(3));
  REQUIRE(at3.size() == 1);
  CHECK(at3[0].residue_degree == 2);
  // places above p always account for the full degree
  Int total = 0;
  for (auto& v : qi->finite_places(Int(13))) total += v.local_degree;
  CHECK(total == 2);
}

TEST_CASE("gaussian arithmetic") {
  auto qi = gauss();
  FieldElement i = FieldElement::generator(qi);
  FieldElement one = FieldElement::from_rational(qi, 1);
  FieldElement a(qi, {Rat(1), Rat(1)});   // 1+i
  FieldElement b(qi, {Rat(1), Rat(-1)});  // 1-i
  CHECK(a * b == FieldElement::from_rational(qi, 2));
  CHECK(a * a.inverse() == one);
  CHECK(a.inverse() == FieldElement(qi, {Rat(1, 2), Rat(-1, 2)}));
  CHECK(a.norm() == 2);
  CHECK((i * i) == -one);
}

TEST_CASE("exact valuations in the Gaussian field") {
  auto qi = gauss();
  FieldElement x(qi, {Rat(2), Rat(1)});  // 2+i, norm 5
  auto at5 = qi->finite_places(Int(5));
  Rat v0 = exact_valuation(x, at5[0]), v1 = exact_valuation(x, at5[1]);
  CHECK(v0 + v1 == 1);
  CHECK(v0 * v1 == 0);  // one place sees the factor, the other does not
  FieldElement y(qi, {Rat(1), Rat(1)});  // 1+i
  CHECK(exact_valuation(y, qi->finite_places(Int(2))[0]) == Rat(1, 2));
  CHECK(std::fabs(abs_value(y, qi->finite_places(Int(2))[0]) - std::pow(2.0, -0.5)) < 1e-12);
}

TEST_CASE("heights of named elements") {
  auto Q = rationals();
  CHECK(std::fabs(height(FieldElement::from_rational(Q, 2)) - std::log(2.0)) < 1e-12);
  CHECK(std::fabs(height(FieldElement::from_rational(Q, Rat(3, 2))) - std::log(3.0)) < 1e-12);
  double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::fabs(height(FieldElement::generator(golden())) - 0.5 * std::log(phi)) < 1e-10);
  CHECK(height(FieldElement::generator(gauss())) == 0.0);
}

TEST_CASE("height agrees with the Mahler oracle") {
  auto g = golden();
  FieldElement x(g, {Rat(3), Rat(2)});
  CHECK(std::fabs(height(x) - mahler_height_oracle(x.minimal_polynomial())) < 1e-10);
}

TEST_CASE("product formula") {
  auto Q = rationals();
  CHECK(product_formula_residual(FieldElement::from_rational(Q, Rat(-84, 55))) == 0.0);
  auto qi = gauss();
  CHECK(std::fabs(product_formula_residual(FieldElement(qi, {Rat(2), Rat(1)}))) < 1e-12);
}

TEST_CASE("roots of unity") {
  auto qi = gauss();
  auto ord = root_of_unity_order(FieldElement::generator(qi));
  REQUIRE(ord.has_value());
  CHECK(*ord == 4);
  CHECK(!root_of_unity_order(FieldElement::from_rational(qi, 2)).has_value());
}

TEST_CASE("minimal polynomial of a field element") {
  FieldElement x = FieldElement::generator(golden());
  CHECK(x.minimal_polynomial() == ZPoly{-1, -1, 1});
  FieldElement two = FieldElement::from_rational(golden(), 2);
  CHECK(two.minimal_polynomial() == ZPoly{-2, 1});
}

TEST_CASE("precision retry on deep valuations") {
  auto Q = rationals();
  // 2^-100 needs far more than the default p-adic working precision
  Rat tiny(Int(1), Int(1) << 100);
  FieldElement x = FieldElement::from_rational(Q, tiny);
  CHECK(exact_valuation(x, Q->finite_places(Int(2))[0]) == -100);
}
