#include <doctest.h>

#include <cmath>

#include "hg/heights.hpp"
#include "hg/kmatrix.hpp"

using namespace hg;

namespace {

FieldPtr rationals() { return NumberField::create({Int(0), Int(1)}); }

KMatrix mat2(const FieldPtr& K, Rat a, Rat b, Rat c, Rat d) {
  return KMatrix::from_rational_entries(K, {{a, b}, {c, d}});
}

MatrixSet set_of(const FieldPtr& K, std::vector<KMatrix> ms) {
  MatrixSet F;
  F.field = K;
  F.d = ms[0].dim();
  F.mats = std::move(ms);
  F.sl = true;
  return F;
}

}  // namespace

TEST_CASE("height of a diagonal set") {
  auto Q = rationals();
  MatrixSet F = set_of(Q, {mat2(Q, Rat(2), Rat(0), Rat(0), Rat(1, 2))});
  HeightReport h = set_height(F);
  // |.|_inf contributes log 2, |.|_2 contributes log 2
  CHECK(std::fabs(h.total.lower - 2 * std::log(2.0)) < 1e-12);
  CHECK(std::fabs(h.total.upper - 2 * std::log(2.0)) < 1e-12);
  CHECK(h.degree_normalizer == 1);
  bool saw_arch = false, saw_two = false;
  for (auto& row : h.rows) {
    if (row.place_id == "arch:0") {
      saw_arch = true;
      CHECK(std::fabs(row.lower - std::log(2.0)) < 1e-12);
    }
    if (row.place_id == "p:2:0") {
      saw_two = true;
      CHECK(row.exact);
      CHECK(std::fabs(row.lower - std::log(2.0)) < 1e-12);
    }
  }
  CHECK(saw_arch);
  CHECK(saw_two);
}

TEST_CASE("minimal height sees through conjugation") {
  auto Q = rationals();
  KMatrix c = mat2(Q, Rat(5), Rat(2), Rat(2), Rat(1));
  KMatrix u = c * mat2(Q, Rat(1), Rat(1), Rat(0), Rat(1)) * c.inverse();
  MatrixSet F = set_of(Q, {u});
  HeightReport e = minimal_height(F, 1e-7);
  CHECK(e.finite_part.lower == 0.0);  // an integral model exists
  CHECK(e.total.upper < 0.02);        // arch part shrinks toward 0 too
  CHECK(e.total.lower >= 0.0);
}

TEST_CASE("normalized height of the ping-pong pair") {
  auto Q = rationals();
  MatrixSet F = set_of(Q, {mat2(Q, Rat(1), Rat(2), Rat(0), Rat(1)),
                           mat2(Q, Rat(1), Rat(0), Rat(2), Rat(1))});
  LogBounds b = normalized_height_bounds(F, 12, 4096);
  double target = 0.5 * std::log(3 + 2 * std::sqrt(2.0));
  CHECK(b.lower >= target - 1e-9);
  CHECK(b.lower <= target + 1e-6);
  CHECK(b.upper >= b.lower);
}

TEST_CASE("normalized height vanishes exactly on unipotents") {
  auto Q = rationals();
  MatrixSet F = set_of(Q, {mat2(Q, Rat(1), Rat(1), Rat(0), Rat(1)),
                           mat2(Q, Rat(1), Rat(2), Rat(0), Rat(1))});
  LogBounds b = normalized_height_bounds(F, 8, 4096);
  CHECK(b.lower == 0.0);
  CHECK(b.upper < 0.2);
}

TEST_CASE("eigenvalue heights of a hyperbolic element") {
  auto Q = rationals();
  MatrixSet F = set_of(Q, {mat2(Q, Rat(2), Rat(1), Rat(1), Rat(1))});
  auto rows = eigenvalue_heights(F, 1);
  bool found = false;
  for (auto& r : rows) {
    if (r.min_poly == ZPoly{1, -3, 1}) {
      found = true;
      double phi = (1 + std::sqrt(5.0)) / 2;
      CHECK(std::fabs(r.height - std::log(phi)) < 1e-9);
    }
  }
  CHECK(found);
}

TEST_CASE("norm form over the Gaussian field") {
  auto qi = NumberField::create({Int(1), Int(0), Int(1)});
  FieldElement i = FieldElement::generator(qi);
  // c(x) = x - i has norm form x^2 + 1
  KPoly c = {FieldElement::from_rational(qi, 0) - i, FieldElement::from_rational(qi, 1)};
  QPoly nf = norm_form(qi, c);
  REQUIRE(nf.size() == 3);
  CHECK(nf[0] == 1);
  CHECK(nf[1] == 0);
  CHECK(nf[2] == 1);
}

TEST_CASE("truncated archimedean height") {
  auto Q = rationals();
  FieldElement three = FieldElement::from_rational(Q, 3);
  CHECK(std::fabs(truncated_arch_height(three, 2.0) - std::log(3.0)) < 1e-12);
  CHECK(truncated_arch_height(three, 4.0) == 0.0);
}
