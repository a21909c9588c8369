#include <doctest.h>

#include "hg/error.hpp"
#include "hg/poly.hpp"
#include "hg/polyfactor.hpp"

using namespace hg;

TEST_CASE("resultant of linear factors") {
  // res(a, b) = lc(a)^deg(b) * prod b(alpha_i)
  ZPoly a = {-2, 1}, b = {-3, 1};
  CHECK(resultant(a, b) == -1);
  CHECK(resultant(b, a) == 1);
}

TEST_CASE("resultant against discriminant of golden polynomial") {
  ZPoly f = {-1, -1, 1};
  CHECK(discriminant(f) == 5);
  ZPoly g = {1, 0, 1};
  CHECK(discriminant(g) == -4);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == ZPoly{-1, 1});
  CHECK(cyclotomic(2) == ZPoly{1, 1});
  CHECK(cyclotomic(4) == ZPoly{1, 0, 1});
  CHECK(cyclotomic(5) == ZPoly{1, 1, 1, 1, 1});
  CHECK(cyclotomic(12) == ZPoly{1, 0, -1, 0, 1});
}

TEST_CASE("rational factorization") {
  // x^4 - 1 = (x-1)(x+1)(x^2+1)
  auto fs = factor_over_z(ZPoly{-1, 0, 0, 0, 1});
  CHECK(fs.size() == 3);
  // x^2 - x - 1 irreducible
  CHECK(is_irreducible_over_q(ZPoly{-1, -1, 1}));
}

TEST_CASE("complex roots with certified radii") {
  auto roots = complex_roots(QPoly{Rat(-2), Rat(0), Rat(1)});
  REQUIRE(roots.size() == 2);
  double r = std::sqrt(2.0);
  for (auto& z : roots) {
    CHECK(std::abs(std::abs(z.value.real()) - r) < 1e-10);
    CHECK(z.radius < 1e-6);
  }
}

TEST_CASE("squarefree detection") {
  ZPoly sq = {1, 2, 1};  // (x+1)^2
  QPoly q = to_qpoly(sq);
  CHECK(degree(gcd(q, derivative(q))) == 1);
}
