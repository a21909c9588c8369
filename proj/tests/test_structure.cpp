#include <doctest.h>

#include "hg/structure.hpp"

using namespace hg;

namespace {

FieldPtr rationals() { return NumberField::create({Int(0), Int(1)}); }

KMatrix mat2(const FieldPtr& K, long a, long b, long c, long d) {
  return KMatrix::from_rational_entries(K, {{Rat(a), Rat(b)}, {Rat(c), Rat(d)}});
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

TEST_CASE("burnside span dimensions") {
  auto Q = rationals();
  MatrixSet ts = set_of(Q, {mat2(Q, 1, 1, 0, 1), mat2(Q, 0, -1, 1, 0)});
  CHECK(burnside_span(ts).dimension == 4);
  MatrixSet t = set_of(Q, {mat2(Q, 1, 1, 0, 1)});
  CHECK(burnside_span(t).dimension == 2);
}

TEST_CASE("quasi-unipotence certification") {
  auto Q = rationals();
  MatrixSet hyp = set_of(Q, {mat2(Q, 2, 1, 1, 1)});
  QuasiUnipotentResult r = is_quasi_unipotent(hyp, 1);
  CHECK(r.certified_no);
  REQUIRE(!r.witness.empty());
  MatrixSet par = set_of(Q, {mat2(Q, 1, 1, 0, 1), mat2(Q, 0, -1, 1, 0)});
  // every word of length <= 2 in <T, S> is quasi-unipotent; TTST has trace 3
  CHECK(!is_quasi_unipotent(par, 2).certified_no);
  CHECK(is_quasi_unipotent(par, 4).certified_no);
}

TEST_CASE("regularity predicates") {
  auto Q = rationals();
  RegularityReport h = regularity_predicates(mat2(Q, 2, 1, 1, 1), 2);
  CHECK(h.regular_semisimple);
  CHECK(h.a1_regular);
  RegularityReport u = regularity_predicates(mat2(Q, 1, 1, 0, 1), 2);
  CHECK(!u.regular_semisimple);
  RegularityReport s = regularity_predicates(mat2(Q, 0, -1, 1, 0), 2);
  CHECK(s.regular_semisimple);
  CHECK(!s.a1_regular);  // eigenvalue ratio -1 is a root of unity of order 2
}

TEST_CASE("finite index generators for the level-2 subgroup") {
  auto Q = rationals();
  MatrixSet F = set_of(Q, {mat2(Q, 1, 1, 0, 1), mat2(Q, 0, -1, 1, 0)});
  auto in_gamma2 = [](const KMatrix& g) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Rat e = g.at(i, j).rational_value() - (i == j ? 1 : 0);
        if (e.get_den() != 1) return false;
        if (e.get_num() % 2 != 0) return false;
      }
    return true;
  };
  auto gens = finite_index_generators(F, in_gamma2, 6);
  CHECK(!gens.empty());
  // every returned word lands in the subgroup, and the cached product matches
  for (auto& w : gens) {
    KMatrix g = KMatrix::identity(Q, 2);
    for (int l : w.letters) g = g * (l >= 0 ? F.mats[l] : F.mats[-l - 1].inverse());
    CHECK(g == w.product);
    CHECK(in_gamma2(g));
  }
}

TEST_CASE("escape from commuting powers") {
  auto Q = rationals();
  MatrixSet F = set_of(Q, {mat2(Q, 1, 1, 0, 1), mat2(Q, 0, -1, 1, 0)});
  EscapeWitness w = escape_search(F, "commuting_powers", 2, 2);
  CHECK(w.predicate == "commuting_powers");
  CHECK(!w.first.letters.empty());
  KMatrix x2 = w.first.product * w.first.product;
  KMatrix y2 = w.second.product * w.second.product;
  CHECK(!(x2 * y2 == y2 * x2));
}

TEST_CASE("two element reduction") {
  auto Q = rationals();
  MatrixSet F = set_of(Q, {mat2(Q, 1, 1, 0, 1), mat2(Q, 0, -1, 1, 0)});
  TwoElementCertificate c = two_element_reduction(F, 2, 6);
  CHECK(c.span_dimension == 4);
  CHECK(c.escape_commuting_powers);
  CHECK(c.reg_a.regular_semisimple);
  CHECK(c.reg_a.a1_regular);
  CHECK(c.reg_b.a1_regular);
}

TEST_CASE("projective invariant sets in dimension two") {
  auto Q = rationals();
  MatrixSet t = set_of(Q, {mat2(Q, 1, 1, 0, 1)});
  ProjectiveInvariantSet fix = projective_invariant_set_d2(t, 4);
  CHECK(fix.found);
  CHECK(fix.size >= 1);
  MatrixSet pp = set_of(Q, {mat2(Q, 1, 2, 0, 1), mat2(Q, 1, 0, 2, 1)});
  CHECK(!projective_invariant_set_d2(pp, 4).found);
}
