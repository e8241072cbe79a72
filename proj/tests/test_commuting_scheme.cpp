#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "commvar/commuting.hpp"
#include "commvar/errors.hpp"
#include "commvar/sampling.hpp"

using namespace commvar;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("generators of the commuting ideal") {
  const auto l = LieAlgebra::build_simple(Series::A, 1);
  const auto I = commuting_ideal(l);
  REQUIRE(I.generators.size() == 3);
  for (const auto& g : I.generators) CHECK(g.is_bihomogeneous(1, 1));
  RationalSampler s(1);
  for (int t = 0; t < 10; ++t) {
    const auto [x, y] = sample_commuting_pair(l, s, 7);
    CHECK(is_zero(l.bracket(x, y)));
    QVector pt = x;
    pt.insert(pt.end(), y.begin(), y.end());
    for (const auto& g : I.generators) CHECK(g.evaluate(pt) == 0);
  }
  QVector ef = l.basis_vector(0);
  const auto f = l.basis_vector(2);
  ef.insert(ef.end(), f.begin(), f.end());
  bool some_nonzero = false;
  for (const auto& g : I.generators) some_nonzero = some_nonzero || g.evaluate(ef) != 0;
  CHECK(some_nonzero);
}

TEST_CASE("sl2 commuting scheme is a 2x3 determinantal variety") {
  // [x, y] = 0 in sl2 means x and y are proportional: Hilbert series (1 + 2t) / (1 - t)^4
  const auto l = LieAlgebra::build_simple(Series::A, 1);
  const auto gb = groebner(commuting_ideal(l));
  CHECK(verify_groebner(gb));
  CHECK(krull_dimension(gb) == 4);
  for (unsigned d = 0; d <= 6; ++d) {
    const std::size_t expected = binom(d + 3, 3) + 2 * binom(d + 2, 3);
    CHECK(hilbert_function(gb, d) == expected);
    CHECK(ideal_dimension(gb, d) + expected == monomial_count(6, d));
  }
  CHECK(ideal_bidegree_dimension(gb, 1, 1) == 3);
  CHECK(ideal_bidegree_dimension(gb, 2, 0) == 0);
}

TEST_CASE("commuting scheme of sl3") {
  const auto l = LieAlgebra::build_simple(Series::A, 2);
  const auto gb = groebner(commuting_ideal(l));
  CHECK(verify_groebner(gb));
  CHECK(krull_dimension(gb) == 2 * l.borel_dim());
  CHECK(ideal_dimension(gb, 2) == 8);
}

TEST_CASE("groebner basics") {
  const Ring R = Ring::single(3);
  const auto x = MPoly::var(R, 0), y = MPoly::var(R, 1), z = MPoly::var(R, 2);
  const auto one = MPoly::constant(R, 1);
  const auto gb = groebner(make_ideal(R, {x * y - z * z, x * x - y * z}));
  CHECK(verify_groebner(gb));
  for (const auto& e : gb.elements) CHECK(e.coefficient(gb.leading_monomial(e)) == 1);
  CHECK(in_ideal(gb, (x + z) * (x * y - z * z) + y.pow(2) * (x * x - y * z)));
  CHECK_FALSE(in_ideal(gb, x));
  CHECK(normal_form(gb, x * y) == z * z);
  const auto unit = groebner(make_ideal(R, {x, one - x}));
  REQUIRE(unit.elements.size() == 1);
  CHECK(unit.elements[0] == one);
  CHECK(krull_dimension(unit) == 0);
  CHECK(make_ideal(R, {x, x * Rat(3), MPoly(R)}).generators.size() == 1);
}

TEST_CASE("groebner guards") {
  const Ring big = Ring::single(17);
  CHECK_THROWS_AS(groebner(make_ideal(big, {MPoly::var(big, 0)})), CapabilityError);
  const Ring R = Ring::single(2);
  CHECK_THROWS_AS(groebner(make_ideal(R, {MPoly::var(R, 0).pow(5)})), CapabilityError);
}

TEST_CASE("groebner stats and order independence") {
  const auto l = LieAlgebra::build_simple(Series::A, 2);
  auto I = commuting_ideal(l);
  GroebnerStats st;
  const auto gb = groebner_with_stats(I, st);
  CHECK(st.pairs_considered >= st.pairs_skipped_coprime + st.reductions_to_zero);
  std::reverse(I.generators.begin(), I.generators.end());
  const auto gb2 = groebner(I);
  CHECK(gb2.elements == gb.elements);
}

TEST_CASE("vanishing ideal agrees with I_g in low degree") {
  const auto l = LieAlgebra::build_simple(Series::A, 1);
  const auto gb = groebner(commuting_ideal(l));
  const auto rows = vanishing_ideal_low_degree(l, gb, 3, 120, 5);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(r.vanishing_dim == r.ideal_dim);
    CHECK(r.monomials == monomial_count(6, r.degree));
    CHECK(r.stable);
  }
  CHECK(rows[2].ideal_dim == 3);
  CHECK(radicality_evidence(l, 2, 120, 5).status == Status::Pass);
}

TEST_CASE("nilpotent cone and bicone") {
  const auto l = LieAlgebra::build_simple(Series::A, 2);
  const auto fam = invariant_generators(l);
  const auto e = l.principal_e(), f = l.principal_f(), h = l.principal_h();
  CHECK(nilpotent_test(l, fam, e));
  CHECK(nilpotent_test(l, fam, f));
  CHECK_FALSE(nilpotent_test(l, fam, h));
  CHECK(bicone_test(l, fam, e, l.basis_vector(0)));
  CHECK_FALSE(bicone_test(l, fam, e, f));
}
