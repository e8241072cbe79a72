#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "commvar/errors.hpp"
#include "commvar/koszul.hpp"
#include "commvar/sampling.hpp"

using namespace commvar;

namespace {

int brute_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int inversions = 0;
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < i; ++j)
      if ((a >> i & 1u) && (b >> j & 1u)) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Chain random_chain(RationalSampler& s, std::size_t nvars, std::size_t nwedge, unsigned max_deg) {
  Chain c;
  for (int t = 0; t < 6; ++t) {
    WedgeKey k;
    unsigned deg = static_cast<unsigned>(s.integer(0, max_deg));
    for (unsigned d = 0; d < deg; ++d) k.mono.bump(static_cast<std::size_t>(s.integer(0, nvars - 1)), 1);
    k.mask = static_cast<std::uint32_t>(s.integer(0, (1 << nwedge) - 1));
    add_to(c, k, s.nonzero_rational(5));
  }
  return c;
}

std::map<std::uint32_t, Rat> evaluate_chain(const Chain& c, Ring ring, const std::vector<Rat>& point) {
  std::map<std::uint32_t, Rat> out;
  for (const auto& [k, v] : c) out[k.mask] += MPoly::term(ring, k.mono, v).evaluate(point);
  return out;
}

}  // namespace

TEST_CASE("wedge signs match inversion counts") {
  for (std::uint32_t a = 0; a < 64; ++a)
    for (std::uint32_t b = 0; b < 64; ++b) CHECK(wedge_sign(a, b) == brute_sign(a, b));
  CHECK(wedge_sign(0b10, 0b01) == -1);
  CHECK(wedge_sign(0b01, 0b10) == 1);
}

TEST_CASE("supercommutative product") {
  RationalSampler s(4);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_chain(s, 3, 4, 2), b = random_chain(s, 3, 4, 2), c = random_chain(s, 3, 4, 2);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(wedge(a, b + c) == wedge(a, b) + wedge(a, c));
  }
  const auto u = vector_chain(std::vector<Rat>{1, 2, 3}), v = vector_chain(std::vector<Rat>{0, -1, 5});
  CHECK(wedge(u, v) == scaled(wedge(v, u), -1));
  CHECK(wedge(u, u).empty());
  CHECK(basis_wedge(0b11) == wedge(basis_wedge(0b01), basis_wedge(0b10)));
  CHECK(scaled(u, 0).empty());
}

TEST_CASE("differentials square to zero") {
  RationalSampler s(8);
  const Ring R = Ring::single(4);
  std::vector<MPoly> g;
  for (std::size_t i = 0; i < 4; ++i) g.push_back(MPoly::var(R, i) * MPoly::var(R, (i + 1) % 4));
  for (int t = 0; t < 20; ++t) {
    const auto a = random_chain(s, 4, 4, 3);
    CHECK(derham(derham(a, 0, 4), 0, 4).empty());
    CHECK(koszul_contract(koszul_contract(a, g), g).empty());
  }
  WedgeKey k;
  k.mono.bump(0, 2);
  Chain x2;
  add_to(x2, k, 1);
  WedgeKey dk;
  dk.mono.bump(0, 1);
  dk.mask = 1;
  CHECK(derham(x2, 0, 4) == Chain{{dk, Rat(2)}});
  CHECK(koszul_contract(basis_wedge(0b11), g) == multiply(g[0], basis_wedge(0b10)) + multiply(-g[1], basis_wedge(0b01)));
}

TEST_CASE("slice cohomology of a hand-built complex") {
  SliceComplex c;
  c.terms = {{0, {basis_wedge(1), basis_wedge(2)}}, {1, {basis_wedge(4), basis_wedge(8)}}};
  c.maps = {[](const Chain& a) {
              Chain out;
              for (const auto& [k, v] : a) add_to(out, WedgeKey{k.mono, 4u}, v);
              return out;
            },
            [](const Chain&) { return Chain{}; }};
  const auto r = slice_cohomology(c);
  CHECK(r.dims == std::vector<std::size_t>{2, 2});
  CHECK(r.ranks == std::vector<std::size_t>{1, 0});
  CHECK(r.cohomology == std::vector<std::size_t>{1, 1});
  CHECK(r.cohomology_at(1) == 1);
  CHECK(r.cohomology_at(7) == 0);
  CHECK(r.dd_zero);
  CHECK(r.closed);

  SliceComplex bad = c;
  bad.maps.pop_back();
  CHECK_THROWS_AS(slice_cohomology(bad), StructuralError);
}

TEST_CASE("de Rham complex of a polynomial ring") {
  for (std::size_t n = 1; n <= 4; ++n) {
    ComplexParams p;
    p.v_dim = n;
    const auto cx = build_complex(ComplexKind::D, p);
    for (const auto& sel : cx.slices_up_to(4)) {
      const auto r = slice_cohomology(cx.slice(sel));
      CHECK(r.dd_zero);
      std::size_t total = 0, total_dims = 0;
      for (auto h : r.cohomology) total += h;
      for (auto d : r.dims) total_dims += d;
      std::size_t expected_dims = 0;
      for (std::size_t j = 0; j <= std::min<std::size_t>(n, sel.p); ++j)
        expected_dims += binom(n, j) * monomial_count(n, sel.p - static_cast<unsigned>(j));
      CHECK(total_dims == expected_dims);
      CHECK(total == (sel.p == 0 ? 1u : 0u));
    }
  }
}

TEST_CASE("complex guards") {
  ComplexParams p;
  p.v_dim = 9;
  CHECK_THROWS_AS(build_complex(ComplexKind::D, p), CapabilityError);
  const auto a3 = LieAlgebra::build_simple(Series::A, 3);
  ComplexParams q;
  q.lie = &a3;
  CHECK_THROWS_AS(build_complex(ComplexKind::Cg, q), CapabilityError);
  ComplexParams none;
  CHECK_THROWS_AS(build_complex(ComplexKind::DkgB, none), ContractError);
  ComplexParams kk;
  kk.v_dim = 3;
  kk.k = 1;
  kk.L = {{1, 0, 0}};
  CHECK_THROWS_AS(build_complex(ComplexKind::KkVL, kk), ContractError);
  kk.L = {{1, 0, 0}, {2, 0, 0}};
  CHECK_THROWS_AS(build_complex(ComplexKind::DkVL, kk), ContractError);
  CHECK_THROWS_AS(pco2_property_check(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 1), ContractError);
}

TEST_CASE("characteristic wedge of sl2 is proportional to x ^ y") {
  const auto l = LieAlgebra::build_simple(Series::A, 1);
  const auto eps = characteristic_wedge(l);
  CHECK(characteristic_wedge(l) == eps);
  const Ring R = Ring::bigraded(3);
  RationalSampler s(12);
  for (int t = 0; t < 5; ++t) {
    const auto x = sample_rational(l, s, 5), y = sample_rational(l, s, 5);
    std::vector<Rat> pt = x;
    pt.insert(pt.end(), y.begin(), y.end());
    const auto e = evaluate_chain(*eps, R, pt);
    const auto xy = evaluate_chain(wedge(vector_chain(x), vector_chain(y)), R, pt);
    Rat ratio = 0;
    for (const auto& [mask, v] : xy) {
      CHECK(std::popcount(mask) == 2);
      if (v == 0) continue;
      if (ratio == 0) ratio = e.at(mask) / v;
      CHECK(e.at(mask) == ratio * v);
    }
    CHECK(ratio != 0);
  }
}

TEST_CASE("finite complexes") {
  for (const auto& d : lco1_checks(3, 2, 3)) CHECK(d.status == Status::Pass);
  CHECK(pco2_property_check(3, {{1, 0, 0}, {0, 1, 1}}, 1).status == Status::Pass);
  CHECK(pco2_property_check(3, {{1, 2, 0}, {0, 1, -1}}, 2).status == Status::Pass);
}

TEST_CASE("complexes of sl2") {
  const auto l = LieAlgebra::build_simple(Series::A, 1);
  CHECK(property_P_check(l, 1, 3).status == Status::Pass);
  CHECK(c_complex_checks(l, 3).status == Status::Pass);
  std::vector<std::string> problems;
  const auto slices = property_P_slices(l, 1, 2, true, &problems);
  CHECK(problems.empty());
  for (const auto& r : slices) {
    CHECK(r.dd_zero);
    CHECK(r.closed);
    for (std::size_t j = 0; j < r.degrees.size(); ++j)
      if (r.degrees[j] != static_cast<int>(l.borel_dim())) CHECK(r.cohomology[j] == 0);
  }
}
