#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commvar/charmod.hpp"
#include "commvar/sampling.hpp"

using namespace commvar;

namespace {

struct Setup {
  LieAlgebra lie;
  PolFamily fam;
  EpsBasis eps;
  explicit Setup(unsigned r)
      : lie(LieAlgebra::build_simple(Series::A, r)), fam(invariant_generators(lie)), eps(build_eps_basis(lie, fam)) {}
};

ElementVector borel_sample(const LieAlgebra& l, RationalSampler& s) {
  ElementVector v(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (l.kind(i) != BasisKind::NegativeRoot) v[i] = s.rational(5);
  return v;
}

}  // namespace

TEST_CASE("subspace spans") {
  const auto s = span_of(3, {{1, 0, 0}, {2, 0, 0}, {0, 1, 1}});
  CHECK(s.dim() == 2);
  CHECK(s.contains(QVector{3, 2, 2}));
  CHECK_FALSE(s.contains(QVector{0, 0, 1}));
  CHECK(s.contains(span_of(3, {{1, 1, 1}})));
  CHECK_FALSE(span_of(3, {{1, 1, 1}}).contains(s));
  CHECK(span_of(3, {}).dim() == 0);
  CHECK(join_point({1, 2}, {3}) == QVector{1, 2, 3});
}

TEST_CASE("basis has b_g maps of the right bidegrees") {
  for (unsigned r = 1; r <= 3; ++r) {
    const Setup s(r);
    REQUIRE(s.eps.size() == s.lie.borel_dim());
    for (std::size_t k = 0; k < s.eps.size(); ++k) {
      const auto idx = s.eps.index[k];
      CHECK(s.eps.maps[k].px + s.eps.maps[k].py + 1 == s.fam.degrees[idx.i]);
      CHECK(s.eps.maps[k].py == idx.m);
      CHECK(s.eps.maps[k].has_declared_bidegree());
    }
  }
}

TEST_CASE("sl2: V is the span of x and y") {
  const Setup s(1);
  RationalSampler rs(31);
  for (int t = 0; t < 10; ++t) {
    const auto x = sample_rational(s.lie, rs, 6), y = sample_rational(s.lie, rs, 6);
    const auto v = eval_V(s.lie, s.eps, x, y);
    CHECK(v.contains(x));
    CHECK(v.contains(y));
    CHECK(v.dim() == span_of(3, {x, y}).dim());
  }
}

TEST_CASE("V contains x and y") {
  for (unsigned r = 2; r <= 3; ++r) {
    const Setup s(r);
    RationalSampler rs(r);
    const auto x = sample_rational(s.lie, rs, 5), y = sample_rational(s.lie, rs, 5);
    const auto v = eval_V(s.lie, s.eps, x, y);
    CHECK(v.contains(x));
    CHECK(v.contains(y));
    CHECK(v.dim() <= s.lie.borel_dim());
  }
}

TEST_CASE("omega membership") {
  const Setup s(2);
  const auto w = find_omega_witness(s.lie, s.eps, 0xC0FFEE, 7);
  REQUIRE(w.has_value());
  const auto& [x, y] = *w;
  const auto res = omega_test(s.lie, s.eps, x, y);
  CHECK(res.verdict == OmegaVerdict::Member);
  CHECK(res.dim_v == s.lie.borel_dim());
  REQUIRE(res.regular_pencil_point.has_value());
  const auto [a, b] = *res.regular_pencil_point;
  QVector z(s.lie.dim());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = a * x[i] + b * y[i];
  CHECK(is_regular(s.lie, z));

  const auto same = omega_test(s.lie, s.eps, x, x);
  CHECK(same.verdict == OmegaVerdict::NotMember);
  CHECK(same.dim_v < s.lie.borel_dim());

  const QVector zero(s.lie.dim());
  CHECK(omega_test(s.lie, s.eps, zero, zero).verdict == OmegaVerdict::Indeterminate);
}

TEST_CASE("orthogonality of [x, V] and V at a witness") {
  for (unsigned r = 1; r <= 3; ++r) {
    const Setup s(r);
    const auto w = find_omega_witness(s.lie, s.eps, 0xC0FFEE, 7);
    REQUIRE(w.has_value());
    const auto& [x, y] = *w;
    const auto v = eval_V(s.lie, s.eps, x, y);
    std::vector<QVector> xv, yv;
    for (const auto& b : v.basis) {
      xv.push_back(s.lie.bracket(x, b));
      yv.push_back(s.lie.bracket(y, b));
      for (const auto& c : v.basis) CHECK(s.lie.pairing(s.lie.bracket(x, b), c) == 0);
    }
    const auto xs = span_of(s.lie.dim(), xv), ys = span_of(s.lie.dim(), yv);
    CHECK(xs.dim() == s.lie.borel_dim() - s.lie.rank());
    CHECK(xs.contains(ys));
    CHECK(ys.contains(xs));
    CHECK(v.dim() + xs.dim() == s.lie.dim());
    CHECK(orthogonality_suite(s.lie, s.eps, x, y).status == Status::Pass);
    CHECK(isotropy_check(s.lie, s.eps, x, y).status == Status::Pass);
    CHECK(c_module_check(s.lie, s.eps, x, y).status == Status::Pass);
    CHECK(homogeneity_check(s.lie, s.eps, x, y, Rat(2), Rat(-3, 5)).status == Status::Pass);
  }
}

TEST_CASE("c-module generators") {
  const Setup s(2);
  const auto gens = c_module_generators(s.lie, s.eps);
  CHECK(gens.size() == s.lie.n_value());
  RationalSampler rs(41);
  const auto x = sample_rational(s.lie, rs, 5), y = sample_rational(s.lie, rs, 5);
  const auto v = eval_V(s.lie, s.eps, x, y);
  for (const auto& g : gens) {
    const auto gv = g.evaluate(join_point(x, y));
    for (const auto& b : v.basis) CHECK(s.lie.pairing(gv, b) == 0);
  }
}

TEST_CASE("bracket pairing identity and dimension bound") {
  for (unsigned r = 1; r <= 2; ++r) {
    const Setup s(r);
    CHECK(bracket_pairing_identity(s.lie, s.eps).status == Status::Pass);
    CHECK(dimension_bound_scan(s.lie, s.eps, 7, 7, 50).status == Status::Pass);
  }
}

TEST_CASE("Borel pairs stay in the Borel subalgebra") {
  for (unsigned r = 1; r <= 3; ++r) {
    const Setup s(r);
    RationalSampler rs(r + 100);
    const auto x = borel_sample(s.lie, rs), y = borel_sample(s.lie, rs);
    for (const auto& m : s.eps.maps) {
      const auto e = m.evaluate(join_point(x, y));
      for (std::size_t i = 0; i < e.size(); ++i)
        if (s.lie.kind(i) == BasisKind::NegativeRoot) CHECK(e[i] == 0);
    }
    CHECK(parabolic_containment_check(s.lie, s.eps, x, y).status == Status::Pass);
  }
  const Setup s2(2);
  CHECK(parabolic_containment_symbolic(s2.lie, s2.eps).status == Status::Pass);
}
