#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commvar/invariants.hpp"
#include "commvar/sampling.hpp"

using namespace commvar;

namespace {

Rat trace(const QMatrix& m) {
  Rat t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// e_1..e_n of the eigenvalues via Newton's identities on power traces
std::vector<Rat> elementary_from_traces(const QMatrix& x) {
  const std::size_t n = x.rows();
  std::vector<Rat> p(n + 1), e(n + 1);
  QMatrix power = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * x;
    p[k] = trace(power);
  }
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rat s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += (i % 2 == 1 ? 1 : -1) * e[k - i] * p[i];
    e[k] = s / Rat(static_cast<long>(k));
  }
  return e;
}

std::vector<Rat> pad(QVector x, std::size_t total) {
  x.resize(total);
  return x;
}

std::vector<Rat> concat(const QVector& a, const QVector& b) {
  QVector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

QVector axpy(const QVector& x, const Rat& t, const QVector& y) {
  QVector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += t * y[i];
  return out;
}

}  // namespace

TEST_CASE("sl2 invariant is x1 x3 + x2^2") {
  const auto l = LieAlgebra::build_simple(Series::A, 1);
  const auto fam = invariant_generators(l);
  REQUIRE(fam.generators.size() == 1);
  CHECK(fam.degrees == std::vector<unsigned>{2});
  const Ring R = fam.ring;
  const MPoly expected = MPoly::var(R, 0) * MPoly::var(R, 2) + MPoly::var(R, 1).pow(2);
  CHECK(fam.generators[0] == expected);
}

TEST_CASE("generators are minus the characteristic coefficients") {
  for (unsigned r = 1; r <= 3; ++r) {
    const auto l = LieAlgebra::build_simple(Series::A, r);
    const auto fam = invariant_generators(l);
    REQUIRE(fam.generators.size() == r);
    RationalSampler s(r);
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = sample_rational(l, s, 5);
      const auto e = elementary_from_traces(l.to_matrix(x));
      for (unsigned i = 0; i < r; ++i) {
        CHECK(fam.degrees[i] == i + 2);
        CHECK(fam.generators[i].is_homogeneous(i + 2));
        CHECK(fam.generators[i].evaluate(pad(x, fam.ring.size())) == -e[i + 2]);
      }
    }
    for (unsigned i = 0; i < r; ++i)
      for (std::size_t b = 0; b < l.dim(); ++b) CHECK(ad_invariance_residual(l, fam.generators[i], b).is_zero());
  }
}

TEST_CASE("index sets") {
  const auto l = LieAlgebra::build_simple(Series::A, 2);
  const auto fam = invariant_generators(l);
  const auto i0 = fam.index_set();
  CHECK(i0.size() == l.borel_dim());
  CHECK(fam.shifted_index_set().size() == l.n_value());
  CHECK(i0.front() == ShiftIndex{0, 0});
  CHECK(i0.back() == ShiftIndex{1, 2});
  CHECK(i0.back().label() == "(2,2)");
}

TEST_CASE("polarization expands p(x + t y)") {
  const auto l = LieAlgebra::build_simple(Series::A, 2);
  const auto fam = invariant_generators(l);
  RationalSampler s(5);
  for (unsigned i = 0; i < 2; ++i) {
    const auto pol = polarize_scalar(fam.generators[i]);
    REQUIRE(pol.size() == fam.degrees[i] + 1);
    for (unsigned m = 0; m < pol.size(); ++m) CHECK(pol[m].is_bihomogeneous(fam.degrees[i] - m, m));
    const auto x = sample_rational(l, s, 4), y = sample_rational(l, s, 4);
    const Rat t = s.rational(6);
    const Rat lhs = fam.generators[i].evaluate(pad(axpy(x, t, y), fam.ring.size()));
    Rat rhs = 0, tp = 1;
    for (const auto& q : pol) {
      rhs += tp * q.evaluate(concat(x, y));
      tp *= t;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("epsilon is the dual gradient and centralizes x") {
  for (unsigned r = 1; r <= 3; ++r) {
    const auto l = LieAlgebra::build_simple(Series::A, r);
    const auto fam = invariant_generators(l);
    RationalSampler s(17);
    for (unsigned i = 0; i < r; ++i) {
      const auto eps = epsilon(l, fam, i);
      CHECK(eps.size() == l.dim());
      const auto x = sample_rational(l, s, 5);
      const auto ex = eps.evaluate(pad(x, 2 * l.dim()));
      CHECK(is_zero(l.bracket(x, ex)));
      const auto& p = fam.generators[i];
      for (std::size_t b = 0; b < l.dim(); ++b) {
        const Rat grad = p.derivative(b).evaluate(pad(x, p.ring().size()));
        CHECK(l.pairing(ex, l.basis_vector(b)) == grad);
      }
    }
  }
}

TEST_CASE("polarized epsilon expands epsilon(x + t y)") {
  const auto l = LieAlgebra::build_simple(Series::A, 2);
  const auto fam = invariant_generators(l);
  const auto family = epsilon_family(l, fam);
  CHECK(family.size() == l.borel_dim());
  RationalSampler s(23);
  const auto x = sample_rational(l, s, 3), y = sample_rational(l, s, 3);
  const Rat t = s.rational(5);
  for (unsigned i = 0; i < 2; ++i) {
    const auto full = epsilon(l, fam, i).evaluate(pad(axpy(x, t, y), 2 * l.dim()));
    QVector sum(l.dim());
    Rat tp = 1;
    for (unsigned m = 0; m + 1 <= fam.degrees[i]; ++m) {
      const auto em = epsilon_polarized(l, fam, i, m);
      CHECK(em.px == fam.degrees[i] - 1 - m);
      CHECK(em.py == m);
      CHECK(em.has_declared_bidegree());
      sum = axpy(sum, tp, em.evaluate(concat(x, y)));
      tp *= t;
    }
    CHECK(sum == full);
  }
}

TEST_CASE("Lie-Poisson bracket") {
  const auto l = LieAlgebra::build_simple(Series::A, 1);
  const auto fam = invariant_generators(l);
  const Ring R = fam.ring;
  // {x_a, x_b} is the linear function <x, [v_a, v_b]> with v the form-dual basis
  RationalSampler s(3);
  const auto x = sample_rational(l, s, 6);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const auto va = l.form_inverse().row(a), vb = l.form_inverse().row(b);
      const Rat expected = l.pairing(x, l.bracket(va, vb));
      CHECK(poisson_bracket(l, MPoly::var(R, a), MPoly::var(R, b)).evaluate(pad(x, R.size())) == expected);
    }
  for (std::size_t a = 0; a < 3; ++a) CHECK(poisson_bracket(l, fam.generators[0], MPoly::var(R, a)).is_zero());
}

TEST_CASE("report checks pass") {
  for (unsigned r = 1; r <= 2; ++r) {
    const auto l = LieAlgebra::build_simple(Series::A, r);
    const auto fam = invariant_generators(l);
    CHECK(mf_commutativity_check(l, fam).status == Status::Pass);
    CHECK(equivariance_check(l, fam, 0xC0FFEE, 7).status == Status::Pass);
    for (unsigned i = 0; i < r; ++i) CHECK(root_divisibility_check(l, fam, i, 0).status == Status::Pass);
  }
}

TEST_CASE("exp_ad is conjugation by the matrix exponential") {
  const auto l = LieAlgebra::build_simple(Series::A, 2);
  RationalSampler s(9);
  for (std::size_t v = 0; v < l.dim(); ++v) {
    if (l.kind(v) == BasisKind::Coroot) continue;
    const Rat t = s.nonzero_rational(5);
    const auto V = l.to_matrix(l.basis_vector(v));
    QMatrix g = QMatrix::identity(3), ginv = QMatrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        g(i, j) += t * V(i, j);
        ginv(i, j) -= t * V(i, j);
      }
    const auto E = exp_ad(l, l.basis_vector(v), t);
    const auto u = sample_rational(l, s, 4);
    CHECK(l.to_matrix(E.apply(u)) == g * l.to_matrix(u) * ginv);
  }
}
