#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commvar/errors.hpp"
#include "commvar/mpoly.hpp"
#include "commvar/qmatrix.hpp"
#include "commvar/sampling.hpp"

using namespace commvar;

namespace {

MPoly random_poly(RationalSampler& s, Ring ring, unsigned max_deg, int terms) {
  MPoly p(ring);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (unsigned d = static_cast<unsigned>(s.integer(0, max_deg)); d > 0; --d)
      m.bump(static_cast<std::size_t>(s.integer(0, static_cast<long>(ring.size()) - 1)), 1);
    p.add_term(m, s.rational(5));
  }
  return p;
}

Int naive_binomial(unsigned n, unsigned k) {
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  const Rat a = make_rat(6, -4);
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(parse_rat("-3/2") == a);
  CHECK(parse_rat("5") == Rat(5));
  CHECK(to_string(make_rat(10, 4)) == "5/2");
  CHECK(factorial(5) == 120);
  CHECK(binomial(7, 5) == 21);
}

TEST_CASE("polynomial arithmetic examples") {
  const Ring r = Ring::bigraded(3);
  const MPoly x1 = MPoly::var(r, 0), y1 = MPoly::var(r, 3);
  CHECK((x1 - x1).is_zero());
  CHECK((x1 + y1) * (x1 - y1) == x1 * x1 - y1 * y1);
  const MPoly prod = MPoly::var(r, 1) * MPoly::var(r, 4);
  CHECK(prod.bidegree() == std::pair<unsigned, unsigned>{1, 1});
  CHECK(prod.is_bihomogeneous(1, 1));
  CHECK(MPoly(r).bidegree() == std::pair<unsigned, unsigned>{0, 0});
}

TEST_CASE("mismatched variable universes are rejected") {
  const MPoly a = MPoly::var(Ring::bigraded(3), 0);
  const MPoly b = MPoly::var(Ring::bigraded(2), 0);
  CHECK_THROWS_AS(a + b, StructuralError);
  CHECK_THROWS_AS(a * b, StructuralError);
}

TEST_CASE("ring axioms on random polynomials") {
  RationalSampler s(17);
  const Ring r = Ring::bigraded(3);
  for (int trial = 0; trial < 40; ++trial) {
    const MPoly p = random_poly(s, r, 3, 5), q = random_poly(s, r, 3, 5), w = random_poly(s, r, 2, 4);
    CHECK((p + q) + w == p + (q + w));
    CHECK(p * q == q * p);
    CHECK((p * q) * w == p * (q * w));
    CHECK(p * (q + w) == p * q + p * w);
    const MPoly pq = p * q;
    for (const auto& [m, c] : pq.terms()) CHECK(sgn(c) != 0);
    if (!p.is_zero() && !q.is_zero()) {
      const auto [a, b] = p.bidegree();
      const auto [c, d] = q.bidegree();
      const auto [e, f] = (p * q).bidegree();
      CHECK(e == a + c);
      CHECK(f == b + d);
    }
  }
}

TEST_CASE("exact division") {
  RationalSampler s(5);
  const Ring r = Ring::bigraded(2);
  for (int trial = 0; trial < 20; ++trial) {
    const MPoly q = random_poly(s, r, 2, 3), g = random_poly(s, r, 2, 3);
    if (g.is_zero()) continue;
    const auto back = divide_exact(q * g, g);
    REQUIRE(back.has_value());
    CHECK(*back == q);
  }
  const MPoly x = MPoly::var(r, 0), y = MPoly::var(r, 1);
  CHECK_FALSE(divide_exact(x * x + y, x).has_value());
}

TEST_CASE("derivative, evaluation and substitution") {
  const Ring r = Ring::bigraded(2);
  const MPoly x = MPoly::var(r, 0), y = MPoly::var(r, 2);
  const MPoly p = x * x * y + make_rat(3, 2) * y;
  CHECK(p.derivative(0) == make_rat(2) * x * y);
  const std::vector<Rat> pt = {Rat(2), Rat(0), Rat(5), Rat(0)};
  CHECK(p.evaluate(pt) == Rat(20) + make_rat(15, 2));
  std::vector<MPoly> images = {y, MPoly(r), x, MPoly(r)};
  CHECK(p.substitute(images, r) == y * y * x + make_rat(3, 2) * x);
}

TEST_CASE("bidegree slice bases") {
  CHECK(bidegree_slice_basis(3, 1, 0).size() == 3);
  CHECK(bidegree_slice_basis(3, 1, 1).size() == 9);
  CHECK(bidegree_slice_basis(3, 2, 0).size() == 6);
  for (std::size_t n = 1; n <= 16; ++n)
    for (unsigned p = 0; p <= 8; ++p) {
      CHECK(Int(static_cast<unsigned long>(monomial_count(n, p))) == naive_binomial(n + p - 1, p));
      for (unsigned q = 0; q <= 8; ++q) {
        const std::size_t expect = monomial_count(n, p) * monomial_count(n, q);
        if (expect > 200000) continue;
        const auto basis = bidegree_slice_basis(n, p, q);
        REQUIRE(basis.size() == expect);
        const Ring ring = Ring::bigraded(static_cast<std::uint16_t>(n));
        bool ok = true;
        for (std::size_t i = 0; i < basis.size(); ++i) {
          ok = ok && basis[i].degree(0, n) == p && basis[i].degree(n, 2 * n) == q;
          if (i > 0) ok = ok && BlockGrlex{ring}(basis[i], basis[i - 1]);
        }
        CHECK(ok);
      }
    }
}

TEST_CASE("rank and kernel examples") {
  const auto id = rank_kernel(QMatrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.kernel.empty());

  const auto z = rank_kernel(QMatrix(2, 2));
  CHECK(z.rank == 0);
  REQUIRE(z.kernel.size() == 2);
  CHECK(z.kernel[0] == QVector{Rat(1), Rat(0)});
  CHECK(z.kernel[1] == QVector{Rat(0), Rat(1)});

  const QMatrix m = QMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, 2);
  const auto rk = rank_kernel(m);
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel.size() == 1);
  CHECK(rk.kernel[0] == QVector{Rat(-2), Rat(1)});
}

TEST_CASE("rank-nullity and kernels on random matrices") {
  RationalSampler s(99);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(s.integer(1, 6)), cols = static_cast<std::size_t>(s.integer(1, 6));
    QMatrix m(rows, cols);
    // low rank by construction half the time
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = s.rational(4);
    if (trial % 2 == 0 && rows > 1)
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 3;
    const auto rk = rank_kernel(m);
    CHECK(rk.rank + rk.kernel.size() == cols);
    CHECK(rk.rank <= std::min(rows, cols));
    for (const auto& v : rk.kernel) CHECK(is_zero(m.apply(v)));
    std::vector<SparseVec> sparse;
    for (std::size_t i = 0; i < rows; ++i) {
      SparseVec row;
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(m(i, j)) != 0) row.emplace_back(static_cast<std::uint32_t>(j), m(i, j));
      sparse.push_back(row);
    }
    CHECK(sparse_rank(sparse) == rk.rank);
    ModularEchelon mod(cols);
    for (const auto& row : sparse) mod.insert(row);
    CHECK(mod.usable());
    CHECK(mod.rank() <= rk.rank);
  }
}

TEST_CASE("solve and inverse") {
  const QMatrix a = QMatrix::from_rows({{Rat(2), Rat(1)}, {Rat(1), Rat(3)}}, 2);
  const auto x = solve(a, std::vector<Rat>{Rat(3), Rat(5)});
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == QVector{Rat(3), Rat(5)});
  CHECK(a * inverse(a) == QMatrix::identity(2));
  const QMatrix sing = QMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, 2);
  CHECK_THROWS_AS(inverse(sing), ContractError);
  CHECK_FALSE(solve(sing, std::vector<Rat>{Rat(1), Rat(0)}).has_value());
}

TEST_CASE("sparse echelon membership") {
  SparseEchelon e;
  CHECK(e.insert({{0, Rat(1)}, {2, Rat(1)}}));
  CHECK(e.insert({{1, Rat(1)}, {2, Rat(-1)}}));
  CHECK_FALSE(e.insert({{0, Rat(2)}, {1, Rat(2)}}));
  CHECK(e.contains({{0, Rat(1)}, {1, Rat(1)}}));
  CHECK_FALSE(e.contains({{2, Rat(1)}}));
  CHECK(e.rank() == 2);
}

TEST_CASE("sampler determinism and bounds") {
  RationalSampler a(42), b(42);
  for (int i = 0; i < 50; ++i) CHECK(a.rational(7) == b.rational(7));
  RationalSampler c(3);
  for (int i = 0; i < 200; ++i) {
    const Rat r = c.rational(1);
    CHECK((r == -1 || r == 0 || r == 1));
    const Rat q = c.nonzero_rational(5);
    CHECK(sgn(q) != 0);
    CHECK(abs(q.get_num()) <= 5);
    CHECK(q.get_den() <= 5);
  }
}
