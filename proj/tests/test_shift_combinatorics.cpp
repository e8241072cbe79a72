#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "commvar/combinatorics.hpp"
#include "commvar/errors.hpp"

using namespace commvar;

namespace {

std::int64_t fact(unsigned n) {
  std::int64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t choose(unsigned n, unsigned k) { return fact(n) / (fact(k) * fact(n - k)); }

}  // namespace

TEST_CASE("hand-computed values") {
  CHECK(c_val(2, 1) == Rat(7, 12));
  CHECK(p_val(2, Int(1)) == 7);
  CHECK(p_val_printed(2, Int(1)) == -1);
  CHECK(p_val(0, Int(5)) == 1);
  CHECK(p_val(1, Int(5)) == 5);
  CHECK(psi_val(2, 2, 2) == Rat(-1, 2));
  CHECK(phi_val(2, 2) == 1);
  CHECK(psi_val(3, 3, 3) == Rat(-5, 6));
  CHECK(phi_val(3, 3) == Rat(-5, 2));
  CHECK(csco_lhs(2, 2, 2) == phi_val(2, 2));
  CHECK(r_val(1, 1) == 1);
  CHECK(r_val(2, 4) == -3);
}

TEST_CASE("r against machine integers") {
  for (unsigned l = 1; l <= 18; ++l)
    for (unsigned k = 1; k <= l; ++k) {
      std::int64_t s = 0;
      for (unsigned j = 0; j < k; ++j) s += (j % 2 ? -1 : 1) * choose(l, j);
      CHECK(r_val(k, l) == Rat(static_cast<long>(s)));
      CHECK(r_closed(k, l) == r_val(k, l));
    }
}

TEST_CASE("c and p against a direct recursion") {
  for (unsigned l = 1; l <= 8; ++l) {
    std::int64_t p = 1;
    for (unsigned k = 0; k <= 8; ++k) {
      if (k == 1) p = l;
      if (k >= 2) p = static_cast<std::int64_t>(k) * (l + k) * p + (k % 2 ? -1 : 1);
      CHECK(p_val(k, Int(static_cast<long>(l))) == Int(static_cast<long>(p)));
      Rat c = 0;
      for (unsigned j = 0; j <= k; ++j) c += Rat(j % 2 ? -1 : 1, 1) / Rat(fact(j) * fact(l + j));
      CHECK(c_val(k, l) == c);
      CHECK(c * Rat(fact(k) * fact(l + k)) == Rat(static_cast<long>(p)));
    }
  }
}

TEST_CASE("psi and phi identity on a small range") {
  for (unsigned l = 2; l <= 10; ++l)
    for (unsigned k = 2; k <= l; ++k)
      for (unsigned e = 2; e <= k; ++e) {
        CHECK(csco_lhs(e, k, l) == phi_val(e, k));
        CHECK(psi_val(e, k, l) != 0);
      }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(r_val(0, 3), ContractError);
  CHECK_THROWS_AS(r_val(4, 3), ContractError);
  CHECK_THROWS_AS(psi_val(1, 2, 2), ContractError);
  CHECK_THROWS_AS(psi_val(3, 2, 2), ContractError);
  CHECK_THROWS_AS(phi_val(3, 2), ContractError);
}

TEST_CASE("suite reports") {
  const auto docs = combinatorics_suite({});
  REQUIRE(docs.size() == 5);
  for (const auto& d : docs) {
    CHECK(d.suite == "comb");
    CHECK(d.status == Status::Pass);
  }
  CHECK(docs[0].case_id == "r-closed-form");
  CHECK(docs[1].case_id == "c-equals-p");
  CHECK(docs[1].witness["printed_recursion_disagreements"] == 870);
  CHECK(docs[1].witness["printed_recursion_example"]["printed"] == "-1");
  CHECK(docs[4].witness["psi_2_2_2"] == "-1/2");
  CHECK(docs[3].witness["triples"] == 2600);
  CHECK_THROWS_AS(combinatorics_suite({0, 25}), ContractError);
}
