#include "commvar/rat.hpp"

#include "commvar/errors.hpp"

namespace commvar {

Rat make_rat(long num, long den) {
  if (den == 0) throw ContractError("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0) throw ContractError("parse_rat: not a rational: " + text);
  if (r.get_den() == 0) throw ContractError("parse_rat: zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Int factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Int binomial(unsigned n, unsigned k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace commvar
