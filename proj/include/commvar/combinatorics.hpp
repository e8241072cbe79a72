#pragma once

#include <vector>

#include "commvar/rat.hpp"
#include "commvar/report.hpp"

namespace commvar {

/// r(k, l) = sum_{j<k} (-1)^j C(l, j), 1 <= k <= l.
Rat r_val(unsigned k, unsigned l);
/// (-1)^{k-1} (l-1)! / ((k-1)! (l-k)!).
Rat r_closed(unsigned k, unsigned l);

/// c(k, l) = sum_{j<=k} (-1)^j / (j! (l+j)!).
Rat c_val(unsigned k, unsigned l);

/// p_0 = 1, p_1(x) = x, p_k(x) = k(x+k) p_{k-1}(x) + (-1)^k.
Int p_val(unsigned k, const Int& x);
/// Same recursion with k(x-k) in place of k(x+k), as printed.
Int p_val_printed(unsigned k, const Int& x);

/// psi(e, k, l) = r(k, l) - sum_{j=1}^{e-1} (-1)^{k-j} c(j, k-j) r(j, l) (l-j)!/(l-k)!.
Rat psi_val(unsigned e, unsigned k, unsigned l);
/// phi(e, k) = k - sum_{j=1}^{e-1} j/(j!)^2 p_j(k-j).
Rat phi_val(unsigned e, unsigned k);
/// (-1)^{k-1} k! (l-k)! / (l-1)! * psi(e, k, l).
Rat csco_lhs(unsigned e, unsigned k, unsigned l);

struct CombinatoricsBounds {
  /// r and c/p identities over 1 <= l <= max_l_rc.
  unsigned max_l_rc = 30;
  /// psi, phi scans over 2 <= e <= k <= l <= max_l_psi.
  unsigned max_l_psi = 25;
};

/// One report per identity: r closed form, c = p_k/(k!(l+k)!), p_k mod k,
/// the psi/phi identity, and nonvanishing of psi.
std::vector<ReportDoc> combinatorics_suite(const CombinatoricsBounds& bounds);

}  // namespace commvar
