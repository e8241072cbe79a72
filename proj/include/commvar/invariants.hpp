#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "commvar/lie_algebra.hpp"
#include "commvar/mpoly.hpp"
#include "commvar/report.hpp"

namespace commvar {

/// Polynomial map g x g -> g: one coefficient per basis element of g, all in
/// Ring::bigraded(dim g) (x-block, then y-block).
struct GVector {
  Ring ring;
  std::vector<MPoly> coeffs;
  unsigned px = 0;
  unsigned py = 0;

  std::size_t size() const { return coeffs.size(); }
  bool is_zero() const;
  /// True when every coefficient is bihomogeneous of (px, py) or zero.
  bool has_declared_bidegree() const;
  /// `point` lists the x coordinates then the y coordinates.
  QVector evaluate(std::span<const Rat> point) const;
};

/// The identity map (x, y) -> x, resp. (x, y) -> y.
GVector coordinate_map_x(const LieAlgebra& lie);
GVector coordinate_map_y(const LieAlgebra& lie);
/// Pointwise bracket and pairing of polynomial maps.
GVector bracket(const LieAlgebra& lie, const GVector& a, const GVector& b);
MPoly pairing(const LieAlgebra& lie, const GVector& a, const GVector& b);

/// (i, m) with i a 0-based generator index.
struct ShiftIndex {
  unsigned i = 0;
  unsigned m = 0;
  /// "(i+1,m)", matching the 1-based labels used in reports.
  std::string label() const;
  bool operator==(const ShiftIndex&) const = default;
};

/// Homogeneous generators of the invariant polynomials, x-block only.
struct PolFamily {
  Ring ring;
  std::vector<MPoly> generators;
  std::vector<unsigned> degrees;

  /// I_0: (i, m) with 0 <= m <= d_i - 1, ordered by i then m.
  std::vector<ShiftIndex> index_set() const;
  /// I_0 restricted to m > 0.
  std::vector<ShiftIndex> shifted_index_set() const;
};

/// p_i = -e_{i+1}(X), e_j the elementary symmetric functions of the
/// eigenvalues of X in the defining representation (degrees 2..r+1).
/// ad-invariance is verified symbolically before returning.
PolFamily invariant_generators(const LieAlgebra& lie);

/// sum_k (dp/dx_k) [v, x]_k: zero iff p is killed by ad v.
MPoly ad_invariance_residual(const LieAlgebra& lie, const MPoly& p, std::size_t basis_index);

/// [p^(0), ..., p^(d)] with p(x + t y) = sum_m t^m p^(m)(x, y); the identity
/// is checked with a formal t before returning.
std::vector<MPoly> polarize_scalar(const MPoly& p);

/// epsilon_i(x): the form-dual of the gradient of p_i.
GVector epsilon(const LieAlgebra& lie, const PolFamily& fam, unsigned i);
/// epsilon_i^(m)(x, y), the t^m coefficient of epsilon_i(x + t y).
GVector epsilon_polarized(const LieAlgebra& lie, const PolFamily& fam, unsigned i, unsigned m);
/// All epsilon_i^(m), (i, m) in I_0, in the order of I_0.
std::vector<GVector> epsilon_family(const LieAlgebra& lie, const PolFamily& fam);

/// Lie-Poisson bracket {f, g}(x) = <x, [grad f, grad g]>. Only the x-block is
/// differentiated, so y-variables act as parameters.
MPoly poisson_bracket(const LieAlgebra& lie, const MPoly& f, const MPoly& g);

/// Pairwise Poisson-commutativity of the shifted invariants p_i^(m)(., y),
/// (i, m) in I_0, with y a symbolic parameter.
ReportDoc mf_commutativity_check(const LieAlgebra& lie, const PolFamily& fam);

/// alpha(epsilon_i(x)) restricted to the Cartan subalgebra is divisible by
/// alpha with quotient of degree d_i - 2. `root_index` is the basis index of
/// the positive root vector of alpha.
ReportDoc root_divisibility_check(const LieAlgebra& lie, const PolFamily& fam, unsigned i,
                                  std::size_t root_index);

/// epsilon_i^(m)(g x, g y) = g epsilon_i^(m)(x, y) for g = exp(t ad v), v
/// running over the root vectors, at sampled (x, y, t).
ReportDoc equivariance_check(const LieAlgebra& lie, const PolFamily& fam, std::uint64_t seed,
                             long height_bound);

/// exp(t ad v) for nilpotent ad v.
QMatrix exp_ad(const LieAlgebra& lie, const ElementVector& v, const Rat& t);

}  // namespace commvar
