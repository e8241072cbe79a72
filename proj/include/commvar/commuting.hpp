#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "commvar/groebner.hpp"
#include "commvar/invariants.hpp"
#include "commvar/lie_algebra.hpp"
#include "commvar/report.hpp"

namespace commvar {

/// I_g: one generator (x, y) -> <b_v, [x, y]> per basis vector b_v, in
/// Ring::bigraded(dim g).
IdealPresentation commuting_ideal(const LieAlgebra& lie);

class RationalSampler;

/// A point of C(g): x sampled regular, y = t * (combination of a basis of the
/// centralizer of x).
std::pair<ElementVector, ElementVector> sample_commuting_pair(const LieAlgebra& lie, RationalSampler& sampler,
                                                              long height_bound);

struct VanishingDegree {
  unsigned degree = 0;
  std::size_t monomials = 0;
  /// Kernel dimension of the interpolation matrix.
  std::size_t vanishing_dim = 0;
  /// dim (I_g)_d from the Groebner basis.
  std::size_t ideal_dim = 0;
  /// Rank of the interpolation matrix did not grow over the last samples.
  bool stable = false;
  /// "modular-bound" when the rank modulo a prime already pins the kernel
  /// dimension to ideal_dim, otherwise "exact".
  std::string method;
};

/// For d = 0..max_degree: the degree-d part of the vanishing ideal of the
/// sampled points of C(g), next to dim (I_g)_d. Guard: rank <= 2, d <= 4.
std::vector<VanishingDegree> vanishing_ideal_low_degree(const LieAlgebra& lie, const GroebnerBasis& gb,
                                                        unsigned max_degree, unsigned sample_count,
                                                        std::uint64_t seed);

/// Interpolation agreement in every degree <= max_degree, Krull dimension
/// 2 b_g, and every sampled commuting pair annihilating the basis. Evidence
/// for radicality, not a proof.
ReportDoc radicality_evidence(const LieAlgebra& lie, unsigned max_degree, unsigned sample_count, std::uint64_t seed);

/// All p_i(x) = 0.
bool nilpotent_test(const LieAlgebra& lie, const PolFamily& fam, const ElementVector& x);
/// p_i(a x + b y) = 0 as polynomials in formal a, b, for every i.
bool bicone_test(const LieAlgebra& lie, const PolFamily& fam, const ElementVector& x, const ElementVector& y);

}  // namespace commvar
