#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "commvar/invariants.hpp"
#include "commvar/lie_algebra.hpp"
#include "commvar/report.hpp"

namespace commvar {

/// The b_g maps epsilon_i^(m), (i, m) in I_0, in the order of I_0.
struct EpsBasis {
  std::vector<ShiftIndex> index;
  std::vector<GVector> maps;

  std::size_t size() const { return maps.size(); }
};

EpsBasis build_eps_basis(const LieAlgebra& lie, const PolFamily& fam);

/// Linearly independent rows spanning a subspace of g.
struct SubspaceBasis {
  std::size_t ambient = 0;
  std::vector<QVector> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const QVector& v) const;
  bool contains(const SubspaceBasis& other) const;
};

SubspaceBasis span_of(std::size_t ambient, const std::vector<QVector>& vectors);

/// The x coordinates followed by the y coordinates.
QVector join_point(const ElementVector& x, const ElementVector& y);

/// V_{x,y}: the span of the epsilon_i^(m)(x, y).
SubspaceBasis eval_V(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x, const ElementVector& y);

enum class OmegaVerdict { Member, NotMember, Indeterminate };

struct OmegaResult {
  OmegaVerdict verdict = OmegaVerdict::Indeterminate;
  std::size_t dim_v = 0;
  /// (a, b) with a x + b y regular, when one was found.
  std::optional<std::pair<Rat, Rat>> regular_pencil_point;
};

/// dim V_{x,y} = b_g, provided the pencil {a x + b y} is seen to meet the
/// regular set within `attempts` deterministic tries; otherwise indeterminate.
OmegaResult omega_test(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x, const ElementVector& y,
                       unsigned attempts = 8);

/// First sampled pair in Omega (seeded, deterministic), or nullopt.
std::optional<std::pair<ElementVector, ElementVector>> find_omega_witness(const LieAlgebra& lie, const EpsBasis& eps,
                                                                          std::uint64_t seed, long height_bound,
                                                                          unsigned max_tries = 64);

/// [x, V] orthogonal to V, dim [x, V] = b_g - rank, dim V + dim [x, V] =
/// dim g, and [x, V] = [y, V].
ReportDoc orthogonality_suite(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x,
                              const ElementVector& y);

/// V_{x,y} is totally isotropic for (v, w) -> <a x + b y, [v, w]>, a and b
/// symbolic: the a- and b-coefficient Gram matrices both vanish.
ReportDoc isotropy_check(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x, const ElementVector& y);

/// <epsilon_i^(m)(x, y), [x, y]> is the zero polynomial for every (i, m).
ReportDoc bracket_pairing_identity(const LieAlgebra& lie, const EpsBasis& eps);

/// The maps (x, y) -> [x, epsilon_i^(m)(x, y)], m > 0.
std::vector<GVector> c_module_generators(const LieAlgebra& lie, const EpsBasis& eps);

/// At (x, y): the generators have rank n and are orthogonal to V_{x,y}.
ReportDoc c_module_check(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x, const ElementVector& y);

/// For x, y in the Borel subalgebra (Cartan plus positive root vectors), every
/// epsilon_i^(m)(x, y) has no negative root component.
ReportDoc parabolic_containment_check(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x,
                                      const ElementVector& y);
/// The same statement as a polynomial identity in the Borel coordinates.
ReportDoc parabolic_containment_symbolic(const LieAlgebra& lie, const EpsBasis& eps);

/// V_{s x, t y} = V_{x, y} for nonzero s, t.
ReportDoc homogeneity_check(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x, const ElementVector& y,
                            const Rat& s, const Rat& t);

/// dim V_{x,y} <= b_g on `samples` seeded pairs.
ReportDoc dimension_bound_scan(const LieAlgebra& lie, const EpsBasis& eps, std::uint64_t seed, long height_bound,
                               unsigned samples);

}  // namespace commvar
