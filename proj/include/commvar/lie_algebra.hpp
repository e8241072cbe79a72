#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "commvar/qmatrix.hpp"
#include "commvar/rat.hpp"

namespace commvar {

/// Coordinates of an element of g in the algebra's fixed basis.
using ElementVector = QVector;

enum class Series { A };

struct AlgebraId {
  Series series = Series::A;
  unsigned rank = 1;

  /// Parses "A1".."A4".
  static AlgebraId parse(const std::string& text);
  std::string name() const;
};

enum class BasisKind { PositiveRoot, Coroot, NegativeRoot };

/// A simple Lie algebra given by structure constants in a Chevalley-style
/// basis: positive root vectors by height, then a coroot basis of the
/// Cartan subalgebra, then negative root vectors in matching order.
/// The invariant form is the trace form of the defining representation.
class LieAlgebra {
 public:
  /// Type A_r, 1 <= r <= 4. Every structural invariant is verified before
  /// returning; violations throw std::logic_error.
  static LieAlgebra build_simple(AlgebraId id);
  static LieAlgebra build_simple(Series series, unsigned rank) { return build_simple({series, rank}); }

  const AlgebraId& id() const { return id_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  std::size_t borel_dim() const { return borel_dim_; }
  /// b_g - rank.
  std::size_t n_value() const { return borel_dim_ - rank_; }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  const std::vector<std::string>& labels() const { return labels_; }
  BasisKind kind(std::size_t i) const { return kinds_.at(i); }
  std::vector<std::size_t> indices_of(BasisKind k) const;

  /// [b_i, b_j] = sum_k c(i, j, k) b_k
  const Rat& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }
  const QMatrix& form() const { return form_; }
  const QMatrix& form_inverse() const { return form_inv_; }

  ElementVector basis_vector(std::size_t i) const;
  ElementVector bracket(const ElementVector& u, const ElementVector& v) const;
  Rat pairing(const ElementVector& u, const ElementVector& v) const;
  /// Column j is [u, b_j].
  QMatrix ad(const ElementVector& u) const;

  /// Principal sl2-triple (e, h, f) with beta(h) = 2 on simple roots.
  ElementVector principal_e() const;
  ElementVector principal_h() const;
  ElementVector principal_f() const;

  /// Values alpha(H_c) of the positive root at basis index `root_index` on
  /// the coroot basis, in Cartan order.
  QVector root_on_cartan(std::size_t root_index) const;
  /// Index of the negative root vector paired with a positive one.
  std::size_t opposite(std::size_t root_index) const;

  /// Defining representation: n x n matrix of an element (n = rank + 1).
  QMatrix to_matrix(const ElementVector& u) const;
  const std::vector<QMatrix>& basis_matrices() const { return matrices_; }

 private:
  void verify() const;

  AlgebraId id_;
  std::size_t dim_ = 0;
  std::size_t rank_ = 0;
  std::size_t borel_dim_ = 0;
  std::vector<unsigned> degrees_;
  std::vector<std::string> labels_;
  std::vector<BasisKind> kinds_;
  std::vector<std::pair<unsigned, unsigned>> root_pairs_;  // (i, j) of E_ij for root vectors
  std::vector<QMatrix> matrices_;
  std::vector<Rat> structure_;
  QMatrix form_;
  QMatrix form_inv_;
};

/// Kernel basis of ad x.
std::vector<ElementVector> centralizer(const LieAlgebra& lie, const ElementVector& x);
bool is_regular(const LieAlgebra& lie, const ElementVector& x);
/// Deterministic in (seed, height_bound).
ElementVector sample_rational(const LieAlgebra& lie, std::uint64_t seed, long height_bound);

class RationalSampler;
ElementVector sample_rational(const LieAlgebra& lie, RationalSampler& sampler, long height_bound);

}  // namespace commvar
