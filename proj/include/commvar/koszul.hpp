#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "commvar/groebner.hpp"
#include "commvar/lie_algebra.hpp"
#include "commvar/mpoly.hpp"
#include "commvar/report.hpp"

namespace commvar {

/// Basis element of (coefficient ring) (x) S (x) Lambda: a monomial (over
/// every polynomial variable in play) and a wedge of basis vectors, given as a
/// bit mask in increasing index order.
struct WedgeKey {
  Monomial mono;
  std::uint32_t mask = 0;
  bool operator<(const WedgeKey& o) const {
    if (mask != o.mask) return mask < o.mask;
    return mono.raw() < o.mono.raw();
  }
  bool operator==(const WedgeKey& o) const { return mask == o.mask && mono == o.mono; }
};

/// Sparse element: no zero coefficients stored.
using Chain = std::map<WedgeKey, Rat>;

void add_to(Chain& acc, const WedgeKey& k, const Rat& c);
Chain operator+(Chain a, const Chain& b);
Chain scaled(const Chain& a, const Rat& c);
/// Sign of e_A ^ e_B relative to e_{A u B}; 0 when A and B meet.
int wedge_sign(std::uint32_t a, std::uint32_t b);
/// Product in the supercommutative algebra S (x) Lambda.
Chain wedge(const Chain& a, const Chain& b);
/// p * a for a polynomial p sharing the monomial variable space.
Chain multiply(const MPoly& p, const Chain& a);
Chain basis_wedge(std::uint32_t mask);
/// sum_j v[j] e_{offset + j} as a 1-vector.
Chain vector_chain(const std::vector<Rat>& v, std::size_t offset = 0);
/// sum_j coeffs[j] e_j with polynomial coefficients.
Chain vector_chain(const std::vector<MPoly>& coeffs);

/// d(s (x) a) = sum_j ds/dz_j (x) e_j ^ a, z_j = variable `s_begin + j`.
Chain derham(const Chain& a, std::size_t s_begin, std::size_t s_count);
/// Koszul differential d(e_{i_1} ^ ... ^ e_{i_m}) = sum_t (-1)^t g_{i_t} e_{..no i_t..}.
Chain koszul_contract(const Chain& a, const std::vector<MPoly>& g);

using ChainMap = std::function<Chain(const Chain&)>;

struct SliceTerm {
  int degree = 0;
  std::vector<Chain> generators;
};

/// A finite complex: maps[j] sends terms[j] into terms[j + 1]. The map out
/// of the last term must vanish on it.
struct SliceComplex {
  Json selector = Json::object();
  std::vector<SliceTerm> terms;
  std::vector<ChainMap> maps;
};

inline constexpr std::size_t kSliceMaxDim = 5000;

struct SliceReport {
  Json selector = Json::object();
  std::vector<int> degrees;
  std::vector<std::size_t> dims;
  /// Rank of the map out of each term.
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> cohomology;
  bool dd_zero = true;
  /// d maps every term into the next one.
  bool closed = true;
  long euler_terms = 0;
  long euler_cohomology = 0;

  std::size_t cohomology_at(int degree) const;
  Json to_json() const;
};

/// Exact ranks; d o d = 0 and closure are checked on every generator, and the
/// Euler characteristic identity is asserted (std::logic_error).
SliceReport slice_cohomology(const SliceComplex& c);

enum class ComplexKind { D, Dk, DkVL, KkVL, Cg, DkgB };
std::string to_string(ComplexKind k);

struct ComplexParams {
  /// Dimension of V (D, Dk, DkVL, KkVL).
  std::size_t v_dim = 0;
  unsigned k = 0;
  /// Basis of the constant submodule L of V (DkVL, KkVL).
  std::vector<QVector> L;
  /// Add the augmentation term (DkVL: S^k L ^ eta; KkVL: theta_k; DkgB: S^k(B) eps check).
  bool augmented = false;
  const LieAlgebra* lie = nullptr;
};

/// Which finite piece: total degree (D) or (x, y)-bidegree of the multiplier
/// (Cg, DkgB). Ignored for the finite kinds Dk, DkVL, KkVL.
struct SliceSelector {
  unsigned p = 0;
  unsigned q = 0;
};

class GradedComplex {
 public:
  GradedComplex(ComplexKind kind, ComplexParams params);

  ComplexKind kind() const { return kind_; }
  const ComplexParams& params() const { return params_; }
  /// All selectors with total degree <= bound (a single one for finite kinds).
  std::vector<SliceSelector> slices_up_to(unsigned max_total_degree) const;
  SliceComplex slice(const SliceSelector& s) const;

  /// eps = wedge of the epsilon_i^(m) over I_0 (Cg, DkgB), or eta = wedge of
  /// the L basis (DkVL, KkVL).
  const Chain& top_wedge() const { return *top_; }
  /// Generators of S^k(B) eps in a DkgB slice (multiplier bidegree (p, q)).
  std::vector<Chain> symmetric_B_generators(const SliceSelector& s) const;

 private:
  ComplexKind kind_;
  ComplexParams params_;
  std::shared_ptr<const Chain> top_;
  std::vector<MPoly> commutator_pairings_;
  std::vector<std::vector<MPoly>> eps_coeffs_;
  std::vector<std::pair<unsigned, unsigned>> eps_bidegrees_;
};

/// Guards: dim V <= 8 (D, Dk, DkVL, KkVL), algebra rank <= 2 (Cg, DkgB).
GradedComplex build_complex(ComplexKind kind, ComplexParams params);

/// eps for the algebra, computed once per algebra and shared.
std::shared_ptr<const Chain> characteristic_wedge(const LieAlgebra& lie);

/// H^j(D_k(g, B)) = 0 for j != b_g on every bidegree slice of total degree
/// <= bound; with `check_top`, H^{b_g} is also compared with S^k(B) eps.
std::vector<SliceReport> property_P_slices(const LieAlgebra& lie, unsigned k, unsigned max_total_degree,
                                           bool check_top, std::vector<std::string>* problems);
ReportDoc property_P_check(const LieAlgebra& lie, unsigned k, unsigned max_total_degree);

/// C(g): no homology above b_g, and boundaries of degree b_g match I_g slice
/// by slice (dimension against the Groebner basis, membership by normal form).
ReportDoc c_complex_checks(const LieAlgebra& lie, unsigned max_total_degree);

/// H(D(V)) = k, D_k(V) acyclic, augmented D_k(V, E) acyclic.
std::vector<ReportDoc> lco1_checks(std::size_t max_v_dim, unsigned max_k, unsigned max_total_degree);

/// theta-kernel hypothesis, no H^0 for K_k, acyclic augmented K_k, and
/// D_k(V, L) concentrated in degree r.
ReportDoc pco2_property_check(std::size_t v_dim, const std::vector<QVector>& L, unsigned k);

}  // namespace commvar
