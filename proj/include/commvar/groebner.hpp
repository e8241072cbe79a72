#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "commvar/mpoly.hpp"

namespace commvar {

enum class MonomialOrder { DegRevLex };

std::string to_string(MonomialOrder o);

/// Degree reverse lexicographic order on the variables of a ring, variable 0
/// senior (so the x-block is senior to the y-block). "Strictly less".
struct DegRevLex {
  std::size_t nvars = 0;
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct IdealPresentation {
  Ring ring;
  std::vector<MPoly> generators;
};

/// Drops zero generators and repeated ones (equal up to a scalar).
IdealPresentation make_ideal(Ring ring, const std::vector<MPoly>& generators);

/// Reduced Groebner basis: monic elements sorted by increasing leading
/// monomial.
struct GroebnerBasis {
  Ring ring;
  MonomialOrder order = MonomialOrder::DegRevLex;
  std::vector<MPoly> elements;
  std::vector<Monomial> leading;

  /// Largest monomial of p in the basis order.
  Monomial leading_monomial(const MPoly& p) const;
};

inline constexpr std::size_t kGroebnerMaxVars = 16;
inline constexpr int kGroebnerMaxDegree = 4;

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime-leading-term criterion. Guards: at most 16 variables and generator
/// total degree at most 4 (CapabilityError otherwise). The output is
/// self-verified: every S-polynomial reduces to zero, else std::logic_error.
GroebnerBasis groebner(const IdealPresentation& ideal, MonomialOrder order = MonomialOrder::DegRevLex);

/// Remainder of full reduction by the basis.
MPoly normal_form(const GroebnerBasis& gb, const MPoly& f);
bool in_ideal(const GroebnerBasis& gb, const MPoly& f);

/// True when every S-polynomial of basis pairs reduces to zero.
bool verify_groebner(const GroebnerBasis& gb);

/// Pair bookkeeping of one Buchberger run.
struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t reductions_to_zero = 0;
};
GroebnerBasis groebner_with_stats(const IdealPresentation& ideal, GroebnerStats& stats,
                                  MonomialOrder order = MonomialOrder::DegRevLex);

inline constexpr unsigned kHilbertMaxDegree = 8;

/// Standard monomials of total degree d (d <= 8).
std::size_t hilbert_function(const GroebnerBasis& gb, unsigned d);
/// Dimension of S / I: the largest set of variables carrying no leading
/// monomial.
std::size_t krull_dimension(const GroebnerBasis& gb);
/// dim I_d = #monomials of degree d - #standard monomials of degree d.
std::size_t ideal_dimension(const GroebnerBasis& gb, unsigned d);
/// dim I_(p,q) in a bigraded ring; the basis must be bihomogeneous.
std::size_t ideal_bidegree_dimension(const GroebnerBasis& gb, unsigned p, unsigned q);

}  // namespace commvar
