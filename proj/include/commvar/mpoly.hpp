#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "commvar/rat.hpp"

namespace commvar {

inline constexpr std::size_t kMaxVars = 48;

/// Variable universe of a polynomial ring: an x-block and a y-block of
/// coordinates on g (for k[g x g]) followed by an auxiliary block (shift
/// parameters, pencil coefficients, polarization variables of S(g)).
struct Ring {
  std::uint16_t nx = 0;
  std::uint16_t ny = 0;
  std::uint16_t naux = 0;

  static Ring bigraded(std::uint16_t n, std::uint16_t aux = 0) { return {n, n, aux}; }
  static Ring single(std::uint16_t n) { return {n, 0, 0}; }

  std::size_t size() const { return std::size_t{nx} + ny + naux; }
  std::size_t y_begin() const { return nx; }
  std::size_t aux_begin() const { return std::size_t{nx} + ny; }
  std::string var_name(std::size_t i) const;

  bool operator==(const Ring&) const = default;
};

/// Exponent vector. Unused trailing slots stay zero.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  void bump(std::size_t i, int delta);
  unsigned degree(std::size_t begin, std::size_t end) const;
  unsigned degree() const { return degree(0, kMaxVars); }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) on the argument: returns this / other.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  /// True when no variable occurs in both.
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  const std::array<std::uint8_t, kMaxVars>& raw() const { return exps_; }

 private:
  std::array<std::uint8_t, kMaxVars> exps_;
};

/// Graded-lexicographic order inside each block, x-block senior to
/// y-block senior to auxiliary block. operator() is "strictly less".
struct BlockGrlex {
  Ring ring;
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MPoly {
 public:
  using TermMap = std::map<Monomial, Rat, BlockGrlex>;

  explicit MPoly(Ring ring = {});

  static MPoly constant(Ring ring, const Rat& c);
  static MPoly var(Ring ring, std::size_t index, const Rat& c = 1);
  static MPoly term(Ring ring, const Monomial& m, const Rat& c);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rat& c);
  Rat coefficient(const Monomial& m) const;
  /// Largest term in the block order; requires a nonzero polynomial.
  const std::pair<const Monomial, Rat>& leading() const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Rat& c);
  MPoly operator-() const;
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  MPoly pow(unsigned e) const;

  bool operator==(const MPoly& other) const;

  /// (max x-block degree, max y-block degree); (0,0) for the zero polynomial.
  std::pair<unsigned, unsigned> bidegree() const;
  /// Total degree, -1 for zero.
  int total_degree() const;
  unsigned aux_degree() const;
  /// Zero counts as bihomogeneous of every bidegree.
  bool is_bihomogeneous(unsigned p, unsigned q) const;
  bool is_homogeneous(unsigned d) const;
  bool depends_only_on(std::size_t begin, std::size_t end) const;

  MPoly derivative(std::size_t var) const;
  Rat evaluate(std::span<const Rat> point) const;
  /// Replaces variable i by images[i] (all in `target`).
  MPoly substitute(std::span<const MPoly> images, Ring target) const;
  /// Renames variable i to var_map[i] in `target`.
  MPoly embed(Ring target, std::span<const std::size_t> var_map) const;
  /// Terms whose auxiliary-block exponent vector equals `aux`, with the
  /// auxiliary exponents stripped (the coefficient of that aux monomial).
  MPoly aux_coefficient(const Monomial& aux) const;

  std::string to_string() const;

 private:
  Ring ring_;
  TermMap terms_;
};

void require_same_ring(const MPoly& a, const MPoly& b);

/// q with f = q * g, or nullopt when g does not divide f.
std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g);

/// All monomials of total degree `deg` in variables [first, first + count),
/// listed in decreasing graded-lexicographic order.
std::vector<Monomial> monomials_of_degree(std::size_t first, std::size_t count, unsigned deg);

/// Monomials of exact bidegree (p, q) in Ring::bigraded(n), decreasing in
/// the block order.
std::vector<Monomial> bidegree_slice_basis(std::size_t n, unsigned p, unsigned q);

/// C(n + d - 1, d): number of monomials of degree d in n variables.
std::size_t monomial_count(std::size_t n, unsigned d);

}  // namespace commvar
