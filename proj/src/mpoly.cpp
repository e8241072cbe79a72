#include "commvar/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "commvar/errors.hpp"

namespace commvar {

std::string Ring::var_name(std::size_t i) const {
  if (i < nx) return "x" + std::to_string(i + 1);
  if (i < aux_begin()) return "y" + std::to_string(i - nx + 1);
  return "z" + std::to_string(i - aux_begin() + 1);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw CapabilityError("monomial: variable index out of range");
  if (e > 255) throw CapabilityError("monomial: exponent overflow");
  exps_[i] = static_cast<std::uint8_t>(e);
}

void Monomial::bump(std::size_t i, int delta) {
  const int e = int{exps_.at(i)} + delta;
  if (e < 0) throw ContractError("monomial: negative exponent");
  set(i, static_cast<unsigned>(e));
}

unsigned Monomial::degree(std::size_t begin, std::size_t end) const {
  unsigned d = 0;
  for (std::size_t i = begin; i < end && i < kMaxVars; ++i) d += exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > 255) throw CapabilityError("monomial: exponent overflow");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (other.exps_[i] > exps_[i]) throw ContractError("monomial: inexact division");
    m.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return m;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

namespace {

// -1, 0, 1 comparison of one block under grlex.
int compare_block(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  const unsigned da = a.degree(begin, end);
  const unsigned db = b.degree(begin, end);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = begin; i < end; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

bool BlockGrlex::operator()(const Monomial& a, const Monomial& b) const {
  if (int c = compare_block(a, b, 0, ring.nx); c != 0) return c < 0;
  if (int c = compare_block(a, b, ring.nx, ring.aux_begin()); c != 0) return c < 0;
  return compare_block(a, b, ring.aux_begin(), ring.size()) < 0;
}

MPoly::MPoly(Ring ring) : ring_(ring), terms_(BlockGrlex{ring}) {
  if (ring.size() > kMaxVars) throw CapabilityError("ring has more than 48 variables");
}

MPoly MPoly::constant(Ring ring, const Rat& c) { return term(ring, Monomial{}, c); }

MPoly MPoly::var(Ring ring, std::size_t index, const Rat& c) {
  if (index >= ring.size()) throw StructuralError("variable index outside the ring");
  Monomial m;
  m.set(index, 1);
  return term(ring, m, c);
}

MPoly MPoly::term(Ring ring, const Monomial& m, const Rat& c) {
  MPoly p(ring);
  p.add_term(m, c);
  return p;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rat MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

const std::pair<const Monomial, Rat>& MPoly::leading() const {
  if (terms_.empty()) throw ContractError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

void require_same_ring(const MPoly& a, const MPoly& b) {
  if (!(a.ring() == b.ring())) throw StructuralError("variable-universe mismatch");
}

std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw ContractError("division by the zero polynomial");
  const auto& [lm, lc] = g.leading();
  MPoly rest = f;
  MPoly q(f.ring());
  while (!rest.is_zero()) {
    const auto [m, c] = rest.leading();
    if (!lm.divides(m)) return std::nullopt;
    const MPoly t = MPoly::term(f.ring(), m / lm, c / lc);
    q += t;
    rest -= t * g;
  }
  return q;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  require_same_ring(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  require_same_ring(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, coef] : r.terms_) coef = -coef;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same_ring(a, b);
  MPoly r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(ring_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool MPoly::operator==(const MPoly& other) const {
  if (!(ring_ == other.ring_) || terms_.size() != other.terms_.size()) return false;
  auto it = other.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (!(m == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

std::pair<unsigned, unsigned> MPoly::bidegree() const {
  unsigned p = 0, q = 0;
  for (const auto& [m, c] : terms_) {
    p = std::max(p, m.degree(0, ring_.nx));
    q = std::max(q, m.degree(ring_.nx, ring_.aux_begin()));
  }
  return {p, q};
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

unsigned MPoly::aux_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(ring_.aux_begin(), ring_.size()));
  return d;
}

bool MPoly::is_bihomogeneous(unsigned p, unsigned q) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return t.first.degree(0, ring_.nx) == p && t.first.degree(ring_.nx, ring_.aux_begin()) == q;
  });
}

bool MPoly::is_homogeneous(unsigned d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.degree() == d; });
}

bool MPoly::depends_only_on(std::size_t begin, std::size_t end) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != m.degree(begin, end)) return false;
  return true;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[var];
    if (e == 0) continue;
    Monomial d = m;
    d.set(var, e - 1);
    r.add_term(d, c * e);
  }
  return r;
}

Rat MPoly::evaluate(std::span<const Rat> point) const {
  if (point.size() != ring_.size()) throw StructuralError("evaluation point has the wrong length");
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (std::size_t i = 0; i < ring_.size() && sgn(v) != 0; ++i) {
      for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
    }
    total += v;
  }
  return total;
}

MPoly MPoly::substitute(std::span<const MPoly> images, Ring target) const {
  if (images.size() != ring_.size()) throw StructuralError("substitution needs one image per variable");
  for (const auto& img : images)
    if (!(img.ring() == target)) throw StructuralError("substitution image in the wrong ring");
  std::vector<std::vector<MPoly>> powers(ring_.size());
  auto power = [&](std::size_t i, unsigned e) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  MPoly r(target);
  for (const auto& [m, c] : terms_) {
    MPoly t = constant(target, c);
    for (std::size_t i = 0; i < ring_.size(); ++i)
      if (m[i] != 0) t = t * power(i, m[i]);
    r += t;
  }
  return r;
}

MPoly MPoly::embed(Ring target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_.size()) throw StructuralError("embedding needs one target per variable");
  MPoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial n;
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (m[i] == 0) continue;
      if (var_map[i] >= target.size()) throw StructuralError("embedding target outside the ring");
      n.set(var_map[i], n[var_map[i]] + m[i]);
    }
    r.add_term(n, c);
  }
  return r;
}

MPoly MPoly::aux_coefficient(const Monomial& aux) const {
  MPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    bool match = true;
    for (std::size_t i = ring_.aux_begin(); i < ring_.size() && match; ++i) match = m[i] == aux[i];
    if (!match) continue;
    Monomial stripped = m;
    for (std::size_t i = ring_.aux_begin(); i < ring_.size(); ++i) stripped.set(i, 0);
    r.add_term(stripped, c);
  }
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat mag = abs(c);
    const bool neg = sgn(c) < 0;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    const bool unit = m.degree() > 0 && mag == 1;
    if (!unit) out << mag.get_str();
    bool need_star = !unit;
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      out << ring_.var_name(i);
      if (m[i] > 1) out << "^" << unsigned{m[i]};
      need_star = true;
    }
  }
  return out.str();
}

std::vector<Monomial> monomials_of_degree(std::size_t first, std::size_t count, unsigned deg) {
  std::vector<Monomial> out;
  if (count == 0) {
    if (deg == 0) out.emplace_back();
    return out;
  }
  if (first + count > kMaxVars) throw CapabilityError("monomials_of_degree: too many variables");
  // Lexicographically decreasing exponent vectors of fixed total degree.
  Monomial m;
  std::vector<unsigned> e(count, 0);
  e[0] = deg;
  while (true) {
    for (std::size_t i = 0; i < count; ++i) m.set(first + i, e[i]);
    out.push_back(m);
    // Next composition in decreasing lex order.
    std::size_t j = count - 1;
    // find rightmost position (excluding last) with a positive entry
    std::size_t k = count;
    for (std::size_t i = count - 1; i-- > 0;) {
      if (e[i] > 0) {
        k = i;
        break;
      }
    }
    if (k == count) break;
    const unsigned tail = e[j];
    e[j] = 0;
    e[k] -= 1;
    e[k + 1] = tail + 1;
  }
  return out;
}

std::vector<Monomial> bidegree_slice_basis(std::size_t n, unsigned p, unsigned q) {
  const auto xs = monomials_of_degree(0, n, p);
  const auto ys = monomials_of_degree(n, n, q);
  std::vector<Monomial> out;
  out.reserve(xs.size() * ys.size());
  for (const auto& a : xs)
    for (const auto& b : ys) out.push_back(a * b);
  return out;
}

std::size_t monomial_count(std::size_t n, unsigned d) {
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(static_cast<unsigned>(n + d - 1), d).get_ui();
}

}  // namespace commvar
