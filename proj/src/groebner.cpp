#include "commvar/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "commvar/errors.hpp"

namespace commvar {

std::string to_string(MonomialOrder o) {
  switch (o) {
    case MonomialOrder::DegRevLex: return "degrevlex";
  }
  return "unknown";
}

bool DegRevLex::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree(0, nvars), db = b.degree(0, nvars);
  if (da != db) return da < db;
  for (std::size_t i = nvars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

/// Terms in decreasing order.
using Terms = std::vector<std::pair<Monomial, Rat>>;

struct Poly {
  Terms terms;
  bool is_zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().first; }
  const Rat& lc() const { return terms.front().second; }
};

class Engine {
 public:
  explicit Engine(Ring ring) : ring_(ring), order_{ring.size()} {}

  Poly from_mpoly(const MPoly& p) const {
    Poly out;
    for (const auto& [m, c] : p.terms()) out.terms.emplace_back(m, c);
    sort(out);
    return out;
  }

  MPoly to_mpoly(const Poly& p) const {
    MPoly out(ring_);
    for (const auto& [m, c] : p.terms) out.add_term(m, c);
    return out;
  }

  void sort(Poly& p) const {
    std::sort(p.terms.begin(), p.terms.end(), [&](const auto& a, const auto& b) { return order_(b.first, a.first); });
  }

  void make_monic(Poly& p) const {
    if (p.is_zero()) return;
    const Rat inv = Rat(1) / p.lc();
    for (auto& [m, c] : p.terms) c *= inv;
  }

  Poly spoly(const Poly& f, const Poly& g) const {
    const Monomial l = Monomial::lcm(f.lm(), g.lm());
    std::map<Monomial, Rat, DegRevLex> acc(order_);
    const Monomial uf = l / f.lm(), ug = l / g.lm();
    const Rat cf = Rat(1) / f.lc(), cg = Rat(1) / g.lc();
    for (const auto& [m, c] : f.terms) accumulate(acc, m * uf, c * cf);
    for (const auto& [m, c] : g.terms) accumulate(acc, m * ug, -c * cg);
    return from_map(acc);
  }

  /// Full reduction of f modulo `basis`.
  Poly reduce(const Poly& f, const std::vector<Poly>& basis, std::size_t skip = SIZE_MAX) const {
    std::map<Monomial, Rat, DegRevLex> work(order_);
    for (const auto& [m, c] : f.terms) work.emplace(m, c);
    Terms rem;
    while (!work.empty()) {
      auto top = std::prev(work.end());
      const Monomial m = top->first;
      const Rat c = top->second;
      const Poly* div = nullptr;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i == skip || basis[i].is_zero()) continue;
        if (basis[i].lm().divides(m)) {
          div = &basis[i];
          break;
        }
      }
      if (!div) {
        rem.emplace_back(m, c);
        work.erase(top);
        continue;
      }
      const Monomial u = m / div->lm();
      const Rat scale = c / div->lc();
      for (const auto& [dm, dc] : div->terms) accumulate(work, dm * u, -dc * scale);
    }
    return Poly{std::move(rem)};
  }

  const DegRevLex& order() const { return order_; }

 private:
  static void accumulate(std::map<Monomial, Rat, DegRevLex>& acc, const Monomial& m, const Rat& c) {
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) acc.erase(it);
    }
  }

  static Poly from_map(const std::map<Monomial, Rat, DegRevLex>& acc) {
    Poly p;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) p.terms.emplace_back(it->first, it->second);
    return p;
  }

  Ring ring_;
  DegRevLex order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

void check_guards(const IdealPresentation& ideal) {
  if (ideal.ring.size() > kGroebnerMaxVars) throw CapabilityError("groebner: more than 16 variables");
  for (const auto& g : ideal.generators) {
    if (!(g.ring() == ideal.ring)) throw StructuralError("groebner: generator in a different ring");
    if (g.total_degree() > kGroebnerMaxDegree) throw CapabilityError("groebner: generator of total degree above 4");
  }
}

bool all_spolys_reduce(const Engine& eng, const std::vector<Poly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!eng.reduce(eng.spoly(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

}  // namespace

IdealPresentation make_ideal(Ring ring, const std::vector<MPoly>& generators) {
  IdealPresentation out{ring, {}};
  Engine eng(ring);
  std::vector<Poly> seen;
  for (const auto& g : generators) {
    if (!(g.ring() == ring)) throw StructuralError("make_ideal: generator in a different ring");
    if (g.is_zero()) continue;
    Poly p = eng.from_mpoly(g);
    eng.make_monic(p);
    bool dup = false;
    for (const auto& s : seen) dup = dup || s.terms == p.terms;
    if (dup) continue;
    seen.push_back(p);
    out.generators.push_back(g);
  }
  return out;
}

Monomial GroebnerBasis::leading_monomial(const MPoly& p) const {
  if (p.is_zero()) throw ContractError("leading monomial of zero");
  DegRevLex o{ring.size()};
  Monomial best = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms())
    if (o(best, m)) best = m;
  return best;
}

GroebnerBasis groebner_with_stats(const IdealPresentation& ideal, GroebnerStats& stats, MonomialOrder order) {
  check_guards(ideal);
  Engine eng(ideal.ring);
  std::vector<Poly> basis;
  for (const auto& g : ideal.generators) {
    Poly p = eng.reduce(eng.from_mpoly(g), basis);
    if (p.is_zero()) continue;
    eng.make_monic(p);
    basis.push_back(std::move(p));
  }
  std::vector<Pair> pairs;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].is_zero()) continue;
      ++stats.pairs_considered;
      if (Monomial::coprime(basis[i].lm(), basis[j].lm())) {
        ++stats.pairs_skipped_coprime;
        continue;
      }
      pairs.push_back({i, j, Monomial::lcm(basis[i].lm(), basis[j].lm())});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs(j);

  const DegRevLex& ord = eng.order();
  while (!pairs.empty()) {
    // normal strategy: smallest lcm first, ties by pair indices
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (ord(a.lcm, b.lcm)) return true;
      if (ord(b.lcm, a.lcm)) return false;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair p = *best;
    pairs.erase(best);
    Poly r = eng.reduce(eng.spoly(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) {
      ++stats.reductions_to_zero;
      continue;
    }
    eng.make_monic(r);
    basis.push_back(std::move(r));
    add_pairs(basis.size() - 1);
  }

  // minimal basis
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].lm().divides(basis[i].lm()) && (!(basis[j].lm() == basis[i].lm()) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // interreduce
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Poly head{{minimal[i].terms.front()}};
    Poly tail{Terms(minimal[i].terms.begin() + 1, minimal[i].terms.end())};
    Poly red = eng.reduce(tail, minimal, i);
    head.terms.insert(head.terms.end(), red.terms.begin(), red.terms.end());
    minimal[i] = std::move(head);
    eng.make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) { return ord(a.lm(), b.lm()); });

  if (!all_spolys_reduce(eng, minimal)) throw std::logic_error("groebner: self-verification failed");

  GroebnerBasis gb{ideal.ring, order, {}, {}};
  for (const auto& p : minimal) {
    gb.elements.push_back(eng.to_mpoly(p));
    gb.leading.push_back(p.lm());
  }
  return gb;
}

GroebnerBasis groebner(const IdealPresentation& ideal, MonomialOrder order) {
  GroebnerStats stats;
  return groebner_with_stats(ideal, stats, order);
}

MPoly normal_form(const GroebnerBasis& gb, const MPoly& f) {
  require_same_ring(gb.elements.empty() ? MPoly(gb.ring) : gb.elements.front(), f);
  Engine eng(gb.ring);
  std::vector<Poly> basis;
  for (const auto& g : gb.elements) basis.push_back(eng.from_mpoly(g));
  return eng.to_mpoly(eng.reduce(eng.from_mpoly(f), basis));
}

bool in_ideal(const GroebnerBasis& gb, const MPoly& f) { return normal_form(gb, f).is_zero(); }

bool verify_groebner(const GroebnerBasis& gb) {
  Engine eng(gb.ring);
  std::vector<Poly> basis;
  for (const auto& g : gb.elements) basis.push_back(eng.from_mpoly(g));
  return all_spolys_reduce(eng, basis);
}

namespace {

bool is_standard(const GroebnerBasis& gb, const Monomial& m) {
  for (const auto& lt : gb.leading)
    if (lt.divides(m)) return false;
  return true;
}

}  // namespace

std::size_t hilbert_function(const GroebnerBasis& gb, unsigned d) {
  if (d > kHilbertMaxDegree) throw CapabilityError("hilbert_function: degree above 8");
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(0, gb.ring.size(), d))
    if (is_standard(gb, m)) ++count;
  return count;
}

std::size_t ideal_dimension(const GroebnerBasis& gb, unsigned d) {
  return monomial_count(gb.ring.size(), d) - hilbert_function(gb, d);
}

std::size_t ideal_bidegree_dimension(const GroebnerBasis& gb, unsigned p, unsigned q) {
  if (gb.ring.nx != gb.ring.ny || gb.ring.naux != 0) throw StructuralError("bidegree dimension needs a bigraded ring");
  for (const auto& g : gb.elements) {
    const auto [a, b] = g.bidegree();
    if (!g.is_bihomogeneous(a, b)) throw ContractError("bidegree dimension needs a bihomogeneous basis");
  }
  std::size_t standard = 0;
  const auto monos = bidegree_slice_basis(gb.ring.nx, p, q);
  for (const auto& m : monos)
    if (is_standard(gb, m)) ++standard;
  return monos.size() - standard;
}

std::size_t krull_dimension(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring.size();
  for (const auto& lt : gb.leading)
    if (lt.degree() == 0) return 0;  // unit ideal: empty scheme, reported as 0
  std::vector<std::uint32_t> supports;
  for (const auto& lt : gb.leading) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lt[i] != 0) s |= 1u << i;
    supports.push_back(s);
  }
  std::size_t best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(set));
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

}  // namespace commvar
