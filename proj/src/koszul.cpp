#include "commvar/koszul.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>

#include "commvar/commuting.hpp"
#include "commvar/errors.hpp"
#include "commvar/invariants.hpp"
#include "commvar/qmatrix.hpp"

namespace commvar {

// ---------------------------------------------------------------------------
// chain algebra

void add_to(Chain& acc, const WedgeKey& k, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = acc.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

Chain operator+(Chain a, const Chain& b) {
  for (const auto& [k, c] : b) add_to(a, k, c);
  return a;
}

Chain scaled(const Chain& a, const Rat& c) {
  Chain out;
  if (sgn(c) == 0) return out;
  for (const auto& [k, v] : a) out.emplace(k, v * c);
  return out;
}

int wedge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int inversions = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(j + 1 < 32 ? a >> (j + 1) : 0u);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Chain wedge(const Chain& a, const Chain& b) {
  Chain out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      const int s = wedge_sign(ka.mask, kb.mask);
      if (s == 0) continue;
      add_to(out, WedgeKey{ka.mono * kb.mono, ka.mask | kb.mask}, s > 0 ? Rat(ca * cb) : Rat(-ca * cb));
    }
  return out;
}

Chain multiply(const MPoly& p, const Chain& a) {
  Chain out;
  for (const auto& [m, c] : p.terms())
    for (const auto& [k, v] : a) add_to(out, WedgeKey{k.mono * m, k.mask}, c * v);
  return out;
}

Chain basis_wedge(std::uint32_t mask) { return Chain{{WedgeKey{Monomial{}, mask}, Rat(1)}}; }

Chain vector_chain(const std::vector<Rat>& v, std::size_t offset) {
  Chain out;
  for (std::size_t j = 0; j < v.size(); ++j) add_to(out, WedgeKey{Monomial{}, 1u << (offset + j)}, v[j]);
  return out;
}

Chain vector_chain(const std::vector<MPoly>& coeffs) {
  Chain out;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    for (const auto& [m, c] : coeffs[j].terms()) add_to(out, WedgeKey{m, 1u << j}, c);
  return out;
}

Chain derham(const Chain& a, std::size_t s_begin, std::size_t s_count) {
  Chain out;
  for (const auto& [k, c] : a)
    for (std::size_t j = 0; j < s_count; ++j) {
      const unsigned e = k.mono[s_begin + j];
      if (e == 0) continue;
      const std::uint32_t bit = 1u << j;
      const int s = wedge_sign(bit, k.mask);
      if (s == 0) continue;
      Monomial m = k.mono;
      m.set(s_begin + j, e - 1);
      add_to(out, WedgeKey{m, k.mask | bit}, c * Rat(s * static_cast<long>(e)));
    }
  return out;
}

Chain koszul_contract(const Chain& a, const std::vector<MPoly>& g) {
  Chain out;
  for (const auto& [k, c] : a) {
    int t = 0;
    for (std::uint32_t rest = k.mask; rest != 0; rest &= rest - 1, ++t) {
      const int i = std::countr_zero(rest);
      const std::uint32_t mask = k.mask & ~(1u << i);
      const Rat sc = t % 2 == 0 ? Rat(c) : Rat(-c);
      for (const auto& [m, gc] : g.at(static_cast<std::size_t>(i)).terms())
        add_to(out, WedgeKey{k.mono * m, mask}, sc * gc);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// slice cohomology

std::size_t SliceReport::cohomology_at(int degree) const {
  for (std::size_t j = 0; j < degrees.size(); ++j)
    if (degrees[j] == degree) return cohomology[j];
  return 0;
}

Json SliceReport::to_json() const {
  Json j;
  j["selector"] = selector;
  j["degrees"] = degrees;
  j["dims"] = dims;
  j["ranks"] = ranks;
  j["cohomology"] = cohomology;
  j["dd_zero"] = dd_zero;
  j["closed"] = closed;
  return j;
}

namespace {

class Coordinates {
 public:
  SparseVec operator()(const Chain& c) {
    SparseVec v;
    v.reserve(c.size());
    for (const auto& [k, x] : c) {
      auto [it, inserted] = index_.try_emplace(k, static_cast<std::uint32_t>(index_.size()));
      v.emplace_back(it->second, x);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

 private:
  std::map<WedgeKey, std::uint32_t> index_;
};

}  // namespace

SliceReport slice_cohomology(const SliceComplex& c) {
  if (c.maps.size() != c.terms.size()) throw StructuralError("slice complex: one map per term required");
  const std::size_t T = c.terms.size();
  SliceReport r;
  r.selector = c.selector;
  Coordinates coords;
  std::vector<SparseEchelon> spans(T);
  for (std::size_t j = 0; j < T; ++j) {
    r.degrees.push_back(c.terms[j].degree);
    for (const auto& g : c.terms[j].generators) spans[j].insert(coords(g));
    if (spans[j].rank() > kSliceMaxDim) throw CapabilityError("slice term dimension above 5000");
    r.dims.push_back(spans[j].rank());
  }
  for (std::size_t j = 0; j < T; ++j) {
    SparseEchelon image;
    for (const auto& g : c.terms[j].generators) {
      const Chain dg = c.maps[j](g);
      if (dg.empty()) continue;
      if (j + 1 == T) {
        r.closed = false;
        continue;
      }
      const SparseVec v = coords(dg);
      if (!spans[j + 1].contains(v)) r.closed = false;
      image.insert(v);
      if (!c.maps[j + 1](dg).empty()) r.dd_zero = false;
    }
    r.ranks.push_back(image.rank());
  }
  for (std::size_t j = 0; j < T; ++j) {
    const std::size_t in = j == 0 ? 0 : r.ranks[j - 1];
    if (r.ranks[j] + in > r.dims[j]) throw std::logic_error("slice cohomology: ranks exceed the term dimension");
    r.cohomology.push_back(r.dims[j] - r.ranks[j] - in);
    const long sign = (r.degrees[j] % 2 == 0) ? 1 : -1;
    r.euler_terms += sign * static_cast<long>(r.dims[j]);
    r.euler_cohomology += sign * static_cast<long>(r.cohomology[j]);
  }
  if (r.dd_zero && r.closed && r.euler_terms != r.euler_cohomology)
    throw std::logic_error("slice cohomology: Euler characteristic mismatch");
  return r;
}

// ---------------------------------------------------------------------------
// complexes

std::string to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::D: return "D";
    case ComplexKind::Dk: return "Dk";
    case ComplexKind::DkVL: return "DkVL";
    case ComplexKind::KkVL: return "KkVL";
    case ComplexKind::Cg: return "Cg";
    case ComplexKind::DkgB: return "DkgB";
  }
  return "unknown";
}

namespace {

std::vector<std::uint32_t> masks_of_size(std::size_t n, unsigned size) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (static_cast<unsigned>(std::popcount(m)) == size) out.push_back(m);
  return out;
}

Chain monomial_chain(const Monomial& m, const Chain& a) {
  Chain out;
  for (const auto& [k, c] : a) out.emplace(WedgeKey{k.mono * m, k.mask}, c);
  return out;
}

/// Linear form sum_j v[j] z_j in Ring::single(n).
MPoly linear_form(const QVector& v) {
  const Ring ring = Ring::single(static_cast<std::uint16_t>(v.size()));
  MPoly p(ring);
  for (std::size_t j = 0; j < v.size(); ++j) p += MPoly::var(ring, j, v[j]);
  return p;
}

/// All exponent vectors of length r summing to k.
void compositions(unsigned r, unsigned k, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (cur.size() + 1 == r) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned a = k + 1; a-- > 0;) {
    cur.push_back(a);
    compositions(r, k - a, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> compositions(unsigned r, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  if (r == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  compositions(r, k, cur, out);
  return out;
}

/// eta^s = prod_a (linear form of L_a)^{s_a} in Ring::single(dim V).
MPoly l_power(const std::vector<QVector>& L, const std::vector<unsigned>& s, std::size_t v_dim) {
  MPoly p = MPoly::constant(Ring::single(static_cast<std::uint16_t>(v_dim)), 1);
  for (std::size_t a = 0; a < L.size(); ++a) p = p * linear_form(L[a]).pow(s[a]);
  return p;
}

Chain wedge_of_vectors(const std::vector<QVector>& L) {
  Chain acc = basis_wedge(0);
  for (const auto& v : L) acc = wedge(acc, vector_chain(v));
  return acc;
}

}  // namespace

std::shared_ptr<const Chain> characteristic_wedge(const LieAlgebra& lie) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Chain>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(lie.id().name());
  if (it != cache.end()) return it->second;
  const PolFamily fam = invariant_generators(lie);
  Chain acc = basis_wedge(0);
  for (const auto& g : epsilon_family(lie, fam)) acc = wedge(acc, vector_chain(g.coeffs));
  if (acc.empty()) throw std::logic_error("characteristic wedge vanishes identically");
  auto ptr = std::make_shared<const Chain>(std::move(acc));
  cache.emplace(lie.id().name(), ptr);
  return ptr;
}

GradedComplex::GradedComplex(ComplexKind kind, ComplexParams params) : kind_(kind), params_(std::move(params)) {
  switch (kind_) {
    case ComplexKind::D:
    case ComplexKind::Dk:
      top_ = std::make_shared<const Chain>(basis_wedge(0));
      break;
    case ComplexKind::DkVL:
    case ComplexKind::KkVL: {
      if (params_.L.empty()) throw ContractError("L must have positive rank");
      for (const auto& v : params_.L)
        if (v.size() != params_.v_dim) throw StructuralError("L vector of the wrong length");
      Chain eta = wedge_of_vectors(params_.L);
      if (eta.empty()) throw ContractError("L basis is not linearly independent");
      top_ = std::make_shared<const Chain>(std::move(eta));
      if (kind_ == ComplexKind::KkVL && 2 * params_.L.size() <= params_.v_dim)
        throw ContractError("K_k(V, L) needs 2 r > dim V");
      break;
    }
    case ComplexKind::Cg:
    case ComplexKind::DkgB: {
      const LieAlgebra& lie = *params_.lie;
      top_ = characteristic_wedge(lie);
      commutator_pairings_ = commuting_ideal(lie).generators;
      if (kind_ == ComplexKind::DkgB) {
        const std::size_t N = lie.dim();
        const Ring big{static_cast<std::uint16_t>(N), static_cast<std::uint16_t>(N), static_cast<std::uint16_t>(N)};
        std::vector<std::size_t> ident(2 * N);
        for (std::size_t i = 0; i < 2 * N; ++i) ident[i] = i;
        for (const auto& g : epsilon_family(lie, invariant_generators(lie))) {
          std::vector<MPoly> c;
          for (const auto& p : g.coeffs) c.push_back(p.embed(big, ident));
          eps_coeffs_.push_back(std::move(c));
          eps_bidegrees_.emplace_back(g.px, g.py);
        }
      }
      break;
    }
  }
}

GradedComplex build_complex(ComplexKind kind, ComplexParams params) {
  switch (kind) {
    case ComplexKind::D:
    case ComplexKind::Dk:
    case ComplexKind::DkVL:
    case ComplexKind::KkVL:
      if (params.v_dim == 0 || params.v_dim > 8) throw CapabilityError("complex guard: 1 <= dim V <= 8");
      break;
    case ComplexKind::Cg:
    case ComplexKind::DkgB:
      if (!params.lie) throw ContractError("complex needs an algebra");
      if (params.lie->rank() > 2) throw CapabilityError("complex guard: algebra rank <= 2");
      break;
  }
  return GradedComplex(kind, std::move(params));
}

std::vector<SliceSelector> GradedComplex::slices_up_to(unsigned max_total_degree) const {
  std::vector<SliceSelector> out;
  switch (kind_) {
    case ComplexKind::D:
      for (unsigned s = 0; s <= max_total_degree; ++s) out.push_back({s, 0});
      break;
    case ComplexKind::Dk:
    case ComplexKind::DkVL:
    case ComplexKind::KkVL:
      out.push_back({params_.k, 0});
      break;
    case ComplexKind::Cg:
    case ComplexKind::DkgB:
      for (unsigned t = 0; t <= max_total_degree; ++t)
        for (unsigned p = t + 1; p-- > 0;) out.push_back({p, t - p});
      break;
  }
  return out;
}

SliceComplex GradedComplex::slice(const SliceSelector& s) const {
  SliceComplex c;
  const Chain& top = *top_;
  switch (kind_) {
    case ComplexKind::D:
    case ComplexKind::Dk: {
      const std::size_t n = params_.v_dim;
      const unsigned k = kind_ == ComplexKind::D ? s.p : params_.k;
      c.selector = {{"kind", to_string(kind_)}, {"dim_V", n}, {"k", k}};
      for (unsigned i = 0; i <= k && i <= n; ++i) {
        SliceTerm t{static_cast<int>(i), {}};
        for (const auto& m : monomials_of_degree(0, n, k - i))
          for (auto mask : masks_of_size(n, i)) t.generators.push_back(Chain{{WedgeKey{m, mask}, Rat(1)}});
        c.terms.push_back(std::move(t));
        c.maps.push_back([n](const Chain& a) { return derham(a, 0, n); });
      }
      break;
    }
    case ComplexKind::DkVL: {
      const std::size_t n = params_.v_dim;
      const unsigned k = params_.k;
      const int r = static_cast<int>(params_.L.size());
      c.selector = {{"kind", "DkVL"}, {"dim_V", n}, {"r", r}, {"k", k}, {"augmented", params_.augmented}};
      if (params_.augmented) {
        SliceTerm aug{r - 1, {}};
        for (const auto& sv : compositions(static_cast<unsigned>(r), k))
          aug.generators.push_back(multiply(l_power(params_.L, sv, n), top));
        c.terms.push_back(std::move(aug));
        c.maps.push_back([](const Chain& a) { return a; });
      }
      for (unsigned i = 0; i <= k && i <= n; ++i) {
        SliceTerm t{r + static_cast<int>(i), {}};
        for (auto mask : masks_of_size(n, i)) {
          const Chain w = wedge(basis_wedge(mask), top);
          if (w.empty()) continue;
          for (const auto& m : monomials_of_degree(0, n, k - i)) t.generators.push_back(monomial_chain(m, w));
        }
        c.terms.push_back(std::move(t));
        c.maps.push_back([n](const Chain& a) { return derham(a, 0, n); });
      }
      break;
    }
    case ComplexKind::KkVL: {
      const std::size_t n = params_.v_dim;
      const unsigned k = params_.k;
      const unsigned r = static_cast<unsigned>(params_.L.size());
      c.selector = {{"kind", "KkVL"}, {"dim_V", n}, {"r", r}, {"k", k}, {"augmented", params_.augmented}};
      for (unsigned i = 0; i <= k && i <= n; ++i) {
        SliceTerm t{static_cast<int>(i), {}};
        for (auto mask : masks_of_size(n, i))
          for (const auto& sv : compositions(r, k - i))
            t.generators.push_back(multiply(l_power(params_.L, sv, n), basis_wedge(mask)));
        c.terms.push_back(std::move(t));
        if (params_.augmented && i == k) {
          c.maps.push_back([top](const Chain& a) { return wedge(a, top); });
        } else {
          c.maps.push_back([n](const Chain& a) { return derham(a, 0, n); });
        }
      }
      if (params_.augmented) {
        SliceTerm t{static_cast<int>(k) + 1, {}};
        for (auto mask : masks_of_size(n, k)) {
          Chain w = wedge(basis_wedge(mask), top);
          if (!w.empty()) t.generators.push_back(std::move(w));
        }
        c.terms.push_back(std::move(t));
        c.maps.push_back([n](const Chain& a) { return derham(a, 0, n); });
      }
      break;
    }
    case ComplexKind::Cg: {
      const LieAlgebra& lie = *params_.lie;
      const std::size_t N = lie.dim();
      const int b = static_cast<int>(lie.borel_dim());
      const unsigned n = static_cast<unsigned>(lie.n_value());
      c.selector = {{"kind", "Cg"}, {"algebra", lie.id().name()}, {"bidegree", {s.p, s.q}}};
      const auto g = commutator_pairings_;
      for (unsigned i = n + 1; i-- > 0;) {
        SliceTerm t{b + static_cast<int>(i), {}};
        if (i <= s.p && i <= s.q) {
          const auto monos = bidegree_slice_basis(N, s.p - i, s.q - i);
          for (auto mask : masks_of_size(N, i)) {
            const Chain w = wedge(basis_wedge(mask), top);
            if (w.empty()) continue;
            for (const auto& m : monos) t.generators.push_back(monomial_chain(m, w));
          }
        }
        c.terms.push_back(std::move(t));
        c.maps.push_back([g](const Chain& a) { return koszul_contract(a, g); });
      }
      break;
    }
    case ComplexKind::DkgB: {
      const LieAlgebra& lie = *params_.lie;
      const std::size_t N = lie.dim();
      const int b = static_cast<int>(lie.borel_dim());
      const unsigned k = params_.k;
      c.selector = {{"kind", "DkgB"}, {"algebra", lie.id().name()}, {"k", k}, {"bidegree", {s.p, s.q}}};
      const auto monos = bidegree_slice_basis(N, s.p, s.q);
      for (unsigned i = 0; i <= k; ++i) {
        SliceTerm t{b + static_cast<int>(i), {}};
        const auto zmonos = monomials_of_degree(2 * N, N, k - i);
        for (auto mask : masks_of_size(N, i)) {
          const Chain w = wedge(basis_wedge(mask), top);
          if (w.empty()) continue;
          for (const auto& m : monos)
            for (const auto& z : zmonos) t.generators.push_back(monomial_chain(m * z, w));
        }
        c.terms.push_back(std::move(t));
        c.maps.push_back([N](const Chain& a) { return derham(a, 2 * N, N); });
      }
      break;
    }
  }
  return c;
}

std::vector<Chain> GradedComplex::symmetric_B_generators(const SliceSelector& s) const {
  if (kind_ != ComplexKind::DkgB) throw ContractError("symmetric_B_generators: DkgB only");
  const LieAlgebra& lie = *params_.lie;
  const std::size_t N = lie.dim();
  const Ring big{static_cast<std::uint16_t>(N), static_cast<std::uint16_t>(N), static_cast<std::uint16_t>(N)};
  std::vector<MPoly> linear;  // epsilon_a(x, y) paired with z
  for (const auto& coeffs : eps_coeffs_) {
    MPoly p(big);
    for (std::size_t j = 0; j < N; ++j)
      if (!coeffs[j].is_zero()) p += coeffs[j] * MPoly::var(big, 2 * N + j);
    linear.push_back(std::move(p));
  }
  std::vector<Chain> out;
  const std::size_t B = linear.size();
  std::vector<std::size_t> pick(params_.k, 0);
  // multisets a_1 <= ... <= a_k of I_0
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == params_.k) {
      MPoly prod = MPoly::constant(big, 1);
      unsigned u = 0, v = 0;
      for (auto a : pick) {
        prod = prod * linear[a];
        u += eps_bidegrees_[a].first;
        v += eps_bidegrees_[a].second;
      }
      if (u > s.p || v > s.q) return;
      for (const auto& m : bidegree_slice_basis(N, s.p - u, s.q - v))
        out.push_back(multiply(prod * MPoly::term(big, m, 1), *top_));
      return;
    }
    for (std::size_t a = from; a < B; ++a) {
      pick[pos] = a;
      rec(pos + 1, a);
    }
  };
  rec(0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// checks

std::vector<SliceReport> property_P_slices(const LieAlgebra& lie, unsigned k, unsigned max_total_degree,
                                           bool check_top, std::vector<std::string>* problems) {
  ComplexParams params;
  params.lie = &lie;
  params.k = k;
  const GradedComplex cx = build_complex(ComplexKind::DkgB, params);
  const int b = static_cast<int>(lie.borel_dim());
  std::vector<SliceReport> out;
  // independent dimension of (Lambda^i g ^ eps) in a multiplier bidegree
  auto wedge_part_dim = [&](unsigned i, const SliceSelector& s) {
    SparseEchelon e;
    Coordinates coords;
    const auto monos = bidegree_slice_basis(lie.dim(), s.p, s.q);
    for (auto mask : masks_of_size(lie.dim(), i)) {
      const Chain w = wedge(basis_wedge(mask), cx.top_wedge());
      if (w.empty()) continue;
      for (const auto& m : monos) e.insert(coords(monomial_chain(m, w)));
    }
    return e.rank();
  };
  for (const auto& sel : cx.slices_up_to(max_total_degree)) {
    const SliceComplex sc = cx.slice(sel);
    SliceReport rep = slice_cohomology(sc);
    const std::string tag = "(" + std::to_string(sel.p) + "," + std::to_string(sel.q) + ")";
    if (problems) {
      if (!rep.dd_zero) problems->push_back("d o d != 0 on slice " + tag);
      if (!rep.closed) problems->push_back("slice " + tag + " not closed under d");
      for (std::size_t j = 0; j < rep.degrees.size(); ++j)
        if (rep.degrees[j] != b && rep.cohomology[j] != 0)
          problems->push_back("H^" + std::to_string(rep.degrees[j]) + " != 0 on slice " + tag);
      for (unsigned i = 0; i <= k; ++i) {
        const std::size_t predicted =
            monomial_count(lie.dim(), k - i) * wedge_part_dim(i, sel);
        if (predicted != rep.dims[i]) problems->push_back("term dimension mismatch at degree b+" + std::to_string(i) + " on " + tag);
      }
    }
    if (check_top) {
      Coordinates coords;
      SparseEchelon term0, sym;
      for (const auto& g : sc.terms[0].generators) term0.insert(coords(g));
      bool cocycles = true, inside = true;
      for (const auto& g : cx.symmetric_B_generators(sel)) {
        if (!sc.maps[0](g).empty()) cocycles = false;
        const SparseVec v = coords(g);
        if (!term0.contains(v)) inside = false;
        sym.insert(v);
      }
      const std::size_t top = rep.cohomology_at(b);
      if (problems && (!cocycles || !inside || sym.rank() != top))
        problems->push_back("H^b != S^k(B) eps on slice " + tag + " (dim " + std::to_string(sym.rank()) + " vs " +
                            std::to_string(top) + ")");
    }
    out.push_back(std::move(rep));
  }
  return out;
}

ReportDoc property_P_check(const LieAlgebra& lie, unsigned k, unsigned max_total_degree) {
  ReportDoc doc = make_report("complexes", "property-P/" + lie.id().name() + "/k=" + std::to_string(k),
                              "D_k(g, B_g) has no cohomology outside degree b_g on every bidegree slice up to the "
                              "degree bound (slice evidence; degree-b_g cohomology compared with S^k(B_g) eps)");
  std::vector<std::string> problems;
  const auto reps = property_P_slices(lie, k, max_total_degree, true, &problems);
  Json slices = Json::array();
  std::size_t total_top = 0;
  for (const auto& r : reps) {
    slices.push_back(r.to_json());
    total_top += r.cohomology_at(static_cast<int>(lie.borel_dim()));
  }
  doc.witness["max_total_degree"] = max_total_degree;
  doc.witness["slices"] = reps.size();
  doc.witness["top_cohomology_total"] = total_top;
  if (!problems.empty()) {
    doc.status = Status::Fail;
    doc.witness["problems"] = problems;
    doc.witness["slice_reports"] = slices;
  }
  return doc;
}

ReportDoc c_complex_checks(const LieAlgebra& lie, unsigned max_total_degree) {
  ReportDoc doc = make_report("complexes", "c-complex/" + lie.id().name(),
                              "C(g) has no homology in degrees above b_g on every bidegree slice up to the degree "
                              "bound, and its degree-b_g boundaries are I_g eps slice by slice");
  ComplexParams params;
  params.lie = &lie;
  const GradedComplex cx = build_complex(ComplexKind::Cg, params);
  const GroebnerBasis gb = groebner(commuting_ideal(lie));
  const int b = static_cast<int>(lie.borel_dim());
  const Chain& eps = cx.top_wedge();
  // pivot component of eps used to expand boundaries
  const std::uint32_t mask0 = eps.begin()->first.mask;
  const Ring ring = Ring::bigraded(static_cast<std::uint16_t>(lie.dim()));
  auto component = [&](const Chain& a, std::uint32_t mask) {
    MPoly p(ring);
    for (const auto& [k, c] : a)
      if (k.mask == mask) p.add_term(k.mono, c);
    return p;
  };
  const MPoly eps0 = component(eps, mask0);

  std::vector<std::string> problems;
  Json table = Json::array();
  std::size_t membership_checks = 0;
  for (const auto& sel : cx.slices_up_to(max_total_degree)) {
    const SliceComplex sc = cx.slice(sel);
    const SliceReport rep = slice_cohomology(sc);
    const std::string tag = "(" + std::to_string(sel.p) + "," + std::to_string(sel.q) + ")";
    if (!rep.dd_zero) problems.push_back("d o d != 0 on slice " + tag);
    if (!rep.closed) problems.push_back("slice " + tag + " not closed under d");
    for (std::size_t j = 0; j < rep.degrees.size(); ++j)
      if (rep.degrees[j] > b && rep.cohomology[j] != 0)
        problems.push_back("H_" + std::to_string(rep.degrees[j]) + " != 0 on slice " + tag);
    // boundaries of degree b: image of the map out of the degree b+1 term
    std::size_t boundary_dim = 0;
    for (std::size_t j = 0; j < rep.degrees.size(); ++j)
      if (rep.degrees[j] == b + 1) boundary_dim = rep.ranks[j];
    const std::size_t ideal_dim = ideal_bidegree_dimension(gb, sel.p, sel.q);
    if (boundary_dim != ideal_dim)
      problems.push_back("boundary dim " + std::to_string(boundary_dim) + " != dim I_g " + std::to_string(ideal_dim) +
                         " on slice " + tag);
    for (std::size_t j = 0; j < sc.terms.size(); ++j) {
      if (sc.terms[j].degree != b + 1) continue;
      for (const auto& g : sc.terms[j].generators) {
        const Chain bd = sc.maps[j](g);
        if (bd.empty()) continue;
        ++membership_checks;
        const auto f = divide_exact(component(bd, mask0), eps0);
        if (!f || !(multiply(*f, eps) == bd)) {
          problems.push_back("boundary not a multiple of eps on slice " + tag);
          continue;
        }
        if (!in_ideal(gb, *f)) problems.push_back("boundary coefficient outside I_g on slice " + tag);
      }
    }
    table.push_back({{"bidegree", {sel.p, sel.q}},
                     {"dims", rep.dims},
                     {"homology", rep.cohomology},
                     {"boundary_dim", boundary_dim},
                     {"ideal_dim", ideal_dim}});
  }
  doc.witness["max_total_degree"] = max_total_degree;
  doc.witness["membership_checks"] = membership_checks;
  doc.witness["slices"] = table;
  if (!problems.empty()) {
    doc.status = Status::Fail;
    doc.witness["problems"] = problems;
  }
  return doc;
}

std::vector<ReportDoc> lco1_checks(std::size_t max_v_dim, unsigned max_k, unsigned max_total_degree) {
  ReportDoc d1 = make_report("complexes", "lco1-i", "the cohomology of D(V) is the scalars, in degree 0");
  ReportDoc d2 = make_report("complexes", "lco1-ii", "D_k(V) is acyclic for k >= 1");
  ReportDoc d3 = make_report("complexes", "lco1-iii", "the augmented complex D_k(V, E) is acyclic for k >= 1");
  Json f1 = Json::array(), f2 = Json::array(), f3 = Json::array();
  std::size_t n1 = 0, n2 = 0, n3 = 0;
  for (std::size_t n = 1; n <= max_v_dim; ++n) {
    ComplexParams p;
    p.v_dim = n;
    const GradedComplex D = build_complex(ComplexKind::D, p);
    for (const auto& sel : D.slices_up_to(max_total_degree)) {
      const SliceReport r = slice_cohomology(D.slice(sel));
      ++n1;
      std::size_t total = 0;
      for (auto h : r.cohomology) total += h;
      const bool ok = r.dd_zero && r.closed &&
                      (sel.p == 0 ? (total == 1 && r.cohomology_at(0) == 1) : total == 0);
      if (!ok) f1.push_back(r.to_json());
    }
    for (unsigned k = 1; k <= max_k; ++k) {
      ComplexParams pk = p;
      pk.k = k;
      const GradedComplex Dk = build_complex(ComplexKind::Dk, pk);
      const SliceReport r = slice_cohomology(Dk.slice({k, 0}));
      ++n2;
      std::size_t total = 0;
      for (auto h : r.cohomology) total += h;
      if (!r.dd_zero || !r.closed || total != 0) f2.push_back(r.to_json());

      // every coordinate line E = span(e_j), and one generic line
      std::vector<QVector> lines;
      for (std::size_t j = 0; j < n; ++j) {
        QVector e(n);
        e[j] = 1;
        lines.push_back(e);
      }
      QVector generic(n);
      for (std::size_t j = 0; j < n; ++j) generic[j] = Rat(static_cast<long>(j + 1));
      lines.push_back(generic);
      for (const auto& E : lines) {
        ComplexParams pe = pk;
        pe.L = {E};
        pe.augmented = true;
        const GradedComplex DE = build_complex(ComplexKind::DkVL, pe);
        const SliceReport re = slice_cohomology(DE.slice({k, 0}));
        ++n3;
        std::size_t t = 0;
        for (auto h : re.cohomology) t += h;
        if (!re.dd_zero || !re.closed || t != 0) f3.push_back({{"E", rat_array(E)}, {"report", re.to_json()}});
      }
    }
  }
  d1.witness["instances"] = n1;
  d2.witness["instances"] = n2;
  d3.witness["instances"] = n3;
  for (auto* d : {&d1, &d2, &d3}) {
    d->witness["max_dim_V"] = max_v_dim;
    d->witness["max_k"] = max_k;
  }
  d1.witness["max_total_degree"] = max_total_degree;
  if (!f1.empty()) d1.status = Status::Fail, d1.witness["failures"] = f1;
  if (!f2.empty()) d2.status = Status::Fail, d2.witness["failures"] = f2;
  if (!f3.empty()) d3.status = Status::Fail, d3.witness["failures"] = f3;
  return {d1, d2, d3};
}

ReportDoc pco2_property_check(std::size_t v_dim, const std::vector<QVector>& L, unsigned k) {
  const std::size_t r = L.size();
  ReportDoc doc = make_report(
      "complexes", "pco2/dimV=" + std::to_string(v_dim) + "/r=" + std::to_string(r) + "/k=" + std::to_string(k),
      "for constant L of rank r with 2r > dim V: ker theta_i = Lambda^{i-1} V ^ L, K_k(V, L) has no degree-0 "
      "cohomology, the augmented K_k(V, L) is acyclic, and D_k(V, L) has cohomology only in degree r");
  if (2 * r <= v_dim) throw ContractError("pco2: needs 2 r > dim V");
  doc.witness["k_in_defining_range"] = k <= v_dim - r;
  std::vector<std::string> problems;

  // theta-kernel hypothesis, by ranks
  ComplexParams base;
  base.v_dim = v_dim;
  base.L = L;
  const Chain eta = wedge_of_vectors(L);
  Json theta = Json::array();
  for (unsigned i = 1; i <= k; ++i) {
    Coordinates coords;
    SparseEchelon image, sub;
    const auto masks = masks_of_size(v_dim, i);
    for (auto m : masks) image.insert(coords(wedge(basis_wedge(m), eta)));
    const std::size_t kernel_dim = masks.size() - image.rank();
    bool killed = true;
    for (auto m : masks_of_size(v_dim, i - 1))
      for (const auto& l : L) {
        const Chain w = wedge(basis_wedge(m), vector_chain(l));
        if (w.empty()) continue;
        sub.insert(coords(w));
        if (!wedge(w, eta).empty()) killed = false;
      }
    theta.push_back({{"i", i}, {"kernel_dim", kernel_dim}, {"subspace_dim", sub.rank()}, {"contained", killed}});
    if (!killed || sub.rank() != kernel_dim) problems.push_back("theta-kernel hypothesis fails at i=" + std::to_string(i));
  }
  doc.witness["theta_kernel"] = theta;

  ComplexParams pk = base;
  pk.k = k;
  const SliceReport K = slice_cohomology(build_complex(ComplexKind::KkVL, pk).slice({k, 0}));
  if (K.cohomology_at(0) != 0) problems.push_back("K_k has degree-0 cohomology");
  pk.augmented = true;
  const SliceReport Kbar = slice_cohomology(build_complex(ComplexKind::KkVL, pk).slice({k, 0}));
  for (auto h : Kbar.cohomology)
    if (h != 0) problems.push_back("augmented K_k is not acyclic");
  pk.augmented = false;
  const SliceReport D = slice_cohomology(build_complex(ComplexKind::DkVL, pk).slice({k, 0}));
  for (std::size_t j = 0; j < D.degrees.size(); ++j)
    if (D.degrees[j] != static_cast<int>(r) && D.cohomology[j] != 0)
      problems.push_back("D_k(V, L) has cohomology in degree " + std::to_string(D.degrees[j]));
  for (const auto* rep : {&K, &Kbar, &D})
    if (!rep->dd_zero || !rep->closed) problems.push_back("d o d != 0 or term not closed");
  doc.witness["K"] = K.to_json();
  doc.witness["K_augmented"] = Kbar.to_json();
  doc.witness["D"] = D.to_json();
  if (!problems.empty()) {
    doc.status = Status::Fail;
    doc.witness["problems"] = problems;
  }
  return doc;
}

}  // namespace commvar
