#include "commvar/invariants.hpp"

#include <stdexcept>

#include "commvar/errors.hpp"
#include "commvar/sampling.hpp"

namespace commvar {

namespace {

Ring ring_of(const LieAlgebra& lie) { return Ring::bigraded(static_cast<std::uint16_t>(lie.dim())); }

using PolyMatrix = std::vector<std::vector<MPoly>>;

PolyMatrix generic_matrix(const LieAlgebra& lie, Ring ring) {
  const std::size_t n = lie.rank() + 1;
  PolyMatrix X(n, std::vector<MPoly>(n, MPoly(ring)));
  for (std::size_t k = 0; k < lie.dim(); ++k) {
    const QMatrix& B = lie.basis_matrices()[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(B(i, j)) != 0) X[i][j] += MPoly::var(ring, k, B(i, j));
  }
  return X;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, Ring ring) {
  const std::size_t n = a.size();
  PolyMatrix c(n, std::vector<MPoly>(n, MPoly(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

/// (1/m!) (sum_k y_k d/dx_k)^m p, for p in a bigraded ring.
MPoly polarization(const MPoly& p, unsigned m) {
  const Ring& ring = p.ring();
  MPoly cur = p;
  for (unsigned s = 0; s < m; ++s) {
    MPoly next(ring);
    for (std::size_t k = 0; k < ring.nx; ++k) {
      MPoly dk = cur.derivative(k);
      if (!dk.is_zero()) next += dk * MPoly::var(ring, ring.y_begin() + k);
    }
    cur = std::move(next);
  }
  return cur * Rat(Rat(1) / Rat(factorial(m)));
}

/// f(x + t y) in Ring{nx, ny, 1}, t the auxiliary variable.
MPoly shift_along_y(const MPoly& f) {
  const Ring& r = f.ring();
  const Ring target{r.nx, r.ny, 1};
  std::vector<MPoly> images;
  const std::size_t t = target.aux_begin();
  for (std::size_t k = 0; k < r.nx; ++k) {
    Monomial ty;
    ty.set(t, 1);
    ty.set(target.y_begin() + k, 1);
    images.push_back(MPoly::var(target, k) + MPoly::term(target, ty, 1));
  }
  for (std::size_t k = 0; k < r.ny; ++k) images.push_back(MPoly::var(target, target.y_begin() + k));
  return f.substitute(images, target);
}

MPoly lift_with_t_power(const MPoly& f, unsigned e) {
  const Ring& r = f.ring();
  const Ring target{r.nx, r.ny, 1};
  std::vector<std::size_t> map(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) map[i] = i;
  Monomial tm;
  tm.set(target.aux_begin(), e);
  return f.embed(target, map) * MPoly::term(target, tm, 1);
}

void check_polarization_identity(const MPoly& f, const std::vector<MPoly>& parts) {
  MPoly rhs = shift_along_y(f);
  for (unsigned m = 0; m < parts.size(); ++m) rhs -= lift_with_t_power(parts[m], m);
  if (!rhs.is_zero()) throw std::logic_error("polarization identity fails: residual " + rhs.to_string());
}

GVector form_dual_gradient(const LieAlgebra& lie, const MPoly& p) {
  const Ring ring = p.ring();
  const std::size_t N = lie.dim();
  std::vector<MPoly> grad;
  for (std::size_t j = 0; j < N; ++j) grad.push_back(p.derivative(j));
  GVector out{ring, std::vector<MPoly>(N, MPoly(ring)), 0, 0};
  const QMatrix& Finv = lie.form_inverse();
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j < N; ++j)
      if (sgn(Finv(k, j)) != 0 && !grad[j].is_zero()) out.coeffs[k] += grad[j] * Finv(k, j);
  return out;
}

}  // namespace

bool GVector::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

bool GVector::has_declared_bidegree() const {
  for (const auto& c : coeffs)
    if (!c.is_bihomogeneous(px, py)) return false;
  return true;
}

QVector GVector::evaluate(std::span<const Rat> point) const {
  QVector v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(c.evaluate(point));
  return v;
}

GVector coordinate_map_x(const LieAlgebra& lie) {
  const Ring ring = ring_of(lie);
  GVector g{ring, {}, 1, 0};
  for (std::size_t k = 0; k < lie.dim(); ++k) g.coeffs.push_back(MPoly::var(ring, k));
  return g;
}

GVector coordinate_map_y(const LieAlgebra& lie) {
  const Ring ring = ring_of(lie);
  GVector g{ring, {}, 0, 1};
  for (std::size_t k = 0; k < lie.dim(); ++k) g.coeffs.push_back(MPoly::var(ring, ring.y_begin() + k));
  return g;
}

GVector bracket(const LieAlgebra& lie, const GVector& a, const GVector& b) {
  const std::size_t N = lie.dim();
  if (a.size() != N || b.size() != N) throw StructuralError("bracket: polynomial map length mismatch");
  GVector out{a.ring, std::vector<MPoly>(N, MPoly(a.ring)), a.px + b.px, a.py + b.py};
  for (std::size_t i = 0; i < N; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < N; ++j) {
      if (b.coeffs[j].is_zero()) continue;
      const MPoly prod = a.coeffs[i] * b.coeffs[j];
      for (std::size_t k = 0; k < N; ++k) {
        const Rat& c = lie.structure_constant(i, j, k);
        if (sgn(c) != 0) out.coeffs[k] += prod * c;
      }
    }
  }
  return out;
}

MPoly pairing(const LieAlgebra& lie, const GVector& a, const GVector& b) {
  const std::size_t N = lie.dim();
  if (a.size() != N || b.size() != N) throw StructuralError("pairing: polynomial map length mismatch");
  MPoly out(a.ring);
  const QMatrix& F = lie.form();
  for (std::size_t i = 0; i < N; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < N; ++j)
      if (sgn(F(i, j)) != 0 && !b.coeffs[j].is_zero()) out += a.coeffs[i] * b.coeffs[j] * F(i, j);
  }
  return out;
}

std::string ShiftIndex::label() const { return "(" + std::to_string(i + 1) + "," + std::to_string(m) + ")"; }

std::vector<ShiftIndex> PolFamily::index_set() const {
  std::vector<ShiftIndex> out;
  for (unsigned i = 0; i < degrees.size(); ++i)
    for (unsigned m = 0; m < degrees[i]; ++m) out.push_back({i, m});
  return out;
}

std::vector<ShiftIndex> PolFamily::shifted_index_set() const {
  std::vector<ShiftIndex> out;
  for (const auto& s : index_set())
    if (s.m > 0) out.push_back(s);
  return out;
}

MPoly ad_invariance_residual(const LieAlgebra& lie, const MPoly& p, std::size_t basis_index) {
  const Ring ring = p.ring();
  const std::size_t N = lie.dim();
  MPoly res(ring);
  for (std::size_t k = 0; k < N; ++k) {
    const MPoly dk = p.derivative(k);
    if (dk.is_zero()) continue;
    // [v, x]_k = sum_j x_j c(v, j, k)
    MPoly comp(ring);
    for (std::size_t j = 0; j < N; ++j) {
      const Rat& c = lie.structure_constant(basis_index, j, k);
      if (sgn(c) != 0) comp += MPoly::var(ring, j, c);
    }
    if (!comp.is_zero()) res += dk * comp;
  }
  return res;
}

PolFamily invariant_generators(const LieAlgebra& lie) {
  if (lie.id().series != Series::A) throw CapabilityError("invariant generators: only type A");
  const Ring ring = ring_of(lie);
  const std::size_t n = lie.rank() + 1;
  const PolyMatrix X = generic_matrix(lie, ring);

  std::vector<MPoly> power_sums(n + 1, MPoly(ring));
  PolyMatrix P = X;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) P = multiply(P, X, ring);
    for (std::size_t i = 0; i < n; ++i) power_sums[k] += P[i][i];
  }
  // Newton: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} P_i
  std::vector<MPoly> e(n + 1, MPoly(ring));
  e[0] = MPoly::constant(ring, 1);
  for (std::size_t k = 1; k <= n; ++k) {
    MPoly acc(ring);
    for (std::size_t i = 1; i <= k; ++i) {
      MPoly term = e[k - i] * power_sums[i];
      if (i % 2 == 0) acc -= term;
      else acc += term;
    }
    e[k] = acc * Rat(Rat(1) / Rat(static_cast<long>(k)));
  }

  PolFamily fam{ring, {}, {}};
  for (std::size_t d = 2; d <= n; ++d) {
    fam.generators.push_back(-e[d]);
    fam.degrees.push_back(static_cast<unsigned>(d));
  }
  for (std::size_t i = 0; i < fam.generators.size(); ++i) {
    const MPoly& p = fam.generators[i];
    if (!p.is_homogeneous(fam.degrees[i]) || !p.depends_only_on(0, ring.nx) || p.is_zero())
      throw std::logic_error("invariant generator has the wrong shape");
    for (std::size_t v = 0; v < lie.dim(); ++v)
      if (!ad_invariance_residual(lie, p, v).is_zero())
        throw std::logic_error("invariant generator is not ad-invariant");
  }
  return fam;
}

std::vector<MPoly> polarize_scalar(const MPoly& p) {
  const Ring& ring = p.ring();
  if (ring.ny != ring.nx) throw StructuralError("polarization needs a bigraded ring");
  if (!p.depends_only_on(0, ring.nx)) throw ContractError("polarize_scalar: input depends on more than the x-block");
  const int d = p.total_degree();
  if (d < 0 || !p.is_homogeneous(static_cast<unsigned>(d)))
    throw ContractError("polarize_scalar: input is not homogeneous");
  std::vector<MPoly> parts;
  for (unsigned m = 0; m <= static_cast<unsigned>(d); ++m) parts.push_back(polarization(p, m));
  check_polarization_identity(p, parts);
  return parts;
}

GVector epsilon(const LieAlgebra& lie, const PolFamily& fam, unsigned i) {
  if (i >= fam.generators.size()) throw ContractError("epsilon: generator index out of range");
  GVector g = form_dual_gradient(lie, fam.generators[i]);
  g.px = fam.degrees[i] - 1;
  g.py = 0;
  if (!g.has_declared_bidegree()) throw std::logic_error("epsilon: wrong degree");
  return g;
}

GVector epsilon_polarized(const LieAlgebra& lie, const PolFamily& fam, unsigned i, unsigned m) {
  if (i >= fam.generators.size() || m >= fam.degrees[i])
    throw ContractError("epsilon_polarized: (i,m) outside I_0");
  const GVector base = epsilon(lie, fam, i);
  GVector out{base.ring, {}, base.px - m, m};
  for (const auto& c : base.coeffs) {
    MPoly part = polarization(c, m);
    out.coeffs.push_back(part);
  }
  if (!out.has_declared_bidegree()) throw std::logic_error("epsilon_polarized: wrong bidegree");
  return out;
}

std::vector<GVector> epsilon_family(const LieAlgebra& lie, const PolFamily& fam) {
  std::vector<GVector> out;
  for (unsigned i = 0; i < fam.generators.size(); ++i) {
    const GVector base = epsilon(lie, fam, i);
    std::vector<std::vector<MPoly>> parts(base.px + 1);
    for (const auto& c : base.coeffs) {
      std::vector<MPoly> all;
      for (unsigned m = 0; m <= base.px; ++m) all.push_back(polarization(c, m));
      if (!c.is_zero()) check_polarization_identity(c, all);
      for (unsigned m = 0; m <= base.px; ++m) parts[m].push_back(all[m]);
    }
    for (unsigned m = 0; m < fam.degrees[i]; ++m) {
      GVector g{base.ring, parts[m], base.px - m, m};
      if (!g.has_declared_bidegree()) throw std::logic_error("epsilon_family: wrong bidegree");
      out.push_back(std::move(g));
    }
  }
  return out;
}

MPoly poisson_bracket(const LieAlgebra& lie, const MPoly& f, const MPoly& g) {
  require_same_ring(f, g);
  const Ring ring = f.ring();
  if (ring.nx != lie.dim()) throw StructuralError("poisson_bracket: ring does not match the algebra");
  const GVector u = form_dual_gradient(lie, f);
  const GVector w = form_dual_gradient(lie, g);
  const GVector uw = bracket(lie, u, w);
  GVector xi{ring, {}, 1, 0};
  for (std::size_t k = 0; k < lie.dim(); ++k) xi.coeffs.push_back(MPoly::var(ring, k));
  return pairing(lie, xi, uw);
}

ReportDoc mf_commutativity_check(const LieAlgebra& lie, const PolFamily& fam) {
  ReportDoc doc = make_report("poisson", "mf-commutativity/" + lie.id().name(),
                              "the shifted invariants p_i^(m)(., y), m < d_i, pairwise Poisson-commute "
                              "as exact polynomials in x with y a symbolic parameter");
  std::vector<ShiftIndex> idx = fam.index_set();
  std::vector<MPoly> funcs;
  for (unsigned i = 0; i < fam.generators.size(); ++i) {
    const auto parts = polarize_scalar(fam.generators[i]);
    for (unsigned m = 0; m < fam.degrees[i]; ++m) funcs.push_back(parts[m]);
  }
  std::size_t pairs = 0;
  Json failures = Json::array();
  for (std::size_t a = 0; a < funcs.size(); ++a)
    for (std::size_t b = a + 1; b < funcs.size(); ++b) {
      ++pairs;
      const MPoly r = poisson_bracket(lie, funcs[a], funcs[b]);
      if (!r.is_zero()) failures.push_back({{"pair", Json::array({idx[a].label(), idx[b].label()})}, {"residual", r.to_string()}});
    }
  std::size_t diag_fail = 0;
  for (const auto& f : funcs)
    if (!poisson_bracket(lie, f, f).is_zero()) ++diag_fail;
  doc.witness["functions"] = funcs.size();
  doc.witness["pair_count"] = pairs;
  doc.witness["diagonal_nonzero"] = diag_fail;
  if (!failures.empty() || diag_fail != 0) {
    doc.status = Status::Fail;
    doc.witness["failures"] = failures;
  }
  return doc;
}

ReportDoc root_divisibility_check(const LieAlgebra& lie, const PolFamily& fam, unsigned i,
                                  std::size_t root_index) {
  ReportDoc doc = make_report(
      "invariants", "root-divisibility/" + lie.id().name() + "/i=" + std::to_string(i + 1) + "/" + lie.labels().at(root_index),
      "on the Cartan subalgebra, alpha(epsilon_i(x)) is alpha(x) times a polynomial of degree d_i - 2");
  const Ring ring = fam.ring;
  const GVector eps = epsilon(lie, fam, i);
  const auto cartan = lie.indices_of(BasisKind::Coroot);
  const QVector alpha = lie.root_on_cartan(root_index);

  std::vector<MPoly> restrict_images;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    bool keep = false;
    for (auto c : cartan) keep = keep || c == k;
    restrict_images.push_back(keep ? MPoly::var(ring, k) : MPoly(ring));
  }
  MPoly lhs(ring), divisor(ring);
  for (std::size_t c = 0; c < cartan.size(); ++c) {
    if (sgn(alpha[c]) == 0) continue;
    lhs += eps.coeffs[cartan[c]].substitute(restrict_images, ring) * alpha[c];
    divisor += MPoly::var(ring, cartan[c], alpha[c]);
  }
  const auto q = divide_exact(lhs, divisor);
  const int want = static_cast<int>(fam.degrees[i]) - 2;
  doc.witness["dividend"] = lhs.to_string();
  doc.witness["divisor"] = divisor.to_string();
  if (!q) {
    doc.status = Status::Fail;
    doc.witness["reason"] = "not divisible";
    return doc;
  }
  doc.witness["quotient"] = q->to_string();
  doc.witness["quotient_degree"] = q->total_degree();
  if (q->is_zero() || !q->is_homogeneous(static_cast<unsigned>(want))) {
    doc.status = Status::Fail;
    doc.witness["reason"] = "quotient degree differs from d_i - 2";
  }
  return doc;
}

QMatrix exp_ad(const LieAlgebra& lie, const ElementVector& v, const Rat& t) {
  const QMatrix A = lie.ad(v);
  QMatrix result = QMatrix::identity(lie.dim());
  QMatrix term = QMatrix::identity(lie.dim());
  for (unsigned k = 1; k <= 2 * lie.dim() + 1; ++k) {
    term = term * A;
    if (term.is_zero()) return result;
    const Rat scale = Rat(1) / Rat(factorial(k));
    Rat tk = 1;
    for (unsigned s = 0; s < k; ++s) tk *= t;
    for (std::size_t r = 0; r < lie.dim(); ++r)
      for (std::size_t c = 0; c < lie.dim(); ++c) result(r, c) += term(r, c) * tk * scale;
  }
  throw ContractError("exp_ad: ad v is not nilpotent");
}

ReportDoc equivariance_check(const LieAlgebra& lie, const PolFamily& fam, std::uint64_t seed, long height_bound) {
  ReportDoc doc = make_report("invariants", "equivariance/" + lie.id().name(),
                              "epsilon_i^(m)(g x, g y) = g epsilon_i^(m)(x, y) for g = exp(t ad v), v a root vector");
  RationalSampler sampler(seed);
  const auto eps = epsilon_family(lie, fam);
  const auto idx = fam.index_set();
  std::size_t checks = 0;
  Json failures = Json::array();
  for (std::size_t v = 0; v < lie.dim(); ++v) {
    if (lie.kind(v) == BasisKind::Coroot) continue;
    const Rat t = sampler.nonzero_rational(height_bound);
    const QMatrix g = exp_ad(lie, lie.basis_vector(v), t);
    const ElementVector x = sample_rational(lie, sampler, height_bound);
    const ElementVector y = sample_rational(lie, sampler, height_bound);
    QVector pt(x), gpt(g.apply(x));
    pt.insert(pt.end(), y.begin(), y.end());
    const QVector gy = g.apply(y);
    gpt.insert(gpt.end(), gy.begin(), gy.end());
    for (std::size_t e = 0; e < eps.size(); ++e) {
      ++checks;
      if (!(g.apply(eps[e].evaluate(pt)) == eps[e].evaluate(gpt)))
        failures.push_back({{"root_vector", lie.labels()[v]}, {"t", to_string(t)}, {"index", idx[e].label()}});
    }
  }
  doc.witness["checks"] = checks;
  if (!failures.empty()) {
    doc.status = Status::Fail;
    doc.witness["failures"] = failures;
  }
  return doc;
}

}  // namespace commvar
