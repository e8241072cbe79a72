#include "commvar/charmod.hpp"

#include "commvar/errors.hpp"
#include "commvar/qmatrix.hpp"
#include "commvar/sampling.hpp"

namespace commvar {

namespace {

QMatrix rows_matrix(std::size_t cols, const std::vector<QVector>& rows) { return QMatrix::from_rows(rows, cols); }

std::vector<std::pair<Rat, Rat>> pencil_points(unsigned attempts) {
  std::vector<std::pair<Rat, Rat>> pts{{1, 0}, {0, 1}};
  for (long b = 1; pts.size() < attempts; ++b) {
    pts.emplace_back(1, b);
    if (pts.size() < attempts) pts.emplace_back(1, -b);
  }
  pts.resize(attempts);
  return pts;
}

ElementVector combo(const Rat& a, const ElementVector& x, const Rat& b, const ElementVector& y) {
  ElementVector v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = a * x[i] + b * y[i];
  return v;
}

std::vector<QVector> bracket_all(const LieAlgebra& lie, const ElementVector& u, const std::vector<QVector>& vs) {
  std::vector<QVector> out;
  for (const auto& v : vs) out.push_back(lie.bracket(u, v));
  return out;
}

}  // namespace

EpsBasis build_eps_basis(const LieAlgebra& lie, const PolFamily& fam) {
  EpsBasis b{fam.index_set(), epsilon_family(lie, fam)};
  if (b.size() != lie.borel_dim()) throw std::logic_error("|I_0| differs from b_g");
  return b;
}

bool SubspaceBasis::contains(const QVector& v) const {
  if (v.size() != ambient) throw StructuralError("subspace membership: length mismatch");
  if (is_zero(v)) return true;
  std::vector<QVector> rows = basis;
  rows.push_back(v);
  return rank(rows_matrix(ambient, rows)) == basis.size();
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  std::vector<QVector> rows = basis;
  rows.insert(rows.end(), other.basis.begin(), other.basis.end());
  return rows.empty() || rank(rows_matrix(ambient, rows)) == basis.size();
}

SubspaceBasis span_of(std::size_t ambient, const std::vector<QVector>& vectors) {
  SubspaceBasis s{ambient, {}};
  if (vectors.empty()) return s;
  s.basis = row_basis(rows_matrix(ambient, vectors));
  return s;
}

QVector join_point(const ElementVector& x, const ElementVector& y) {
  QVector p(x);
  p.insert(p.end(), y.begin(), y.end());
  return p;
}

SubspaceBasis eval_V(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x, const ElementVector& y) {
  const QVector pt = join_point(x, y);
  std::vector<QVector> vals;
  for (const auto& g : eps.maps) vals.push_back(g.evaluate(pt));
  SubspaceBasis V = span_of(lie.dim(), vals);
  if (V.dim() > lie.borel_dim()) throw std::logic_error("dim V_{x,y} exceeds b_g");
  return V;
}

OmegaResult omega_test(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x, const ElementVector& y,
                       unsigned attempts) {
  OmegaResult r;
  r.dim_v = eval_V(lie, eps, x, y).dim();
  for (const auto& [a, b] : pencil_points(attempts)) {
    if (is_regular(lie, combo(a, x, b, y))) {
      r.regular_pencil_point = std::make_pair(a, b);
      break;
    }
  }
  if (!r.regular_pencil_point) return r;
  r.verdict = r.dim_v == lie.borel_dim() ? OmegaVerdict::Member : OmegaVerdict::NotMember;
  return r;
}

std::optional<std::pair<ElementVector, ElementVector>> find_omega_witness(const LieAlgebra& lie, const EpsBasis& eps,
                                                                          std::uint64_t seed, long height_bound,
                                                                          unsigned max_tries) {
  RationalSampler sampler(seed);
  for (unsigned t = 0; t < max_tries; ++t) {
    ElementVector x = sample_rational(lie, sampler, height_bound);
    ElementVector y = sample_rational(lie, sampler, height_bound);
    if (omega_test(lie, eps, x, y).verdict == OmegaVerdict::Member) return std::make_pair(x, y);
  }
  return std::nullopt;
}

ReportDoc orthogonality_suite(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x,
                              const ElementVector& y) {
  ReportDoc doc = make_report("charmod", "orthogonality/" + lie.id().name(),
                              "at (x,y) in Omega: [x,V] is orthogonal to V, dim [x,V] = b_g - rank, "
                              "dim V + dim [x,V] = dim g, and [x,V] = [y,V]");
  doc.witness["x"] = rat_array(x);
  doc.witness["y"] = rat_array(y);
  const OmegaResult om = omega_test(lie, eps, x, y);
  if (om.verdict != OmegaVerdict::Member) {
    doc.status = Status::Indeterminate;
    doc.witness["reason"] = "precondition (x,y) in Omega not established";
    doc.witness["dim_V"] = om.dim_v;
    return doc;
  }
  const SubspaceBasis V = eval_V(lie, eps, x, y);
  const SubspaceBasis xV = span_of(lie.dim(), bracket_all(lie, x, V.basis));
  const SubspaceBasis yV = span_of(lie.dim(), bracket_all(lie, y, V.basis));
  Json bad = Json::array();
  for (std::size_t a = 0; a < V.dim(); ++a)
    for (std::size_t b = 0; b < V.dim(); ++b) {
      const Rat p = lie.pairing(lie.bracket(x, V.basis[a]), V.basis[b]);
      if (sgn(p) != 0) bad.push_back({{"v", a}, {"w", b}, {"value", to_string(p)}});
    }
  const bool dims_ok = xV.dim() == lie.n_value() && V.dim() + xV.dim() == lie.dim();
  const bool equal_ok = xV.contains(yV) && yV.contains(xV);
  doc.witness["dim_V"] = V.dim();
  doc.witness["dim_xV"] = xV.dim();
  doc.witness["dim_yV"] = yV.dim();
  doc.witness["xV_equals_yV"] = equal_ok;
  if (!bad.empty() || !dims_ok || !equal_ok) {
    doc.status = Status::Fail;
    doc.witness["nonorthogonal_pairs"] = bad;
  }
  return doc;
}

ReportDoc isotropy_check(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x, const ElementVector& y) {
  ReportDoc doc = make_report("charmod", "isotropy/" + lie.id().name(),
                              "V_{x,y} is totally isotropic for (v,w) -> <a x + b y, [v,w]> with a, b symbolic");
  const SubspaceBasis V = eval_V(lie, eps, x, y);
  Json bad = Json::array();
  for (std::size_t a = 0; a < V.dim(); ++a)
    for (std::size_t b = 0; b < V.dim(); ++b) {
      const ElementVector vw = lie.bracket(V.basis[a], V.basis[b]);
      const Rat ca = lie.pairing(x, vw);
      const Rat cb = lie.pairing(y, vw);
      if (sgn(ca) != 0 || sgn(cb) != 0)
        bad.push_back({{"v", a}, {"w", b}, {"a_coefficient", to_string(ca)}, {"b_coefficient", to_string(cb)}});
    }
  doc.witness["gram_size"] = V.dim();
  doc.witness["x"] = rat_array(x);
  doc.witness["y"] = rat_array(y);
  if (!bad.empty()) {
    doc.status = Status::Fail;
    doc.witness["nonzero_entries"] = bad;
  }
  return doc;
}

ReportDoc bracket_pairing_identity(const LieAlgebra& lie, const EpsBasis& eps) {
  ReportDoc doc = make_report("charmod", "bracket-pairing/" + lie.id().name(),
                              "<epsilon_i^(m)(x,y), [x,y]> is the zero polynomial for every (i,m) in I_0");
  const GVector xy = bracket(lie, coordinate_map_x(lie), coordinate_map_y(lie));
  Json bad = Json::array();
  for (std::size_t k = 0; k < eps.size(); ++k) {
    const MPoly r = pairing(lie, eps.maps[k], xy);
    if (!r.is_zero()) bad.push_back({{"index", eps.index[k].label()}, {"residual", r.to_string()}});
  }
  doc.witness["cases"] = eps.size();
  if (!bad.empty()) {
    doc.status = Status::Fail;
    doc.witness["failures"] = bad;
  }
  return doc;
}

std::vector<GVector> c_module_generators(const LieAlgebra& lie, const EpsBasis& eps) {
  const GVector X = coordinate_map_x(lie);
  std::vector<GVector> out;
  for (std::size_t k = 0; k < eps.size(); ++k)
    if (eps.index[k].m > 0) out.push_back(bracket(lie, X, eps.maps[k]));
  if (out.size() != lie.n_value()) throw std::logic_error("|I_{*,0}| differs from n");
  return out;
}

ReportDoc c_module_check(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x, const ElementVector& y) {
  ReportDoc doc = make_report("charmod", "c-module/" + lie.id().name(),
                              "the n maps [x, epsilon_i^(m)], m > 0, have rank n at an Omega point and are "
                              "orthogonal to every epsilon_j^(m')");
  const QVector pt = join_point(x, y);
  std::vector<QVector> gens;
  for (const auto& g : c_module_generators(lie, eps)) gens.push_back(g.evaluate(pt));
  std::vector<QVector> vs;
  for (const auto& g : eps.maps) vs.push_back(g.evaluate(pt));
  const std::size_t r = span_of(lie.dim(), gens).dim();
  std::size_t nonorth = 0;
  for (const auto& c : gens)
    for (const auto& v : vs)
      if (sgn(lie.pairing(c, v)) != 0) ++nonorth;
  doc.witness["generators"] = gens.size();
  doc.witness["rank"] = r;
  doc.witness["nonorthogonal_pairs"] = nonorth;
  if (r != lie.n_value() || nonorth != 0) {
    doc.status = Status::Fail;
    doc.witness["x"] = rat_array(x);
    doc.witness["y"] = rat_array(y);
  }
  return doc;
}

ReportDoc parabolic_containment_check(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x,
                                      const ElementVector& y) {
  ReportDoc doc = make_report("charmod", "borel-containment/" + lie.id().name(),
                              "for x, y in the Borel subalgebra b, V_{x,y} is contained in b");
  const auto neg = lie.indices_of(BasisKind::NegativeRoot);
  for (auto k : neg)
    if (sgn(x.at(k)) != 0 || sgn(y.at(k)) != 0) throw ContractError("parabolic containment: x, y must lie in b");
  const QVector pt = join_point(x, y);
  Json bad = Json::array();
  for (std::size_t e = 0; e < eps.size(); ++e) {
    const QVector v = eps.maps[e].evaluate(pt);
    for (auto k : neg)
      if (sgn(v[k]) != 0) bad.push_back({{"index", eps.index[e].label()}, {"coordinate", lie.labels()[k]}});
  }
  doc.witness["evaluations"] = eps.size();
  if (!bad.empty()) {
    doc.status = Status::Fail;
    doc.witness["x"] = rat_array(x);
    doc.witness["y"] = rat_array(y);
    doc.witness["failures"] = bad;
  }
  return doc;
}

ReportDoc parabolic_containment_symbolic(const LieAlgebra& lie, const EpsBasis& eps) {
  ReportDoc doc = make_report("charmod", "borel-containment-symbolic/" + lie.id().name(),
                              "restricted to b x b, the negative root coordinates of every epsilon_i^(m) vanish identically");
  const Ring ring = eps.maps.front().ring;
  std::vector<MPoly> images;
  for (std::size_t v = 0; v < ring.size(); ++v) {
    const std::size_t k = v < ring.nx ? v : v - ring.nx;
    images.push_back(lie.kind(k) == BasisKind::NegativeRoot ? MPoly(ring) : MPoly::var(ring, v));
  }
  Json bad = Json::array();
  for (std::size_t e = 0; e < eps.size(); ++e)
    for (auto k : lie.indices_of(BasisKind::NegativeRoot)) {
      const MPoly r = eps.maps[e].coeffs[k].substitute(images, ring);
      if (!r.is_zero())
        bad.push_back({{"index", eps.index[e].label()}, {"coordinate", lie.labels()[k]}, {"residual", r.to_string()}});
    }
  doc.witness["maps"] = eps.size();
  if (!bad.empty()) {
    doc.status = Status::Fail;
    doc.witness["failures"] = bad;
  }
  return doc;
}

ReportDoc homogeneity_check(const LieAlgebra& lie, const EpsBasis& eps, const ElementVector& x, const ElementVector& y,
                            const Rat& s, const Rat& t) {
  ReportDoc doc = make_report("charmod", "homogeneity/" + lie.id().name(),
                              "V_{s x, t y} = V_{x,y} for nonzero s, t");
  if (sgn(s) == 0 || sgn(t) == 0) throw ContractError("homogeneity_check: s and t must be nonzero");
  ElementVector sx(x), ty(y);
  for (auto& c : sx) c *= s;
  for (auto& c : ty) c *= t;
  const SubspaceBasis a = eval_V(lie, eps, x, y);
  const SubspaceBasis b = eval_V(lie, eps, sx, ty);
  const bool same = a.contains(b) && b.contains(a);
  doc.witness["dim_V"] = a.dim();
  doc.witness["s"] = to_string(s);
  doc.witness["t"] = to_string(t);
  if (!same) {
    doc.status = Status::Fail;
    doc.witness["x"] = rat_array(x);
    doc.witness["y"] = rat_array(y);
  }
  return doc;
}

ReportDoc dimension_bound_scan(const LieAlgebra& lie, const EpsBasis& eps, std::uint64_t seed, long height_bound,
                               unsigned samples) {
  ReportDoc doc = make_report("charmod", "dimension-bound/" + lie.id().name(),
                              "dim V_{x,y} <= b_g for every sampled pair");
  RationalSampler sampler(seed);
  std::vector<std::size_t> histogram(lie.borel_dim() + 1, 0);
  Json bad = Json::array();
  for (unsigned s = 0; s < samples; ++s) {
    const ElementVector x = sample_rational(lie, sampler, height_bound);
    const ElementVector y = sample_rational(lie, sampler, height_bound);
    const QVector pt = join_point(x, y);
    std::vector<QVector> vals;
    for (const auto& g : eps.maps) vals.push_back(g.evaluate(pt));
    const std::size_t d = rank(QMatrix::from_rows(vals, lie.dim()));
    if (d > lie.borel_dim()) bad.push_back({{"x", rat_array(x)}, {"y", rat_array(y)}, {"dim_V", d}});
    else ++histogram[d];
  }
  doc.witness["samples"] = samples;
  doc.witness["dim_histogram"] = histogram;
  if (!bad.empty()) {
    doc.status = Status::Fail;
    doc.witness["failures"] = bad;
  }
  return doc;
}

}  // namespace commvar
