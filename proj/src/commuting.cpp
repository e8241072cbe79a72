#include "commvar/commuting.hpp"

#include <algorithm>

#include "commvar/errors.hpp"
#include "commvar/qmatrix.hpp"
#include "commvar/sampling.hpp"

namespace commvar {

IdealPresentation commuting_ideal(const LieAlgebra& lie) {
  const GVector xy = bracket(lie, coordinate_map_x(lie), coordinate_map_y(lie));
  std::vector<MPoly> gens;
  for (std::size_t v = 0; v < lie.dim(); ++v) {
    GVector bv{xy.ring, std::vector<MPoly>(lie.dim(), MPoly(xy.ring)), 0, 0};
    bv.coeffs[v] = MPoly::constant(xy.ring, 1);
    MPoly g = pairing(lie, bv, xy);
    if (!g.is_bihomogeneous(1, 1) || g.is_zero()) throw std::logic_error("commuting ideal generator is not of bidegree (1,1)");
    gens.push_back(std::move(g));
  }
  IdealPresentation ideal{xy.ring, std::move(gens)};
  return ideal;
}

std::pair<ElementVector, ElementVector> sample_commuting_pair(const LieAlgebra& lie, RationalSampler& sampler,
                                                              long height_bound) {
  for (unsigned attempt = 0; attempt < 1000; ++attempt) {
    ElementVector x = sample_rational(lie, sampler, height_bound);
    const auto z = centralizer(lie, x);
    if (z.size() != lie.rank()) continue;
    const Rat t = sampler.nonzero_rational(height_bound);
    ElementVector y(lie.dim());
    for (const auto& basis : z) {
      const Rat c = sampler.rational(height_bound);
      for (std::size_t k = 0; k < y.size(); ++k) y[k] += t * c * basis[k];
    }
    if (!is_zero(lie.bracket(x, y))) throw std::logic_error("sampled pair does not commute");
    return {x, y};
  }
  throw std::runtime_error("no regular element found in 1000 samples");
}

namespace {

Rat eval_monomial(const Monomial& m, const QVector& pt) {
  Rat v = 1;
  for (std::size_t i = 0; i < pt.size(); ++i)
    for (unsigned e = 0; e < m[i]; ++e) v *= pt[i];
  return v;
}

}  // namespace

std::vector<VanishingDegree> vanishing_ideal_low_degree(const LieAlgebra& lie, const GroebnerBasis& gb,
                                                        unsigned max_degree, unsigned sample_count,
                                                        std::uint64_t seed) {
  if (lie.rank() > 2 || max_degree > 4) throw CapabilityError("vanishing ideal: guard is rank <= 2 and d <= 4");
  RationalSampler sampler(seed);
  std::vector<QVector> points;
  for (unsigned s = 0; s < sample_count; ++s) {
    auto [x, y] = sample_commuting_pair(lie, sampler, 7);
    QVector pt(x);
    pt.insert(pt.end(), y.begin(), y.end());
    points.push_back(std::move(pt));
  }
  const unsigned tail = std::max(8u, sample_count / 10);
  const std::size_t nvars = 2 * lie.dim();
  std::vector<VanishingDegree> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    const auto monos = monomials_of_degree(0, nvars, d);
    std::vector<SparseVec> rows;
    for (const auto& pt : points) {
      SparseVec row;
      for (std::size_t c = 0; c < monos.size(); ++c) {
        Rat v = eval_monomial(monos[c], pt);
        if (sgn(v) != 0) row.emplace_back(static_cast<std::uint32_t>(c), std::move(v));
      }
      rows.push_back(std::move(row));
    }
    VanishingDegree vd;
    vd.degree = d;
    vd.monomials = monos.size();
    vd.ideal_dim = ideal_dimension(gb, d);
    // I_g lies in the vanishing ideal, so ideal_dim <= dim ker over Q <= dim ker mod P.
    ModularEchelon mod(monos.size());
    std::size_t head_rank = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      mod.insert(rows[r]);
      if (r + tail + 1 == rows.size()) head_rank = mod.rank();
    }
    if (mod.usable() && monos.size() - mod.rank() == vd.ideal_dim) {
      vd.vanishing_dim = vd.ideal_dim;
      vd.method = "modular-bound";
      vd.stable = rows.size() > tail && head_rank == mod.rank();
    } else {
      SparseEchelon ech;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        ech.insert(rows[r]);
        if (r + tail + 1 == rows.size()) head_rank = ech.rank();
      }
      vd.vanishing_dim = monos.size() - ech.rank();
      vd.method = "exact";
      vd.stable = rows.size() > tail && head_rank == ech.rank();
    }
    out.push_back(vd);
  }
  return out;
}

ReportDoc radicality_evidence(const LieAlgebra& lie, unsigned max_degree, unsigned sample_count, std::uint64_t seed) {
  ReportDoc doc = make_report("scheme", "radicality-evidence/" + lie.id().name(),
                              "evidence that I_g is radical: it agrees with the vanishing ideal of sampled points of "
                              "C(g) in every degree up to the bound, and dim S/I_g = 2 b_g");
  GroebnerStats stats;
  const GroebnerBasis gb = groebner_with_stats(commuting_ideal(lie), stats);
  const std::size_t krull = krull_dimension(gb);
  const auto degrees = vanishing_ideal_low_degree(lie, gb, max_degree, sample_count, seed);

  RationalSampler sampler(seed ^ 0x5A5A5A5AULL);
  std::size_t annihilation_failures = 0;
  for (unsigned s = 0; s < 20; ++s) {
    auto [x, y] = sample_commuting_pair(lie, sampler, 7);
    QVector pt(x);
    pt.insert(pt.end(), y.begin(), y.end());
    for (const auto& g : gb.elements)
      if (sgn(g.evaluate(pt)) != 0) ++annihilation_failures;
  }

  bool agree = true, stable = true;
  Json per = Json::array();
  for (const auto& d : degrees) {
    agree = agree && d.vanishing_dim == d.ideal_dim;
    stable = stable && d.stable;
    per.push_back({{"degree", d.degree},
                   {"monomials", d.monomials},
                   {"vanishing_dim", d.vanishing_dim},
                   {"ideal_dim", d.ideal_dim},
                   {"method", d.method},
                   {"stable", d.stable}});
  }
  doc.witness["groebner_size"] = gb.elements.size();
  doc.witness["krull_dimension"] = krull;
  doc.witness["expected_dimension"] = 2 * lie.borel_dim();
  doc.witness["samples"] = sample_count;
  doc.witness["degrees"] = per;
  doc.witness["annihilation_failures"] = annihilation_failures;
  if (!stable) {
    doc.status = Status::Indeterminate;
    doc.witness["reason"] = "interpolation rank still growing: not enough samples";
  }
  if (!agree || krull != 2 * lie.borel_dim() || annihilation_failures != 0) doc.status = Status::Fail;
  return doc;
}

bool nilpotent_test(const LieAlgebra& lie, const PolFamily& fam, const ElementVector& x) {
  if (x.size() != lie.dim()) throw StructuralError("nilpotent_test: length mismatch");
  QVector pt(x);
  pt.resize(2 * lie.dim());
  for (const auto& p : fam.generators)
    if (sgn(p.evaluate(pt)) != 0) return false;
  return true;
}

bool bicone_test(const LieAlgebra& lie, const PolFamily& fam, const ElementVector& x, const ElementVector& y) {
  if (x.size() != lie.dim() || y.size() != lie.dim()) throw StructuralError("bicone_test: length mismatch");
  const Ring ab = Ring::single(2);
  std::vector<MPoly> images;
  for (std::size_t k = 0; k < lie.dim(); ++k) images.push_back(MPoly::var(ab, 0, x[k]) + MPoly::var(ab, 1, y[k]));
  for (std::size_t k = 0; k < lie.dim(); ++k) images.push_back(MPoly(ab));
  for (const auto& p : fam.generators)
    if (!p.substitute(images, ab).is_zero()) return false;
  return true;
}

}  // namespace commvar
