#include "commvar/lie_algebra.hpp"

#include <algorithm>
#include <numeric>

#include "commvar/errors.hpp"
#include "commvar/sampling.hpp"

namespace commvar {

AlgebraId AlgebraId::parse(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'A' && text[0] != 'a'))
    throw CapabilityError("unsupported algebra '" + text + "': only type A is built");
  unsigned r = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ContractError("bad algebra name '" + text + "'");
    r = r * 10 + static_cast<unsigned>(text[i] - '0');
  }
  return {Series::A, r};
}

std::string AlgebraId::name() const { return "A" + std::to_string(rank); }

namespace {

QMatrix unit(unsigned n, unsigned i, unsigned j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

Rat trace(const QMatrix& m) {
  Rat t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

LieAlgebra LieAlgebra::build_simple(AlgebraId id) {
  if (id.series != Series::A) throw CapabilityError("only type A is supported");
  if (id.rank < 1 || id.rank > 4) throw CapabilityError("type A rank must be in 1..4");
  LieAlgebra L;
  L.id_ = id;
  const unsigned r = id.rank;
  const unsigned n = r + 1;
  L.rank_ = r;
  for (unsigned d = 2; d <= r + 1; ++d) L.degrees_.push_back(d);
  L.borel_dim_ = std::accumulate(L.degrees_.begin(), L.degrees_.end(), std::size_t{0});

  std::vector<std::pair<unsigned, unsigned>> roots;  // i < j, ordered by height then i
  for (unsigned h = 1; h < n; ++h)
    for (unsigned i = 0; i + h < n; ++i) roots.emplace_back(i, i + h);

  for (auto [i, j] : roots) {
    L.labels_.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    L.kinds_.push_back(BasisKind::PositiveRoot);
    L.root_pairs_.emplace_back(i, j);
    L.matrices_.push_back(unit(n, i, j));
  }
  for (unsigned c = 0; c < r; ++c) {
    L.labels_.push_back("H" + std::to_string(c + 1));
    L.kinds_.push_back(BasisKind::Coroot);
    L.root_pairs_.emplace_back(c, c);
    QMatrix m(n, n);
    m(c, c) = 1;
    m(c + 1, c + 1) = -1;
    L.matrices_.push_back(m);
  }
  for (auto [i, j] : roots) {
    L.labels_.push_back("E" + std::to_string(j + 1) + std::to_string(i + 1));
    L.kinds_.push_back(BasisKind::NegativeRoot);
    L.root_pairs_.emplace_back(j, i);
    L.matrices_.push_back(unit(n, j, i));
  }
  L.dim_ = L.matrices_.size();
  const std::size_t N = L.dim_;

  L.form_ = QMatrix(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) L.form_(a, b) = trace(L.matrices_[a] * L.matrices_[b]);
  L.form_inv_ = inverse(L.form_);

  L.structure_.assign(N * N * N, Rat(0));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      QMatrix comm = L.matrices_[a] * L.matrices_[b];
      const QMatrix ba = L.matrices_[b] * L.matrices_[a];
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) comm(i, j) -= ba(i, j);
      // Coordinates: off-diagonal entries read directly; the diagonal part
      // diag(d) with trace 0 equals sum_c (d_1 + ... + d_c) H_c.
      for (std::size_t k = 0; k < N; ++k) {
        Rat coef;
        const auto [i, j] = L.root_pairs_[k];
        if (L.kinds_[k] == BasisKind::Coroot) {
          for (unsigned t = 0; t <= i; ++t) coef += comm(t, t);
        } else {
          coef = comm(i, j);
        }
        L.structure_[(a * N + b) * N + k] = coef;
      }
    }
  L.verify();
  return L;
}

std::vector<std::size_t> LieAlgebra::indices_of(BasisKind k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim_; ++i)
    if (kinds_[i] == k) out.push_back(i);
  return out;
}

ElementVector LieAlgebra::basis_vector(std::size_t i) const {
  ElementVector v(dim_);
  v.at(i) = 1;
  return v;
}

ElementVector LieAlgebra::bracket(const ElementVector& u, const ElementVector& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw StructuralError("bracket: coordinate length mismatch");
  ElementVector out(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (sgn(u[a]) == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (sgn(v[b]) == 0) continue;
      const Rat w = u[a] * v[b];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rat& c = structure_constant(a, b, k);
        if (sgn(c) != 0) out[k] += w * c;
      }
    }
  }
  return out;
}

Rat LieAlgebra::pairing(const ElementVector& u, const ElementVector& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw StructuralError("pairing: coordinate length mismatch");
  return dot(u, form_.apply(v));
}

QMatrix LieAlgebra::ad(const ElementVector& u) const {
  QMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const auto col = bracket(u, basis_vector(j));
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
  }
  return m;
}

ElementVector LieAlgebra::principal_e() const {
  ElementVector e(dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    if (kinds_[k] == BasisKind::PositiveRoot && root_pairs_[k].second == root_pairs_[k].first + 1) e[k] = 1;
  return e;
}

ElementVector LieAlgebra::principal_h() const {
  // diag(r, r-2, ..., -r) expressed on H_c: coefficient = partial sums.
  const long n = static_cast<long>(rank_) + 1;
  ElementVector h(dim_);
  const auto cartan = indices_of(BasisKind::Coroot);
  Rat partial = 0;
  for (std::size_t c = 0; c < cartan.size(); ++c) {
    partial += Rat(n - 1 - 2 * static_cast<long>(c));
    h[cartan[c]] = partial;
  }
  return h;
}

ElementVector LieAlgebra::principal_f() const {
  const unsigned n = static_cast<unsigned>(rank_) + 1;
  ElementVector f(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    const auto [i, j] = root_pairs_[k];
    if (kinds_[k] == BasisKind::NegativeRoot && i == j + 1) f[k] = Rat(static_cast<long>(i * (n - i)));
  }
  return f;
}

QVector LieAlgebra::root_on_cartan(std::size_t root_index) const {
  if (kinds_.at(root_index) != BasisKind::PositiveRoot) throw ContractError("root_on_cartan: not a positive root");
  const auto [i, j] = root_pairs_[root_index];
  QVector out;
  for (auto c : indices_of(BasisKind::Coroot)) {
    const QMatrix& H = matrices_[c];
    out.push_back(H(i, i) - H(j, j));
  }
  return out;
}

std::size_t LieAlgebra::opposite(std::size_t root_index) const {
  const auto [i, j] = root_pairs_.at(root_index);
  for (std::size_t k = 0; k < dim_; ++k)
    if (kinds_[k] != BasisKind::Coroot && root_pairs_[k].first == j && root_pairs_[k].second == i) return k;
  throw ContractError("opposite: not a root vector");
}

QMatrix LieAlgebra::to_matrix(const ElementVector& u) const {
  if (u.size() != dim_) throw StructuralError("to_matrix: coordinate length mismatch");
  const std::size_t n = rank_ + 1;
  QMatrix m(n, n);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (sgn(u[k]) == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) += u[k] * matrices_[k](i, j);
  }
  return m;
}

void LieAlgebra::verify() const {
  const std::size_t N = dim_;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t k = 0; k < N; ++k)
        if (structure_constant(a, b, k) != -structure_constant(b, a, k))
          throw std::logic_error("structure constants not antisymmetric");
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = 0; c < N; ++c) {
        const auto ea = basis_vector(a), eb = basis_vector(b), ec = basis_vector(c);
        auto j1 = bracket(ea, bracket(eb, ec));
        const auto j2 = bracket(eb, bracket(ec, ea));
        const auto j3 = bracket(ec, bracket(ea, eb));
        for (std::size_t k = 0; k < N; ++k) j1[k] += j2[k] + j3[k];
        if (!is_zero(j1)) throw std::logic_error("Jacobi identity fails");
        if (pairing(bracket(ea, eb), ec) != pairing(ea, bracket(eb, ec)))
          throw std::logic_error("form not invariant");
      }
  if (!(form_ == form_.transpose())) throw std::logic_error("form not symmetric");
  if (commvar::rank(form_) != N) throw std::logic_error("form degenerate");
  if (std::accumulate(degrees_.begin(), degrees_.end(), std::size_t{0}) != borel_dim_)
    throw std::logic_error("degree sum differs from Borel dimension");
  if (N != 2 * borel_dim_ - rank_) throw std::logic_error("dim g != 2 b - rank");
}

std::vector<ElementVector> centralizer(const LieAlgebra& lie, const ElementVector& x) {
  return rank_kernel(lie.ad(x)).kernel;
}

bool is_regular(const LieAlgebra& lie, const ElementVector& x) {
  return lie.dim() - rank(lie.ad(x)) == lie.rank();
}

ElementVector sample_rational(const LieAlgebra& lie, RationalSampler& sampler, long height_bound) {
  ElementVector v(lie.dim());
  for (auto& c : v) c = sampler.rational(height_bound);
  return v;
}

ElementVector sample_rational(const LieAlgebra& lie, std::uint64_t seed, long height_bound) {
  RationalSampler s(seed);
  return sample_rational(lie, s, height_bound);
}

}  // namespace commvar
