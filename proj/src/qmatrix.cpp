#include "commvar/qmatrix.hpp"

#include "commvar/errors.hpp"

namespace commvar {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw StructuralError("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QVector QMatrix::apply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw StructuralError("apply: length mismatch");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw StructuralError("matrix product: shape mismatch");
  QMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

bool is_zero(std::span<const Rat> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw StructuralError("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RankKernel rank_kernel(const QMatrix& m) {
  RankKernel out;
  QMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) swap(a(piv, k), a(r, k));
    const Rat inv = 1 / a(r, c);
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rat f = a(i, c);
      for (std::size_t k = c; k < cols; ++k) a(i, k) -= f * a(r, k);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < out.pivot_cols.size(); ++i) v[out.pivot_cols[i]] = -a(i, free);
    out.kernel.push_back(std::move(v));
  }
  out.rref = std::move(a);
  if (out.rank + out.kernel.size() != cols) throw std::logic_error("rank-nullity violated");
  for (const auto& v : out.kernel)
    if (!is_zero(m.apply(v))) throw std::logic_error("kernel vector not annihilated");
  return out;
}

std::size_t rank(const QMatrix& m) {
  // Sparse path; cheaper than the full decomposition for large inputs.
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVec v;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) v.emplace_back(static_cast<std::uint32_t>(c), m(r, c));
    rows.push_back(std::move(v));
  }
  return sparse_rank(rows);
}

std::vector<QVector> row_basis(const QMatrix& m) {
  auto rk = rank_kernel(m);
  std::vector<QVector> out;
  for (std::size_t i = 0; i < rk.rank; ++i) out.push_back(rk.rref.row(i));
  return out;
}

std::optional<QVector> solve(const QMatrix& a, std::span<const Rat> b) {
  if (b.size() != a.rows()) throw StructuralError("solve: length mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto rk = rank_kernel(aug);
  QVector x(a.cols());
  for (std::size_t i = 0; i < rk.rank; ++i) {
    const std::size_t pc = rk.pivot_cols[i];
    if (pc == a.cols()) return std::nullopt;
    x[pc] = rk.rref(i, a.cols());
  }
  return x;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw ContractError("inverse: matrix not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto rk = rank_kernel(aug);
  if (rk.rank < n || rk.pivot_cols[n - 1] != n - 1) throw ContractError("inverse: singular matrix");
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rk.rref(r, n + c);
  return inv;
}

std::map<std::uint32_t, Rat> SparseEchelon::reduce(const SparseVec& v) const {
  std::map<std::uint32_t, Rat> work;
  for (const auto& [c, x] : v)
    if (sgn(x) != 0) work[c] += x;
  for (auto it = work.begin(); it != work.end();) {
    if (sgn(it->second) == 0) {
      it = work.erase(it);
      continue;
    }
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const Rat f = it->second;
    // pivot row has a leading 1 at it->first; remaining entries lie to the right
    for (std::size_t k = 1; k < p->second.size(); ++k) {
      const auto& [c, x] = p->second[k];
      auto [w, inserted] = work.try_emplace(c, 0);
      w->second -= f * x;
    }
    it = work.erase(it);
  }
  return work;
}

bool SparseEchelon::insert(const SparseVec& v) {
  auto work = reduce(v);
  if (work.empty()) return false;
  const Rat inv = 1 / work.begin()->second;
  SparseVec row;
  row.reserve(work.size());
  for (auto& [c, x] : work) row.emplace_back(c, x * inv);
  const auto lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool SparseEchelon::contains(const SparseVec& v) const { return reduce(v).empty(); }

std::size_t sparse_rank(const std::vector<SparseVec>& rows) {
  SparseEchelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace commvar

namespace commvar {

namespace {

using u64 = std::uint64_t;
constexpr u64 P = ModularEchelon::kPrime;

u64 mul_mod(u64 a, u64 b) {
  const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  const u64 lo = static_cast<u64>(t & P);
  const u64 hi = static_cast<u64>(t >> 61);
  u64 s = lo + hi;
  if (s >= P) s -= P;
  return s;
}

u64 pow_mod(u64 a, u64 e) {
  u64 r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a))
    if (e & 1) r = mul_mod(r, a);
  return r;
}

u64 mpz_mod(const Int& z) {
  Int m = z % Int(static_cast<unsigned long>(P));
  if (m < 0) m += static_cast<unsigned long>(P);
  return m.get_ui();
}

}  // namespace

std::optional<std::uint64_t> ModularEchelon::reduce(const Rat& x) {
  const u64 den = mpz_mod(x.get_den());
  if (den == 0) return std::nullopt;
  return mul_mod(mpz_mod(x.get_num()), pow_mod(den, P - 2));
}

bool ModularEchelon::insert(const SparseVec& v) {
  if (!usable_) return false;
  std::vector<u64> row(cols_, 0);
  for (const auto& [c, x] : v) {
    const auto r = reduce(x);
    if (!r) {
      usable_ = false;
      return false;
    }
    row.at(c) = *r;
  }
  for (std::size_t k = 0; k < pivot_rows_.size(); ++k) {
    const u64 f = row[pivot_cols_[k]];
    if (f == 0) continue;
    const auto& pr = pivot_rows_[k];
    for (std::size_t j = pivot_cols_[k]; j < cols_; ++j)
      if (pr[j]) row[j] = (row[j] + P - mul_mod(f, pr[j])) % P;
  }
  std::size_t lead = 0;
  while (lead < cols_ && row[lead] == 0) ++lead;
  if (lead == cols_) return true;
  const u64 inv = pow_mod(row[lead], P - 2);
  for (std::size_t j = lead; j < cols_; ++j) row[j] = mul_mod(row[j], inv);
  pivot_rows_.push_back(std::move(row));
  pivot_cols_.push_back(lead);
  return true;
}

}  // namespace commvar
