#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "commvar/rat.hpp"

namespace commvar {

using QVector = std::vector<Rat>;

/// Dense exact matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QVector apply(std::span<const Rat> v) const;
  QMatrix operator*(const QMatrix& other) const;
  QMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const QMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct RankKernel {
  std::size_t rank = 0;
  /// Basis of {v : M v = 0}, one vector per free column.
  std::vector<QVector> kernel;
  /// Reduced row echelon form of M (nonzero rows first).
  QMatrix rref;
  std::vector<std::size_t> pivot_cols;
};

/// Exact reduced row echelon decomposition. Rank-nullity and M v = 0 for
/// every returned kernel vector are checked before returning.
RankKernel rank_kernel(const QMatrix& m);
std::size_t rank(const QMatrix& m);
/// Rows of the RREF: a basis of the row space.
std::vector<QVector> row_basis(const QMatrix& m);
/// Some x with A x = b, or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& a, std::span<const Rat> b);
/// Throws ContractError when singular.
QMatrix inverse(const QMatrix& m);

bool is_zero(std::span<const Rat> v);
Rat dot(std::span<const Rat> a, std::span<const Rat> b);

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseVec = std::vector<std::pair<std::uint32_t, Rat>>;

/// Incremental row echelon form over Q for large sparse families.
class SparseEchelon {
 public:
  /// Stores v when it is independent of what is already stored.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::uint32_t, Rat> reduce(const SparseVec& v) const;
  std::unordered_map<std::uint32_t, SparseVec> pivots_;
};

std::size_t sparse_rank(const std::vector<SparseVec>& rows);

/// Row echelon form of the reduction modulo the prime 2^61 - 1. Its rank is a
/// lower bound for the rank over Q of the same rows.
class ModularEchelon {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  explicit ModularEchelon(std::size_t cols) : cols_(cols) {}
  /// False when a denominator vanishes modulo the prime; the row is dropped
  /// and the echelon marked unusable.
  bool insert(const SparseVec& v);
  bool usable() const { return usable_; }
  std::size_t rank() const { return pivot_rows_.size(); }

  static std::optional<std::uint64_t> reduce(const Rat& x);

 private:
  std::size_t cols_;
  bool usable_ = true;
  std::vector<std::vector<std::uint64_t>> pivot_rows_;
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace commvar
