#pragma once

#include <utility>
#include <vector>

#include "permclass/permutation.hpp"

namespace permclass {

// Sub-permutation 0-1 matrix: at most one unit per row and per column,
// stored as the set of (row, col) unit positions sorted by column. Products
// and powers stay sparse, so large orders are cheap as long as the entry
// count is small.
class SparseBinaryMatrix {
 public:
  using Entry = std::pair<int, int>;  // (row, col), 1-based

  SparseBinaryMatrix() = default;  // order 0
  SparseBinaryMatrix(int n, std::vector<Entry> entries);

  static SparseBinaryMatrix identity(int n);
  static SparseBinaryMatrix zero(int n);

  int order() const noexcept { return n_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  // For sub-permutation matrices the rank is the entry count.
  int rank() const noexcept { return static_cast<int>(entries_.size()); }

  bool is_zero() const noexcept { return entries_.empty(); }
  bool is_diagonal() const noexcept;
  bool is_identity() const noexcept;

  SparseBinaryMatrix transpose() const;

  bool operator==(const SparseBinaryMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<Entry> entries_;  // sorted by column
};

// Matrix product a*b on entry sets. Throws DimensionMismatch.
SparseBinaryMatrix product(const SparseBinaryMatrix& a,
                           const SparseBinaryMatrix& b);

// m^e by repeated squaring; m^0 is the identity.
SparseBinaryMatrix spower(const SparseBinaryMatrix& m, unsigned long long e);

// The permutation matrix of p as an entry set {(p(j), j)}.
SparseBinaryMatrix matrix_from_perm(const Permutation& p);

}  // namespace permclass
