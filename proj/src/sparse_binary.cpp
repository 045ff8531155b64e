#include "permclass/sparse_binary.hpp"

#include <algorithm>
#include <string>

#include "permclass/errors.hpp"

namespace permclass {

SparseBinaryMatrix::SparseBinaryMatrix(int n, std::vector<Entry> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 0) throw OutOfRange("matrix order must be >= 0");
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) {
              return std::pair(a.second, a.first) < std::pair(b.second, b.first);
            });
  std::vector<char> row_used(static_cast<size_t>(n) + 1, 0);
  std::vector<char> col_used(static_cast<size_t>(n) + 1, 0);
  for (const auto& [row, col] : entries_) {
    if (row < 1 || row > n || col < 1 || col > n)
      throw BadEntry("entry (" + std::to_string(row) + "," +
                     std::to_string(col) + ") is outside 1.." +
                     std::to_string(n));
    if (row_used[static_cast<size_t>(row)])
      throw BadEntry("row " + std::to_string(row) + " has more than one unit");
    if (col_used[static_cast<size_t>(col)])
      throw BadEntry("column " + std::to_string(col) +
                     " has more than one unit");
    row_used[static_cast<size_t>(row)] = 1;
    col_used[static_cast<size_t>(col)] = 1;
  }
}

SparseBinaryMatrix SparseBinaryMatrix::identity(int n) {
  std::vector<Entry> entries;
  entries.reserve(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) entries.push_back({j, j});
  return SparseBinaryMatrix(n, std::move(entries));
}

SparseBinaryMatrix SparseBinaryMatrix::zero(int n) {
  return SparseBinaryMatrix(n, {});
}

bool SparseBinaryMatrix::is_diagonal() const noexcept {
  for (const auto& [row, col] : entries_)
    if (row != col) return false;
  return true;
}

bool SparseBinaryMatrix::is_identity() const noexcept {
  return static_cast<int>(entries_.size()) == n_ && is_diagonal();
}

SparseBinaryMatrix SparseBinaryMatrix::transpose() const {
  std::vector<Entry> flipped;
  flipped.reserve(entries_.size());
  for (const auto& [row, col] : entries_) flipped.push_back({col, row});
  return SparseBinaryMatrix(n_, std::move(flipped));
}

SparseBinaryMatrix product(const SparseBinaryMatrix& a,
                           const SparseBinaryMatrix& b) {
  if (a.order() != b.order())
    throw DimensionMismatch("product: orders " + std::to_string(a.order()) +
                            " and " + std::to_string(b.order()) + " differ");
  // a's entries sorted by column: look up a's entry whose column equals the
  // row of each entry of b.
  const auto& lhs = a.entries();
  std::vector<SparseBinaryMatrix::Entry> result;
  result.reserve(b.entries().size());
  for (const auto& [row, col] : b.entries()) {
    auto it = std::lower_bound(
        lhs.begin(), lhs.end(), row,
        [](const SparseBinaryMatrix::Entry& e, int c) { return e.second < c; });
    if (it != lhs.end() && it->second == row) result.push_back({it->first, col});
  }
  return SparseBinaryMatrix(a.order(), std::move(result));
}

SparseBinaryMatrix spower(const SparseBinaryMatrix& m, unsigned long long e) {
  SparseBinaryMatrix result = SparseBinaryMatrix::identity(m.order());
  SparseBinaryMatrix base = m;
  while (e > 0) {
    if (e & 1ULL) result = product(result, base);
    e >>= 1;
    if (e > 0) base = product(base, base);
  }
  return result;
}

SparseBinaryMatrix matrix_from_perm(const Permutation& p) {
  std::vector<SparseBinaryMatrix::Entry> entries;
  entries.reserve(static_cast<size_t>(p.order()));
  for (int j = 1; j <= p.order(); ++j) entries.push_back({p(j), j});
  return SparseBinaryMatrix(p.order(), std::move(entries));
}

}  // namespace permclass
