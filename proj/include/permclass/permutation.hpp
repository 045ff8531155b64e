#pragma once

#include <vector>

namespace permclass {

// A permutation sigma of {1..n} in one-line form. As a matrix it is the 0-1
// matrix A with A e_j = e_{sigma(j)}: the unit of column j sits in row
// sigma(j). All indices are 1-based; order 0 is allowed.
class Permutation {
 public:
  Permutation() = default;  // order 0

  static Permutation identity(int n);

  // Validates that `images` is a bijection of {1..images.size()}.
  static Permutation from_images(std::vector<int> images);

  int order() const noexcept { return static_cast<int>(images_.size()); }

  // sigma(j) for j in 1..order().
  int operator()(int j) const { return images_[static_cast<size_t>(j) - 1]; }

  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Matrix product A*B, i.e. (a.b)(j) = a(b(j)). Throws DimensionMismatch.
Permutation compose(const Permutation& a, const Permutation& b);

// Two-sided inverse; for permutation matrices this equals the transpose.
Permutation inverse(const Permutation& p);

// p^m by repeated squaring; p^0 is the identity.
Permutation power(const Permutation& p, unsigned long long m);

// Dense 0-1 matrix as rows of entries.
using DenseBinaryMatrix = std::vector<std::vector<long>>;

// Reads sigma off a dense permutation matrix: sigma(j) = row of the unit in
// column j. Throws NotSquare, BadEntry (entry outside {0,1}) or
// NotPermutation (a row or column without exactly one unit).
Permutation perm_from_matrix(const DenseBinaryMatrix& m);

}  // namespace permclass
