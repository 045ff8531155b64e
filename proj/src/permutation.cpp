#include "permclass/permutation.hpp"

#include <numeric>
#include <string>

#include "permclass/errors.hpp"

namespace permclass {

Permutation Permutation::identity(int n) {
  if (n < 0) throw OutOfRange("permutation order must be >= 0");
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int j = 0; j < n; ++j) {
    const int v = images[static_cast<size_t>(j)];
    if (v < 1 || v > n)
      throw NotPermutation("image " + std::to_string(v) + " of index " +
                           std::to_string(j + 1) + " is outside 1.." +
                           std::to_string(n));
    if (seen[static_cast<size_t>(v)])
      throw NotPermutation("image " + std::to_string(v) +
                           " appears more than once");
    seen[static_cast<size_t>(v)] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (size_t j = 0; j < images_.size(); ++j)
    if (images_[j] != static_cast<int>(j) + 1) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.order() != b.order())
    throw DimensionMismatch("compose: orders " + std::to_string(a.order()) +
                            " and " + std::to_string(b.order()) + " differ");
  std::vector<int> images(static_cast<size_t>(a.order()));
  for (int j = 1; j <= a.order(); ++j)
    images[static_cast<size_t>(j) - 1] = a(b(j));
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<size_t>(p.order()));
  for (int j = 1; j <= p.order(); ++j)
    images[static_cast<size_t>(p(j)) - 1] = j;
  return Permutation::from_images(std::move(images));
}

Permutation power(const Permutation& p, unsigned long long m) {
  Permutation result = Permutation::identity(p.order());
  Permutation base = p;
  while (m > 0) {
    if (m & 1ULL) result = compose(result, base);
    m >>= 1;
    if (m > 0) base = compose(base, base);
  }
  return result;
}

Permutation perm_from_matrix(const DenseBinaryMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw NotSquare("matrix row has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(n));
  std::vector<int> images(static_cast<size_t>(n), 0);
  std::vector<int> row_count(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const long v = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (v != 0 && v != 1)
        throw BadEntry("entry " + std::to_string(v) + " at (" +
                       std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       ") is outside {0,1}");
      if (v == 1) {
        if (images[static_cast<size_t>(j)] != 0)
          throw NotPermutation("column " + std::to_string(j + 1) +
                               " has more than one unit");
        images[static_cast<size_t>(j)] = i + 1;
        ++row_count[static_cast<size_t>(i)];
      }
    }
  }
  for (int j = 0; j < n; ++j)
    if (images[static_cast<size_t>(j)] == 0)
      throw NotPermutation("column " + std::to_string(j + 1) + " has no unit");
  for (int i = 0; i < n; ++i)
    if (row_count[static_cast<size_t>(i)] != 1)
      throw NotPermutation("row " + std::to_string(i + 1) +
                           " does not have exactly one unit");
  return Permutation::from_images(std::move(images));
}

}  // namespace permclass
