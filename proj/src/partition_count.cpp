#include "permclass/partition_count.hpp"

#include <mutex>
#include <numeric>

#include "permclass/errors.hpp"

namespace permclass {

void PartitionTable::ensure(int max_n) {
  if (max_n < 0) return;
  std::unique_lock lock(mutex_);
  if (static_cast<int>(values_.size()) > max_n) return;
  if (values_.empty()) values_.emplace_back(1);  // p(0) = 1
  for (int n = static_cast<int>(values_.size()); n <= max_n; ++n) {
    mpz_class acc = 0;
    for (long k = 1;; ++k) {
      const long g_minus = (3 * k * k - k) / 2;  // generalized pentagonal pair
      const long g_plus = g_minus + k;
      if (n < g_minus) break;
      const bool add = (k % 2) == 1;
      if (add)
        acc += values_[static_cast<size_t>(n - g_minus)];
      else
        acc -= values_[static_cast<size_t>(n - g_minus)];
      if (n >= g_plus) {
        if (add)
          acc += values_[static_cast<size_t>(n - g_plus)];
        else
          acc -= values_[static_cast<size_t>(n - g_plus)];
      }
    }
    values_.push_back(std::move(acc));
  }
}

mpz_class PartitionTable::value(int n) {
  if (n < 0) throw OutOfRange("partition index must be >= 0");
  {
    std::shared_lock lock(mutex_);
    if (n < static_cast<int>(values_.size()))
      return values_[static_cast<size_t>(n)];
  }
  ensure(n);
  std::shared_lock lock(mutex_);
  return values_[static_cast<size_t>(n)];
}

int PartitionTable::size() const {
  std::shared_lock lock(mutex_);
  return static_cast<int>(values_.size());
}

mpz_class partition_exact(int n) {
  static PartitionTable table;
  return table.value(n);
}

std::pair<long, long> pentagonal_limits(long n) {
  if (n < 1) throw OutOfRange("pentagonal_limits requires n >= 1");
  const mpz_class radicand = 24 * mpz_class(n) + 1;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  const mpz_class k1 = (root - 1) / 6;
  const mpz_class k2 = (root + 1) / 6;
  return {k1.get_si(), k2.get_si()};
}

mpz_class class_count(int n) { return partition_exact(n); }

void enumerate_partitions(
    int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 1) throw OutOfRange("partition enumeration requires n >= 1");
  // Kelleher's accelerated ascending-composition generator.
  std::vector<int> a(static_cast<size_t>(n) + 1, 0);
  std::vector<int> parts;
  int k = 1;
  int y = n - 1;
  while (k != 0) {
    int x = a[static_cast<size_t>(k) - 1] + 1;
    --k;
    while (2 * x <= y) {
      a[static_cast<size_t>(k)] = x;
      y -= x;
      ++k;
    }
    const int l = k + 1;
    while (x <= y) {
      a[static_cast<size_t>(k)] = x;
      a[static_cast<size_t>(l)] = y;
      parts.assign(a.begin(), a.begin() + k + 2);
      visit(parts);
      ++x;
      --y;
    }
    a[static_cast<size_t>(k)] = x + y;
    y = x + y - 1;
    parts.assign(a.begin(), a.begin() + k + 1);
    visit(parts);
  }
}

void enumerate_class_representatives(
    int n, const std::function<void(const Permutation&)>& visit) {
  enumerate_partitions(n, [n, &visit](const std::vector<int>& parts) {
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    int offset = 0;  // parts ascend, so the 1-parts come first
    for (int part : parts) {
      for (int v = 1; v < part; ++v)
        images[static_cast<size_t>(offset + v) - 1] = offset + v + 1;
      images[static_cast<size_t>(offset + part) - 1] = offset + 1;
      offset += part;
    }
    visit(Permutation::from_images(std::move(images)));
  });
}

std::vector<Permutation> class_representatives(int n) {
  std::vector<Permutation> reps;
  enumerate_class_representatives(
      n, [&reps](const Permutation& p) { reps.push_back(p); });
  return reps;
}

}  // namespace permclass
