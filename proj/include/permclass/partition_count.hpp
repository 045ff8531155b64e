#pragma once

#include <gmpxx.h>

#include <functional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "permclass/permutation.hpp"

namespace permclass {

// Memoized table of partition numbers p(0..max), built with the
// pentagonal-number recurrence in exact integer arithmetic. Published entries
// never change; concurrent readers are safe and extension takes the writer
// lock.
class PartitionTable {
 public:
  void ensure(int max_n);
  mpz_class value(int n);  // grows the table on demand
  int size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::vector<mpz_class> values_;
};

// p(n) from a process-wide shared table.
mpz_class partition_exact(int n);

// Largest k with n - (3k^2+k)/2 >= 0, resp. n - (3k^2-k)/2 >= 0. Evaluated
// with exact integer square roots; the non-negativity conditions are the
// authoritative definition of the summation range.
std::pair<long, long> pentagonal_limits(long n);

// Number of permutation-similarity classes of order n; equals p(n).
mpz_class class_count(int n);

// All partitions of n as ascending part lists, visited in lexicographic
// order of those lists.
void enumerate_partitions(int n,
                          const std::function<void(const std::vector<int>&)>& visit);

// One canonical representative per similarity class of order n, streamed in
// the enumeration order of the underlying partitions: parts equal to 1
// become fixed points, larger parts become standard cycle blocks. Every
// representative is its own canonical form.
void enumerate_class_representatives(
    int n, const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> class_representatives(int n);

}  // namespace permclass
