#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permclass/permutation.hpp"

namespace permclass {

// Orbits of sigma on {1..n} in discovery order: each orbit starts at the
// smallest index not yet visited and follows sigma until it returns, so every
// orbit is listed from its minimal element and orbits appear in increasing
// order of their minima.
struct OrbitPartition {
  int n = 0;
  std::vector<std::vector<int>> orbits;
};

OrbitPartition orbit_partition(const Permutation& p);

// Similarity-class invariant: fixed-point count plus the sorted sizes of the
// nontrivial cycles. fixed_points + sum(lengths) == n.
struct CycleType {
  int n = 0;
  int fixed_points = 0;
  std::vector<int> lengths;  // ascending, every entry >= 2

  bool operator==(const CycleType&) const = default;
};

CycleType cycle_type(const OrbitPartition& parts);
CycleType cycle_type(const Permutation& p);

// "t=1 k=[2,3]"
std::string to_string(const CycleType& type);

// The permutation acting on the block (offset, offset+k] as one k-cycle and
// fixing everything else; within the block the matrix has a unit subdiagonal
// plus a unit in the top-right corner. Throws BlockOutOfRange.
Permutation standard_cycle_matrix(int k, int n, int offset);

struct CanonicalDecomposition {
  Permutation canonical;   // fixed points first, then ascending cycle blocks
  Permutation conjugator;  // canonical == conjugator^{-1} * p * conjugator
  CycleType type;
};

// Deterministic canonical form: the conjugator's column c holds the unit of
// the c-th element of the reordered basis (fixed-point orbits first, then
// nontrivial orbits ascending by (size, minimal element), each orbit listed
// from its minimal element). The conjugation identity is re-checked before
// returning; a failure throws VerificationError.
CanonicalDecomposition canonical_form(const Permutation& p);

struct SimilarityVerdict {
  bool similar = false;
  std::optional<Permutation> witness;  // witness^{-1} * a * witness == b
};

// Two permutation matrices are similar under permutation conjugation exactly
// when their cycle types agree. Throws DimensionMismatch on unequal orders.
SimilarityVerdict are_permutation_similar(const Permutation& a,
                                          const Permutation& b);

}  // namespace permclass
