#pragma once

#include <optional>
#include <vector>

#include "permclass/cycle_structure.hpp"
#include "permclass/permutation.hpp"
#include "permclass/sparse_binary.hpp"

namespace permclass {

// Diagonal 0-1 matrix with units exactly on `support`; idempotent under
// matrix product.
struct SupportProjector {
  int n = 0;
  std::vector<int> support;  // sorted ascending

  SparseBinaryMatrix matrix() const;
  SupportProjector complement() const;
};

SupportProjector support_projector(int n, std::vector<int> support);

// Additive decomposition p = sum(summands) + fixed_diagonal with pairwise
// disjoint entry sets. Summand i covers one nontrivial orbit; orders[i] is
// its cycle order (= entry count = rank). The identity decomposes into zero
// summands plus the full diagonal.
struct SummandDecomposition {
  std::vector<SparseBinaryMatrix> summands;
  SparseBinaryMatrix fixed_diagonal;
  std::vector<int> orders;
};

SummandDecomposition cycle_summands(const Permutation& p);

// Multiplicative decomposition p = product(factors); the factors commute
// pairwise and factor i acts as p on one nontrivial orbit and as the identity
// elsewhere. The identity yields an empty factor list.
struct FactorDecomposition {
  std::vector<Permutation> factors;
  std::vector<int> orders;
};

FactorDecomposition cycle_factors(const Permutation& p);

// Cycle order k if p is exactly one k-cycle (k >= 2) plus fixed points;
// the power conditions p^k == I, p^i != I (i < k) are re-checked as a
// cross-check and any disagreement throws VerificationError.
std::optional<int> classify_type_I(const Permutation& p);

// Cycle order k if the k entries of m (k >= 2) form a single k-cycle on a
// k-subset. The accepting verdict is cross-checked against the power
// conditions (m^k diagonal of rank k, lower powers non-diagonal); a
// disagreement throws VerificationError. Note the power conditions alone are
// weaker: a support splitting into cycles whose lcm equals their total size
// (e.g. lengths 1,2,3) passes them without being a single cycle, so the
// single-cycle reading decides the verdict.
std::optional<int> classify_type_II(const SparseBinaryMatrix& m);

struct SummandReport {
  bool disjoint_union_ok = false;  // entry sets partition those of p
  bool rank_sum_ok = false;        // sum rank(Q_i) + t == n and orders match
  bool diagonal_ok = false;        // fixed part is diagonal with unit entries
  bool type_ii_ok = false;         // classify_type_II(Q_i) == orders[i]
  bool orthogonality_ok = false;   // Q_i Q_j == 0, Q_i D == D Q_i == 0

  bool pass() const {
    return disjoint_union_ok && rank_sum_ok && diagonal_ok && type_ii_ok &&
           orthogonality_ok;
  }
};

// Checks every decomposition invariant plus the orthogonality relations.
// Throws DimensionMismatch if the orders disagree with p.
SummandReport validate_summands(const Permutation& p,
                                const SummandDecomposition& d);

}  // namespace permclass
