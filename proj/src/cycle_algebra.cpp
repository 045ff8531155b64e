#include "permclass/cycle_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "permclass/errors.hpp"

namespace permclass {

namespace {

// Full power-condition scans are quadratic in the cycle order; beyond this
// bound only the k-th power is cross-checked (by repeated squaring).
constexpr int kPowerScanLimit = 4096;

std::vector<const std::vector<int>*> sorted_nontrivial(
    const OrbitPartition& parts) {
  std::vector<const std::vector<int>*> cycles;
  for (const auto& orbit : parts.orbits)
    if (orbit.size() > 1) cycles.push_back(&orbit);
  std::sort(cycles.begin(), cycles.end(),
            [](const std::vector<int>* a, const std::vector<int>* b) {
              return std::pair(a->size(), a->front()) <
                     std::pair(b->size(), b->front());
            });
  return cycles;
}

}  // namespace

SparseBinaryMatrix SupportProjector::matrix() const {
  std::vector<SparseBinaryMatrix::Entry> entries;
  entries.reserve(support.size());
  for (int j : support) entries.push_back({j, j});
  return SparseBinaryMatrix(n, std::move(entries));
}

SupportProjector SupportProjector::complement() const {
  std::vector<char> in(static_cast<size_t>(n) + 1, 0);
  for (int j : support) in[static_cast<size_t>(j)] = 1;
  SupportProjector other{n, {}};
  for (int j = 1; j <= n; ++j)
    if (!in[static_cast<size_t>(j)]) other.support.push_back(j);
  return other;
}

SupportProjector support_projector(int n, std::vector<int> support) {
  std::sort(support.begin(), support.end());
  for (size_t i = 0; i < support.size(); ++i) {
    if (support[i] < 1 || support[i] > n)
      throw BadEntry("support index " + std::to_string(support[i]) +
                     " is outside 1.." + std::to_string(n));
    if (i > 0 && support[i] == support[i - 1])
      throw BadEntry("duplicate support index " + std::to_string(support[i]));
  }
  return SupportProjector{n, std::move(support)};
}

SummandDecomposition cycle_summands(const Permutation& p) {
  const OrbitPartition parts = orbit_partition(p);
  SummandDecomposition d;
  std::vector<SparseBinaryMatrix::Entry> diag;
  for (const auto& orbit : parts.orbits)
    if (orbit.size() == 1) diag.push_back({orbit.front(), orbit.front()});
  d.fixed_diagonal = SparseBinaryMatrix(p.order(), std::move(diag));
  for (const auto* orbit : sorted_nontrivial(parts)) {
    std::vector<SparseBinaryMatrix::Entry> entries;
    entries.reserve(orbit->size());
    for (int j : *orbit) entries.push_back({p(j), j});
    d.summands.emplace_back(p.order(), std::move(entries));
    d.orders.push_back(static_cast<int>(orbit->size()));
  }
  return d;
}

FactorDecomposition cycle_factors(const Permutation& p) {
  const OrbitPartition parts = orbit_partition(p);
  FactorDecomposition f;
  for (const auto* orbit : sorted_nontrivial(parts)) {
    std::vector<int> images(static_cast<size_t>(p.order()));
    std::iota(images.begin(), images.end(), 1);
    for (int j : *orbit) images[static_cast<size_t>(j) - 1] = p(j);
    f.factors.push_back(Permutation::from_images(std::move(images)));
    f.orders.push_back(static_cast<int>(orbit->size()));
  }
  return f;
}

std::optional<int> classify_type_I(const Permutation& p) {
  const OrbitPartition parts = orbit_partition(p);
  const std::vector<int>* cycle = nullptr;
  for (const auto& orbit : parts.orbits) {
    if (orbit.size() == 1) continue;
    if (cycle != nullptr) return std::nullopt;  // more than one cycle
    cycle = &orbit;
  }
  if (cycle == nullptr) return std::nullopt;  // identity
  const int k = static_cast<int>(cycle->size());

  if (!power(p, static_cast<unsigned long long>(k)).is_identity())
    throw VerificationError("type I cross-check: p^k is not the identity");
  if (k <= kPowerScanLimit) {
    Permutation acc = p;
    for (int i = 1; i < k; ++i) {
      if (acc.is_identity())
        throw VerificationError("type I cross-check: p^" + std::to_string(i) +
                                " is the identity with i < k");
      acc = compose(acc, p);
    }
  }
  return k;
}

std::optional<int> classify_type_II(const SparseBinaryMatrix& m) {
  const int k = static_cast<int>(m.entries().size());
  if (k < 2 || k > m.order()) return std::nullopt;

  // Structural test: entries, read as the map column -> row, must form one
  // k-cycle on a k-subset. Rows and columns hit are distinct by construction,
  // so rank == k; the support must be closed and connected.
  std::unordered_map<int, int> next;
  next.reserve(static_cast<size_t>(k));
  for (const auto& [row, col] : m.entries()) next[col] = row;
  for (const auto& [row, col] : m.entries())
    if (!next.count(row)) return std::nullopt;  // support not closed
  int steps = 0;
  const int start = m.entries().front().second;
  int j = start;
  do {
    j = next[j];
    ++steps;
  } while (j != start && steps <= k);
  if (steps != k) return std::nullopt;  // several cycles, or a fixed entry

  // Cross-check against the power conditions.
  bool ok = true;
  if (k <= kPowerScanLimit) {
    SparseBinaryMatrix acc = m;
    for (int i = 1; i < k && ok; ++i) {
      ok = !acc.is_diagonal();
      acc = product(acc, m);
    }
    ok = ok && acc.is_diagonal() && acc.rank() == k;
  } else {
    const SparseBinaryMatrix pk = spower(m, static_cast<unsigned long long>(k));
    ok = !m.is_diagonal() && pk.is_diagonal() && pk.rank() == k;
  }
  if (!ok)
    throw VerificationError(
        "type II cross-check: power conditions disagree with the structural "
        "test");
  return k;
}

SummandReport validate_summands(const Permutation& p,
                                const SummandDecomposition& d) {
  const int n = p.order();
  if (d.fixed_diagonal.order() != n)
    throw DimensionMismatch("fixed diagonal order " +
                            std::to_string(d.fixed_diagonal.order()) +
                            " does not match " + std::to_string(n));
  for (const auto& q : d.summands)
    if (q.order() != n)
      throw DimensionMismatch("summand order " + std::to_string(q.order()) +
                              " does not match " + std::to_string(n));

  SummandReport report;

  std::set<SparseBinaryMatrix::Entry> combined;
  size_t total = 0;
  for (const auto& q : d.summands) {
    combined.insert(q.entries().begin(), q.entries().end());
    total += q.entries().size();
  }
  combined.insert(d.fixed_diagonal.entries().begin(),
                  d.fixed_diagonal.entries().end());
  total += d.fixed_diagonal.entries().size();
  const SparseBinaryMatrix target = matrix_from_perm(p);
  report.disjoint_union_ok =
      combined.size() == total &&
      combined == std::set<SparseBinaryMatrix::Entry>(
                      target.entries().begin(), target.entries().end());

  report.rank_sum_ok = d.orders.size() == d.summands.size();
  int rank_sum = 0;
  for (size_t i = 0; i < d.summands.size() && report.rank_sum_ok; ++i) {
    report.rank_sum_ok = d.summands[i].rank() == d.orders[i];
    rank_sum += d.summands[i].rank();
  }
  report.rank_sum_ok =
      report.rank_sum_ok && rank_sum + d.fixed_diagonal.rank() == n;

  report.diagonal_ok = d.fixed_diagonal.is_diagonal();

  report.type_ii_ok = true;
  for (size_t i = 0; i < d.summands.size() && report.type_ii_ok; ++i)
    report.type_ii_ok = classify_type_II(d.summands[i]) ==
                        std::optional<int>(d.orders[i]);

  report.orthogonality_ok = true;
  for (size_t i = 0; i < d.summands.size() && report.orthogonality_ok; ++i) {
    for (size_t j = 0; j < d.summands.size() && report.orthogonality_ok; ++j) {
      if (i == j) continue;
      report.orthogonality_ok =
          product(d.summands[i], d.summands[j]).is_zero();
    }
    report.orthogonality_ok =
        report.orthogonality_ok &&
        product(d.summands[i], d.fixed_diagonal).is_zero() &&
        product(d.fixed_diagonal, d.summands[i]).is_zero();
  }

  return report;
}

}  // namespace permclass
