#include "permclass/cycle_structure.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "permclass/errors.hpp"

namespace permclass {

OrbitPartition orbit_partition(const Permutation& p) {
  const int n = p.order();
  OrbitPartition result{n, {}};
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> orbit{start};
    seen[static_cast<size_t>(start)] = 1;
    for (int j = p(start); j != start; j = p(j)) {
      orbit.push_back(j);
      seen[static_cast<size_t>(j)] = 1;
    }
    result.orbits.push_back(std::move(orbit));
  }
  return result;
}

CycleType cycle_type(const OrbitPartition& parts) {
  CycleType type{parts.n, 0, {}};
  for (const auto& orbit : parts.orbits) {
    if (orbit.size() == 1)
      ++type.fixed_points;
    else
      type.lengths.push_back(static_cast<int>(orbit.size()));
  }
  std::sort(type.lengths.begin(), type.lengths.end());
  return type;
}

CycleType cycle_type(const Permutation& p) {
  return cycle_type(orbit_partition(p));
}

std::string to_string(const CycleType& type) {
  std::string out = "t=" + std::to_string(type.fixed_points) + " k=[";
  for (size_t i = 0; i < type.lengths.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(type.lengths[i]);
  }
  out += "]";
  return out;
}

Permutation standard_cycle_matrix(int k, int n, int offset) {
  if (k < 2) throw BlockOutOfRange("cycle order must be >= 2");
  if (offset < 0 || offset + k > n)
    throw BlockOutOfRange("block (" + std::to_string(offset) + ", " +
                          std::to_string(offset + k) +
                          "] does not fit in order " + std::to_string(n));
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (int v = 1; v < k; ++v)
    images[static_cast<size_t>(offset + v) - 1] = offset + v + 1;
  images[static_cast<size_t>(offset + k) - 1] = offset + 1;
  return Permutation::from_images(std::move(images));
}

namespace {

// Nontrivial orbits ascending by (size, minimal element); minima are
// distinct, so the order is total.
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

CanonicalDecomposition canonical_form(const Permutation& p) {
  const OrbitPartition parts = orbit_partition(p);
  const auto cycles = sorted_nontrivial(parts);

  std::vector<int> basis;  // c-th element: the old index carrying new index c
  basis.reserve(static_cast<size_t>(p.order()));
  for (const auto& orbit : parts.orbits)
    if (orbit.size() == 1) basis.push_back(orbit.front());
  const int t = static_cast<int>(basis.size());
  for (const auto* orbit : cycles)
    basis.insert(basis.end(), orbit->begin(), orbit->end());

  std::vector<int> canon(static_cast<size_t>(p.order()));
  std::iota(canon.begin(), canon.end(), 1);
  int offset = t;
  for (const auto* orbit : cycles) {
    const int k = static_cast<int>(orbit->size());
    for (int v = 1; v < k; ++v)
      canon[static_cast<size_t>(offset + v) - 1] = offset + v + 1;
    canon[static_cast<size_t>(offset + k) - 1] = offset + 1;
    offset += k;
  }

  CanonicalDecomposition result{Permutation::from_images(std::move(canon)),
                                Permutation::from_images(std::move(basis)),
                                cycle_type(parts)};
  if (compose(compose(inverse(result.conjugator), p), result.conjugator) !=
      result.canonical)
    throw VerificationError("canonical_form: conjugation check failed");
  return result;
}

SimilarityVerdict are_permutation_similar(const Permutation& a,
                                          const Permutation& b) {
  if (a.order() != b.order())
    throw DimensionMismatch("orders " + std::to_string(a.order()) + " and " +
                            std::to_string(b.order()) + " differ");
  const CanonicalDecomposition ca = canonical_form(a);
  const CanonicalDecomposition cb = canonical_form(b);
  if (!(ca.type == cb.type)) return {false, std::nullopt};
  Permutation witness = compose(ca.conjugator, inverse(cb.conjugator));
  if (compose(compose(inverse(witness), a), witness) != b)
    throw VerificationError("similarity witness failed its conjugation check");
  return {true, std::move(witness)};
}

}  // namespace permclass
