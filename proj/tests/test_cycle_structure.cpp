#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "permclass/cycle_structure.hpp"
#include "permclass/errors.hpp"

using namespace permclass;

namespace {

Permutation perm(std::vector<int> images) {
  return Permutation::from_images(std::move(images));
}

const std::vector<int> kExample = {5, 3, 4, 2, 1, 6};      // worked 6x6 case
const std::vector<int> kExampleCanonical = {1, 3, 2, 5, 6, 4};
const std::vector<int> kExampleConjugator = {6, 1, 5, 2, 3, 4};

bool orbits_well_formed(const Permutation& p, const OrbitPartition& parts) {
  std::set<int> seen;
  int last_min = 0;
  for (const auto& orbit : parts.orbits) {
    if (orbit.empty()) return false;
    // starts at its minimal element, minima increase across orbits
    const int min = *std::min_element(orbit.begin(), orbit.end());
    if (orbit.front() != min || min <= last_min) return false;
    last_min = min;
    for (size_t v = 0; v < orbit.size(); ++v) {
      if (!seen.insert(orbit[v]).second) return false;
      const int expect = orbit[(v + 1) % orbit.size()];
      if (p(orbit[v]) != expect) return false;
    }
  }
  return static_cast<int>(seen.size()) == parts.n;
}

}  // namespace

TEST_CASE("orbit_partition examples") {
  CHECK(orbit_partition(Permutation::identity(3)).orbits ==
        std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(orbit_partition(perm(kExample)).orbits ==
        std::vector<std::vector<int>>{{1, 5}, {2, 3, 4}, {6}});
  CHECK(orbit_partition(perm({2, 3, 1})).orbits ==
        std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(orbit_partition(Permutation()).orbits.empty());
}

TEST_CASE("orbit_partition invariants on random permutations") {
  std::mt19937_64 rng(1001);
  for (int rep = 0; rep < 400; ++rep) {
    const int n = static_cast<int>(rng() % 80);
    const Permutation p = oracle::random_permutation(rng, n);
    CHECK(orbits_well_formed(p, orbit_partition(p)));
  }
}

TEST_CASE("cycle_type") {
  CHECK(cycle_type(perm(kExample)) == CycleType{6, 1, {2, 3}});
  CHECK(cycle_type(Permutation::identity(4)) == CycleType{4, 4, {}});
  CHECK(cycle_type(perm({2, 3, 4, 5, 1})) == CycleType{5, 0, {5}});
  CHECK(to_string(cycle_type(perm(kExample))) == "t=1 k=[2,3]");
}

TEST_CASE("standard_cycle_matrix") {
  CHECK(standard_cycle_matrix(2, 2, 0) == perm({2, 1}));
  CHECK(standard_cycle_matrix(3, 3, 0) == perm({2, 3, 1}));
  CHECK(standard_cycle_matrix(3, 6, 3) == perm({1, 2, 3, 5, 6, 4}));
  CHECK_THROWS_AS(standard_cycle_matrix(3, 4, 2), BlockOutOfRange);
  CHECK_THROWS_AS(standard_cycle_matrix(1, 4, 0), BlockOutOfRange);
}

TEST_CASE("standard cycle matrices have exact multiplicative order k") {
  for (int k = 2; k <= 9; ++k) {
    const Permutation block = standard_cycle_matrix(k, k, 0);
    CHECK(power(block, static_cast<unsigned long long>(k)).is_identity());
    for (int i = 1; i < k; ++i)
      CHECK_FALSE(power(block, static_cast<unsigned long long>(i)).is_identity());
  }
}

TEST_CASE("canonical_form on the worked example") {
  const CanonicalDecomposition d = canonical_form(perm(kExample));
  CHECK(d.canonical == perm(kExampleCanonical));
  CHECK(d.conjugator == perm(kExampleConjugator));
  CHECK(d.type == CycleType{6, 1, {2, 3}});
  // independent dense check of canonical == T^{-1} p T
  const auto t = oracle::dense_from_perm(d.conjugator);
  const auto lhs = oracle::matmul(
      oracle::matmul(oracle::transpose(t), oracle::dense_from_perm(perm(kExample))), t);
  CHECK(lhs == oracle::dense_from_perm(d.canonical));
}

TEST_CASE("canonical_form trivial cases") {
  const CanonicalDecomposition id5 = canonical_form(Permutation::identity(5));
  CHECK(id5.canonical == Permutation::identity(5));
  CHECK(id5.conjugator == Permutation::identity(5));

  const CanonicalDecomposition cyc = canonical_form(perm({2, 3, 4, 5, 1}));
  CHECK(cyc.canonical == perm({2, 3, 4, 5, 1}));
  CHECK(cyc.conjugator == Permutation::identity(5));

  const CanonicalDecomposition empty = canonical_form(Permutation());
  CHECK(empty.canonical == Permutation());
  CHECK(empty.conjugator == Permutation());
}

namespace {

bool canonical_layout_ok(const CanonicalDecomposition& d) {
  const OrbitPartition parts = orbit_partition(d.canonical);
  size_t i = 0;
  int next = 1;
  for (; i < parts.orbits.size() &&
         static_cast<int>(i) < d.type.fixed_points;
       ++i) {
    if (parts.orbits[i] != std::vector<int>{next}) return false;
    ++next;
  }
  for (int length : d.type.lengths) {
    if (i >= parts.orbits.size()) return false;
    std::vector<int> expected(static_cast<size_t>(length));
    std::iota(expected.begin(), expected.end(), next);
    if (parts.orbits[i] != expected) return false;
    next += length;
    ++i;
  }
  return i == parts.orbits.size();
}

}  // namespace

TEST_CASE("conjugation soundness and layout, exhaustive n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    oracle::for_each_permutation(n, [](const Permutation& p) {
      const CanonicalDecomposition d = canonical_form(p);
      CHECK(compose(compose(inverse(d.conjugator), p), d.conjugator) ==
            d.canonical);
      CHECK(canonical_layout_ok(d));
    });
  }
}

TEST_CASE("canonical form is a class invariant, exhaustive n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    oracle::for_each_permutation(n, [n](const Permutation& p) {
      const Permutation canonical = canonical_form(p).canonical;
      oracle::for_each_permutation(n, [&](const Permutation& w) {
        const Permutation conjugated = compose(compose(inverse(w), p), w);
        CHECK(canonical_form(conjugated).canonical == canonical);
      });
    });
  }
}

TEST_CASE("canonical form is a class invariant, random n <= 100") {
  std::mt19937_64 rng(90210);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 100);
    const Permutation p = oracle::random_permutation(rng, n);
    const Permutation w = oracle::random_permutation(rng, n);
    CHECK(canonical_form(compose(compose(inverse(w), p), w)).canonical ==
          canonical_form(p).canonical);
  }
}

TEST_CASE("are_permutation_similar on the worked example") {
  const SimilarityVerdict v =
      are_permutation_similar(perm(kExample), perm(kExampleCanonical));
  REQUIRE(v.similar);
  CHECK(*v.witness == perm(kExampleConjugator));
}

TEST_CASE("are_permutation_similar basics") {
  CHECK_FALSE(
      are_permutation_similar(Permutation::identity(3), perm({2, 3, 1})).similar);

  const SimilarityVerdict v = are_permutation_similar(perm({2, 1, 3}), perm({1, 3, 2}));
  REQUIRE(v.similar);
  const Permutation& w = *v.witness;
  CHECK(compose(compose(inverse(w), perm({2, 1, 3})), w) == perm({1, 3, 2}));

  CHECK_THROWS_AS(are_permutation_similar(perm({2, 1}), perm({2, 3, 1})),
                  DimensionMismatch);
}

TEST_CASE("similarity agrees with brute force over all conjugators, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Permutation> all;
    oracle::for_each_permutation(n, [&](const Permutation& p) { all.push_back(p); });
    // sample pairs: full cross product is fine at this size
    for (const Permutation& a : all) {
      for (const Permutation& b : all) {
        bool brute = false;
        for (const Permutation& w : all)
          if (compose(compose(inverse(w), a), w) == b) {
            brute = true;
            break;
          }
        const SimilarityVerdict v = are_permutation_similar(a, b);
        CHECK(v.similar == brute);
        if (v.similar)
          CHECK(compose(compose(inverse(*v.witness), a), *v.witness) == b);
      }
    }
  }
}

TEST_CASE("similarity is an equivalence relation on random samples") {
  std::mt19937_64 rng(31337);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const Permutation a = oracle::random_permutation(rng, n);
    const Permutation b = oracle::random_permutation(rng, n);
    const Permutation c = oracle::random_permutation(rng, n);
    CHECK(are_permutation_similar(a, a).similar);  // reflexive
    CHECK(are_permutation_similar(a, b).similar ==
          are_permutation_similar(b, a).similar);  // symmetric
    if (are_permutation_similar(a, b).similar &&
        are_permutation_similar(b, c).similar)
      CHECK(are_permutation_similar(a, c).similar);  // transitive
  }
}
