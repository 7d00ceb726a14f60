#include <numeric>
#include <random>

#include "doctest.h"
#include "grouptest/canonical.hpp"
#include "support/oracle.hpp"

using namespace grouptest;

namespace {

Mask mk(std::initializer_list<int> items) {
  Mask m = 0;
  for (int i : items) m |= item_bit(i);
  return m;
}

CandidateFamily random_family(std::mt19937_64& rng, int n, int d) {
  const auto all = combinations(n, d);
  std::uniform_int_distribution<std::size_t> pick(1, all.size());
  std::vector<Mask> chosen;
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), pick(rng), rng);
  return CandidateFamily::from_masks(n, d, std::move(chosen));
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("canonical_key: identity and simple relabelings") {
  const CandidateFamily f = CandidateFamily::from_masks(3, 1, {mk({0}), mk({1})});
  CHECK(canonical_key(f) == canonical_key(f));
  const CandidateFamily g = CandidateFamily::from_masks(3, 1, {mk({1}), mk({2})});
  CHECK(canonical_key(f) == canonical_key(g));
}

TEST_CASE("canonical_key separates structurally different families") {
  const CandidateFamily f = CandidateFamily::from_masks(4, 2, {mk({0, 1}), mk({2, 3})});
  const CandidateFamily g = CandidateFamily::from_masks(4, 2, {mk({0, 1}), mk({0, 2})});
  CHECK_FALSE(testutil::relabel_equivalent(f, g));  // confirmed over all 24 permutations
  CHECK_FALSE(canonical_key(f) == canonical_key(g));
}

TEST_CASE("canonical_key is invariant under item permutations") {
  std::mt19937_64 rng(987654321);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const CandidateFamily f = random_family(rng, n, d);
    const CandidateFamily g = testutil::permute_family(f, random_permutation(rng, n));
    CHECK(canonical_key(f) == canonical_key(g));
  }
}

TEST_CASE("equal keys only ever identify relabel-equivalent families") {
  std::mt19937_64 rng(13572468);
  int equal_keys = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const CandidateFamily f = random_family(rng, n, d);
    const CandidateFamily g = random_family(rng, n, d);
    if (canonical_key(f) == canonical_key(g)) {
      ++equal_keys;
      CHECK(testutil::relabel_equivalent(f, g));
    }
  }
  CHECK(equal_keys > 0);  // the generator does produce collisions to inspect
}

TEST_CASE("symmetry_classes reports only verified swaps") {
  const CandidateFamily fresh = initial_family(6, 2);
  const auto classes = symmetry_classes(fresh);
  REQUIRE(classes.size() == 1);  // a fresh family is fully exchangeable
  CHECK(classes[0].size() == 6);

  std::mt19937_64 rng(24681357);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int d = 1 + static_cast<int>(rng() % 3);
    if (d > n) continue;
    const CandidateFamily f = random_family(rng, n, d);
    for (const auto& cls : symmetry_classes(f)) {
      for (std::size_t i = 1; i < cls.size(); ++i) {
        CHECK(transposition_fixes(f, cls[0], cls[i]));
      }
    }
  }
}

TEST_CASE("transposition_fixes matches a direct swap") {
  const CandidateFamily f = CandidateFamily::from_masks(4, 2, {mk({0, 1}), mk({0, 2})});
  CHECK(transposition_fixes(f, 1, 2));
  CHECK_FALSE(transposition_fixes(f, 0, 3));
  CHECK_FALSE(transposition_fixes(f, 0, 1));
}
