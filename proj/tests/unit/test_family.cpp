#include <random>
#include <stdexcept>

#include "doctest.h"
#include "grouptest/family.hpp"

using namespace grouptest;

namespace {

Mask mk(std::initializer_list<int> items) {
  Mask m = 0;
  for (int i : items) m |= item_bit(i);
  return m;
}

CandidateFamily random_family(std::mt19937_64& rng, int n, int d) {
  std::uniform_int_distribution<std::size_t> pick(1, binomial(n, d));
  const auto all = combinations(n, d);
  std::vector<Mask> chosen;
  const std::size_t want = pick(rng);
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), want, rng);
  return CandidateFamily::from_masks(n, d, std::move(chosen));
}

}  // namespace

TEST_CASE("pool_outcome follows intersection with the defective set") {
  CHECK(pool_outcome(Pool{mk({0, 1})}, mk({1, 3}), 4) == Outcome::contaminated);
  CHECK(pool_outcome(Pool{mk({0, 1})}, mk({2, 3}), 4) == Outcome::pure);
  // Testing the whole population is positive whenever anything is defective.
  CHECK(pool_outcome(Pool{full_mask(6)}, mk({5}), 6) == Outcome::contaminated);
  CHECK_THROWS_AS((void)pool_outcome(Pool{mk({4})}, mk({0}), 4), std::out_of_range);
  CHECK_THROWS_AS((void)pool_outcome(Pool{mk({0})}, mk({7}), 4), std::out_of_range);
}

TEST_CASE("initial_family enumerates all d-subsets") {
  CHECK(initial_family(4, 2).size() == 6);
  CHECK(initial_family(5, 1).size() == 5);
  const CandidateFamily none = initial_family(3, 0);
  CHECK(none.size() == 1);
  CHECK(none.sole() == 0);
  CHECK(is_solved(none));
}

TEST_CASE("filter_family keeps exactly the candidates matching the outcome") {
  const CandidateFamily singles = initial_family(4, 1);
  const Pool pool{mk({0, 1})};
  const CandidateFamily hit = filter_family(singles, pool, Outcome::contaminated);
  CHECK(hit.masks()[0] == mk({0}));
  CHECK(hit.masks()[1] == mk({1}));
  CHECK(hit.size() == 2);
  const CandidateFamily miss = filter_family(singles, pool, Outcome::pure);
  CHECK(miss.masks()[0] == mk({2}));
  CHECK(miss.masks()[1] == mk({3}));

  const CandidateFamily pairs = CandidateFamily::from_masks(5, 2, {mk({0, 1}), mk({2, 3})});
  const CandidateFamily kept = filter_family(pairs, Pool{mk({0, 4})}, Outcome::pure);
  CHECK(kept.size() == 1);
  CHECK(kept.sole() == mk({2, 3}));

  // Empty results are legal return values; the caller decides they are bugs.
  const CandidateFamily empty =
      filter_family(CandidateFamily::from_masks(3, 1, {mk({0})}), Pool{mk({0})}, Outcome::pure);
  CHECK(empty.empty());
}

TEST_CASE("is_informative needs both outcomes to stay consistent") {
  CHECK(is_informative(initial_family(3, 1), Pool{mk({0})}));
  CHECK_FALSE(is_informative(initial_family(4, 1), Pool{full_mask(4)}));
  CHECK_FALSE(is_informative(CandidateFamily::from_masks(4, 2, {mk({0, 1})}), Pool{mk({0, 2})}));
}

TEST_CASE("is_solved distinguishes singletons and rejects empty families") {
  CHECK(is_solved(CandidateFamily::from_masks(4, 2, {mk({0, 1})})));
  CHECK_FALSE(is_solved(CandidateFamily::from_masks(4, 1, {mk({0}), mk({1})})));
  CHECK(is_solved(initial_family(3, 0)));
  CHECK_THROWS_AS((void)is_solved(CandidateFamily::from_masks(3, 1, {})), std::invalid_argument);
}

TEST_CASE("candidate masks are validated") {
  CHECK_THROWS_AS((void)CandidateFamily::from_masks(3, 1, {mk({3})}), std::out_of_range);
  CHECK_THROWS_AS((void)CandidateFamily::from_masks(3, 1, {mk({0, 1})}), std::invalid_argument);
}

TEST_CASE("filtering partitions the family, for random families and pools") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const CandidateFamily family = random_family(rng, n, d);
    const Pool pool{1 + rng() % (full_mask(n) - 1)};
    const CandidateFamily cont = filter_family(family, pool, Outcome::contaminated);
    const CandidateFamily pure = filter_family(family, pool, Outcome::pure);
    CHECK(cont.size() + pure.size() == family.size());
    for (Mask m : cont.masks()) CHECK_FALSE(pure.contains(m));
    for (Mask m : family.masks()) CHECK((cont.contains(m) || pure.contains(m)));

    // Monotone: growing a pool never turns contaminated into pure.
    const Pool bigger{pool.members | (1 + rng() % (full_mask(n) - 1))};
    for (Mask truth : family.masks()) {
      if (pool_outcome(pool, truth, n) == Outcome::contaminated) {
        CHECK(pool_outcome(bigger, truth, n) == Outcome::contaminated);
      }
    }

    // An uninformative pool leaves the family unchanged for the realized outcome.
    if (!is_informative(family, pool)) {
      const Outcome realized = cont.empty() ? Outcome::pure : Outcome::contaminated;
      CHECK(filter_family(family, pool, realized) == family);
    }
  }
}
