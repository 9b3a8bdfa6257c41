#include <doctest.h>

#include <random>

#include "ekr/shadow.hpp"
#include "oracles.hpp"

using namespace ekr;

namespace {

PlainFamily pf(int n, std::vector<PlainSet> sets) { return PlainFamily::from_sets(n, std::move(sets)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ekr::Error");
  return ErrorCode::Parse;
}

// Every s-subset of [n] that sits inside some member, by scanning [n].
std::vector<PlainSet> brute_shadow(const PlainFamily& f, int s) {
  std::vector<PlainSet> out;
  for (const auto& g : k_subsets(f.ground(), s)) {
    PlainSet cand(g);
    for (const auto& m : f) {
      if (is_subset(cand, m)) {
        out.push_back(cand);
        break;
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("shadow_to examples") {
  CHECK(shadow_to(pf(5, {{2, 3}, {2, 4}}), 1).members() ==
        std::vector<PlainSet>{{2}, {3}, {4}});
  const auto f = pf(5, {{1, 2, 3}, {2, 4, 5}});
  CHECK(shadow_to(f, 3) == f);
  CHECK(shadow_to(pf(5, {{3}, {4}}), 0).members() == std::vector<PlainSet>{PlainSet{}});
  CHECK(shadow_to(PlainFamily(5, 2), 1).empty());
  CHECK(code_of([&] { shadow_to(f, 4); }) == ErrorCode::SizeExceedsMembers);
}

TEST_CASE("shadow_to agrees with a scan over all s-subsets") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const int count = 1 + static_cast<int>(rng() % 6);
    std::vector<PlainSet> sets;
    for (int i = 0; i < count; ++i) sets.push_back(oracle::random_plain_set(rng, n, m));
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    const auto f = pf(n, sets);
    const int s = static_cast<int>(rng() % static_cast<unsigned>(m + 1));
    CHECK(shadow_to(f, static_cast<std::size_t>(s)).members() == brute_shadow(f, s));
    CHECK(shadow_to(f, static_cast<std::size_t>(s), 3) == shadow_to(f, static_cast<std::size_t>(s)));
  }
}

TEST_CASE("min_pairwise_intersection") {
  CHECK(min_pairwise_intersection(pf(3, {{1, 2}, {1, 3}})) == 1);
  CHECK(min_pairwise_intersection(pf(4, {{1, 2}, {3, 4}})) == 0);
  // pairs: {123,124} -> 2, {123,134} -> 2, {124,134} -> 2
  CHECK(min_pairwise_intersection(pf(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}})) == 2);
  CHECK(code_of([] { min_pairwise_intersection(pf(4, {{1, 2}})); }) == ErrorCode::TooFewMembers);
}

TEST_CASE("katona_check") {
  // shadow_1({12,13,23}) = {1,2,3}
  auto rep = katona_check(pf(3, {{1, 2}, {1, 3}, {2, 3}}), 1);
  CHECK(rep.shadow_size == 3);
  CHECK(rep.family_size == 3);
  CHECK(rep.holds);
  rep = katona_check(pf(3, {{1, 2, 3}}), 1);
  CHECK(rep.shadow_size == 3);
  CHECK(rep.family_size == 1);
  CHECK(rep.holds);
  CHECK(code_of([] { katona_check(pf(4, {{1, 2}, {3, 4}}), 1); }) == ErrorCode::NotTIntersecting);
  CHECK(code_of([] { katona_check(pf(4, {{1, 2}}), 3); }) == ErrorCode::SizeExceedsMembers);
}

TEST_CASE("shadow monotonicity and composition") {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const int m = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    std::vector<PlainSet> big;
    for (int i = 0; i < 6; ++i) big.push_back(oracle::random_plain_set(rng, n, m));
    std::sort(big.begin(), big.end());
    big.erase(std::unique(big.begin(), big.end()), big.end());
    std::vector<PlainSet> small(big.begin(), big.begin() + static_cast<long>(big.size() / 2));
    const auto f2 = pf(n, big);
    const auto f1 = PlainFamily::from_sets(n, small, static_cast<std::size_t>(m));
    const auto s1 = static_cast<std::size_t>(rng() % static_cast<unsigned>(m + 1));
    const auto s2 = static_cast<std::size_t>(rng() % (s1 + 1));
    for (const auto& g : shadow_to(f1, s1)) CHECK(shadow_to(f2, s1).contains(g));
    CHECK(shadow_to(shadow_to(f2, s1), s2) == shadow_to(f2, s2));
  }
}

TEST_CASE("Katona holds on every t-intersecting subfamily sample") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const int s = 2 + static_cast<int>(rng() % 3);
    // Grow a family around a common core so t > 0 shows up often.
    const auto core = oracle::random_plain_set(rng, n, 1 + static_cast<int>(rng() % static_cast<unsigned>(s)));
    std::vector<PlainSet> sets;
    for (const auto& cand : k_subsets(n, s)) {
      PlainSet c(cand);
      if (is_subset(core, c) && rng() % 3 == 0) sets.push_back(c);
    }
    if (sets.size() < 2) continue;
    const auto f = pf(n, sets);
    const auto t = min_pairwise_intersection(f);
    CHECK(katona_check(f, t).holds);
    for (int sample = 0; sample < 5; ++sample) {
      std::vector<PlainSet> sub;
      for (const auto& g : f) {
        if (rng() % 2) sub.push_back(g);
      }
      if (sub.empty()) continue;
      CHECK(katona_check(PlainFamily::from_sets(n, sub), t).holds);
    }
  }
}
