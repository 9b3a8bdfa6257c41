#pragma once

// Brute-force ground truth over the intersection graph of S_{n,k,r}: vertices
// are the signed k-sets in canonical order, edges join intersecting pairs, and
// intersecting families are exactly the cliques.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ekr/core.hpp"

namespace ekr {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// Adjacency bitsets over the universe. Self-loops are not stored.
class IntersectionGraph {
 public:
  IntersectionGraph(const Params& params, std::uint64_t cap = kDefaultMemberCap);

  const Params& params() const { return params_; }
  const SignedFamily& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t words() const { return words_; }

  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  const std::uint64_t* row(std::size_t u) const { return rows_.data() + u * words_; }
  std::size_t degree(std::size_t u) const;

 private:
  Params params_;
  SignedFamily vertices_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

struct SearchResult {
  std::uint64_t max_size = 0;
  SignedFamily witness;
  std::uint64_t nodes_explored = 0;
  bool exhausted = false;
};

// Exact maximum clique by branch and bound: degeneracy vertex order, greedy
// colouring bounds. When the node budget runs out the best clique found so
// far is returned with exhausted = false.
SearchResult max_intersecting_exact(const Params& params,
                                    std::uint64_t node_budget = kDefaultNodeBudget,
                                    std::uint64_t cap = kDefaultMemberCap);

struct EnumerationResult {
  std::vector<SignedFamily> families;  // canonical order
  bool complete = false;               // false when `cap` cut enumeration short
};

// All maximal intersecting families (maximal cliques, Bron-Kerbosch with
// pivoting). At most `cap` families are returned.
EnumerationResult enumerate_maximal_intersecting(const Params& params, std::uint64_t cap,
                                                 std::uint64_t member_cap = kDefaultMemberCap);

// SplitMix64: state += 0x9E3779B97F4A7C15, then the usual xor-shift-multiply
// finalizer. The first output for seed s uses state s + 0x9E3779B97F4A7C15.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // next() % bound; bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Fisher-Yates shuffle of the canonical universe (index i from the end down to
// 1 swaps with below(i + 1)), then a greedy pass keeping every set that
// intersects all sets kept so far. The result is maximal.
SignedFamily random_maximal_intersecting(const Params& params, std::uint64_t seed,
                                         std::uint64_t cap = kDefaultMemberCap);

// True when no set outside `family` intersects every member.
bool is_maximal_intersecting(const SignedFamily& family, std::uint64_t cap = kDefaultMemberCap);

enum class BoundStatus { Equal, Violation, Below, Inconclusive };

struct BoundReport {
  Params params;
  std::uint64_t max_size = 0;
  std::uint64_t bound = 0;
  std::uint64_t nodes_explored = 0;
  bool exhausted = false;
  BoundStatus status = BoundStatus::Inconclusive;
  // r = 1 with 2k > n, where the plain-set bound C(n, k) takes over.
  bool expected_regime = false;

  // "max=6 bound=6 ok", "max=3 bound=2 VIOLATION(expected: r=1 regime)", ...
  std::string summary() const;
};

BoundReport verify_bound(const Params& params, std::uint64_t node_budget = kDefaultNodeBudget);

std::string_view to_string(BoundStatus status);

}  // namespace ekr
