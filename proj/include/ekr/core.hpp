#pragma once

// Signed sets, plain sets and their families.
//
// Elements live in [n] = {1..n} and signs in [r] = {1..r}; everything is
// 1-based. A signed set is stored as its canonical form: the (element, sign)
// pairs sorted ascending by element, elements pairwise distinct. Families keep
// their members sorted in canonical order without duplicates, so two families
// with the same members compare equal and serialize identically.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ekr/error.hpp"

namespace ekr {

inline constexpr std::uint64_t kDefaultMemberCap = 10'000'000;

struct Params {
  int n = 1;
  int k = 1;
  int r = 1;

  // Throws InvalidParams unless 1 <= k <= n and r >= 1.
  void validate() const;

  friend bool operator==(const Params&, const Params&) = default;
};

struct SignedPair {
  int element = 0;
  int sign = 0;

  friend auto operator<=>(const SignedPair&, const SignedPair&) = default;
};

class SignedSet {
 public:
  SignedSet() = default;
  // Requires `pairs` to be sorted by strictly increasing element; throws
  // NonCanonical otherwise. Range checks are the job of make_signed_set.
  explicit SignedSet(std::vector<SignedPair> pairs);

  std::span<const SignedPair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  bool contains(SignedPair p) const;
  // Sign attached to `element`, or 0 if the element is absent.
  int sign_of(int element) const;

  SignedSet without(SignedPair p) const;
  SignedSet with(SignedPair p) const;

  std::string to_string() const;

  friend auto operator<=>(const SignedSet&, const SignedSet&) = default;
  friend bool operator==(const SignedSet&, const SignedSet&) = default;

 private:
  std::vector<SignedPair> pairs_;
};

// Sorts and validates. Errors: DuplicateElement, OutOfRange, WrongSize.
// `size` defaults to params.k; stripped families use k - 1.
SignedSet make_signed_set(std::vector<SignedPair> pairs, const Params& params);
SignedSet make_signed_set(std::vector<SignedPair> pairs, const Params& params,
                          std::size_t size);

// True iff the two sets share an identical (element, sign) pair.
bool intersects(const SignedSet& a, const SignedSet& b);

class PlainSet {
 public:
  PlainSet() = default;
  // Sorts; throws DuplicateElement on repeated elements.
  explicit PlainSet(std::vector<int> elements);
  PlainSet(std::initializer_list<int> elements) : PlainSet(std::vector<int>(elements)) {}

  std::span<const int> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(int x) const;

  std::string to_string() const;

  friend auto operator<=>(const PlainSet&, const PlainSet&) = default;
  friend bool operator==(const PlainSet&, const PlainSet&) = default;

 private:
  std::vector<int> elements_;
};

std::size_t intersection_size(const PlainSet& a, const PlainSet& b);
bool is_subset(const PlainSet& sub, const PlainSet& super);

PlainSet support(const SignedSet& a);

class SignedFamily {
 public:
  // Empty family whose members have params.k pairs.
  explicit SignedFamily(Params params);
  SignedFamily(Params params, std::size_t member_size);

  // Validates every member and rejects duplicates (DuplicateSet).
  static SignedFamily from_sets(Params params, std::size_t member_size,
                                std::vector<SignedSet> sets);
  static SignedFamily from_sets(Params params, std::vector<SignedSet> sets) {
    return from_sets(params, static_cast<std::size_t>(params.k), std::move(sets));
  }

  const Params& params() const { return params_; }
  std::size_t member_size() const { return member_size_; }
  const std::vector<SignedSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(const SignedSet& s) const;
  // Returns false if `s` was already present. Validates ranges and size.
  bool insert(const SignedSet& s);

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const SignedFamily&, const SignedFamily&) = default;

 private:
  void check_member(const SignedSet& s) const;

  Params params_;
  std::size_t member_size_;
  std::vector<SignedSet> members_;
};

class PlainFamily {
 public:
  PlainFamily(int ground, std::size_t member_size);

  // Throws NonUniform on mixed sizes, OutOfRange for elements outside [ground],
  // DuplicateSet on repeated members. `member_size` is taken from the first
  // member; an empty list yields an empty family of member size `empty_size`.
  static PlainFamily from_sets(int ground, std::vector<PlainSet> sets,
                               std::size_t empty_size = 0);

  int ground() const { return ground_; }
  std::size_t member_size() const { return member_size_; }
  const std::vector<PlainSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(const PlainSet& s) const;
  bool insert(const PlainSet& s);

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const PlainFamily&, const PlainFamily&) = default;

 private:
  int ground_;
  std::size_t member_size_;
  std::vector<PlainSet> members_;
};

bool is_intersecting(const SignedFamily& family);
// Every member of `a` intersects every member of `b`. Throws ParamsMismatch
// when the families live over different (n, r).
bool cross_intersecting(const SignedFamily& a, const SignedFamily& b);

// Overflow-checked binomial coefficient; throws Overflow past 2^64 - 1.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

// r^(k-1) * C(n-1, k-1), the size of the star.
std::uint64_t bound_value(const Params& params);
// r^k * C(n, k).
std::uint64_t universe_size(const Params& params);

// All of S_{n,k,r}, in canonical order. Throws TooLarge past `cap` members.
SignedFamily universe(const Params& params, std::uint64_t cap = kDefaultMemberCap);
// Members of the universe containing (1, 1).
SignedFamily star(const Params& params, std::uint64_t cap = kDefaultMemberCap);

// v mod y with representatives in [1, y]; requires y >= 1.
int mod_star(long long v, int y);

// Advances every sign by q cyclically within [r]. q may be negative.
SignedSet theta_shift(const SignedSet& a, long long q, int r);
SignedFamily theta_shift_family(const SignedFamily& family, long long q);

// All k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

}  // namespace ekr
