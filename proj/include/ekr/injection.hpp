#pragma once

// Explicit injection of an intersecting family of signed k-sets into the star
// W = {A : (1, 1) ∈ A}, valid for r >= 2 and 2k <= n.
//
// The family is split by what it does at element 1:
//   a0          members whose support avoids 1,
//   block(i)    members containing (1, i), for i in [r].
// Members of block(1) are already in W. A member of block(i), i >= 2, loses
// (1, i), has its signs shifted by i - 1, and gains (1, 1). The a0 members are
// routed through their supports: each support M is complemented inside
// [2, n], the complement is matched to one of its own (k-1)-subsets, and the
// members sharing M receive distinct sign vectors on that subset before
// (1, 1) is added back.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ekr/core.hpp"

namespace ekr {

class Partition {
 public:
  Partition(SignedFamily a0, std::vector<SignedFamily> blocks)
      : a0_(std::move(a0)), blocks_(std::move(blocks)) {}

  const SignedFamily& a0() const { return a0_; }
  // 1-based: block(i) holds the members containing (1, i).
  const SignedFamily& block(int i) const { return blocks_.at(static_cast<std::size_t>(i - 1)); }
  int sign_count() const { return static_cast<int>(blocks_.size()); }

 private:
  SignedFamily a0_;
  std::vector<SignedFamily> blocks_;
};

Partition partition_family(const SignedFamily& family);

// Removes (1, i) from every member. Errors: MissingPair.
SignedFamily strip_first(const SignedFamily& block, int i);

// Deduplicated supports of all members.
PlainFamily build_supports(const SignedFamily& family);

// Complement of every member inside [2, n]. Errors: ContainsOne.
PlainFamily complements_in_tail(const PlainFamily& supports, int n);

// Every signing in [r] of every member of `shadow`.
SignedFamily build_B(const PlainFamily& shadow, int r);

struct MatchingResult {
  // Sorted by source; each target is a subset of its source.
  std::vector<std::pair<PlainSet, PlainSet>> sigma;

  const PlainSet& at(const PlainSet& source) const;
  std::size_t size() const { return sigma.size(); }
};

// Injective choice of a `target_size`-subset for every member of `family`,
// by augmenting paths over the member/subset incidence graph. Members and
// subsets are visited in canonical order, so the result is deterministic.
// Errors: NoPerfectMatching when some subfamily violates Hall's condition.
MatchingResult match_to_shadow(const PlainFamily& family, std::size_t target_size);

// The j-th sign vector (0-based) of length `length` over [r], in lexicographic
// order.
std::vector<int> sign_vector(std::uint64_t index, std::size_t length, int r);

// Maps each member of a0 to a signed (k-1)-set on sigma([2, n] \ support).
// Members sharing a support are taken in canonical order and given sign
// vectors 0, 1, 2, ... in lexicographic order.
// Errors: GroupOverflow when a support carries more than r^(k-1) members.
std::vector<std::pair<SignedSet, SignedSet>> sign_assign(const SignedFamily& a0,
                                                         const MatchingResult& sigma);

struct BlockDiagnostics {
  std::size_t a0 = 0;                // |A_0|
  std::vector<std::size_t> blocks;   // |A_i| for i in [r]
  std::size_t b = 0;                 // |B|, i.e. |A*_0|
  std::vector<std::size_t> images;   // |A*_i| for i in [r]
};

struct InjectionCertificate {
  Params params;
  SignedFamily domain;
  // Sorted by source, in the domain's canonical order.
  std::vector<std::pair<SignedSet, SignedSet>> mapping;
  BlockDiagnostics diagnostics;
};

// Builds the injection. `threads` only affects the shadow computation.
// Errors: UnsupportedRange (r < 2 or 2k > n), NotIntersecting,
// WrongSize (members not of size k), and the matching/sign errors above.
InjectionCertificate assemble_injection(const SignedFamily& family, unsigned threads = 1);

struct CertificateReport {
  bool valid = false;
  std::uint64_t domain_size = 0;
  std::uint64_t bound = 0;
  std::vector<std::string> problems;
};

// Independent check of a certificate: totality on the domain, distinct
// targets, (1, 1) in every target, every target a valid k-set, and
// |domain| <= bound_value.
CertificateReport verify_certificate(const InjectionCertificate& cert);

// Re-derives every intermediate family of the construction and checks the
// facts the construction relies on.
struct ProofStepReport {
  // Largest support class in a0 versus r^(k-1).
  std::size_t max_support_class = 0;
  std::uint64_t class_limit = 0;
  bool class_bound_holds = false;
  // Stripped blocks (and a0) pairwise cross-intersecting.
  bool cross_blocks_intersect = false;
  // |a0| <= |B|.
  std::size_t a0_size = 0;
  std::size_t b_size = 0;
  bool a0_fits_b = false;
  // A'_1, shifted A'_i and B pairwise disjoint.
  bool shifted_blocks_disjoint = false;
  // Supports of stripped blocks avoid the shadow of N.
  bool supports_avoid_shadow = false;
  bool matching_found = false;
  std::vector<std::string> problems;

  bool ok() const {
    return class_bound_holds && cross_blocks_intersect && a0_fits_b && shifted_blocks_disjoint &&
           supports_avoid_shadow && matching_found;
  }
};

// Requires the same range as assemble_injection but never throws on a failed
// step; failures are listed in `problems`.
ProofStepReport check_proof_steps(const SignedFamily& family);

}  // namespace ekr
