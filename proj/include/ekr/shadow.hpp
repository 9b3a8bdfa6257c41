#pragma once

#include <cstddef>

#include "ekr/core.hpp"

namespace ekr {

// All s-subsets of members of `family`, deduplicated. s equal to the member
// size returns the family itself; s = 0 on a nonempty family returns {{}}.
// `threads` > 1 splits the expansion across workers; the result is identical.
// Errors: SizeExceedsMembers when s exceeds the member size.
PlainFamily shadow_to(const PlainFamily& family, std::size_t s, unsigned threads = 1);

// Shadow of a single set, i.e. its s-subsets in lexicographic order.
std::vector<PlainSet> subsets_of_size(const PlainSet& set, std::size_t s);

// Smallest |F ∩ F'| over unordered pairs. Errors: TooFewMembers.
std::size_t min_pairwise_intersection(const PlainFamily& family);

struct KatonaReport {
  std::size_t shadow_size = 0;
  std::size_t family_size = 0;
  bool holds = false;
};

// Checks |shadow_{s-t}(F)| >= |F| for a t-intersecting family of s-sets.
// Errors: SizeExceedsMembers (t > s), NotTIntersecting.
KatonaReport katona_check(const PlainFamily& family, std::size_t t);

}  // namespace ekr
