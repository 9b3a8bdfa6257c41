#include "ekr/shadow.hpp"

#include <algorithm>
#include <thread>

namespace ekr {

std::vector<PlainSet> subsets_of_size(const PlainSet& set, std::size_t s) {
  std::vector<PlainSet> out;
  const auto elems = set.elements();
  if (s > elems.size()) return out;
  for (const auto& idx : k_subsets(static_cast<int>(elems.size()), static_cast<int>(s))) {
    std::vector<int> chosen;
    chosen.reserve(s);
    for (int i : idx) chosen.push_back(elems[i - 1]);
    out.emplace_back(std::move(chosen));
  }
  return out;
}

namespace {

void expand_range(const std::vector<PlainSet>& members, std::size_t lo, std::size_t hi,
                  std::size_t s, std::vector<PlainSet>& out) {
  for (std::size_t i = lo; i < hi; ++i) {
    auto subs = subsets_of_size(members[i], s);
    out.insert(out.end(), std::make_move_iterator(subs.begin()),
               std::make_move_iterator(subs.end()));
  }
}

}  // namespace

PlainFamily shadow_to(const PlainFamily& family, std::size_t s, unsigned threads) {
  if (s > family.member_size()) {
    throw Error(ErrorCode::SizeExceedsMembers,
                "shadow size " + std::to_string(s) + " exceeds member size " +
                    std::to_string(family.member_size()));
  }
  if (s == family.member_size()) return family;

  const auto& members = family.members();
  std::vector<PlainSet> all;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(members.size())));
  if (threads <= 1) {
    expand_range(members, 0, members.size(), s, all);
  } else {
    std::vector<std::vector<PlainSet>> parts(threads);
    std::vector<std::thread> workers;
    const std::size_t chunk = (members.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(members.size(), t * chunk);
      const std::size_t hi = std::min(members.size(), lo + chunk);
      workers.emplace_back(expand_range, std::cref(members), lo, hi, s, std::ref(parts[t]));
    }
    for (auto& w : workers) w.join();
    for (auto& p : parts) {
      all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return PlainFamily::from_sets(family.ground(), std::move(all), s);
}

std::size_t min_pairwise_intersection(const PlainFamily& family) {
  const auto& m = family.members();
  if (m.size() < 2) {
    throw Error(ErrorCode::TooFewMembers, "need at least two members");
  }
  std::size_t best = family.member_size();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      best = std::min(best, intersection_size(m[i], m[j]));
      if (best == 0) return 0;
    }
  }
  return best;
}

KatonaReport katona_check(const PlainFamily& family, std::size_t t) {
  const std::size_t s = family.member_size();
  if (t > s) {
    throw Error(ErrorCode::SizeExceedsMembers,
                "t = " + std::to_string(t) + " exceeds member size " + std::to_string(s));
  }
  if (family.size() >= 2 && min_pairwise_intersection(family) < t) {
    throw Error(ErrorCode::NotTIntersecting,
                "family is not " + std::to_string(t) + "-intersecting");
  }
  KatonaReport report;
  report.family_size = family.size();
  report.shadow_size = shadow_to(family, s - t).size();
  report.holds = report.shadow_size >= report.family_size;
  return report;
}

}  // namespace ekr
