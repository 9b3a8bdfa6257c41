#include "ekr/injection.hpp"

#include <algorithm>
#include <functional>

#include "ekr/shadow.hpp"

namespace ekr {

Partition partition_family(const SignedFamily& family) {
  const Params& p = family.params();
  SignedFamily a0(p, family.member_size());
  std::vector<SignedFamily> blocks(static_cast<std::size_t>(p.r),
                                   SignedFamily(p, family.member_size()));
  for (const auto& s : family) {
    const int sign = s.sign_of(1);
    if (sign == 0) {
      a0.insert(s);
    } else {
      blocks[static_cast<std::size_t>(sign - 1)].insert(s);
    }
  }
  return Partition(std::move(a0), std::move(blocks));
}

SignedFamily strip_first(const SignedFamily& block, int i) {
  if (block.member_size() == 0) {
    throw Error(ErrorCode::MissingPair, "members are empty");
  }
  std::vector<SignedSet> out;
  out.reserve(block.size());
  for (const auto& s : block) {
    if (!s.contains({1, i})) {
      throw Error(ErrorCode::MissingPair,
                  s.to_string() + " lacks (1," + std::to_string(i) + ")");
    }
    out.push_back(s.without({1, i}));
  }
  return SignedFamily::from_sets(block.params(), block.member_size() - 1, std::move(out));
}

PlainFamily build_supports(const SignedFamily& family) {
  std::vector<PlainSet> sets;
  sets.reserve(family.size());
  for (const auto& s : family) sets.push_back(support(s));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return PlainFamily::from_sets(family.params().n, std::move(sets), family.member_size());
}

PlainFamily complements_in_tail(const PlainFamily& supports, int n) {
  if (supports.member_size() + 1 > static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::SizeExceedsMembers, "supports do not fit in [2, n]");
  }
  std::vector<PlainSet> out;
  out.reserve(supports.size());
  for (const auto& m : supports) {
    if (m.contains(1)) {
      throw Error(ErrorCode::ContainsOne, "support " + m.to_string() + " contains 1");
    }
    std::vector<int> rest;
    for (int x = 2; x <= n; ++x) {
      if (!m.contains(x)) rest.push_back(x);
    }
    out.emplace_back(std::move(rest));
  }
  return PlainFamily::from_sets(n, std::move(out),
                                static_cast<std::size_t>(n) - 1 - supports.member_size());
}

std::vector<int> sign_vector(std::uint64_t index, std::size_t length, int r) {
  std::vector<int> signs(length, 1);
  for (std::size_t pos = length; pos > 0; --pos) {
    signs[pos - 1] = static_cast<int>(index % static_cast<std::uint64_t>(r)) + 1;
    index /= static_cast<std::uint64_t>(r);
  }
  if (index != 0) {
    throw Error(ErrorCode::GroupOverflow, "sign vector index exceeds r^length");
  }
  return signs;
}

namespace {

SignedSet sign_support(const PlainSet& support_set, const std::vector<int>& signs) {
  std::vector<SignedPair> pairs;
  pairs.reserve(support_set.size());
  auto elems = support_set.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) pairs.push_back({elems[i], signs[i]});
  return SignedSet(std::move(pairs));
}

}  // namespace

SignedFamily build_B(const PlainFamily& shadow, int r) {
  const Params p{shadow.ground(), static_cast<int>(shadow.member_size()) + 1, r};
  const std::uint64_t per_support = checked_pow(static_cast<std::uint64_t>(r), shadow.member_size());
  std::vector<SignedSet> sets;
  sets.reserve(checked_mul(per_support, shadow.size()));
  for (const auto& g : shadow) {
    for (std::uint64_t j = 0; j < per_support; ++j) {
      sets.push_back(sign_support(g, sign_vector(j, g.size(), r)));
    }
  }
  return SignedFamily::from_sets(p, shadow.member_size(), std::move(sets));
}

const PlainSet& MatchingResult::at(const PlainSet& source) const {
  auto it = std::lower_bound(sigma.begin(), sigma.end(), source,
                             [](const auto& entry, const PlainSet& s) { return entry.first < s; });
  if (it == sigma.end() || it->first != source) {
    throw Error(ErrorCode::NoPerfectMatching, "no image for " + source.to_string());
  }
  return it->second;
}

MatchingResult match_to_shadow(const PlainFamily& family, std::size_t target_size) {
  if (target_size > family.member_size()) {
    throw Error(ErrorCode::SizeExceedsMembers, "target size exceeds member size");
  }
  const auto& left = family.members();
  std::vector<PlainSet> right = shadow_to(family, target_size).members();

  // Incidence lists, each in canonical subset order.
  std::vector<std::vector<std::size_t>> adj(left.size());
  for (std::size_t u = 0; u < left.size(); ++u) {
    for (const auto& sub : subsets_of_size(left[u], target_size)) {
      auto it = std::lower_bound(right.begin(), right.end(), sub);
      adj[u].push_back(static_cast<std::size_t>(it - right.begin()));
    }
  }

  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_right(right.size(), kFree);
  std::vector<std::size_t> match_left(left.size(), kFree);
  std::vector<std::size_t> seen(right.size(), kFree);

  std::function<bool(std::size_t, std::size_t)> augment = [&](std::size_t u, std::size_t stamp) {
    for (std::size_t v : adj[u]) {
      if (seen[v] == stamp) continue;
      seen[v] = stamp;
      if (match_right[v] == kFree || augment(match_right[v], stamp)) {
        match_right[v] = u;
        match_left[u] = v;
        return true;
      }
    }
    return false;
  };

  for (std::size_t u = 0; u < left.size(); ++u) {
    if (!augment(u, u)) {
      throw Error(ErrorCode::NoPerfectMatching,
                  "Hall's condition fails around " + left[u].to_string());
    }
  }

  MatchingResult result;
  result.sigma.reserve(left.size());
  for (std::size_t u = 0; u < left.size(); ++u) {
    result.sigma.emplace_back(left[u], right[match_left[u]]);
  }
  return result;
}

namespace {

PlainSet tail_complement(const PlainSet& m, int n) {
  std::vector<int> rest;
  for (int x = 2; x <= n; ++x) {
    if (!m.contains(x)) rest.push_back(x);
  }
  return PlainSet(std::move(rest));
}

}  // namespace

std::vector<std::pair<SignedSet, SignedSet>> sign_assign(const SignedFamily& a0,
                                                         const MatchingResult& sigma) {
  const Params& p = a0.params();
  const std::size_t length = a0.member_size() == 0 ? 0 : a0.member_size() - 1;
  const std::uint64_t limit = checked_pow(static_cast<std::uint64_t>(p.r), length);

  // Members arrive in canonical order, so each class is already ordered.
  std::map<PlainSet, std::vector<const SignedSet*>> classes;
  for (const auto& s : a0) classes[support(s)].push_back(&s);

  std::vector<std::pair<SignedSet, SignedSet>> out;
  out.reserve(a0.size());
  for (const auto& [m, group] : classes) {
    if (group.size() > limit) {
      throw Error(ErrorCode::GroupOverflow,
                  "support " + m.to_string() + " carries " + std::to_string(group.size()) +
                      " members, at most " + std::to_string(limit) + " allowed");
    }
    const PlainSet& target = sigma.at(tail_complement(m, p.n));
    for (std::size_t j = 0; j < group.size(); ++j) {
      out.emplace_back(*group[j], sign_support(target, sign_vector(j, target.size(), p.r)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_injection_range(const SignedFamily& family) {
  const Params& p = family.params();
  if (p.r < 2 || 2 * p.k > p.n) {
    throw Error(ErrorCode::UnsupportedRange,
                "the injection needs r >= 2 and 2k <= n, got n=" + std::to_string(p.n) +
                    " k=" + std::to_string(p.k) + " r=" + std::to_string(p.r));
  }
  if (family.member_size() != static_cast<std::size_t>(p.k)) {
    throw Error(ErrorCode::WrongSize, "members must have k pairs");
  }
}

}  // namespace

InjectionCertificate assemble_injection(const SignedFamily& family, unsigned threads) {
  require_injection_range(family);
  if (!is_intersecting(family)) {
    throw Error(ErrorCode::NotIntersecting, "input family is not intersecting");
  }
  const Params& p = family.params();
  const Partition part = partition_family(family);

  const PlainFamily tails = complements_in_tail(build_supports(part.a0()), p.n);
  const MatchingResult sigma = match_to_shadow(tails, static_cast<std::size_t>(p.k - 1));
  const PlainFamily tail_shadow = shadow_to(tails, static_cast<std::size_t>(p.k - 1), threads);

  InjectionCertificate cert{p, family, {}, {}};
  cert.mapping.reserve(family.size());

  for (auto& entry : sign_assign(part.a0(), sigma)) {
    cert.mapping.emplace_back(std::move(entry.first), entry.second.with({1, 1}));
  }
  for (int i = 1; i <= p.r; ++i) {
    for (const auto& s : part.block(i)) {
      if (i == 1) {
        cert.mapping.emplace_back(s, s);
      } else {
        cert.mapping.emplace_back(s, theta_shift(s.without({1, i}), i - 1, p.r).with({1, 1}));
      }
    }
  }
  std::sort(cert.mapping.begin(), cert.mapping.end());

  auto& d = cert.diagnostics;
  d.a0 = part.a0().size();
  d.b = checked_mul(checked_pow(static_cast<std::uint64_t>(p.r), static_cast<std::uint64_t>(p.k - 1)),
                    tail_shadow.size());
  for (int i = 1; i <= p.r; ++i) {
    d.blocks.push_back(part.block(i).size());
    d.images.push_back(part.block(i).size());
  }
  return cert;
}

CertificateReport verify_certificate(const InjectionCertificate& cert) {
  CertificateReport report;
  const Params& p = cert.params;
  report.domain_size = cert.domain.size();
  try {
    report.bound = bound_value(p);
  } catch (const Error& e) {
    report.problems.push_back(std::string("bound: ") + e.what());
  }

  if (!(cert.domain.params() == p)) {
    report.problems.push_back("domain params differ from certificate params");
  }

  std::vector<SignedSet> sources;
  sources.reserve(cert.mapping.size());
  for (const auto& [from, to] : cert.mapping) sources.push_back(from);
  std::sort(sources.begin(), sources.end());
  for (std::size_t i = 1; i < sources.size(); ++i) {
    if (sources[i - 1] == sources[i]) {
      report.problems.push_back("source " + sources[i].to_string() + " mapped twice");
    }
  }
  for (const auto& s : sources) {
    if (!cert.domain.contains(s)) {
      report.problems.push_back("source " + s.to_string() + " is not in the domain");
    }
  }
  for (const auto& s : cert.domain) {
    if (!std::binary_search(sources.begin(), sources.end(), s)) {
      report.problems.push_back("domain member " + s.to_string() + " has no image");
    }
  }

  std::vector<std::pair<SignedSet, SignedSet>> by_target;
  by_target.reserve(cert.mapping.size());
  for (const auto& [from, to] : cert.mapping) {
    by_target.emplace_back(to, from);
    if (!to.contains({1, 1})) {
      report.problems.push_back("target " + to.to_string() + " of " + from.to_string() +
                                " misses (1,1)");
    }
    bool valid = to.size() == static_cast<std::size_t>(p.k);
    for (const auto& q : to.pairs()) {
      valid = valid && q.element >= 1 && q.element <= p.n && q.sign >= 1 && q.sign <= p.r;
    }
    if (!valid) {
      report.problems.push_back("target " + to.to_string() + " is not a signed k-set over [n]x[r]");
    }
  }
  std::sort(by_target.begin(), by_target.end());
  for (std::size_t i = 1; i < by_target.size(); ++i) {
    if (by_target[i - 1].first == by_target[i].first) {
      report.problems.push_back("sources " + by_target[i - 1].second.to_string() + " and " +
                                by_target[i].second.to_string() + " share target " +
                                by_target[i].first.to_string());
    }
  }

  if (report.bound != 0 && report.domain_size > report.bound) {
    report.problems.push_back("domain size " + std::to_string(report.domain_size) +
                              " exceeds bound " + std::to_string(report.bound));
  }
  report.valid = report.problems.empty();
  return report;
}

ProofStepReport check_proof_steps(const SignedFamily& family) {
  require_injection_range(family);
  ProofStepReport rep;
  const Params& p = family.params();
  const auto km1 = static_cast<std::size_t>(p.k - 1);
  const Partition part = partition_family(family);

  // Stripped views: index 0 is a0 itself, index i is A'_i.
  std::vector<SignedFamily> stripped;
  stripped.push_back(part.a0());
  for (int i = 1; i <= p.r; ++i) stripped.push_back(strip_first(part.block(i), i));

  rep.class_limit = checked_pow(static_cast<std::uint64_t>(p.r), km1);
  std::map<PlainSet, std::size_t> class_sizes;
  for (const auto& s : part.a0()) {
    rep.max_support_class = std::max(rep.max_support_class, ++class_sizes[support(s)]);
  }
  rep.class_bound_holds = rep.max_support_class <= rep.class_limit;
  if (!rep.class_bound_holds) rep.problems.push_back("a support class exceeds r^(k-1)");

  rep.cross_blocks_intersect = true;
  for (std::size_t i = 0; i < stripped.size(); ++i) {
    for (std::size_t j = i + 1; j < stripped.size(); ++j) {
      if (!cross_intersecting(stripped[i], stripped[j])) {
        rep.cross_blocks_intersect = false;
        rep.problems.push_back("stripped blocks " + std::to_string(i) + " and " +
                               std::to_string(j) + " are not cross-intersecting");
      }
    }
  }

  const PlainFamily tails = complements_in_tail(build_supports(part.a0()), p.n);
  const PlainFamily tail_shadow = shadow_to(tails, km1);
  const SignedFamily b = build_B(tail_shadow, p.r);
  rep.a0_size = part.a0().size();
  rep.b_size = b.size();
  rep.a0_fits_b = rep.a0_size <= rep.b_size;
  if (!rep.a0_fits_b) rep.problems.push_back("|A_0| exceeds |B|");

  // Tag every (k-1)-set with its source family, then look for collisions.
  std::vector<std::pair<SignedSet, int>> pooled;
  for (int i = 1; i <= p.r; ++i) {
    for (const auto& s : stripped[static_cast<std::size_t>(i)]) {
      pooled.emplace_back(theta_shift(s, i - 1, p.r), i);
    }
  }
  for (const auto& s : b) pooled.emplace_back(s, 0);
  std::sort(pooled.begin(), pooled.end());
  rep.shifted_blocks_disjoint = true;
  for (std::size_t i = 1; i < pooled.size(); ++i) {
    if (pooled[i - 1].first == pooled[i].first) {
      rep.shifted_blocks_disjoint = false;
      rep.problems.push_back("shifted families " + std::to_string(pooled[i - 1].second) + " and " +
                             std::to_string(pooled[i].second) + " share " +
                             pooled[i].first.to_string());
    }
  }

  rep.supports_avoid_shadow = true;
  for (int i = 1; i <= p.r; ++i) {
    for (const auto& s : stripped[static_cast<std::size_t>(i)]) {
      if (tail_shadow.contains(support(s))) {
        rep.supports_avoid_shadow = false;
        rep.problems.push_back("support of " + s.to_string() + " lies in the shadow of N");
      }
    }
  }

  try {
    (void)match_to_shadow(tails, km1);
    rep.matching_found = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoPerfectMatching) throw;
    rep.problems.push_back(e.what());
  }
  return rep;
}

}  // namespace ekr
