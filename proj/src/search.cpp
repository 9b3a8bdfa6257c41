#include "ekr/search.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ekr {

namespace {

using Words = std::vector<std::uint64_t>;

bool any(const Words& w) {
  return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
}

void set_bit(Words& w, std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
void clear_bit(Words& w, std::size_t i) { w[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
bool test_bit(const Words& w, std::size_t i) { return (w[i / 64] >> (i % 64)) & 1u; }

std::size_t first_bit(const Words& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
  }
  return static_cast<std::size_t>(-1);
}

// One bit per (element, sign) pair when they fit in a machine word.
bool pair_masks(const SignedFamily& sets, std::vector<std::uint64_t>& masks) {
  const Params& p = sets.params();
  if (static_cast<long long>(p.n) * p.r > 64) return false;
  masks.clear();
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    std::uint64_t m = 0;
    for (const auto& q : s.pairs()) {
      m |= std::uint64_t{1} << ((q.element - 1) * p.r + (q.sign - 1));
    }
    masks.push_back(m);
  }
  return true;
}

}  // namespace

IntersectionGraph::IntersectionGraph(const Params& params, std::uint64_t cap)
    : params_(params), vertices_(universe(params, cap)) {
  const std::size_t v = vertices_.size();
  words_ = (v + 63) / 64;
  rows_.assign(v * words_, 0);
  std::vector<std::uint64_t> masks;
  const bool packed = pair_masks(vertices_, masks);
  const auto& m = vertices_.members();
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      const bool hit = packed ? (masks[a] & masks[b]) != 0 : intersects(m[a], m[b]);
      if (hit) {
        rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
        rows_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
      }
    }
  }
}

std::size_t IntersectionGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(u)[w]));
  return d;
}

// ---------------------------------------------------------------------------
// Maximum clique

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const IntersectionGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {
    const std::size_t v = g.size();
    words_ = (v + 63) / 64;
    order_ = degeneracy_order();
    adj_.assign(v, Words(words_, 0));
    for (std::size_t a = 0; a < v; ++a) {
      for (std::size_t b = 0; b < v; ++b) {
        if (a != b && g.adjacent(order_[a], order_[b])) set_bit(adj_[a], b);
      }
    }
  }

  SearchResult run() {
    const std::size_t v = g_.size();
    Words all(words_, 0);
    for (std::size_t i = 0; i < v; ++i) set_bit(all, i);
    if (v > 0) expand(all);

    SearchResult result{best_.size(), SignedFamily(g_.params()), nodes_, !aborted_};
    std::vector<SignedSet> sets;
    for (std::size_t i : best_) sets.push_back(g_.vertices().members()[order_[i]]);
    result.witness = SignedFamily::from_sets(g_.params(), std::move(sets));
    return result;
  }

 private:
  // Repeatedly removes a minimum-degree vertex (lowest index on ties); the
  // search order is the reverse of the removal order.
  std::vector<std::size_t> degeneracy_order() const {
    const std::size_t v = g_.size();
    std::vector<std::size_t> degree(v);
    for (std::size_t i = 0; i < v; ++i) degree[i] = g_.degree(i);
    std::vector<bool> removed(v, false);
    std::vector<std::size_t> out;
    out.reserve(v);
    for (std::size_t step = 0; step < v; ++step) {
      std::size_t pick = v;
      for (std::size_t i = 0; i < v; ++i) {
        if (!removed[i] && (pick == v || degree[i] < degree[pick])) pick = i;
      }
      removed[pick] = true;
      out.push_back(pick);
      for (std::size_t i = 0; i < v; ++i) {
        if (!removed[i] && g_.adjacent(pick, i)) --degree[i];
      }
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  void expand(Words candidates) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }

    // Greedy colouring into independent classes; colour c bounds the clique
    // size reachable from the vertices coloured <= c.
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colours;
    Words uncoloured = candidates;
    for (std::size_t colour = 1; any(uncoloured); ++colour) {
      Words free = uncoloured;
      for (std::size_t u = first_bit(free); u != static_cast<std::size_t>(-1); u = first_bit(free)) {
        clear_bit(free, u);
        clear_bit(uncoloured, u);
        for (std::size_t w = 0; w < words_; ++w) free[w] &= ~adj_[u][w];
        verts.push_back(u);
        colours.push_back(colour);
      }
    }

    for (std::size_t idx = verts.size(); idx-- > 0;) {
      if (current_.size() + colours[idx] <= best_.size()) return;
      const std::size_t u = verts[idx];
      current_.push_back(u);
      Words next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & adj_[u][w];
      if (!any(next)) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      clear_bit(candidates, u);
      if (aborted_) return;
    }
  }

  const IntersectionGraph& g_;
  std::uint64_t budget_;
  std::size_t words_ = 0;
  std::vector<std::size_t> order_;
  std::vector<Words> adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SearchResult max_intersecting_exact(const Params& params, std::uint64_t node_budget,
                                    std::uint64_t cap) {
  params.validate();
  const IntersectionGraph g(params, cap);
  return CliqueSearch(g, node_budget).run();
}

// ---------------------------------------------------------------------------
// Maximal cliques

namespace {

class MaximalCliques {
 public:
  MaximalCliques(const IntersectionGraph& g, std::uint64_t cap) : g_(g), cap_(cap) {
    words_ = g.words();
    adj_.assign(g.size(), Words(words_, 0));
    for (std::size_t a = 0; a < g.size(); ++a) {
      std::copy(g.row(a), g.row(a) + words_, adj_[a].begin());
    }
  }

  EnumerationResult run() {
    Words p(words_, 0), x(words_, 0);
    for (std::size_t i = 0; i < g_.size(); ++i) set_bit(p, i);
    recurse(p, x);
    std::sort(out_.begin(), out_.end(), [](const SignedFamily& a, const SignedFamily& b) {
      return a.members() < b.members();
    });
    return {std::move(out_), !truncated_};
  }

 private:
  void recurse(Words p, Words x) {
    if (truncated_) return;
    if (!any(p)) {
      if (!any(x)) emit();
      return;
    }
    // Pivot maximizing |P ∩ N(u)| over P ∪ X.
    std::size_t pivot = 0, best = 0;
    bool have = false;
    for (std::size_t u = 0; u < g_.size(); ++u) {
      if (!test_bit(p, u) && !test_bit(x, u)) continue;
      std::size_t c = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        c += static_cast<std::size_t>(std::popcount(p[w] & adj_[u][w]));
      }
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    }
    Words branch(words_);
    for (std::size_t w = 0; w < words_; ++w) branch[w] = p[w] & ~adj_[pivot][w];
    for (std::size_t v = first_bit(branch); v != static_cast<std::size_t>(-1); v = first_bit(branch)) {
      clear_bit(branch, v);
      Words np(words_), nx(words_);
      for (std::size_t w = 0; w < words_; ++w) {
        np[w] = p[w] & adj_[v][w];
        nx[w] = x[w] & adj_[v][w];
      }
      current_.push_back(v);
      recurse(std::move(np), std::move(nx));
      current_.pop_back();
      clear_bit(p, v);
      set_bit(x, v);
      if (truncated_) return;
    }
  }

  void emit() {
    if (out_.size() >= cap_) {
      truncated_ = true;
      return;
    }
    std::vector<SignedSet> sets;
    sets.reserve(current_.size());
    for (std::size_t i : current_) sets.push_back(g_.vertices().members()[i]);
    out_.push_back(SignedFamily::from_sets(g_.params(), std::move(sets)));
  }

  const IntersectionGraph& g_;
  std::uint64_t cap_;
  std::size_t words_ = 0;
  std::vector<Words> adj_;
  std::vector<std::size_t> current_;
  std::vector<SignedFamily> out_;
  bool truncated_ = false;
};

}  // namespace

EnumerationResult enumerate_maximal_intersecting(const Params& params, std::uint64_t cap,
                                                 std::uint64_t member_cap) {
  params.validate();
  const IntersectionGraph g(params, member_cap);
  return MaximalCliques(g, cap).run();
}

// ---------------------------------------------------------------------------
// Random families

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SignedFamily random_maximal_intersecting(const Params& params, std::uint64_t seed,
                                         std::uint64_t cap) {
  const SignedFamily all = universe(params, cap);
  std::vector<std::size_t> perm(all.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  SplitMix64 rng(seed);
  for (std::size_t i = perm.size(); i-- > 1;) {
    std::swap(perm[i], perm[rng.below(i + 1)]);
  }

  std::vector<std::uint64_t> masks;
  const bool packed = pair_masks(all, masks);
  const auto& m = all.members();
  std::vector<std::size_t> kept;
  for (std::size_t idx : perm) {
    bool ok = true;
    for (std::size_t other : kept) {
      if (packed ? (masks[idx] & masks[other]) == 0 : !intersects(m[idx], m[other])) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(idx);
  }
  std::vector<SignedSet> sets;
  sets.reserve(kept.size());
  for (std::size_t i : kept) sets.push_back(m[i]);
  return SignedFamily::from_sets(params, std::move(sets));
}

bool is_maximal_intersecting(const SignedFamily& family, std::uint64_t cap) {
  if (!is_intersecting(family)) return false;
  for (const auto& candidate : universe(family.params(), cap)) {
    if (family.contains(candidate)) continue;
    if (std::all_of(family.begin(), family.end(),
                    [&](const SignedSet& s) { return intersects(s, candidate); })) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bound check

std::string_view to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::Equal: return "ok";
    case BoundStatus::Violation: return "VIOLATION";
    case BoundStatus::Below: return "BELOW";
    case BoundStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string BoundReport::summary() const {
  std::ostringstream os;
  os << "max=" << max_size << " bound=" << bound << ' ' << to_string(status);
  if (status == BoundStatus::Violation && expected_regime) os << "(expected: r=1 regime)";
  return os.str();
}

BoundReport verify_bound(const Params& params, std::uint64_t node_budget) {
  BoundReport rep;
  rep.params = params;
  rep.bound = bound_value(params);
  rep.expected_regime = params.r == 1 && 2 * params.k > params.n;
  const SearchResult res = max_intersecting_exact(params, node_budget);
  rep.max_size = res.max_size;
  rep.nodes_explored = res.nodes_explored;
  rep.exhausted = res.exhausted;
  if (!res.exhausted) {
    rep.status = BoundStatus::Inconclusive;
  } else if (res.max_size == rep.bound) {
    rep.status = BoundStatus::Equal;
  } else if (res.max_size > rep.bound) {
    rep.status = BoundStatus::Violation;
  } else {
    rep.status = BoundStatus::Below;
  }
  return rep;
}

}  // namespace ekr
