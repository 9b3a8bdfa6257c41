#include "ekr/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace ekr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::WrongSize: return "WrongSize";
    case ErrorCode::NonCanonical: return "NonCanonical";
    case ErrorCode::DuplicateSet: return "DuplicateSet";
    case ErrorCode::ParamsMismatch: return "ParamsMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::SizeExceedsMembers: return "SizeExceedsMembers";
    case ErrorCode::NonUniform: return "NonUniform";
    case ErrorCode::TooFewMembers: return "TooFewMembers";
    case ErrorCode::NotTIntersecting: return "NotTIntersecting";
    case ErrorCode::MissingPair: return "MissingPair";
    case ErrorCode::ContainsOne: return "ContainsOne";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::GroupOverflow: return "GroupOverflow";
    case ErrorCode::NotIntersecting: return "NotIntersecting";
    case ErrorCode::UnsupportedRange: return "UnsupportedRange";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

void Params::validate() const {
  if (n < 1 || k < 1 || k > n || r < 1) {
    std::ostringstream os;
    os << "need 1 <= k <= n and r >= 1, got n=" << n << " k=" << k << " r=" << r;
    throw Error(ErrorCode::InvalidParams, os.str());
  }
}

// ---------------------------------------------------------------------------
// SignedSet

SignedSet::SignedSet(std::vector<SignedPair> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i - 1].element >= pairs_[i].element) {
      throw Error(ErrorCode::NonCanonical, "pairs not strictly increasing by element");
    }
  }
}

bool SignedSet::contains(SignedPair p) const {
  return sign_of(p.element) == p.sign && p.sign != 0;
}

int SignedSet::sign_of(int element) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), element,
                             [](const SignedPair& p, int e) { return p.element < e; });
  if (it == pairs_.end() || it->element != element) return 0;
  return it->sign;
}

SignedSet SignedSet::without(SignedPair p) const {
  std::vector<SignedPair> out;
  out.reserve(pairs_.size());
  std::copy_if(pairs_.begin(), pairs_.end(), std::back_inserter(out),
               [&](const SignedPair& q) { return q != p; });
  SignedSet s;
  s.pairs_ = std::move(out);
  return s;
}

SignedSet SignedSet::with(SignedPair p) const {
  if (sign_of(p.element) != 0) {
    throw Error(ErrorCode::DuplicateElement,
                "element " + std::to_string(p.element) + " already present");
  }
  SignedSet s = *this;
  auto it = std::lower_bound(s.pairs_.begin(), s.pairs_.end(), p);
  s.pairs_.insert(it, p);
  return s;
}

std::string SignedSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) os << ',';
    os << '(' << pairs_[i].element << ',' << pairs_[i].sign << ')';
  }
  os << '}';
  return os.str();
}

SignedSet make_signed_set(std::vector<SignedPair> pairs, const Params& params) {
  return make_signed_set(std::move(pairs), params, static_cast<std::size_t>(params.k));
}

SignedSet make_signed_set(std::vector<SignedPair> pairs, const Params& params,
                          std::size_t size) {
  for (const auto& p : pairs) {
    if (p.element < 1 || p.element > params.n || p.sign < 1 || p.sign > params.r) {
      std::ostringstream os;
      os << "pair (" << p.element << ',' << p.sign << ") outside [" << params.n << "] x ["
         << params.r << ']';
      throw Error(ErrorCode::OutOfRange, os.str());
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i - 1].element == pairs[i].element) {
      throw Error(ErrorCode::DuplicateElement,
                  "element " + std::to_string(pairs[i].element) + " appears twice");
    }
  }
  if (pairs.size() != size) {
    throw Error(ErrorCode::WrongSize, "expected " + std::to_string(size) + " pairs, got " +
                                          std::to_string(pairs.size()));
  }
  return SignedSet(std::move(pairs));
}

bool intersects(const SignedSet& a, const SignedSet& b) {
  auto pa = a.pairs();
  auto pb = b.pairs();
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    if (pa[i].element < pb[j].element) {
      ++i;
    } else if (pb[j].element < pa[i].element) {
      ++j;
    } else {
      if (pa[i].sign == pb[j].sign) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// PlainSet

PlainSet::PlainSet(std::vector<int> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw Error(ErrorCode::DuplicateElement, "repeated element in plain set");
  }
}

bool PlainSet::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::string PlainSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) os << ',';
    os << elements_[i];
  }
  os << '}';
  return os.str();
}

std::size_t intersection_size(const PlainSet& a, const PlainSet& b) {
  auto ea = a.elements();
  auto eb = b.elements();
  std::size_t i = 0, j = 0, count = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i] < eb[j]) {
      ++i;
    } else if (eb[j] < ea[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool is_subset(const PlainSet& sub, const PlainSet& super) {
  auto a = sub.elements();
  auto b = super.elements();
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PlainSet support(const SignedSet& a) {
  std::vector<int> elements;
  elements.reserve(a.size());
  for (const auto& p : a.pairs()) elements.push_back(p.element);
  return PlainSet(std::move(elements));
}

// ---------------------------------------------------------------------------
// Families

SignedFamily::SignedFamily(Params params)
    : SignedFamily(params, static_cast<std::size_t>(params.k)) {}

SignedFamily::SignedFamily(Params params, std::size_t member_size)
    : params_(params), member_size_(member_size) {
  params_.validate();
  if (member_size_ > static_cast<std::size_t>(params_.n)) {
    throw Error(ErrorCode::WrongSize, "member size exceeds n");
  }
}

void SignedFamily::check_member(const SignedSet& s) const {
  if (s.size() != member_size_) {
    throw Error(ErrorCode::WrongSize, "member " + s.to_string() + " should have " +
                                          std::to_string(member_size_) + " pairs");
  }
  for (const auto& p : s.pairs()) {
    if (p.element < 1 || p.element > params_.n || p.sign < 1 || p.sign > params_.r) {
      throw Error(ErrorCode::OutOfRange, "member " + s.to_string() + " leaves [n] x [r]");
    }
  }
}

SignedFamily SignedFamily::from_sets(Params params, std::size_t member_size,
                                     std::vector<SignedSet> sets) {
  SignedFamily f(params, member_size);
  for (const auto& s : sets) f.check_member(s);
  std::sort(sets.begin(), sets.end());
  auto dup = std::adjacent_find(sets.begin(), sets.end());
  if (dup != sets.end()) {
    throw Error(ErrorCode::DuplicateSet, "set " + dup->to_string() + " listed twice");
  }
  f.members_ = std::move(sets);
  return f;
}

bool SignedFamily::contains(const SignedSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool SignedFamily::insert(const SignedSet& s) {
  check_member(s);
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it != members_.end() && *it == s) return false;
  members_.insert(it, s);
  return true;
}

PlainFamily::PlainFamily(int ground, std::size_t member_size)
    : ground_(ground), member_size_(member_size) {
  if (ground_ < 0) throw Error(ErrorCode::InvalidParams, "negative ground set size");
}

PlainFamily PlainFamily::from_sets(int ground, std::vector<PlainSet> sets,
                                   std::size_t empty_size) {
  PlainFamily f(ground, sets.empty() ? empty_size : sets.front().size());
  for (const auto& s : sets) {
    if (s.size() != f.member_size_) {
      throw Error(ErrorCode::NonUniform, "member " + s.to_string() + " has size " +
                                             std::to_string(s.size()) + ", expected " +
                                             std::to_string(f.member_size_));
    }
    if (!s.empty() && (s.elements().front() < 1 || s.elements().back() > ground)) {
      throw Error(ErrorCode::OutOfRange, "member " + s.to_string() + " leaves [" +
                                             std::to_string(ground) + "]");
    }
  }
  std::sort(sets.begin(), sets.end());
  auto dup = std::adjacent_find(sets.begin(), sets.end());
  if (dup != sets.end()) {
    throw Error(ErrorCode::DuplicateSet, "set " + dup->to_string() + " listed twice");
  }
  f.members_ = std::move(sets);
  return f;
}

bool PlainFamily::contains(const PlainSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool PlainFamily::insert(const PlainSet& s) {
  if (s.size() != member_size_) {
    throw Error(ErrorCode::NonUniform, "member " + s.to_string() + " has the wrong size");
  }
  if (!s.empty() && (s.elements().front() < 1 || s.elements().back() > ground_)) {
    throw Error(ErrorCode::OutOfRange, "member " + s.to_string() + " leaves the ground set");
  }
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it != members_.end() && *it == s) return false;
  members_.insert(it, s);
  return true;
}

bool is_intersecting(const SignedFamily& family) {
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!intersects(m[i], m[j])) return false;
    }
  }
  return true;
}

bool cross_intersecting(const SignedFamily& a, const SignedFamily& b) {
  if (a.params().n != b.params().n || a.params().r != b.params().r) {
    throw Error(ErrorCode::ParamsMismatch, "families over different (n, r)");
  }
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (!intersects(x, y)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Counting

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // c * (n - i) / (i + 1) is exact at every step; divide out the gcd first so
  // the intermediate product only overflows when the result itself would.
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t num = n - i;
    std::uint64_t den = i + 1;
    std::uint64_t g = std::gcd(c, den);
    c /= g;
    den /= g;
    num /= den;  // den now divides num
    c = checked_mul(c, num);
  }
  return c;
}

std::uint64_t bound_value(const Params& params) {
  params.validate();
  return checked_mul(checked_pow(params.r, params.k - 1), binomial(params.n - 1, params.k - 1));
}

std::uint64_t universe_size(const Params& params) {
  params.validate();
  return checked_mul(checked_pow(params.r, params.k), binomial(params.n, params.k));
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// Appends every signing of `elements` (signs in [r]) in lexicographic order of
// the sign vector; `prefix` pairs are merged in front.
void append_signings(const std::vector<int>& elements, int r,
                     const std::vector<SignedPair>& prefix, std::vector<SignedSet>& out) {
  const std::size_t m = elements.size();
  std::vector<int> signs(m, 1);
  while (true) {
    std::vector<SignedPair> pairs = prefix;
    pairs.reserve(prefix.size() + m);
    for (std::size_t i = 0; i < m; ++i) pairs.push_back({elements[i], signs[i]});
    out.emplace_back(std::move(pairs));
    std::size_t i = m;
    while (i > 0 && signs[i - 1] == r) signs[--i] = 1;
    if (i == 0) break;
    ++signs[i - 1];
  }
}

void check_cap(std::uint64_t count, std::uint64_t cap, const char* what) {
  if (count > cap) {
    throw Error(ErrorCode::TooLarge, std::string(what) + " has " + std::to_string(count) +
                                         " members, cap is " + std::to_string(cap));
  }
}

}  // namespace

SignedFamily universe(const Params& params, std::uint64_t cap) {
  params.validate();
  std::uint64_t count = 0;
  try {
    count = universe_size(params);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
    count = std::numeric_limits<std::uint64_t>::max();
  }
  check_cap(count, cap, "universe");
  std::vector<SignedSet> sets;
  sets.reserve(count);
  for (const auto& elements : k_subsets(params.n, params.k)) {
    append_signings(elements, params.r, {}, sets);
  }
  return SignedFamily::from_sets(params, std::move(sets));
}

SignedFamily star(const Params& params, std::uint64_t cap) {
  params.validate();
  std::uint64_t count = 0;
  try {
    count = bound_value(params);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
    count = std::numeric_limits<std::uint64_t>::max();
  }
  check_cap(count, cap, "star");
  std::vector<SignedSet> sets;
  sets.reserve(count);
  for (auto elements : k_subsets(params.n - 1, params.k - 1)) {
    for (int& e : elements) ++e;
    append_signings(elements, params.r, {{1, 1}}, sets);
  }
  return SignedFamily::from_sets(params, std::move(sets));
}

int mod_star(long long v, int y) {
  if (y < 1) throw Error(ErrorCode::InvalidParams, "mod_star needs y >= 1");
  long long m = v % y;
  if (m < 0) m += y;
  return m == 0 ? y : static_cast<int>(m);
}

SignedSet theta_shift(const SignedSet& a, long long q, int r) {
  std::vector<SignedPair> pairs(a.pairs().begin(), a.pairs().end());
  const long long step = q % r;  // keeps a + step far from overflow
  for (auto& p : pairs) p.sign = mod_star(p.sign + step, r);
  return SignedSet(std::move(pairs));
}

SignedFamily theta_shift_family(const SignedFamily& family, long long q) {
  std::vector<SignedSet> shifted;
  shifted.reserve(family.size());
  for (const auto& s : family) shifted.push_back(theta_shift(s, q, family.params().r));
  return SignedFamily::from_sets(family.params(), family.member_size(), std::move(shifted));
}

}  // namespace ekr
