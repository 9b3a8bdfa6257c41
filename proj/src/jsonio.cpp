#include "ekr/jsonio.hpp"

#include <istream>
#include <limits>
#include <ostream>

namespace ekr {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + what);
}

ordered_json parse_object(std::string_view line, std::size_t line_no) {
  ordered_json j;
  try {
    j = ordered_json::parse(line.begin(), line.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(line_no, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(line_no, "expected a JSON object");
  return j;
}

void require_keys(const ordered_json& j, std::initializer_list<const char*> keys,
                  std::size_t line_no) {
  for (const char* key : keys) {
    if (!j.contains(key)) fail(line_no, std::string("missing key \"") + key + "\"");
  }
  if (j.size() != keys.size()) fail(line_no, "unexpected keys present");
}

int get_int(const ordered_json& v, const char* what, std::size_t line_no) {
  if (!v.is_number_integer()) fail(line_no, std::string(what) + " must be an integer");
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      fail(line_no, std::string(what) + " out of range");
    }
    return static_cast<int>(u);
  }
  const auto s = v.get<std::int64_t>();
  if (s < std::numeric_limits<int>::min() || s > std::numeric_limits<int>::max()) {
    fail(line_no, std::string(what) + " out of range");
  }
  return static_cast<int>(s);
}

ordered_json pairs_json(const SignedSet& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : s.pairs()) arr.push_back({p.element, p.sign});
  return arr;
}

}  // namespace

ordered_json signed_set_json(const SignedSet& s) { return pairs_json(s); }

std::string to_json_line(const SignedFamily& family) {
  ordered_json j;
  j["n"] = family.params().n;
  j["k"] = family.params().k;
  j["r"] = family.params().r;
  ordered_json sets = ordered_json::array();
  for (const auto& s : family) sets.push_back(pairs_json(s));
  j["sets"] = std::move(sets);
  return j.dump();
}

std::string to_json_line(const PlainFamily& family) {
  ordered_json j;
  j["n"] = family.ground();
  ordered_json sets = ordered_json::array();
  for (const auto& s : family) {
    ordered_json arr = ordered_json::array();
    for (int x : s.elements()) arr.push_back(x);
    sets.push_back(std::move(arr));
  }
  j["sets"] = std::move(sets);
  return j.dump();
}

SignedFamily parse_signed_family(std::string_view line, std::size_t line_no) {
  const ordered_json j = parse_object(line, line_no);
  require_keys(j, {"n", "k", "r", "sets"}, line_no);
  const Params params{get_int(j["n"], "n", line_no), get_int(j["k"], "k", line_no),
                      get_int(j["r"], "r", line_no)};
  try {
    params.validate();
  } catch (const Error& e) {
    fail(line_no, e.what());
  }
  if (!j["sets"].is_array()) fail(line_no, "\"sets\" must be an array");

  std::vector<SignedSet> sets;
  sets.reserve(j["sets"].size());
  for (const auto& js : j["sets"]) {
    if (!js.is_array()) fail(line_no, "each set must be an array of pairs");
    std::vector<SignedPair> pairs;
    for (const auto& jp : js) {
      if (!jp.is_array() || jp.size() != 2) fail(line_no, "each pair must be [element, sign]");
      pairs.push_back({get_int(jp[0], "element", line_no), get_int(jp[1], "sign", line_no)});
    }
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      if (pairs[i - 1].element >= pairs[i].element) {
        fail(line_no, "pairs must be sorted by strictly increasing element");
      }
    }
    try {
      sets.push_back(make_signed_set(std::move(pairs), params));
    } catch (const Error& e) {
      fail(line_no, e.what());
    }
    if (sets.size() > 1 && !(sets[sets.size() - 2] < sets.back())) {
      fail(line_no, "sets must be listed in canonical order without repeats");
    }
  }
  return SignedFamily::from_sets(params, std::move(sets));
}

PlainFamily parse_plain_family(std::string_view line, std::size_t line_no) {
  const ordered_json j = parse_object(line, line_no);
  require_keys(j, {"n", "sets"}, line_no);
  const int n = get_int(j["n"], "n", line_no);
  if (n < 0) fail(line_no, "n must be non-negative");
  if (!j["sets"].is_array()) fail(line_no, "\"sets\" must be an array");
  std::vector<PlainSet> sets;
  for (const auto& js : j["sets"]) {
    if (!js.is_array()) fail(line_no, "each set must be an array of elements");
    std::vector<int> elems;
    for (const auto& je : js) elems.push_back(get_int(je, "element", line_no));
    for (std::size_t i = 1; i < elems.size(); ++i) {
      if (elems[i - 1] >= elems[i]) fail(line_no, "elements must be strictly increasing");
    }
    sets.emplace_back(std::move(elems));
    if (sets.size() > 1 && !(sets[sets.size() - 2] < sets.back())) {
      fail(line_no, "sets must be listed in canonical order without repeats");
    }
  }
  try {
    return PlainFamily::from_sets(n, std::move(sets));
  } catch (const Error& e) {
    fail(line_no, e.what());
  }
}

namespace {

template <typename Family, typename Parse>
std::vector<Family> read_lines(std::istream& in, Parse parse) {
  std::vector<Family> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse(line, line_no));
  }
  return out;
}

}  // namespace

std::vector<SignedFamily> read_signed_families(std::istream& in) {
  return read_lines<SignedFamily>(in, parse_signed_family);
}

std::vector<PlainFamily> read_plain_families(std::istream& in) {
  return read_lines<PlainFamily>(in, parse_plain_family);
}

void write_signed_families(std::ostream& out, const std::vector<SignedFamily>& families) {
  for (const auto& f : families) out << to_json_line(f) << '\n';
}

ordered_json to_json(const InjectionCertificate& cert) {
  ordered_json j;
  j["params"] = {{"n", cert.params.n}, {"k", cert.params.k}, {"r", cert.params.r}};
  ordered_json map = ordered_json::array();
  for (const auto& [from, to] : cert.mapping) {
    ordered_json e;
    e["from"] = pairs_json(from);
    e["to"] = pairs_json(to);
    map.push_back(std::move(e));
  }
  j["map"] = std::move(map);
  ordered_json blocks;
  blocks["a0"] = cert.diagnostics.a0;
  blocks["a"] = cert.diagnostics.blocks;
  j["blocks"] = std::move(blocks);
  return j;
}

ordered_json to_json(const CertificateReport& report) {
  ordered_json j;
  j["valid"] = report.valid;
  j["domain_size"] = report.domain_size;
  j["bound"] = report.bound;
  j["problems"] = report.problems;
  return j;
}

ordered_json to_json(const SearchResult& result) {
  ordered_json j;
  j["n"] = result.witness.params().n;
  j["k"] = result.witness.params().k;
  j["r"] = result.witness.params().r;
  j["max_size"] = result.max_size;
  j["exhausted"] = result.exhausted;
  j["nodes_explored"] = result.nodes_explored;
  ordered_json sets = ordered_json::array();
  for (const auto& s : result.witness) sets.push_back(pairs_json(s));
  j["witness"] = std::move(sets);
  return j;
}

ordered_json to_json(const BoundReport& report) {
  ordered_json j;
  j["n"] = report.params.n;
  j["k"] = report.params.k;
  j["r"] = report.params.r;
  j["max_size"] = report.max_size;
  j["bound"] = report.bound;
  j["exhausted"] = report.exhausted;
  j["nodes_explored"] = report.nodes_explored;
  j["status"] = std::string(to_string(report.status));
  j["expected_regime"] = report.expected_regime;
  return j;
}

ordered_json to_json(const KatonaReport& report) {
  ordered_json j;
  j["shadow_size"] = report.shadow_size;
  j["family_size"] = report.family_size;
  j["holds"] = report.holds;
  return j;
}

}  // namespace ekr
