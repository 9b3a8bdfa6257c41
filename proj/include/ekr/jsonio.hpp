#pragma once

// JSONL/JSON wire formats.
//
//   signed family  {"n":4,"k":2,"r":2,"sets":[[[1,1],[2,2]],[[1,1],[3,1]]]}
//   plain family   {"n":5,"sets":[[2,3],[2,4]]}
//   certificate    {"params":{"n":..,"k":..,"r":..},
//                   "map":[{"from":[[2,1],[3,1]],"to":[[1,1],[4,1]]},...],
//                   "blocks":{"a0":4,"a":[1,1]}}
//
// Writers emit compact JSON with keys in the order shown, pairs sorted by
// element and sets in canonical order. Readers accept only that canonical
// form; anything else is a Parse error naming the line.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ekr/core.hpp"
#include "ekr/injection.hpp"
#include "ekr/search.hpp"
#include "ekr/shadow.hpp"

namespace ekr {

using ordered_json = nlohmann::ordered_json;

std::string to_json_line(const SignedFamily& family);
std::string to_json_line(const PlainFamily& family);

// `line_no` only labels error messages.
SignedFamily parse_signed_family(std::string_view line, std::size_t line_no = 1);
PlainFamily parse_plain_family(std::string_view line, std::size_t line_no = 1);

// Blank lines are skipped; line numbers count them.
std::vector<SignedFamily> read_signed_families(std::istream& in);
std::vector<PlainFamily> read_plain_families(std::istream& in);
void write_signed_families(std::ostream& out, const std::vector<SignedFamily>& families);

ordered_json signed_set_json(const SignedSet& s);
ordered_json to_json(const InjectionCertificate& cert);
ordered_json to_json(const CertificateReport& report);
ordered_json to_json(const SearchResult& result);
ordered_json to_json(const BoundReport& report);
ordered_json to_json(const KatonaReport& report);

}  // namespace ekr
