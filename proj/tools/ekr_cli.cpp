// ekr: command-line front end for the signed-set intersecting family tools.
//
// Exit codes
//   0  success
//   1  certificate failed verification, or an internal construction error
//   2  invalid parameters, usage or parse error
//   3  member cap exceeded
//   4  input family is not intersecting
//   5  parameters outside the injection's range (r >= 2, 2k <= n)
//   6  bound violated outside the r = 1 regime
//   7  search budget exhausted before optimality was proven

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ekr/core.hpp"
#include "ekr/injection.hpp"
#include "ekr/jsonio.hpp"
#include "ekr/search.hpp"
#include "ekr/shadow.hpp"

namespace {

int exit_code_for(ekr::ErrorCode code) {
  using ekr::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidParams:
    case ErrorCode::Parse:
    case ErrorCode::DuplicateElement:
    case ErrorCode::OutOfRange:
    case ErrorCode::WrongSize:
    case ErrorCode::NonCanonical:
    case ErrorCode::DuplicateSet:
    case ErrorCode::NonUniform:
    case ErrorCode::SizeExceedsMembers:
    case ErrorCode::NotTIntersecting:
    case ErrorCode::TooFewMembers:
      return 2;
    case ErrorCode::TooLarge:
    case ErrorCode::Overflow:
      return 3;
    case ErrorCode::NotIntersecting:
      return 4;
    case ErrorCode::UnsupportedRange:
      return 5;
    default:
      return 1;
  }
}

struct ParamFlags {
  int n = 0;
  int k = 0;
  int r = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("-n", n, "ground set size")->required();
    cmd->add_option("-k", k, "set size")->required();
    cmd->add_option("-r", r, "number of signs")->required();
  }
  ekr::Params params() const {
    ekr::Params p{n, k, r};
    p.validate();
    return p;
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ekr::Error(ekr::ErrorCode::Parse, "cannot open " + path + " for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ekr::Error(ekr::ErrorCode::Parse, "cannot open " + path);
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersecting families of signed sets: injections into the star and exact search"};
  app.require_subcommand(1);
  bool json = false;

  // universe / star
  ParamFlags fam_flags;
  std::string fam_out;
  std::uint64_t cap = ekr::kDefaultMemberCap;
  bool list_sets = false;
  auto* universe_cmd = app.add_subcommand("universe", "all signed k-sets over [n] x [r]");
  auto* star_cmd = app.add_subcommand("star", "signed k-sets containing (1,1)");
  for (auto* cmd : {universe_cmd, star_cmd}) {
    fam_flags.attach(cmd);
    cmd->add_option("-o,--out", fam_out, "write the family as one JSONL line");
    cmd->add_option("--cap", cap, "refuse families larger than this");
    cmd->add_flag("--sets", list_sets, "print one member per line");
    cmd->add_flag("--json", json, "machine-readable JSON on stdout");
  }

  // inject
  std::string inject_in;
  std::string inject_out;
  unsigned threads = 1;
  auto* inject_cmd = app.add_subcommand("inject", "build and verify injections into the star");
  inject_cmd->add_option("family", inject_in, "JSONL file, one family per line")->required();
  inject_cmd->add_option("-o,--out", inject_out, "write certificates, one JSON object per line");
  inject_cmd->add_option("--threads", threads, "worker threads for shadow expansion");
  inject_cmd->add_flag("--json", json, "machine-readable JSON on stdout");

  // search / verify-bound
  ParamFlags search_flags;
  std::uint64_t budget = ekr::kDefaultNodeBudget;
  std::string search_out;
  auto* search_cmd = app.add_subcommand("search", "exact maximum intersecting family");
  auto* bound_cmd = app.add_subcommand("verify-bound", "compare the exact maximum to the bound");
  for (auto* cmd : {search_cmd, bound_cmd}) {
    search_flags.attach(cmd);
    cmd->add_option("--budget", budget, "search-tree node budget");
    cmd->add_flag("--json", json, "machine-readable JSON on stdout");
  }
  search_cmd->add_option("-o,--out", search_out, "write the search result JSON");

  // random-family
  ParamFlags rand_flags;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  std::string rand_out;
  auto* rand_cmd = app.add_subcommand("random-family", "seeded random maximal intersecting family");
  rand_flags.attach(rand_cmd);
  rand_cmd->add_option("--seed", seed, "64-bit seed; family i uses seed + i")->required();
  rand_cmd->add_option("--count", count, "number of families")->check(CLI::PositiveNumber);
  rand_cmd->add_option("-o,--out", rand_out, "write JSONL here instead of stdout");

  // shadow / katona
  std::string plain_in;
  std::size_t shadow_size = 0;
  std::size_t t = 0;
  std::string shadow_out;
  auto* shadow_cmd = app.add_subcommand("shadow", "s-shadow of plain families");
  shadow_cmd->add_option("family", plain_in, "JSONL file of plain families")->required();
  shadow_cmd->add_option("-s", shadow_size, "shadow level")->required();
  shadow_cmd->add_option("-o,--out", shadow_out, "write shadows as JSONL");
  shadow_cmd->add_flag("--json", json, "machine-readable JSON on stdout");
  auto* katona_cmd = app.add_subcommand("katona", "check |shadow_{s-t}(F)| >= |F|");
  katona_cmd->add_option("family", plain_in, "JSONL file of plain families")->required();
  katona_cmd->add_option("-t", t, "pairwise intersection lower bound")->required();
  katona_cmd->add_flag("--json", json, "machine-readable JSON on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (universe_cmd->parsed() || star_cmd->parsed()) {
      const ekr::Params p = fam_flags.params();
      const ekr::SignedFamily f = universe_cmd->parsed() ? ekr::universe(p, cap) : ekr::star(p, cap);
      if (!fam_out.empty()) open_out(fam_out) << ekr::to_json_line(f) << '\n';
      if (list_sets) {
        for (const auto& s : f) std::cout << s.to_string() << '\n';
      } else if (json) {
        std::cout << ekr::ordered_json{{"size", f.size()}}.dump() << '\n';
      } else {
        std::cout << f.size() << '\n';
      }
      return 0;
    }

    if (inject_cmd->parsed()) {
      auto in = open_in(inject_in);
      const auto families = ekr::read_signed_families(in);
      std::optional<std::ofstream> out;
      if (!inject_out.empty()) out.emplace(open_out(inject_out));
      int status = 0;
      std::size_t index = 0;
      for (const auto& f : families) {
        ++index;
        const auto cert = ekr::assemble_injection(f, threads);
        const auto report = ekr::verify_certificate(cert);
        if (out) *out << ekr::to_json(cert).dump() << '\n';
        if (json) {
          auto j = ekr::to_json(report);
          j["family"] = index;
          std::cout << j.dump() << '\n';
        } else {
          std::cout << "family " << index << ": " << report.domain_size << " sets -> star, bound "
                    << report.bound << (report.valid ? ", valid" : ", INVALID") << '\n';
          for (const auto& problem : report.problems) std::cout << "  " << problem << '\n';
        }
        if (!report.valid) status = 1;
      }
      return status;
    }

    if (search_cmd->parsed()) {
      const auto result = ekr::max_intersecting_exact(search_flags.params(), budget);
      const auto j = ekr::to_json(result);
      if (!search_out.empty()) open_out(search_out) << j.dump() << '\n';
      if (json) {
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "max=" << result.max_size << " exhausted=" << (result.exhausted ? "true" : "false")
                  << " nodes=" << result.nodes_explored << '\n';
      }
      return result.exhausted ? 0 : 7;
    }

    if (bound_cmd->parsed()) {
      const auto report = ekr::verify_bound(search_flags.params(), budget);
      std::cout << (json ? ekr::to_json(report).dump() : report.summary()) << '\n';
      switch (report.status) {
        case ekr::BoundStatus::Equal: return 0;
        case ekr::BoundStatus::Violation: return report.expected_regime ? 0 : 6;
        case ekr::BoundStatus::Below: return 6;
        case ekr::BoundStatus::Inconclusive: return 7;
      }
    }

    if (rand_cmd->parsed()) {
      const ekr::Params p = rand_flags.params();
      std::optional<std::ofstream> file;
      if (!rand_out.empty()) file.emplace(open_out(rand_out));
      std::ostream& out = file ? static_cast<std::ostream&>(*file) : std::cout;
      for (std::uint64_t i = 0; i < count; ++i) {
        out << ekr::to_json_line(ekr::random_maximal_intersecting(p, seed + i)) << '\n';
      }
      if (file) std::cout << count << '\n';
      return 0;
    }

    if (shadow_cmd->parsed()) {
      auto in = open_in(plain_in);
      std::optional<std::ofstream> out;
      if (!shadow_out.empty()) out.emplace(open_out(shadow_out));
      for (const auto& f : ekr::read_plain_families(in)) {
        const auto sh = ekr::shadow_to(f, shadow_size);
        if (out) *out << ekr::to_json_line(sh) << '\n';
        if (json) {
          std::cout << ekr::to_json_line(sh) << '\n';
        } else {
          std::cout << sh.size() << '\n';
        }
      }
      return 0;
    }

    if (katona_cmd->parsed()) {
      auto in = open_in(plain_in);
      int status = 0;
      for (const auto& f : ekr::read_plain_families(in)) {
        const auto rep = ekr::katona_check(f, t);
        if (json) {
          std::cout << ekr::to_json(rep).dump() << '\n';
        } else {
          std::cout << "shadow=" << rep.shadow_size << " family=" << rep.family_size << ' '
                    << (rep.holds ? "holds" : "FAILS") << '\n';
        }
        if (!rep.holds) status = 1;
      }
      return status;
    }
  } catch (const ekr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
