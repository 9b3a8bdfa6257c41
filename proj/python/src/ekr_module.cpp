#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ekr/core.hpp"
#include "ekr/injection.hpp"
#include "ekr/jsonio.hpp"
#include "ekr/search.hpp"
#include "ekr/shadow.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using PairList = std::vector<std::pair<int, int>>;

PairList to_pairs(const ekr::SignedSet& s) {
  PairList out;
  for (const auto& p : s.pairs()) out.emplace_back(p.element, p.sign);
  return out;
}

std::vector<ekr::SignedPair> from_pairs(const PairList& pairs) {
  std::vector<ekr::SignedPair> out;
  for (const auto& [e, s] : pairs) out.push_back({e, s});
  return out;
}

std::vector<int> to_list(const ekr::PlainSet& s) { return {s.elements().begin(), s.elements().end()}; }

std::vector<std::vector<int>> plain_members(const ekr::PlainFamily& f) {
  std::vector<std::vector<int>> out;
  for (const auto& s : f) out.push_back(to_list(s));
  return out;
}

ekr::PlainFamily make_plain(int ground, const std::vector<std::vector<int>>& sets, std::size_t empty_size) {
  std::vector<ekr::PlainSet> members;
  for (const auto& s : sets) members.emplace_back(s);
  return ekr::PlainFamily::from_sets(ground, std::move(members), empty_size);
}

py::dict to_dict(const ekr::CertificateReport& r) {
  return py::dict("valid"_a = r.valid, "domain_size"_a = r.domain_size, "bound"_a = r.bound,
                  "problems"_a = r.problems);
}

py::dict to_dict(const ekr::ProofStepReport& r) {
  return py::dict("ok"_a = r.ok(), "max_support_class"_a = r.max_support_class,
                  "class_limit"_a = r.class_limit, "class_bound_holds"_a = r.class_bound_holds,
                  "cross_blocks_intersect"_a = r.cross_blocks_intersect, "a0_size"_a = r.a0_size,
                  "b_size"_a = r.b_size, "a0_fits_b"_a = r.a0_fits_b,
                  "shifted_blocks_disjoint"_a = r.shifted_blocks_disjoint,
                  "supports_avoid_shadow"_a = r.supports_avoid_shadow,
                  "matching_found"_a = r.matching_found, "problems"_a = r.problems);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signed-set intersecting families: injection into the star, shadows, exact search";

  static py::exception<ekr::Error> error_type(m, "EkrError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ekr::Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      inst.attr("code") = std::string(ekr::to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<ekr::Params>(m, "Params")
      .def(py::init([](int n, int k, int r) {
             ekr::Params p{n, k, r};
             p.validate();
             return p;
           }),
           "n"_a, "k"_a, "r"_a)
      .def_readonly("n", &ekr::Params::n)
      .def_readonly("k", &ekr::Params::k)
      .def_readonly("r", &ekr::Params::r)
      .def(py::self == py::self)
      .def("__repr__", [](const ekr::Params& p) {
        return "Params(n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) +
               ", r=" + std::to_string(p.r) + ")";
      });

  py::class_<ekr::SignedSet>(m, "SignedSet")
      .def_property_readonly("pairs", &to_pairs)
      .def("__len__", &ekr::SignedSet::size)
      .def("__contains__", [](const ekr::SignedSet& s, std::pair<int, int> p) {
        return s.contains({p.first, p.second});
      })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const ekr::SignedSet& s) { return py::hash(py::tuple(py::cast(to_pairs(s)))); })
      .def("__repr__", &ekr::SignedSet::to_string);

  py::class_<ekr::SignedFamily>(m, "SignedFamily")
      .def(py::init([](const ekr::Params& p, const std::vector<PairList>& sets) {
             std::vector<ekr::SignedSet> members;
             for (const auto& s : sets) members.push_back(ekr::make_signed_set(from_pairs(s), p));
             return ekr::SignedFamily::from_sets(p, std::move(members));
           }),
           "params"_a, "sets"_a)
      .def_property_readonly("params", &ekr::SignedFamily::params)
      .def_property_readonly("member_size", &ekr::SignedFamily::member_size)
      .def_property_readonly("members", &ekr::SignedFamily::members)
      .def("__len__", &ekr::SignedFamily::size)
      .def("__contains__", &ekr::SignedFamily::contains)
      .def("__iter__", [](const ekr::SignedFamily& f) { return py::make_iterator(f.begin(), f.end()); },
           py::keep_alive<0, 1>())
      .def(py::self == py::self)
      .def("to_json", [](const ekr::SignedFamily& f) { return ekr::to_json_line(f); });

  py::class_<ekr::PlainFamily>(m, "PlainFamily")
      .def(py::init(&make_plain), "ground"_a, "sets"_a, "empty_size"_a = 0)
      .def_property_readonly("ground", &ekr::PlainFamily::ground)
      .def_property_readonly("member_size", &ekr::PlainFamily::member_size)
      .def_property_readonly("members", &plain_members)
      .def("__len__", &ekr::PlainFamily::size)
      .def(py::self == py::self)
      .def("to_json", [](const ekr::PlainFamily& f) { return ekr::to_json_line(f); });

  m.def("make_signed_set", [](const PairList& pairs, const ekr::Params& p) {
    return ekr::make_signed_set(from_pairs(pairs), p);
  }, "pairs"_a, "params"_a);
  m.def("intersects", &ekr::intersects);
  m.def("is_intersecting", &ekr::is_intersecting);
  m.def("universe", &ekr::universe, "params"_a, "cap"_a = ekr::kDefaultMemberCap);
  m.def("star", &ekr::star, "params"_a, "cap"_a = ekr::kDefaultMemberCap);
  m.def("bound_value", &ekr::bound_value);
  m.def("support", [](const ekr::SignedSet& s) { return to_list(ekr::support(s)); });
  m.def("mod_star", &ekr::mod_star, "v"_a, "y"_a);
  m.def("theta_shift", &ekr::theta_shift, "a"_a, "q"_a, "r"_a);
  m.def("theta_shift_family", &ekr::theta_shift_family, "family"_a, "q"_a);
  m.def("parse_signed_family", [](const std::string& line) { return ekr::parse_signed_family(line); });
  m.def("parse_plain_family", [](const std::string& line) { return ekr::parse_plain_family(line); });

  m.def("shadow_to", &ekr::shadow_to, "family"_a, "s"_a, "threads"_a = 1u);
  m.def("min_pairwise_intersection", &ekr::min_pairwise_intersection);
  m.def("katona_check", [](const ekr::PlainFamily& f, std::size_t t) {
    const auto r = ekr::katona_check(f, t);
    return py::dict("shadow_size"_a = r.shadow_size, "family_size"_a = r.family_size, "holds"_a = r.holds);
  }, "family"_a, "t"_a);

  py::class_<ekr::Partition>(m, "Partition")
      .def_property_readonly("a0", &ekr::Partition::a0)
      .def("block", &ekr::Partition::block, "i"_a);
  m.def("partition_family", &ekr::partition_family);
  m.def("match_to_shadow", [](const ekr::PlainFamily& f, std::size_t target) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& [x, y] : ekr::match_to_shadow(f, target).sigma) out.emplace_back(to_list(x), to_list(y));
    return out;
  }, "family"_a, "target_size"_a);

  py::class_<ekr::InjectionCertificate>(m, "InjectionCertificate")
      .def_readonly("params", &ekr::InjectionCertificate::params)
      .def_readonly("domain", &ekr::InjectionCertificate::domain)
      .def_readonly("mapping", &ekr::InjectionCertificate::mapping)
      .def_property_readonly("diagnostics", [](const ekr::InjectionCertificate& c) {
        const auto& d = c.diagnostics;
        return py::dict("a0"_a = d.a0, "a"_a = d.blocks, "b"_a = d.b, "images"_a = d.images);
      })
      .def("to_json", [](const ekr::InjectionCertificate& c) { return ekr::to_json(c).dump(); });
  m.def("assemble_injection", &ekr::assemble_injection, "family"_a, "threads"_a = 1u);
  m.def("verify_certificate", [](const ekr::InjectionCertificate& c) {
    return to_dict(ekr::verify_certificate(c));
  });
  m.def("check_proof_steps", [](const ekr::SignedFamily& f) { return to_dict(ekr::check_proof_steps(f)); });

  py::class_<ekr::SearchResult>(m, "SearchResult")
      .def_readonly("max_size", &ekr::SearchResult::max_size)
      .def_readonly("witness", &ekr::SearchResult::witness)
      .def_readonly("nodes_explored", &ekr::SearchResult::nodes_explored)
      .def_readonly("exhausted", &ekr::SearchResult::exhausted)
      .def("to_json", [](const ekr::SearchResult& r) { return ekr::to_json(r).dump(); });
  m.def("max_intersecting_exact", &ekr::max_intersecting_exact, "params"_a,
        "node_budget"_a = ekr::kDefaultNodeBudget, "cap"_a = ekr::kDefaultMemberCap);
  m.def("enumerate_maximal_intersecting", [](const ekr::Params& p, std::uint64_t cap) {
    auto e = ekr::enumerate_maximal_intersecting(p, cap);
    return py::make_tuple(e.families, e.complete);
  }, "params"_a, "cap"_a);
  m.def("random_maximal_intersecting", &ekr::random_maximal_intersecting, "params"_a, "seed"_a,
        "cap"_a = ekr::kDefaultMemberCap);
  m.def("is_maximal_intersecting", &ekr::is_maximal_intersecting, "family"_a,
        "cap"_a = ekr::kDefaultMemberCap);

  py::class_<ekr::BoundReport>(m, "BoundReport")
      .def_readonly("params", &ekr::BoundReport::params)
      .def_readonly("max_size", &ekr::BoundReport::max_size)
      .def_readonly("bound", &ekr::BoundReport::bound)
      .def_readonly("exhausted", &ekr::BoundReport::exhausted)
      .def_readonly("expected_regime", &ekr::BoundReport::expected_regime)
      .def_property_readonly("status", [](const ekr::BoundReport& r) { return std::string(ekr::to_string(r.status)); })
      .def("summary", &ekr::BoundReport::summary);
  m.def("verify_bound", &ekr::verify_bound, "params"_a, "node_budget"_a = ekr::kDefaultNodeBudget);
}
