#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidperm/census.hpp"
#include "braidperm/cohomology.hpp"
#include "braidperm/commutator.hpp"
#include "braidperm/io.hpp"
#include "braidperm/retraction.hpp"
#include "braidperm/suites.hpp"

namespace py = pybind11;
using namespace braidperm;

namespace {

py::dict classification_dict(const HomClassification& c) {
  py::dict d;
  d["cyclic"] = c.is_cyclic;
  d["abelian"] = c.is_abelian;
  d["transitive"] = c.is_transitive;
  d["primitive"] = c.is_primitive;
  d["even"] = c.is_even;
  d["ord_alpha"] = c.ord_alpha;
  d["ord_beta"] = c.ord_beta;
  d["fixed_points"] = c.fixed_point_count;
  d["sigma1_type"] = c.sigma1_type.parts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Homomorphisms of braid groups into symmetric groups";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>())
      .def_static("parse", &Permutation::parse, py::arg("text"), py::arg("n") = 0)
      .def_static("identity", &Permutation::identity)
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images", &Permutation::images)
      .def("__call__", &Permutation::operator())
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("inverse", &Permutation::inverse)
      .def("pow", &Permutation::pow)
      .def("conjugate_by", &Permutation::conjugate_by)
      .def("cycles", &Permutation::cycles)
      .def("order", &Permutation::order)
      .def("is_even", &Permutation::is_even)
      .def("cycle_type", [](const Permutation& p) { return cycle_type(p).parts; })
      .def("__str__", &Permutation::to_string)
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + p.to_string() + "')"; });

  py::class_<BraidHom>(m, "BraidHom")
      .def(py::init<int, int, std::vector<Permutation>>())
      .def_property_readonly("k", &BraidHom::k)
      .def_property_readonly("n", &BraidHom::n)
      .def_property_readonly("images", &BraidHom::images)
      .def("sigma", &BraidHom::sigma)
      .def("alpha", &BraidHom::alpha)
      .def("beta", &BraidHom::beta)
      .def("image", [](const BraidHom& h, const std::vector<int>& letters) { return h.image(BraidWord(h.k(), letters)); })
      .def("conjugate_by", &BraidHom::conjugate_by)
      .def(py::self == py::self)
      .def("to_json", [](const BraidHom& h) { return hom_to_json(h).dump(); })
      .def("__str__", &BraidHom::to_string);

  m.def("hom_from_json", [](const std::string& s) { return hom_from_json(Json::parse(s)); });
  m.def("named_hom", &named_hom, py::arg("name"), py::arg("params") = std::map<std::string, int>{});
  m.def("catalog_names", &catalog_names);
  m.def("is_valid", &is_valid);
  m.def("classify", [](const BraidHom& h) { return classification_dict(classify(h)); });
  m.def("hom_conjugacy", &hom_conjugacy);

  m.def("perm_image", [](int k, const std::vector<int>& w) { return perm_image(BraidWord(k, w)); });
  m.def("exponent_sum", [](int k, const std::vector<int>& w) { return exponent_sum(BraidWord(k, w)); });
  m.def("words_equal", [](int k, const std::vector<int>& u, const std::vector<int>& v) {
    return words_equal(BraidWord(k, u), BraidWord(k, v));
  });

  m.def(
      "census",
      [](int k, int n, bool non_cyclic, bool transitive, bool primitive, bool even, bool dedup, int workers) {
        CensusQuery q{k, n, non_cyclic, transitive, primitive, even, dedup, workers};
        std::vector<std::pair<BraidHom, py::dict>> out;
        {
          std::vector<CensusRecord> recs;
          {
            py::gil_scoped_release release;
            recs = enumerate(q);
          }
          for (const auto& r : recs) out.emplace_back(r.representative, classification_dict(r.classification));
        }
        return out;
      },
      py::arg("k"), py::arg("n"), py::arg("non_cyclic") = false, py::arg("transitive") = false,
      py::arg("primitive") = false, py::arg("even") = false, py::arg("dedup") = true, py::arg("workers") = 1);

  m.def(
      "h1",
      [](const std::string& omega, const std::map<std::string, long long>& params) {
        return h1(family_action(omega, params)).invariants.factors;
      },
      py::arg("omega"), py::arg("params"));
  m.def("h1_of", [](const BraidHom& omega, long long modulus) { return h1(TwistedAction(omega, modulus)).invariants.factors; });
  m.def("build_phi_xy", &build_phi_xy);

  m.def("retraction", [](const BraidHom& h, int r) {
    const auto nh = normalize(h, r);
    py::dict d;
    d["t"] = nh.t;
    d["omega"] = omega(nh);
    d["omega_star"] = omega_star(nh);
    d["phi_sigma"] = phi_sigma(nh);
    d["g_relations_clean"] = g_relations_check(nh).clean();
    return d;
  });

  m.def(
      "census_bprime",
      [](int k, int workers) {
        std::vector<BPrimeRecord> recs;
        {
          py::gil_scoped_release release;
          recs = census_bprime(k, workers);
        }
        std::vector<std::string> out;
        for (const auto& r : recs) out.push_back(bprime_record_to_json(r).dump());
        return out;
      },
      py::arg("k"), py::arg("workers") = 1);

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, int workers) {
        std::vector<std::tuple<std::string, std::string, bool, std::string>> out;
        std::vector<SuiteResult> results;
        {
          py::gil_scoped_release release;
          results = run_suite(name, workers);
        }
        for (const auto& s : results)
          for (const auto& c : s.checks) out.emplace_back(s.suite, c.name, c.ok, c.detail);
        return out;
      },
      py::arg("name"), py::arg("workers") = 1);
}
