#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eccspec/census.hpp"
#include "eccspec/families.hpp"
#include "eccspec/graph_io.hpp"
#include "eccspec/report.hpp"
#include "eccspec/spectra.hpp"
#include "eccspec/suites.hpp"

namespace py = pybind11;
using namespace eccspec;

namespace {

std::vector<std::string> to_strings(const std::vector<Integer>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

std::vector<std::vector<long>> matrix_rows(const IntMatrix& m) {
  std::vector<std::vector<long>> rows(m.size(), std::vector<long>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j).get_si();
  }
  return rows;
}

py::dict record_dict(const CensusRecord& r) {
  py::dict d;
  d["graph6"] = r.canon.graph6;
  d["n"] = r.n;
  d["diam"] = r.diam;
  d["v1"] = r.v1_size;
  d["m_minus1"] = r.mult_minus1;
  d["m_minus2"] = r.mult_minus2;
  d["m_zero"] = r.mult_zero;
  d["charpoly"] = to_strings(r.charpoly.coefficients());
  d["tags"] = r.family_tags;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<std::invalid_argument>(m, "EccspecError", PyExc_ValueError);

  m.def("resolve", [](const std::string& arg) { return graph6_encode(load_graph_argument(arg)); },
        "graph6 of a graph6 string, edge-list file or family id");
  m.def("family", [](const std::string& id) { return graph6_encode(build_family(parse_family_id(id))); });
  m.def("order", [](const std::string& arg) { return load_graph_argument(arg).order(); });
  m.def("ecc_matrix", [](const std::string& arg) { return matrix_rows(ecc_matrix(load_graph_argument(arg)).m); });
  m.def("charpoly", [](const std::string& arg) { return to_strings(acharpoly(load_graph_argument(arg)).coefficients()); },
        "ascending coefficients as decimal strings");
  m.def("multiplicity", [](const std::string& arg, const std::string& xi) {
    return multiplicity(load_graph_argument(arg), parse_rational(xi));
  });
  m.def("hl_index", [](const std::string& arg) {
    const Interval r = hl_index(load_graph_argument(arg));
    return std::pair<std::string, std::string>{r.lo.get_str(), r.hi.get_str()};
  });
  m.def("is_irreducible", [](const std::string& arg) { return is_irreducible(ecc_matrix(load_graph_argument(arg))); });
  m.def("census_count", [](int n, int jobs) { return shared_census().level(n, jobs).size(); }, py::arg("n"),
        py::arg("jobs") = 1);
  m.def("classify", [](int n, int jobs) {
    py::list out;
    for (const auto& r : classify(n, {}, jobs)) out.append(record_dict(r));
    return out;
  }, py::arg("n"), py::arg("jobs") = 1);
  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, std::vector<int> n_values, std::uint64_t seed, int jobs) {
    SuiteOptions o;
    o.n_values = std::move(n_values);
    o.seed = seed;
    o.jobs = jobs;
    VerificationReport r;
    {
      py::gil_scoped_release release;
      r = run_suite(name, o);
    }
    return report_to_json(r);
  }, py::arg("name"), py::arg("n_values") = std::vector<int>{}, py::arg("seed") = SuiteOptions{}.seed,
        py::arg("jobs") = 1, "report as a JSON string");
}
