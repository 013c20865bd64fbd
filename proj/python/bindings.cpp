#include <pybind11/pybind11.h>

#include "modrep/commands.hpp"
#include "modrep/tower.hpp"

namespace py = pybind11;
using modrep::GroupSpec;
using modrep::Json;

namespace {

// the binding layer speaks JSON strings; the python package turns them into
// dicts so pybind11/stl conversions stay out of the core
std::string chartable(const std::string& spec_json) {
  GroupSpec spec = GroupSpec::parse(Json::parse(spec_json));
  return modrep::payload_chartable(spec).dump();
}

std::string brauertable(const std::string& spec_json, std::int64_t p,
                        int field_degree, std::uint64_t seed) {
  GroupSpec spec = GroupSpec::parse(Json::parse(spec_json));
  return modrep::payload_brauertable(spec, p, field_degree, seed).dump();
}

std::string decomp(const std::string& spec_json, std::int64_t p,
                   int field_degree, std::uint64_t seed) {
  GroupSpec spec = GroupSpec::parse(Json::parse(spec_json));
  return modrep::payload_decomp(spec, p, field_degree, seed).dump();
}

std::string cartan(const std::string& spec_json, std::int64_t p,
                   int field_degree, std::uint64_t seed) {
  GroupSpec spec = GroupSpec::parse(Json::parse(spec_json));
  return modrep::payload_cartan(spec, p, field_degree, seed).dump();
}

std::string blocks(const std::string& spec_json, std::int64_t p,
                   int field_degree, std::uint64_t seed) {
  GroupSpec spec = GroupSpec::parse(Json::parse(spec_json));
  return modrep::payload_blocks(spec, p, field_degree, seed).dump();
}

std::string tower(std::int64_t p, int depth, int n_max, std::uint64_t seed) {
  return modrep::payload_tower(p, depth, n_max, seed).dump();
}

std::string sl2_closed_form_json(int n) {
  modrep::ClosedFormResult cf = modrep::sl2_closed_form(n);
  return Json{{"cartan", modrep::int_matrix_to_json(cf.cartan)},
              {"determinant", modrep::bigint_to_json(cf.determinant)}}
      .dump();
}

std::string verify_paper_example(std::uint64_t seed) {
  bool all_pass = false;
  return modrep::payload_verify_paper_example(seed, std::nullopt, all_pass)
      .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact modular representation theory of finite matrix groups";
  m.attr("__version__") = modrep::kArtifactVersion;

  m.def("chartable_json", &chartable, py::arg("spec_json"),
        "Ordinary character table (JSON in, JSON out).");
  m.def("brauertable_json", &brauertable, py::arg("spec_json"), py::arg("p"),
        py::arg("field_degree") = 1, py::arg("seed") = 0,
        "Brauer character table.");
  m.def("decomp_json", &decomp, py::arg("spec_json"), py::arg("p"),
        py::arg("field_degree") = 1, py::arg("seed") = 0,
        "Decomposition matrix.");
  m.def("cartan_json", &cartan, py::arg("spec_json"), py::arg("p"),
        py::arg("field_degree") = 1, py::arg("seed") = 0,
        "Decomposition and Cartan matrices with blocks.");
  m.def("blocks_json", &blocks, py::arg("spec_json"), py::arg("p"),
        py::arg("field_degree") = 1, py::arg("seed") = 0, "Block partition.");
  m.def("tower_json", &tower, py::arg("p"), py::arg("depth") = 2,
        py::arg("n_max") = 3, py::arg("seed") = 0,
        "Congruence tower: C1, B and the Cartan recursion.");
  m.def("sl2_closed_form_json", &sl2_closed_form_json, py::arg("n"),
        "Closed-form Cartan matrix of SL2(Z/3^n) and its determinant.");
  m.def("verify_paper_example_json", &verify_paper_example, py::arg("seed") = 0,
        "Recompute the worked example and compare every matrix.");
}
