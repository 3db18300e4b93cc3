#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "loqs/fock.hpp"
#include "loqs/matrix.hpp"
#include "loqs/metrology.hpp"
#include "loqs/netlib.hpp"
#include "loqs/permanent.hpp"
#include "loqs/variants.hpp"

namespace py = pybind11;
using loqs::Complex;
using loqs::Matrix;
using loqs::UnitaryMatrix;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Passive linear-optical network simulation core";

  // permanents
  m.def("permanent", [](const Matrix& a) { return loqs::perm::permanent_fast(a); },
        py::arg("matrix"));
  m.def("permanent_definitional",
        [](const Matrix& a) { return loqs::perm::permanent_definitional(a); });
  m.def("permanent_laplace",
        [](const Matrix& a) { return loqs::perm::permanent_laplace(a); });

  // network constructors
  m.def("qft_matrix",
        [](int n) { return loqs::net::qft_matrix(n).mat(); }, py::arg("n"));
  m.def("haar_unitary",
        [](int n, unsigned long long seed) {
          std::mt19937_64 rng(seed);
          return loqs::net::haar_unitary(n, rng).mat();
        },
        py::arg("n"), py::arg("seed"));
  m.def("haar_orthogonal",
        [](int n, unsigned long long seed) {
          std::mt19937_64 rng(seed);
          return loqs::net::haar_orthogonal(n, rng).mat();
        },
        py::arg("n"), py::arg("seed"));
  m.def("embed_su_in_so",
        [](const Matrix& u) {
          return loqs::net::embed_su_in_so(UnitaryMatrix(u)).mat();
        },
        py::arg("u"));
  m.def("unitarity_residual", &loqs::unitarity_residual);

  py::class_<loqs::net::BeamsplitterElement>(m, "BeamsplitterElement")
      .def(py::init<>())
      .def_readwrite("mode_p", &loqs::net::BeamsplitterElement::mode_p)
      .def_readwrite("mode_q", &loqs::net::BeamsplitterElement::mode_q)
      .def_readwrite("eta", &loqs::net::BeamsplitterElement::eta)
      .def_readwrite("tau", &loqs::net::BeamsplitterElement::tau);

  py::class_<loqs::net::ReckDecomposition>(m, "ReckDecomposition")
      .def_readonly("dimension", &loqs::net::ReckDecomposition::dimension)
      .def_readonly("elements", &loqs::net::ReckDecomposition::elements)
      .def_readonly("output_phases",
                    &loqs::net::ReckDecomposition::output_phases);

  m.def("reck_decompose",
        [](const Matrix& u) { return loqs::net::reck_decompose(UnitaryMatrix(u)); },
        py::arg("u"));
  m.def("recompose",
        [](const loqs::net::ReckDecomposition& d) {
          return loqs::net::recompose(d).mat();
        },
        py::arg("decomposition"));

  // fock
  m.def("amplitude",
        [](const Matrix& u, const std::vector<int>& input,
           const std::vector<int>& output) {
          return loqs::fock::amplitude(UnitaryMatrix(u), input, output);
        },
        py::arg("u"), py::arg("input"), py::arg("output"));
  m.def("output_distribution",
        [](const Matrix& u, const std::vector<int>& input) {
          const auto d = loqs::fock::output_distribution(UnitaryMatrix(u), input);
          return d.entries;
        },
        py::arg("u"), py::arg("input"));
  m.def("sample",
        [](const Matrix& u, const std::vector<int>& input, int count,
           unsigned long long seed) {
          const auto d = loqs::fock::output_distribution(UnitaryMatrix(u), input);
          std::mt19937_64 rng(seed);
          return loqs::fock::sample(d, count, rng);
        },
        py::arg("u"), py::arg("input"), py::arg("count"), py::arg("seed"));
  m.def("enumerate_configurations", &loqs::fock::enumerate_configurations,
        py::arg("modes"), py::arg("photons"));
  m.def("configuration_count", &loqs::fock::configuration_count);

  // metrology
  m.def("mordor_unitary",
        [](int n, double phi) {
          return loqs::metro::mordor_unitary_product(n, phi).mat();
        },
        py::arg("n"), py::arg("phi"));
  m.def("qufti_unitary",
        [](int n, double phi) { return loqs::metro::qufti_unitary(n, phi).mat(); },
        py::arg("n"), py::arg("phi"));
  m.def("mordor_coincidence", &loqs::metro::mordor_coincidence);
  m.def("mordor_delta_phi_small_angle",
        &loqs::metro::mordor_delta_phi_small_angle);
  m.def("qufti_delta_phi", &loqs::metro::qufti_delta_phi);
  m.def("efficiency", &loqs::metro::efficiency);

  // variants
  m.def("coherent_coefficients", &loqs::variants::coherent_coefficients,
        py::arg("alpha"), py::arg("cutoff"));
  m.def("squeezed_vacuum_coefficients",
        &loqs::variants::squeezed_vacuum_coefficients, py::arg("r"),
        py::arg("theta"), py::arg("cutoff"));
  m.def("displace_through_network",
        [](const Matrix& u, const std::vector<Complex>& alphas) {
          return loqs::variants::displace_through_network(UnitaryMatrix(u),
                                                          alphas);
        },
        py::arg("u"), py::arg("alphas"));
  m.def("pacs_postselection", &loqs::variants::pacs_postselection,
        py::arg("n"), py::arg("alpha_sq"), py::arg("i"));
  m.def("spacs_wigner", &loqs::variants::spacs_wigner, py::arg("alpha"),
        py::arg("z"));
  m.def("passv_normalization", &loqs::variants::passv_normalization,
        py::arg("n"), py::arg("r"));
  m.def("passv_parity_distribution",
        [](const Matrix& o, int n, double r, double theta, int cutoff) {
          return loqs::variants::passv_parity_distribution(UnitaryMatrix(o), n,
                                                           r, theta, cutoff);
        },
        py::arg("o"), py::arg("n"), py::arg("r"), py::arg("theta"),
        py::arg("cutoff"));
}
