#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rindlerh/cli.hpp"
#include "rindlerh/field.hpp"
#include "rindlerh/grid.hpp"
#include "rindlerh/ionization.hpp"
#include "rindlerh/perturbation.hpp"
#include "rindlerh/units.hpp"

namespace py = pybind11;
using namespace rindlerh;

namespace {

HamiltonianSpec make_spec(const std::string& variant, const std::string& mode,
                          const std::string& dz_sign) {
  HamiltonianSpec spec;
  if (variant == "gravity")
    spec.variant = Variant::Gravity;
  else if (variant == "comoving")
    spec.variant = Variant::Comoving;
  else
    throw std::invalid_argument("variant must be 'gravity' or 'comoving'");
  if (mode == "effective")
    spec.mode = EvalMode::EffectiveDipole;
  else if (mode == "full")
    spec.mode = EvalMode::FullQuadrature;
  else
    throw std::invalid_argument("mode must be 'effective' or 'full'");
  if (dz_sign == "printed")
    spec.dz_sign = DzSign::AsPrinted;
  else if (dz_sign == "cancelling")
    spec.dz_sign = DzSign::Cancelling;
  else
    throw std::invalid_argument("dz_sign must be 'printed' or 'cancelling'");
  return spec;
}

QuantumNumbers make_qn(std::tuple<int, int, int> nlm) {
  return QuantumNumbers{std::get<0>(nlm), std::get<1>(nlm), std::get<2>(nlm)};
}

py::array_t<double> grid_to_array(const DensityGrid& grid) {
  const int n = grid.spec.resolution;
  py::array_t<double> arr({n, n});
  std::copy(grid.values.begin(), grid.values.end(), arr.mutable_data());
  return arr;
}

py::dict grid_meta(const DensityGrid& grid) {
  py::dict d;
  d["state"] = grid.meta.state;
  d["variant"] = grid.meta.variant;
  d["epsilon"] = grid.meta.epsilon;
  d["normalization"] = grid.meta.normalization;
  d["window_a0"] = grid.spec.window_a0;
  d["resolution"] = grid.spec.resolution;
  d["missing_samples"] = grid.meta.missing_samples;
  d["z_centroid_a0"] =
      grid.meta.state == "field" ? py::object(py::none()) : py::cast(grid_z_centroid(grid));
  return d;
}

}  // namespace

PYBIND11_MODULE(_rindlerh, m) {
  m.doc() = "Hydrogen atom in Rindler space: eigenstates, perturbative "
            "corrections, splittings and ionization thresholds";

  m.def("constants", [] {
    const UnitContext ctx;
    py::dict d;
    d["alpha"] = ctx.alpha;
    d["mc2_eV"] = ctx.mc2_eV;
    d["a0_m"] = ctx.a0_m;
    d["hartree_eV"] = ctx.hartree_eV;
    d["c_si"] = ctx.c_si;
    d["hbar_eVs"] = ctx.hbar_eVs;
    return d;
  });

  m.def("eps_from_si", [](double a_si) { return eps_from_si(a_si).epsilon; },
        py::arg("a_si"));
  m.def("si_from_eps", [](double eps) { return si_from_eps(AccelerationParam{eps}); },
        py::arg("eps"));
  m.def("energy_convert",
        [](double value, const std::string& from, const std::string& to) {
          return energy_convert(value, parse_energy_unit(from), parse_energy_unit(to));
        },
        py::arg("value"), py::arg("from_unit"), py::arg("to_unit"));

  m.def("assoc_laguerre", &assoc_laguerre, py::arg("k"), py::arg("j"), py::arg("x"));
  m.def("radial_wavefunction", &radial_wavefunction, py::arg("n"), py::arg("l"),
        py::arg("r"));
  m.def("spherical_harmonic", &spherical_harmonic, py::arg("l"), py::arg("m"),
        py::arg("theta"), py::arg("phi"));
  m.def("eigen_energy_eV", [](int n) { return eigen_energy_eV(n); }, py::arg("n"));
  m.def("evaluate_basis_state",
        [](std::tuple<int, int, int> nlm, double x, double y, double z) {
          return evaluate_basis_state(make_qn(nlm), Point3{x, y, z});
        },
        py::arg("nlm"), py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("z_matrix_element",
        [](std::tuple<int, int, int> bra, std::tuple<int, int, int> ket) {
          return z_matrix_element(make_qn(bra), make_qn(ket));
        },
        py::arg("bra"), py::arg("ket"));

  m.def("matrix_element_eV_per_eps",
        [](const std::string& variant, const std::string& mode,
           const std::string& dz_sign, std::tuple<int, int, int> bra,
           std::tuple<int, int, int> ket) {
          return matrix_element_eV_per_eps(make_spec(variant, mode, dz_sign),
                                           make_qn(bra), make_qn(ket));
        },
        py::arg("variant"), py::arg("mode"), py::arg("dz_sign"), py::arg("bra"),
        py::arg("ket"));

  m.def("expansion_coefficients",
        [](const std::string& variant, const std::string& mode,
           const std::string& dz_sign, int n_max) {
          const auto exp = expansion_coefficients(
              QuantumNumbers{1, 0, 0}, make_spec(variant, mode, dz_sign), n_max);
          return exp.coefficients;
        },
        py::arg("variant"), py::arg("mode") = "effective",
        py::arg("dz_sign") = "printed", py::arg("n_max") = 30);

  m.def("splitting",
        [](const std::string& variant, const std::string& mode,
           const std::string& dz_sign) {
          const auto block =
              degenerate_block(2, make_spec(variant, mode, dz_sign));
          const auto pairs = diagonalize_block(block);
          py::dict d;
          py::list matrix, eig;
          for (const auto& row : block.matrix_eV_per_eps)
            matrix.append(py::make_tuple(row[0], row[1], row[2], row[3]));
          for (const auto& p : pairs) {
            py::dict e;
            e["label"] = p.label;
            e["shift_eV_per_eps"] = p.shift_eV_per_eps;
            e["coefficients"] = p.coefficients;
            eig.append(e);
          }
          d["basis"] = py::make_tuple("200", "210", "211", "21-1");
          d["matrix_eV_per_eps"] = matrix;
          d["eigenpairs"] = eig;
          d["lower_state"] = pairs.front().label;
          return d;
        },
        py::arg("variant"), py::arg("mode") = "effective",
        py::arg("dz_sign") = "printed");

  m.def("ionization_report",
        [](double a_si, double v0_eV, double w_a0) {
          const IonizationInputs in{v0_eV, w_a0};
          const auto r = ionization_report(a_si, in);
          py::dict d;
          d["a_si"] = r.a_si;
          d["gamma"] = r.gamma;
          d["tau_s"] = r.tau.seconds;
          d["effectively_stable"] = r.tau.effectively_stable;
          d["a_crit_si"] = r.a_crit_si;
          d["barrier_suppression_si"] = r.barrier_suppression_si;
          return d;
        },
        py::arg("a_si"), py::arg("v0_eV") = 13.6057, py::arg("w_a0") = 0.5);
  m.def("critical_acceleration_si", [] { return critical_acceleration_si(); });

  m.def("whittaker_at",
        [](double x, double y, double z, double eps, double q) {
          return whittaker_at(Point3{x, y, z}, FieldParams{AccelerationParam{eps}, q});
        },
        py::arg("x"), py::arg("y"), py::arg("z"), py::arg("eps"), py::arg("q") = 1.0);

  m.def("axial_profile",
        [](double eps, double z_min, double z_max, int resolution) {
          const auto p = axial_effective_potential(AccelerationParam{eps}, {},
                                                   z_min, z_max, resolution);
          py::dict d;
          d["epsilon"] = p.epsilon;
          d["z_a0"] = p.z_samples_a0;
          d["V_eV"] = p.v_samples_eV;
          d["z_star_a0"] = p.z_star_a0 ? py::object(py::cast(*p.z_star_a0))
                                       : py::object(py::none());
          d["v_max_eV"] = p.v_max_eV ? py::object(py::cast(*p.v_max_eV))
                                     : py::object(py::none());
          d["bound_possible"] = p.bound_possible;
          return d;
        },
        py::arg("eps"), py::arg("z_min") = -30.0, py::arg("z_max") = 10.0,
        py::arg("resolution") = 512);

  m.def("ground_density",
        [](const std::string& variant, double eps, int n_max, double window,
           int resolution, const std::string& mode, const std::string& dz_sign,
           bool allow_nonperturbative) {
          const auto exp =
              expansion_coefficients(QuantumNumbers{1, 0, 0},
                                     make_spec(variant, mode, dz_sign), n_max, {},
                                     AccelerationParam{eps});
          const auto grid = render_ground_density(
              exp, GridSpec{window, resolution}, allow_nonperturbative);
          return py::make_tuple(grid_to_array(grid), grid_meta(grid));
        },
        py::arg("variant"), py::arg("eps"), py::arg("n_max") = 30,
        py::arg("window") = 4.0, py::arg("resolution") = 256,
        py::arg("mode") = "effective", py::arg("dz_sign") = "printed",
        py::arg("allow_nonperturbative") = false);

  m.def("excited_density",
        [](const std::string& branch, double window, int resolution) {
          const auto b = branch == "plus" ? ExcitedBranch::Plus : ExcitedBranch::Minus;
          const auto grid = render_excited_density(b, GridSpec{window, resolution});
          return py::make_tuple(grid_to_array(grid), grid_meta(grid));
        },
        py::arg("branch"), py::arg("window") = 8.0, py::arg("resolution") = 256);

  m.def("field_contour",
        [](double eps, double q, double window, int resolution) {
          const auto grid = render_field_contour(
              FieldParams{AccelerationParam{eps}, q}, GridSpec{window, resolution});
          return py::make_tuple(grid_to_array(grid), grid_meta(grid));
        },
        py::arg("eps"), py::arg("q") = 1.0, py::arg("window") = 2.0,
        py::arg("resolution") = 256);

  m.def("run_cli", &run_cli, py::arg("args"));
}
