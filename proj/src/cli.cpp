#include "rindlerh/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>

#include "rindlerh/field.hpp"
#include "rindlerh/grid.hpp"
#include "rindlerh/ionization.hpp"
#include "rindlerh/perturbation.hpp"
#include "rindlerh/units.hpp"

namespace rindlerh {

namespace {

using json = nlohmann::ordered_json;

struct CommonOpts {
  double epsilon = 0.0;
  double accel_si = -1.0;  // <0: unset
  std::string variant = "gravity";
  std::string mode = "effective";
  std::string dz_sign = "printed";
  int n_max = 30;
  double window = 4.0;
  int resolution = 256;
  std::string out;
  bool allow_nonperturbative = false;
};

AccelerationParam resolve_eps(const CommonOpts& o, const UnitContext& ctx) {
  if (o.accel_si >= 0.0) return eps_from_si(o.accel_si, ctx);
  if (o.epsilon < 0.0) throw std::domain_error("epsilon must be >= 0");
  return AccelerationParam{o.epsilon};
}

HamiltonianSpec resolve_spec(const CommonOpts& o) {
  HamiltonianSpec spec;
  spec.variant = (o.variant == "gravity") ? Variant::Gravity : Variant::Comoving;
  spec.mode = (o.mode == "effective") ? EvalMode::EffectiveDipole : EvalMode::FullQuadrature;
  spec.dz_sign = (o.dz_sign == "printed") ? DzSign::AsPrinted : DzSign::Cancelling;
  return spec;
}

void write_json(const json& doc, const std::string& prefix) {
  std::ofstream out(prefix + ".json");
  if (!out) throw std::runtime_error("cannot open " + prefix + ".json");
  out << doc.dump(2) << '\n';
}

json grid_metadata_json(const DensityGrid& grid, const std::vector<std::string>& args) {
  json meta;
  meta["command"] = args;
  meta["state"] = grid.meta.state;
  if (!grid.meta.variant.empty()) meta["variant"] = grid.meta.variant;
  if (!grid.meta.mode.empty()) meta["mode"] = grid.meta.mode;
  if (!grid.meta.dz_sign.empty()) meta["dz_sign"] = grid.meta.dz_sign;
  meta["epsilon"] = grid.meta.epsilon;
  meta["normalization"] = grid.meta.normalization;
  meta["allow_nonperturbative"] = grid.meta.allow_nonperturbative;
  meta["window_a0"] = grid.spec.window_a0;
  meta["resolution"] = grid.spec.resolution;
  meta["axes"] = grid.meta.axes;
  meta["proton_at_origin"] = true;
  if (grid.meta.state == "field") {
    meta["charge"] = grid.meta.charge;
    meta["missing_samples"] = grid.meta.missing_samples;
  } else {
    meta["z_centroid_a0"] = grid_z_centroid(grid);
    meta["volume_integral"] = grid_volume_integral(grid);
  }
  return meta;
}

void add_accel_flags(CLI::App* cmd, CommonOpts& o) {
  auto* e = cmd->add_option("--epsilon", o.epsilon, "dimensionless eps = a*a0");
  cmd->add_option("--accel-si", o.accel_si, "acceleration in m/s^2 (overrides --epsilon)")
      ->excludes(e);
}

void add_spec_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--variant", o.variant, "perturbation variant")
      ->check(CLI::IsMember({"gravity", "comoving"}));
  cmd->add_option("--mode", o.mode, "evaluation mode")
      ->check(CLI::IsMember({"effective", "full"}));
  cmd->add_option("--dz-sign", o.dz_sign, "sign of the derivative term in full mode")
      ->check(CLI::IsMember({"printed", "cancelling"}));
}

int dispatch(const std::vector<std::string>& args) {
  const UnitContext ctx;
  CLI::App app{"Hydrogen eigenstates, perturbative corrections, splittings and "
               "ionization thresholds for a uniformly accelerated atom"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file presetting any flag");

  CommonOpts o;
  std::string branch = "preferred";
  double z_min = -30.0, z_max = 10.0;
  double charge = 1.0;
  double v0_eV = 13.6057, w_a0 = 0.5;

  auto* constants = app.add_subcommand("constants", "dump physical constants as JSON");
  constants->add_option("--out", o.out, "output prefix");

  auto* contour = app.add_subcommand("field-contour",
                                     "potential map of the accelerated charge");
  add_accel_flags(contour, o);
  contour->add_option("--charge", charge, "source charge in proton units");
  contour->add_option("--window", o.window, "half-width of the map in a0")
      ->default_val(2.0);
  contour->add_option("--resolution", o.resolution, "samples per axis");
  contour->add_option("--out", o.out, "output prefix");

  auto* profile = app.add_subcommand("potential-profile",
                                     "on-axis effective potential and barrier");
  add_accel_flags(profile, o);
  profile->add_option("--z-min", z_min, "window start in a0 (negative)");
  profile->add_option("--z-max", z_max, "window end in a0");
  profile->add_option("--resolution", o.resolution, "number of samples")
      ->default_val(512);
  profile->add_option("--out", o.out, "output prefix");

  auto* ground = app.add_subcommand("ground-state",
                                    "perturbed ground-state density grid");
  add_accel_flags(ground, o);
  add_spec_flags(ground, o);
  ground->add_option("--n-max", o.n_max, "expansion truncation");
  ground->add_option("--window", o.window, "half-width of the grid in a0");
  ground->add_option("--resolution", o.resolution, "samples per axis");
  ground->add_option("--out", o.out, "output prefix");
  ground->add_flag("--allow-nonperturbative", o.allow_nonperturbative,
                   "accept eps outside the perturbative regime");

  auto* excited = app.add_subcommand("excited-state",
                                     "Stark-mixed n=2 density grid");
  add_accel_flags(excited, o);
  add_spec_flags(excited, o);
  excited->add_option("--branch", branch, "which mixed state to render")
      ->check(CLI::IsMember({"plus", "minus", "preferred"}));
  excited->add_option("--window", o.window, "half-width of the grid in a0")
      ->default_val(8.0);
  excited->add_option("--resolution", o.resolution, "samples per axis");
  excited->add_option("--out", o.out, "output prefix");

  auto* coeffs = app.add_subcommand("coefficients",
                                    "first-order expansion coefficients");
  add_accel_flags(coeffs, o);
  add_spec_flags(coeffs, o);
  coeffs->add_option("--n-max", o.n_max, "expansion truncation");
  coeffs->add_option("--out", o.out, "output prefix");

  auto* split = app.add_subcommand("splitting", "degenerate n=2 block and splittings");
  add_accel_flags(split, o);
  add_spec_flags(split, o);
  split->add_option("--out", o.out, "output prefix");

  auto* ion = app.add_subcommand("ionization", "field-ionization report");
  ion->add_option("--accel-si", o.accel_si,
                  "acceleration in m/s^2 (default: the critical acceleration)");
  ion->add_option("--v0-eV", v0_eV, "binding energy");
  ion->add_option("--w-a0", w_a0, "half-width of the well in a0");
  ion->add_option("--out", o.out, "output prefix");

  std::vector<const char*> argv;
  argv.push_back("rindlerh");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  json doc;
  doc["command"] = args;
  std::string prefix = o.out;

  if (constants->parsed()) {
    if (prefix.empty()) prefix = "constants";
    doc["alpha"] = ctx.alpha;
    doc["mc2_eV"] = ctx.mc2_eV;
    doc["a0_m"] = ctx.a0_m;
    doc["hartree_eV"] = ctx.hartree_eV;
    doc["c_si"] = ctx.c_si;
    doc["hbar_eVs"] = ctx.hbar_eVs;
    std::cout << doc.dump(2) << '\n';
    write_json(doc, prefix);
    return 0;
  }

  if (contour->parsed()) {
    if (prefix.empty()) prefix = "field_contour";
    const FieldParams fp{resolve_eps(o, ctx), charge};
    GridSpec grid{o.window, o.resolution};
    const DensityGrid map = render_field_contour(fp, grid);
    write_grid_csv(map, prefix + ".csv");
    write_json(grid_metadata_json(map, args), prefix);
    std::cout << "field-contour: " << prefix << ".csv (" << o.resolution << "x"
              << o.resolution << "), missing samples " << map.meta.missing_samples
              << '\n';
    return 0;
  }

  if (profile->parsed()) {
    if (prefix.empty()) prefix = "potential_profile";
    const auto eps = resolve_eps(o, ctx);
    const auto prof = axial_effective_potential(eps, ctx, z_min, z_max, o.resolution);
    write_profile_csv(prof, prefix + ".csv");
    doc["epsilon"] = prof.epsilon;
    doc["z_star_a0"] = prof.z_star_a0 ? json(*prof.z_star_a0) : json(nullptr);
    doc["v_max_eV"] = prof.v_max_eV ? json(*prof.v_max_eV) : json(nullptr);
    doc["bound_possible"] = prof.bound_possible;
    doc["rest_offset_eV"] = prof.rest_offset_eV;
    write_json(doc, prefix);
    std::cout << "potential-profile: " << prefix << ".csv, bound_possible="
              << (prof.bound_possible ? "true" : "false") << '\n';
    return 0;
  }

  if (ground->parsed()) {
    if (prefix.empty()) prefix = "ground_state";
    const auto eps = resolve_eps(o, ctx);
    auto expansion = expansion_coefficients(QuantumNumbers{1, 0, 0},
                                            resolve_spec(o), o.n_max, ctx, eps);
    GridSpec grid{o.window, o.resolution};
    const DensityGrid density =
        render_ground_density(expansion, grid, o.allow_nonperturbative);
    write_grid_csv(density, prefix + ".csv");
    write_json(grid_metadata_json(density, args), prefix);
    std::cout << "ground-state: " << prefix << ".csv, z-centroid "
              << grid_z_centroid(density) << " a0\n";
    return 0;
  }

  if (excited->parsed()) {
    if (prefix.empty()) prefix = "excited_state";
    const auto eps = resolve_eps(o, ctx);
    const auto spec = resolve_spec(o);
    if (branch == "preferred")
      branch = (spec.variant == Variant::Gravity) ? "plus" : "minus";
    const auto b = (branch == "plus") ? ExcitedBranch::Plus : ExcitedBranch::Minus;
    GridSpec grid{o.window, o.resolution};
    DensityGrid density = render_excited_density(b, grid);
    density.meta.variant = o.variant;
    density.meta.mode = o.mode;
    density.meta.epsilon = eps.epsilon;
    write_grid_csv(density, prefix + ".csv");
    write_json(grid_metadata_json(density, args), prefix);
    std::cout << "excited-state (" << branch << "): " << prefix
              << ".csv, z-centroid " << grid_z_centroid(density) << " a0\n";
    return 0;
  }

  if (coeffs->parsed()) {
    if (prefix.empty()) prefix = "coefficients";
    const auto eps = resolve_eps(o, ctx);
    const auto spec = resolve_spec(o);
    const auto expansion = expansion_coefficients(QuantumNumbers{1, 0, 0}, spec,
                                                  o.n_max, ctx, eps);
    doc["variant"] = o.variant;
    doc["mode"] = o.mode;
    doc["dz_sign"] = o.dz_sign;
    doc["n_max"] = o.n_max;
    doc["epsilon"] = eps.epsilon;
    doc["converged"] = expansion.converged;
    json clist = json::array();
    for (const auto& [n, c] : expansion.coefficients) clist.push_back({n, c});
    doc["coefficients"] = clist;
    const auto pairs = diagonalize_block(degenerate_block(2, spec, ctx));
    json shifts;
    shifts["ground"] =
        first_order_energy_shift_eV_per_eps(QuantumNumbers{1, 0, 0}, spec, ctx);
    for (const auto& p : pairs)
      if (p.label == "plus" || p.label == "minus")
        shifts["excited_" + p.label] = p.shift_eV_per_eps;
    doc["energy_shifts_eV_per_eps"] = shifts;
    std::cout << doc.dump(2) << '\n';
    write_json(doc, prefix);
    return 0;
  }

  if (split->parsed()) {
    if (prefix.empty()) prefix = "splitting";
    const auto eps = resolve_eps(o, ctx);
    const auto spec = resolve_spec(o);
    const auto block = degenerate_block(2, spec, ctx);
    const auto pairs = diagonalize_block(block);
    doc["variant"] = o.variant;
    doc["mode"] = o.mode;
    doc["dz_sign"] = o.dz_sign;
    doc["epsilon"] = eps.epsilon;
    doc["e2_eV"] = eigen_energy_eV(2, ctx);
    doc["basis"] = {"200", "210", "211", "21-1"};
    json matrix = json::array();
    for (const auto& row : block.matrix_eV_per_eps)
      matrix.push_back({row[0], row[1], row[2], row[3]});
    doc["matrix_eV_per_eps"] = matrix;
    json eig = json::array();
    for (const auto& p : pairs) {
      json e;
      e["label"] = p.label;
      e["shift_eV_per_eps"] = p.shift_eV_per_eps;
      e["energy_eV"] = eigen_energy_eV(2, ctx) + p.shift_eV_per_eps * eps.epsilon;
      e["coefficients"] = {p.coefficients[0], p.coefficients[1], p.coefficients[2],
                           p.coefficients[3]};
      eig.push_back(e);
    }
    doc["eigenpairs"] = eig;
    doc["lower_state"] = pairs.front().label;
    std::cout << doc.dump(2) << '\n';
    write_json(doc, prefix);
    return 0;
  }

  if (ion->parsed()) {
    if (prefix.empty()) prefix = "ionization";
    const IonizationInputs in{v0_eV, w_a0};
    const double a_si =
        (o.accel_si >= 0.0) ? o.accel_si : critical_acceleration_si(in, ctx);
    const auto report = ionization_report(a_si, in, ctx);
    doc["a_si"] = report.a_si;
    doc["gamma"] = report.gamma;
    doc["tau_s"] = report.tau.effectively_stable ? json("inf") : json(report.tau.seconds);
    doc["effectively_stable"] = report.tau.effectively_stable;
    doc["a_crit_si"] = report.a_crit_si;
    doc["barrier_suppression_si"] = report.barrier_suppression_si;
    doc["v0_eV"] = in.v0_eV;
    doc["w_a0"] = in.w_a0;
    std::cout << doc.dump(2) << '\n';
    write_json(doc, prefix);
    return 0;
  }

  return 64;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  try {
    return dispatch(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace rindlerh
