#include "slr/scenario.hpp"

#include <cmath>
#include <set>

#include "slr/constants.hpp"
#include "slr/exciton.hpp"
#include "slr/field_map.hpp"
#include "slr/linear_response.hpp"
#include "slr/optomech.hpp"
#include "slr/output.hpp"
#include "slr/pump_probe.hpp"
#include "slr/spectrum.hpp"

namespace slr {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

void expect_object(const json& j, const std::string& ctx) {
  if (!j.is_object()) throw config_error(ctx + ": expected an object");
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& ctx) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw config_error(ctx + ": unknown key \"" + it.key() + "\"");
}

const json& require_key(const json& j, const char* key, const std::string& ctx) {
  const auto it = j.find(key);
  if (it == j.end()) throw config_error(ctx + ": missing required key \"" + key + "\"");
  return *it;
}

double as_num(const json& v, const std::string& ctx) {
  if (!v.is_number()) throw config_error(ctx + ": expected a number");
  return v.get<double>();
}

double req_num(const json& j, const char* key, const std::string& ctx) {
  return as_num(require_key(j, key, ctx), ctx + "." + key);
}

double opt_num(const json& j, const char* key, double def, const std::string& ctx) {
  const auto it = j.find(key);
  return it == j.end() ? def : as_num(*it, ctx + "." + std::string(key));
}

int req_int(const json& j, const char* key, const std::string& ctx) {
  const json& v = require_key(j, key, ctx);
  if (!v.is_number_integer()) throw config_error(ctx + "." + key + ": expected an integer");
  return v.get<int>();
}

std::string req_str(const json& j, const char* key, const std::string& ctx) {
  const json& v = require_key(j, key, ctx);
  if (!v.is_string()) throw config_error(ctx + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::string opt_str(const json& j, const char* key, const std::string& def, const std::string& ctx) {
  const auto it = j.find(key);
  if (it == j.end()) return def;
  if (!it->is_string()) throw config_error(ctx + "." + std::string(key) + ": expected a string");
  return it->get<std::string>();
}

UnitVector3 parse_axis(const std::string& s, const std::string& ctx) {
  if (s == "x") return UnitVector3::x();
  if (s == "y") return UnitVector3::y();
  if (s == "z") return UnitVector3::z();
  throw config_error(ctx + ": expected one of x, y, z");
}

ParticleSpec parse_particle(const json& j, const std::string& ctx) {
  expect_object(j, ctx);
  check_keys(j, {"lambda0_nm", "omega0_ev", "gamma0_ev", "orientation"}, ctx);
  const bool has_l = j.contains("lambda0_nm"), has_w = j.contains("omega0_ev");
  if (has_l == has_w)
    throw config_error(ctx + ": give exactly one of lambda0_nm or omega0_ev");
  ParticleSpec p;
  if (has_w) {
    p.omega0 = req_num(j, "omega0_ev", ctx);
  } else {
    const double l0 = req_num(j, "lambda0_nm", ctx);
    if (l0 <= 0.0) throw config_error(ctx + ".lambda0_nm: must be positive");
    p.omega0 = 2.0 * M_PI * hbar_c / l0;
  }
  p.gamma0_rad = req_num(j, "gamma0_ev", ctx);
  p.orientation = parse_axis(opt_str(j, "orientation", "y", ctx), ctx + ".orientation");
  p.validate();
  return p;
}

LatticeSpec parse_lattice(const json& j, const std::string& ctx) {
  expect_object(j, ctx);
  check_keys(j, {"spacing_nm", "sites", "axis"}, ctx);
  LatticeSpec l;
  l.spacing_a = req_num(j, "spacing_nm", ctx);
  l.site_count_m = req_int(j, "sites", ctx);
  l.axis = parse_axis(opt_str(j, "axis", "x", ctx), ctx + ".axis");
  l.validate();
  return l;
}

// Diffraction-edge energies hbar_c |2 pi m / a +- k_par| inside [lo, hi];
// piecewise grids refine around these.
std::vector<double> ra_anchors(const LatticeSpec& lat, double k_par, double lo, double hi) {
  std::vector<double> anchors;
  for (int m = 1; m <= 8; ++m) {
    const double g = 2.0 * M_PI * m / lat.spacing_a;
    for (const double s : {g - k_par, g + k_par}) {
      const double e = hbar_c * std::abs(s);
      if (e >= lo && e <= hi) anchors.push_back(e);
    }
  }
  return anchors;
}

std::vector<double> parse_grid(const json& j, const std::vector<double>& anchors,
                               const std::string& ctx) {
  expect_object(j, ctx);
  const std::string type = req_str(j, "type", ctx);
  if (type == "linear") {
    check_keys(j, {"type", "min_ev", "max_ev", "points"}, ctx);
    return linear_grid(req_num(j, "min_ev", ctx), req_num(j, "max_ev", ctx),
                       req_int(j, "points", ctx));
  }
  if (type == "piecewise") {
    check_keys(j, {"type", "min_ev", "max_ev", "window_ev", "fine_step_ev", "coarse_step_ev"}, ctx);
    return piecewise_grid(req_num(j, "min_ev", ctx), req_num(j, "max_ev", ctx), anchors,
                          opt_num(j, "window_ev", 0.1, ctx),
                          opt_num(j, "fine_step_ev", 5e-4, ctx),
                          opt_num(j, "coarse_step_ev", 5e-3, ctx));
  }
  throw config_error(ctx + ".type: expected linear or piecewise");
}

OMParams parse_om(const json& j, bool allow_geometry, const std::string& ctx) {
  expect_object(j, ctx);
  std::set<std::string> keys = {"omega_vib_ev", "gamma_vib_ev", "omega_laser_ev", "branch",
                                "raman_ratio"};
  if (allow_geometry) {
    keys.insert("offset_nm");
    keys.insert("raman_orientation");
  }
  check_keys(j, keys, ctx);
  OMParams om;
  om.omega_vib = req_num(j, "omega_vib_ev", ctx);
  om.gamma_vib = req_num(j, "gamma_vib_ev", ctx);
  om.omega_laser = req_num(j, "omega_laser_ev", ctx);
  const std::string branch = req_str(j, "branch", ctx);
  if (branch == "red") om.branch = SidebandBranch::RedDetuned;
  else if (branch == "blue") om.branch = SidebandBranch::BlueDetuned;
  else throw config_error(ctx + ".branch: expected red or blue");
  om.raman_ratio = req_num(j, "raman_ratio", ctx);
  if (allow_geometry) {
    if (j.contains("offset_nm")) {
      const json& v = j["offset_nm"];
      if (!v.is_array() || v.size() != 3)
        throw config_error(ctx + ".offset_nm: expected [x, y, z]");
      for (int i = 0; i < 3; ++i) om.offset_rm[i] = as_num(v[i], ctx + ".offset_nm");
    }
    om.raman_orientation =
        parse_axis(opt_str(j, "raman_orientation", "y", ctx), ctx + ".raman_orientation");
  }
  om.validate();
  return om;
}

TransitionSpec parse_transition(const json& j, const std::string& ctx) {
  expect_object(j, ctx);
  check_keys(j, {"lower", "upper", "omega_ev", "gamma_ev", "orientation", "dipole_allowed"}, ctx);
  TransitionSpec t;
  t.lower = req_int(j, "lower", ctx);
  t.upper = req_int(j, "upper", ctx);
  t.omega_t = req_num(j, "omega_ev", ctx);
  t.gamma_t_rad = req_num(j, "gamma_ev", ctx);
  t.orientation = parse_axis(opt_str(j, "orientation", "y", ctx), ctx + ".orientation");
  const auto it = j.find("dipole_allowed");
  t.dipole_allowed = it == j.end() ? t.gamma_t_rad > 0.0 : it->get<bool>();
  t.validate();
  return t;
}

PulseSpec parse_pulse(const json& j, const std::string& ctx) {
  expect_object(j, ctx);
  check_keys(j, {"center_ev", "fwhm_fs", "amplitude", "delay_fs"}, ctx);
  PulseSpec p;
  p.center_omega = req_num(j, "center_ev", ctx);
  const double fwhm = req_num(j, "fwhm_fs", ctx);
  if (fwhm <= 0.0) throw config_error(ctx + ".fwhm_fs: must be positive");
  p.temporal_width = fwhm / (2.0 * std::sqrt(2.0 * std::log(2.0)));
  p.amplitude = opt_num(j, "amplitude", 1.0, ctx);
  p.delay_fs = opt_num(j, "delay_fs", 0.0, ctx);
  p.validate();
  return p;
}

double parse_kpar(const json& j, const std::string& ctx) {
  return opt_num(j, "k_parallel_per_nm", 0.0, ctx);
}

// Per-kind parsed parameter bundles. Parsing runs eagerly in parse_config so
// schema errors surface before any computation.

struct ExtinctionRun {
  ParticleSpec particle;
  LatticeSpec lattice;
  std::vector<double> omegas;
  double k_par;
};

ExtinctionRun parse_extinction(const json& p) {
  check_keys(p, {"particle", "lattice", "grid", "k_parallel_per_nm"}, "params");
  ExtinctionRun r;
  r.particle = parse_particle(require_key(p, "particle", "params"), "params.particle");
  r.lattice = parse_lattice(require_key(p, "lattice", "params"), "params.lattice");
  r.k_par = parse_kpar(p, "params");
  r.omegas = parse_grid(require_key(p, "grid", "params"),
                        ra_anchors(r.lattice, r.k_par, 0.0, 1e9), "params.grid");
  return r;
}

struct DispersionRun {
  ParticleSpec particle;
  LatticeSpec lattice;
  SpectrumGrid grid;
};

DispersionRun parse_dispersion(const json& p) {
  check_keys(p, {"particle", "lattice", "grid", "k_grid"}, "params");
  DispersionRun r;
  r.particle = parse_particle(require_key(p, "particle", "params"), "params.particle");
  r.lattice = parse_lattice(require_key(p, "lattice", "params"), "params.lattice");
  r.grid.omegas = parse_grid(require_key(p, "grid", "params"),
                             ra_anchors(r.lattice, 0.0, 0.0, 1e9), "params.grid");
  const json& kg = require_key(p, "k_grid", "params");
  expect_object(kg, "params.k_grid");
  check_keys(kg, {"min_per_nm", "max_per_nm", "points"}, "params.k_grid");
  r.grid.k_parallels = linear_grid(req_num(kg, "min_per_nm", "params.k_grid"),
                                   req_num(kg, "max_per_nm", "params.k_grid"),
                                   req_int(kg, "points", "params.k_grid"));
  r.grid.validate();
  return r;
}

struct FieldMapRun {
  ParticleSpec particle;
  LatticeSpec lattice;
  double omega, k_par, mask_radius;
  int periods;
  FieldGrid grid;
};

FieldMapRun parse_fieldmap(const json& p) {
  check_keys(p, {"particle", "lattice", "omega_ev", "k_parallel_per_nm", "map", "periods",
                 "mask_radius_nm"},
             "params");
  FieldMapRun r;
  r.particle = parse_particle(require_key(p, "particle", "params"), "params.particle");
  r.lattice = parse_lattice(require_key(p, "lattice", "params"), "params.lattice");
  r.omega = req_num(p, "omega_ev", "params");
  r.k_par = parse_kpar(p, "params");
  r.periods = p.contains("periods") ? req_int(p, "periods", "params") : 10;
  r.mask_radius = opt_num(p, "mask_radius_nm", 10.0, "params");
  const json& m = require_key(p, "map", "params");
  expect_object(m, "params.map");
  check_keys(m, {"x_min_nm", "x_max_nm", "z_min_nm", "z_max_nm", "nx", "nz"}, "params.map");
  r.grid.x_min = req_num(m, "x_min_nm", "params.map");
  r.grid.x_max = req_num(m, "x_max_nm", "params.map");
  r.grid.z_min = req_num(m, "z_min_nm", "params.map");
  r.grid.z_max = req_num(m, "z_max_nm", "params.map");
  r.grid.nx = req_int(m, "nx", "params.map");
  r.grid.nz = req_int(m, "nz", "params.map");
  r.grid.validate();
  return r;
}

struct OptomechRun {
  ParticleSpec particle;
  LatticeSpec lattice;
  OMParams om;
  std::vector<double> omegas;
  double k_par;
};

OptomechRun parse_optomech(const json& p) {
  check_keys(p, {"particle", "lattice", "grid", "k_parallel_per_nm", "om"}, "params");
  OptomechRun r;
  r.particle = parse_particle(require_key(p, "particle", "params"), "params.particle");
  r.lattice = parse_lattice(require_key(p, "lattice", "params"), "params.lattice");
  r.om = parse_om(require_key(p, "om", "params"), true, "params.om");
  r.k_par = parse_kpar(p, "params");
  r.omegas = parse_grid(require_key(p, "grid", "params"),
                        ra_anchors(r.lattice, r.k_par, 0.0, 1e9), "params.grid");
  return r;
}

struct SingleModeRun {
  ParticleSpec particle;
  OMParams om;
  double g;
  std::vector<double> omegas;
};

SingleModeRun parse_single_mode(const json& p) {
  check_keys(p, {"particle", "g_ev", "grid", "om"}, "params");
  SingleModeRun r;
  r.particle = parse_particle(require_key(p, "particle", "params"), "params.particle");
  r.om = parse_om(require_key(p, "om", "params"), false, "params.om");
  r.g = req_num(p, "g_ev", "params");
  r.omegas = parse_grid(require_key(p, "grid", "params"), {}, "params.grid");
  return r;
}

struct ExcitonRun {
  LatticeSpec lattice;
  std::vector<TransitionSpec> transitions;
  PopulationState populations;
  std::vector<double> omegas;
  double k_par;
};

ExcitonRun parse_exciton(const json& p) {
  check_keys(p, {"lattice", "transitions", "populations", "grid", "k_parallel_per_nm"}, "params");
  ExcitonRun r;
  r.lattice = parse_lattice(require_key(p, "lattice", "params"), "params.lattice");
  const json& ts = require_key(p, "transitions", "params");
  if (!ts.is_array() || ts.empty())
    throw config_error("params.transitions: expected a non-empty array");
  for (size_t i = 0; i < ts.size(); ++i)
    r.transitions.push_back(
        parse_transition(ts[i], "params.transitions[" + std::to_string(i) + "]"));
  const json& pops = require_key(p, "populations", "params");
  expect_object(pops, "params.populations");
  for (auto it = pops.begin(); it != pops.end(); ++it) {
    size_t pos = 0;
    int level = 0;
    try {
      level = std::stoi(it.key(), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != it.key().size())
      throw config_error("params.populations: keys must be integer level labels");
    r.populations.populations[level] = as_num(*it, "params.populations." + it.key());
  }
  r.populations.validate();
  r.k_par = parse_kpar(p, "params");
  r.omegas = parse_grid(require_key(p, "grid", "params"),
                        ra_anchors(r.lattice, r.k_par, 0.0, 1e9), "params.grid");
  return r;
}

struct PumpProbeRun {
  LatticeSpec lattice;
  TransitionSpec t12, t23;
  double p_inv0, k_par, domega, half_span, eps_reg;
  PulseSpec pump, probe;
};

PumpProbeRun parse_pump_probe(const json& p) {
  check_keys(p, {"lattice", "t12", "t23", "p_inv0", "pump", "probe", "k_parallel_per_nm",
                 "domega_ev", "half_span_ev", "eps_reg_ev"},
             "params");
  PumpProbeRun r;
  r.lattice = parse_lattice(require_key(p, "lattice", "params"), "params.lattice");
  r.t12 = parse_transition(require_key(p, "t12", "params"), "params.t12");
  r.t23 = parse_transition(require_key(p, "t23", "params"), "params.t23");
  r.p_inv0 = req_num(p, "p_inv0", "params");
  r.pump = parse_pulse(require_key(p, "pump", "params"), "params.pump");
  r.probe = parse_pulse(require_key(p, "probe", "params"), "params.probe");
  r.k_par = parse_kpar(p, "params");
  r.domega = opt_num(p, "domega_ev", 2e-3, "params");
  r.half_span = opt_num(p, "half_span_ev", 0.75, "params");
  r.eps_reg = opt_num(p, "eps_reg_ev", 1e-6, "params");
  return r;
}

void validate_params(ScenarioKind kind, const json& p) {
  expect_object(p, "params");
  switch (kind) {
    case ScenarioKind::Extinction: parse_extinction(p); break;
    case ScenarioKind::Dispersion: parse_dispersion(p); break;
    case ScenarioKind::FieldMap: parse_fieldmap(p); break;
    case ScenarioKind::Optomech: parse_optomech(p); break;
    case ScenarioKind::SingleModeOM: parse_single_mode(p); break;
    case ScenarioKind::Exciton: parse_exciton(p); break;
    case ScenarioKind::PumpProbe: parse_pump_probe(p); break;
  }
}

std::string cell(double x) {
  return std::isnan(x) ? std::string("masked") : format_double(x);
}

json json_column(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) {
    if (std::isnan(x)) a.push_back(nullptr);
    else a.push_back(x);
  }
  return a;
}

struct DataFile {
  std::string name; // stem, extension added per format
  Table table;
  json data;
};

DataFile spectrum_file(const std::string& name, const SpectrumResult& s) {
  DataFile f;
  f.name = name;
  f.table.header = {"omega_ev", "extinction_nm2"};
  for (size_t i = 0; i < s.grid.omegas.size(); ++i)
    f.table.rows.push_back({format_double(s.grid.omegas[i]), cell(s.values[i])});
  f.data = json{{"omega_ev", json_column(s.grid.omegas)},
                {"extinction_nm2", json_column(s.values)},
                {"units", s.units},
                {"metadata", s.metadata}};
  return f;
}

DataFile band_file(const std::string& name, const BandSpectrum& b) {
  DataFile f;
  f.name = name;
  f.table.header = {"omega_ev", "extinction_nm2"};
  for (size_t i = 0; i < b.omegas.size(); ++i)
    f.table.rows.push_back({format_double(b.omegas[i]), cell(b.values[i])});
  f.data = json{{"omega_ev", json_column(b.omegas)},
                {"extinction_nm2", json_column(b.values)},
                {"units", "nm^2"}};
  return f;
}

std::vector<DataFile> compute(const ScenarioConfig& c) {
  const json& p = c.params;
  switch (c.kind) {
    case ScenarioKind::Extinction: {
      const auto r = parse_extinction(p);
      return {spectrum_file("extinction",
                            extinction_spectrum(r.lattice, r.particle, r.k_par, r.omegas,
                                                c.workers))};
    }
    case ScenarioKind::Dispersion: {
      const auto r = parse_dispersion(p);
      const auto s = dispersion_map(r.lattice, r.particle, r.grid, c.workers);
      DataFile f;
      f.name = "dispersion";
      f.table.header = {"k_per_nm"};
      for (double w : s.grid.omegas) f.table.header.push_back(format_double(w));
      const size_t n_w = s.grid.omegas.size();
      json rows = json::array();
      for (size_t ik = 0; ik < s.grid.k_parallels.size(); ++ik) {
        std::vector<std::string> row = {format_double(s.grid.k_parallels[ik])};
        std::vector<double> vals(s.values.begin() + ik * n_w,
                                 s.values.begin() + (ik + 1) * n_w);
        for (double v : vals) row.push_back(cell(v));
        f.table.rows.push_back(std::move(row));
        rows.push_back(json_column(vals));
      }
      f.data = json{{"omega_ev", json_column(s.grid.omegas)},
                    {"k_per_nm", json_column(s.grid.k_parallels)},
                    {"extinction_nm2", rows},
                    {"units", s.units},
                    {"metadata", s.metadata}};
      return {f};
    }
    case ScenarioKind::FieldMap: {
      const auto r = parse_fieldmap(p);
      const auto m = intensity_map(r.grid, r.lattice, r.particle, r.k_par, r.omega, c.workers,
                                   r.mask_radius, r.periods);
      DataFile f;
      f.name = "fieldmap";
      f.table.header = {"x_nm", "z_nm", "intensity"};
      json rows = json::array();
      for (int iz = 0; iz < r.grid.nz; ++iz) {
        const double z = r.grid.z_min + iz * (r.grid.z_max - r.grid.z_min) / (r.grid.nz - 1);
        std::vector<double> rowvals(r.grid.nx);
        for (int ix = 0; ix < r.grid.nx; ++ix) {
          const double x = r.grid.x_min + ix * (r.grid.x_max - r.grid.x_min) / (r.grid.nx - 1);
          const double v = m.intensity[iz * r.grid.nx + ix];
          rowvals[ix] = v;
          f.table.rows.push_back({format_double(x), format_double(z), cell(v)});
        }
        rows.push_back(json_column(rowvals));
      }
      f.data = json{{"x_min_nm", r.grid.x_min}, {"x_max_nm", r.grid.x_max},
                    {"z_min_nm", r.grid.z_min}, {"z_max_nm", r.grid.z_max},
                    {"intensity", rows},
                    {"metadata", m.metadata}};
      return {f};
    }
    case ScenarioKind::Optomech: {
      const auto r = parse_optomech(p);
      return {spectrum_file("extinction",
                            om_extinction_spectrum(r.lattice, r.particle, r.om, r.k_par,
                                                   r.omegas, c.workers))};
    }
    case ScenarioKind::SingleModeOM: {
      const auto r = parse_single_mode(p);
      const auto s = single_mode_om_spectrum(r.g, r.particle, r.om, r.omegas);
      DataFile f;
      f.name = "spectrum";
      f.table.header = {"omega_ev", "cavity_norm", "molecular_norm"};
      for (size_t i = 0; i < s.omegas.size(); ++i)
        f.table.rows.push_back(
            {format_double(s.omegas[i]), cell(s.cavity[i]), cell(s.molecular[i])});
      f.data = json{{"omega_ev", json_column(s.omegas)},
                    {"cavity_norm", json_column(s.cavity)},
                    {"molecular_norm", json_column(s.molecular)},
                    {"effective_width_ev", s.effective_width}};
      return {f};
    }
    case ScenarioKind::Exciton: {
      const auto r = parse_exciton(p);
      return {spectrum_file("extinction",
                            exciton_extinction_spectrum(r.lattice, r.transitions, r.populations,
                                                        r.k_par, r.omegas, c.workers))};
    }
    case ScenarioKind::PumpProbe: {
      const auto r = parse_pump_probe(p);
      const auto res = run_pump_probe(r.lattice, r.t12, r.t23, r.p_inv0, r.pump, r.probe,
                                      r.k_par, r.domega, r.half_span, r.eps_reg, c.workers);
      return {band_file("pump_band", res.pump_band), band_file("probe_band", res.probe_band)};
    }
  }
  throw config_error("unreachable scenario kind");
}

} // namespace

ScenarioKind scenario_kind_from_string(const std::string& s) {
  if (s == "extinction") return ScenarioKind::Extinction;
  if (s == "dispersion") return ScenarioKind::Dispersion;
  if (s == "fieldmap") return ScenarioKind::FieldMap;
  if (s == "optomech") return ScenarioKind::Optomech;
  if (s == "single-mode-om") return ScenarioKind::SingleModeOM;
  if (s == "exciton") return ScenarioKind::Exciton;
  if (s == "pump-probe") return ScenarioKind::PumpProbe;
  throw config_error("unknown scenario: " + s);
}

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::Extinction: return "extinction";
    case ScenarioKind::Dispersion: return "dispersion";
    case ScenarioKind::FieldMap: return "fieldmap";
    case ScenarioKind::Optomech: return "optomech";
    case ScenarioKind::SingleModeOM: return "single-mode-om";
    case ScenarioKind::Exciton: return "exciton";
    case ScenarioKind::PumpProbe: return "pump-probe";
  }
  return "unknown";
}

ScenarioConfig parse_config(const json& doc) {
  expect_object(doc, "config");
  json d = doc;
  if (d.contains("manifest_version")) {
    check_keys(d, {"manifest_version", "scenario", "params", "workers", "format", "version",
                   "outputs"},
               "manifest");
    json cfg;
    cfg["scenario"] = require_key(d, "scenario", "manifest");
    cfg["params"] = require_key(d, "params", "manifest");
    if (d.contains("workers")) cfg["workers"] = d["workers"];
    if (d.contains("format")) cfg["format"] = d["format"];
    d = cfg;
  }
  check_keys(d, {"scenario", "params", "workers", "format"}, "config");
  ScenarioConfig c;
  c.kind = scenario_kind_from_string(req_str(d, "scenario", "config"));
  c.params = require_key(d, "params", "config");
  if (d.contains("workers")) {
    c.workers = req_int(d, "workers", "config");
    if (c.workers < 1) throw config_error("config.workers: must be >= 1");
  }
  c.format = opt_str(d, "format", "both", "config");
  if (c.format != "csv" && c.format != "json" && c.format != "both")
    throw config_error("config.format: expected csv, json or both");
  validate_params(c.kind, c.params);
  return c;
}

ScenarioConfig parse_config_file(const fs::path& path) {
  json doc;
  const std::string text = read_text_file(path);
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(path.string() + ": " + e.what());
  }
  return parse_config(doc);
}

OutputBundle run_scenario(const ScenarioConfig& config, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw io_error("cannot create output directory " + out_dir.string());

  OutputBundle bundle;
  const auto cleanup = [&]() {
    for (const auto& f : bundle.files) fs::remove(f, ec);
  };
  try {
    const auto files = compute(config);
    json hashes = json::object();
    for (const auto& f : files) {
      if (config.format == "csv" || config.format == "both") {
        const fs::path path = out_dir / (f.name + ".csv");
        const std::string text = to_csv(f.table);
        write_text_file(path, text);
        bundle.files.push_back(path);
        hashes[f.name + ".csv"] = fnv1a_hex(text);
      }
      if (config.format == "json" || config.format == "both") {
        const fs::path path = out_dir / (f.name + ".json");
        const std::string text = f.data.dump(2) + "\n";
        write_text_file(path, text);
        bundle.files.push_back(path);
        hashes[f.name + ".json"] = fnv1a_hex(text);
      }
    }
    const json manifest = {{"manifest_version", 1},
                           {"scenario", to_string(config.kind)},
                           {"version", SLR_VERSION_STRING},
                           {"workers", config.workers},
                           {"format", config.format},
                           {"params", config.params},
                           {"outputs", hashes}};
    bundle.manifest = out_dir / "manifest.json";
    write_text_file(bundle.manifest, manifest.dump(2) + "\n");
    bundle.files.push_back(bundle.manifest);
    return bundle;
  } catch (...) {
    cleanup();
    throw;
  }
}

} // namespace slr
