#include "slr/scenario.hpp"

namespace slr {
namespace {

using json = nlohmann::json;

// Chain and particle of the single-lattice figures: 500 nm resonance
// (2.4796839679 eV), 0.5 eV width, 550 nm spacing, 8000 sites.
json slr_particle() {
  return json{{"lambda0_nm", 500.0}, {"gamma0_ev", 0.5}, {"orientation", "y"}};
}

json slr_lattice() {
  return json{{"spacing_nm", 550.0}, {"sites", 8000}, {"axis", "x"}};
}

json piecewise(double lo, double hi) {
  return json{{"type", "piecewise"}, {"min_ev", lo}, {"max_ev", hi}};
}

// Vibrational sideband scenarios share the SLR chain; the laser sits one
// vibrational quantum away from the collective resonance at 2.2326 eV.
json fig3(const char* branch, double omega_laser) {
  return json{
      {"scenario", "optomech"},
      {"params",
       {{"particle", slr_particle()},
        {"lattice", slr_lattice()},
        {"grid", piecewise(2.0, 2.5)},
        {"k_parallel_per_nm", 0.0},
        {"om",
         {{"omega_vib_ev", 0.2},
          {"gamma_vib_ev", 0.0},
          {"omega_laser_ev", omega_laser},
          {"branch", branch},
          {"raman_ratio", 0.3},
          {"offset_nm", {275.0, 0.0, 0.0}},
          {"raman_orientation", "y"}}}}}};
}

// Single optical mode at 1 eV, 0.1 eV width; sideband tuned onto it.
json fig4(const char* branch, double omega_laser, double gamma_vib, double raman_ratio) {
  return json{
      {"scenario", "single-mode-om"},
      {"params",
       {{"particle", {{"omega0_ev", 1.0}, {"gamma0_ev", 0.1}, {"orientation", "y"}}},
        {"g_ev", 0.02},
        {"grid", {{"type", "linear"}, {"min_ev", 0.9}, {"max_ev", 1.1}, {"points", 4001}}},
        {"om",
         {{"omega_vib_ev", 0.2},
          {"gamma_vib_ev", gamma_vib},
          {"omega_laser_ev", omega_laser},
          {"branch", branch},
          {"raman_ratio", raman_ratio}}}}}};
}

json exciton_transitions() {
  return json::array({
      {{"lower", 1}, {"upper", 2}, {"omega_ev", 1.5}, {"gamma_ev", 0.25}},
      {{"lower", 2}, {"upper", 3}, {"omega_ev", 3.0}, {"gamma_ev", 0.25}},
  });
}

json fig5(json populations) {
  return json{
      {"scenario", "exciton"},
      {"params",
       {{"lattice", {{"spacing_nm", 415.0}, {"sites", 1000}, {"axis", "x"}}},
        {"transitions", exciton_transitions()},
        {"populations", populations},
        {"grid", piecewise(1.0, 3.2)},
        {"k_parallel_per_nm", 0.0}}}};
}

} // namespace

std::vector<std::string> preset_names() {
  return {"fig1b", "fig1c", "fig2a", "fig2b", "fig3c", "fig3d",
          "fig4a", "fig4b", "fig4c", "fig4d", "fig5", "fig5_pumped", "fig6"};
}

nlohmann::json preset_config(const std::string& name) {
  if (name == "fig1b")
    return json{{"scenario", "extinction"},
                {"params",
                 {{"particle", slr_particle()},
                  {"lattice", slr_lattice()},
                  {"grid", piecewise(1.8, 2.8)},
                  {"k_parallel_per_nm", 0.0}}}};
  if (name == "fig1c")
    return json{{"scenario", "dispersion"},
                {"params",
                 {{"particle", slr_particle()},
                  {"lattice", slr_lattice()},
                  {"grid", {{"type", "linear"}, {"min_ev", 1.9}, {"max_ev", 2.9}, {"points", 401}}},
                  // 0 .. 0.8 pi/a for a = 550 nm
                  {"k_grid", {{"min_per_nm", 0.0}, {"max_per_nm", 4.5696e-3}, {"points", 41}}}}}};
  if (name == "fig2a")
    return json{{"scenario", "fieldmap"},
                {"params",
                 {{"particle", slr_particle()},
                  {"lattice", {{"spacing_nm", 300.0}, {"sites", 8000}, {"axis", "x"}}},
                  {"omega_ev", 2.4796839679}, // bare particle resonance
                  {"k_parallel_per_nm", 0.0},
                  {"map",
                   {{"x_min_nm", -1500.0}, {"x_max_nm", 1500.0},
                    {"z_min_nm", -500.0}, {"z_max_nm", 500.0},
                    {"nx", 400}, {"nz", 200}}}}}};
  if (name == "fig2b")
    return json{{"scenario", "fieldmap"},
                {"params",
                 {{"particle", slr_particle()},
                  {"lattice", slr_lattice()},
                  {"omega_ev", 2.2326}, // collective resonance of the 550 nm chain
                  {"k_parallel_per_nm", 0.0},
                  {"map",
                   {{"x_min_nm", -2750.0}, {"x_max_nm", 2750.0},
                    {"z_min_nm", -500.0}, {"z_max_nm", 500.0},
                    {"nx", 400}, {"nz", 200}}}}}};
  if (name == "fig3c") return fig3("red", 2.0326);
  if (name == "fig3d") return fig3("blue", 2.4326);
  // fig4 a/b: Gamma_vib = 10 gamma_p = 0.1 Gamma0; c/d: gamma_p = 10 Gamma_vib.
  if (name == "fig4a") return fig4("red", 0.8, 0.01, 0.1);
  if (name == "fig4b") return fig4("blue", 1.2, 0.01, 0.1);
  if (name == "fig4c") return fig4("red", 0.8, 0.001, 0.31622776601683794);
  if (name == "fig4d") return fig4("blue", 1.2, 0.001, 0.31622776601683794);
  if (name == "fig5") return fig5(json{{"1", 1.0}, {"2", 0.0}, {"3", 0.0}});
  if (name == "fig5_pumped") return fig5(json{{"1", 0.5}, {"2", 0.5}, {"3", 0.0}});
  if (name == "fig6")
    return json{
        {"scenario", "pump-probe"},
        {"params",
         {{"lattice", {{"spacing_nm", 415.0}, {"sites", 1000}, {"axis", "x"}}},
          {"t12", {{"lower", 1}, {"upper", 2}, {"omega_ev", 1.5}, {"gamma_ev", 0.25}}},
          {"t23", {{"lower", 2}, {"upper", 3}, {"omega_ev", 3.0}, {"gamma_ev", 0.25}}},
          {"p_inv0", -1.0},
          {"pump", {{"center_ev", 1.5}, {"fwhm_fs", 40.0}, {"amplitude", 1.0}, {"delay_fs", 0.0}}},
          {"probe", {{"center_ev", 3.0}, {"fwhm_fs", 40.0}, {"amplitude", 1.0}, {"delay_fs", 50.0}}},
          {"k_parallel_per_nm", 0.0}}}};
  throw config_error("unknown preset: " + name);
}

} // namespace slr
