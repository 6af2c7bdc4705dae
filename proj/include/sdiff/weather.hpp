#pragma once

#include <iosfwd>
#include <string>

namespace sdiff {

enum class Rescale { equator, area };

const char* to_string(Rescale r);
Rescale rescale_from_string(const std::string& s);

/// Ingredients of the error-growth estimate for a model trade wind on a
/// compact surface: the field's L2 norm, Ricci curvature in its direction,
/// speed and orbit length of its fastest particles, and how the model is
/// rescaled to earth size (by equator length or by area).
struct WeatherScenario {
    double norm_v = 0.0;     // ||v||, model units
    double ricci = 0.0;      // Ric(v) < 0, 1/area units
    double v_rapid = 0.0;    // top average particle speed, model units
    double s_orb = 0.0;      // orbit length of the fastest particles
    double equator_E = 0.0;  // model equator length E_M
    double area_S = 0.0;     // model surface area S_M
    Rescale rescale = Rescale::equator;
    double earth_equator_km = 40000.0;
    double earth_area_km2 = 5.1e8;
    double wind_speed_kmh = 100.0;
};

/// km per model length unit: earth_equator_km / E_M under equator
/// rescaling, sqrt(earth_area_km2 / S_M) under area rescaling.
double rescale_factor(const WeatherScenario& s);

/// Error-growth exponent per orbit period of the fastest particles:
/// alpha = s_orb ||v|| sqrt(-Ric(v)) / |v|_rapid. Invariant under joint
/// metric rescaling. Throws domain_error when ricci >= 0.
double alpha(const WeatherScenario& s);

/// Digits of initial accuracy lost per month:
/// k = ||v|| sqrt(-Ric(v)) / (|v|_rapid c_M) * 30 * 24 * wind * log10(e).
/// The prediction error grows by 10^{kN} after N months.
double digits_per_month(const WeatherScenario& s);

enum class PresetName { klein, torus, rp2, sphere_e03, sphere_e02_ric, sphere_e02_inf };

const char* to_string(PresetName p);
PresetName preset_from_string(const std::string& s);

/// The model scenarios:
///   klein / torus    trade wind sin(x2) d/dx1 on the 2pi x 2pi cover,
///                    ||v|| = sqrt(S_T/2), Ric = -3/(8 S_T), |v|_rapid = 1,
///                    equator 2pi;
///   rp2 / sphere_e03 zonal field ~ (5 cos^2 theta - 1) d/dphi, ||v|| = 1,
///                    Ric = -15/(2 S_{S^2}),
///                    |v|_rapid = (2/3) sqrt(14/(5 S_{RP^2})), equator pi
///                    resp. 2pi;
///   sphere_e02_ric   zonal field ~ cos theta d/dphi with Ric = -3/S_{S^2};
///   sphere_e02_inf   same field, Ricci replaced by the quarter-infimum
///                    estimate -15/(32 pi).
/// The e03 presets use the fastest-particle speed that is consistent with
/// the field's profile, (2/3) sqrt(14/(5 S_{RP^2})); the variant without
/// the 2/3 factor floating around in summaries does not reproduce the
/// digits-per-month values and is surfaced as a diagnostic only.
WeatherScenario preset(PresetName name, Rescale rescale);

/// Reads key=value lines (keys named exactly as the WeatherScenario
/// fields; '#' starts a comment). Unknown keys raise precondition_error.
WeatherScenario scenario_from_config(std::istream& in);

}  // namespace sdiff
