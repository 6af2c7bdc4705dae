#include "sdiff/weather.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>

#include "sdiff/errors.hpp"

namespace sdiff {

namespace {

constexpr double kPi = std::numbers::pi;

void require_valid(const WeatherScenario& s) {
    if (!(s.ricci < 0.0)) throw domain_error("Ric(v) must be negative");
    if (s.norm_v <= 0.0 || s.v_rapid <= 0.0) {
        throw domain_error("||v|| and |v|_rapid must be positive");
    }
}

}  // namespace

const char* to_string(Rescale r) { return r == Rescale::equator ? "equator" : "area"; }

Rescale rescale_from_string(const std::string& s) {
    if (s == "equator") return Rescale::equator;
    if (s == "area") return Rescale::area;
    throw precondition_error("unknown rescale convention: " + s);
}

double rescale_factor(const WeatherScenario& s) {
    double c = 0.0;
    if (s.rescale == Rescale::equator) {
        if (s.equator_E <= 0.0) throw domain_error("equator_E must be positive");
        c = s.earth_equator_km / s.equator_E;
    } else {
        if (s.area_S <= 0.0) throw domain_error("area_S must be positive");
        c = std::sqrt(s.earth_area_km2 / s.area_S);
    }
    if (!(c > 0.0)) throw domain_error("rescale factor must be positive");
    return c;
}

double alpha(const WeatherScenario& s) {
    require_valid(s);
    if (s.s_orb <= 0.0) throw domain_error("s_orb must be positive");
    return s.s_orb * s.norm_v * std::sqrt(-s.ricci) / s.v_rapid;
}

double digits_per_month(const WeatherScenario& s) {
    require_valid(s);
    const double hours_per_month = 30.0 * 24.0;
    return s.norm_v * std::sqrt(-s.ricci) / (s.v_rapid * rescale_factor(s)) *
           hours_per_month * s.wind_speed_kmh * std::log10(std::numbers::e);
}

const char* to_string(PresetName p) {
    switch (p) {
        case PresetName::klein: return "klein";
        case PresetName::torus: return "torus";
        case PresetName::rp2: return "rp2";
        case PresetName::sphere_e03: return "sphere_e03";
        case PresetName::sphere_e02_ric: return "sphere_e02_ric";
        case PresetName::sphere_e02_inf: return "sphere_e02_inf";
    }
    return "?";
}

PresetName preset_from_string(const std::string& s) {
    for (PresetName p : {PresetName::klein, PresetName::torus, PresetName::rp2,
                         PresetName::sphere_e03, PresetName::sphere_e02_ric,
                         PresetName::sphere_e02_inf}) {
        if (s == to_string(p)) return p;
    }
    throw precondition_error("unknown preset: " + s);
}

WeatherScenario preset(PresetName name, Rescale rescale) {
    const double torus_area = 4.0 * kPi * kPi;   // S_T, 2pi x 2pi lattice
    const double sphere_area = 4.0 * kPi;        // S_{S^2}, unit sphere

    WeatherScenario s;
    s.rescale = rescale;
    switch (name) {
        case PresetName::klein:
        case PresetName::torus:
            s.norm_v = std::sqrt(torus_area / 2.0);
            s.ricci = -3.0 / (8.0 * torus_area);
            s.v_rapid = 1.0;
            s.s_orb = 2.0 * kPi;
            s.equator_E = 2.0 * kPi;
            s.area_S = (name == PresetName::klein) ? torus_area / 2.0 : torus_area;
            break;
        case PresetName::rp2:
        case PresetName::sphere_e03:
            s.norm_v = 1.0;
            s.ricci = -15.0 / (2.0 * sphere_area);
            // top speed of (1/8) sqrt(21/pi) (5 cos^2 theta - 1) d/dphi,
            // attained where sin^2 theta = 4/15
            s.v_rapid = (2.0 / 3.0) * std::sqrt(14.0 / (5.0 * sphere_area / 2.0));
            s.s_orb = 4.0 * kPi / std::sqrt(15.0);
            s.equator_E = (name == PresetName::rp2) ? kPi : 2.0 * kPi;
            s.area_S = (name == PresetName::rp2) ? sphere_area / 2.0 : sphere_area;
            break;
        case PresetName::sphere_e02_ric:
        case PresetName::sphere_e02_inf:
            s.norm_v = 1.0;
            s.ricci = (name == PresetName::sphere_e02_ric)
                          ? -3.0 / sphere_area
                          : -15.0 / (32.0 * kPi);  // quarter of the |inf C|
            // top speed of sqrt(15/(8 pi)) cos(theta) d/dphi, at theta = pi/4
            s.v_rapid = 0.5 * std::sqrt(15.0 / (2.0 * sphere_area));
            s.s_orb = kPi * std::sqrt(2.0);
            s.equator_E = 2.0 * kPi;
            s.area_S = sphere_area;
            break;
    }
    return s;
}

WeatherScenario scenario_from_config(std::istream& in) {
    WeatherScenario s;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        }
        if (trimmed.empty()) continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos) {
            throw precondition_error("config line " + std::to_string(lineno) +
                                     " is not of the form key=value");
        }
        const std::string key = trimmed.substr(0, eq);
        const std::string value = trimmed.substr(eq + 1);
        if (key == "rescale") {
            s.rescale = rescale_from_string(value);
            continue;
        }
        double num = 0.0;
        try {
            num = std::stod(value);
        } catch (const std::exception&) {
            throw precondition_error("config value for " + key + " is not a number: " + value);
        }
        if (key == "norm_v") s.norm_v = num;
        else if (key == "ricci") s.ricci = num;
        else if (key == "v_rapid") s.v_rapid = num;
        else if (key == "s_orb") s.s_orb = num;
        else if (key == "equator_E") s.equator_E = num;
        else if (key == "area_S") s.area_S = num;
        else if (key == "earth_equator_km") s.earth_equator_km = num;
        else if (key == "earth_area_km2") s.earth_area_km2 = num;
        else if (key == "wind_speed_kmh") s.wind_speed_kmh = num;
        else throw precondition_error("unknown config key: " + key);
    }
    return s;
}

}  // namespace sdiff
