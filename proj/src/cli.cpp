#include "sdiff/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sdiff/errors.hpp"
#include "sdiff/klein_basis.hpp"
#include "sdiff/klein_curvature.hpp"
#include "sdiff/parallel.hpp"
#include "sdiff/sphere_curvature.hpp"
#include "sdiff/sphere_harmonics.hpp"
#include "sdiff/torus_algebra.hpp"
#include "sdiff/weather.hpp"

namespace sdiff::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

struct GlobalOptions {
    double torus_area = kDefaultTorusArea;
    std::string norm_convention = "isometric";
    std::string out;
    int threads = 1;
    std::string format;  // per-command default when empty
};

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// x2 on the non-orientable quotients under the "half" norm convention.
double convention_scale(const GlobalOptions& g, const std::string& surface) {
    if (g.norm_convention == "half" && (surface == "klein" || surface == "rp2")) return 2.0;
    return 1.0;
}

void write_output(const GlobalOptions& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw std::ios_base::failure("cannot open output file: " + g.out);
    f << text;
    if (!f) throw std::ios_base::failure("error writing output file: " + g.out);
}

LatticeMode parse_mode(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        throw precondition_error("expected an index pair a,b; got: " + s);
    }
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw precondition_error("expected an index pair a,b; got: " + s);
    }
}

BasisKind default_kind(LatticeMode k, bool real_family) {
    const bool odd = (k.k2 % 2) != 0;
    if (real_family) return odd ? BasisKind::cos_cos : BasisKind::sin_sin;
    return odd ? BasisKind::cos_sin : BasisKind::sin_cos;
}

BasisKind kind_from_string(const std::string& s, LatticeMode k) {
    if (s.empty() || s == "re") return default_kind(k, true);
    if (s == "im") return default_kind(k, false);
    for (BasisKind kind : {BasisKind::cos_cos, BasisKind::cos_sin, BasisKind::sin_sin,
                           BasisKind::sin_cos}) {
        if (s == to_string(kind)) return kind;
    }
    throw precondition_error("unknown basis kind: " + s);
}

SphereField field_from_string(const std::string& s) {
    if (s == "e01") return SphereField::e01;
    if (s == "e02") return SphereField::e02;
    if (s == "e03") return SphereField::e03;
    throw precondition_error("unknown field: " + s + " (expected e01|e02|e03)");
}

int field_lmin(SphereField f) {
    switch (f) {
        case SphereField::e01: return 1;
        case SphereField::e02: return 2;
        case SphereField::e03: return 3;
    }
    return 1;
}

double sphere_sectional(SphereField f, int l, int m) {
    switch (f) {
        case SphereField::e01: return sectional_e01(l, m);
        case SphereField::e02: return sectional_e02(l, m);
        case SphereField::e03: return sectional_e03(l, m);
    }
    return 0.0;
}

// ---------------------------------------------------------------- curvature

struct CurvatureArgs {
    std::string surface;
    std::string k, eta;
    std::string kind, eta_kind;
    std::string field = "e03";
    std::string lm;
};

int cmd_curvature(const GlobalOptions& g, const CurvatureArgs& a) {
    ordered_json rec;
    rec["surface"] = a.surface;
    double value = 0.0;

    if (a.surface == "klein") {
        const LatticeMode k = parse_mode(a.k);
        const LatticeMode l = parse_mode(a.eta);
        const auto xi = make_basis_element(kind_from_string(a.kind, k), k);
        const auto eta = make_basis_element(kind_from_string(a.eta_kind, l), l);
        if (xi.k == eta.k && xi.kind == eta.kind) {
            throw precondition_error("xi and eta coincide: degenerate plane");
        }
        value = sectional_klein(xi, eta.expand(g.torus_area));
        rec["k"] = {k.k1, k.k2};
        rec["kind"] = to_string(xi.kind);
        rec["eta"] = {l.k1, l.k2};
        rec["eta_kind"] = to_string(eta.kind);
    } else if (a.surface == "torus") {
        const LatticeMode k = parse_mode(a.k);
        const LatticeMode l = parse_mode(a.eta);
        if (!a.eta_kind.empty() && a.eta_kind != "cos" && a.eta_kind != "sin") {
            throw precondition_error("torus eta kind must be cos or sin, got: " + a.eta_kind);
        }
        const FourierVector eta = (a.eta_kind == "sin") ? sin_mode(l, g.torus_area)
                                                        : cos_mode(l, g.torus_area);
        value = sectional_torus(k, eta);
        rec["k"] = {k.k1, k.k2};
        rec["eta"] = {l.k1, l.k2};
        rec["eta_kind"] = a.eta_kind.empty() ? "cos" : a.eta_kind;
    } else if (a.surface == "sphere" || a.surface == "rp2") {
        const SphereField f = field_from_string(a.field);
        const LatticeMode lm = parse_mode(a.lm);
        if (a.surface == "rp2") {
            if (f == SphereField::e02) {
                throw precondition_error("e02 does not descend to a vector field on RP2");
            }
            if (lm.k1 % 2 == 0) {
                throw precondition_error("only odd-degree harmonics live on RP2");
            }
        }
        value = sphere_sectional(f, lm.k1, lm.k2);
        rec["field"] = a.field;
        rec["l"] = lm.k1;
        rec["m"] = lm.k2;
    } else {
        throw precondition_error("unknown surface: " + a.surface);
    }

    value *= convention_scale(g, a.surface);
    rec["curvature"] = value;
    rec["norm_convention"] = g.norm_convention;

    if (g.format == "json") {
        write_output(g, rec.dump(2) + "\n");
    } else {
        write_output(g, "C = " + fmt17(value) + "  (" + g.norm_convention + " normalization)\n");
    }
    return kExitOk;
}

// ------------------------------------------------------------------ blanket

struct BlanketArgs {
    std::string surface;
    std::string k = "20,10";
    std::string kind;
    double radius = 50.0;
    int lmax = 100;
    std::string field = "e03";
};

int cmd_blanket(const GlobalOptions& g, const BlanketArgs& a) {
    struct Row {
        std::string surface;
        int idx1, idx2;
        std::string kind;
        double value;
    };
    std::vector<Row> rows;
    const double scale = convention_scale(g, a.surface);

    if (a.surface == "klein") {
        const LatticeMode k = parse_mode(a.k);
        const auto xi = make_basis_element(kind_from_string(a.kind, k), k);
        const auto basis = enumerate_basis(a.radius);
        rows.resize(basis.size());
        std::vector<char> keep(basis.size(), 0);
        parallel_for_indexed(basis.size(), g.threads, [&](std::size_t i) {
            const auto& el = basis[i];
            if (el.k == xi.k && el.kind == xi.kind) return;  // excluded self
            rows[i] = {"klein", el.k.k1, el.k.k2, to_string(el.kind),
                       scale * sectional_klein(xi, el.expand(g.torus_area))};
            keep[i] = 1;
        });
        std::vector<Row> kept;
        kept.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (keep[i]) kept.push_back(rows[i]);
        }
        rows = std::move(kept);
    } else if (a.surface == "sphere" || a.surface == "rp2") {
        const SphereField f = field_from_string(a.field);
        if (a.surface == "rp2" && f == SphereField::e02) {
            throw precondition_error("e02 does not descend to a vector field on RP2");
        }
        for (int l = field_lmin(f); l <= a.lmax; ++l) {
            if (a.surface == "rp2" && l % 2 == 0) continue;
            for (int m = -l; m <= l; ++m) {
                // the m = 0 column is forced to zero by the m^2 factor (and
                // covers the degenerate self-plane of the field)
                const double v = (m == 0) ? 0.0 : scale * sphere_sectional(f, l, m);
                rows.push_back({a.surface, l, m, a.field, v});
            }
        }
    } else {
        throw precondition_error("unknown surface: " + a.surface);
    }

    std::ostringstream os;
    if (g.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            arr.push_back({{"surface", r.surface},
                           {"idx1", r.idx1},
                           {"idx2", r.idx2},
                           {"kind", r.kind},
                           {"curvature", r.value}});
        }
        os << arr.dump(2) << "\n";
    } else {
        os << "surface,idx1,idx2,kind,curvature\n";
        for (const auto& r : rows) {
            os << r.surface << ',' << r.idx1 << ',' << r.idx2 << ',' << r.kind << ','
               << fmt17(r.value) << "\n";
        }
    }
    write_output(g, os.str());
    return kExitOk;
}

// -------------------------------------------------------------------- ricci

struct RicciArgs {
    std::string surface;
    std::string k = "0,1";
    std::string kind;
    double rmax = 300.0;
    double step = 50.0;
    int lmax = 200;
    std::string field = "e03";
};

int cmd_ricci(const GlobalOptions& g, const RicciArgs& a) {
    ordered_json rec;
    const double scale = convention_scale(g, a.surface);

    if (a.surface == "klein" || a.surface == "torus") {
        const LatticeMode k = parse_mode(a.k);
        const bool torus = (a.surface == "torus");
        rec["direction"] = {{"surface", a.surface}, {"k", {k.k1, k.k2}}};
        rec["analytic"] = scale * ricci_analytic(k, g.torus_area);
        rec["partial_sums"] = ordered_json::array();
        std::vector<RicciPartialSum> sums;
        if (torus) {
            // direction zeta_k = cos(k.x), averaged over the torus eigenbasis
            sums = torus_ricci_partial_sums(k, a.rmax, a.step, g.threads, g.torus_area);
        } else {
            const auto xi = make_basis_element(kind_from_string(a.kind, k), k);
            rec["direction"]["kind"] = to_string(xi.kind);
            sums = ricci_partial_sums(xi, a.rmax, a.step, g.threads, g.torus_area);
        }
        for (const auto& ps : sums) {
            rec["partial_sums"].push_back(
                {{"R", ps.radius}, {"count", ps.count}, {"value", scale * ps.value}});
        }
        const double kappa = std::atan2(static_cast<double>(k.k2), static_cast<double>(k.k1));
        rec["diagnostics"] = {
            {"torus_area", g.torus_area},
            {"f_lambda_average_R200", f_lambda_average(kappa, 200.0)},
        };
    } else if (a.surface == "sphere" || a.surface == "rp2") {
        const SphereField f = field_from_string(a.field);
        const Surface surf = (a.surface == "rp2") ? Surface::RP2 : Surface::S2;
        rec["direction"] = {{"surface", a.surface}, {"field", a.field}};
        rec["analytic"] = scale * ricci_analytic_sphere(f, surf);
        const auto est = ricci_numeric_estimate(f, surf, a.lmax);
        rec["partial_sums"] = ordered_json::array();
        rec["diagnostics"] = {
            {"empirical_average", scale * est.empirical_average},
            {"profile_average", scale * est.profile_average},
            {"profile_integral", scale * est.profile_integral},
            {"count", est.count},
            {"l_min", est.l_min},
            {"l_max", est.l_max},
            {"odd_l_only", est.odd_only},
            {"note",
             "diagnostic pair only: the averaged asymptotic profile is about half the "
             "profile integral; no pass/fail is attached to the numeric average"},
        };
    } else {
        throw precondition_error("unknown surface: " + a.surface);
    }

    if (g.format == "csv") {
        std::ostringstream os;
        os << "R,count,value\n";
        for (const auto& ps : rec["partial_sums"]) {
            os << ps["R"].get<double>() << ',' << ps["count"].get<long>() << ','
               << fmt17(ps["value"].get<double>()) << "\n";
        }
        write_output(g, os.str());
    } else {
        write_output(g, rec.dump(2) + "\n");
    }
    return kExitOk;
}

// ------------------------------------------------------------------ weather

struct WeatherArgs {
    std::string rescale;  // empty: both
    std::string config;
};

ordered_json weather_record(const std::string& name, const WeatherScenario& s) {
    return {{"name", name},
            {"rescale", to_string(s.rescale)},
            {"alpha", alpha(s)},
            {"k", digits_per_month(s)}};
}

void weather_table(std::ostream& os, Rescale r) {
    os << "rescale = " << to_string(r) << " (c_M from "
       << (r == Rescale::equator ? "the 40 000 km equator" : "the 5.1e8 km^2 area") << ")\n";
    char line[160];
    std::snprintf(line, sizeof(line), "  %-16s %10s %12s %10s %10s %8s\n", "model", "|v|",
                  "Ric(v)", "|v|_rapid", "alpha", "k");
    os << line;
    for (PresetName p : {PresetName::klein, PresetName::torus, PresetName::rp2,
                         PresetName::sphere_e03, PresetName::sphere_e02_ric,
                         PresetName::sphere_e02_inf}) {
        const WeatherScenario s = preset(p, r);
        std::snprintf(line, sizeof(line), "  %-16s %10.4f %12.6f %10.4f %10.4f %8.4f\n",
                      to_string(p), s.norm_v, s.ricci, s.v_rapid, alpha(s),
                      digits_per_month(s));
        os << line;
    }
}

int cmd_weather(const GlobalOptions& g, const WeatherArgs& a) {
    std::ostringstream os;

    if (!a.config.empty()) {
        std::ifstream f(a.config);
        if (!f) throw std::ios_base::failure("cannot open config file: " + a.config);
        const WeatherScenario s = scenario_from_config(f);
        if (g.format == "json") {
            os << weather_record("custom", s).dump(2) << "\n";
        } else {
            os << "custom scenario (" << to_string(s.rescale) << " rescale): alpha = "
               << fmt17(alpha(s)) << ", k = " << fmt17(digits_per_month(s)) << "\n";
        }
        write_output(g, os.str());
        return kExitOk;
    }

    std::vector<Rescale> rescales;
    if (a.rescale.empty()) {
        rescales = {Rescale::equator, Rescale::area};
    } else {
        rescales = {rescale_from_string(a.rescale)};
    }

    if (g.format == "json") {
        ordered_json arr = ordered_json::array();
        for (Rescale r : rescales) {
            for (PresetName p : {PresetName::klein, PresetName::torus, PresetName::rp2,
                                 PresetName::sphere_e03, PresetName::sphere_e02_ric,
                                 PresetName::sphere_e02_inf}) {
                arr.push_back(weather_record(to_string(p), preset(p, r)));
            }
        }
        os << arr.dump(2) << "\n";
    } else if (g.format == "csv") {
        os << "name,rescale,alpha,k\n";
        for (Rescale r : rescales) {
            for (PresetName p : {PresetName::klein, PresetName::torus, PresetName::rp2,
                                 PresetName::sphere_e03, PresetName::sphere_e02_ric,
                                 PresetName::sphere_e02_inf}) {
                const WeatherScenario s = preset(p, r);
                os << to_string(p) << ',' << to_string(r) << ',' << fmt17(alpha(s)) << ','
                   << fmt17(digits_per_month(s)) << "\n";
            }
        }
    } else {
        for (Rescale r : rescales) {
            weather_table(os, r);
            os << "\n";
        }
        os << "notes:\n"
           << "  - the e03 models use |v|_rapid = (2/3) sqrt(14/(5 S_RP2)) = "
           << fmt17(preset(PresetName::sphere_e03, Rescale::equator).v_rapid)
           << "; the variant without the 2/3 factor, sqrt(28/(5 S_S2)) = "
           << fmt17(std::sqrt(28.0 / (5.0 * 4.0 * std::numbers::pi)))
           << ", does not reproduce the tabulated k values\n"
           << "  - sphere_e02_ric uses the Ricci curvature -3/S_S2; sphere_e02_inf the "
              "quarter-infimum estimate -15/(32 pi)\n"
           << "  - alpha and k are invariant under the norm convention for the "
              "non-orientable models\n";
    }
    write_output(g, os.str());
    return kExitOk;
}

// ------------------------------------------------------------- oracle-check

struct OracleCheckArgs {
    double radius = 6.0;
    double tolerance = 1e-9;
};

double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-3});
}

int cmd_oracle_check(const GlobalOptions& g, const OracleCheckArgs& a) {
    std::ostringstream os;
    double worst_klein = 0.0;
    double worst_torus = 0.0;
    long planes = 0;

    // Klein: every ordered basis pair within the radius.
    const auto basis = enumerate_basis(a.radius);
    std::vector<double> worst_slot(basis.size(), 0.0);
    std::vector<long> count_slot(basis.size(), 0);
    parallel_for_indexed(basis.size(), g.threads, [&](std::size_t i) {
        const auto& xi = basis[i];
        const FourierVector xi_f = xi.expand(g.torus_area);
        for (const auto& el : basis) {
            if (el.k == xi.k && el.kind == xi.kind) continue;
            const FourierVector eta = el.expand(g.torus_area);
            const double closed = sectional_klein(xi, eta);
            const double tensor = sectional_curvature_oracle(xi_f, eta, OracleMethod::tensor);
            const double shrt = sectional_curvature_oracle(xi_f, eta, OracleMethod::short_formula);
            worst_slot[i] = std::max({worst_slot[i], rel_gap(closed, tensor),
                                      rel_gap(closed, shrt)});
            ++count_slot[i];
        }
    });
    for (std::size_t i = 0; i < basis.size(); ++i) {
        worst_klein = std::max(worst_klein, worst_slot[i]);
        planes += count_slot[i];
    }
    const long klein_planes = planes;

    // Torus: zeta_k against the cos/sin pair elements.
    std::vector<LatticeMode> reps;
    const int rmax = static_cast<int>(a.radius);
    for (int k1 = -rmax; k1 <= rmax; ++k1) {
        for (int k2 = -rmax; k2 <= rmax; ++k2) {
            const LatticeMode k{k1, k2};
            if (k.is_zero() || norm2(k) > a.radius * a.radius) continue;
            if (k1 < 0 || (k1 == 0 && k2 < 0)) continue;  // one per +-k pair
            reps.push_back(k);
        }
    }
    std::vector<double> tslot(reps.size(), 0.0);
    std::vector<long> tcount(reps.size(), 0);
    parallel_for_indexed(reps.size(), g.threads, [&](std::size_t i) {
        const LatticeMode k = reps[i];
        for (const LatticeMode l : reps) {
            for (const bool sin_family : {false, true}) {
                if (l == k && !sin_family) continue;  // parallel to zeta_k
                const FourierVector eta = sin_family ? sin_mode(l, g.torus_area)
                                                     : cos_mode(l, g.torus_area);
                const double closed = sectional_torus(k, eta);
                const FourierVector zeta = cos_mode(k, g.torus_area);
                const double tensor = sectional_curvature_oracle(zeta, eta, OracleMethod::tensor);
                const double shrt =
                    sectional_curvature_oracle(zeta, eta, OracleMethod::short_formula);
                tslot[i] = std::max({tslot[i], rel_gap(closed, tensor), rel_gap(closed, shrt)});
                ++tcount[i];
            }
        }
    });
    for (std::size_t i = 0; i < reps.size(); ++i) {
        worst_torus = std::max(worst_torus, tslot[i]);
        planes += tcount[i];
    }

    const bool ok = worst_klein <= a.tolerance && worst_torus <= a.tolerance;
    os << "oracle check, radius " << a.radius << ": " << planes << " planes ("
       << klein_planes << " klein, " << planes - klein_planes << " torus)\n"
       << "  worst closed-vs-oracle relative gap, klein: " << fmt17(worst_klein) << "\n"
       << "  worst closed-vs-oracle relative gap, torus: " << fmt17(worst_torus) << "\n"
       << "  tolerance " << fmt17(a.tolerance) << ": " << (ok ? "OK" : "FAILED") << "\n";
    write_output(g, os.str());
    return ok ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------- harmonics-check

struct HarmonicsCheckArgs {
    int lmax = 6;
    double ortho_tol = 1e-8;
    double parity_tol = 1e-10;
};

int cmd_harmonics_check(const GlobalOptions& g, const HarmonicsCheckArgs& a) {
    std::ostringstream os;
    double worst_ortho = 0.0;
    double worst_parity = 0.0;
    long checked = 0;
    for (int l = 0; l <= a.lmax; ++l) {
        for (int m = -l; m <= l; ++m) {
            worst_parity = std::max(worst_parity, harmonic_parity_residual(l, m));
            for (int lp = 0; lp <= a.lmax; ++lp) {
                for (int mp = -lp; mp <= lp; ++mp) {
                    const double expected = (l == lp && m == mp) ? 1.0 : 0.0;
                    const auto ip = harmonic_inner_product(l, m, lp, mp);
                    worst_ortho = std::max(worst_ortho, std::abs(ip - expected));
                    ++checked;
                }
            }
        }
    }
    const bool ok = worst_ortho <= a.ortho_tol && worst_parity <= a.parity_tol;
    os << "harmonics check, l <= " << a.lmax << ": " << checked << " inner products\n"
       << "  worst orthonormality residual: " << fmt17(worst_ortho) << " (tol "
       << fmt17(a.ortho_tol) << ")\n"
       << "  worst antipodal parity residual: " << fmt17(worst_parity) << " (tol "
       << fmt17(a.parity_tol) << ")\n"
       << "  " << (ok ? "OK" : "FAILED") << "\n";
    write_output(g, os.str());
    return ok ? kExitOk : kExitVerification;
}

}  // namespace

int run(int argc, const char* const* argv) {
    GlobalOptions g;
    CLI::App app{"sectional and Ricci curvatures of measure-preserving diffeomorphism "
                 "groups of the torus, Klein bottle, sphere and projective plane"};
    app.require_subcommand(1);
    // let global flags (--out, --threads, ...) be given after the subcommand
    app.fallthrough();
    app.add_option("--torus-area", g.torus_area, "area S_T of the torus cover")
        ->capture_default_str();
    app.add_option("--norm-convention", g.norm_convention,
                   "isometric (cover norm) or half (quotient norm; doubles reported "
                   "curvatures on klein/rp2)")
        ->check(CLI::IsMember({"isometric", "half"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "write output to a file instead of stdout");
    app.add_option("--threads", g.threads, "worker threads for sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", g.format, "output format (csv or json)")
        ->check(CLI::IsMember({"csv", "json"}));

    CurvatureArgs ca;
    auto* curvature = app.add_subcommand("curvature", "one sectional curvature value");
    curvature->add_option("--surface", ca.surface, "klein|torus|sphere|rp2")->required();
    curvature->add_option("--k", ca.k, "index of the fixed element (klein/torus)");
    curvature->add_option("--eta", ca.eta, "index of the second element (klein/torus)");
    curvature->add_option("--kind", ca.kind, "basis kind of xi (re|im|cos-cos|...)");
    curvature->add_option("--eta-kind", ca.eta_kind,
                          "basis kind of eta (klein: re|im|cos-cos|...; torus: cos|sin)");
    curvature->add_option("--field", ca.field, "sphere/rp2 field: e01|e02|e03");
    curvature->add_option("--lm", ca.lm, "sphere/rp2 harmonic index l,m");

    BlanketArgs ba;
    auto* blanket = app.add_subcommand("blanket", "curvature sweep as a CSV table");
    blanket->add_option("--surface", ba.surface, "klein|sphere|rp2")->required();
    blanket->add_option("--k", ba.k, "klein: index of xi")->capture_default_str();
    blanket->add_option("--kind", ba.kind, "klein: basis kind of xi");
    blanket->add_option("--radius", ba.radius, "klein: basis radius R")->capture_default_str();
    blanket->add_option("--lmax", ba.lmax, "sphere/rp2: largest degree l")
        ->capture_default_str();
    blanket->add_option("--field", ba.field, "sphere/rp2 field")->capture_default_str();

    RicciArgs ra;
    auto* ricci = app.add_subcommand("ricci", "normalized Ricci curvature report");
    ricci->add_option("--surface", ra.surface, "klein|torus|sphere|rp2")->required();
    ricci->add_option("--k", ra.k, "klein/torus: direction index")->capture_default_str();
    ricci->add_option("--kind", ra.kind, "klein/torus: basis kind");
    ricci->add_option("--rmax", ra.rmax, "klein/torus: largest partial-sum radius")
        ->capture_default_str();
    ricci->add_option("--step", ra.step, "klein/torus: radius step")->capture_default_str();
    ricci->add_option("--lmax", ra.lmax, "sphere/rp2: largest degree in the average")
        ->capture_default_str();
    ricci->add_option("--field", ra.field, "sphere/rp2 field: e02|e03")->capture_default_str();

    WeatherArgs wa;
    auto* weather = app.add_subcommand("weather", "error-growth exponents per model");
    weather->add_option("--rescale", wa.rescale, "equator|area (default: both)")
        ->check(CLI::IsMember({"equator", "area"}));
    weather->add_option("--config", wa.config, "key=value scenario file");

    OracleCheckArgs oa;
    auto* oracle = app.add_subcommand("oracle-check",
                                      "closed forms vs curvature-tensor oracles");
    oracle->add_option("--radius", oa.radius, "basis radius")->capture_default_str();
    oracle->add_option("--tolerance", oa.tolerance, "relative tolerance")
        ->capture_default_str();

    HarmonicsCheckArgs ha;
    auto* harm = app.add_subcommand("harmonics-check",
                                    "spherical-harmonic orthonormality and parity");
    harm->add_option("--lmax", ha.lmax, "largest degree")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitPrecondition;
    }

    try {
        if (*curvature) return cmd_curvature(g, ca);
        if (*blanket) return cmd_blanket(g, ba);
        if (*ricci) return cmd_ricci(g, ra);
        if (*weather) return cmd_weather(g, wa);
        if (*oracle) return cmd_oracle_check(g, oa);
        if (*harm) return cmd_harmonics_check(g, ha);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitPrecondition;
}

}  // namespace sdiff::cli
