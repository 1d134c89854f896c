#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "susy/numkit.hpp"

namespace susy {

// Radial position-dependent-mass problems  -f phi'' + (f l(l+1)/x^2 + V) phi = E phi.

enum class PdmApproach { Direct, TwoStep, Both, Special };

// Shape-invariant families reached after the change of variables, written in the family
// coordinate u >= 0 measured from one end of the y interval:
//   Oscillator3D     c0 + c1/u^2 + c2 u^2
//   Coulomb          c0 + c1/u^2 + c2/u
//   Eckart           c0 + c1 csch^2(s u) + c2 coth(s u)
//   HyperbolicPT     c0 + c1 csch^2(s u) + c2 sech^2(s u)
//   TrigonometricPT  c0 + c1 csc^2(s u)  + c2 sec^2(s u)
//   TrigonometricRM  c0 + c1 csc^2(s u)  + c2 cot(s u)
enum class EffectiveFamily { Oscillator3D, Coulomb, Eckart, HyperbolicPT, TrigonometricPT, TrigonometricRM };

std::string to_string(EffectiveFamily f);
std::string to_string(PdmApproach a);

struct PdmParams {
    double alpha = 1.0;
    double nu = 0.0;
    int l = 0;
    double L() const { return double(l) * (l + 1); }
};

// One analytic route. Each c_i is linear in the features (1, alpha, L, E, nu E).
struct EffectiveRoute {
    EffectiveFamily family = EffectiveFamily::Coulomb;
    double scale = 1.0;
    double coef[3][5] = {};
    bool origin_at_hi = false; // u is measured from the end that maps to x_hi
    double x_lo = 0.0, x_hi = std::numeric_limits<double>::infinity();
    bool formal = false;       // the domain reaches past the region where the original f is positive
    // two-step only: f / |v| and 1 / v in closed form, regular where f and v share a pole or zero
    std::function<Jet(const Jet&, double nu)> mass;
    std::function<double(double x, double nu)> inv_v;

    double coefficient(int i, const PdmParams& p, double E) const;
};

struct PdmSystem {
    std::string id; // "t1.1" .. "t2.10", "fV1" .. "fV4"
    int table = 0, item = 0;
    std::string f_text, v_text, effective_kind;
    PdmApproach approach = PdmApproach::Direct;
    double x_lo = 0.0, x_hi = std::numeric_limits<double>::infinity();
    std::string branch;
    double x_ref = 1.0;
    bool coupled = true;  // V = alpha v(x); the special rows carry V itself
    double v_sign = 1.0;  // sign of v on the working domain (large-x sign for formal routes)
    std::function<double(double nu)> lower; // nu-dependent lower end of the working domain, if any
    std::function<Jet(const Jet&, double nu)> f;
    std::function<Jet(const Jet&, double nu)> v;
    std::optional<EffectiveRoute> direct, two_step;

    double domain_lo(double nu) const { return lower ? lower(nu) : x_lo; }
    double V(double x, const PdmParams& p) const {
        const double s = v(Jet(x), p.nu).v;
        return coupled ? p.alpha * s : s;
    }
    nlohmann::json to_json() const;
};

const std::vector<PdmSystem>& pdm_catalog();
const PdmSystem& pdm_row(const std::string& id);

// ---- radial reduction -------------------------------------------------------------

struct PdmRadial {
    const PdmSystem* system = nullptr;
    PdmParams params;
    // Psi = sqrt(f) psi turns p f p + V into the f-weighted form; the similarity is kept as data.
    std::string similarity = "Psi = sqrt(f) psi";

    double f(double x) const;
    double potential(double x) const; // f l(l+1)/x^2 + V
    // (-f phi'' + potential phi - E phi)(x) for a twice-differentiable trial phi given as a jet.
    double residual(const std::function<Jet(const Jet&)>& phi, double E, double x) const;
};

PdmRadial radial_reduce(const PdmSystem& sys, const PdmParams& p);

// ---- Liouville transforms -----------------------------------------------------------

// -F phi'' + (q0 + E q1) phi = lambda phi, mapped to -Phi''(y) + Vt(y) Phi = lambda Phi with
// dy/dx = F^{-1/2}, Phi = F^{1/4} phi. For the direct route lambda = E and q1 = 0; for the
// two-step route the roles swap and lambda = target = -sign(v) alpha for every trial E.
struct EffectiveProblem {
    std::function<Jet(const Jet&)> mass;
    std::function<double(double)> q0, q1;
    double x_lo = 0.0, x_hi = 0.0, x_ref = 1.0;
    bool two_step = false;
    double trial_energy = 0.0; // the E the two-step problem was built for
    double target = std::numeric_limits<double>::quiet_NaN();
    std::string bookkeeping;

    // Vt at the point x of the original variable.
    double potential_at(double x, double E) const;
    // y(x) - y(x_ref) by quadrature; +-inf at ends where the integral diverges.
    double y_of_x(double x) const;
    double y_lo() const { return y_of_x(x_lo); }
    double y_hi() const { return y_of_x(x_hi); }
    // x at increasing y values (relative to y(x_ref) = 0), by integrating dx/dy = sqrt(F).
    std::vector<double> x_of_y(const std::vector<double>& ys) const;
};

EffectiveProblem direct_transform(const PdmRadial& r);
// Throws config_error when v changes sign on a non-formal two-step domain.
EffectiveProblem two_step_transform(const PdmRadial& r, double E);
std::vector<EffectiveProblem> two_step_transform(const PdmRadial& r, const std::vector<double>& energies);

// ---- analytic levels -------------------------------------------------------------------

// Level n of the family with coefficients (c0, c1, c2); nullopt when it is not a bound state.
std::optional<double> family_level(EffectiveFamily f, double scale, double c0, double c1, double c2, int n);
// Family potential at coordinate u.
double family_potential(EffectiveFamily f, double scale, double c0, double c1, double c2, double u);

enum class Route { Direct, TwoStep };

// Level n through the given route. For the two-step route the physical E solves
// level_n(E) = -sign(v) alpha; when two admissible roots exist the lower one is taken.
std::optional<double> analytic_level(const PdmSystem& sys, Route route, const PdmParams& p, int n);

// (2l+3+4n)^2 (nu - sqrt(nu^2 + 1 + (alpha - 4)/(2l+3+4n)^2)); domain_error on a negative discriminant.
double item10_energy(double alpha, double nu, int l, int n);

// ---- numeric levels ----------------------------------------------------------------------

struct NumericOptions {
    int m = 3000;           // coarse grid nodes; a 2m grid is added for Richardson extrapolation
    double window = 0.0;    // y length kept past the reference point on infinite sides; 0 picks it by WKB
    double wkb_exponent = 40.0;
    // inverse length the grid must resolve (0: none); m is raised to nodes_per_scale * span * scale
    double scale = 0.0;
    double nodes_per_scale = 60.0;
};

// Lowest k eigenvalues of the effective problem (direct: energies; two-step: lambda at the trial E).
std::vector<double> effective_levels(const EffectiveProblem& ep, int k, const NumericOptions& opt = {},
                                     double wkb_energy = std::numeric_limits<double>::quiet_NaN());

// Physical levels 0..k-1 by eigen-solving the Liouville-transformed problem of the route.
// The two-step route root-finds lambda_n(E) = target around the analytic root.
std::vector<double> numeric_levels(const PdmSystem& sys, Route route, const PdmParams& p, int k,
                                   const NumericOptions& opt = {});

// ---- spectra -------------------------------------------------------------------------------

struct PdmLevel {
    int n = 0;
    double e_analytic = 0.0;
    double e_numeric = std::numeric_limits<double>::quiet_NaN();
    double err = std::numeric_limits<double>::quiet_NaN();
};

struct PdmSpectrum {
    std::string id;
    PdmParams params;
    int multiplicity = 1; // 2l + 1
    Route analytic_route = Route::Direct;
    Route numeric_route = Route::Direct;
    std::vector<PdmLevel> levels;

    double max_rel_err() const;
    std::string to_csv() const;
    nlohmann::json to_json() const;
};

PdmSpectrum pdm_spectrum(const PdmSystem& sys, const PdmParams& p, int n_max, const NumericOptions& opt = {},
                         bool numeric = true);

} // namespace susy
