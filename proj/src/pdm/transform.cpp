#include "susy/pdm.hpp"

#include <array>
#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/numeric/odeint.hpp>

namespace susy {

namespace {

namespace ode = boost::numeric::odeint;
using State = std::array<double, 1>;

// Interior sample points of (lo, hi), hi possibly infinite.
std::vector<double> domain_samples(double lo, double hi, int n) {
    std::vector<double> xs;
    for (int k = 1; k <= n; ++k) {
        const double t = double(k) / (n + 1);
        xs.push_back(std::isinf(hi) ? lo + (1.0 + std::abs(lo)) * t / (1.0 - t) : lo + (hi - lo) * t);
    }
    return xs;
}

// Local power q of F near an end: F ~ d^q at a finite end, F ~ x^q at infinity.
double end_power(const std::function<Jet(const Jet&)>& F, double end) {
    if (std::isinf(end)) {
        const double x1 = 1e7, x2 = 1e8;
        return std::log(F(Jet(x2)).v / F(Jet(x1)).v) / std::log(x2 / x1);
    }
    const double s = 1.0 + std::abs(end), d1 = 1e-7 * s, d2 = 1e-6 * s;
    return std::log(F(Jet(end + d2)).v / F(Jet(end + d1)).v) / std::log(d2 / d1);
}

} // namespace

double PdmRadial::f(double x) const { return system->f(Jet(x), params.nu).v; }

double PdmRadial::potential(double x) const { return f(x) * params.L() / (x * x) + system->V(x, params); }

double PdmRadial::residual(const std::function<Jet(const Jet&)>& phi, double E, double x) const {
    const Jet p = phi(Jet::variable(x));
    return -f(x) * p.dd + (potential(x) - E) * p.v;
}

PdmRadial radial_reduce(const PdmSystem& sys, const PdmParams& p) {
    if (p.l < 0) throw config_error("pdm: l must be >= 0");
    PdmRadial r;
    r.system = &sys;
    r.params = p;
    return r;
}

double EffectiveProblem::potential_at(double x, double E) const {
    const Jet F = mass(Jet::variable(x));
    const double g = F.d / (4.0 * F.v);
    const double gp = (F.dd * F.v - F.d * F.d) / (4.0 * F.v * F.v);
    return q0(x) + E * q1(x) - F.v * (g * g + gp);
}

double EffectiveProblem::y_of_x(double x) const {
    if (x == x_ref) return 0.0;
    const bool at_end = x <= x_lo || x >= x_hi;
    if (at_end) {
        const double q = end_power(mass, x);
        const bool diverges = std::isinf(x) ? q <= 2.0 + 1e-3 : q >= 2.0 - 1e-3;
        if (diverges) return x < x_ref ? -std::numeric_limits<double>::infinity()
                                       : std::numeric_limits<double>::infinity();
    }
    auto integrand = [this](double t) {
        const double F = mass(Jet(t)).v;
        // rational masses overflow to inf/inf far out on a convergent tail
        if (std::isnan(F) && std::abs(t) > 1e30) return 0.0;
        return 1.0 / std::sqrt(F);
    };
    if (std::isinf(x)) {
        boost::math::quadrature::exp_sinh<double> q;
        return q.integrate(integrand, x_ref, x, 1e-13);
    }
    boost::math::quadrature::tanh_sinh<double> q;
    const double lo = std::min(x, x_ref), hi = std::max(x, x_ref);
    const double v = q.integrate(integrand, lo, hi, 1e-13);
    return x < x_ref ? -v : v;
}

std::vector<double> EffectiveProblem::x_of_y(const std::vector<double>& ys) const {
    auto rhs = [this](const State& s, State& ds, double) {
        const double F = mass(Jet(s[0])).v;
        if (!(F > 0.0)) throw convergence_error("pdm: Liouville map left the domain where the mass is positive");
        ds[0] = std::sqrt(F);
    };
    std::vector<double> out(ys.size());
    auto sweep = [&](long from, long to, long dir) {
        auto stepper = ode::make_controlled(1e-13, 1e-13, ode::runge_kutta_dopri5<State>());
        State s{x_ref};
        double y = 0.0;
        for (long j = from; j != to; j += dir) {
            const double target = ys[j];
            if (target != y) ode::integrate_adaptive(stepper, rhs, s, y, target, 0.01 * (target - y));
            y = target;
            out[j] = s[0];
        }
    };
    long split = 0;
    while (split < long(ys.size()) && ys[split] < 0.0) ++split;
    sweep(split - 1, -1, -1);
    sweep(split, long(ys.size()), 1);
    return out;
}

EffectiveProblem direct_transform(const PdmRadial& r) {
    const PdmSystem& sys = *r.system;
    const double nu = r.params.nu;
    EffectiveProblem ep;
    ep.x_lo = sys.domain_lo(nu);
    ep.x_hi = sys.x_hi;
    ep.x_ref = ep.x_lo + 1.0;
    for (double x : domain_samples(ep.x_lo, ep.x_hi, 200))
        if (!(sys.f(Jet(x), nu).v > 0.0))
            throw config_error(sys.id + ": f is not positive on the working domain " + sys.branch +
                               " (nu = " + std::to_string(nu) + ")");
    const PdmSystem* s = &sys;
    const PdmRadial rr = r;
    ep.mass = [s, nu](const Jet& x) { return s->f(x, nu); };
    ep.q0 = [rr](double x) { return rr.potential(x); };
    ep.q1 = [](double) { return 0.0; };
    ep.bookkeeping = "Phi = f^(1/4) phi, dy/dx = f^(-1/2); eigenvalue E";
    return ep;
}

EffectiveProblem two_step_transform(const PdmRadial& r, double E) {
    const PdmSystem& sys = *r.system;
    if (!sys.two_step) throw config_error(sys.id + ": the two-step approach is not available for this row");
    const EffectiveRoute& rt = *sys.two_step;
    const double nu = r.params.nu, L = r.params.L(), sigma = sys.v_sign;
    EffectiveProblem ep;
    ep.x_lo = rt.x_lo;
    ep.x_hi = rt.x_hi;
    ep.x_ref = rt.x_lo + 1.0;
    if (!rt.formal)
        for (double x : domain_samples(ep.x_lo, ep.x_hi, 200))
            if (!(sigma * sys.v(Jet(x), nu).v > 0.0))
                throw config_error(sys.id + ": V changes sign on the working domain; the role swap is ill-defined");
    auto mass = rt.mass;
    auto inv_v = rt.inv_v;
    ep.mass = [mass, nu](const Jet& x) { return mass(x, nu); };
    ep.q0 = [mass, nu, L](double x) { return mass(Jet(x), nu).v * L / (x * x); };
    ep.q1 = [inv_v, nu, sigma](double x) { return -sigma * inv_v(x, nu); };
    ep.two_step = true;
    ep.trial_energy = E;
    ep.target = -sigma * r.params.alpha;
    ep.bookkeeping = std::string("f -> f/|v|, V -> -E/|v|, eigenvalue -> ") + (sigma > 0 ? "-alpha" : "alpha") +
                     (rt.formal ? "; formal domain x > 0" : "");
    return ep;
}

std::vector<EffectiveProblem> two_step_transform(const PdmRadial& r, const std::vector<double>& energies) {
    std::vector<EffectiveProblem> out;
    out.reserve(energies.size());
    for (double E : energies) out.push_back(two_step_transform(r, E));
    return out;
}

} // namespace susy
