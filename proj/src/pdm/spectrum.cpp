#include "susy/pdm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <boost/math/tools/roots.hpp>

namespace susy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
using F = EffectiveFamily;

// A with A(A-1) = k; nullopt below the Frobenius bound.
std::optional<double> upper_index(double k) {
    if (k < -0.25) return std::nullopt;
    return 0.5 + std::sqrt(0.25 + k);
}

// ---- two-step roots -----------------------------------------------------------------

std::vector<double> scan_energies() {
    std::vector<double> es;
    const int per_sign = 1600;
    for (int i = per_sign; i >= 0; --i) es.push_back(-std::pow(10.0, -8.0 + 17.0 * i / per_sign));
    for (int i = 0; i <= per_sign; ++i) es.push_back(std::pow(10.0, -8.0 + 17.0 * i / per_sign));
    return es;
}

bool monotone(const std::function<std::optional<double>(double)>& g, double a, double b) {
    double prev = *g(a);
    int dir = 0;
    for (int k = 1; k <= 8; ++k) {
        const auto v = g(a + (b - a) * k / 8.0);
        if (!v) return false;
        const int d = *v > prev ? 1 : (*v < prev ? -1 : 0);
        if (d != 0 && dir != 0 && d != dir) return false;
        if (d != 0) dir = d;
        prev = *v;
    }
    return true;
}

double bisect(const std::function<std::optional<double>(double)>& g, double a, double b) {
    double ga = *g(a);
    for (int it = 0; it < 300 && std::abs(b - a) > 1e-10 * std::max(1.0, std::abs(a)); ++it) {
        const double c = 0.5 * (a + b);
        const double gc = *g(c);
        if (gc == 0.0) return c;
        if ((gc < 0.0) == (ga < 0.0)) {
            a = c;
            ga = gc;
        } else {
            b = c;
        }
    }
    return 0.5 * (a + b);
}

void collect_roots(const std::function<std::optional<double>(double)>& g, double a, double b, int depth,
                   std::vector<double>& roots) {
    const auto ga = g(a), gb = g(b);
    if (!ga || !gb) return;
    if (*ga == 0.0) {
        roots.push_back(a);
        return;
    }
    if ((*ga < 0.0) == (*gb < 0.0)) return;
    if (monotone(g, a, b) || depth == 0) {
        roots.push_back(bisect(g, a, b));
        return;
    }
    for (int k = 0; k < 8; ++k) collect_roots(g, a + (b - a) * k / 8.0, a + (b - a) * (k + 1) / 8.0, depth - 1, roots);
}

// ---- numeric grids ----------------------------------------------------------------------

struct Plan {
    double a = 0.0, b = 0.0;   // y interval relative to y(x_ref) = 0
    double pL = 0.0, pR = 0.0; // Frobenius exponents at finite ends; 0 at truncated ends
};

// y length to keep on an infinite side: until the WKB exponent above e reaches the bound, or until
// x closes in on a finite end point closer than doubles resolve.
double wkb_window(const EffectiveProblem& ep, int dir, double E, double e, const NumericOptions& opt) {
    if (opt.window > 0.0) return opt.window;
    if (!std::isfinite(e)) return 30.0;
    const double x_end = dir < 0 ? ep.x_lo : ep.x_hi;
    double t = 0.0, S = 0.0, step = 1e-3;
    double x = ep.x_ref;
    while (t < 5e3) {
        const double t1 = t + step;
        const double x1 = ep.x_of_y({dir * t1})[0];
        (void)x;
        x = x1;
        if (std::isfinite(x_end) && std::abs(x1 - x_end) < 1e-9 * std::max(1.0, std::abs(x_end))) return t;
        const double v = ep.potential_at(x1, E);
        if (v > e) S += std::sqrt(v - e) * step;
        t = t1;
        if (S >= opt.wkb_exponent) return t;
        step = std::min(step * 1.1, 0.02 * (1.0 + t));
    }
    return t;
}

double end_coefficient(const EffectiveProblem& ep, double y_end, int dir, double span, double E) {
    // d^2 Vt(d) = c + O(d); two distances remove the linear term
    const double d1 = 1e-5 * span, d2 = 2.0 * d1;
    const std::vector<double> ys = dir < 0 ? std::vector<double>{y_end + d1, y_end + d2}
                                           : std::vector<double>{y_end - d2, y_end - d1};
    const auto xs = ep.x_of_y(ys);
    const double x1 = dir < 0 ? xs[0] : xs[1], x2 = dir < 0 ? xs[1] : xs[0];
    const double c1 = d1 * d1 * ep.potential_at(x1, E), c2 = d2 * d2 * ep.potential_at(x2, E);
    return 2.0 * c1 - c2;
}

Plan make_plan(const EffectiveProblem& ep, const NumericOptions& opt, double E, double e_wkb) {
    Plan P;
    const double yl = ep.y_lo(), yh = ep.y_hi();
    P.a = std::isfinite(yl) ? yl : -wkb_window(ep, -1, E, e_wkb, opt);
    P.b = std::isfinite(yh) ? yh : wkb_window(ep, +1, E, e_wkb, opt);
    const double span = P.b - P.a;
    if (std::isfinite(yl)) P.pL = frobenius_exponent(std::max(-0.25, end_coefficient(ep, yl, -1, span, E)));
    if (std::isfinite(yh)) P.pR = frobenius_exponent(std::max(-0.25, end_coefficient(ep, yh, +1, span, E)));
    return P;
}

struct Sampled {
    Plan plan;
    int m = 0;
    double h = 0.0, oL = 1.0;
    std::vector<double> v0, v1;
};

Sampled sample(const EffectiveProblem& ep, const Plan& P, int m) {
    Sampled s;
    s.plan = P;
    s.m = m;
    s.oL = P.pL != 0.0 ? 0.5 : 1.0;
    const double oR = P.pR != 0.0 ? 0.5 : 1.0;
    s.h = (P.b - P.a) / (m - 1 + s.oL + oR);
    std::vector<double> ys(m);
    for (int j = 0; j < m; ++j) ys[j] = P.a + s.h * (s.oL + j);
    const auto xs = ep.x_of_y(ys);
    s.v0.resize(m);
    s.v1.resize(m);
    for (int j = 0; j < m; ++j) {
        s.v0[j] = ep.potential_at(xs[j], 0.0);
        s.v1[j] = ep.q1(xs[j]);
    }
    return s;
}

std::vector<double> sampled_levels(const Sampled& s, double E, int k) {
    const double a = s.plan.a, h = s.h, oL = s.oL;
    auto V = [&](double t) {
        const long j = std::lround((t - a) / h - oL);
        return s.v0[j] + E * s.v1[j];
    };
    const auto P = regularized_schrodinger(s.plan.a, s.plan.b, s.m, V, s.plan.pL, s.plan.pR);
    return eigenvalues_banded(P.op, k);
}

// Richardson-combined levels from an m and a 2m grid.
struct GridPair {
    Sampled coarse, fine;
    std::vector<double> levels(double E, int k) const {
        const auto c = sampled_levels(coarse, E, k), f = sampled_levels(fine, E, k);
        // an end with Frobenius exponent p < 1 makes the leading error O(h^{2p}) instead of O(h^2)
        double q = 2.0;
        for (double p : {fine.plan.pL, fine.plan.pR})
            if (p > 0.0) q = std::min(q, 2.0 * p);
        const double r = std::pow(2.0, q);
        std::vector<double> out(k);
        for (int i = 0; i < k; ++i) out[i] = (r * f[i] - c[i]) / (r - 1.0);
        return out;
    }
};

GridPair grids(const EffectiveProblem& ep, const NumericOptions& opt, double E, double e_wkb) {
    if (opt.m < 50) throw config_error("pdm: numeric grid needs m >= 50");
    const Plan P = make_plan(ep, opt, E, e_wkb);
    int m = opt.m;
    if (opt.scale > 0.0) m = std::max(m, int(std::ceil(opt.nodes_per_scale * (P.b - P.a) * opt.scale)));
    return {sample(ep, P, m), sample(ep, P, 2 * m)};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::optional<double> family_level(EffectiveFamily f, double s, double c0, double c1, double c2, int n) {
    const bool trig_or_hyp = f != F::Oscillator3D && f != F::Coulomb;
    const double s2 = trig_or_hyp ? s * s : 1.0;
    const auto A = upper_index(c1 / s2);
    if (!A) return std::nullopt;
    const double K2 = c2 / s2, N = *A + n;
    switch (f) {
    case F::Oscillator3D:
        if (!(c2 > 0.0)) return std::nullopt;
        return c0 + std::sqrt(c2) * (2.0 * *A + 1.0 + 4.0 * n);
    case F::Coulomb: {
        const double B = -c2 / 2.0;
        if (!(B > 0.0)) return std::nullopt;
        return c0 - B * B / (N * N);
    }
    case F::Eckart: {
        const double B = -K2 / 2.0;
        if (!(B > N * N)) return std::nullopt;
        return c0 - s2 * (N * N + B * B / (N * N));
    }
    case F::HyperbolicPT: {
        if (0.25 - K2 < 0.0) return std::nullopt;
        const double C = -0.5 + std::sqrt(0.25 - K2), k = C - *A - 2.0 * n;
        if (!(k > 0.0)) return std::nullopt;
        return c0 - s2 * k * k;
    }
    case F::TrigonometricPT: {
        const auto C = upper_index(K2);
        if (!C) return std::nullopt;
        const double k = *A + *C + 2.0 * n;
        return c0 + s2 * k * k;
    }
    case F::TrigonometricRM: {
        const double B = -K2 / 2.0;
        return c0 + s2 * (N * N - B * B / (N * N));
    }
    }
    return std::nullopt;
}

double family_potential(EffectiveFamily f, double s, double c0, double c1, double c2, double u) {
    const double z = s * u;
    switch (f) {
    case F::Oscillator3D: return c0 + c1 / (u * u) + c2 * u * u;
    case F::Coulomb: return c0 + c1 / (u * u) + c2 / u;
    case F::Eckart: return c0 + c1 / (std::sinh(z) * std::sinh(z)) + c2 / std::tanh(z);
    case F::HyperbolicPT: return c0 + c1 / (std::sinh(z) * std::sinh(z)) + c2 / (std::cosh(z) * std::cosh(z));
    case F::TrigonometricPT: return c0 + c1 / (std::sin(z) * std::sin(z)) + c2 / (std::cos(z) * std::cos(z));
    case F::TrigonometricRM: return c0 + c1 / (std::sin(z) * std::sin(z)) + c2 / std::tan(z);
    }
    return 0.0;
}

std::optional<double> analytic_level(const PdmSystem& sys, Route route, const PdmParams& p, int n) {
    if (n < 0) throw config_error("pdm: n must be >= 0");
    if (route == Route::Direct) {
        if (!sys.direct) throw config_error(sys.id + ": the direct approach is not available for this row");
        const EffectiveRoute& r = *sys.direct;
        return family_level(r.family, r.scale, r.coefficient(0, p, 0.0), r.coefficient(1, p, 0.0),
                            r.coefficient(2, p, 0.0), n);
    }
    if (!sys.two_step) throw config_error(sys.id + ": the two-step approach is not available for this row");
    const EffectiveRoute& r = *sys.two_step;
    const double target = -sys.v_sign * p.alpha;
    const std::function<std::optional<double>(double)> g = [&](double E) -> std::optional<double> {
        const auto lv = family_level(r.family, r.scale, r.coefficient(0, p, E), r.coefficient(1, p, E),
                                     r.coefficient(2, p, E), n);
        if (!lv) return std::nullopt;
        return *lv - target;
    };
    static const std::vector<double> grid = scan_energies();
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) collect_roots(g, grid[i], grid[i + 1], 3, roots);
    if (roots.empty()) return std::nullopt;
    return *std::min_element(roots.begin(), roots.end());
}

double item10_energy(double alpha, double nu, int l, int n) {
    if (l < 0 || n < 0) throw config_error("item10_energy: l and n must be >= 0");
    const double N = 2.0 * l + 3.0 + 4.0 * n;
    const double disc = nu * nu + 1.0 + (alpha - 4.0) / (N * N);
    if (disc < 0.0) throw domain_error("item10_energy: negative discriminant");
    return N * N * (nu - std::sqrt(disc));
}

std::vector<double> effective_levels(const EffectiveProblem& ep, int k, const NumericOptions& opt, double wkb_energy) {
    if (k < 1) throw config_error("pdm: need k >= 1 levels");
    return grids(ep, opt, ep.trial_energy, wkb_energy).levels(ep.trial_energy, k);
}

std::vector<double> numeric_levels(const PdmSystem& sys, Route route, const PdmParams& p, int k,
                                   const NumericOptions& opt) {
    if (k < 1) throw config_error("pdm: need k >= 1 levels");
    const PdmRadial r = radial_reduce(sys, p);
    if (route == Route::Direct) {
        std::optional<double> top;
        if (sys.direct)
            top = analytic_level(sys, Route::Direct, p, k - 1);
        else if (sys.two_step)
            top = analytic_level(sys, Route::TwoStep, p, k - 1);
        // the level spread sets the shortest length the low states vary on
        NumericOptions o = opt;
        const Route ar = sys.direct ? Route::Direct : Route::TwoStep;
        const auto e0 = analytic_level(sys, ar, p, 0), e1 = analytic_level(sys, ar, p, std::max(1, k - 1));
        if (o.scale == 0.0 && e0 && e1) o.scale = std::sqrt(*e1 - *e0);
        const EffectiveProblem ep = direct_transform(r);
        return effective_levels(ep, k, o, top ? *top : std::numeric_limits<double>::quiet_NaN());
    }
    std::vector<double> out;
    for (int n = 0; n < k; ++n) {
        const auto Ea = analytic_level(sys, Route::TwoStep, p, n);
        if (!Ea) throw convergence_error(sys.id + ": no two-step level " + std::to_string(n) + " to bracket");
        const EffectiveProblem ep = two_step_transform(r, *Ea);
        const GridPair gp = grids(ep, opt, *Ea, ep.target);
        auto g = [&](double E) { return gp.levels(E, n + 1)[n] - ep.target; };
        double d = 1e-3 * std::max(1.0, std::abs(*Ea));
        double a = *Ea - d, b = *Ea + d, ga = g(a), gb = g(b);
        for (int it = 0; it < 30 && (ga < 0.0) == (gb < 0.0); ++it) {
            d *= 2.0;
            a = *Ea - d;
            b = *Ea + d;
            ga = g(a);
            gb = g(b);
        }
        if ((ga < 0.0) == (gb < 0.0)) throw convergence_error(sys.id + ": numeric two-step root not bracketed");
        boost::uintmax_t iters = 200;
        const auto root = boost::math::tools::toms748_solve(g, a, b, ga, gb,
                                                            boost::math::tools::eps_tolerance<double>(44), iters);
        out.push_back(0.5 * (root.first + root.second));
    }
    return out;
}

double PdmSpectrum::max_rel_err() const {
    double worst = 0.0;
    for (const auto& lv : levels)
        if (std::isfinite(lv.err)) worst = std::max(worst, lv.err);
    return worst;
}

std::string PdmSpectrum::to_csv() const {
    std::ostringstream os;
    os << "row,l,n,multiplicity,E_analytic,E_numeric,err\n";
    for (const auto& lv : levels)
        os << id << ',' << params.l << ',' << lv.n << ',' << multiplicity << ',' << fmt(lv.e_analytic) << ','
           << (std::isfinite(lv.e_numeric) ? fmt(lv.e_numeric) : "") << ','
           << (std::isfinite(lv.err) ? fmt(lv.err) : "") << '\n';
    return os.str();
}

nlohmann::json PdmSpectrum::to_json() const {
    auto route_name = [](Route r) { return r == Route::Direct ? "direct" : "two-step"; };
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& lv : levels) {
        nlohmann::json j = {{"n", lv.n}, {"E_analytic", lv.e_analytic}, {"multiplicity", multiplicity}};
        j["E_numeric"] = std::isfinite(lv.e_numeric) ? nlohmann::json(lv.e_numeric) : nlohmann::json(nullptr);
        j["err"] = std::isfinite(lv.err) ? nlohmann::json(lv.err) : nlohmann::json(nullptr);
        rows.push_back(j);
    }
    return {{"row", id},
            {"alpha", params.alpha},
            {"nu", params.nu},
            {"l", params.l},
            {"analytic_route", route_name(analytic_route)},
            {"numeric_route", route_name(numeric_route)},
            {"levels", rows}};
}

PdmSpectrum pdm_spectrum(const PdmSystem& sys, const PdmParams& p, int n_max, const NumericOptions& opt,
                         bool numeric) {
    if (sys.approach == PdmApproach::Special)
        throw config_error(sys.id + ": no analytic route for the special rows");
    if (n_max < 0) throw config_error("pdm: n_max must be >= 0");
    PdmSpectrum s;
    s.id = sys.id;
    s.params = p;
    s.multiplicity = 2 * p.l + 1;
    s.analytic_route = sys.approach == PdmApproach::TwoStep ? Route::TwoStep : Route::Direct;
    s.numeric_route = sys.two_step && sys.two_step->formal ? Route::TwoStep : Route::Direct;
    for (int n = 0; n <= n_max; ++n) {
        const auto e = analytic_level(sys, s.analytic_route, p, n);
        if (!e) break;
        s.levels.push_back({n, *e, std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()});
    }
    if (s.levels.empty()) throw domain_error(sys.id + ": no bound states for these parameters");
    if (numeric) {
        const auto num = numeric_levels(sys, s.numeric_route, p, int(s.levels.size()), opt);
        // the direct route returns ascending eigenvalues; pair them with the ascending analytic list
        std::vector<int> order(s.levels.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
        if (s.numeric_route == Route::Direct)
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return s.levels[a].e_analytic < s.levels[b].e_analytic; });
        for (std::size_t i = 0; i < order.size(); ++i) {
            PdmLevel& lv = s.levels[order[i]];
            lv.e_numeric = num[i];
            lv.err = std::abs(lv.e_numeric - lv.e_analytic) / std::max(1.0, std::abs(lv.e_analytic));
        }
    }
    return s;
}

} // namespace susy
