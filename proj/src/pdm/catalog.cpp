#include "susy/pdm.hpp"

#include <cmath>

namespace susy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
using F = EffectiveFamily;
using Coef = std::array<double, 5>; // over (1, alpha, L, E, nu E)

Jet sq(const Jet& a) { return a * a; }

EffectiveRoute route(F family, double s, Coef c0, Coef c1, Coef c2, bool origin_hi, double lo, double hi = kInf) {
    EffectiveRoute r;
    r.family = family;
    r.scale = s;
    const Coef* rows[] = {&c0, &c1, &c2};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 5; ++k) r.coef[i][k] = (*rows[i])[k];
    r.origin_at_hi = origin_hi;
    r.x_lo = lo;
    r.x_hi = hi;
    return r;
}

EffectiveRoute two_step(EffectiveRoute r, std::function<Jet(const Jet&, double)> mass,
                        std::function<double(double, double)> inv_v, bool formal = false) {
    r.mass = std::move(mass);
    r.inv_v = std::move(inv_v);
    r.formal = formal;
    return r;
}

PdmSystem row(int table, int item, std::string f_text, std::string v_text, PdmApproach approach,
              std::string kind, double lo, std::string branch, std::function<Jet(const Jet&, double)> f,
              std::function<Jet(const Jet&, double)> v) {
    PdmSystem s;
    s.table = table;
    s.item = item;
    s.id = "t" + std::to_string(table) + "." + std::to_string(item);
    s.f_text = std::move(f_text);
    s.v_text = std::move(v_text);
    s.approach = approach;
    s.effective_kind = std::move(kind);
    s.x_lo = lo;
    s.x_ref = lo + 1.0;
    s.branch = std::move(branch);
    s.f = std::move(f);
    s.v = std::move(v);
    return s;
}

double root_plus(double nu) { return nu + std::sqrt(nu * nu + 1.0); }

std::vector<PdmSystem> build() {
    using A = PdmApproach;
    std::vector<PdmSystem> out;
    const std::string whole = "x > 0", outer = "x > 1";

    // ---- vector integrals ----
    {
        auto s = row(1, 1, "x", "alpha x", A::Both, "3d oscillator or Coulomb", 0.0, whole,
                     [](const Jet& x, double) { return x; }, [](const Jet& x, double) { return x; });
        s.direct = route(F::Oscillator3D, 1, {}, {0.75, 0, 4}, {0, 0.25}, false, 0.0);
        s.two_step = two_step(route(F::Coulomb, 1, {}, {0, 0, 1}, {0, 0, 0, -1}, false, 0.0),
                              [](const Jet&, double) { return Jet(1.0); }, [](double x, double) { return 1.0 / x; });
        out.push_back(s);
    }
    {
        auto s = row(1, 2, "x^4", "alpha x", A::Both, "Coulomb or 3d oscillator", 0.0, whole,
                     [](const Jet& x, double) { return sq(sq(x)); }, [](const Jet& x, double) { return x; });
        s.direct = route(F::Coulomb, 1, {}, {0, 0, 1}, {0, 1}, true, 0.0);
        s.two_step = two_step(route(F::Oscillator3D, 1, {}, {0.75, 0, 4}, {0, 0, 0, -0.25}, true, 0.0),
                              [](const Jet& x, double) { return x * x * x; }, [](double x, double) { return 1.0 / x; });
        out.push_back(s);
    }
    {
        auto s = row(1, 3, "x(x-1)^2", "alpha x/(x+1)^2", A::Both, "Eckart or hyperbolic Poschl-Teller", 1.0, outer,
                     [](const Jet& x, double) { return x * sq(x - 1.0); },
                     [](const Jet& x, double) { return x / sq(x + 1.0); });
        s.direct = route(F::HyperbolicPT, 1, {0.25, 0.25}, {0.75, 0, 4}, {0, -0.25}, true, 1.0);
        s.two_step = two_step(route(F::Eckart, 2, {1, 0, 0, -2}, {0, 0, 4}, {0, 0, 0, -2}, true, 1.0),
                              [](const Jet& x, double) { return sq(x * x - 1.0); },
                              [](double x, double) { return (x + 1.0) * (x + 1.0) / x; });
        out.push_back(s);
    }
    {
        auto s = row(1, 4, "x(x+1)^2", "alpha x/(x-1)^2", A::Both, "Eckart or trigonometric Poschl-Teller", 1.0,
                     outer, [](const Jet& x, double) { return x * sq(x + 1.0); },
                     [](const Jet& x, double) { return x / sq(x - 1.0); });
        s.direct = route(F::TrigonometricPT, 1, {-0.25, -0.25}, {0.75, 0, 4}, {0, 0.25}, true, 1.0);
        s.two_step = two_step(route(F::Eckart, 2, {1, 0, 0, 2}, {0, 0, 4}, {0, 0, 0, -2}, true, 1.0),
                              [](const Jet& x, double) { return sq(x * x - 1.0); },
                              [](double x, double) { return (x - 1.0) * (x - 1.0) / x; });
        out.push_back(s);
    }
    {
        auto s = row(1, 5, "(1+x^2)^2", "alpha (1-x^2)/x", A::Direct, "trigonometric Rosen-Morse", 0.0, whole,
                     [](const Jet& x, double) { return sq(1.0 + x * x); },
                     [](const Jet& x, double) { return (1.0 - x * x) / x; });
        s.direct = route(F::TrigonometricRM, 2, {-1}, {0, 0, 4}, {0, 2}, false, 0.0);
        out.push_back(s);
    }
    {
        auto s = row(1, 6, "(1-x^2)^2", "alpha (1+x^2)/x", A::Direct, "Eckart", 1.0, outer,
                     [](const Jet& x, double) { return sq(1.0 - x * x); },
                     [](const Jet& x, double) { return (1.0 + x * x) / x; });
        s.direct = route(F::Eckart, 2, {1}, {0, 0, 4}, {0, 2}, true, 1.0);
        out.push_back(s);
    }
    {
        auto s = row(1, 7, "x/(x+1)", "alpha x/(x+1)", A::TwoStep, "Coulomb", 0.0, whole,
                     [](const Jet& x, double) { return x / (x + 1.0); },
                     [](const Jet& x, double) { return x / (x + 1.0); });
        s.two_step = two_step(route(F::Coulomb, 1, {0, 0, 0, -1}, {0, 0, 1}, {0, 0, 0, -1}, false, 0.0),
                              [](const Jet&, double) { return Jet(1.0); },
                              [](double x, double) { return (x + 1.0) / x; });
        out.push_back(s);
    }
    {
        auto s = row(1, 8, "x/(x-1)", "alpha x/(x-1)", A::TwoStep, "Coulomb", 1.0, outer,
                     [](const Jet& x, double) { return x / (x - 1.0); },
                     [](const Jet& x, double) { return x / (x - 1.0); });
        s.two_step = two_step(route(F::Coulomb, 1, {0, 0, 0, -1}, {0, 0, 1}, {0, 0, 0, 1}, false, 0.0),
                              [](const Jet&, double) { return Jet(1.0); },
                              [](double x, double) { return (x - 1.0) / x; }, true);
        out.push_back(s);
    }
    {
        auto s = row(1, 9, "(x^2-1)^2 x/(x^2-2 nu x+1)", "alpha x/(x^2-2 nu x+1)", A::TwoStep, "Eckart", 1.0, outer,
                     [](const Jet& x, double nu) { return sq(x * x - 1.0) * x / (x * x - 2.0 * nu * x + 1.0); },
                     [](const Jet& x, double nu) { return x / (x * x - 2.0 * nu * x + 1.0); });
        s.two_step = two_step(route(F::Eckart, 2, {1, 0, 0, 0, 2}, {0, 0, 4}, {0, 0, 0, -2}, true, 1.0),
                              [](const Jet& x, double) { return sq(x * x - 1.0); },
                              [](double x, double nu) { return (x * x - 2.0 * nu * x + 1.0) / x; });
        out.push_back(s);
    }
    {
        auto s = row(1, 10, "(x^2+1)^2 x/(x^2-2 nu x-1)", "alpha x/(x^2-2 nu x-1)", A::TwoStep,
                     "trigonometric Rosen-Morse", 0.0, "x > nu + sqrt(nu^2+1)",
                     [](const Jet& x, double nu) { return sq(x * x + 1.0) * x / (x * x - 2.0 * nu * x - 1.0); },
                     [](const Jet& x, double nu) { return x / (x * x - 2.0 * nu * x - 1.0); });
        s.lower = root_plus;
        s.two_step = two_step(route(F::TrigonometricRM, 2, {-1, 0, 0, 0, 2}, {0, 0, 4}, {0, 0, 0, 2}, false, 0.0),
                              [](const Jet& x, double) { return sq(x * x + 1.0); },
                              [](double x, double nu) { return (x * x - 2.0 * nu * x - 1.0) / x; }, true);
        out.push_back(s);
    }

    // ---- tensor integrals ----
    {
        auto s = row(2, 1, "1/x^2", "alpha/x^2", A::Both, "Coulomb or 3d oscillator", 0.0, whole,
                     [](const Jet& x, double) { return 1.0 / (x * x); },
                     [](const Jet& x, double) { return 1.0 / (x * x); });
        s.direct = route(F::Coulomb, 1, {}, {-3.0 / 16, 0, 0.25}, {0, 0.5}, false, 0.0);
        s.two_step = two_step(route(F::Oscillator3D, 1, {}, {0, 0, 1}, {0, 0, 0, -1}, false, 0.0),
                              [](const Jet&, double) { return Jet(1.0); }, [](double x, double) { return x * x; });
        out.push_back(s);
    }
    {
        auto s = row(2, 2, "x^4", "-alpha/x^2", A::Both, "3d oscillator or Coulomb", 0.0, whole,
                     [](const Jet& x, double) { return sq(sq(x)); },
                     [](const Jet& x, double) { return -1.0 / (x * x); });
        s.v_sign = -1.0;
        s.direct = route(F::Oscillator3D, 1, {}, {0, 0, 1}, {0, -1}, true, 0.0);
        s.two_step = two_step(route(F::Coulomb, 1, {}, {-3.0 / 16, 0, 0.25}, {0, 0, 0, -0.5}, true, 0.0),
                              [](const Jet& x, double) { return sq(x * x * x); },
                              [](double x, double) { return -x * x; });
        out.push_back(s);
    }
    {
        auto s = row(2, 3, "(x^2-1)^2", "alpha x^2/(x^2+1)^2", A::Both, "Eckart or hyperbolic Poschl-Teller", 1.0,
                     outer, [](const Jet& x, double) { return sq(x * x - 1.0); },
                     [](const Jet& x, double) { return x * x / sq(x * x + 1.0); });
        s.direct = route(F::HyperbolicPT, 2, {1, 0.25}, {0, 0, 4}, {0, -0.25}, true, 1.0);
        s.two_step = two_step(route(F::Eckart, 4, {4, 0, 0, -2}, {-3, 0, 4}, {0, 0, 0, -2}, true, 1.0),
                              [](const Jet& x, double) { return sq(x * x * x * x - 1.0) / (x * x); },
                              [](double x, double) { return (x * x + 1.0) * (x * x + 1.0) / (x * x); });
        out.push_back(s);
    }
    {
        auto s = row(2, 4, "(x^2+1)^2", "alpha x^2/(x^2-1)^2", A::Both, "Eckart or trigonometric Poschl-Teller", 1.0,
                     outer, [](const Jet& x, double) { return sq(x * x + 1.0); },
                     [](const Jet& x, double) { return x * x / sq(x * x - 1.0); });
        s.direct = route(F::TrigonometricPT, 2, {-1, -0.25}, {0, 0, 4}, {0, 0.25}, true, 1.0);
        s.two_step = two_step(route(F::Eckart, 4, {4, 0, 0, 2}, {-3, 0, 4}, {0, 0, 0, -2}, true, 1.0),
                              [](const Jet& x, double) { return sq(x * x * x * x - 1.0) / (x * x); },
                              [](double x, double) { return (x * x - 1.0) * (x * x - 1.0) / (x * x); });
        out.push_back(s);
    }
    {
        auto s = row(2, 5, "(x^4-1)^2/x^2", "alpha (x^4+1)/x^2", A::Direct, "Eckart", 1.0, outer,
                     [](const Jet& x, double) { return sq(x * x * x * x - 1.0) / (x * x); },
                     [](const Jet& x, double) { return (x * x * x * x + 1.0) / (x * x); });
        s.direct = route(F::Eckart, 4, {4}, {-3, 0, 4}, {0, 2}, true, 1.0);
        out.push_back(s);
    }
    {
        auto s = row(2, 6, "(x^4+1)^2/x^2", "alpha (x^4-1)/x^2", A::Direct, "trigonometric Rosen-Morse", 0.0, whole,
                     [](const Jet& x, double) { return sq(x * x * x * x + 1.0) / (x * x); },
                     [](const Jet& x, double) { return (x * x * x * x - 1.0) / (x * x); });
        s.direct = route(F::TrigonometricRM, 4, {-4}, {-3, 0, 4}, {0, -2}, false, 0.0);
        out.push_back(s);
    }
    {
        auto s = row(2, 7, "1/(x^2+1)", "alpha/(x^2+1)", A::TwoStep, "3d oscillator", 0.0, whole,
                     [](const Jet& x, double) { return 1.0 / (x * x + 1.0); },
                     [](const Jet& x, double) { return 1.0 / (x * x + 1.0); });
        s.two_step = two_step(route(F::Oscillator3D, 1, {0, 0, 0, -1}, {0, 0, 1}, {0, 0, 0, -1}, false, 0.0),
                              [](const Jet&, double) { return Jet(1.0); },
                              [](double x, double) { return x * x + 1.0; });
        out.push_back(s);
    }
    {
        auto s = row(2, 8, "1/(x^2-1)", "alpha/(x^2-1)", A::TwoStep, "3d oscillator", 1.0, outer,
                     [](const Jet& x, double) { return 1.0 / (x * x - 1.0); },
                     [](const Jet& x, double) { return 1.0 / (x * x - 1.0); });
        s.two_step = two_step(route(F::Oscillator3D, 1, {0, 0, 0, 1}, {0, 0, 1}, {0, 0, 0, -1}, false, 0.0),
                              [](const Jet&, double) { return Jet(1.0); },
                              [](double x, double) { return x * x - 1.0; }, true);
        out.push_back(s);
    }
    {
        auto s = row(2, 9, "(x^4-1)^2/(x^4-2 nu x^2+1)", "alpha x^2/(x^4-2 nu x^2+1)", A::TwoStep, "Eckart", 1.0,
                     outer,
                     [](const Jet& x, double nu) {
                         const Jet x2 = x * x;
                         return sq(x2 * x2 - 1.0) / (x2 * x2 - 2.0 * nu * x2 + 1.0);
                     },
                     [](const Jet& x, double nu) {
                         const Jet x2 = x * x;
                         return x2 / (x2 * x2 - 2.0 * nu * x2 + 1.0);
                     });
        s.two_step = two_step(route(F::Eckart, 4, {4, 0, 0, 0, 2}, {-3, 0, 4}, {0, 0, 0, -2}, true, 1.0),
                              [](const Jet& x, double) { return sq(x * x * x * x - 1.0) / (x * x); },
                              [](double x, double nu) {
                                  const double x2 = x * x;
                                  return (x2 * x2 - 2.0 * nu * x2 + 1.0) / x2;
                              });
        out.push_back(s);
    }
    {
        auto s = row(2, 10, "(x^4+1)^2/(x^4-2 nu x^2-1)", "alpha x^2/(x^4-2 nu x^2-1)", A::TwoStep,
                     "trigonometric Rosen-Morse", 0.0, "x^2 > nu + sqrt(nu^2+1)",
                     [](const Jet& x, double nu) {
                         const Jet x2 = x * x;
                         return sq(x2 * x2 + 1.0) / (x2 * x2 - 2.0 * nu * x2 - 1.0);
                     },
                     [](const Jet& x, double nu) {
                         const Jet x2 = x * x;
                         return x2 / (x2 * x2 - 2.0 * nu * x2 - 1.0);
                     });
        s.lower = [](double nu) { return std::sqrt(root_plus(nu)); };
        s.two_step = two_step(route(F::TrigonometricRM, 4, {-4, 0, 0, 0, 2}, {-3, 0, 4}, {0, 0, 0, 2}, false, 0.0),
                              [](const Jet& x, double) { return sq(x * x * x * x + 1.0) / (x * x); },
                              [](double x, double nu) {
                                  const double x2 = x * x;
                                  return (x2 * x2 - 2.0 * nu * x2 - 1.0) / x2;
                              },
                              true);
        out.push_back(s);
    }

    // ---- special inverse masses with a fixed potential ----
    auto special = [&](int k, std::string f_text, std::function<Jet(const Jet&, double)> f, double lo,
                       std::string branch) {
        PdmSystem s;
        s.id = "fV" + std::to_string(k);
        s.item = k;
        s.f_text = std::move(f_text);
        s.v_text = k == 1 ? "0" : "-6 x^2";
        s.approach = A::Special;
        s.x_lo = lo;
        s.x_ref = lo + 1.0;
        s.branch = std::move(branch);
        s.coupled = false;
        s.f = std::move(f);
        if (k == 1)
            s.v = [](const Jet&, double) { return Jet(0.0); };
        else
            s.v = [](const Jet& x, double) { return -6.0 * x * x; };
        out.push_back(s);
    };
    special(1, "x^2", [](const Jet& x, double) { return x * x; }, 0.0, whole);
    special(2, "(1+x^2)^2", [](const Jet& x, double) { return sq(1.0 + x * x); }, 0.0, whole);
    special(3, "(1-x^2)^2", [](const Jet& x, double) { return sq(1.0 - x * x); }, 1.0, outer);
    special(4, "x^4", [](const Jet& x, double) { return sq(sq(x)); }, 0.0, whole);
    return out;
}

} // namespace

std::string to_string(EffectiveFamily f) {
    switch (f) {
    case F::Oscillator3D: return "3d oscillator";
    case F::Coulomb: return "Coulomb";
    case F::Eckart: return "Eckart";
    case F::HyperbolicPT: return "hyperbolic Poschl-Teller";
    case F::TrigonometricPT: return "trigonometric Poschl-Teller";
    case F::TrigonometricRM: return "trigonometric Rosen-Morse";
    }
    return "?";
}

std::string to_string(PdmApproach a) {
    switch (a) {
    case PdmApproach::Direct: return "direct";
    case PdmApproach::TwoStep: return "two-step";
    case PdmApproach::Both: return "direct or two-step";
    case PdmApproach::Special: return "special";
    }
    return "?";
}

double EffectiveRoute::coefficient(int i, const PdmParams& p, double E) const {
    const double* c = coef[i];
    return c[0] + c[1] * p.alpha + c[2] * p.L() + c[3] * E + c[4] * p.nu * E;
}

nlohmann::json PdmSystem::to_json() const {
    nlohmann::json j = {{"id", id},
                        {"f", f_text},
                        {"V", v_text},
                        {"approach", to_string(approach)},
                        {"effective_kind", effective_kind},
                        {"branch", branch}};
    auto describe = [](const EffectiveRoute& r) {
        return nlohmann::json{{"family", to_string(r.family)},
                              {"scale", r.scale},
                              {"origin", r.origin_at_hi ? "x_hi" : "x_lo"},
                              {"x_lo", r.x_lo},
                              {"formal_domain", r.formal}};
    };
    if (direct) j["direct"] = describe(*direct);
    if (two_step) j["two_step"] = describe(*two_step);
    return j;
}

const std::vector<PdmSystem>& pdm_catalog() {
    static const std::vector<PdmSystem> rows = build();
    return rows;
}

const PdmSystem& pdm_row(const std::string& id) {
    for (const auto& s : pdm_catalog())
        if (s.id == id) return s;
    throw config_error("unknown PDM row '" + id + "' (expected t1.1 .. t2.10 or fV1 .. fV4)");
}

} // namespace susy
