#include "susy/engine.hpp"

#include <cmath>

namespace susy {

namespace {

GateCheck fail(const char* gate, std::string inequality) {
    GateCheck g;
    g.passed = false;
    g.gate = gate;
    g.inequality = std::move(inequality);
    return g;
}

GateCheck empirical() {
    GateCheck g;
    g.empirical = true;
    return g;
}

} // namespace

GateCheck check_gate(const SuperpotentialInstance& w) {
    const auto& p = w.params();
    const double nu = p.nu, mu = p.mu, om = p.omega;
    switch (w.kind()) {
    case Kind::Inverse:
        if (!(om > 0.0)) return fail("muo", "omega must be > 0");
        if (!(mu >= -0.5)) return fail("muo", "mu + 1/2 must be >= 0");
        if (!(nu - mu > 0.0)) return fail("condk1", "nu - mu must be > 0");
        if (!(2.0 * nu + 1.0 > 0.0)) return fail("condk1", "2 nu + 1 must be > 0");
        return {};
    case Kind::DualInverse:
        if (!(om > 0.0)) return fail("muo", "omega must be > 0");
        if (!(mu > -1.0)) return fail("SS55", "mu must be > -1");
        if (nu >= 0.0 && !(nu - mu < 1.0)) return fail("SS55", "nu - mu must be < 1");
        if (nu < 0.0 && !(nu + mu > -1.0)) return fail("SS55", "nu + mu must be > -1");
        return {};
    case Kind::Exp:
        if (!(om > 0.0)) return fail("muo", "omega must be > 0");
        if (!(mu > 0.0)) return fail("muo", "mu must be > 0");
        if (!(nu < 0.0)) return fail("th1", "nu must be < 0");
        if (!(nu * nu > om)) return fail("th1", "nu^2 must be > omega");
        return {};
    case Kind::Tanh:
    case Kind::Cotanh: {
        // Decay at +infinity needs both eigenvalues of lim W to be positive.
        if (!(om > 0.0)) return fail("muo", "omega must be > 0");
        if (!(mu > 0.0)) return fail("muo", "mu must be > 0");
        if (!(nu < 0.0)) return fail("EV1", "nu must be < 0");
        if (!(nu * nu > om)) return fail("EV1", "nu^2 must be > |omega|");
        GateCheck g;
        g.empirical = w.kind() == Kind::Cotanh; // behaviour at the origin is not covered
        return g;
    }
    case Kind::Tan:
        if (!(om >= 0.0)) return fail("muo", "omega must be >= 0");
        if (!(mu >= 0.0)) return fail("muo", "mu must be >= 0");
        return empirical();
    default: return empirical();
    }
}

void require_gate(const SuperpotentialInstance& w) {
    const GateCheck g = check_gate(w);
    if (!g.passed) throw GateError(g.gate, g.inequality);
}

const char* to_string(Provenance p) {
    switch (p) {
    case Provenance::Ladder: return "ladder";
    case Provenance::Eigensolver: return "eigensolver";
    case Provenance::AnalyticBessel: return "analytic-bessel";
    case Provenance::NumericKernel: return "numeric-kernel";
    }
    return "?";
}

} // namespace susy
