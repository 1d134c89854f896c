#include "susy/superpotentials.hpp"

#include <algorithm>
#include <cmath>

namespace susy {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

// Root terms of the 3x3 kinds: coefficient index (1..3 for mu1..mu3) and the shift
// constants under the square root (0 = plain x, 1 = c1, 2 = c2).
struct RootTerm {
    int mu;
    std::vector<int> shifts;
};

std::vector<RootTerm> root_terms(Kind kind) {
    switch (kind) {
    case Kind::M1: return {{1, {0, 2}}, {2, {0, 1}}};
    case Kind::M2: return {{2, {1}}, {1, {0}}};
    case Kind::M3: return {{2, {0}}, {1, {0, 1}}};
    case Kind::M4: return {{1, {0}}};
    case Kind::M5: return {{1, {0, 2}}, {2, {0, 1}}, {3, {1, 2}}};
    case Kind::M6: return {{1, {2}}, {2, {0}}, {3, {0, 2}}};
    case Kind::M7: return {{1, {0}}, {2, {0}}};
    default: return {};
    }
}

// Shift constants of the pole terms kappa/(x + c_i).
std::vector<int> pole_shifts(Kind kind) {
    switch (kind) {
    case Kind::M1:
    case Kind::M5: return {1, 2};
    case Kind::M2:
    case Kind::M3: return {1};
    case Kind::M6: return {2};
    default: return {};
    }
}

double frob(const Mat& m) { return m.norm(); }

} // namespace

HermiticityDomain hermiticity_domain(Kind kind, const ParamSet& p) {
    if (info(kind).family != Family::Matrix3) throw config_error("hermiticity_domain applies to the 3x3 kinds");
    const double mus[] = {0.0, p.mu1, p.mu2, p.mu3};
    const double cs[] = {0.0, p.c1, p.c2};
    HermiticityDomain h;
    h.x_min = 0.0;
    for (const auto& t : root_terms(kind)) {
        if (mus[t.mu] == 0.0) continue;
        h.positive_x = true;
        for (int s : t.shifts) {
            if (s == 0) continue;
            if (!(cs[s] < 0.0)) {
                h.accepted = false;
                h.reason = "condo: c" + std::to_string(s) + " must be < 0 when mu" + std::to_string(t.mu) + " != 0";
                return h;
            }
            h.x_min = std::max(h.x_min, -cs[s]);
        }
    }
    for (int s : pole_shifts(kind)) h.x_min = std::max(h.x_min, -cs[s]);
    return h;
}

Interval sample_interval(Kind kind, const ParamSet& p) {
    const double l = std::abs(p.lambda) > 0.0 ? std::abs(p.lambda) : 1.0;
    switch (kind) {
    case Kind::Coulomb:
    case Kind::Osc3D:
    case Kind::Inverse:
    case Kind::DualInverse:
    case Kind::W8: return {0.1, 20.0};
    case Kind::Eckart:
    case Kind::GenPoschlTeller:
    case Kind::Cotanh:
    case Kind::DualCotanh:
    case Kind::W6: return {0.1 / l, 5.0 / l};
    case Kind::Rosen1:
    case Kind::Scarf1:
    case Kind::Tan:
    case Kind::DualTan: return {(-kHalfPi + 0.1) / l, (kHalfPi - 0.1) / l};
    case Kind::Morse: return {-3.0, 10.0};
    case Kind::W1: {
        const double half = kHalfPi - std::abs(p.c) - 0.1;
        return {-half / l, half / l};
    }
    case Kind::W2: return {(std::abs(p.c) + 0.1) / l, (std::abs(p.c) + 5.0) / l};
    case Kind::W4: return {(std::max(p.c, 0.0) + 0.1) / l, (std::max(p.c, 0.0) + 5.0) / l};
    case Kind::W7: return {std::abs(p.c) + 0.1, std::abs(p.c) + 10.0};
    case Kind::M1:
    case Kind::M2:
    case Kind::M3:
    case Kind::M4:
    case Kind::M5:
    case Kind::M6:
    case Kind::M7: {
        const double lo = hermiticity_domain(kind, p).x_min;
        return {lo + 0.1, lo + 20.0};
    }
    default: return {-5.0 / l, 5.0 / l};
    }
}

double shape_invariance_residual(const SuperpotentialInstance& w, const SuperpotentialInstance& partner,
                                 const Grid& grid) {
    const double C = factorization_constant(partner) - factorization_constant(w);
    const Mat I = identity(w.dim());
    double worst = 0.0;
    for (int j = 0; j < grid.m; ++j) {
        const double x = grid.x(j);
        const Mat d = pair_potentials(w, x).vplus - pair_potentials(partner, x).vminus - C * I;
        worst = std::max(worst, frob(d));
    }
    return worst;
}

double shape_invariance_residual(Kind kind, const ParamSet& params, const Grid& grid) {
    const SuperpotentialInstance w(kind, params);
    return shape_invariance_residual(w, shift(w), grid);
}

Decomposition decomposition(const SuperpotentialInstance& w) {
    const auto& p = w.params();
    const double l = p.lambda;
    Decomposition d;
    switch (w.kind()) {
    case Kind::Inverse:
        d.k = p.nu + 0.5;
        d.alpha = 1.0;
        d.omega = std::abs(p.omega) / 2.0;
        return d;
    case Kind::Exp:
    case Kind::Cotanh:
    case Kind::Tanh:
    case Kind::Tan:
        d.k = l * p.nu;
        d.alpha = l;
        d.nu = w.kind() == Kind::Tan ? 1.0 : -1.0;
        d.omega = l * l * std::abs(p.omega);
        return d;
    default: break;
    }
    throw config_error(std::string("no (A, B, C) decomposition for kind ") + info(w.kind()).name);
}

DecompositionSample decomposition_at(const SuperpotentialInstance& w, double x) {
    const auto& p = w.params();
    const double l = p.lambda, l2 = l * l, mu = p.mu, om = p.omega, u = l * x;
    const Mat I = pauli(0), s1 = pauli(1), s3 = pauli(3);
    DecompositionSample s;
    switch (w.kind()) {
    case Kind::Inverse:
        if (!(x > 0.0)) throw domain_error("inverse: x must be > 0");
        s.A = -I / x;
        s.dA = I / (x * x);
        s.B = 0.5 * om * s1;
        s.C = (mu + 0.5) / x * s3;
        s.dC = -(mu + 0.5) / (x * x) * s3;
        return s;
    case Kind::Exp: {
        const double e = std::exp(-u);
        s.A = -I;
        s.dA = Mat::Zero(2, 2);
        s.B = -l2 * om * s3;
        s.C = l * mu * e * s1;
        s.dC = -l2 * mu * e * s1;
        return s;
    }
    case Kind::Tan: {
        const double sc = 1.0 / std::cos(u), t = std::tan(u);
        s.A = t * I;
        s.dA = l * sc * sc * I;
        s.B = l2 * om * s1;
        s.C = l * mu * sc * s3;
        s.dC = l2 * mu * sc * t * s3;
        return s;
    }
    case Kind::Cotanh: {
        const double cs = 1.0 / std::sinh(u), ct = 1.0 / std::tanh(u);
        s.A = -ct * I;
        s.dA = l * cs * cs * I;
        s.B = -l2 * om * s1;
        s.C = l * mu * cs * s3;
        s.dC = -l2 * mu * cs * ct * s3;
        return s;
    }
    case Kind::Tanh: {
        const double sc = 1.0 / std::cosh(u), t = std::tanh(u);
        s.A = -t * I;
        s.dA = -l * sc * sc * I;
        s.B = -l2 * om * s3;
        s.C = l * mu * sc * s1;
        s.dC = -l2 * mu * sc * t * s1;
        return s;
    }
    default: break;
    }
    throw config_error(std::string("no (A, B, C) decomposition for kind ") + info(w.kind()).name);
}

double ClassificationResidual::max() const { return std::max({a0, a00, bc, bb}); }

ClassificationResidual classification_residual(const std::vector<DecompositionSample>& samples,
                                               const Decomposition& k) {
    ClassificationResidual r;
    for (const auto& s : samples) {
        const int d = static_cast<int>(s.A.rows());
        if (s.dA.rows() != d || s.B.rows() != d || s.C.rows() != d || s.dC.rows() != d)
            throw config_error("classification_residual: shape mismatch");
        const Mat I = identity(d);
        r.a0 = std::max(r.a0, frob(s.dA - k.alpha * (s.A * s.A + k.nu * I)));
        r.a00 = std::max(r.a00, frob(s.dC - 0.5 * k.alpha * (s.A * s.C + s.C * s.A) + k.kappa * I));
        r.bc = std::max(r.bc, frob(s.B * s.C + s.C * s.B + k.lambda * I));
        r.bb = std::max(r.bb, frob(s.B * s.B - k.omega * k.omega * I));
    }
    return r;
}

} // namespace susy
