#include "susy/superpotentials.hpp"

#include <cmath>
#include <sstream>

namespace susy {

namespace {

[[noreturn]] void pole(const char* name, double x) {
    std::ostringstream os;
    os << name << ": x = " << x << " is at or too close to a singular point";
    throw domain_error(os.str());
}

// Guards for the singular factors; each argument is a quantity that vanishes at a pole.
void guard_zero(const char* name, double x, double v, const PoleGuard& g) {
    if (!(std::abs(v) >= g.eps)) pole(name, x);
}
void guard_positive(const char* name, double x, double v, const PoleGuard& g) {
    if (!(v >= g.eps)) pole(name, x);
}

struct Sig {
    Mat I, s1, s2, s3, sp, sm;
    Sig() : I(pauli(0)), s1(pauli(1)), s2(pauli(2)), s3(pauli(3)) {
        sp = 0.5 * (I + s3);
        sm = 0.5 * (I - s3);
    }
};
const Sig& sig() {
    static const Sig s;
    return s;
}

// mu / sqrt(prod (x + a_i)) and its derivative.
struct InvSqrt {
    double v, d;
};
InvSqrt inv_sqrt(double mu, double x, std::initializer_list<double> shifts) {
    double p = 1.0, dlog = 0.0;
    for (double a : shifts) {
        p *= (x + a);
        dlog += 1.0 / (x + a);
    }
    const double v = mu / std::sqrt(p);
    return {v, -0.5 * v * dlog};
}

Evaluation scalar(double w, double dw) { return {scalar_mat(w), scalar_mat(dw)}; }

Evaluation eval_scalar(Kind kind, const ParamSet& p, double x, const PoleGuard& g) {
    const double k = p.kappa, l = p.lambda, om = p.omega, mu = p.mu;
    const double u = l * x;
    const char* name = info(kind).name;
    switch (kind) {
    case Kind::Coulomb:
        guard_positive(name, x, x, g);
        return scalar(-k / x + om / k, k / (x * x));
    case Kind::Rosen1: {
        guard_zero(name, x, std::cos(u), g);
        const double s = 1.0 / std::cos(u);
        return scalar(l * k * std::tan(u) + om / k, l * l * k * s * s);
    }
    case Kind::Rosen2: {
        const double s = 1.0 / std::cosh(u);
        return scalar(l * k * std::tanh(u) + om / k, l * l * k * s * s);
    }
    case Kind::Eckart: {
        guard_positive(name, x, std::sinh(u), g);
        const double cs = 1.0 / std::sinh(u);
        return scalar(-l * k / std::tanh(u) + om / k, l * l * k * cs * cs);
    }
    case Kind::HarmonicOsc: return scalar(mu * x, mu);
    case Kind::Osc3D:
        guard_positive(name, x, x, g);
        return scalar(mu * x - k / x, mu + k / (x * x));
    case Kind::Scarf1: {
        guard_zero(name, x, std::cos(u), g);
        const double s = 1.0 / std::cos(u), t = std::tan(u);
        return scalar(l * k * t + mu * s, l * l * k * s * s + l * mu * s * t);
    }
    case Kind::Scarf2: {
        const double s = 1.0 / std::cosh(u), t = std::tanh(u);
        return scalar(l * k * t + mu * s, l * l * k * s * s - l * mu * s * t);
    }
    case Kind::GenPoschlTeller: {
        guard_positive(name, x, std::sinh(u), g);
        const double cs = 1.0 / std::sinh(u), ct = 1.0 / std::tanh(u);
        return scalar(l * k * ct + mu * cs, -l * l * k * cs * cs - l * mu * cs * ct);
    }
    case Kind::Morse: {
        const double e = std::exp(-x);
        return scalar(k - mu * e, mu * e);
    }
    default: break;
    }
    throw config_error("not a scalar kind");
}

Evaluation eval_matrix2(Kind kind, const ParamSet& p, double x, const PoleGuard& g) {
    const auto& S = sig();
    const double nu = p.nu, mu = p.mu, om = p.omega, l = p.lambda, l2 = l * l;
    const double u = l * x;
    const char* name = info(kind).name;
    Evaluation r;
    switch (kind) {
    case Kind::Inverse: {
        guard_positive(name, x, x, g);
        const Mat a = (2.0 * mu + 1.0) * S.s3 - (2.0 * nu + 1.0) * S.I;
        r.w = a / (2.0 * x) + om / (2.0 * nu + 1.0) * S.s1;
        r.dw = -a / (2.0 * x * x);
        return r;
    }
    case Kind::Exp: {
        const double e = std::exp(-u);
        r.w = l * (-nu * S.I + mu * e * S.s1 - om / nu * S.s3);
        r.dw = -l2 * mu * e * S.s1;
        return r;
    }
    case Kind::Tan: {
        guard_zero(name, x, std::cos(u), g);
        const double s = 1.0 / std::cos(u), t = std::tan(u);
        r.w = l * (nu * t * S.I + mu * s * S.s3 + om / nu * S.s1);
        r.dw = l2 * (nu * s * s * S.I + mu * s * t * S.s3);
        return r;
    }
    case Kind::Cotanh: {
        guard_positive(name, x, std::sinh(u), g);
        const double cs = 1.0 / std::sinh(u), ct = 1.0 / std::tanh(u);
        r.w = l * (-nu * ct * S.I + mu * cs * S.s3 - om / nu * S.s1);
        r.dw = l2 * (nu * cs * cs * S.I - mu * cs * ct * S.s3);
        return r;
    }
    case Kind::Tanh: {
        const double s = 1.0 / std::cosh(u), t = std::tanh(u);
        r.w = l * (-nu * t * S.I + mu * s * S.s1 - om / nu * S.s3);
        r.dw = l2 * (-nu * s * s * S.I - mu * s * t * S.s1);
        return r;
    }
    case Kind::DualInverse: {
        guard_positive(name, x, x, g);
        const Mat a = nu * S.s3 - (mu + 1.0) * S.I;
        r.w = a / x + om / (2.0 * (mu + 1.0)) * S.s1;
        r.dw = -a / (x * x);
        return r;
    }
    case Kind::DualTan: {
        guard_zero(name, x, std::cos(u), g);
        const double q = 2.0 * mu + 1.0, s = 1.0 / std::cos(u), t = std::tan(u);
        r.w = 0.5 * l * (q * t * S.I + (2.0 * nu - 1.0) * s * S.s3 + 4.0 * om / q * S.s1);
        r.dw = 0.5 * l2 * (q * s * s * S.I + (2.0 * nu - 1.0) * s * t * S.s3);
        return r;
    }
    case Kind::DualCotanh: {
        guard_positive(name, x, std::sinh(u), g);
        const double q = 2.0 * mu + 1.0, cs = 1.0 / std::sinh(u), ct = 1.0 / std::tanh(u);
        r.w = 0.5 * l * (-q * ct * S.I + (2.0 * nu - 1.0) * cs * S.s3 - 4.0 * om / q * S.s1);
        r.dw = 0.5 * l2 * (q * cs * cs * S.I - (2.0 * nu - 1.0) * cs * ct * S.s3);
        return r;
    }
    default: break;
    }
    throw config_error("not a 2x2 diagonal kind");
}

Evaluation eval_nondiag(Kind kind, const ParamSet& p, double x, const PoleGuard& g) {
    const auto& S = sig();
    const double k = p.kappa, l = p.lambda, l2 = l * l, mu = p.mu, c = p.c;
    const Mat R = p.r3 * S.s3 + p.r2 * S.s2;
    const double up = l * x + c, um = l * x - c, u = l * x;
    const char* name = info(kind).name;
    Evaluation r;
    switch (kind) {
    case Kind::W1: {
        guard_zero(name, x, std::cos(up), g);
        guard_zero(name, x, std::cos(um), g);
        const double prod = 1.0 / (std::cos(um) * std::cos(up));
        guard_positive(name, x, prod, g);
        const double gg = std::sqrt(prod), sp = 1.0 / std::cos(up), sm = 1.0 / std::cos(um);
        r.w = l * (k * (S.sp * std::tan(up) + S.sm * std::tan(um)) + mu * gg * S.s1 + R / k);
        r.dw = l2 * (k * (S.sp * sp * sp + S.sm * sm * sm) + 0.5 * mu * gg * (std::tan(um) + std::tan(up)) * S.s1);
        return r;
    }
    case Kind::W2: {
        guard_zero(name, x, std::sinh(up), g);
        guard_zero(name, x, std::sinh(um), g);
        const double prod = 1.0 / (std::sinh(um) * std::sinh(up));
        guard_positive(name, x, prod, g);
        const double gg = std::sqrt(prod), cp = 1.0 / std::sinh(up), cm = 1.0 / std::sinh(um);
        const double tp = 1.0 / std::tanh(up), tm = 1.0 / std::tanh(um);
        r.w = l * (-k * (S.sp * tp + S.sm * tm) + mu * gg * S.s1 + R / k);
        r.dw = l2 * (k * (S.sp * cp * cp + S.sm * cm * cm) - 0.5 * mu * gg * (tm + tp) * S.s1);
        return r;
    }
    case Kind::W3: {
        const double gg = std::sqrt(1.0 / (std::cosh(um) * std::cosh(up)));
        const double sp = 1.0 / std::cosh(up), sm = 1.0 / std::cosh(um);
        const double tp = std::tanh(up), tm = std::tanh(um);
        r.w = l * (-k * (S.sp * tp + S.sm * tm) + mu * gg * S.s1 + R / k);
        r.dw = l2 * (-k * (S.sp * sp * sp + S.sm * sm * sm) - 0.5 * mu * gg * (tm + tp) * S.s1);
        return r;
    }
    case Kind::W4: {
        guard_positive(name, x, std::sinh(um), g);
        const double sp = 1.0 / std::cosh(up), cm = 1.0 / std::sinh(um);
        const double tp = std::tanh(up), ctm = 1.0 / std::tanh(um);
        const double gg = std::sqrt(sp * cm);
        r.w = l * (-k * (S.sp * tp + S.sm * ctm) + mu * gg * S.s1 + R / k);
        r.dw = l2 * (-k * S.sp * sp * sp + k * S.sm * cm * cm - 0.5 * mu * gg * (tp + ctm) * S.s1);
        return r;
    }
    case Kind::W5: {
        const double s = 1.0 / std::cosh(u), t = std::tanh(u);
        const double gg = std::sqrt(s * std::exp(-u));
        r.w = l * (-k * (S.sp * t + S.sm) + mu * gg * S.s1 + R / k);
        r.dw = l2 * (-k * S.sp * s * s - 0.5 * mu * gg * (t + 1.0) * S.s1);
        return r;
    }
    case Kind::W6: {
        guard_positive(name, x, std::sinh(u), g);
        const double cs = 1.0 / std::sinh(u), ct = 1.0 / std::tanh(u);
        const double gg = std::sqrt(cs * std::exp(-u));
        r.w = l * (-k * (S.sp * ct + S.sm) + mu * gg * S.s1 + R / k);
        r.dw = l2 * (k * S.sp * cs * cs - 0.5 * mu * gg * (ct + 1.0) * S.s1);
        return r;
    }
    case Kind::W7: {
        guard_positive(name, x, x * x - c * c, g);
        const double q = x * x - c * c, sq = std::sqrt(q);
        r.w = -k * (S.sp / (x + c) + S.sm / (x - c)) + mu / sq * S.s1 + R / k;
        r.dw = k * (S.sp / ((x + c) * (x + c)) + S.sm / ((x - c) * (x - c))) - mu * x / (q * sq) * S.s1;
        return r;
    }
    case Kind::W8: {
        guard_positive(name, x, x, g);
        const double sq = std::sqrt(x);
        r.w = -k * S.sp / x + mu / sq * S.s1 + R / k;
        r.dw = k * S.sp / (x * x) - 0.5 * mu / (x * sq) * S.s1;
        return r;
    }
    case Kind::W9: {
        const double e = std::exp(-u);
        r.w = l * (-k * S.I + mu * e * S.s1 - p.omega / k * S.s3);
        r.dw = -l2 * mu * e * S.s1;
        return r;
    }
    default: break;
    }
    throw config_error("not a non-diagonal 2x2 kind");
}

Evaluation eval_matrix3(Kind kind, const ParamSet& p, double x, const PoleGuard& g) {
    const auto S = spin_one();
    const Mat I = identity(3);
    const Mat P1 = S[0] * S[0] - I, P2 = S[1] * S[1] - I, P3 = S[2] * S[2] - I;
    const Mat Q = 2.0 * S[2] * S[2] - I;
    const double k = p.kappa, c1 = p.c1, c2 = p.c2;
    const auto hd = hermiticity_domain(kind, p);
    const char* name = info(kind).name;
    guard_positive(name, x, x, g);
    guard_positive(name, x, x - hd.x_min, g);

    Evaluation r{Mat::Zero(3, 3), Mat::Zero(3, 3)};
    auto pole_term = [&](const Mat& P, double a) {
        r.w += P * (k / (x + a));
        r.dw -= P * (k / ((x + a) * (x + a)));
    };
    auto root_term = [&](const Mat& s, InvSqrt f) {
        r.w += s * f.v;
        r.dw += s * f.d;
    };
    switch (kind) {
    case Kind::M1:
        pole_term(P1, c1);
        pole_term(P2, c2);
        pole_term(P3, 0.0);
        root_term(S[0], inv_sqrt(p.mu1, x, {0.0, c2}));
        root_term(S[1], inv_sqrt(p.mu2, x, {0.0, c1}));
        r.w += p.omega / k * Q;
        return r;
    case Kind::M2:
        pole_term(P1, 0.0);
        pole_term(P2, c1);
        root_term(S[0], inv_sqrt(p.mu2, x, {c1}));
        root_term(S[1], inv_sqrt(p.mu1, x, {0.0}));
        r.w += p.omega / k * Q;
        return r;
    case Kind::M3:
        pole_term(P1, c1);
        pole_term(P3, 0.0);
        root_term(S[0], inv_sqrt(p.mu2, x, {0.0}));
        root_term(S[1], inv_sqrt(p.mu1, x, {0.0, c1}));
        r.w += p.omega / k * Q;
        return r;
    case Kind::M4:
        pole_term(P1, 0.0);
        r.w += p.c * S[0];
        root_term(S[1], inv_sqrt(p.mu1, x, {0.0}));
        r.w += p.omega / k * Q;
        return r;
    case Kind::M5:
        pole_term(P1, c1);
        pole_term(P2, c2);
        pole_term(P3, 0.0);
        root_term(S[0], inv_sqrt(p.mu1, x, {0.0, c2}));
        root_term(S[1], inv_sqrt(p.mu2, x, {0.0, c1}));
        root_term(S[2], inv_sqrt(p.mu3, x, {c1, c2}));
        return r;
    case Kind::M6:
        pole_term(P1, 0.0);
        pole_term(P2, c2);
        root_term(S[0], inv_sqrt(p.mu1, x, {c2}));
        root_term(S[1], inv_sqrt(p.mu2, x, {0.0}));
        root_term(S[2], inv_sqrt(p.mu3, x, {0.0, c2}));
        return r;
    case Kind::M7:
        pole_term(P1, 0.0);
        r.w += p.c * S[0];
        root_term(S[2], inv_sqrt(p.mu1, x, {0.0}));
        root_term(S[1], inv_sqrt(p.mu2, x, {0.0}));
        return r;
    default: break;
    }
    throw config_error("not a 3x3 kind");
}

} // namespace

Evaluation evaluate_with_derivative(const SuperpotentialInstance& w, double x, const PoleGuard& guard) {
    if (!std::isfinite(x)) throw domain_error("x must be finite");
    switch (info(w.kind()).family) {
    case Family::Scalar: return eval_scalar(w.kind(), w.params(), x, guard);
    case Family::Matrix2Diag:
    case Family::Matrix2Dual: return eval_matrix2(w.kind(), w.params(), x, guard);
    case Family::Matrix2NonDiag: return eval_nondiag(w.kind(), w.params(), x, guard);
    case Family::Matrix3: return eval_matrix3(w.kind(), w.params(), x, guard);
    }
    throw config_error("unknown family");
}

Mat evaluate(const SuperpotentialInstance& w, double x, const PoleGuard& guard) {
    return evaluate_with_derivative(w, x, guard).w;
}

PairPotentials pair_potentials(const SuperpotentialInstance& w, double x, const PoleGuard& guard) {
    const auto e = evaluate_with_derivative(w, x, guard);
    Mat w2 = e.w * e.w;
    w2 = 0.5 * (w2 + w2.adjoint()).eval();
    return {w2 - e.dw, w2 + e.dw};
}

Mat hat_potential(const SuperpotentialInstance& w, double x, const PoleGuard& guard) {
    Mat v = pair_potentials(w, x, guard).vminus;
    v += factorization_constant(w) * identity(w.dim());
    return v;
}

} // namespace susy
