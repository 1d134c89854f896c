#include "susy/superpotentials.hpp"

#include <cmath>

namespace susy {

double ParamSet::get(ShiftParam p) const {
    switch (p) {
    case ShiftParam::Nu: return nu;
    case ShiftParam::Mu: return mu;
    case ShiftParam::Kappa: return kappa;
    }
    return kappa;
}

void ParamSet::set(ShiftParam p, double v) {
    switch (p) {
    case ShiftParam::Nu: nu = v; break;
    case ShiftParam::Mu: mu = v; break;
    case ShiftParam::Kappa: kappa = v; break;
    }
}

const std::vector<KindInfo>& catalog() {
    using F = Family;
    using S = ShiftParam;
    static const std::vector<KindInfo> table = {
        {Kind::Coulomb, "coulomb", F::Scalar, 1, S::Kappa, +1, "x > 0", "-omega^2/kappa^2", "kappa omega"},
        {Kind::Rosen1, "rosen1", F::Scalar, 1, S::Kappa, +1, "cos(lambda x) != 0",
         "lambda^2 kappa^2 - omega^2/kappa^2", "kappa lambda omega"},
        {Kind::Rosen2, "rosen2", F::Scalar, 1, S::Kappa, -1, "all x", "-lambda^2 kappa^2 - omega^2/kappa^2",
         "kappa lambda omega"},
        {Kind::Eckart, "eckart", F::Scalar, 1, S::Kappa, +1, "x > 0", "-lambda^2 kappa^2 - omega^2/kappa^2",
         "kappa lambda omega"},
        {Kind::HarmonicOsc, "harmonic", F::Scalar, 1, S::Kappa, +1, "all x", "mu (2 kappa + 1)", "mu kappa"},
        {Kind::Osc3D, "osc3d", F::Scalar, 1, S::Kappa, +1, "x > 0", "4 mu kappa", "mu kappa"},
        {Kind::Scarf1, "scarf1", F::Scalar, 1, S::Kappa, +1, "cos(lambda x) != 0", "lambda^2 kappa^2",
         "kappa lambda mu"},
        {Kind::Scarf2, "scarf2", F::Scalar, 1, S::Kappa, -1, "all x", "-lambda^2 kappa^2", "kappa lambda mu"},
        {Kind::GenPoschlTeller, "gpt", F::Scalar, 1, S::Kappa, -1, "x > 0", "-lambda^2 kappa^2",
         "kappa lambda mu"},
        {Kind::Morse, "morse", F::Scalar, 1, S::Kappa, -1, "all x", "-kappa^2", "kappa mu"},

        {Kind::Inverse, "inverse", F::Matrix2Diag, 2, S::Nu, +1, "x > 0", "-omega^2/(2 nu + 1)^2", "nu mu omega"},
        {Kind::Exp, "exp", F::Matrix2Diag, 2, S::Nu, +1, "all x", "-lambda^2 (nu^2 + omega^2/nu^2)",
         "nu mu omega lambda"},
        {Kind::Tan, "tan", F::Matrix2Diag, 2, S::Nu, +1, "cos(lambda x) != 0", "lambda^2 (nu^2 - omega^2/nu^2)",
         "nu mu omega lambda"},
        {Kind::Cotanh, "cotanh", F::Matrix2Diag, 2, S::Nu, +1, "x > 0", "-lambda^2 (nu^2 + omega^2/nu^2)",
         "nu mu omega lambda"},
        {Kind::Tanh, "tanh", F::Matrix2Diag, 2, S::Nu, +1, "all x", "-lambda^2 (nu^2 + omega^2/nu^2)",
         "nu mu omega lambda"},

        {Kind::DualInverse, "dual-inverse", F::Matrix2Dual, 2, S::Mu, +1, "x > 0", "-omega^2/(4 (mu + 1)^2)",
         "nu mu omega"},
        {Kind::DualTan, "dual-tan", F::Matrix2Dual, 2, S::Mu, +1, "cos(lambda x) != 0",
         "lambda^2 ((2 mu + 1)^2/4 - 4 omega^2/(2 mu + 1)^2)", "nu mu omega lambda"},
        {Kind::DualCotanh, "dual-cotanh", F::Matrix2Dual, 2, S::Mu, +1, "x > 0",
         "-lambda^2 ((2 mu + 1)^2/4 + 4 omega^2/(2 mu + 1)^2)", "nu mu omega lambda"},

        {Kind::W1, "w1", F::Matrix2NonDiag, 2, S::Kappa, +1, "sec(lambda x - c) sec(lambda x + c) > 0",
         "lambda^2 (kappa^2 - omega^2/kappa^2), omega^2 = r2^2 + r3^2", "kappa lambda mu c r2 r3"},
        {Kind::W2, "w2", F::Matrix2NonDiag, 2, S::Kappa, +1, "csch(lambda x - c) csch(lambda x + c) > 0",
         "-lambda^2 (kappa^2 + omega^2/kappa^2), omega^2 = r2^2 + r3^2", "kappa lambda mu c r2 r3"},
        {Kind::W3, "w3", F::Matrix2NonDiag, 2, S::Kappa, +1, "all x",
         "-lambda^2 (kappa^2 + omega^2/kappa^2), omega^2 = r2^2 + r3^2", "kappa lambda mu c r2 r3"},
        {Kind::W4, "w4", F::Matrix2NonDiag, 2, S::Kappa, +1, "lambda x > c",
         "-lambda^2 (kappa^2 + omega^2/kappa^2), omega^2 = r2^2 + r3^2", "kappa lambda mu c r2 r3"},
        {Kind::W5, "w5", F::Matrix2NonDiag, 2, S::Kappa, +1, "all x",
         "-lambda^2 (kappa^2 + omega^2/kappa^2), omega^2 = r2^2 + r3^2", "kappa lambda mu r2 r3"},
        {Kind::W6, "w6", F::Matrix2NonDiag, 2, S::Kappa, +1, "x > 0",
         "-lambda^2 (kappa^2 + omega^2/kappa^2), omega^2 = r2^2 + r3^2", "kappa lambda mu r2 r3"},
        {Kind::W7, "w7", F::Matrix2NonDiag, 2, S::Kappa, +1, "|x| > |c|", "-omega^2/kappa^2, omega^2 = r2^2 + r3^2",
         "kappa mu c r2 r3"},
        {Kind::W8, "w8", F::Matrix2NonDiag, 2, S::Kappa, +1, "x > 0", "-omega^2/kappa^2, omega^2 = r2^2 + r3^2",
         "kappa mu r2 r3"},
        {Kind::W9, "w9", F::Matrix2NonDiag, 2, S::Kappa, +1, "all x", "-lambda^2 (kappa^2 + omega^2/kappa^2)",
         "kappa lambda mu omega"},

        {Kind::M1, "m1", F::Matrix3, 3, S::Kappa, +1, "x > max(0, -c1, -c2)", "-omega^2/kappa^2",
         "kappa omega c1 c2 mu1 mu2"},
        {Kind::M2, "m2", F::Matrix3, 3, S::Kappa, +1, "x > max(0, -c1)", "-omega^2/kappa^2",
         "kappa omega c1 mu1 mu2"},
        {Kind::M3, "m3", F::Matrix3, 3, S::Kappa, +1, "x > max(0, -c1)", "-omega^2/kappa^2",
         "kappa omega c1 mu1 mu2"},
        {Kind::M4, "m4", F::Matrix3, 3, S::Kappa, +1, "x > 0", "-omega^2/kappa^2", "kappa omega c mu1"},
        {Kind::M5, "m5", F::Matrix3, 3, S::Kappa, +1, "x > max(0, -c1, -c2)", "0",
         "kappa c1 c2 mu1 mu2 mu3"},
        {Kind::M6, "m6", F::Matrix3, 3, S::Kappa, +1, "x > max(0, -c2)", "0", "kappa c2 mu1 mu2 mu3"},
        {Kind::M7, "m7", F::Matrix3, 3, S::Kappa, +1, "x > 0", "0", "kappa c mu1 mu2"},
    };
    return table;
}

const KindInfo& info(Kind k) {
    for (const auto& e : catalog())
        if (e.kind == k) return e;
    throw config_error("unknown superpotential kind");
}

std::optional<Kind> kind_from_name(const std::string& name) {
    for (const auto& e : catalog())
        if (name == e.name) return e.kind;
    return std::nullopt;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw config_error(what);
}

void validate(Kind kind, const ParamSet& p) {
    const double vals[] = {p.nu, p.mu, p.omega, p.lambda, p.kappa, p.c, p.c1, p.c2,
                           p.r2, p.r3, p.mu1,  p.mu2, p.mu3,   p.alpha};
    for (double v : vals) require(std::isfinite(v), "parameters must be finite");
    const auto& in = info(kind);
    switch (in.family) {
    case Family::Scalar:
        if (kind == Kind::Coulomb || kind == Kind::Rosen1 || kind == Kind::Rosen2 || kind == Kind::Eckart)
            require(p.kappa != 0.0, std::string(in.name) + ": kappa must be nonzero");
        break;
    case Family::Matrix2Diag:
        if (kind == Kind::Inverse)
            require(2.0 * p.nu + 1.0 != 0.0, "inverse: 2 nu + 1 must be nonzero");
        else
            require(p.nu != 0.0, std::string(in.name) + ": nu must be nonzero");
        break;
    case Family::Matrix2Dual:
        if (kind == Kind::DualInverse)
            require(p.mu + 1.0 != 0.0, "dual-inverse: mu + 1 must be nonzero");
        else
            require(2.0 * p.mu + 1.0 != 0.0, std::string(in.name) + ": 2 mu + 1 must be nonzero");
        break;
    case Family::Matrix2NonDiag:
        require(p.kappa != 0.0, std::string(in.name) + ": kappa must be nonzero");
        if (kind != Kind::W9) {
            const double om2 = p.r2 * p.r2 + p.r3 * p.r3;
            require(std::abs(om2 - p.omega * p.omega) <= 1e-12 * std::max(1.0, om2),
                    std::string(in.name) + ": r2^2 + r3^2 must equal omega^2");
        }
        if (kind == Kind::W1 || kind == Kind::W2 || kind == Kind::W4 || kind == Kind::W7)
            require(p.c != 0.0, std::string(in.name) + ": c must be nonzero");
        break;
    case Family::Matrix3: {
        if (kind == Kind::M1 || kind == Kind::M2 || kind == Kind::M3 || kind == Kind::M4)
            require(p.kappa != 0.0, std::string(in.name) + ": kappa must be nonzero");
        const auto h = hermiticity_domain(kind, p);
        require(h.accepted, std::string(in.name) + ": " + h.reason);
        break;
    }
    }
}

} // namespace

SuperpotentialInstance::SuperpotentialInstance(Kind kind, const ParamSet& params, int shift_count)
    : kind_(kind), params_(params), shift_count_(shift_count) {
    validate(kind, params);
}

SuperpotentialInstance shift(const SuperpotentialInstance& w, int times) {
    const auto& in = info(w.kind());
    ParamSet p = w.params();
    p.set(in.shifted, p.get(in.shifted) + in.step * times);
    return SuperpotentialInstance(w.kind(), p, w.shift_count() + times);
}

double factorization_constant(Kind kind, const ParamSet& p) {
    const double k = p.kappa, l2 = p.lambda * p.lambda, nu = p.nu, mu = p.mu, om = p.omega;
    const double r2 = p.r2 * p.r2 + p.r3 * p.r3;
    switch (kind) {
    case Kind::Coulomb: return -om * om / (k * k);
    case Kind::Rosen1: return l2 * k * k - om * om / (k * k);
    case Kind::Rosen2:
    case Kind::Eckart: return -l2 * k * k - om * om / (k * k);
    case Kind::HarmonicOsc: return mu * (2.0 * k + 1.0);
    case Kind::Osc3D: return 4.0 * mu * k;
    case Kind::Scarf1: return l2 * k * k;
    case Kind::Scarf2:
    case Kind::GenPoschlTeller: return -l2 * k * k;
    case Kind::Morse: return -k * k;
    case Kind::Inverse: return -om * om / ((2.0 * nu + 1.0) * (2.0 * nu + 1.0));
    case Kind::Exp:
    case Kind::Cotanh:
    case Kind::Tanh: return -l2 * (nu * nu + om * om / (nu * nu));
    case Kind::Tan: return l2 * (nu * nu - om * om / (nu * nu));
    case Kind::DualInverse: return -om * om / (4.0 * (mu + 1.0) * (mu + 1.0));
    case Kind::DualTan: {
        const double q = 2.0 * mu + 1.0;
        return l2 * (q * q / 4.0 - 4.0 * om * om / (q * q));
    }
    case Kind::DualCotanh: {
        const double q = 2.0 * mu + 1.0;
        return -l2 * (q * q / 4.0 + 4.0 * om * om / (q * q));
    }
    case Kind::W1: return l2 * (k * k - r2 / (k * k));
    case Kind::W2:
    case Kind::W3:
    case Kind::W4:
    case Kind::W5:
    case Kind::W6: return -l2 * (k * k + r2 / (k * k));
    case Kind::W7:
    case Kind::W8: return -r2 / (k * k);
    case Kind::W9: return -l2 * (k * k + om * om / (k * k));
    case Kind::M1:
    case Kind::M2:
    case Kind::M3:
    case Kind::M4: return -om * om / (k * k);
    case Kind::M5:
    case Kind::M6:
    case Kind::M7: return 0.0;
    }
    return 0.0;
}

double factorization_constant(const SuperpotentialInstance& w) { return factorization_constant(w.kind(), w.params()); }

std::array<Mat, 3> spin_one() {
    const cplx i(0, 1);
    std::array<Mat, 3> s;
    for (auto& m : s) m = Mat::Zero(3, 3);
    s[0](1, 2) = -i;
    s[0](2, 1) = i;
    s[1](0, 2) = i;
    s[1](2, 0) = -i;
    s[2](0, 1) = -i;
    s[2](1, 0) = i;
    return s;
}

Mat conjugate(const Mat& u, const Mat& w) { return u * w * u.adjoint(); }

nlohmann::json to_json(const ParamSet& p) {
    return {{"nu", p.nu},   {"mu", p.mu},   {"omega", p.omega}, {"lambda", p.lambda}, {"kappa", p.kappa},
            {"c", p.c},     {"c1", p.c1},   {"c2", p.c2},       {"r2", p.r2},         {"r3", p.r3},
            {"mu1", p.mu1}, {"mu2", p.mu2}, {"mu3", p.mu3},     {"alpha", p.alpha}};
}

ParamSet params_from_json(const nlohmann::json& j, ParamSet p) {
    if (!j.is_object()) throw config_error("params must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number()) throw config_error("parameter '" + it.key() + "' must be a number");
        const double v = it.value().get<double>();
        const std::string& k = it.key();
        if (k == "nu") p.nu = v;
        else if (k == "mu") p.mu = v;
        else if (k == "omega") p.omega = v;
        else if (k == "lambda") p.lambda = v;
        else if (k == "kappa") p.kappa = v;
        else if (k == "c") p.c = v;
        else if (k == "c1") p.c1 = v;
        else if (k == "c2") p.c2 = v;
        else if (k == "r2") p.r2 = v;
        else if (k == "r3") p.r3 = v;
        else if (k == "mu1") p.mu1 = v;
        else if (k == "mu2") p.mu2 = v;
        else if (k == "mu3") p.mu3 = v;
        else if (k == "alpha") p.alpha = v;
        else throw config_error("unknown parameter '" + k + "'");
    }
    return p;
}

nlohmann::json catalog_json() {
    static const char* family_names[] = {"scalar", "matrix2-diag", "matrix2-dual", "matrix2-nondiag", "matrix3"};
    static const char* shift_names[] = {"kappa", "nu", "mu"};
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : catalog()) {
        out.push_back({{"name", e.name},
                       {"family", family_names[static_cast<int>(e.family)]},
                       {"dim", e.dim},
                       {"shift", {{"param", shift_names[static_cast<int>(e.shifted)]}, {"step", e.step}}},
                       {"domain", e.domain},
                       {"c", e.c_formula},
                       {"params", e.params}});
    }
    return out;
}

} // namespace susy
