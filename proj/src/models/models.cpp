#include "susy/models.hpp"

#include <algorithm>
#include <cmath>

namespace susy {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx I(0.0, 1.0);

std::string unitary_label(const Mat& u) {
    const char* names[] = {"I", "sigma1", "sigma2", "sigma3"};
    if (u.rows() == 2)
        for (int a = 0; a < 4; ++a)
            if ((u - pauli(a)).norm() < 1e-15) return names[a];
    return u.rows() == 1 ? "1" : "custom";
}

// exp(-i phi S3) in closed form: S3^3 = S3.
Mat rotation(double phi) {
    const Mat s3 = spin1(3);
    return identity(3) - I * std::sin(phi) * s3 + (std::cos(phi) - 1.0) * s3 * s3;
}

Mat spin_dot(double u1, double u2) { return u1 * spin1(1) + u2 * spin1(2); }

} // namespace

nlohmann::json ModelDescriptor::to_json() const {
    return {{"name", name},
            {"model_params", model_params},
            {"catalog_kind", info(catalog_kind).name},
            {"params", susy::to_json(params)},
            {"unitary", unitary_label(unitary)},
            {"radial_scale", radial_scale},
            {"energy_scale", energy_scale},
            {"energy_offset", energy_offset}};
}

double mapping_defect(const ModelDescriptor& m, const std::vector<double>& xs) {
    const SuperpotentialInstance w = m.instance();
    double worst = 0.0;
    for (double x : xs) {
        const Mat mapped = m.unitary * hat_potential(w, x) * m.unitary.adjoint();
        worst = std::max(worst, (m.potential(x) - mapped).norm());
    }
    return worst;
}

ModelDescriptor ps_model(int kappa, double mass, double coupling) {
    if (kappa < 1) throw config_error("ps: kappa must be a natural number");
    if (!(mass > 0.0) || coupling == 0.0) throw config_error("ps: mass must be > 0 and the coupling nonzero");
    ModelDescriptor m;
    m.name = "ps";
    m.kind = ModelKind::PsSpinHalf;
    m.model_params = {{"kappa", kappa}, {"mass", mass}, {"coupling", coupling}};
    m.catalog_kind = Kind::Inverse;
    m.params.nu = kappa;
    m.params.mu = 0.0;
    m.params.omega = 1.0;
    // the catalog carries -omega sigma1 / x; conjugation by sigma3 flips it to +sigma1 / x
    m.unitary = pauli(3);
    // r = s x with s = 1/(2 m |g|) turns p^2/2m + g(...)/r into (2 m g^2)(-d^2 + ... + 1/x)
    m.radial_scale = 1.0 / (2.0 * mass * std::abs(coupling));
    m.energy_scale = 2.0 * mass * coupling * coupling;
    const double k = kappa;
    m.potential = [k](double x) -> Mat {
        return (k * (k * identity(2) - pauli(3))) / (x * x) + pauli(1) / x;
    };
    return m;
}

LadderProblem ps_radial_problem(int kappa, const Grid& grid, int n_max) {
    return LadderProblem(ps_model(kappa).instance(), grid, n_max);
}

ModelDescriptor ep1_model(double lambda, double p, double nu) {
    ModelDescriptor m;
    m.name = "ep1";
    m.kind = ModelKind::ExpField;
    m.model_params = {{"lambda", lambda}, {"p", p}, {"nu", nu}};
    m.catalog_kind = Kind::Exp;
    m.params.lambda = 1.0;
    m.params.nu = nu;
    m.params.mu = std::abs(lambda);
    m.params.omega = std::abs(p) / 2.0;
    // sigma3 flips the sign of the sigma1 term, sigma1 that of the sigma3 term, sigma2 both
    const bool flip1 = lambda < 0.0, flip3 = p > 0.0;
    m.unitary = pauli(flip1 ? (flip3 ? 2 : 3) : (flip3 ? 1 : 0));
    m.energy_offset = p * p + 0.25;
    m.potential = [lambda, p, nu](double y) -> Mat {
        const double e = std::exp(-y);
        return lambda * lambda * e * e * identity(2) - lambda * (2.0 * nu - 1.0) * e * pauli(1) - p * pauli(3);
    };
    return m;
}

LadderProblem ep1_reduction(double lambda, double p, double nu, const Grid& grid, int n_max) {
    return LadderProblem(ep1_model(lambda, p, nu).instance(), grid, n_max);
}

Mat spin1(int a) {
    Mat s = Mat::Zero(3, 3);
    switch (a) {
    case 1:
        s(1, 2) = -I;
        s(2, 1) = I;
        break;
    case 2:
        s(0, 2) = I;
        s(2, 0) = -I;
        break;
    case 3:
        s(0, 1) = -I;
        s(1, 0) = I;
        break;
    default: throw std::out_of_range("spin1 index");
    }
    return s;
}

Mat spin1_angular_potential(double mu, double lambda, double phi, Spin1Pairing pairing) {
    const double n1 = std::cos(phi), n2 = std::sin(phi);
    const Mat dot = pairing == Spin1Pairing::Conventional ? spin_dot(n1, n2) : spin_dot(n2, n1);
    const Mat cross = spin_dot(n2, -n1);
    return mu * (2.0 * cross * cross - identity(3)) + lambda * (2.0 * dot * dot - identity(3));
}

double spin1_rotation_defect(double mu, double lambda, Spin1Pairing pairing) {
    const Mat v0 = spin1_angular_potential(mu, lambda, 0.0, pairing);
    double worst = 0.0;
    for (int k = 0; k < 64; ++k) {
        const double phi = 2.0 * kPi * k / 64.0;
        const Mat R = rotation(phi);
        worst = std::max(worst, (spin1_angular_potential(mu, lambda, phi, pairing) - R * v0 * R.adjoint()).norm());
    }
    return worst;
}

Spin1RadialProblem spin1_radial_problem(double mu, double lambda, int j) {
    if (j < 0) throw config_error("ps-spin1: j must be >= 0");
    Spin1RadialProblem p;
    p.mu = mu;
    p.lambda = lambda;
    p.j = j;
    const Mat v0 = spin1_angular_potential(mu, lambda, 0.0, Spin1Pairing::Conventional);
    const Mat jm = double(j) * identity(3) - spin1(3);
    const Mat centrifugal = jm * jm - 0.25 * identity(3);
    p.assembled = [centrifugal, v0](double r) -> Mat { return centrifugal / (r * r) + v0 / r; };

    const double s = 1.0 / std::sqrt(2.0);
    p.basis = Mat::Zero(3, 3);
    p.basis.col(0) << s, -I * s, 0.0; // S3 = -1
    p.basis.col(1) << 0.0, 0.0, 1.0;  // S3 = 0
    p.basis.col(2) << s, I * s, 0.0;  // S3 = +1

    const double jd = j;
    ModelDescriptor& sc = p.scalar_block;
    sc.name = "ps-spin1/scalar";
    sc.kind = ModelKind::PsSpinOne;
    sc.model_params = {{"mu", mu}, {"lambda", lambda}, {"j", j}};
    sc.catalog_kind = Kind::Coulomb;
    sc.params.kappa = jd + 0.5;
    sc.params.omega = -(lambda + mu) / 2.0;
    sc.unitary = identity(1);
    sc.potential = [jd, mu, lambda](double r) { return scalar_mat((jd * jd - 0.25) / (r * r) + (lambda + mu) / r); };

    ModelDescriptor& mb = p.matrix_block;
    mb.name = "ps-spin1";
    mb.kind = ModelKind::PsSpinOne;
    mb.model_params = sc.model_params;
    mb.catalog_kind = Kind::Inverse;
    mb.params.nu = jd;
    mb.params.mu = 0.5;
    mb.params.omega = std::abs(lambda - mu);
    mb.unitary = lambda - mu >= 0.0 ? identity(2) : pauli(3);
    // S3 = +1, -1 channels: diag((j-1)^2, (j+1)^2) - 1/4 over r^2 and (mu - lambda) sigma1 / r
    mb.potential = [jd, mu, lambda](double r) -> Mat {
        Mat v = Mat::Zero(2, 2);
        v(0, 0) = ((jd - 1.0) * (jd - 1.0) - 0.25) / (r * r);
        v(1, 1) = ((jd + 1.0) * (jd + 1.0) - 0.25) / (r * r);
        v(0, 1) = v(1, 0) = (mu - lambda) / r;
        return v;
    };
    return p;
}

BandedHermitianOperator spin1_assembled_operator(const Spin1RadialProblem& p, const Grid& grid) {
    return BandedHermitianOperator::schrodinger(grid, p.assembled);
}

std::vector<BandedHermitianOperator> spin1_decomposed_operators(const Spin1RadialProblem& p, const Grid& grid) {
    return {BandedHermitianOperator::schrodinger(grid, p.scalar_block.potential),
            BandedHermitianOperator::schrodinger(grid, p.matrix_block.potential)};
}

std::vector<std::string> model_names() { return {"ps", "ep1", "ps-spin1"}; }

ModelDescriptor model_by_name(const std::string& name, const nlohmann::json& q) {
    auto num = [&](const char* key, double def) { return q.contains(key) ? q.at(key).get<double>() : def; };
    try {
        if (name == "ps") return ps_model(q.value("kappa", 1), num("mass", 0.5), num("coupling", 1.0));
        if (name == "ep1") return ep1_model(num("lambda", 1.0), num("p", -0.5), num("nu", -2.0));
        if (name == "ps-spin1") return spin1_radial_problem(num("mu", 0.0), num("lambda", 1.0), q.value("j", 1)).matrix_block;
    } catch (const nlohmann::json::exception& e) {
        throw config_error(name + ": bad model parameter: " + e.what());
    }
    throw config_error("unknown model '" + name + "' (expected ps, ep1 or ps-spin1)");
}

} // namespace susy
