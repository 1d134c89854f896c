#include "susy/engine.hpp"

#include <cmath>
#include <vector>

#include <boost/numeric/odeint.hpp>

namespace susy {

namespace {

namespace ode = boost::numeric::odeint;

std::vector<Mat> sample_w(const SuperpotentialInstance& w, const Grid& g) {
    std::vector<Mat> out;
    out.reserve(g.m);
    for (int j = 0; j < g.m; ++j) out.push_back(evaluate(w, g.x(j)));
    return out;
}

cplx inner(const Grid& g, const Field& a, const Field& b) {
    cplx s = 0.0;
    for (int j = 0; j < g.m; ++j) {
        const double wt = (j == 0 || j == g.m - 1) ? 0.5 : 1.0;
        s += wt * a.col(j).dot(b.col(j));
    }
    return s * g.h;
}

// y^a K_rho(y) and its y-derivative.
struct PowK {
    double v, dv;
};

PowK pow_k(double a, double rho, double y) {
    const double k = bessel_k(rho, y), dk = bessel_k_prime(rho, y);
    const double ya = std::pow(y, a);
    return {ya * k, ya * (a / y * k + dk)};
}

// psi and psi' of the closed-form kernels at x.
void analytic_point(const SuperpotentialInstance& w, double x, Vec& psi, Vec& dpsi) {
    const auto& p = w.params();
    psi.resize(2);
    dpsi.resize(2);
    switch (w.kind()) {
    case Kind::Inverse: {
        const double s = p.omega / (2.0 * p.nu + 1.0), y = s * x, a = p.nu + 1.0;
        const PowK f = pow_k(a, p.mu + 1.0, y), g = pow_k(a, std::abs(p.mu), y);
        psi << f.v, g.v;
        dpsi << s * f.dv, s * g.dv;
        return;
    }
    case Kind::DualInverse: {
        const double s = p.omega / (2.0 * (p.mu + 1.0)), y = s * x, a = p.mu + 1.5;
        const PowK f = pow_k(a, std::abs(p.nu + 0.5), y), g = pow_k(a, std::abs(p.nu - 0.5), y);
        psi << f.v, g.v;
        dpsi << s * f.dv, s * g.dv;
        return;
    }
    case Kind::Exp: {
        const double y = p.mu * std::exp(-p.lambda * x), dy = -p.lambda * y;
        const double a = 0.5 - p.nu, rho = p.omega / p.nu + 0.5;
        const PowK f = pow_k(a, std::abs(rho), y), g = pow_k(a, std::abs(rho - 1.0), y);
        psi << f.v, -g.v;
        dpsi << dy * f.dv, -dy * g.dv;
        return;
    }
    default: break;
    }
    throw config_error(std::string("no closed-form ground state for kind ") + info(w.kind()).name);
}

Field analytic_samples(const SuperpotentialInstance& w, const Grid& g, bool derivative) {
    Field out(2, g.m);
    Vec psi, dpsi;
    for (int j = 0; j < g.m; ++j) {
        analytic_point(w, g.x(j), psi, dpsi);
        out.col(j) = derivative ? dpsi : psi;
    }
    if (!out.allFinite()) throw convergence_error("closed-form ground state overflowed on the grid");
    return out;
}

using State = std::vector<double>;

// Orthonormal span of the decaying solutions, propagated node to node.
struct Sweep {
    std::vector<Eigen::MatrixXcd> Q; // indexed by node
    std::vector<Eigen::MatrixXcd> R; // R[j]: coefficients at the previous node of the sweep -> node j
};

void pack(const Eigen::MatrixXcd& Y, State& s) {
    s.resize(2 * Y.size());
    for (Eigen::Index i = 0; i < Y.size(); ++i) {
        s[2 * i] = Y.data()[i].real();
        s[2 * i + 1] = Y.data()[i].imag();
    }
}

void unpack(const State& s, Eigen::MatrixXcd& Y) {
    for (Eigen::Index i = 0; i < Y.size(); ++i) Y.data()[i] = cplx(s[2 * i], s[2 * i + 1]);
}

// Integrates psi' = -W psi from node `from` toward node `to` (inclusive), starting from
// the given orthonormal columns.
Sweep sweep(const SuperpotentialInstance& w, const Grid& g, int from, int to, const Eigen::MatrixXcd& start) {
    const int d = static_cast<int>(start.rows()), k = static_cast<int>(start.cols());
    const int dir = to >= from ? 1 : -1;
    Sweep out;
    out.Q.resize(g.m);
    out.R.resize(g.m);
    out.Q[from] = start;
    Eigen::MatrixXcd Y(d, k), dY(d, k);
    auto rhs = [&](const State& s, State& ds, double x) {
        unpack(s, Y);
        dY = -evaluate(w, x) * Y;
        pack(dY, ds);
    };
    auto stepper = ode::make_controlled(1e-12, 1e-12, ode::runge_kutta_dopri5<State>());
    State s;
    for (int j = from; j != to; j += dir) {
        pack(out.Q[j], s);
        const double x0 = g.x(j), x1 = g.x(j + dir);
        ode::integrate_adaptive(stepper, rhs, s, x0, x1, 0.25 * (x1 - x0));
        Y.resize(d, k);
        unpack(s, Y);
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Y);
        out.Q[j + dir] = qr.householderQ() * Eigen::MatrixXcd::Identity(d, k);
        out.R[j + dir] = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    }
    return out;
}

Eigen::MatrixXcd end_directions(const Mat& W, bool left) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd(W)};
    std::vector<int> keep;
    for (int i = 0; i < W.rows(); ++i) {
        const double e = es.eigenvalues()[i];
        if (left ? e < 0.0 : e > 0.0) keep.push_back(i);
    }
    Eigen::MatrixXcd out(W.rows(), static_cast<Eigen::Index>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c) out.col(c) = es.eigenvectors().col(keep[c]);
    return out;
}

[[noreturn]] void no_kernel(const char* why) {
    throw GateError("kernel", std::string("no normalizable decaying solution of a- psi = 0 (") + why + ")");
}

} // namespace

BoundState make_state(int n, double energy, const Grid& grid, Field samples, Provenance p) {
    if (samples.cols() != grid.m) throw domain_error("state sample count does not match the grid");
    const double nrm = std::sqrt(integrate(grid, samples));
    if (!(nrm > 0.0) || !std::isfinite(nrm)) throw convergence_error("state has zero or non-finite norm");
    Eigen::Index jmax = 0, cmax = 0;
    samples.colwise().norm().maxCoeff(&jmax);
    samples.col(jmax).cwiseAbs().maxCoeff(&cmax);
    const cplx ref = samples(cmax, jmax);
    const cplx phase = std::conj(ref) / std::abs(ref);
    BoundState s;
    s.n = n;
    s.energy = energy;
    s.grid = grid;
    s.samples = samples * (phase / nrm);
    s.norm = nrm;
    s.provenance = p;
    return s;
}

double overlap(const BoundState& a, const BoundState& b) {
    if (a.grid.m != b.grid.m || a.samples.rows() != b.samples.rows())
        throw domain_error("overlap: states live on different grids");
    return std::abs(inner(a.grid, a.samples, b.samples));
}

BoundState ground_state_analytic(const SuperpotentialInstance& w, const Grid& grid) {
    require_gate(w);
    return make_state(0, factorization_constant(w), grid, analytic_samples(w, grid, false),
                      Provenance::AnalyticBessel);
}

double analytic_kernel_residual(const SuperpotentialInstance& w, const Grid& grid) {
    const Field psi = analytic_samples(w, grid, false);
    Field r = analytic_samples(w, grid, true);
    for (int j = 0; j < grid.m; ++j) r.col(j) += evaluate(w, grid.x(j)) * psi.col(j);
    return std::sqrt(integrate(grid, r) / integrate(grid, psi));
}

BoundState find_kernel(const SuperpotentialInstance& w, const Grid& grid) {
    if (grid.m < 8) throw domain_error("kernel search needs at least 8 nodes");
    const int m = grid.m, jm = m / 2, d = w.dim();
    const Eigen::MatrixXcd left0 = end_directions(evaluate(w, grid.x(0)), true);
    const Eigen::MatrixXcd right0 = end_directions(evaluate(w, grid.back()), false);
    const int kl = static_cast<int>(left0.cols()), kr = static_cast<int>(right0.cols()), k = kl + kr;
    if (kl == 0) no_kernel("no solution vanishes at the left end");
    if (kr == 0) no_kernel("no solution decays at the right end");

    const Sweep L = sweep(w, grid, 0, jm, left0);
    const Sweep R = sweep(w, grid, m - 1, jm, right0);
    Eigen::MatrixXcd M(d, k);
    M << L.Q[jm], -R.Q[jm];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
    if (k <= d) {
        const auto& sv = svd.singularValues();
        if (sv[k - 1] > 1e-6 * sv[0]) no_kernel("decaying branches do not match");
    }
    const Eigen::VectorXcd v = svd.matrixV().col(k - 1);

    Field psi(d, m);
    Eigen::VectorXcd c = v.head(kl);
    psi.col(jm) = L.Q[jm] * c;
    for (int j = jm; j > 0; --j) {
        c = L.R[j].triangularView<Eigen::Upper>().solve(c);
        psi.col(j - 1) = L.Q[j - 1] * c;
    }
    c = v.tail(kr);
    for (int j = jm; j < m - 1; ++j) {
        c = R.R[j].triangularView<Eigen::Upper>().solve(c);
        psi.col(j + 1) = R.Q[j + 1] * c;
    }
    if (!psi.allFinite()) no_kernel("reconstruction overflowed");
    return make_state(0, factorization_constant(w), grid, psi, Provenance::NumericKernel);
}

BoundState ground_state_numeric(const SuperpotentialInstance& w, const Grid& grid) {
    require_gate(w);
    return find_kernel(w, grid);
}

Field apply_lowering(const SuperpotentialInstance& w, const Grid& grid, const Field& psi) {
    Field out = differentiate(grid, psi, 1);
    const auto W = sample_w(w, grid);
    for (int j = 0; j < grid.m; ++j) out.col(j) += W[j] * psi.col(j);
    return out;
}

Field apply_raising(const SuperpotentialInstance& w, const Grid& grid, const Field& psi) {
    Field out = -differentiate(grid, psi, 1);
    const auto W = sample_w(w, grid);
    for (int j = 0; j < grid.m; ++j) out.col(j) += W[j] * psi.col(j);
    return out;
}

Field apply_hamiltonian(const SuperpotentialInstance& w, const Grid& grid, const Field& psi) {
    Field out = -differentiate(grid, psi, 2);
    for (int j = 0; j < grid.m; ++j) out.col(j) += hat_potential(w, grid.x(j)) * psi.col(j);
    return out;
}

double kernel_residual(const SuperpotentialInstance& w, const BoundState& s) {
    const Field r = apply_lowering(w, s.grid, s.samples);
    return std::sqrt(integrate(s.grid, r) / integrate(s.grid, s.samples));
}

LadderProblem::LadderProblem(SuperpotentialInstance w, const Grid& g, int n)
    : superpotential(std::move(w)), grid(g), n_max(n) {
    if (n_max < 0) throw config_error("n_max must be >= 0");
    require_gate(superpotential);
}

BoundState excited_state(const LadderProblem& problem, int n) {
    if (n < 0 || n > problem.n_max)
        throw config_error("level " + std::to_string(n) + " outside 0..n_max=" + std::to_string(problem.n_max));
    const auto& w = problem.superpotential;
    for (int k = 0; k <= n; ++k) require_gate(shift(w, k));
    const SuperpotentialInstance top = shift(w, n);
    const Kind kind = w.kind();
    const bool closed = kind == Kind::Inverse || kind == Kind::DualInverse || kind == Kind::Exp;
    BoundState g0 = closed ? ground_state_analytic(top, problem.grid) : find_kernel(top, problem.grid);
    if (n == 0) return g0;
    Field psi = g0.samples;
    for (int k = n - 1; k >= 0; --k) psi = apply_raising(shift(w, k), problem.grid, psi);
    return make_state(n, factorization_constant(top), problem.grid, psi, Provenance::Ladder);
}

BoundState eigen_state(const SuperpotentialInstance& w, const Grid& grid, int n) {
    const auto op = hamiltonian_operator(w, grid);
    const EigenResult r = eig_banded(op, n + 1);
    if (static_cast<int>(r.vectors.size()) <= n) throw convergence_error("eigensolver returned too few states");
    const int d = w.dim();
    Field f(d, grid.m);
    for (int j = 0; j < grid.m; ++j)
        for (int c = 0; c < d; ++c) f(c, j) = r.vectors[n][j * d + c];
    return make_state(n, r.values[n], grid, f, Provenance::Eigensolver);
}

} // namespace susy
