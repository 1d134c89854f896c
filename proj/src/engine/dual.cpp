#include "susy/engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace susy {

DualFactorization dual_factorization(Kind kind, const ParamSet& params) {
    Kind dual;
    switch (kind) {
    case Kind::Inverse: dual = Kind::DualInverse; break;
    case Kind::Tan: dual = Kind::DualTan; break;
    case Kind::Cotanh: dual = Kind::DualCotanh; break;
    default:
        throw config_error(std::string(info(kind).name) + ": does not admit the dual shape invariance");
    }
    const SuperpotentialInstance primary(kind, params);
    DualFactorization f{SuperpotentialInstance(dual, params), 0.0, 0.0};
    f.c_mu = -factorization_constant(f.w_tilde);
    const Interval iv = sample_interval(kind, params);
    const Grid g = Grid::closed(iv.lo, iv.hi, 400);
    const Mat I = identity(2);
    for (int j = 0; j < g.m; ++j) {
        const double x = g.x(j);
        const Mat d = pair_potentials(f.w_tilde, x).vminus - hat_potential(primary, x) - f.c_mu * I;
        f.residual = std::max(f.residual, d.norm());
    }
    return f;
}

BoundState dual_ground_state(const SuperpotentialInstance& w_tilde, const Grid& grid) {
    if (info(w_tilde.kind()).family != Family::Matrix2Dual)
        throw config_error("dual_ground_state expects a dual superpotential");
    if (w_tilde.kind() == Kind::DualInverse) return ground_state_analytic(w_tilde, grid);
    return ground_state_numeric(w_tilde, grid);
}

IsospectralReport isospectral_check(const BandedHermitianOperator& matrix,
                                    const std::vector<BandedHermitianOperator>& references, int k) {
    if (k < 1) throw config_error("isospectral_check needs k >= 1");
    if (references.empty()) throw config_error("isospectral_check needs at least one reference");
    IsospectralReport r;
    r.matrix = eigenvalues_banded(matrix, k);
    for (const auto& op : references) {
        const auto v = eigenvalues_banded(op, k);
        r.reference.insert(r.reference.end(), v.begin(), v.end());
    }
    std::sort(r.reference.begin(), r.reference.end());
    r.reference.resize(std::min<size_t>(r.reference.size(), k));
    const size_t n = std::min(r.matrix.size(), r.reference.size());
    for (size_t i = 0; i < n; ++i) r.max_discrepancy = std::max(r.max_discrepancy, std::abs(r.matrix[i] - r.reference[i]));
    return r;
}

std::vector<BandedHermitianOperator> scalar_reference(Kind kind, const ParamSet& p, const Grid& grid) {
    std::vector<BandedHermitianOperator> out;
    for (double sign : {1.0, -1.0}) {
        std::function<Mat(double)> V;
        switch (kind) {
        case Kind::Inverse:
            V = [=](double x) { return scalar_mat((p.nu * p.nu - 0.25) / (x * x) - sign * p.omega / x); };
            break;
        case Kind::Tan:
            V = [=](double x) {
                const double u = p.lambda * x, s = 1.0 / std::cos(u);
                return scalar_mat(p.lambda * p.lambda * (p.nu * (p.nu - 1.0) * s * s + sign * 2.0 * p.omega * std::tan(u)));
            };
            break;
        default: throw config_error(std::string("no scalar reference pair for kind ") + info(kind).name);
        }
        out.push_back(BandedHermitianOperator::schrodinger(grid, V));
    }
    return out;
}

IsospectralReport isospectral_check(Kind kind, const ParamSet& params, const Grid& grid, int k) {
    const auto refs = scalar_reference(kind, params, grid);
    return isospectral_check(hamiltonian_operator(SuperpotentialInstance(kind, params), grid), refs, k);
}

double intertwining_residual(const SuperpotentialInstance& w, const Grid& grid, const Field& phi) {
    const SuperpotentialInstance partner = shift(w);
    const Field lhs = apply_hamiltonian(w, grid, apply_raising(w, grid, phi));
    const Field rhs = apply_raising(w, grid, apply_hamiltonian(partner, grid, phi));
    return std::sqrt(integrate(grid, Field(lhs - rhs)) / integrate(grid, phi));
}

Field random_bump_spinor(const Grid& grid, int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> center(0.3, 0.7), width(0.5, 1.0);
    std::normal_distribution<double> amp;
    const double a = grid.x0, span = grid.back() - grid.x0;
    Field f = Field::Zero(dim, grid.m);
    for (int c = 0; c < dim; ++c) {
        for (int b = 0; b < 3; ++b) {
            const double x0 = a + span * center(rng), s = span / 30.0 * width(rng);
            const cplx z(amp(rng), amp(rng));
            for (int j = 0; j < grid.m; ++j) {
                const double t = (grid.x(j) - x0) / s;
                f(c, j) += z * std::exp(-0.5 * t * t);
            }
        }
    }
    return f;
}

} // namespace susy
