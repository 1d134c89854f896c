#include "susy/pauli_landau.hpp"

#include <algorithm>
#include <cmath>

namespace susy {

namespace {

SuperpotentialInstance landau_superpotential(LandauSector sector, double omega, double n) {
    ParamSet p;
    p.mu = omega;
    // Cartesian: W = omega y with Vhat = W^2 - W' (kappa = -1/2 cancels the constant).
    // Radial: W = omega r - (n + 1)/r.
    p.kappa = sector == LandauSector::Cartesian ? -0.5 : n + 1.0;
    return SuperpotentialInstance(sector == LandauSector::Cartesian ? Kind::HarmonicOsc : Kind::Osc3D, p);
}

std::vector<double> richardson(const std::function<double(double)>& V, double a, double b, int m, int k) {
    auto levels = [&](int mm) {
        return eigenvalues_banded(BandedHermitianOperator::schrodinger(
                                      Grid::interior(a, b, mm), [&](double x) { return scalar_mat(V(x)); }),
                                  k);
    };
    const auto coarse = levels(m), fine = levels(2 * m + 1);
    std::vector<double> out(k);
    for (int i = 0; i < k; ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    return out;
}

} // namespace

LandauReduction landau_reduction(double B, LandauSector sector, const Grid& grid, double n, int n_max) {
    if (!(B > 0.0)) throw config_error("landau_reduction needs B > 0");
    if (sector == LandauSector::Radial && !(n >= 0.0)) throw config_error("radial sector needs n >= 0");
    const double w = B;
    LandauReduction r{sector, w, n, LadderProblem(landau_superpotential(sector, w, n), grid, n_max), 0.0, {}, {}};
    if (sector == LandauSector::Cartesian) {
        r.v_minus = [w](double y) { return w * w * y * y - w; };
        r.v_plus = [w](double y) { return w * w * y * y + w; };
    } else {
        r.energy_offset = -2.0 * w * (n + 1.0);
        r.v_minus = [w, n](double x) { return n * (n + 1.0) / (x * x) + w * w * x * x - w; };
        r.v_plus = [w, n](double x) { return n * (n - 1.0) / (x * x) + w * w * x * x + w; };
    }
    return r;
}

BandedHermitianOperator landau_block_operator(const LandauReduction& r, const Grid& grid) {
    return BandedHermitianOperator::schrodinger(grid, [&](double x) {
        Mat m = Mat::Zero(2, 2);
        m(0, 0) = r.v_plus(x);
        m(1, 1) = r.v_minus(x);
        return m;
    });
}

std::vector<double> landau_spectrum(const LandauReduction& r, double a, double b, int m, int k) {
    if (k < 1) throw config_error("landau_spectrum needs k >= 1");
    auto plus = richardson(r.v_plus, a, b, m, k), minus = richardson(r.v_minus, a, b, m, k);
    plus.insert(plus.end(), minus.begin(), minus.end());
    std::sort(plus.begin(), plus.end());
    plus.resize(k);
    return plus;
}

} // namespace susy
