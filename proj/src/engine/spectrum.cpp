#include "susy/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace susy {

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool bounded_by_nu(Kind k) { return k == Kind::Exp || k == Kind::Tanh || k == Kind::Cotanh; }

double lowest_eigenvalue(const Mat& V) {
    if (V.rows() == 1) return V(0, 0).real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Eigen::MatrixXcd(V), Eigen::EigenvaluesOnly);
    return es.eigenvalues()[0];
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

Domain natural_domain(Kind kind, const ParamSet& p) {
    const double l = std::abs(p.lambda) > 0.0 ? std::abs(p.lambda) : 1.0;
    switch (kind) {
    case Kind::Coulomb:
    case Kind::Osc3D:
    case Kind::Inverse:
    case Kind::DualInverse:
    case Kind::Eckart:
    case Kind::GenPoschlTeller:
    case Kind::Cotanh:
    case Kind::DualCotanh:
    case Kind::W6:
    case Kind::W8: return {0.0, kInf};
    case Kind::Rosen1:
    case Kind::Scarf1:
    case Kind::Tan:
    case Kind::DualTan: return {-kHalfPi / l, kHalfPi / l};
    case Kind::W1: {
        const double half = kHalfPi - std::abs(p.c);
        return {-half / l, half / l};
    }
    case Kind::W2: return {std::abs(p.c) / l, kInf};
    case Kind::W4: return {p.c / l, kInf};
    case Kind::W7: return {std::abs(p.c), kInf};
    case Kind::M1:
    case Kind::M2:
    case Kind::M3:
    case Kind::M4:
    case Kind::M5:
    case Kind::M6:
    case Kind::M7: return {hermiticity_domain(kind, p).x_min, kInf};
    default: return {-kInf, kInf};
    }
}

Grid standard_grid(const SuperpotentialInstance& w, int m, int n_max) {
    if (m < 8) throw config_error("standard_grid needs m >= 8");
    const Kind kind = w.kind();
    const auto& p = w.params();
    const Domain dom = natural_domain(kind, p);
    const double s = std::abs(p.lambda) > 0.0 ? 1.0 / std::abs(p.lambda) : 1.0;

    double e_top = factorization_constant(w);
    for (int n = 1; n <= n_max; ++n) {
        try {
            e_top = std::max(e_top, factorization_constant(shift(w, n)));
        } catch (const Error&) {
            break;
        }
    }
    auto vmin = [&](double x) {
        try {
            return lowest_eigenvalue(hat_potential(w, x));
        } catch (const Error&) {
            return kInf;
        }
    };

    // Reference point: bottom of the lowest potential surface on a coarse scan.
    const double lo = std::isfinite(dom.a) ? dom.a : -60.0 * s;
    const double hi = std::isfinite(dom.b) ? dom.b : (std::isfinite(dom.a) ? dom.a + 60.0 * s : 60.0 * s);
    double x_ref = 0.5 * (lo + hi), v_ref = kInf;
    const int scan = 4000;
    for (int i = 1; i < scan; ++i) {
        const double x = lo + (hi - lo) * i / scan;
        const double v = vmin(x);
        if (v < v_ref) {
            v_ref = v;
            x_ref = x;
        }
    }

    // March outward accumulating the WKB exponent of the top level.
    auto cut = [&](double dir) {
        const double dx = 0.01 * s, cap = 3000.0 * s;
        double S = 0.0, x = x_ref;
        while (S < 30.0 && std::abs(x - x_ref) < cap) {
            x += dir * dx;
            const double v = vmin(x);
            if (std::isfinite(v) && v > e_top) S += std::sqrt(v - e_top) * dx;
        }
        return x;
    };
    const double a = std::isfinite(dom.a) ? dom.a : cut(-1.0);
    const double b = std::isfinite(dom.b) ? dom.b : cut(1.0);
    return Grid::interior(a, b, m);
}

BandedHermitianOperator hamiltonian_operator(const SuperpotentialInstance& w, const Grid& grid) {
    std::vector<Mat> V;
    V.reserve(grid.m);
    for (int j = 0; j < grid.m; ++j) V.push_back(hat_potential(w, grid.x(j)));
    return BandedHermitianOperator::schrodinger(grid, V);
}

std::vector<double> numeric_levels(const SuperpotentialInstance& w, const Grid& grid, int k) {
    return eigenvalues_banded(hamiltonian_operator(w, grid), k);
}

SpectrumTable energy_levels(Kind kind, const ParamSet& params, int n_max) {
    if (n_max < 0) throw config_error("n_max must be >= 0");
    const SuperpotentialInstance w(kind, params);
    require_gate(w);
    const bool dual = info(kind).family == Family::Matrix2Dual;
    SpectrumTable t;
    t.kind = kind;
    t.params = params;
    for (int n = 0; n <= n_max; ++n) {
        const SuperpotentialInstance wn = shift(w, n);
        if (bounded_by_nu(kind)) {
            const double N = wn.level();
            if (!(N < 0.0 && N * N > std::abs(params.omega)))
                throw GateError("EV1", "(nu + n)^2 must be > |omega| with nu + n < 0; fails at n = " +
                                           std::to_string(n));
        }
        SpectrumRow r;
        r.n = n;
        r.N = dual ? wn.level() + 0.5 : wn.level();
        r.e_analytic = factorization_constant(wn);
        t.rows.push_back(r);
    }
    return t;
}

void SpectrumTable::attach_numeric(const std::vector<double>& values) {
    for (size_t i = 0; i < rows.size() && i < values.size(); ++i) {
        rows[i].e_numeric = values[i];
        rows[i].abs_err = std::abs(values[i] - rows[i].e_analytic);
        rows[i].has_numeric = true;
    }
}

double SpectrumTable::max_abs_err() const {
    double e = 0.0;
    for (const auto& r : rows)
        if (r.has_numeric) e = std::max(e, r.abs_err);
    return e;
}

std::string SpectrumTable::to_csv() const {
    std::ostringstream os;
    os << "n,N,E_analytic,E_numeric,abs_err\n";
    for (const auto& r : rows) {
        os << r.n << ',' << fmt12(r.N) << ',' << fmt12(r.e_analytic) << ',';
        if (r.has_numeric) os << fmt12(r.e_numeric) << ',' << fmt12(r.abs_err);
        else os << ',';
        os << '\n';
    }
    return os.str();
}

nlohmann::json SpectrumTable::to_json() const {
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j{{"n", r.n}, {"N", r.N}, {"E_analytic", r.e_analytic}};
        if (r.has_numeric) {
            j["E_numeric"] = r.e_numeric;
            j["abs_err"] = r.abs_err;
        } else {
            j["E_numeric"] = nullptr;
            j["abs_err"] = nullptr;
        }
        rs.push_back(j);
    }
    return {{"kind", info(kind).name}, {"params", susy::to_json(params)}, {"rows", rs}};
}

} // namespace susy
