#include "susy/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>

namespace susy {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// LDL^H of a small Hermitian block with pivots nudged away from zero. Returns the
// inverse built from the same (nudged) factors and adds the number of negative
// pivots to *negatives.
Mat ldl_inverse(const Mat& T, double tiny, int* negatives) {
    const int d = static_cast<int>(T.rows());
    if (d == 1) {
        double p = T(0, 0).real();
        if (std::abs(p) < tiny) p = -tiny;
        if (negatives && p < 0.0) ++*negatives;
        return scalar_mat(1.0 / p);
    }
    Mat A = T;
    Mat L = Mat::Identity(d, d);
    Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 3, 1> D(d);
    for (int k = 0; k < d; ++k) {
        double p = A(k, k).real();
        if (std::abs(p) < tiny) p = -tiny;
        D[k] = p;
        if (negatives && p < 0.0) ++*negatives;
        for (int i = k + 1; i < d; ++i) L(i, k) = A(i, k) / p;
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j) A(i, j) -= A(i, k) * std::conj(A(j, k)) / p;
    }
    // T = L D L^H  =>  T^{-1} = L^{-H} D^{-1} L^{-1}
    Mat Linv = L.triangularView<Eigen::UnitLower>().solve(Mat::Identity(d, d));
    Mat Dinv = Mat::Zero(d, d);
    for (int k = 0; k < d; ++k) Dinv(k, k) = 1.0 / D[k];
    return Linv.adjoint() * Dinv * Linv;
}

struct Factorization {
    std::vector<Mat> Tinv;
    int negatives = 0;
};

// Block LDL^H of (H - sigma I) along the chain; T_j = D_j - sigma - b_{j-1}^2 T_{j-1}^{-1}.
Factorization factor(const BandedHermitianOperator& op, double sigma, double tiny, bool keep) {
    Factorization f;
    const int n = op.nodes();
    if (keep) f.Tinv.resize(n);
    Mat prev_inv;
    for (int j = 0; j < n; ++j) {
        Mat T = op.diag[j];
        T.diagonal().array() -= sigma;
        if (j > 0) {
            const double b = op.link[j - 1];
            T -= (b * b) * prev_inv;
            T = 0.5 * (T + T.adjoint()).eval();
        }
        prev_inv = ldl_inverse(T, tiny, &f.negatives);
        if (keep) f.Tinv[j] = prev_inv;
    }
    return f;
}

// Solve (H - sigma) x = r with the stored block factorization.
Eigen::VectorXcd block_solve(const BandedHermitianOperator& op, const Factorization& f, const Eigen::VectorXcd& r) {
    const int n = op.nodes(), b = op.block;
    std::vector<Vec> g(n);
    for (int j = 0; j < n; ++j) {
        g[j] = r.segment(j * b, b);
        if (j > 0) g[j] += op.link[j - 1] * (f.Tinv[j - 1] * g[j - 1]);
    }
    Eigen::VectorXcd x(op.dim());
    Vec next = f.Tinv[n - 1] * g[n - 1];
    x.segment((n - 1) * b, b) = next;
    for (int j = n - 2; j >= 0; --j) {
        next = f.Tinv[j] * (g[j] + op.link[j] * next);
        x.segment(j * b, b) = next;
    }
    return x;
}

double rayleigh(const BandedHermitianOperator& op, const Eigen::VectorXcd& v) { return v.dot(op.apply(v)).real(); }

} // namespace

BandedHermitianOperator BandedHermitianOperator::schrodinger(const Grid& g, const std::vector<Mat>& potential) {
    if (static_cast<int>(potential.size()) != g.m) throw domain_error("potential samples must match grid size");
    BandedHermitianOperator op;
    op.block = static_cast<int>(potential.front().rows());
    const double k = 1.0 / (g.h * g.h);
    op.diag.reserve(g.m);
    for (const auto& V : potential) {
        if (V.rows() != op.block || V.cols() != op.block) throw domain_error("potential blocks must share one size");
        Mat D = 0.5 * (V + V.adjoint());
        D.diagonal().array() += 2.0 * k;
        op.diag.push_back(D);
    }
    op.link.assign(g.m - 1, k);
    return op;
}

BandedHermitianOperator BandedHermitianOperator::schrodinger(const Grid& g, const std::function<Mat(double)>& V) {
    std::vector<Mat> p;
    p.reserve(g.m);
    for (int j = 0; j < g.m; ++j) p.push_back(V(g.x(j)));
    return schrodinger(g, p);
}

Eigen::VectorXcd BandedHermitianOperator::apply(const Eigen::VectorXcd& v) const {
    const int n = nodes(), b = block;
    Eigen::VectorXcd out(dim());
    for (int j = 0; j < n; ++j) {
        Vec acc = diag[j] * v.segment(j * b, b);
        if (j > 0) acc -= link[j - 1] * v.segment((j - 1) * b, b);
        if (j + 1 < n) acc -= link[j] * v.segment((j + 1) * b, b);
        out.segment(j * b, b) = acc;
    }
    return out;
}

Eigen::MatrixXcd BandedHermitianOperator::to_dense() const {
    const int n = nodes(), b = block;
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim(), dim());
    for (int j = 0; j < n; ++j) {
        H.block(j * b, j * b, b, b) = diag[j];
        if (j + 1 < n) {
            for (int c = 0; c < b; ++c) {
                H(j * b + c, (j + 1) * b + c) = -link[j];
                H((j + 1) * b + c, j * b + c) = -link[j];
            }
        }
    }
    return H;
}

double BandedHermitianOperator::norm_bound() const {
    double r = 0.0;
    for (int j = 0; j < nodes(); ++j) {
        const double side = (j > 0 ? std::abs(link[j - 1]) : 0.0) + (j + 1 < nodes() ? std::abs(link[j]) : 0.0);
        for (int i = 0; i < block; ++i) r = std::max(r, diag[j].row(i).cwiseAbs().sum() + side);
    }
    return r;
}

double BandedHermitianOperator::hermiticity_defect() const {
    double d = 0.0;
    for (const auto& D : diag) d = std::max(d, (D - D.adjoint()).cwiseAbs().maxCoeff());
    return d;
}

int count_below(const BandedHermitianOperator& op, double sigma) {
    const double tiny = kEps * std::max(1.0, op.norm_bound()) * 1e-3;
    return factor(op, sigma, tiny, false).negatives;
}

namespace {

// Bisection with a shared cache of Sturm counts so consecutive eigenvalues reuse brackets.
std::vector<double> bisect_lowest(const BandedHermitianOperator& op, int k) {
    const double nrm = std::max(1.0, op.norm_bound());
    const double tiny = kEps * nrm * 1e-3;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int j = 0; j < op.nodes(); ++j) {
        const double side = (j > 0 ? op.link[j - 1] : 0.0) + (j + 1 < op.nodes() ? op.link[j] : 0.0);
        for (int i = 0; i < op.block; ++i) {
            const double off = op.diag[j].row(i).cwiseAbs().sum() - std::abs(op.diag[j](i, i));
            lo = std::min(lo, op.diag[j](i, i).real() - off - side);
            hi = std::max(hi, op.diag[j](i, i).real() + off + side);
        }
    }
    lo -= 1e-12 * nrm + 1e-300;
    hi += 1e-12 * nrm + 1e-300;
    std::map<double, int> counts{{lo, 0}, {hi, op.dim()}};
    auto count = [&](double s) {
        auto it = counts.find(s);
        if (it != counts.end()) return it->second;
        const int c = factor(op, s, tiny, false).negatives;
        counts.emplace(s, c);
        return c;
    };
    std::vector<double> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        // tightest bracket from the cache: count(a) <= i < count(b)
        double a = lo, b = hi;
        for (const auto& [s, c] : counts) {
            if (c <= i) a = std::max(a, s);
            if (c > i) { b = s; break; }
        }
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (b - a <= 4.0 * kEps * std::max(std::abs(a), std::abs(b)) + 1e-15 * nrm * kEps || mid <= a || mid >= b)
                break;
            if (count(mid) <= i) a = mid;
            else b = mid;
        }
        out.push_back(0.5 * (a + b));
    }
    return out;
}

} // namespace

std::vector<double> eigenvalues_banded(const BandedHermitianOperator& op, int k) {
    if (k < 1 || k > op.dim()) throw domain_error("requested eigenvalue count out of range");
    return bisect_lowest(op, k);
}

EigenResult eig_banded(const BandedHermitianOperator& op, int k, const EigOptions& opt) {
    if (k < 1 || k > op.dim()) throw domain_error("requested eigenvalue count out of range");
    if (op.hermiticity_defect() > 0.0) throw domain_error("operator blocks are not Hermitian");
    const double nrm = std::max(1.0, op.norm_bound());
    const double tiny = kEps * nrm * 1e-3;
    const std::vector<double> approx = bisect_lowest(op, k);

    EigenResult res;
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss;
    const double cluster_tol = 1e-9 * nrm;
    int cluster_start = 0;
    for (int i = 0; i < k; ++i) {
        if (i > 0 && approx[i] - approx[i - 1] > cluster_tol) cluster_start = i;
        // Shift slightly below the bracketed value so the factorization is not exactly singular.
        const double sigma = approx[i] - 1e3 * kEps * std::max(1.0, std::abs(approx[i]));
        const Factorization f = factor(op, sigma, tiny, true);
        Eigen::VectorXcd v(op.dim());
        for (Eigen::Index t = 0; t < v.size(); ++t) v[t] = cplx(gauss(rng), 0.0);
        v.normalize();
        double lambda = approx[i], resid = 0.0;
        for (int it = 0; it < opt.max_inverse_iterations; ++it) {
            v = block_solve(op, f, v);
            for (int j = cluster_start; j < i; ++j) v -= res.vectors[j].dot(v) * res.vectors[j];
            const double vn = v.norm();
            if (!std::isfinite(vn) || vn == 0.0) throw convergence_error("inverse iteration produced a degenerate vector");
            v /= vn;
            lambda = rayleigh(op, v);
            resid = (op.apply(v) - lambda * v).norm();
            if (resid <= opt.residual_tol * nrm && it >= 1) break;
        }
        if (!(resid <= opt.residual_tol * nrm)) {
            std::ostringstream os;
            os << "eigenpair " << i << " did not converge: residual " << resid << " vs tol " << opt.residual_tol * nrm
               << " (bisection value " << approx[i] << ")";
            throw convergence_error(os.str());
        }
        // Sign convention: largest-magnitude component real and positive.
        Eigen::Index imax = 0;
        v.cwiseAbs().maxCoeff(&imax);
        v *= std::abs(v[imax]) / v[imax];
        res.values.push_back(lambda);
        res.vectors.push_back(v);
        res.residuals.push_back(resid);
    }
    // Rayleigh quotients can reorder inside a cluster by a rounding-level amount.
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return res.values[a] < res.values[b]; });
    EigenResult sorted;
    for (int i : order) {
        sorted.values.push_back(res.values[i]);
        sorted.vectors.push_back(res.vectors[i]);
        sorted.residuals.push_back(res.residuals[i]);
    }
    return sorted;
}

double frobenius_exponent(double c) {
    if (c < -0.25) throw domain_error("endpoint coefficient below -1/4: oscillatory singularity");
    return 0.5 + std::sqrt(0.25 + c);
}

RegularizedProblem regularized_schrodinger(double a, double b, int m, const std::function<double(double)>& V,
                                           double pL, double pR) {
    if (!(b > a)) throw domain_error("regularized problem needs b > a");
    if (m < 3) throw domain_error("regularized problem needs m >= 3");
    const double oL = pL != 0.0 ? 0.5 : 1.0, oR = pR != 0.0 ? 0.5 : 1.0;
    const double h = (b - a) / (m - 1 + oL + oR);
    RegularizedProblem P;
    P.h = h;
    P.nodes.resize(m);
    for (int j = 0; j < m; ++j) P.nodes[j] = a + h * (oL + j);
    // log rho at nodes and faces; rho = (t-a)^pL (b-t)^pR
    auto logrho = [&](double t) {
        double s = 0.0;
        if (pL != 0.0) s += pL * std::log(t - a);
        if (pR != 0.0) s += pR * std::log(b - t);
        return s;
    };
    std::vector<double> lr(m), lf(m + 1);
    for (int j = 0; j < m; ++j) lr[j] = logrho(P.nodes[j]);
    for (int j = 0; j <= m; ++j) {
        const double t = P.nodes[0] - 0.5 * h + j * h;
        const bool on_left = j == 0 && pL != 0.0, on_right = j == m && pR != 0.0;
        lf[j] = (on_left || on_right) ? -std::numeric_limits<double>::infinity() : logrho(t);
    }
    const double ih2 = 1.0 / (h * h);
    P.op.block = 1;
    P.op.diag.reserve(m);
    P.op.link.resize(m - 1);
    for (int j = 0; j < m; ++j) {
        const double t = P.nodes[j];
        const double d1 = t - a, d2 = b - t;
        const double rpp = pL * (pL - 1.0) / (d1 * d1) + pR * (pR - 1.0) / (d2 * d2) - 2.0 * pL * pR / (d1 * d2);
        const double kin = (std::exp(2.0 * lf[j] - 2.0 * lr[j]) + std::exp(2.0 * lf[j + 1] - 2.0 * lr[j])) * ih2;
        P.op.diag.push_back(scalar_mat(kin + V(t) - rpp));
        if (j + 1 < m) P.op.link[j] = std::exp(2.0 * lf[j + 1] - lr[j] - lr[j + 1]) * ih2;
    }
    return P;
}

} // namespace susy
