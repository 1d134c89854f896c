#include "susy/numkit.hpp"

#include <cmath>

namespace susy {

namespace {

void check_length(const Grid& g, Eigen::Index n) {
    if (n != g.m) throw domain_error("sample count " + std::to_string(n) + " does not match grid size " + std::to_string(g.m));
}

} // namespace

double trapezoid(const Grid& g, const Eigen::VectorXd& f) {
    check_length(g, f.size());
    double s = 0.5 * (f[0] + f[g.m - 1]);
    for (int j = 1; j < g.m - 1; ++j) s += f[j];
    return s * g.h;
}

double integrate(const Grid& g, const Field& samples) {
    check_length(g, samples.cols());
    return trapezoid(g, samples.colwise().squaredNorm().transpose());
}

double integrate(const Grid& g, const Eigen::VectorXd& samples) {
    return trapezoid(g, samples.cwiseAbs2());
}

Field differentiate(const Grid& g, const Field& f, int order) {
    check_length(g, f.cols());
    if (order != 1 && order != 2) throw domain_error("differentiate supports order 1 or 2");
    const int m = g.m;
    if (m < 5 + (order == 2 ? 1 : 0)) throw domain_error("grid too short for 4th-order stencils");
    Field out(f.rows(), m);
    const double h = g.h;
    auto c = [&](int j) { return f.col(j); };
    if (order == 1) {
        const double s = 1.0 / (12.0 * h);
        for (int j = 2; j < m - 2; ++j) out.col(j) = (c(j - 2) - 8.0 * c(j - 1) + 8.0 * c(j + 1) - c(j + 2)) * s;
        out.col(0) = (-25.0 * c(0) + 48.0 * c(1) - 36.0 * c(2) + 16.0 * c(3) - 3.0 * c(4)) * s;
        out.col(1) = (-3.0 * c(0) - 10.0 * c(1) + 18.0 * c(2) - 6.0 * c(3) + c(4)) * s;
        out.col(m - 1) = -(-25.0 * c(m - 1) + 48.0 * c(m - 2) - 36.0 * c(m - 3) + 16.0 * c(m - 4) - 3.0 * c(m - 5)) * s;
        out.col(m - 2) = -(-3.0 * c(m - 1) - 10.0 * c(m - 2) + 18.0 * c(m - 3) - 6.0 * c(m - 4) + c(m - 5)) * s;
    } else {
        const double s = 1.0 / (12.0 * h * h);
        for (int j = 2; j < m - 2; ++j)
            out.col(j) = (-c(j - 2) + 16.0 * c(j - 1) - 30.0 * c(j) + 16.0 * c(j + 1) - c(j + 2)) * s;
        out.col(0) = (45.0 * c(0) - 154.0 * c(1) + 214.0 * c(2) - 156.0 * c(3) + 61.0 * c(4) - 10.0 * c(5)) * s;
        out.col(1) = (10.0 * c(0) - 15.0 * c(1) - 4.0 * c(2) + 14.0 * c(3) - 6.0 * c(4) + c(5)) * s;
        out.col(m - 1) = (45.0 * c(m - 1) - 154.0 * c(m - 2) + 214.0 * c(m - 3) - 156.0 * c(m - 4) + 61.0 * c(m - 5) -
                          10.0 * c(m - 6)) * s;
        out.col(m - 2) =
            (10.0 * c(m - 1) - 15.0 * c(m - 2) - 4.0 * c(m - 3) + 14.0 * c(m - 4) - 6.0 * c(m - 5) + c(m - 6)) * s;
    }
    return out;
}

Eigen::VectorXd differentiate(const Grid& g, const Eigen::VectorXd& samples, int order) {
    Field f = samples.transpose().cast<cplx>();
    return differentiate(g, f, order).row(0).real().transpose();
}

// ---- jets ----

Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d + b.d, a.dd + b.dd}; }
Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d - b.d, a.dd - b.dd}; }
Jet operator-(const Jet& a) { return {-a.v, -a.d, -a.dd}; }
Jet operator*(const Jet& a, const Jet& b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d, a.dd * b.v + 2.0 * a.d * b.d + a.v * b.dd};
}
Jet operator/(const Jet& a, const Jet& b) {
    // q = a/b, q' = (a' - q b')/b, q'' = (a'' - 2 q' b' - q b'')/b
    const double q = a.v / b.v;
    const double qd = (a.d - q * b.d) / b.v;
    const double qdd = (a.dd - 2.0 * qd * b.d - q * b.dd) / b.v;
    return {q, qd, qdd};
}
Jet pow(const Jet& a, double p) {
    const double f = std::pow(a.v, p);
    const double f1 = p * std::pow(a.v, p - 1.0);
    const double f2 = p * (p - 1.0) * std::pow(a.v, p - 2.0);
    return {f, f1 * a.d, f2 * a.d * a.d + f1 * a.dd};
}
Jet sqrt(const Jet& a) { return pow(a, 0.5); }

} // namespace susy
