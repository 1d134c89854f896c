#include "susy/numkit.hpp"

#include <cmath>
#include <string>

namespace susy {

Grid::Grid(double x0_, double h_, int m_) : x0(x0_), h(h_), m(m_) {
    if (!(h > 0.0) || !std::isfinite(h)) throw domain_error("grid spacing must be positive and finite");
    if (m < 3) throw domain_error("grid needs at least 3 nodes, got " + std::to_string(m));
    if (!std::isfinite(x0)) throw domain_error("grid origin must be finite");
}

Eigen::VectorXd Grid::nodes() const {
    Eigen::VectorXd x(m);
    for (int j = 0; j < m; ++j) x[j] = this->x(j);
    return x;
}

Grid Grid::interior(double a, double b, int m) {
    if (!(b > a)) throw domain_error("interior grid needs b > a");
    const double h = (b - a) / (m + 1);
    return Grid(a + h, h, m);
}

Grid Grid::half_line(double L, int m) { return interior(0.0, L * (m + 1.0) / m, m); }

Grid Grid::closed(double a, double b, int m) {
    if (!(b > a)) throw domain_error("closed grid needs b > a");
    return Grid(a, (b - a) / (m - 1), m);
}

} // namespace susy
