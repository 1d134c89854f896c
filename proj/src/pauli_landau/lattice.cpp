#include "susy/pauli_landau.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace susy {

namespace {

constexpr std::array<std::array<int, 3>, 7> kSigns{{
    {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}, {-1, -1, -1},
}};

Point3 scaled(const Point3& v, const std::array<int, 3>& s, double f) {
    return {f * s[0] * v[0], f * s[1] * v[1], f * s[2] * v[2]};
}

double dist(const Point3& a, const Point3& b) {
    return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
}

double mag(const Point3& a) { return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])}); }

std::vector<Point3> probe_points() {
    std::mt19937_64 rng(0x9a11ULL);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<Point3> pts(64);
    for (auto& p : pts) p = {u(rng), u(rng), u(rng)};
    return pts;
}

} // namespace

const char* to_string(Involution g) {
    static const char* names[] = {"r1", "r2", "r3", "r12", "r31", "r23", "r123"};
    return names[static_cast<int>(g)];
}

Point3 apply(Involution g, const Point3& x) { return scaled(x, kSigns[static_cast<int>(g)], 1.0); }

VectorPotential VectorPotential::constant_field(double B) {
    VectorPotential a;
    a.name = "constant_field";
    a.A = [B](const Point3& x) { return Point3{-0.5 * B * x[1], 0.5 * B * x[0], 0.0}; };
    a.declared = {-1, -1, 1, 0, 0, 0, 0};
    return a;
}

double declared_parity_defect(const VectorPotential& a, const std::vector<Point3>& points) {
    double worst = 0.0;
    for (int g = 0; g < 7; ++g) {
        if (a.declared[g] == 0) continue;
        for (const auto& x : points) {
            const Point3 lhs = a.A(apply(Involution(g), x));
            const Point3 rhs = scaled(a.A(x), kSigns[g], a.declared[g]);
            worst = std::max(worst, dist(lhs, rhs));
        }
    }
    return worst;
}

Point3 magnetic_field(const VectorPotential& a, const Point3& x) {
    const double d = 1e-3;
    // dA[b][c] = d A_c / d x_b
    double dA[3][3];
    for (int b = 0; b < 3; ++b) {
        auto at = [&](double t) {
            Point3 y = x;
            y[b] += t;
            return a.A(y);
        };
        const Point3 p1 = at(d), m1 = at(-d), p2 = at(2 * d), m2 = at(-2 * d);
        for (int c = 0; c < 3; ++c) dA[b][c] = (8.0 * (p1[c] - m1[c]) - (p2[c] - m2[c])) / (12.0 * d);
    }
    return {dA[1][2] - dA[2][1], dA[2][0] - dA[0][2], dA[0][1] - dA[1][0]};
}

int Lattice::nodes() const {
    int r = 1;
    for (int a = 0; a < dim; ++a) r *= n;
    return r;
}

std::array<int, 3> Lattice::multi(int node) const {
    std::array<int, 3> i{0, 0, 0};
    for (int a = 0; a < dim; ++a) {
        i[a] = node % n;
        node /= n;
    }
    return i;
}

int Lattice::index(const std::array<int, 3>& i) const {
    int node = 0;
    for (int a = dim - 1; a >= 0; --a) node = node * n + i[a];
    return node;
}

Point3 Lattice::point(int node) const {
    const auto i = multi(node);
    Point3 x{0.0, 0.0, 0.0};
    for (int a = 0; a < dim; ++a) x[a] = coord(i[a]);
    return x;
}

bool Lattice::symmetric() const { return n % 2 == 0 && offset == 0.0; }

int Lattice::reflect(int node, int axis) const {
    if (!symmetric()) return -1;
    auto i = multi(node);
    i[axis] = n - 1 - i[axis];
    return index(i);
}

Lattice Lattice::symmetric_grid(int dim, int n, double half_width) {
    if (dim != 2 && dim != 3) throw config_error("lattice dimension must be 2 or 3");
    if (n < 4 || n % 2 != 0) throw config_error("lattice needs an even node count >= 4 per axis");
    if (!(half_width > 0.0)) throw config_error("lattice half width must be > 0");
    if ((dim == 2 && n > 128) || (dim == 3 && n > 48))
        throw config_error("lattice too large: at most 128 nodes per axis in 2D and 32 in 3D");
    return Lattice{dim, n, half_width, 0.0};
}

ParityReport parity_classify(const VectorPotential& a, double tol) {
    const auto pts = probe_points();
    double scale = 0.0;
    for (const auto& x : pts) scale = std::max(scale, mag(a.A(x)));
    const double eps = tol * (1.0 + scale);

    ParityReport r;
    std::array<bool, 7> even{}, odd{};
    for (int g = 0; g < 7; ++g) {
        double dp = 0.0, dm = 0.0;
        for (const auto& x : pts) {
            const Point3 lhs = a.A(apply(Involution(g), x));
            const Point3 gA = scaled(a.A(x), kSigns[g], 1.0);
            dp = std::max(dp, dist(lhs, gA));
            dm = std::max(dm, dist(lhs, scaled(gA, {1, 1, 1}, -1.0)));
        }
        even[g] = dp <= eps;
        odd[g] = dm <= eps;
        r.parity[g] = even[g] && odd[g] ? 2 : even[g] ? 1 : odd[g] ? -1 : 0;
    }
    r.par_holds = odd[0] && odd[1] && even[2];

    r.planar = true;
    for (const auto& x : pts) {
        const Point3 v = a.A(x), v0 = a.A({x[0], x[1], 0.0});
        if (std::abs(v[2]) > eps || dist(v, v0) > eps) {
            r.planar = false;
            break;
        }
    }

    if (r.par_holds) {
        r.supercharges = 4;
        r.note = "reflection parities hold: N=4 set admitted";
    } else if (r.planar) {
        r.supercharges = 2;
        r.note = "planar field without the reflection parities: N=2 set only";
    } else {
        r.supercharges = 1;
        r.note = "no reflection parities: only sigma.pi survives";
    }
    bool rotation = false;
    for (int g = 3; g < 7; ++g) rotation = rotation || r.parity[g] != 0;
    if (!r.par_holds && rotation)
        r.note += "; definite parity under a rotation, a larger extension (up to N=5) may exist but is not built";
    return r;
}

} // namespace susy
