#include "susy/pauli_landau.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace susy {

namespace {

using Triplet = Eigen::Triplet<cplx>;
const cplx I(0.0, 1.0);

SpMat from_triplets(int n, const std::vector<Triplet>& t) {
    SpMat m(n, n);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

// Neighbour of `node` one step along `axis` in direction `dir`, or -1 past the boundary.
int neighbour(const Lattice& lat, int node, int axis, int dir) {
    auto i = lat.multi(node);
    i[axis] += dir;
    if (i[axis] < 0 || i[axis] >= lat.n) return -1;
    return lat.index(i);
}

// Spin-diagonal lift of a scalar node operator given by a callback producing (row, col, value).
template <class F>
SpMat lift(const Lattice& lat, F&& each) {
    std::vector<Triplet> t;
    const int nodes = lat.nodes();
    for (int j = 0; j < nodes; ++j)
        each(j, [&](int k, cplx v) {
            t.emplace_back(2 * j, 2 * k, v);
            t.emplace_back(2 * j + 1, 2 * k + 1, v);
        });
    return from_triplets(2 * nodes, t);
}

double norm_ratio(const Eigen::VectorXcd& r, const Eigen::VectorXcd& v) { return r.norm() / v.norm(); }

} // namespace

Eigen::VectorXcd apply_c(const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(v.size());
    for (Eigen::Index j = 0; j + 1 < v.size(); j += 2) {
        out[j] = std::conj(v[j + 1]);
        out[j + 1] = -std::conj(v[j]);
    }
    return out;
}

Eigen::VectorXcd Supercharge::apply(const Eigen::VectorXcd& v) const {
    Eigen::VectorXcd w = linear * v;
    return antilinear ? apply_c(w) : w;
}

PauliSystem::PauliSystem(const Lattice& lat, VectorPotential a, double e)
    : lattice(lat), potential(std::move(a)), charge(e) {
    if (!lattice.symmetric()) throw config_error("asymmetric grid: reflections need a symmetric even lattice");
    const double h = lattice.h();
    const int nodes = lattice.nodes();
    std::vector<Point3> A(nodes), B(nodes);
    for (int j = 0; j < nodes; ++j) {
        A[j] = potential.A(lattice.point(j));
        B[j] = magnetic_field(potential, lattice.point(j));
    }

    for (int axis = 0; axis < lattice.dim; ++axis) {
        pi.push_back(lift(lattice, [&](int j, auto&& put) {
            put(j, -charge * A[j][axis]);
            for (int dir : {-1, 1}) {
                const int k = neighbour(lattice, j, axis, dir);
                if (k >= 0) put(k, -I * (dir / (2.0 * h)));
            }
        }));
    }

    // pi_a^2 = -d^2 + i e (d A + A d) + e^2 A^2 with the 3-point second difference.
    std::vector<Triplet> t;
    for (int j = 0; j < nodes; ++j) {
        cplx diag = 0.0;
        for (int axis = 0; axis < lattice.dim; ++axis) {
            diag += 2.0 / (h * h) + charge * charge * A[j][axis] * A[j][axis];
            for (int dir : {-1, 1}) {
                const int k = neighbour(lattice, j, axis, dir);
                if (k < 0) continue;
                const cplx v = -1.0 / (h * h) + I * charge * (dir / (2.0 * h)) * (A[j][axis] + A[k][axis]);
                t.emplace_back(2 * j, 2 * k, v);
                t.emplace_back(2 * j + 1, 2 * k + 1, v);
            }
        }
        // -e sigma.B; only B3 enters on a planar lattice
        const double b1 = lattice.dim == 3 ? B[j][0] : 0.0, b2 = lattice.dim == 3 ? B[j][1] : 0.0, b3 = B[j][2];
        t.emplace_back(2 * j, 2 * j, diag - charge * b3);
        t.emplace_back(2 * j + 1, 2 * j + 1, diag + charge * b3);
        t.emplace_back(2 * j, 2 * j + 1, -charge * cplx(b1, -b2));
        t.emplace_back(2 * j + 1, 2 * j, -charge * cplx(b1, b2));
    }
    H = from_triplets(2 * nodes, t);
}

double PauliSystem::hermiticity_defect() const {
    const SpMat d = H - SpMat(H.adjoint());
    return d.norm() / H.norm();
}

SpMat PauliSystem::sigma(int a) const {
    const Mat s = pauli(a);
    std::vector<Triplet> t;
    for (int j = 0; j < lattice.nodes(); ++j)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                if (s(r, c) != 0.0) t.emplace_back(2 * j + r, 2 * j + c, s(r, c));
    return from_triplets(2 * lattice.nodes(), t);
}

SpMat PauliSystem::reflection(int axis) const {
    const Mat s = pauli(axis + 1);
    std::vector<Triplet> t;
    for (int j = 0; j < lattice.nodes(); ++j) {
        const int k = lattice.reflect(j, axis);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                if (s(r, c) != 0.0) t.emplace_back(2 * j + r, 2 * k + c, s(r, c));
    }
    return from_triplets(2 * lattice.nodes(), t);
}

SuperchargeSet build_supercharges(const PauliSystem& s, Extension ext, double q3) {
    SuperchargeSet qs;
    qs.extension = ext;
    qs.system = &s;
    qs.q3 = q3;
    if (ext == Extension::N2) {
        if (s.lattice.dim != 2) throw config_error("the N=2 set is built on a planar lattice");
        const SpMat q1 = s.sigma(1) * s.pi[0] + s.sigma(2) * s.pi[1];
        qs.q.push_back({"Q1", q1, false});
        qs.q.push_back({"Q2", SpMat(I * (s.sigma(3) * q1)), false});
        qs.metric = {1.0, 1.0};
        return qs;
    }
    if (s.lattice.dim != 3) throw config_error("the N=4 set needs a 3D lattice");
    const SpMat q1 = s.sigma(1) * s.pi[0] + s.sigma(2) * s.pi[1] + s.sigma(3) * s.pi[2];
    qs.q.push_back({"Q1", q1, false});
    qs.q.push_back({"Q2", SpMat(I * (s.reflection(2) * q1)), false});
    qs.q.push_back({"Q3", SpMat(s.reflection(0) * q1), true});
    qs.q.push_back({"Q4", SpMat(s.reflection(1) * q1), true});
    qs.metric = {1.0, 1.0, -1.0, -1.0};
    return qs;
}

std::vector<Eigen::VectorXcd> random_packets(const Lattice& lat, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> centre(-1.0, 1.0), width(0.8, 1.2), k(-1.0, 1.0);
    std::normal_distribution<double> amp;
    std::vector<Eigen::VectorXcd> out;
    for (int p = 0; p < count; ++p) {
        Point3 x0{0, 0, 0}, kv{0, 0, 0};
        for (int a = 0; a < 3; ++a) {
            x0[a] = centre(rng);
            kv[a] = k(rng);
        }
        const double s = width(rng);
        const cplx z0(amp(rng), amp(rng)), z1(amp(rng), amp(rng));
        Eigen::VectorXcd v(2 * lat.nodes());
        for (int j = 0; j < lat.nodes(); ++j) {
            const Point3 x = lat.point(j);
            double r2 = 0.0, phase = 0.0;
            for (int a = 0; a < lat.dim; ++a) {
                r2 += (x[a] - x0[a]) * (x[a] - x0[a]);
                phase += kv[a] * x[a];
            }
            const cplx f = std::exp(-0.5 * r2 / (s * s)) * std::exp(I * phase);
            v[2 * j] = z0 * f;
            v[2 * j + 1] = z1 * f;
        }
        out.push_back(v / v.norm());
    }
    return out;
}

Eigen::MatrixXd superalgebra_residual(const SuperchargeSet& qs, const std::vector<Eigen::VectorXcd>& batch) {
    const int n = static_cast<int>(qs.q.size());
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(n, n);
    for (const auto& v : batch) {
        if (v.size() != qs.system->H.rows()) throw config_error("test spinor dimension does not match the operator");
        const Eigen::VectorXcd hv = qs.system->H * v;
        std::vector<Eigen::VectorXcd> qv;
        for (const auto& q : qs.q) qv.push_back(q.apply(v));
        for (int k = 0; k < n; ++k)
            for (int l = k; l < n; ++l) {
                Eigen::VectorXcd r = qs.q[k].apply(qv[l]) + qs.q[l].apply(qv[k]);
                if (k == l) r -= 2.0 * qs.metric[k] * hv;
                R(k, l) = std::max(R(k, l), norm_ratio(r, v));
                R(l, k) = R(k, l);
            }
    }
    return R;
}

std::vector<double> commutator_residual(const SuperchargeSet& qs, const std::vector<Eigen::VectorXcd>& batch) {
    std::vector<double> out(qs.q.size(), 0.0);
    for (const auto& v : batch)
        for (size_t k = 0; k < qs.q.size(); ++k) {
            const Eigen::VectorXcd r = qs.q[k].apply(qs.system->H * v) - qs.system->H * qs.q[k].apply(v);
            out[k] = std::max(out[k], norm_ratio(r, v));
        }
    return out;
}

double q3_commutator(const SuperchargeSet& qs, const std::vector<Eigen::VectorXcd>& batch) {
    double worst = 0.0;
    for (const auto& v : batch)
        for (const auto& q : qs.q) {
            const Eigen::VectorXcd r = qs.q3 * q.apply(v) - q.apply(Eigen::VectorXcd(qs.q3 * v));
            worst = std::max(worst, norm_ratio(r, v));
        }
    return worst;
}

std::vector<ResidualRecord> residual_study(const VectorPotential& a, int dim, Extension ext,
                                           const std::vector<int>& ns, double half_width, int batch,
                                           std::uint64_t seed) {
    std::vector<ResidualRecord> out;
    std::vector<ResidualRecord> prev;
    int n_prev = 0;
    for (int n : ns) {
        const PauliSystem s(Lattice::symmetric_grid(dim, n, half_width), a);
        const SuperchargeSet qs = build_supercharges(s, ext);
        const Eigen::MatrixXd R = superalgebra_residual(qs, random_packets(s.lattice, batch, seed));
        std::vector<ResidualRecord> cur;
        for (int k = 0; k < R.rows(); ++k)
            for (int l = k; l < R.cols(); ++l) {
                ResidualRecord r;
                r.pair = "{" + qs.q[k].name + "," + qs.q[l].name + "}";
                r.n = n;
                r.residual = R(k, l);
                r.exact = r.residual < 1e-10;
                r.order = std::numeric_limits<double>::quiet_NaN();
                if (!prev.empty() && !r.exact && !prev[cur.size()].exact)
                    r.order = std::log(prev[cur.size()].residual / r.residual) / std::log(double(n) / n_prev);
                cur.push_back(r);
            }
        out.insert(out.end(), cur.begin(), cur.end());
        prev = cur;
        n_prev = n;
    }
    return out;
}

nlohmann::json to_json(const std::vector<ResidualRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json j{{"pair", r.pair}, {"grid", r.n}, {"residual", r.residual}, {"exact", r.exact}};
        j["observed_order"] = std::isnan(r.order) ? nlohmann::json(nullptr) : nlohmann::json(r.order);
        arr.push_back(j);
    }
    return arr;
}

SpMat angular_momentum(const PauliSystem& s) {
    const Lattice& lat = s.lattice;
    const double h = lat.h();
    std::vector<Triplet> t;
    for (int j = 0; j < lat.nodes(); ++j) {
        const Point3 x = lat.point(j);
        // x1 p2 - x2 p1 with p = -i d (central)
        for (int dir : {-1, 1}) {
            const int k2 = neighbour(lat, j, 1, dir), k1 = neighbour(lat, j, 0, dir);
            const cplx d = -I * (dir / (2.0 * h));
            for (int sp = 0; sp < 2; ++sp) {
                if (k2 >= 0) t.emplace_back(2 * j + sp, 2 * k2 + sp, x[0] * d);
                if (k1 >= 0) t.emplace_back(2 * j + sp, 2 * k1 + sp, -x[1] * d);
            }
        }
        t.emplace_back(2 * j, 2 * j, 0.5);
        t.emplace_back(2 * j + 1, 2 * j + 1, -0.5);
    }
    return from_triplets(2 * lat.nodes(), t);
}

SpMat johnson_lippmann(const PauliSystem& s, int axis) {
    if (axis < 0 || axis >= s.lattice.dim) throw config_error("axis out of range");
    const double h = s.lattice.h();
    return lift(s.lattice, [&](int j, auto&& put) {
        put(j, s.charge * s.potential.A(s.lattice.point(j))[axis]);
        for (int dir : {-1, 1}) {
            const int k = neighbour(s.lattice, j, axis, dir);
            if (k >= 0) put(k, -I * (dir / (2.0 * h)));
        }
    });
}

double commutator_with_h(const PauliSystem& s, const SpMat& op, const std::vector<Eigen::VectorXcd>& batch) {
    double worst = 0.0;
    for (const auto& v : batch) {
        const Eigen::VectorXcd r = op * (s.H * v) - s.H * (op * v);
        worst = std::max(worst, norm_ratio(r, v));
    }
    return worst;
}

} // namespace susy
