#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "susy/pauli_landau.hpp"

using namespace susy;

namespace {

// Planar field with the reflection parities but a non-uniform B.
VectorPotential planar_symmetric() {
    VectorPotential a;
    a.name = "planar_symmetric";
    a.A = [](const Point3& x) {
        return Point3{-0.5 * x[1] * (1.0 + 0.2 * x[0] * x[0]), 0.5 * x[0] * (1.0 + 0.1 * x[1] * x[1]), 0.0};
    };
    a.declared = {-1, -1, 1, 0, 0, 0, 0};
    return a;
}

// Constant field plus a term even in x1 in A2, which breaks A(r1 x) = -r1 A(x).
VectorPotential broken_parity() {
    VectorPotential a;
    a.name = "broken_parity";
    a.A = [](const Point3& x) { return Point3{-0.5 * x[1], 0.5 * x[0] + 0.3 * x[0] * x[0], 0.0}; };
    return a;
}

VectorPotential generic_field() {
    VectorPotential a;
    a.name = "generic";
    a.A = [](const Point3& x) { return Point3{x[1] * x[2] + 0.2 * x[0], x[2] + 0.1, x[0] * x[1] + 0.3}; };
    return a;
}

const ResidualRecord& find(const std::vector<ResidualRecord>& rs, const std::string& pair, int n) {
    for (const auto& r : rs)
        if (r.pair == pair && r.n == n) return r;
    throw std::runtime_error("missing record " + pair);
}

} // namespace

TEST_CASE("lattice symmetry and rejection of asymmetric grids") {
    CHECK_THROWS_AS(Lattice::symmetric_grid(2, 33, 5.0), Error);
    CHECK_THROWS_AS(Lattice::symmetric_grid(2, 256, 5.0), Error);
    CHECK_THROWS_AS(Lattice::symmetric_grid(4, 8, 5.0), Error);

    const Lattice lat = Lattice::symmetric_grid(3, 6, 2.0);
    for (int j = 0; j < lat.nodes(); ++j)
        for (int axis = 0; axis < 3; ++axis) {
            const int k = lat.reflect(j, axis);
            CHECK(lat.reflect(k, axis) == j);
            CHECK(lat.point(k)[axis] == doctest::Approx(-lat.point(j)[axis]).epsilon(1e-15));
        }

    Lattice shifted = Lattice::symmetric_grid(2, 16, 4.0);
    shifted.offset = 0.1;
    CHECK_FALSE(shifted.symmetric());
    CHECK_THROWS_AS(PauliSystem(shifted, VectorPotential::constant_field(1.0)), Error);
}

TEST_CASE("vector potentials: parities and field") {
    const auto A = VectorPotential::constant_field(1.3);
    std::vector<Point3> pts{{0.3, -1.1, 0.7}, {2.0, 0.5, -0.2}, {-1.4, -0.9, 1.8}};
    CHECK(declared_parity_defect(A, pts) <= 1e-15);
    CHECK(declared_parity_defect(planar_symmetric(), pts) <= 1e-15);
    for (const auto& x : pts) {
        const Point3 B = magnetic_field(A, x);
        CHECK(std::abs(B[0]) <= 1e-10);
        CHECK(std::abs(B[1]) <= 1e-10);
        CHECK(B[2] == doctest::Approx(1.3).epsilon(1e-10));
        // curl of the planar field: dA2/dx1 - dA1/dx2
        const Point3 b = magnetic_field(planar_symmetric(), x);
        CHECK(b[2] == doctest::Approx(0.5 * (1.0 + 0.1 * x[1] * x[1]) + 0.5 * (1.0 + 0.2 * x[0] * x[0])).epsilon(1e-9));
    }
}

TEST_CASE("parity classification") {
    const auto c = parity_classify(VectorPotential::constant_field(1.0));
    CHECK(c.par_holds);
    CHECK(c.planar);
    CHECK(c.supercharges == 4);
    CHECK(c.parity[0] == -1);
    CHECK(c.parity[1] == -1);
    CHECK(c.parity[2] == 1);
    CHECK(c.parity[3] == 1); // rotation by pi about x3 commutes with the symmetric gauge

    const auto p = parity_classify(planar_symmetric());
    CHECK(p.par_holds);
    CHECK(p.supercharges == 4);

    const auto b = parity_classify(broken_parity());
    CHECK_FALSE(b.par_holds);
    CHECK(b.planar);
    CHECK(b.supercharges == 2);

    const auto g = parity_classify(generic_field());
    CHECK_FALSE(g.par_holds);
    CHECK_FALSE(g.planar);
    CHECK(g.supercharges == 1);
}

TEST_CASE("planar N=2 set: hermiticity and the superalgebra at second order") {
    const auto A = VectorPotential::constant_field(1.0);
    const PauliSystem s(Lattice::symmetric_grid(2, 32, 6.0), A);
    CHECK(s.hermiticity_defect() <= 1e-15);

    const auto qs = build_supercharges(s, Extension::N2);
    REQUIRE(qs.q.size() == 2);
    const auto batch = random_packets(s.lattice, 3, 11);
    CHECK(q3_commutator(qs, batch) <= 1e-14);

    const auto rs = residual_study(A, 2, Extension::N2, {32, 64, 128}, 6.0, 4, 7);
    for (const std::string pair : {"{Q1,Q1}", "{Q2,Q2}"}) {
        CAPTURE(pair);
        CHECK(find(rs, pair, 128).residual < find(rs, pair, 64).residual);
        CHECK(find(rs, pair, 64).order >= 1.8);
        CHECK(find(rs, pair, 128).order >= 1.8);
    }
    for (int n : {32, 64, 128}) CHECK(find(rs, "{Q1,Q2}", n).exact);

    const auto j = to_json(rs);
    REQUIRE(j.size() == rs.size());
    CHECK(j[0].contains("pair"));
    CHECK(j[0].contains("grid"));
    CHECK(j[0].contains("residual"));
    CHECK(j[0]["observed_order"].is_null());
    CHECK(j[3]["observed_order"].is_number());

    const PauliSystem t(Lattice::symmetric_grid(2, 16, 6.0), A);
    CHECK_THROWS_AS(superalgebra_residual(qs, random_packets(t.lattice, 1, 1)), Error);
    CHECK_THROWS_AS(build_supercharges(s, Extension::N4), Error);
}

TEST_CASE("planar N=2 set with a non-uniform field") {
    const auto rs = residual_study(planar_symmetric(), 2, Extension::N2, {32, 64, 128}, 6.0, 3, 5);
    CHECK(find(rs, "{Q1,Q1}", 128).order >= 1.8);
    CHECK(find(rs, "{Q1,Q2}", 128).exact);
}

TEST_CASE("N=4 set on a 3D lattice") {
    const auto rs = residual_study(VectorPotential::constant_field(1.0), 3, Extension::N4, {24, 48}, 5.0, 3, 7);
    for (const std::string pair : {"{Q1,Q1}", "{Q2,Q2}", "{Q3,Q3}", "{Q4,Q4}"}) {
        CAPTURE(pair);
        CHECK(find(rs, pair, 48).order >= 1.8);
    }
    for (const std::string pair : {"{Q1,Q2}", "{Q1,Q3}", "{Q1,Q4}", "{Q2,Q3}", "{Q2,Q4}", "{Q3,Q4}"}) {
        CAPTURE(pair);
        CHECK(find(rs, pair, 48).exact);
    }

    SUBCASE("metric signs") {
        const PauliSystem s(Lattice::symmetric_grid(3, 24, 5.0), VectorPotential::constant_field(1.0));
        const auto qs = build_supercharges(s, Extension::N4);
        const auto v = random_packets(s.lattice, 1, 3)[0];
        const Eigen::VectorXcd hv = s.H * v;
        for (int k = 2; k < 4; ++k) {
            const Eigen::VectorXcd qq = qs.q[k].apply(qs.q[k].apply(v));
            CHECK((qq + hv).norm() < 0.1 * (qq - hv).norm());
        }
    }

    SUBCASE("non-uniform field with the parities") {
        const auto r2 = residual_study(planar_symmetric(), 3, Extension::N4, {24, 48}, 5.0, 2, 9);
        CHECK(find(r2, "{Q3,Q3}", 48).residual < find(r2, "{Q3,Q3}", 24).residual / 3.0);
        CHECK(find(r2, "{Q2,Q4}", 48).exact);
    }

    SUBCASE("broken parity leaves an O(1) residual") {
        const auto r3 = residual_study(broken_parity(), 3, Extension::N4, {24, 48}, 5.0, 2, 9);
        const auto& coarse = find(r3, "{Q3,Q3}", 24);
        const auto& fine = find(r3, "{Q3,Q3}", 48);
        CHECK(fine.residual > 0.5);
        CHECK(fine.residual > 0.5 * coarse.residual);
        CHECK_FALSE(find(r3, "{Q1,Q3}", 48).exact);
        // sigma.pi itself is insensitive to the parities
        CHECK(find(r3, "{Q1,Q1}", 48).order >= 1.8);
    }
}

TEST_CASE("constants of motion of the uniform field") {
    const auto A = VectorPotential::constant_field(1.0);
    double prev[3] = {0, 0, 0};
    // wide box: the packets must be negligible at the Dirichlet edge, where [op, H] picks up 1/h^2
    for (int n : {32, 64, 128}) {
        const PauliSystem s(Lattice::symmetric_grid(2, n, 8.0), A);
        const auto batch = random_packets(s.lattice, 3, 21);
        const double r[3] = {commutator_with_h(s, angular_momentum(s), batch),
                             commutator_with_h(s, johnson_lippmann(s, 0), batch),
                             commutator_with_h(s, johnson_lippmann(s, 1), batch)};
        for (int i = 0; i < 3; ++i) {
            CAPTURE(i);
            CAPTURE(n);
            if (n > 32) CHECK(std::log2(prev[i] / r[i]) >= 1.8);
            prev[i] = r[i];
        }
    }
}

TEST_CASE("Landau reduction: cartesian sector") {
    const Grid g = Grid::interior(-10.0, 10.0, 4000);
    const auto r = landau_reduction(1.0, LandauSector::Cartesian, g);
    CHECK(r.problem.superpotential.kind() == Kind::HarmonicOsc);
    for (double y : {-2.0, 0.0, 1.5}) CHECK(r.v_plus(y) - r.v_minus(y) == doctest::Approx(2.0));

    // Vhat of the ladder problem is H_-
    for (double y : {-1.0, 0.4})
        CHECK(hat_potential(r.problem.superpotential, y)(0, 0).real() == doctest::Approx(r.v_minus(y)));

    const auto E = landau_spectrum(r, -9.0, 9.0, 2000, 7);
    const double expected[] = {0, 2, 2, 4, 4, 6, 6};
    for (int i = 0; i < 7; ++i) CHECK(std::abs(E[i] - expected[i]) <= 1e-6);

    const auto st = excited_state(r.problem, 2);
    CHECK(st.energy + r.energy_offset == doctest::Approx(4.0));

    CHECK_THROWS_AS(landau_reduction(0.0, LandauSector::Cartesian, g), Error);
    CHECK_THROWS_AS(landau_reduction(-1.0, LandauSector::Radial, g), Error);
}

TEST_CASE("Landau reduction: radial sector") {
    const double w = 1.5;
    const Grid g = Grid::half_line(8.0, 4000);
    const auto r1 = landau_reduction(w, LandauSector::Radial, g, 1.0);
    const auto r0 = landau_reduction(w, LandauSector::Radial, g, 0.0);
    CHECK(r1.problem.superpotential.kind() == Kind::Osc3D);
    CHECK(r1.problem.superpotential.params().kappa == doctest::Approx(2.0));

    // H_+ at n equals H_- at n - 1 shifted by 2 omega
    for (double x : {0.3, 1.0, 2.7}) CHECK(r1.v_plus(x) == doctest::Approx(r0.v_minus(x) + 2.0 * w));
    for (double x : {0.5, 1.7})
        CHECK(hat_potential(r1.problem.superpotential, x)(0, 0).real() + r1.energy_offset ==
              doctest::Approx(r1.v_minus(x)));

    const auto E = landau_spectrum(r1, 0.0, 7.0, 3000, 6);
    const SpectrumTable t = energy_levels(Kind::Osc3D, r1.problem.superpotential.params(), 2);
    for (int k = 0; k < 3; ++k) {
        const double e = t.rows[k].e_analytic + r1.energy_offset;
        CAPTURE(k);
        CHECK(e == doctest::Approx(w * (4.0 * k + 4.0)));
        // both blocks carry the level
        CHECK(std::abs(E[2 * k] - e) <= 1e-5);
        CHECK(std::abs(E[2 * k + 1] - e) <= 1e-5);
    }
}
