#include "doctest.h"

#include <cmath>

#include "susy/superpotentials.hpp"

using namespace susy;

namespace {

ParamSet representative(Kind k) {
    ParamSet p;
    switch (info(k).family) {
    case Family::Scalar:
        p.kappa = 1.3;
        p.omega = 0.7;
        p.lambda = 0.8;
        p.mu = 0.6;
        break;
    case Family::Matrix2Diag:
    case Family::Matrix2Dual:
        p.nu = 1.4;
        p.mu = 0.6;
        p.omega = 0.9;
        p.lambda = 0.8;
        break;
    case Family::Matrix2NonDiag:
        p.kappa = 1.3;
        p.lambda = 0.7;
        p.mu = 0.4;
        p.c = 0.3;
        p.r2 = 0.6;
        p.r3 = 0.8;
        p.omega = 1.0;
        break;
    case Family::Matrix3:
        p.kappa = 1.3;
        p.omega = 0.9;
        p.c = 0.5;
        p.c1 = -0.4;
        p.c2 = -0.7;
        p.mu1 = 0.6;
        p.mu2 = 0.3;
        p.mu3 = 0.45;
        break;
    }
    return p;
}

Grid sample_grid(Kind k, const ParamSet& p, int m = 400) {
    const auto iv = sample_interval(k, p);
    return Grid::closed(iv.lo, iv.hi, m);
}

double maxabs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

const Mat I2 = pauli(0), s1 = pauli(1), s2 = pauli(2), s3 = pauli(3);

} // namespace

TEST_CASE("catalog listing") {
    CHECK(catalog().size() == 34);
    for (const auto& e : catalog()) {
        auto k = kind_from_name(e.name);
        REQUIRE(k.has_value());
        CHECK(*k == e.kind);
    }
    CHECK_FALSE(kind_from_name("nope").has_value());
    auto j = catalog_json();
    CHECK(j.size() == 34);
    CHECK(j[0]["name"] == "coulomb");
    CHECK(j[10]["shift"]["param"] == "nu");
}

TEST_CASE("evaluate: worked values") {
    ParamSet p;
    p.mu = 1.0;
    CHECK(evaluate(SuperpotentialInstance(Kind::HarmonicOsc, p), 2.0)(0, 0).real() == 2.0);

    ParamSet q;
    q.nu = 1.0;
    q.mu = 0.0;
    q.omega = 1.0;
    const Mat w = evaluate(SuperpotentialInstance(Kind::Inverse, q), 1.0);
    const Mat expect = 0.5 * s3 - 1.5 * I2 + (1.0 / 3.0) * s1;
    CHECK(maxabs(w - expect) < 1e-15);
}

TEST_CASE("inverse kind reproduces the radial Pauli superpotential") {
    // W_kappa = s3/(2r) - s1/(2 kappa + 1) - (2 kappa + 1)/(2r)
    for (double kap : {0.5, 1.0, 2.0, 3.5}) {
        ParamSet p;
        p.nu = kap;
        p.mu = 0.0;
        p.omega = -1.0;
        ParamSet p1 = p;
        p1.omega = 1.0;
        const SuperpotentialInstance a(Kind::Inverse, p), b(Kind::Inverse, p1);
        for (double r : {0.05, 0.7, 3.0, 40.0}) {
            const Mat ps = s3 / (2 * r) - s1 / (2 * kap + 1) - (2 * kap + 1) / (2 * r) * I2;
            CHECK(maxabs(evaluate(a, r) - ps) < 1e-14);
            // omega = +1 is the sigma_3 conjugate
            CHECK(maxabs(conjugate(s3, evaluate(b, r)) - ps) < 1e-14);
        }
    }
}

TEST_CASE("pair potentials") {
    ParamSet p;
    p.mu = 1.0;
    auto v = pair_potentials(SuperpotentialInstance(Kind::HarmonicOsc, p), 2.0);
    CHECK(v.vminus(0, 0).real() == doctest::Approx(3.0));
    CHECK(v.vplus(0, 0).real() == doctest::Approx(5.0));
    p.mu = 0.0;
    auto z = pair_potentials(SuperpotentialInstance(Kind::HarmonicOsc, p), 2.0);
    CHECK(maxabs(z.vminus) == 0.0);
    CHECK(maxabs(z.vplus) == 0.0);
}

TEST_CASE("hat potentials against the closed-form 2x2 potentials") {
    // Independent oracle: the expanded potentials typed in directly.
    const double nu = 1.7, mu = 0.45, om = 0.8, l = 0.9;
    ParamSet p;
    p.nu = nu;
    p.mu = mu;
    p.omega = om;
    p.lambda = l;
    const double l2 = l * l;
    for (double x : {0.15, 0.4, 0.9, 1.3}) {
        const double u = l * x;
        const double sec = 1 / std::cos(u), tn = std::tan(u), csch = 1 / std::sinh(u), cth = 1 / std::tanh(u);
        const double sech = 1 / std::cosh(u), th = std::tanh(u), e = std::exp(-u);
        const Mat pot1 = ((mu * (mu + 1) + nu * nu) * I2 - nu * (2 * mu + 1) * s3) / (x * x) - om / x * s1;
        const Mat pot2 = l2 * (mu * mu * e * e * I2 - (2 * nu - 1) * mu * e * s1 + 2 * om * s3);
        const Mat pot3 = l2 * ((nu * (nu - 1) + mu * mu) * sec * sec * I2 + 2 * om * tn * s1 +
                               mu * (2 * nu - 1) * sec * tn * s3);
        const Mat pot5 = l2 * ((nu * (nu - 1) + mu * mu) * csch * csch * I2 + 2 * om * cth * s1 +
                               mu * (1 - 2 * nu) * cth * csch * s3);
        const Mat pot4 = l2 * ((mu * mu - nu * (nu - 1)) * sech * sech * I2 + 2 * om * th * s3 -
                               mu * (2 * nu - 1) * sech * th * s1);
        CHECK(maxabs(hat_potential(SuperpotentialInstance(Kind::Inverse, p), x) - pot1) < 1e-12);
        CHECK(maxabs(hat_potential(SuperpotentialInstance(Kind::Exp, p), x) - pot2) < 1e-12);
        CHECK(maxabs(hat_potential(SuperpotentialInstance(Kind::Tan, p), x) - pot3) < 1e-12);
        CHECK(maxabs(hat_potential(SuperpotentialInstance(Kind::Cotanh, p), x) - pot5) < 1e-12);
        CHECK(maxabs(hat_potential(SuperpotentialInstance(Kind::Tanh, p), x) - pot4) < 1e-12);
        // the alternative factorizations carry the same potentials
        CHECK(maxabs(hat_potential(SuperpotentialInstance(Kind::DualInverse, p), x) - pot1) < 1e-12);
        CHECK(maxabs(hat_potential(SuperpotentialInstance(Kind::DualTan, p), x) - pot3) < 1e-12);
        CHECK(maxabs(hat_potential(SuperpotentialInstance(Kind::DualCotanh, p), x) - pot5) < 1e-12);
    }
}

TEST_CASE("shift") {
    ParamSet p;
    p.nu = 1.0;
    auto a = shift(SuperpotentialInstance(Kind::Inverse, p));
    CHECK(a.params().nu == 2.0);
    CHECK(a.shift_count() == 1);
    p.mu = 0.0;
    auto d = shift(SuperpotentialInstance(Kind::DualInverse, p));
    CHECK(d.params().mu == 1.0);
    CHECK(d.params().nu == 1.0);
    ParamSet c;
    c.kappa = 1.0;
    auto cc = shift(shift(SuperpotentialInstance(Kind::Coulomb, c)));
    CHECK(cc.params().kappa == 3.0);
    CHECK(cc.shift_count() == 2);
    CHECK(shift(SuperpotentialInstance(Kind::Coulomb, c), 2).params().kappa == 3.0);
    c.kappa = 3.0;
    CHECK(shift(SuperpotentialInstance(Kind::Morse, c)).params().kappa == 2.0);
}

TEST_CASE("shape invariance holds across the whole catalog") {
    for (const auto& e : catalog()) {
        const ParamSet p = representative(e.kind);
        const double r = shape_invariance_residual(e.kind, p, sample_grid(e.kind, p));
        INFO(e.name << " residual " << r);
        CHECK(r <= 1e-10);
    }
    ParamSet p;
    p.nu = 1.2;
    p.mu = 0.3;
    p.omega = 1.0;
    CHECK(shape_invariance_residual(Kind::Inverse, p, Grid::closed(0.1, 20.0, 1000)) <= 1e-12);
    ParamSet h;
    h.mu = 1.5;
    const SuperpotentialInstance ho(Kind::HarmonicOsc, h);
    CHECK(factorization_constant(shift(ho)) - factorization_constant(ho) == 3.0);
    CHECK(shape_invariance_residual(Kind::HarmonicOsc, h, Grid::closed(-5, 5, 101)) <= 1e-14);
}

TEST_CASE("shape invariance residual detects a corrupted partner") {
    ParamSet p;
    p.nu = 1.2;
    p.mu = 0.3;
    p.omega = 1.0;
    const SuperpotentialInstance w(Kind::Inverse, p);
    for (double delta : {1e-3, 1e-6}) {
        ParamSet q = shift(w).params();
        q.omega += delta;
        const SuperpotentialInstance bad(Kind::Inverse, q, 1);
        const double r = shape_invariance_residual(w, bad, Grid::closed(0.5, 5.0, 200));
        // the sigma_1 coefficient of the partner moves by delta/x
        CHECK(r > 0.1 * delta);
        CHECK(r < 10.0 * delta);
    }
}

TEST_CASE("analytic derivatives against central differences") {
    for (const auto& e : catalog()) {
        const ParamSet p = representative(e.kind);
        const SuperpotentialInstance w(e.kind, p);
        const auto iv = sample_interval(e.kind, p);
        double worst = 0.0;
        for (int i = 1; i < 10; ++i) {
            const double x = iv.lo + (iv.hi - iv.lo) * i / 10.0;
            const double h = 1e-5 * std::max(1.0, std::abs(x));
            const Mat fd = (evaluate(w, x + h) - evaluate(w, x - h)) / (2 * h);
            const Mat an = evaluate_with_derivative(w, x).dw;
            worst = std::max(worst, maxabs(fd - an) / std::max(1.0, maxabs(an)));
        }
        INFO(e.name);
        CHECK(worst < 1e-7);
    }
}

TEST_CASE("hermiticity of every catalog entry") {
    for (const auto& e : catalog()) {
        const ParamSet p = representative(e.kind);
        const SuperpotentialInstance w(e.kind, p);
        const Grid g = sample_grid(e.kind, p, 50);
        for (int j = 0; j < g.m; ++j) {
            const Mat m = evaluate(w, g.x(j));
            CHECK(m.rows() == e.dim);
            CHECK(maxabs(m - m.adjoint()) == 0.0);
            const auto v = pair_potentials(w, g.x(j));
            CHECK(maxabs(v.vminus - v.vminus.adjoint()) == 0.0);
        }
    }
}

TEST_CASE("decomposition round trip and classifying equations") {
    for (Kind k : {Kind::Inverse, Kind::Exp, Kind::Tan, Kind::Cotanh, Kind::Tanh}) {
        const ParamSet p = representative(k);
        const SuperpotentialInstance w(k, p);
        const auto d = decomposition(w);
        const Grid g = sample_grid(k, p, 200);
        std::vector<DecompositionSample> samples;
        double rt = 0.0;
        for (int j = 0; j < g.m; ++j) {
            const auto s = decomposition_at(w, g.x(j));
            const Mat W = evaluate(w, g.x(j));
            rt = std::max(rt, maxabs(d.k * s.A + s.B / d.k + s.C - W) / std::max(1.0, maxabs(W)));
            samples.push_back(s);
        }
        INFO(info(k).name);
        CHECK(rt <= 1e-14);
        CHECK(classification_residual(samples, d).max() <= 1e-10);
        // the shift advances k by alpha
        CHECK(decomposition(shift(w)).k == doctest::Approx(d.k + d.alpha).epsilon(1e-15));
    }
    DecompositionSample trivial{Mat::Zero(2, 2), Mat::Zero(2, 2), 2.0 * s3, Mat::Zero(2, 2), Mat::Zero(2, 2)};
    Decomposition c;
    c.omega = 2.0;
    CHECK(classification_residual({trivial}, c).max() == 0.0);
    DecompositionSample bad = trivial;
    bad.C = Mat::Zero(3, 3);
    CHECK_THROWS_AS(classification_residual({bad}, c), Error);
}

TEST_CASE("unitary conjugations flip parameter signs") {
    auto with = [](Kind k, double mu, double om) {
        ParamSet p = representative(k);
        p.mu = mu;
        p.omega = om;
        return SuperpotentialInstance(k, p);
    };
    const double mu = 0.6, om = 0.9;
    for (double x : {0.3, 0.8, 1.2}) {
        // sigma_1 flips the sigma_3 part, sigma_3 flips the sigma_1 part
        CHECK(maxabs(conjugate(s1, evaluate(with(Kind::Exp, mu, om), x)) - evaluate(with(Kind::Exp, mu, -om), x)) < 1e-15);
        CHECK(maxabs(conjugate(s3, evaluate(with(Kind::Exp, mu, om), x)) - evaluate(with(Kind::Exp, -mu, om), x)) < 1e-15);
        CHECK(maxabs(conjugate(s1, evaluate(with(Kind::Tan, mu, om), x)) - evaluate(with(Kind::Tan, -mu, om), x)) < 1e-15);
        CHECK(maxabs(conjugate(s3, evaluate(with(Kind::Tan, mu, om), x)) - evaluate(with(Kind::Tan, mu, -om), x)) < 1e-15);
        CHECK(maxabs(conjugate(s1, evaluate(with(Kind::Cotanh, mu, om), x)) - evaluate(with(Kind::Cotanh, -mu, om), x)) < 1e-15);
        CHECK(maxabs(conjugate(s3, evaluate(with(Kind::Tanh, mu, om), x)) - evaluate(with(Kind::Tanh, -mu, om), x)) < 1e-15);
        CHECK(maxabs(conjugate(s1, evaluate(with(Kind::Tanh, mu, om), x)) - evaluate(with(Kind::Tanh, mu, -om), x)) < 1e-15);
        // for the inverse kind sigma_1 sends mu + 1/2 to -(mu + 1/2)
        CHECK(maxabs(conjugate(s1, evaluate(with(Kind::Inverse, mu, om), x)) -
                     evaluate(with(Kind::Inverse, -1.0 - mu, om), x)) < 1e-14);
    }
}

TEST_CASE("spin-1 matrices") {
    const auto S = spin_one();
    const cplx i(0, 1);
    for (int a = 0; a < 3; ++a) CHECK(maxabs(S[a] - S[a].adjoint()) == 0.0);
    CHECK(maxabs(S[0] * S[1] - S[1] * S[0] - i * S[2]) == 0.0);
    CHECK(maxabs(S[1] * S[2] - S[2] * S[1] - i * S[0]) == 0.0);
    CHECK(maxabs(S[2] * S[0] - S[0] * S[2] - i * S[1]) == 0.0);
    CHECK(maxabs(S[0] * S[0] + S[1] * S[1] + S[2] * S[2] - 2.0 * identity(3)) == 0.0);
}

TEST_CASE("hermiticity domain of the 3x3 kinds") {
    ParamSet p;
    p.mu1 = 1.0;
    p.c1 = -2.0;
    auto h = hermiticity_domain(Kind::M3, p);
    CHECK(h.accepted);
    CHECK(h.positive_x);
    CHECK(h.x_min == 2.0);
    p.c1 = 1.0;
    h = hermiticity_domain(Kind::M3, p);
    CHECK_FALSE(h.accepted);
    CHECK(h.reason.find("c1 must be < 0") != std::string::npos);
    CHECK_THROWS_AS(SuperpotentialInstance(Kind::M3, p), Error);
    ParamSet z;
    z.c1 = 1.0;
    h = hermiticity_domain(Kind::M3, z);
    CHECK(h.accepted);
    CHECK_FALSE(h.positive_x);
    CHECK_THROWS_AS(hermiticity_domain(Kind::Inverse, z), Error);
}

TEST_CASE("pole guard and parameter validation") {
    ParamSet p;
    CHECK_THROWS_AS(evaluate(SuperpotentialInstance(Kind::Coulomb, p), 0.0), Error);
    CHECK_THROWS_AS(evaluate(SuperpotentialInstance(Kind::Coulomb, p), -1.0), Error);
    CHECK_THROWS_AS(evaluate(SuperpotentialInstance(Kind::Tan, p), M_PI / 2), Error);
    CHECK_NOTHROW(evaluate(SuperpotentialInstance(Kind::Tan, p), M_PI / 2 - 1e-6));
    PoleGuard strict{1e-3};
    CHECK_THROWS_AS(evaluate(SuperpotentialInstance(Kind::Tan, p), M_PI / 2 - 1e-6, strict), Error);
    try {
        evaluate(SuperpotentialInstance(Kind::Inverse, p), 0.0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
    ParamSet nd = representative(Kind::W1);
    nd.r3 = 0.9; // breaks r2^2 + r3^2 = omega^2
    CHECK_THROWS_AS(SuperpotentialInstance(Kind::W1, nd), Error);
    ParamSet bad;
    bad.nu = -0.5;
    CHECK_THROWS_AS(SuperpotentialInstance(Kind::Inverse, bad), Error);
    bad.nu = std::nan("");
    CHECK_THROWS_AS(SuperpotentialInstance(Kind::Exp, bad), Error);
}

TEST_CASE("params json round trip") {
    ParamSet p = representative(Kind::M5);
    ParamSet q = params_from_json(to_json(p));
    CHECK(to_json(q) == to_json(p));
    CHECK_THROWS_AS(params_from_json(nlohmann::json{{"zeta", 1.0}}), Error);
    CHECK_THROWS_AS(params_from_json(nlohmann::json{{"nu", "x"}}), Error);
    CHECK(params_from_json(nlohmann::json{{"nu", 2.5}}).nu == 2.5);
}
