#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "susy/types.hpp"

namespace susy {

struct Grid {
    double x0 = 0.0;
    double h = 1.0;
    int m = 3;

    Grid() = default;
    Grid(double x0_, double h_, int m_);

    double x(int j) const { return x0 + j * h; }
    double back() const { return x(m - 1); }
    Eigen::VectorXd nodes() const;

    // Interior nodes of (a, b): Dirichlet data at both ends is implied by omission.
    static Grid interior(double a, double b, int m);
    // Half-line (0, L]: x0 = h so that node 0 stands in for the excluded origin.
    static Grid half_line(double L, int m);
    // m nodes spanning [a, b] inclusive.
    static Grid closed(double a, double b, int m);
};

// ---- modified Bessel functions --------------------------------------------

struct BesselValue {
    double value = 0.0;
    bool underflow = false;
};

BesselValue bessel_k_checked(double order, double x);
double bessel_k(double order, double x);
double bessel_i(double order, double x);
// Derivatives in x, from the standard recurrences.
double bessel_k_prime(double order, double x);
double bessel_i_prime(double order, double x);

// ---- banded Hermitian operators --------------------------------------------

// Block-tridiagonal Hermitian operator: diagonal blocks D_j (block x block) and a
// scalar coupling -link[j] * I between node j and node j+1.
struct BandedHermitianOperator {
    int block = 1;
    std::vector<Mat> diag;
    std::vector<double> link;

    int nodes() const { return static_cast<int>(diag.size()); }
    int dim() const { return nodes() * block; }

    // -d^2/dx^2 with the 3-point stencil plus the potential blocks.
    static BandedHermitianOperator schrodinger(const Grid& g, const std::vector<Mat>& potential);
    static BandedHermitianOperator schrodinger(const Grid& g, const std::function<Mat(double)>& V);

    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
    Eigen::MatrixXcd to_dense() const;
    double norm_bound() const; // Gershgorin bound on the spectral radius
    double hermiticity_defect() const;
};

struct EigenResult {
    std::vector<double> values;
    std::vector<Eigen::VectorXcd> vectors;
    std::vector<double> residuals;
};

struct EigOptions {
    double residual_tol = 1e-9; // relative to the Gershgorin norm
    int max_inverse_iterations = 8;
    std::uint64_t seed = 0x5eed1234ULL;
};

EigenResult eig_banded(const BandedHermitianOperator& op, int k, const EigOptions& opt = {});
std::vector<double> eigenvalues_banded(const BandedHermitianOperator& op, int k);
// Number of eigenvalues strictly below sigma (Sylvester inertia).
int count_below(const BandedHermitianOperator& op, double sigma);

// Scalar Sturm-Liouville problem -u'' + V u = E u on (a, b) with optional
// regularisation at singular endpoints: when p_left != 0 the solution is
// written u = d^p w with d the distance to a, the cell face sits on a and the
// flux vanishes there. p is the Frobenius exponent of the wanted branch.
struct RegularizedProblem {
    Eigen::VectorXd nodes;
    double h = 0.0;
    BandedHermitianOperator op;
};

RegularizedProblem regularized_schrodinger(double a, double b, int m,
                                           const std::function<double(double)>& V,
                                           double p_left, double p_right);
// p with p(p-1) = c, the larger (principal) root.
double frobenius_exponent(double c);

// ---- quadrature and differentiation ----------------------------------------

double integrate(const Grid& g, const Field& samples);
double integrate(const Grid& g, const Eigen::VectorXd& samples);
// Plain trapezoid of f (not |f|^2) on the grid.
double trapezoid(const Grid& g, const Eigen::VectorXd& f);

Field differentiate(const Grid& g, const Field& samples, int order);
Eigen::VectorXd differentiate(const Grid& g, const Eigen::VectorXd& samples, int order);

// ---- second-order forward jets ---------------------------------------------

// v + d*eps + dd*eps^2/2: enough to carry f, f', f'' through closed-form mass functions.
struct Jet {
    double v = 0.0, d = 0.0, dd = 0.0;
    Jet() = default;
    Jet(double c) : v(c) {}
    Jet(double v_, double d_, double dd_) : v(v_), d(d_), dd(dd_) {}
    static Jet variable(double x) { return {x, 1.0, 0.0}; }
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet sqrt(const Jet& a);
Jet pow(const Jet& a, double p);

} // namespace susy
