#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Sparse>
#include <json.hpp>

#include "susy/engine.hpp"

namespace susy {

using Point3 = std::array<double, 3>;
using SpMat = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

// Reflections r1, r2, r3 and the fixed rotations r12, r31, r23, r123 as sign patterns.
enum class Involution { R1, R2, R3, R12, R31, R23, R123 };
const char* to_string(Involution g);
Point3 apply(Involution g, const Point3& x);

struct VectorPotential {
    std::string name;
    std::function<Point3(const Point3&)> A;
    // Declared parity per involution: +1 means A(g x) = g A(x), -1 means A(g x) = -g A(x),
    // 0 means nothing is declared.
    std::array<int, 7> declared{0, 0, 0, 0, 0, 0, 0};

    // Symmetric gauge of the uniform field B along x3.
    static VectorPotential constant_field(double B);
};

// Largest violation of the declared parities on the given points.
double declared_parity_defect(const VectorPotential& a, const std::vector<Point3>& points);
// Curl of A by 4th-order central differences of the analytic A.
Point3 magnetic_field(const VectorPotential& a, const Point3& x);

// Tensor-product lattice on [-L, L]^dim with n nodes per axis at cell centres.
struct Lattice {
    int dim = 2;
    int n = 32;
    double half_width = 6.0;
    double offset = 0.0; // shifts every node; nonzero breaks the reflection symmetry

    double h() const { return 2.0 * half_width / n; }
    int nodes() const;
    double coord(int i) const { return -half_width + (i + 0.5) * h() + offset; }
    Point3 point(int node) const;
    int index(const std::array<int, 3>& i) const;
    std::array<int, 3> multi(int node) const;
    // Node of r x for the reflection along `axis` (0-based); -1 when r x is not a node.
    int reflect(int node, int axis) const;
    bool symmetric() const;

    static Lattice symmetric_grid(int dim, int n, double half_width);
};

// Spinor fields on the lattice: index = spin + 2 * node.
struct PauliSystem {
    Lattice lattice;
    VectorPotential potential;
    double charge = 1.0;
    std::vector<SpMat> pi; // pi_a = -i d_a - e A_a on spinors, a < lattice.dim
    SpMat H;               // sum_a pi_a^2 - e sigma.B with pi_a^2 assembled from the 3-point Laplacian

    PauliSystem(const Lattice& lat, VectorPotential a, double charge = 1.0);
    double hermiticity_defect() const;
    SpMat sigma(int a) const; // sigma_a acting on the spin index
    SpMat reflection(int axis) const; // R_a = sigma_a theta_a
};

// C = i sigma_2 (complex conjugation).
Eigen::VectorXcd apply_c(const Eigen::VectorXcd& v);

struct Supercharge {
    std::string name;
    SpMat linear;            // the operator applied before the optional C
    bool antilinear = false; // Q = C * linear when true
    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
};

enum class Extension { N2, N4 };

struct SuperchargeSet {
    Extension extension = Extension::N2;
    std::vector<Supercharge> q;
    std::vector<double> metric; // diagonal of g
    double q3 = 0.0;            // separated momentum along x3 (N2 on a planar lattice)
    const PauliSystem* system = nullptr;
};

// N2: Q1 = sigma1 pi1 + sigma2 pi2, Q2 = i sigma3 Q1 (planar lattice, H = H2).
// N4: Q1 = sigma.pi, Q2 = i R3 Q1, Q3 = C R1 Q1, Q4 = C R2 Q1 (3D lattice), g = diag(1, 1, -1, -1).
SuperchargeSet build_supercharges(const PauliSystem& system, Extension ext, double q3 = 0.7);

// Smooth Gaussian packets with random complex amplitudes and small momenta.
std::vector<Eigen::VectorXcd> random_packets(const Lattice& lat, int count, std::uint64_t seed);

// R(k, l) = max over the batch of ||{Q_k, Q_l} v - 2 g_kl H v|| / ||v||.
Eigen::MatrixXd superalgebra_residual(const SuperchargeSet& qs, const std::vector<Eigen::VectorXcd>& batch);
// max ||[Q_k, H] v|| / ||v|| per supercharge.
std::vector<double> commutator_residual(const SuperchargeSet& qs, const std::vector<Eigen::VectorXcd>& batch);
// ||[Q3, Q_k] v|| for the separated momentum; identically zero in this representation.
double q3_commutator(const SuperchargeSet& qs, const std::vector<Eigen::VectorXcd>& batch);

struct ResidualRecord {
    std::string pair;
    int n = 0;
    double residual = 0.0;
    double order = 0.0; // log2 ratio against the previous (coarser) record, NaN for the first
    bool exact = false; // residual at roundoff level
};

// Residual refinement study for the given node counts (each doubling the previous).
std::vector<ResidualRecord> residual_study(const VectorPotential& a, int dim, Extension ext,
                                           const std::vector<int>& ns, double half_width, int batch,
                                           std::uint64_t seed);
nlohmann::json to_json(const std::vector<ResidualRecord>& records);

// Constants of motion for the uniform field: J3 = x1 p2 - x2 p1 + sigma3/2 and the
// Johnson-Lippmann operators K_a = p_a + e A_a.
SpMat angular_momentum(const PauliSystem& s);
SpMat johnson_lippmann(const PauliSystem& s, int axis);
double commutator_with_h(const PauliSystem& s, const SpMat& op, const std::vector<Eigen::VectorXcd>& batch);

struct ParityReport {
    std::array<int, 7> parity{}; // +1, -1 or 0 (no definite parity) per involution
    bool par_holds = false;      // A(r1 x) = -r1 A, A(r2 x) = -r2 A, A(r3 x) = r3 A
    bool planar = false;         // A3 = 0 and no x3 dependence
    int supercharges = 1;        // predicted count
    std::string note;
};

ParityReport parity_classify(const VectorPotential& a, double tol = 1e-12);

// ---- Landau reduction --------------------------------------------------------

enum class LandauSector { Radial, Cartesian };

struct LandauReduction {
    LandauSector sector = LandauSector::Cartesian;
    double omega = 1.0;
    double n = 0.0;             // angular index (radial sector)
    LadderProblem problem;      // H_- = Vhat(problem) + energy_offset
    double energy_offset = 0.0;
    std::function<double(double)> v_plus, v_minus; // potentials of H_+ and H_-
};

// Units e = 1, 2m = 1, so omega = B. The grid belongs to the returned ladder problem.
LandauReduction landau_reduction(double B, LandauSector sector, const Grid& grid, double n = 0.0, int n_max = 3);
BandedHermitianOperator landau_block_operator(const LandauReduction& r, const Grid& grid);
// Lowest k eigenvalues of diag(H_+, H_-), Richardson-extrapolated from h and h/2.
std::vector<double> landau_spectrum(const LandauReduction& r, double a, double b, int m, int k);

} // namespace susy
