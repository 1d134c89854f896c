#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "susy/numkit.hpp"
#include "susy/superpotentials.hpp"

namespace susy {

// ---- normalizability gates --------------------------------------------------

struct GateCheck {
    bool passed = true;
    std::string gate;       // e.g. "condk1"
    std::string inequality; // the violated inequality, empty when passed
    // True when the kind has no closed-form condition beyond (muo): acceptance is
    // then decided by the numeric kernel search.
    bool empirical = false;
};

GateCheck check_gate(const SuperpotentialInstance& w);
// Throws GateError naming the violated inequality.
void require_gate(const SuperpotentialInstance& w);

// ---- states -----------------------------------------------------------------

enum class Provenance { Ladder, Eigensolver, AnalyticBessel, NumericKernel };
const char* to_string(Provenance p);

struct BoundState {
    int n = 0;
    double energy = 0.0;
    Grid grid;
    Field samples; // unit discrete L2 norm
    double norm = 0.0; // L2 norm before normalization
    Provenance provenance = Provenance::NumericKernel;
};

// Scales to unit L2 norm and fixes the phase: the largest component at the node of
// largest amplitude is made real and positive.
BoundState make_state(int n, double energy, const Grid& grid, Field samples, Provenance p);

// |<a, b>| for states on the same grid.
double overlap(const BoundState& a, const BoundState& b);

// Closed Bessel forms for Inverse, DualInverse and Exp.
BoundState ground_state_analytic(const SuperpotentialInstance& w, const Grid& grid);
// ||a- psi|| / ||psi|| of the closed form, with exact Bessel derivatives (no differencing).
double analytic_kernel_residual(const SuperpotentialInstance& w, const Grid& grid);

// Kernel of a- by inward integration from both ends along the decaying eigen-directions
// of W, with continuous orthonormalization and matching at the middle node. Throws
// GateError("kernel", ...) when no normalizable solution exists. No gate check.
BoundState find_kernel(const SuperpotentialInstance& w, const Grid& grid);
// Gate check followed by find_kernel.
BoundState ground_state_numeric(const SuperpotentialInstance& w, const Grid& grid);

// Operators on sampled spinors (4th-order differences).
Field apply_lowering(const SuperpotentialInstance& w, const Grid& grid, const Field& psi);
Field apply_raising(const SuperpotentialInstance& w, const Grid& grid, const Field& psi);
Field apply_hamiltonian(const SuperpotentialInstance& w, const Grid& grid, const Field& psi);

// ||a- psi|| / ||psi||.
double kernel_residual(const SuperpotentialInstance& w, const BoundState& s);

struct LadderProblem {
    SuperpotentialInstance superpotential;
    Grid grid;
    int n_max = 0;

    // Checks the gate at every shift 0..n_max.
    LadderProblem(SuperpotentialInstance w, const Grid& g, int n_max);
};

// psi_n = a+(p) a+(p+1) ... a+(p+n-1) psi_0(p+n).
BoundState excited_state(const LadderProblem& problem, int n);

// ---- spectra ----------------------------------------------------------------

struct SpectrumRow {
    int n = 0;
    double N = 0.0;
    double e_analytic = 0.0;
    double e_numeric = 0.0;
    double abs_err = 0.0;
    bool has_numeric = false;
};

struct SpectrumTable {
    Kind kind = Kind::Inverse;
    ParamSet params;
    std::vector<SpectrumRow> rows;

    void attach_numeric(const std::vector<double>& values);
    double max_abs_err() const;
    std::string to_csv() const;
    nlohmann::json to_json() const;
};

SpectrumTable energy_levels(Kind kind, const ParamSet& params, int n_max);

// Natural domain of the kind (may be infinite on either side).
struct Domain {
    double a = 0.0;
    double b = 0.0;
};
Domain natural_domain(Kind kind, const ParamSet& params);

// Grid covering the classically relevant region of levels 0..n_max: infinite ends are
// cut where the WKB decay exponent of the top level exceeds 30.
Grid standard_grid(const SuperpotentialInstance& w, int m, int n_max = 3);

BandedHermitianOperator hamiltonian_operator(const SuperpotentialInstance& w, const Grid& grid);
std::vector<double> numeric_levels(const SuperpotentialInstance& w, const Grid& grid, int k);
BoundState eigen_state(const SuperpotentialInstance& w, const Grid& grid, int n);

// ---- dual shape invariance --------------------------------------------------

struct DualFactorization {
    SuperpotentialInstance w_tilde;
    double c_mu = 0.0;      // W~^2 - W~' = Vhat + c_mu
    double residual = 0.0;  // max Frobenius residual of that identity on the sample interval
};

DualFactorization dual_factorization(Kind kind, const ParamSet& params);
BoundState dual_ground_state(const SuperpotentialInstance& w_tilde, const Grid& grid);

// ---- isospectrality and intertwining ----------------------------------------

struct IsospectralReport {
    std::vector<double> matrix;
    std::vector<double> reference;
    double max_discrepancy = 0.0;
};

IsospectralReport isospectral_check(const BandedHermitianOperator& matrix,
                                    const std::vector<BandedHermitianOperator>& references, int k);
// Scalar pair for Inverse ((nu^2 - 1/4)/x^2 -+ w/x) and Tan (lambda^2 (nu(nu-1) sec^2 +- 2w tan)).
std::vector<BandedHermitianOperator> scalar_reference(Kind kind, const ParamSet& params, const Grid& grid);
IsospectralReport isospectral_check(Kind kind, const ParamSet& params, const Grid& grid, int k);

// ||(H_p a+_p - a+_p H_p') phi|| / ||phi|| with p' the shape-invariance partner.
double intertwining_residual(const SuperpotentialInstance& w, const Grid& grid, const Field& phi);

// Sum of a few Gaussian bumps with random complex amplitudes, well inside the grid.
Field random_bump_spinor(const Grid& grid, int dim, std::uint64_t seed);

} // namespace susy
