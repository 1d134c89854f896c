#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "susy/numkit.hpp"
#include "susy/types.hpp"

namespace susy {

enum class Family { Scalar, Matrix2Diag, Matrix2Dual, Matrix2NonDiag, Matrix3 };

enum class Kind {
    // scalar
    Coulomb, Rosen1, Rosen2, Eckart, HarmonicOsc, Osc3D, Scarf1, Scarf2, GenPoschlTeller, Morse,
    // 2x2 with diagonal A
    Inverse, Exp, Tan, Cotanh, Tanh,
    // alternative factorizations, shape invariant in mu
    DualInverse, DualTan, DualCotanh,
    // 2x2 with non-diagonal A
    W1, W2, W3, W4, W5, W6, W7, W8, W9,
    // 3x3, spin-1 matrices
    M1, M2, M3, M4, M5, M6, M7,
};

// The parameter the shape-invariance shift acts on.
enum class ShiftParam { Kappa, Nu, Mu };

struct ParamSet {
    double nu = 1.0;
    double mu = 0.0;
    double omega = 1.0;
    double lambda = 1.0;
    double kappa = 1.0;
    double c = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double r2 = 0.0;
    double r3 = 1.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double mu3 = 0.0;
    double alpha = 1.0;

    double get(ShiftParam p) const;
    void set(ShiftParam p, double v);
};

struct KindInfo {
    Kind kind;
    const char* name;
    Family family;
    int dim;
    ShiftParam shifted;
    int step;            // +1 or -1: direction in which the partner is reached
    const char* domain;  // human-readable
    const char* c_formula;
    const char* params;  // parameters that enter the formula
};

const std::vector<KindInfo>& catalog();
const KindInfo& info(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);

class SuperpotentialInstance {
public:
    SuperpotentialInstance(Kind kind, const ParamSet& params, int shift_count = 0);

    Kind kind() const { return kind_; }
    const ParamSet& params() const { return params_; }
    int shift_count() const { return shift_count_; }
    int dim() const { return info(kind_).dim; }
    // Value of the shifted parameter (nu, mu or kappa).
    double level() const { return params_.get(info(kind_).shifted); }

private:
    Kind kind_;
    ParamSet params_;
    int shift_count_;
};

struct PoleGuard {
    double eps = 1e-8;
};

struct Evaluation {
    Mat w;
    Mat dw;
};

// W and its hand-coded derivative W'.
Evaluation evaluate_with_derivative(const SuperpotentialInstance& w, double x, const PoleGuard& guard = {});
Mat evaluate(const SuperpotentialInstance& w, double x, const PoleGuard& guard = {});

struct PairPotentials {
    Mat vminus; // W^2 - W'
    Mat vplus;  // W^2 + W'
};
PairPotentials pair_potentials(const SuperpotentialInstance& w, double x, const PoleGuard& guard = {});

// Factorization constant c, so that Vhat = W^2 - W' + c and the levels are c(p), c(p+step), ...
double factorization_constant(Kind kind, const ParamSet& params);
double factorization_constant(const SuperpotentialInstance& w);
// W^2 - W' + c.
Mat hat_potential(const SuperpotentialInstance& w, double x, const PoleGuard& guard = {});

// One unit step of the shifted parameter in the kind's direction.
SuperpotentialInstance shift(const SuperpotentialInstance& w, int times = 1);

double shape_invariance_residual(Kind kind, const ParamSet& params, const Grid& grid);
// Residual against an explicitly supplied partner, so that a corrupted partner can be probed.
double shape_invariance_residual(const SuperpotentialInstance& w, const SuperpotentialInstance& partner,
                                 const Grid& grid);

// A well-conditioned sampling interval inside the kind's domain.
struct Interval {
    double lo, hi;
};
Interval sample_interval(Kind kind, const ParamSet& params);

// W = k A + B/k + C for the 2x2 kinds with diagonal A. k advances by alpha per shift.
struct Decomposition {
    double k = 0.0;
    double alpha = 1.0;
    // constants of the classifying equations
    double nu = 0.0, kappa = 0.0, lambda = 0.0, omega = 0.0;
};
struct DecompositionSample {
    Mat A, dA, B, C, dC;
};
Decomposition decomposition(const SuperpotentialInstance& w);
DecompositionSample decomposition_at(const SuperpotentialInstance& w, double x);

struct ClassificationResidual {
    double a0 = 0.0;  // A' - alpha (A^2 + nu I)
    double a00 = 0.0; // C' - alpha/2 {A, C} + kappa I
    double bc = 0.0;  // {B, C} + lambda I
    double bb = 0.0;  // B^2 - omega^2 I
    double max() const;
};
ClassificationResidual classification_residual(const std::vector<DecompositionSample>& samples,
                                               const Decomposition& constants);

// Admissible x-range for the 3x3 kinds; rejection is reported as a value.
struct HermiticityDomain {
    bool accepted = true;
    bool positive_x = false;    // x > 0 is required
    double x_min = -1e300;      // lower end of the interval on which W is Hermitian
    std::string reason;
};
HermiticityDomain hermiticity_domain(Kind kind, const ParamSet& params);

// Spin-1 matrices with [S1, S2] = i S3 and cyclic.
std::array<Mat, 3> spin_one();

// Unitary conjugation U W U^dagger evaluated pointwise.
Mat conjugate(const Mat& u, const Mat& w);

nlohmann::json to_json(const ParamSet& p);
ParamSet params_from_json(const nlohmann::json& j, ParamSet base = {});
nlohmann::json catalog_json();

} // namespace susy
