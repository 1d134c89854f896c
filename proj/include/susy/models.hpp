#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "susy/engine.hpp"

namespace susy {

enum class ModelKind { PsSpinHalf, ExpField, PsSpinOne };

// A physical model mapped onto a catalog entry: potential(x) = U * Vhat(x) * U^dagger.
struct ModelDescriptor {
    std::string name;
    ModelKind kind = ModelKind::PsSpinHalf;
    nlohmann::json model_params;

    Kind catalog_kind = Kind::Inverse;
    ParamSet params;
    Mat unitary;

    // physical radius = radial_scale * x, physical energy = energy_scale * (E_catalog + energy_offset)
    double radial_scale = 1.0;
    double energy_scale = 1.0;
    double energy_offset = 0.0;

    std::function<Mat(double)> potential; // the model's radial potential as written for the model

    SuperpotentialInstance instance() const { return SuperpotentialInstance(catalog_kind, params); }
    nlohmann::json to_json() const;
};

// max over xs of || potential(x) - U Vhat(x) U^dagger ||.
double mapping_defect(const ModelDescriptor& m, const std::vector<double>& xs);

// Neutral spin-1/2 particle in the field of a line current. mass and coupling only set the scales.
ModelDescriptor ps_model(int kappa, double mass = 0.5, double coupling = 1.0);
LadderProblem ps_radial_problem(int kappa, const Grid& grid, int n_max = 3);

// Exponential-field model separated along x1 at eigenvalue p of p1 - sigma3/2.
ModelDescriptor ep1_model(double lambda, double p, double nu);
LadderProblem ep1_reduction(double lambda, double p, double nu, const Grid& grid, int n_max = 3);

// ---- spin one ----------------------------------------------------------------

// Spin-1 matrices (S_a)_bc = -i eps_abc.
Mat spin1(int a);

enum class Spin1Pairing {
    Conventional, // S.n = S1 n1 + S2 n2
    AsPrinted,    // S.n = S1 n2 + S2 n1
};

// mu (2 (S x n)^2 - 1) + lambda (2 (S.n)^2 - 1) with n = (cos phi, sin phi) and (S x n) = S1 n2 - S2 n1.
Mat spin1_angular_potential(double mu, double lambda, double phi, Spin1Pairing pairing);
// max over phi of || mu_s(phi) - R(phi) mu_s(0) R(phi)^dagger || with R = exp(-i phi S3); zero iff
// J3 = L3 + S3 is conserved and the radial separation exists.
double spin1_rotation_defect(double mu, double lambda, Spin1Pairing pairing);

struct Spin1RadialProblem {
    double mu = 0.0, lambda = 0.0;
    int j = 1;
    std::function<Mat(double)> assembled; // ((j - S3)^2 - 1/4)/r^2 + mu_s(n = e1)/r, 3x3
    Mat basis;                            // columns: S3 eigenvectors for -1, 0, +1
    ModelDescriptor scalar_block;         // S3 = 0 channel: modified Coulomb
    ModelDescriptor matrix_block;         // S3 = +-1 channels: the inverse-power matrix potential
};

Spin1RadialProblem spin1_radial_problem(double mu, double lambda, int j);
BandedHermitianOperator spin1_assembled_operator(const Spin1RadialProblem& p, const Grid& grid);
std::vector<BandedHermitianOperator> spin1_decomposed_operators(const Spin1RadialProblem& p, const Grid& grid);

// Lookup used by the CLI: "ps", "ep1", "ps-spin1".
std::vector<std::string> model_names();
ModelDescriptor model_by_name(const std::string& name, const nlohmann::json& params);

} // namespace susy
