#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace susy {

using cplx = std::complex<double>;

// Hermitian blocks never exceed 3x3 (spin-1); the fixed upper bound keeps them on the stack.
using Mat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;
using Vec = Eigen::Matrix<cplx, Eigen::Dynamic, 1, 0, 3, 1>;

// Spinor field sampled on a grid: rows are components, columns are nodes.
using Field = Eigen::MatrixXcd;

enum class ErrorKind { Domain, Gate, NonConvergence, InvalidConfig };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error domain_error(const std::string& m) { return Error(ErrorKind::Domain, m); }
inline Error config_error(const std::string& m) { return Error(ErrorKind::InvalidConfig, m); }
inline Error convergence_error(const std::string& m) { return Error(ErrorKind::NonConvergence, m); }

// Gate rejections carry the name of the violated condition, e.g. "condk1".
class GateError : public Error {
public:
    GateError(std::string gate, const std::string& inequality)
        : Error(ErrorKind::Gate, gate + ": " + inequality), gate_(std::move(gate)) {}
    const std::string& gate() const { return gate_; }

private:
    std::string gate_;
};

inline Mat pauli(int a) {
    Mat s(2, 2);
    const cplx i(0, 1);
    switch (a) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::out_of_range("pauli index");
    }
    return s;
}

inline Mat identity(int d) { return Mat::Identity(d, d); }
inline Mat scalar_mat(double v) {
    Mat m(1, 1);
    m(0, 0) = v;
    return m;
}

} // namespace susy
