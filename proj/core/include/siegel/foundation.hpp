#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "siegel/exact_mat.hpp"
#include "siegel/scalars.hpp"

namespace siegel {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double truncation_tail = 1e-12;
};

struct structural_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct conditioning_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct truncation_error : std::runtime_error {
    truncation_error(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_bound(achieved) {}
    double achieved_bound;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_finite(const CMat& m, const char* where);

bool is_symmetric(const RMat& m, double eps = 0.0);
bool is_symmetric(const CMat& m, double eps = 0.0);

// True iff the real symmetric matrix is positive definite (LDL^t pivots).
bool is_positive_definite(const RMat& m);

// A point Omega = X + iY of the Siegel upper half-space H_n.
struct SiegelPoint {
    CMat omega;

    SiegelPoint() = default;
    explicit SiegelPoint(CMat om, double sym_eps = 1e-12);

    int degree() const { return static_cast<int>(omega.rows()); }
    RMat x() const { return omega.real(); }
    RMat y() const { return omega.imag(); }
};

// Exact counterpart with Gaussian rational entries, Im > 0 checked exactly.
struct ExactSiegelPoint {
    GaussMat omega;

    ExactSiegelPoint() = default;
    explicit ExactSiegelPoint(GaussMat om);

    int degree() const { return omega.rows(); }
    SiegelPoint to_numeric() const;
};

// det(Omega/i)^{1/2} by principal logarithm per eigenvalue of Omega/i;
// single valued on H_n, equals (det Y)^{1/2} at Omega = iY.
cplx principal_halfplane_sqrt_det(const SiegelPoint& omega);
cplx principal_halfplane_sqrt_det(const CMat& omega, double check_eps = 1e-9);

// Symmetric positive square root of an SPD matrix.
RMat sym_sqrt(const RMat& spd);

double frob_norm(const CMat& m);

CMat to_cmat(const GaussMat& m);
RMat to_rmat(const RatMat& m);
RatMat rat_from_rmat(const RMat& m); // exact dyadic conversion

} // namespace siegel
