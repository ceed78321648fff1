#pragma once

#include "siegel/heisenberg.hpp"
#include "siegel/symplectic.hpp"

namespace siegel {

// E_{Omega;A,B}(Z) = e^{2 pi i (sigma(tA U) + sigma((B - A X) Y^{-1} tV))},
// Z = U + iV.
cplx eigenfunction_eval(const SiegelPoint& omega, const Eigen::MatrixXi& a,
                        const Eigen::MatrixXi& b, const CMat& z);

// Delta_Omega E / E: the exact closed-form constant -pi^2 sigma(Y(tA A + tC C)),
// C = (B - A X) Y^{-1}, plus a constancy cross-check from the per-entry
// derivative factors at the sample points.
double laplacian_eigenvalue(const SiegelPoint& omega, const Eigen::MatrixXi& a,
                            const Eigen::MatrixXi& b, const std::vector<CMat>& samples,
                            double* constancy_dev = nullptr);

// Phi_Omega(P + iQ) = (P + Q X) + i Q Y and its inverse.
CMat torus_coords_forward(const SiegelPoint& omega, const RMat& p, const RMat& q);
std::pair<RMat, RMat> torus_coords_inverse(const SiegelPoint& omega, const CMat& z);

// <E_{A,B}, E_{A',B'}>: exact Kronecker delta by character orthogonality.
int orthonormality_exact(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b,
                         const Eigen::MatrixXi& ap, const Eigen::MatrixXi& bp);
// trapezoidal cross-check on the flat torus, m = n = 1.
cplx orthonormality_quadrature(const SiegelPoint& omega, int a, int b, int ap, int bp, int grid);

struct FundamentalDomainPoint {
    bool inside = false;
    CMat reduced;          // Z0 with torus coordinates in [0,1)
    Eigen::MatrixXi lambda, mu; // Z = Z0 + lambda Omega + mu
};
FundamentalDomainPoint fundamental_domain_member(const SiegelPoint& omega, const CMat& z);

// Riemann conditions for the period matrix (I_n, Omega): returns
// (|Omega_b J t(Omega_b)|_max, min eigenvalue of -(1/i) Omega_b J t(conj Omega_b) / 2).
std::pair<double, double> riemann_conditions(const SiegelPoint& omega);

// Residual of (Im gamma.Omega)^{-1} = (C conj(Omega) + D) (Im Omega)^{-1} t(C Omega + D).
double metric_invariance_residual(const SymplecticMatrix& gamma, const SiegelPoint& omega);

} // namespace siegel
