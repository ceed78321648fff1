#pragma once

#include "siegel/states.hpp"
#include "siegel/symplectic.hpp"
#include "siegel/theta.hpp"

namespace siegel {

// Polynomials live on C^(m,n) with variables z_{kj} flattened k*n + j.

// <P, Q> = (P(d)Q)(0); on monomials <x^a, x^b> = a! delta_{ab} (bilinear).
GaussianRational pairing(const RatPoly& p, const RatPoly& q);

// apply H(d) to P
RatPoly apply_diff(const RatPoly& h, const RatPoly& p);

// the quadratic generators h_{ij}(Z) = sum_{k,l} t_{kl} z_{ki} z_{lj}, T = S^{-1}
std::vector<RatPoly> pluriharmonic_generators(const RatMat& s, int m, int n);

bool is_pluriharmonic(const RatPoly& p, const RatMat& s, int m, int n);

struct HarmonicDecomposition {
    RatPoly h;          // pluriharmonic part
    RatPoly ideal_part; // sum of f * h_{ij}
    std::vector<std::pair<RatPoly, RatPoly>> certificates; // (cofactor f, generator h_ij) pairs
};

// Degreewise orthogonal splitting P = h + ideal_part with <h, I> = 0, exact.
HarmonicDecomposition decompose(const RatPoly& p, const RatMat& s, int m, int n);

// dim of the degree-d homogeneous component of H(S) resp. the ideal I.
long dim_pluriharmonic(const RatMat& s, int m, int n, int degree);
long dim_ideal(const RatMat& s, int m, int n, int degree);
long dim_polynomials(int m, int n, int degree); // full homogeneous component

// theta_{S,P}[alpha,beta](Omega, Z) =
//   sum_{N in alpha + Z^(m,n)} e^{2 pi i sigma(t(N) beta)} P(N)
//     e^{pi i sigma(t(N) S N Omega + 2 t(N) Z)}.
LatticeSumResult theta_spherical(const RMat& s, const CPoly& p, const RMat& alpha,
                                 const RMat& beta, const SiegelPoint& omega, const CMat& z,
                                 const TruncationPolicy& policy = {});

// Residual of the weight-m/2 transformation law with P~(Z) = P(Z (C Omega + D)).
double transform_check_weight(const RMat& s, const RatPoly& p, const RMat& alpha,
                              const RMat& beta, const SymplecticMatrix& gamma,
                              const SiegelPoint& omega, const TruncationPolicy& policy = {});

// Freitag series sum_N P(S^{1/2} N) e^{pi i sigma(t(N) S N Omega)} for even
// unimodular S and P pluriharmonic of scalar type det^k.
LatticeSumResult freitag_theta(const RMat& s, const RatPoly& p, int det_weight,
                               const SiegelPoint& omega, const TruncationPolicy& policy = {});

// Check P(Z A) = det(A)^k P(Z) for a random rational diagonal A, exactly.
bool has_det_type(const RatPoly& p, int m, int n, int det_weight,
                  const std::vector<Rational>& diag);

} // namespace siegel
