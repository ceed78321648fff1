#pragma once

#include <functional>

#include "siegel/foundation.hpp"
#include "siegel/multiindex.hpp"

namespace siegel {

// Phi_{M,J}(W) = 2^{n/2} (det M)^{n/2} (J!)^{-1/2} ((2 pi M)^{1/2} W)^J.
cplx fock_basis_eval(const RMat& m_mat, const MultiIndex& j, const CMat& w);

// Closed form of sum_J Phi_{M,J}(W) Phi_{M,J}(conj W'):
//   2^n (det M)^n e^{2 pi sigma(M W t(conj W'))}.
cplx fock_kernel_closed(const RMat& m_mat, const CMat& w, const CMat& wp);
// Partial sum over |J| <= radius.
cplx fock_kernel_truncated(const RMat& m_mat, const CMat& w, const CMat& wp, unsigned radius);

// Bargmann kernel k_M(u, w) = e^{2 pi sigma(M(-u t(u) - w t(w)/2 + 2 u t(w)))}.
cplx bargmann_kernel(const RMat& m_mat, const RMat& u, const CMat& w);

// (I_M f)(W) = int k_M(xi, W) f(xi) dxi, m = n = 1, adaptive quadrature
// with interval doubling until successive refinements agree.
cplx bargmann_transform(double m_scalar, const std::function<cplx(double)>& f, cplx w,
                        double quad_tol = 1e-10);

// Quadrature cross-checks (m = n = 1):
//   int k_M(u, W) conj(k_M(u, W')) du  (the Bargmann kernel pairing)
cplx bargmann_kernel_pairing(double m_scalar, cplx w, cplx wp, double quad_tol = 1e-10);
//   int Phi_J conj(Phi_K) dmu_M over C, dmu_M = e^{-2 pi M |W|^2} dU dV.
cplx fock_inner_quadrature(double m_scalar, unsigned j, unsigned k, int grid = 160,
                           double radius = 4.0);

// The M-adapted orthonormal Hermite functions (m = n = 1):
// h^{(M)}_j(u) = M^{1/4} h_j(M^{1/2} u).
double hermite_fn_scaled(double m_scalar, unsigned j, double u);

// The h_j of the k_M Taylor expansion k_M(u, W) = sum_j h_j(u) Phi_{M,j}(W),
// m = n = 1.  These satisfy I_M conj(h_j) = kappa_M Phi_{M,j} with the
// j-independent constant kappa_M below; they are kappa_M^{1/2} times the
// orthonormal family up to the sign (-1)^j.
double taylor_hermite(double m_scalar, unsigned j, double u);

// kappa_M = ||h~_j||^2, J-independent, equal to 1/(4 M^{3/2}) for m = n = 1.
double bargmann_image_constant(double m_scalar);

} // namespace siegel
