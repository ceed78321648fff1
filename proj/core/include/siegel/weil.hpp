#pragma once

#include <variant>
#include <vector>

#include "siegel/symplectic.hpp"
#include "siegel/theta.hpp"

namespace siegel {

// Numeric Gaussian state amp * e^{2 pi i sigma(c x Omega t(x))}.
struct GaussianState {
    cplx amp{1.0, 0.0};
    SiegelPoint omega;
    RMat c; // positive symmetric m x m
    int m() const { return static_cast<int>(c.rows()); }
    int n() const { return omega.degree(); }
    cplx value_at(const RMat& x) const;
};

// Exact counterpart carrying the SQUARED amplitude, which is branch-free:
// the sigma_n action multiplies amp^2 by (-i)^{mn} det(Omega/i)^{-m}.
struct ExactGaussianState {
    GaussianRational amp2{1};
    ExactSiegelPoint omega;
    RatMat c;
};

struct GenTranslation {
    RMat b;
};
struct GenDilation {
    RMat a;
};
struct GenInversion {};
using Generator = std::variant<GenTranslation, GenDilation, GenInversion>;
using GeneratorWord = std::vector<Generator>;

SymplecticMatrix generator_matrix(const Generator& g, int n);
SymplecticMatrix word_matrix(const GeneratorWord& w, int n);

// Closed-form generator actions (numeric amplitudes use principal branches):
//   t_b: Omega += b;  d_a: Omega -> ta Omega a, amp *= det(a)^{m/2};
//   sigma_n: Omega -> -Omega^{-1}, amp *= e^{-i pi mn/4} det(Omega/i)^{-m/2}.
GaussianState omega_apply(const GeneratorWord& word, const GaussianState& f);
ExactGaussianState omega_apply_exact(const GeneratorWord& word, const ExactGaussianState& f);

struct CovarianceCheck {
    bool omega_match = false;        // Omega parts agree exactly / to tolerance
    bool ratio_squared_one = false;  // r^2 = 1 exactly (exact arithmetic path)
    double abs_r_minus_1 = 0.0;      // numeric |r - 1| with principal branches
};

// Compares omega(word) F(Omega) with J_m(word, Omega)^{-1} F(word . Omega).
CovarianceCheck covariance_check(const GeneratorWord& word, const ExactSiegelPoint& omega, int m);

// alpha_c(M1, M2) = J*(M1, iI) J*(M2, iI) / J*(M1 M2, iI), |.| = 1.
cplx cocycle(const SymplecticMatrix& m1, const SymplecticMatrix& m2);
double cocycle_condition_residual(const SymplecticMatrix& m1, const SymplecticMatrix& m2,
                                  const SymplecticMatrix& m3);

// Theta lift Theta_M(Omega) = sum_xi e^{2 pi i sigma(M xi Omega t(xi))}.
LatticeSumResult theta_lift(const RMat& m_mat, const SiegelPoint& omega,
                            const TruncationPolicy& policy = {});

// Poisson summation residual |sum f(xi) - sum fhat(xi)| for the Gaussian
// state; fhat from the closed Gaussian-integral formula.
double poisson_residual(const GaussianState& f, const TruncationPolicy& policy = {});

struct NuRatioReport {
    cplx ratio;            // theta_S(gamma Omega) / (det(C Omega + D)^{m/2} theta_S(Omega))
    double modulus_dev;    // | |ratio| - 1 |
    double omega_spread;   // max pairwise deviation across sample points
};
NuRatioReport nu_ratio(const RMat& s, const SymplecticMatrix& gamma,
                       const std::vector<SiegelPoint>& samples,
                       const TruncationPolicy& policy = {});

// Numeric integral-operator form of omega_c(sigma_n) applied to F^{(c)}(Omega),
// m = n = 1: (2/i)^{1/2} c^{1/2} int f(y) e^{-4 pi i c y x} dy at sample x.
cplx weil_inversion_integral(double c, cplx omega_scalar, double x, double quad_tol = 1e-9);

} // namespace siegel
