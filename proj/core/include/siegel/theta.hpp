#pragma once

#include <functional>
#include <vector>

#include "siegel/exact_mat.hpp"
#include "siegel/foundation.hpp"
#include "siegel/heisenberg.hpp"
#include "siegel/multiindex.hpp"

namespace siegel {

struct TruncationPolicy {
    double target_tail = 1e-12;
    int max_radius = 64;
    int threads = 1;
};

struct LatticeSumResult {
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;
    int radius = 0;
    long long terms = 0;
};

// Decay data for |term(N)| <= poly_c * max(1,|N|)^poly_deg
//                            * exp(-pi lambda t^2 + pi lin t), t = |N+A|_F.
struct GaussianDecay {
    double lambda = 1.0;   // lambda_min(S) lambda_min(Y)
    double lin = 0.0;      // 2 |S Im W|_F
    double shift = 0.0;    // |A|_F
    double poly_c = 1.0;
    int poly_deg = 0;
};

// Certified tail of the sup-norm shells r > R.
double box_tail_bound(int mn, int radius, const GaussianDecay& decay);

// Sum term(N) over N in Z^(m,n) with |N|_inf <= R, R chosen so the tail
// certificate meets policy.target_tail.  Deterministic shell order; the
// within-shell order is a fixed odometer scan.
LatticeSumResult box_lattice_sum(int m, int n, const TruncationPolicy& policy,
                                 const GaussianDecay& decay,
                                 const std::function<cplx(const std::vector<long>&)>& term);

// Fincke-Pohst enumeration of {x in Z^dim : (x+center)^T G (x+center) <= level}
// for positive definite G; used for high-dimensional quadratic-form sums
// (E8) where sup-norm boxes are hopeless.  The tail certificate is a
// volume-plus-covering count against
//   |term(x)| <= amp * poly_c * max(1, sqrt(q/lambda_min))^{poly_deg} * exp(-pi q).
LatticeSumResult ellipsoid_lattice_sum(const RMat& gram, const RVec& center,
                                       const TruncationPolicy& policy, double amp,
                                       const std::function<cplx(const std::vector<long>&)>& term,
                                       double poly_c = 1.0, int poly_deg = 0);

// ---------------------------------------------------------------------------

struct ThetaSpec {
    RMat s;            // positive definite symmetric m x m
    RMat a, b;         // m x n real characteristics
    TruncationPolicy policy;

    ThetaSpec(RMat s_, RMat a_, RMat b_, TruncationPolicy p = {});
    int m() const { return static_cast<int>(s.rows()); }
    int n() const { return static_cast<int>(a.cols()); }
};

// theta^{(S)}[A,B](Omega, W) = sum_N e^{pi i sigma(S((N+A) Omega t(N+A) + 2(W+B) t(N+A)))}
LatticeSumResult theta_char(const ThetaSpec& spec, const SiegelPoint& omega, const CMat& w);

// |theta(W + xi Omega + eta) - factor * theta(W)| / |theta(W)| for the
// integral quasi-periodicity law of theta with characteristics.
double theta_quasiperiodicity_residual(const ThetaSpec& spec, const SiegelPoint& omega,
                                       const CMat& w, const Eigen::MatrixXi& xi,
                                       const Eigen::MatrixXi& eta);

// theta_S(Omega) = sum_{xi in Z^(m,n)} e^{pi i sigma(S xi Omega t(xi))}.
LatticeSumResult theta_series(const RMat& s, const SiegelPoint& omega,
                              const TruncationPolicy& policy = {});

struct IntCharacteristic {
    std::vector<int> a, b; // entries in {0,1}
    bool even() const {
        int s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s % 2 == 0;
    }
};

// Thetanullwert: sum_{xi in Z^n} e^{pi i (t(xi + a/2) Omega (xi + a/2) + t(b) xi)}.
LatticeSumResult theta_null(const SiegelPoint& omega, const IntCharacteristic& ch,
                            const TruncationPolicy& policy = {});

std::vector<IntCharacteristic> all_characteristics(int n);
std::vector<IntCharacteristic> even_characteristics(int n);

// gamma <> (a, b) = [[D, -C], [-B, A]] (a; b) + ((C tD)_0; (A tB)_0) mod 2.
IntCharacteristic char_action(const Eigen::MatrixXi& gamma, const IntCharacteristic& ch);

// Delta^(n) = prod over even characteristics of theta_null^{k_n}, k_1 = 8, k_2 = 2.
LatticeSumResult delta_n(const SiegelPoint& omega, const TruncationPolicy& policy = {});

// Exact check of the second-degree-character law: returns the exponent
// defect (mod 2) of psi(l1+l2) = e^{pi i A(l1,l2)} psi(l1) psi(l2) for
// psi = psi_{S,Omega} * chi_{S,Omega,A,B}; zero iff the law holds.
Rational second_degree_character_defect(const RatMat& s_int, const RatMat& a_char,
                                        const RatMat& b_char, const Eigen::MatrixXi& xi1,
                                        const Eigen::MatrixXi& eta1, const Eigen::MatrixXi& xi2,
                                        const Eigen::MatrixXi& eta2);

// The Gamma_G-invariant family of Eq-(10.1) type:
//   e^{2 pi i sigma(M(kappa - lambda t(mu)))} sum_N (lambda+N+A)^J
//     e^{2 pi i sigma(M((lam+N+A) Omega t(lam+N+A) + 2 (lam+N+A) t(mu)))}.
LatticeSumResult lattice_rep_theta(const RMat& m_mat, const MultiIndex& j, const RMat& a_alpha,
                                   const SiegelPoint& omega, const HeisenbergElement& g,
                                   const TruncationPolicy& policy = {});

// E8 Gram matrix (Bourbaki ordering), even unimodular of rank 8.
RMat e8_gram();
// Number of xi in Z^8 with xi^T S xi = 2k, by exact enumeration.
long e8_rep_count(const RMat& s, int two_k);

// Smallest positive integer q with q S^{-1} even (S even nonsingular).
long level_of_even(const RatMat& s);

} // namespace siegel
