#pragma once

#include <utility>
#include <vector>

#include "siegel/foundation.hpp"

namespace siegel {

// 2n x 2n real M with tM J_n M = J_n, blocks M = [[A,B],[C,D]].
class SymplecticMatrix {
  public:
    SymplecticMatrix() = default;
    explicit SymplecticMatrix(RMat m, double eps = 1e-12);

    static SymplecticMatrix identity(int n);
    static SymplecticMatrix translation(const RMat& b);        // t_b
    static SymplecticMatrix dilation(const RMat& a);           // d_a = diag(ta, a^{-1})
    static SymplecticMatrix inversion(int n);                  // sigma_n
    static SymplecticMatrix embed_gl(const RMat& u);           // diag(u, tu^{-1})
    static RMat j_mat(int n);

    int degree() const { return static_cast<int>(m_.rows()) / 2; }
    const RMat& mat() const { return m_; }
    RMat a() const { return m_.topLeftCorner(degree(), degree()); }
    RMat b() const { return m_.topRightCorner(degree(), degree()); }
    RMat c() const { return m_.bottomLeftCorner(degree(), degree()); }
    RMat d() const { return m_.bottomRightCorner(degree(), degree()); }

    SymplecticMatrix inverse() const; // J^{-1} tM J, exact block form
    friend SymplecticMatrix operator*(const SymplecticMatrix& p, const SymplecticMatrix& q);

  private:
    RMat m_;
};

SiegelPoint act(const SymplecticMatrix& m, const SiegelPoint& omega);

// J(M,Omega) = det(C Omega + D); weight_num m gives J_m = J^{m/2} with the
// principal branch of the square root (sign information is the caller's
// problem for odd m; see the weil module for the branch-free checks).
cplx automorphic_factor(const SymplecticMatrix& m, const SiegelPoint& omega);
cplx automorphic_factor_halfweight(const SymplecticMatrix& m, const SiegelPoint& omega,
                                   int weight_num);

// Exact action over Q(i): Omega rational, M rational symplectic.
GaussMat act_exact(const RatMat& m, const GaussMat& omega);
GaussianRational automorphic_factor_exact(const RatMat& m, const GaussMat& omega);
bool is_symplectic_exact(const RatMat& m);

// Cross-ratio R(Omega0, Omega1) of two Siegel points and the geodesic distance
// rho = sqrt(sum_j log((1+sqrt r_j)/(1-sqrt r_j))^2).
CMat cross_ratio(const SiegelPoint& omega0, const SiegelPoint& omega1);
double geodesic_distance(const SiegelPoint& omega0, const SiegelPoint& omega1,
                         double eig_tol = 1e-9);

// Cayley transform of the generalized unit disk onto H_n and its inverse.
SiegelPoint cayley(const CMat& w);
CMat cayley_inv(const SiegelPoint& omega);
// M_* = T^{-1} M T acting on the disk; returns (P, Q) blocks.
std::pair<CMat, CMat> cayley_conjugate(const SymplecticMatrix& m);
CMat disk_act(const CMat& p, const CMat& q, const CMat& w);

// Lagrangian subspace of (R^{2n}, J_n-form), spanned by the rows of basis.
struct LagrangianSubspace {
    RMat basis; // n x 2n, rank n
    explicit LagrangianSubspace(RMat b, double eps = 1e-9);
    int degree() const { return static_cast<int>(basis.rows()); }
};

// Signature of Q(x1+x2+x3) = B(x1,x2)+B(x2,x3)+B(x3,x1) on L1 (+) L2 (+) L3.
int maslov_index(const LagrangianSubspace& l1, const LagrangianSubspace& l2,
                 const LagrangianSubspace& l3, double zero_cutoff = 1e-9);

// Minkowski reduction for n <= 2: returns (R, U) with R = U Y tU reduced,
// U in GL(n,Z).
std::pair<RMat, RMat> minkowski_reduce(const RMat& y);

struct SiegelReduction {
    SiegelPoint reduced;
    SymplecticMatrix gamma; // reduced = gamma . input
    int iterations = 0;
};
SiegelReduction siegel_reduce(const SiegelPoint& omega, int max_iter = 64);

// vol(F_n) = 2 prod_{k<=n} pi^{-k} Gamma(k) zeta(2k), exact: the returned
// scalar is rational * pi^{n(n+1)/2}.
SymbolicScalar siegel_volume(int n);

} // namespace siegel
