#include "siegel/symplectic.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace siegel {

RMat SymplecticMatrix::j_mat(int n) {
    RMat j = RMat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = RMat::Identity(n, n);
    j.bottomLeftCorner(n, n) = -RMat::Identity(n, n);
    return j;
}

SymplecticMatrix::SymplecticMatrix(RMat m, double eps) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() % 2 != 0)
        throw structural_error("SymplecticMatrix: need even square matrix");
    int n = static_cast<int>(m_.rows()) / 2;
    RMat j = j_mat(n);
    double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
    double resid = (m_.transpose() * j * m_ - j).cwiseAbs().maxCoeff();
    if (resid > eps * scale * scale)
        throw structural_error("SymplecticMatrix: tM J M != J");
}

SymplecticMatrix SymplecticMatrix::identity(int n) {
    return SymplecticMatrix(RMat::Identity(2 * n, 2 * n));
}

SymplecticMatrix SymplecticMatrix::translation(const RMat& b) {
    if (!is_symmetric(b, 1e-12 * std::max(1.0, b.cwiseAbs().maxCoeff())))
        throw structural_error("translation: b must be symmetric");
    int n = static_cast<int>(b.rows());
    RMat m = RMat::Identity(2 * n, 2 * n);
    m.topRightCorner(n, n) = b;
    return SymplecticMatrix(m);
}

SymplecticMatrix SymplecticMatrix::dilation(const RMat& a) {
    int n = static_cast<int>(a.rows());
    Eigen::FullPivLU<RMat> lu(a);
    if (!lu.isInvertible()) throw structural_error("dilation: a must be invertible");
    RMat m = RMat::Zero(2 * n, 2 * n);
    m.topLeftCorner(n, n) = a.transpose();
    m.bottomRightCorner(n, n) = lu.inverse();
    return SymplecticMatrix(m, 1e-9);
}

SymplecticMatrix SymplecticMatrix::inversion(int n) {
    RMat m = RMat::Zero(2 * n, 2 * n);
    m.topRightCorner(n, n) = -RMat::Identity(n, n);
    m.bottomLeftCorner(n, n) = RMat::Identity(n, n);
    return SymplecticMatrix(m);
}

SymplecticMatrix SymplecticMatrix::embed_gl(const RMat& u) {
    // same as dilation(tu): diag(u, tu^{-1})
    return dilation(u.transpose());
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    int n = degree();
    RMat inv(2 * n, 2 * n);
    inv.topLeftCorner(n, n) = d().transpose();
    inv.topRightCorner(n, n) = -b().transpose();
    inv.bottomLeftCorner(n, n) = -c().transpose();
    inv.bottomRightCorner(n, n) = a().transpose();
    return SymplecticMatrix(inv, 1e-9);
}

SymplecticMatrix operator*(const SymplecticMatrix& p, const SymplecticMatrix& q) {
    return SymplecticMatrix(p.mat() * q.mat(), 1e-9);
}

SiegelPoint act(const SymplecticMatrix& m, const SiegelPoint& omega) {
    int n = omega.degree();
    if (m.degree() != n) throw structural_error("act: degree mismatch");
    CMat cd = m.c() * omega.omega + m.d().cast<cplx>();
    Eigen::FullPivLU<CMat> lu(cd);
    if (lu.rcond() < 1e-14) throw conditioning_error("act: C Omega + D numerically singular");
    CMat res = (m.a() * omega.omega + m.b().cast<cplx>()) * lu.inverse();
    res = 0.5 * (res + res.transpose().eval());
    return SiegelPoint(res, 1e-8);
}

cplx automorphic_factor(const SymplecticMatrix& m, const SiegelPoint& omega) {
    CMat cd = m.c() * omega.omega + m.d().cast<cplx>();
    return cd.determinant();
}

cplx automorphic_factor_halfweight(const SymplecticMatrix& m, const SiegelPoint& omega,
                                   int weight_num) {
    cplx j = automorphic_factor(m, omega);
    cplx root = std::sqrt(j); // principal branch
    cplx out(1.0, 0.0);
    int k = weight_num;
    bool invert = k < 0;
    if (invert) k = -k;
    for (int i = 0; i < k; ++i) out *= root;
    return invert ? cplx(1.0, 0.0) / out : out;
}

GaussMat act_exact(const RatMat& m, const GaussMat& omega) {
    int n = omega.rows();
    GaussMat a = to_gauss(m.block(0, 0, n, n)), b = to_gauss(m.block(0, n, n, n));
    GaussMat c = to_gauss(m.block(n, 0, n, n)), d = to_gauss(m.block(n, n, n, n));
    GaussMat cd = c * omega + d;
    return (a * omega + b) * cd.inverse();
}

GaussianRational automorphic_factor_exact(const RatMat& m, const GaussMat& omega) {
    int n = omega.rows();
    GaussMat c = to_gauss(m.block(n, 0, n, n)), d = to_gauss(m.block(n, n, n, n));
    return (c * omega + d).det();
}

bool is_symplectic_exact(const RatMat& m) {
    int two_n = m.rows();
    if (m.cols() != two_n || two_n % 2) return false;
    int n = two_n / 2;
    RatMat j(two_n, two_n);
    for (int i = 0; i < n; ++i) {
        j(i, n + i) = 1;
        j(n + i, i) = -1;
    }
    return (m.transpose() * j * m) == j;
}

CMat cross_ratio(const SiegelPoint& omega0, const SiegelPoint& omega1) {
    const CMat &o0 = omega0.omega, &o1 = omega1.omega;
    CMat o0b = o0.conjugate(), o1b = o1.conjugate();
    CMat t1 = (o0 - o1) * (o0 - o1b).inverse();
    CMat t2 = (o0b - o1b) * (o0b - o1).inverse();
    return t1 * t2;
}

double geodesic_distance(const SiegelPoint& omega0, const SiegelPoint& omega1, double eig_tol) {
    if (omega0.degree() != omega1.degree())
        throw structural_error("geodesic_distance: degree mismatch");
    if ((omega0.omega - omega1.omega).cwiseAbs().maxCoeff() == 0.0) return 0.0;
    CMat r = cross_ratio(omega0, omega1);
    Eigen::ComplexEigenSolver<CMat> es(r, false);
    if (es.info() != Eigen::Success) throw conditioning_error("geodesic_distance: eigensolver");
    double sum = 0.0;
    for (int i = 0; i < r.rows(); ++i) {
        cplx ev = es.eigenvalues()(i);
        if (std::abs(ev.imag()) > eig_tol || ev.real() < -eig_tol || ev.real() >= 1.0 + eig_tol)
            throw conditioning_error("geodesic_distance: cross-ratio eigenvalue outside [0,1)");
        double rj = std::min(std::max(ev.real(), 0.0), 1.0 - 1e-16);
        double srj = std::sqrt(rj);
        double term = std::log((1.0 + srj) / (1.0 - srj));
        sum += term * term;
    }
    return std::sqrt(sum);
}

SiegelPoint cayley(const CMat& w) {
    int n = static_cast<int>(w.rows());
    if (!is_symmetric(w, 1e-10)) throw structural_error("cayley: W must be symmetric");
    CMat id = CMat::Identity(n, n);
    RMat gram = (id - w * w.conjugate()).real();
    if (!is_positive_definite(0.5 * (gram + gram.transpose())))
        throw domain_error("cayley: I - W conj(W) not positive definite");
    Eigen::FullPivLU<CMat> lu(id - w);
    if (!lu.isInvertible()) throw domain_error("cayley: I - W singular");
    CMat om = cplx(0.0, 1.0) * (id + w) * lu.inverse();
    om = 0.5 * (om + om.transpose().eval());
    return SiegelPoint(om, 1e-8);
}

CMat cayley_inv(const SiegelPoint& omega) {
    int n = omega.degree();
    CMat id = CMat::Identity(n, n);
    CMat oi = omega.omega - cplx(0.0, 1.0) * id;
    CMat op = omega.omega + cplx(0.0, 1.0) * id;
    return oi * op.inverse();
}

std::pair<CMat, CMat> cayley_conjugate(const SymplecticMatrix& m) {
    cplx i(0.0, 1.0);
    CMat p = 0.5 * ((m.a() + m.d()).cast<cplx>() + i * (m.b() - m.c()).cast<cplx>());
    CMat q = 0.5 * ((m.a() - m.d()).cast<cplx>() - i * (m.b() + m.c()).cast<cplx>());
    return {p, q};
}

CMat disk_act(const CMat& p, const CMat& q, const CMat& w) {
    CMat denom = q.conjugate() * w + p.conjugate();
    return (p * w + q) * denom.inverse();
}

LagrangianSubspace::LagrangianSubspace(RMat b, double eps) : basis(std::move(b)) {
    int n = static_cast<int>(basis.rows());
    if (basis.cols() != 2 * n) throw structural_error("LagrangianSubspace: basis must be n x 2n");
    Eigen::FullPivLU<RMat> lu(basis);
    if (lu.rank() != n) throw domain_error("LagrangianSubspace: basis rank deficient");
    RMat j = SymplecticMatrix::j_mat(n);
    double scale = std::max(1.0, basis.cwiseAbs().maxCoeff());
    if ((basis * j * basis.transpose()).cwiseAbs().maxCoeff() > eps * scale * scale)
        throw domain_error("LagrangianSubspace: basis not isotropic");
}

int maslov_index(const LagrangianSubspace& l1, const LagrangianSubspace& l2,
                 const LagrangianSubspace& l3, double zero_cutoff) {
    int n = l1.degree();
    if (l2.degree() != n || l3.degree() != n) throw structural_error("maslov_index: degree mismatch");
    RMat j = SymplecticMatrix::j_mat(n);
    // B(x,y) = x J ty for row vectors; Gram of the symmetrized triple form
    auto pair_block = [&](const RMat& u, const RMat& v) -> RMat { return u * j * v.transpose(); };
    RMat g = RMat::Zero(3 * n, 3 * n);
    RMat b12 = pair_block(l1.basis, l2.basis);
    RMat b23 = pair_block(l2.basis, l3.basis);
    RMat b31 = pair_block(l3.basis, l1.basis);
    // Q(x1+x2+x3) = B(x1,x2)+B(x2,x3)+B(x3,x1); symmetrized Gram has halves
    g.block(0, n, n, n) = 0.5 * b12;
    g.block(n, 0, n, n) = 0.5 * b12.transpose();
    g.block(n, 2 * n, n, n) = 0.5 * b23;
    g.block(2 * n, n, n, n) = 0.5 * b23.transpose();
    g.block(2 * n, 0, n, n) = 0.5 * b31;
    g.block(0, 2 * n, n, n) = 0.5 * b31.transpose();
    Eigen::SelfAdjointEigenSolver<RMat> es(g);
    if (es.info() != Eigen::Success) throw conditioning_error("maslov_index: eigensolver failed");
    double cutoff = zero_cutoff * std::max(1.0, g.cwiseAbs().maxCoeff());
    int sig = 0;
    for (int i = 0; i < 3 * n; ++i) {
        double ev = es.eigenvalues()(i);
        if (ev > cutoff)
            ++sig;
        else if (ev < -cutoff)
            --sig;
    }
    return sig;
}

std::pair<RMat, RMat> minkowski_reduce(const RMat& y) {
    int n = static_cast<int>(y.rows());
    if (n == 1) {
        if (y(0, 0) <= 0.0) throw domain_error("minkowski_reduce: not positive definite");
        return {y, RMat::Identity(1, 1)};
    }
    if (n != 2) throw structural_error("minkowski_reduce: only n <= 2 supported");
    if (!is_positive_definite(y)) throw domain_error("minkowski_reduce: not positive definite");
    // Lagrange-Gauss reduction of the binary form, tracking U with R = U Y tU.
    RMat r = y;
    RMat u = RMat::Identity(2, 2);
    auto apply = [&](const RMat& t) {
        u = t * u;
        r = t * r * t.transpose();
    };
    bool done = false;
    for (int guard = 0; guard < 256 && !done; ++guard) {
        if (std::abs(2.0 * r(0, 1)) > r(0, 0) * (1.0 + 1e-14)) {
            RMat t = RMat::Identity(2, 2);
            t(1, 0) = -std::round(r(0, 1) / r(0, 0));
            apply(t);
            continue;
        }
        if (r(0, 0) > r(1, 1) * (1.0 + 1e-14)) {
            RMat t(2, 2);
            t << 0, 1, 1, 0; // swap (det -1, still GL(2,Z))
            apply(t);
            continue;
        }
        done = true;
    }
    if (!done) throw convergence_error("minkowski_reduce: did not settle");
    if (r(0, 1) < 0.0) {
        RMat t(2, 2);
        t << 1, 0, 0, -1;
        u = t * u;
        r = t * r * t.transpose();
    }
    return {r, u};
}

SiegelReduction siegel_reduce(const SiegelPoint& omega, int max_iter) {
    int n = omega.degree();
    if (n > 2) throw structural_error("siegel_reduce: only n <= 2 supported");
    SiegelReduction out;
    out.reduced = omega;
    out.gamma = SymplecticMatrix::identity(n);
    for (int it = 0; it < max_iter; ++it) {
        out.iterations = it;
        // Minkowski-reduce the imaginary part via u in GL(n,Z)
        auto [ry, u] = minkowski_reduce(out.reduced.y());
        if ((u - RMat::Identity(n, n)).cwiseAbs().maxCoeff() > 0.0) {
            // Y -> u Y tu corresponds to Omega -> u Omega tu = d_{tu} action
            SymplecticMatrix du = SymplecticMatrix::embed_gl(u);
            out.reduced = act(du, out.reduced);
            out.gamma = du * out.gamma;
        }
        // integer translation of the real part
        RMat xr = out.reduced.x();
        RMat b = -xr.array().round().matrix();
        b = 0.5 * (b + b.transpose().eval());
        if (b.cwiseAbs().maxCoeff() > 0.0) {
            SymplecticMatrix tb = SymplecticMatrix::translation(b);
            out.reduced = act(tb, out.reduced);
            out.gamma = tb * out.gamma;
        }
        // height maximization against the inversion candidate
        SymplecticMatrix sn = SymplecticMatrix::inversion(n);
        SiegelPoint flipped = act(sn, out.reduced);
        double det_now = out.reduced.y().determinant();
        double det_flip = flipped.y().determinant();
        if (det_flip > det_now * (1.0 + 1e-12)) {
            out.reduced = flipped;
            out.gamma = sn * out.gamma;
            continue;
        }
        return out;
    }
    throw convergence_error("siegel_reduce: iteration budget exhausted");
}

SymbolicScalar siegel_volume(int n) {
    if (n < 1) throw structural_error("siegel_volume: n >= 1 required");
    // vol = 2 prod_k pi^{-k} (k-1)! zeta(2k), with zeta(2k) = z_k pi^{2k}
    Rational rat(2);
    long pi_pow = 0;
    for (int k = 1; k <= n; ++k) {
        rat *= Rational(factorial(static_cast<unsigned long>(k - 1)));
        rat *= zeta_even_rational_part(static_cast<unsigned>(k));
        pi_pow += k; // -k from the prefactor, +2k from zeta
    }
    return SymbolicScalar::pi_half_pow(static_cast<int>(2 * pi_pow), GaussianRational(rat));
}

} // namespace siegel
