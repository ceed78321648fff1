#include "siegel/foundation.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace siegel {

void require_finite(const CMat& m, const char* where) {
    if (!m.allFinite()) throw conditioning_error(std::string(where) + ": non-finite entries");
}

bool is_symmetric(const RMat& m, double eps) {
    if (m.rows() != m.cols()) return false;
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= eps;
}

bool is_symmetric(const CMat& m, double eps) {
    if (m.rows() != m.cols()) return false;
    if (m.rows() == 0) return true;
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= eps;
}

bool is_positive_definite(const RMat& m) {
    if (m.rows() != m.cols()) throw structural_error("is_positive_definite: non-square input");
    if (!is_symmetric(m, 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())))
        throw structural_error("is_positive_definite: asymmetric input");
    Eigen::LDLT<RMat> ldlt(m);
    if (ldlt.info() != Eigen::Success) return false;
    if (!ldlt.isPositive()) return false;
    return ldlt.vectorD().minCoeff() > 0.0;
}

SiegelPoint::SiegelPoint(CMat om, double sym_eps) : omega(std::move(om)) {
    if (omega.rows() != omega.cols()) throw structural_error("SiegelPoint: non-square");
    double scale = std::max(1.0, omega.cwiseAbs().maxCoeff());
    if (!is_symmetric(omega, sym_eps * scale)) throw structural_error("SiegelPoint: not symmetric");
    omega = 0.5 * (omega + omega.transpose().eval()); // exact symmetrization
    if (!is_positive_definite(omega.imag()))
        throw domain_error("SiegelPoint: Im not positive definite");
}

ExactSiegelPoint::ExactSiegelPoint(GaussMat om) : omega(std::move(om)) {
    if (omega.rows() != omega.cols() || !omega.is_symmetric())
        throw structural_error("ExactSiegelPoint: not symmetric");
    if (!rat_positive_definite(imag_part(omega)))
        throw domain_error("ExactSiegelPoint: Im not positive definite");
}

SiegelPoint ExactSiegelPoint::to_numeric() const { return SiegelPoint(to_cmat(omega)); }

bool rat_positive_definite(const RatMat& m) {
    if (m.rows() != m.cols() || !m.is_symmetric())
        throw structural_error("rat_positive_definite: not symmetric");
    // leading principal minors via elimination
    RatMat a = m;
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        if (!(a(c, c) > 0)) return false;
        Rational inv = 1 / a(c, c);
        for (int r = c + 1; r < n; ++r) {
            Rational f = a(r, c) * inv;
            if (f == 0) continue;
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return true;
}

RatMat rat_kron(const RatMat& a, const RatMat& b) {
    RatMat k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return k;
}

cplx principal_halfplane_sqrt_det(const SiegelPoint& omega) {
    return principal_halfplane_sqrt_det(omega.omega);
}

cplx principal_halfplane_sqrt_det(const CMat& omega, double check_eps) {
    // Eigenvalues of Omega/i lie in the open right half-plane when Im Omega > 0,
    // so the principal log of each is unambiguous.
    CMat hp = omega / cplx(0.0, 1.0);
    Eigen::ComplexEigenSolver<CMat> es(hp, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw conditioning_error("principal_halfplane_sqrt_det: eigensolver failed");
    cplx half_log_sum(0.0, 0.0);
    for (int i = 0; i < hp.rows(); ++i) {
        cplx ev = es.eigenvalues()(i);
        if (ev.real() <= check_eps * std::max(1.0, std::abs(ev)))
            throw domain_error("principal_halfplane_sqrt_det: eigenvalue off the right half-plane");
        half_log_sum += 0.5 * std::log(ev);
    }
    return std::exp(half_log_sum);
}

RMat sym_sqrt(const RMat& spd) {
    Eigen::SelfAdjointEigenSolver<RMat> es(spd);
    if (es.info() != Eigen::Success) throw conditioning_error("sym_sqrt: eigensolver failed");
    if (es.eigenvalues().minCoeff() <= 0.0) throw domain_error("sym_sqrt: matrix not SPD");
    return es.operatorSqrt();
}

double frob_norm(const CMat& m) { return m.norm(); }

CMat to_cmat(const GaussMat& m) {
    CMat c(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).to_complex();
    return c;
}

RMat to_rmat(const RatMat& m) {
    RMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
    return r;
}

RatMat rat_from_rmat(const RMat& m) {
    RatMat r(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = rational_from_double(m(i, j));
    return r;
}

} // namespace siegel
