#include "siegel/fock.hpp"

#include <cmath>

#include "siegel/hermite.hpp"

namespace siegel {

cplx fock_basis_eval(const RMat& m_mat, const MultiIndex& j, const CMat& w) {
    const int m = static_cast<int>(m_mat.rows());
    const int n = static_cast<int>(w.cols());
    if (w.rows() != m || j.m != m || j.n != n) throw structural_error("fock_basis_eval: shapes");
    RMat root = sym_sqrt(2.0 * M_PI * m_mat);
    CMat arg = root.cast<cplx>() * w;
    cplx mono(1.0, 0.0);
    for (int k = 0; k < m; ++k)
        for (int a = 0; a < n; ++a)
            for (unsigned t = 0; t < j(k, a); ++t) mono *= arg(k, a);
    double pref = std::pow(2.0, 0.5 * n) * std::pow(m_mat.determinant(), 0.5 * n);
    double fac = std::sqrt(j.factorial_prod().get_d());
    return pref * mono / fac;
}

cplx fock_kernel_closed(const RMat& m_mat, const CMat& w, const CMat& wp) {
    int n = static_cast<int>(w.cols());
    cplx e = (m_mat.cast<cplx>() * w * wp.conjugate().transpose()).trace();
    double pref = std::pow(2.0, n) * std::pow(m_mat.determinant(), n);
    return pref * std::exp(2.0 * M_PI * e);
}

cplx fock_kernel_truncated(const RMat& m_mat, const CMat& w, const CMat& wp, unsigned radius) {
    int m = static_cast<int>(m_mat.rows());
    int n = static_cast<int>(w.cols());
    cplx s(0.0, 0.0);
    for (const auto& j : multiindex_iter(m, n, radius))
        s += fock_basis_eval(m_mat, j, w) * fock_basis_eval(m_mat, j, wp.conjugate());
    return s;
}

cplx bargmann_kernel(const RMat& m_mat, const RMat& u, const CMat& w) {
    CMat uc = u.cast<cplx>();
    cplx e = (m_mat.cast<cplx>() *
              (-uc * uc.transpose() - 0.5 * w * w.transpose() + 2.0 * uc * w.transpose()))
                 .trace();
    return std::exp(2.0 * M_PI * e);
}

namespace {

// adaptive midpoint-refined Simpson on [-r, r], doubling nodes until stable
cplx integrate_line(const std::function<cplx(double)>& f, double r, double tol, int max_doubling = 14) {
    cplx prev(0.0, 0.0);
    int n = 64;
    for (int d = 0; d < max_doubling; ++d, n *= 2) {
        double h = 2.0 * r / n;
        cplx acc = 0.5 * (f(-r) + f(r));
        for (int i = 1; i < n; ++i) acc += f(-r + i * h);
        acc *= h;
        if (d > 2 && std::abs(acc - prev) < tol) return acc;
        prev = acc;
    }
    throw convergence_error("integrate_line: quadrature did not settle");
}

} // namespace

cplx bargmann_transform(double m_scalar, const std::function<cplx(double)>& f, cplx w,
                        double quad_tol) {
    if (m_scalar <= 0.0) throw domain_error("bargmann_transform: M must be positive");
    RMat mm(1, 1);
    mm(0, 0) = m_scalar;
    auto integrand = [&](double u) -> cplx {
        RMat um(1, 1);
        um(0, 0) = u;
        CMat wm(1, 1);
        wm(0, 0) = w;
        return bargmann_kernel(mm, um, wm) * f(u);
    };
    // kernel decays like e^{-2 pi M u^2}; a radius proportional to 1/sqrt(M)
    // with a margin for the e^{4 pi M u Re w} drift is plenty
    double r = (6.0 + 2.0 * std::abs(w)) / std::sqrt(std::min(1.0, m_scalar));
    return integrate_line(integrand, r, quad_tol);
}

cplx bargmann_kernel_pairing(double m_scalar, cplx w, cplx wp, double quad_tol) {
    RMat mm(1, 1);
    mm(0, 0) = m_scalar;
    CMat wm(1, 1), wpm(1, 1);
    wm(0, 0) = w;
    wpm(0, 0) = wp;
    auto integrand = [&](double u) -> cplx {
        RMat um(1, 1);
        um(0, 0) = u;
        return bargmann_kernel(mm, um, wm) * std::conj(bargmann_kernel(mm, um, wpm));
    };
    double r = (6.0 + 2.0 * std::max(std::abs(w), std::abs(wp))) / std::sqrt(std::min(1.0, m_scalar));
    return integrate_line(integrand, r, quad_tol);
}

double hermite_fn_scaled(double m_scalar, unsigned j, double u) {
    static thread_local std::map<unsigned, CPoly> cache;
    auto it = cache.find(j);
    if (it == cache.end()) {
        MultiIndex jj(1, 1);
        jj(0, 0) = j;
        it = cache.emplace(j, to_cpoly(hermite_p(jj))).first;
    }
    double x = std::sqrt(m_scalar) * u;
    cplx pv = it->second.eval({cplx(x, 0.0)});
    return std::pow(m_scalar, 0.25) * pv.real() * std::exp(-2.0 * M_PI * x * x);
}

cplx fock_inner_quadrature(double m_scalar, unsigned j, unsigned k, int grid, double radius) {
    RMat mm(1, 1);
    mm(0, 0) = m_scalar;
    MultiIndex jj(1, 1), kk(1, 1);
    jj(0, 0) = j;
    kk(0, 0) = k;
    double h = 2.0 * radius / grid;
    cplx acc(0.0, 0.0);
    for (int iu = 0; iu < grid; ++iu)
        for (int iv = 0; iv < grid; ++iv) {
            double u = -radius + (iu + 0.5) * h;
            double v = -radius + (iv + 0.5) * h;
            CMat w(1, 1);
            w(0, 0) = cplx(u, v);
            cplx pj = fock_basis_eval(mm, jj, w);
            cplx pk = fock_basis_eval(mm, kk, w);
            acc += pj * std::conj(pk) * std::exp(-2.0 * M_PI * m_scalar * (u * u + v * v));
        }
    return acc * h * h;
}

double taylor_hermite(double m_scalar, unsigned j, double u) {
    // k_M(u, W) = e^{-2 pi M u^2} e^{4 pi M u W - pi M W^2} and the W-series
    // G_0 = 1, G_j = (4 pi M u G_{j-1} - 2 pi M G_{j-2}) / j gives
    // h_j(u) = e^{-2 pi M u^2} G_j(u) sqrt(j!) (2 pi M)^{-j/2} / sqrt(2 M).
    double gm2 = 0.0, gm1 = 1.0;
    for (unsigned t = 1; t <= j; ++t) {
        double g = (4.0 * M_PI * m_scalar * u * gm1 - 2.0 * M_PI * m_scalar * gm2) / t;
        gm2 = gm1;
        gm1 = g;
    }
    double fac = std::sqrt(factorial(j).get_d()) * std::pow(2.0 * M_PI * m_scalar, -0.5 * j);
    return std::exp(-2.0 * M_PI * m_scalar * u * u) * gm1 * fac / std::sqrt(2.0 * m_scalar);
}

double bargmann_image_constant(double m_scalar) { return 0.25 * std::pow(m_scalar, -1.5); }

} // namespace siegel
