#include "siegel/weil.hpp"

#include <cmath>

namespace siegel {

cplx GaussianState::value_at(const RMat& x) const {
    CMat xc = x.cast<cplx>();
    cplx e = (c.cast<cplx>() * xc * omega.omega * xc.transpose()).trace();
    return amp * std::exp(cplx(0.0, 2.0 * M_PI) * e);
}

SymplecticMatrix generator_matrix(const Generator& g, int n) {
    if (std::holds_alternative<GenTranslation>(g))
        return SymplecticMatrix::translation(std::get<GenTranslation>(g).b);
    if (std::holds_alternative<GenDilation>(g))
        return SymplecticMatrix::dilation(std::get<GenDilation>(g).a);
    return SymplecticMatrix::inversion(n);
}

SymplecticMatrix word_matrix(const GeneratorWord& w, int n) {
    SymplecticMatrix m = SymplecticMatrix::identity(n);
    for (const auto& g : w) m = m * generator_matrix(g, n);
    return m;
}

GaussianState omega_apply(const GeneratorWord& word, const GaussianState& f) {
    GaussianState cur = f;
    const int m = f.m(), n = f.n();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (std::holds_alternative<GenTranslation>(*it)) {
            cur.omega = SiegelPoint(cur.omega.omega + std::get<GenTranslation>(*it).b.cast<cplx>());
        } else if (std::holds_alternative<GenDilation>(*it)) {
            const RMat& a = std::get<GenDilation>(*it).a;
            cur.omega = SiegelPoint(a.transpose().cast<cplx>() * cur.omega.omega * a.cast<cplx>(),
                                    1e-8);
            cplx det_a(a.determinant(), 0.0);
            cur.amp *= std::pow(std::sqrt(det_a), m);
        } else {
            cplx psd = principal_halfplane_sqrt_det(cur.omega);
            cur.amp *= std::exp(cplx(0.0, -M_PI * m * n / 4.0)) * std::pow(psd, -m);
            CMat inv = cur.omega.omega.inverse();
            cur.omega = SiegelPoint((-inv).eval(), 1e-8);
        }
    }
    return cur;
}

ExactGaussianState omega_apply_exact(const GeneratorWord& word, const ExactGaussianState& f) {
    ExactGaussianState cur = f;
    const int m = cur.c.rows();
    const int n = cur.omega.degree();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (std::holds_alternative<GenTranslation>(*it)) {
            GaussMat b = to_gauss(rat_from_rmat(std::get<GenTranslation>(*it).b));
            cur.omega = ExactSiegelPoint(cur.omega.omega + b);
        } else if (std::holds_alternative<GenDilation>(*it)) {
            RatMat a = rat_from_rmat(std::get<GenDilation>(*it).a);
            GaussMat ag = to_gauss(a);
            cur.omega = ExactSiegelPoint(ag.transpose() * cur.omega.omega * ag);
            cur.amp2 *= gauss_pow(GaussianRational(a.det()), m);
        } else {
            // amp^2 *= (-i)^{mn} det(Omega/i)^{-m}
            GaussMat hp = cur.omega.omega;
            GaussianRational minus_i = -GaussianRational::i();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) hp(i, j) = hp(i, j) * minus_i;
            GaussianRational det_hp = hp.det();
            cur.amp2 *= i_pow(-static_cast<long>(m) * n) * gauss_pow(det_hp, -m);
            cur.omega = ExactSiegelPoint(-(cur.omega.omega.inverse()));
        }
    }
    return cur;
}

CovarianceCheck covariance_check(const GeneratorWord& word, const ExactSiegelPoint& omega, int m) {
    const int n = omega.degree();
    CovarianceCheck out;

    ExactGaussianState f0;
    f0.amp2 = GaussianRational(1);
    f0.omega = omega;
    f0.c = RatMat::identity(m);
    ExactGaussianState lhs = omega_apply_exact(word, f0);

    SymplecticMatrix mw = word_matrix(word, n);
    RatMat mr = rat_from_rmat(mw.mat());
    if (!is_symplectic_exact(mr))
        throw structural_error("covariance_check: word matrix not exactly symplectic");
    GaussMat rhs_omega = act_exact(mr, omega.omega);
    out.omega_match = (lhs.omega.omega == rhs_omega);

    GaussianRational jfac = automorphic_factor_exact(mr, omega.omega); // det(C Omega + D)
    GaussianRational rhs_amp2 = gauss_pow(jfac, -m);                   // J_m^{-2}
    GaussianRational ratio2 = lhs.amp2 / rhs_amp2;
    out.ratio_squared_one = (ratio2 == GaussianRational(1));

    // numeric branch-sensitive |r - 1|
    GaussianState fn;
    fn.amp = cplx(1.0, 0.0);
    fn.omega = omega.to_numeric();
    fn.c = RMat::Identity(m, m);
    GaussianState ln = omega_apply(word, fn);
    cplx jm = automorphic_factor_halfweight(mw, omega.to_numeric(), m);
    cplx r = ln.amp * jm; // lhs.amp / (jm^{-1})
    out.abs_r_minus_1 = std::abs(r - cplx(1.0, 0.0));
    return out;
}

cplx cocycle(const SymplecticMatrix& m1, const SymplecticMatrix& m2) {
    int n = m1.degree();
    SiegelPoint i_pt(CMat(cplx(0.0, 1.0) * CMat::Identity(n, n)));
    auto jstar = [&](const SymplecticMatrix& m) -> cplx {
        cplx j = automorphic_factor(m, i_pt);
        cplx root = std::sqrt(j);
        return root / std::abs(root);
    };
    return jstar(m1) * jstar(m2) / jstar(m1 * m2);
}

double cocycle_condition_residual(const SymplecticMatrix& m1, const SymplecticMatrix& m2,
                                  const SymplecticMatrix& m3) {
    cplx lhs = cocycle(m1 * m2, m3) * cocycle(m1, m2);
    cplx rhs = cocycle(m1, m2 * m3) * cocycle(m2, m3);
    return std::abs(lhs - rhs);
}

LatticeSumResult theta_lift(const RMat& m_mat, const SiegelPoint& omega,
                            const TruncationPolicy& policy) {
    return theta_series(2.0 * m_mat, omega, policy);
}

double poisson_residual(const GaussianState& f, const TruncationPolicy& policy) {
    const int m = f.m(), n = f.n();
    auto sum_state = [&](const GaussianState& g) -> cplx {
        auto term = [&](const std::vector<long>& nv) -> cplx {
            RMat x(m, n);
            for (int k = 0; k < m; ++k)
                for (int a = 0; a < n; ++a) x(k, a) = static_cast<double>(nv[static_cast<size_t>(k) * n + a]);
            return g.value_at(x);
        };
        GaussianDecay d;
        Eigen::SelfAdjointEigenSolver<RMat> es_c(g.c), es_y(g.omega.y());
        d.lambda = 2.0 * es_c.eigenvalues().minCoeff() * es_y.eigenvalues().minCoeff();
        d.poly_c = std::abs(g.amp);
        LatticeSumResult r = box_lattice_sum(m, n, policy, d, term);
        return r.value;
    };
    // fhat(x) = amp det(c)^{-n/2} det(2 Omega / i)^{-m/2} e^{2 pi i sigma((c^{-1}/4) x (-Omega^{-1}) t(x))}
    GaussianState fh;
    fh.c = 0.25 * f.c.inverse();
    fh.omega = SiegelPoint((-f.omega.omega.inverse()).eval(), 1e-8);
    cplx psd2 = principal_halfplane_sqrt_det(CMat(2.0 * f.omega.omega));
    fh.amp = f.amp * std::pow(f.c.determinant(), -0.5 * n) * std::pow(psd2, -m);
    return std::abs(sum_state(f) - sum_state(fh));
}

NuRatioReport nu_ratio(const RMat& s, const SymplecticMatrix& gamma,
                       const std::vector<SiegelPoint>& samples, const TruncationPolicy& policy) {
    const int m = static_cast<int>(s.rows());
    std::vector<cplx> ratios;
    for (const auto& om : samples) {
        LatticeSumResult denom = theta_series(s, om, policy);
        if (std::abs(denom.value) < 1e-6)
            throw conditioning_error("nu_ratio: theta_S too small at sample, resample");
        SiegelPoint momega = act(gamma, om);
        LatticeSumResult numer = theta_series(s, momega, policy);
        cplx jm = automorphic_factor_halfweight(gamma, om, m);
        ratios.push_back(numer.value / (jm * denom.value));
    }
    NuRatioReport rep;
    rep.ratio = ratios.front();
    rep.modulus_dev = std::abs(std::abs(rep.ratio) - 1.0);
    double spread = 0.0;
    for (size_t i = 0; i < ratios.size(); ++i)
        for (size_t j = i + 1; j < ratios.size(); ++j)
            spread = std::max(spread, std::abs(ratios[i] - ratios[j]));
    rep.omega_spread = spread;
    return rep;
}

cplx weil_inversion_integral(double c, cplx omega_scalar, double x, double quad_tol) {
    double y = omega_scalar.imag();
    if (y <= 0.0 || c <= 0.0) throw domain_error("weil_inversion_integral: bad parameters");
    double r = 8.0 / std::sqrt(2.0 * c * y) + 2.0 * std::abs(x);
    cplx prev(0.0, 0.0);
    int nn = 128;
    cplx pref = std::sqrt(2.0) * std::exp(cplx(0.0, -M_PI / 4.0)) * std::sqrt(c);
    for (int d = 0; d < 14; ++d, nn *= 2) {
        double h = 2.0 * r / nn;
        cplx acc(0.0, 0.0);
        for (int i = 0; i <= nn; ++i) {
            double yv = -r + i * h;
            cplx fy = std::exp(cplx(0.0, 2.0 * M_PI) * c * yv * yv * omega_scalar);
            cplx ker = std::exp(cplx(0.0, -4.0 * M_PI) * c * yv * x);
            double wgt = (i == 0 || i == nn) ? 0.5 : 1.0;
            acc += wgt * fy * ker;
        }
        acc *= h;
        if (d > 2 && std::abs(acc - prev) < quad_tol) return pref * acc;
        prev = acc;
    }
    throw convergence_error("weil_inversion_integral: quadrature did not settle");
}

} // namespace siegel
