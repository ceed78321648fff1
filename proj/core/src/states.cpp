#include "siegel/states.hpp"

#include <cmath>

namespace siegel {

CPoly to_cpoly(const RatPoly& p) {
    return p.convert<cplx>([](const GaussianRational& c) { return c.to_complex(); });
}

CPoly to_cpoly(const SymPoly& p) {
    return p.convert<cplx>([](const SymbolicScalar& c) { return c.to_complex(); });
}

cplx eval_cpoly(const CPoly& p, const std::vector<cplx>& x) { return p.eval(x); }

GaussianPolynomialState::GaussianPolynomialState(int m_, int n_, RatMat c_, GaussMat omega_,
                                                 GaussMat lin_, GaussianRational s_, SymPoly p_)
    : m(m_), n(n_), c(std::move(c_)), omega(std::move(omega_)), lin(std::move(lin_)),
      s(std::move(s_)), p(std::move(p_)) {
    if (c.rows() != m || c.cols() != m) throw structural_error("state: c must be m x m");
    if (!c.is_symmetric() || !rat_positive_definite(c))
        throw structural_error("state: c must be symmetric positive definite");
    if (omega.rows() != n || !omega.is_symmetric()) throw structural_error("state: bad Omega");
    if (!rat_positive_definite(imag_part(omega)))
        throw domain_error("state: Im Omega not positive definite");
    if (lin.rows() != m || lin.cols() != n) throw structural_error("state: L must be m x n");
    if (p.nvars() != m * n) throw structural_error("state: polynomial variable count");
}

GaussianPolynomialState ground_state(int m, int n) {
    GaussMat omega(n, n);
    for (int i = 0; i < n; ++i) omega(i, i) = GaussianRational::i();
    BigInt two_mn;
    mpz_ui_pow_ui(two_mn.get_mpz_t(), 2, static_cast<unsigned long>(m) * n);
    SymPoly p = SymPoly::constant(m * n, SymbolicScalar::sqrt_rational(Rational(two_mn)));
    return GaussianPolynomialState(m, n, RatMat::identity(m), omega, GaussMat(m, n),
                                   GaussianRational(0), p);
}

GaussianPolynomialState pure_gaussian(int m, int n, RatMat c, GaussMat omega) {
    return GaussianPolynomialState(m, n, std::move(c), std::move(omega), GaussMat(m, n),
                                   GaussianRational(0),
                                   SymPoly::constant(m * n, SymbolicScalar(1)));
}

cplx GaussianPolynomialState::value_at(const RMat& x) const {
    std::vector<cplx> v(static_cast<size_t>(m) * n);
    for (int k = 0; k < m; ++k)
        for (int a = 0; a < n; ++a) v[k * n + a] = cplx(x(k, a), 0.0);
    cplx pv = to_cpoly(p).eval(v);
    CMat xc = x.cast<cplx>();
    CMat om = to_cmat(omega), lc = to_cmat(lin);
    cplx quad = (to_rmat(c).cast<cplx>() * xc * om * xc.transpose()).trace();
    cplx linear = (lc.transpose() * xc).trace();
    cplx expo = cplx(0.0, 2.0 * M_PI) * (quad + linear + s.to_complex());
    return pv * std::exp(expo);
}

GaussianPolynomialState state_scale(const GaussianPolynomialState& f, const SymbolicScalar& a) {
    GaussianPolynomialState r = f;
    r.p = f.p.scaled(a);
    return r;
}

GaussianPolynomialState state_add(const GaussianPolynomialState& f,
                                  const GaussianPolynomialState& g) {
    if (!f.same_shape(g) || !(f.omega == g.omega) || !(f.lin == g.lin) || !(f.s == g.s))
        throw structural_error("state_add: exponent data must match");
    GaussianPolynomialState r = f;
    r.p += g.p;
    return r;
}

GaussianPolynomialState state_mul_coord(const GaussianPolynomialState& f, int k, int a) {
    GaussianPolynomialState r = f;
    r.p = f.p * SymPoly::variable(f.nvars(), k * f.n + a);
    return r;
}

GaussianPolynomialState state_derivative(const GaussianPolynomialState& f, int k, int a) {
    int v = k * f.n + a;
    SymPoly dp = f.p.derivative(v);
    // chain rule through the exponent: d/dx_{ka} sigma(c x Omega tx) = 2 (c x Omega)_{ka}
    SymPoly lin_poly(f.nvars());
    GaussMat cg = to_gauss(f.c);
    for (int l = 0; l < f.m; ++l)
        for (int b = 0; b < f.n; ++b) {
            GaussianRational coef = cg(k, l) * f.omega(b, a) * GaussianRational(2);
            if (!coef.is_zero())
                lin_poly += SymPoly::variable(f.nvars(), l * f.n + b, SymbolicScalar(coef));
        }
    lin_poly += SymPoly::constant(f.nvars(), SymbolicScalar(f.lin(k, a)));
    SymbolicScalar two_pi_i = SymbolicScalar::pi_half_pow(2, GaussianRational(0, 2));
    GaussianPolynomialState r = f;
    r.p = dp + (f.p * lin_poly).scaled(two_pi_i);
    return r;
}

GaussianPolynomialState state_shift_arg(const GaussianPolynomialState& f, const GaussMat& u) {
    // g(x) = f(x + u)
    if (u.rows() != f.m || u.cols() != f.n) throw structural_error("state_shift_arg: shape");
    std::vector<SymbolicScalar> uv(static_cast<size_t>(f.m) * f.n);
    for (int k = 0; k < f.m; ++k)
        for (int a = 0; a < f.n; ++a) uv[k * f.n + a] = SymbolicScalar(u(k, a));
    GaussMat cg = to_gauss(f.c);
    // sigma(c(x+u) Omega t(x+u)) = sigma(c x Omega tx) + sigma((2 c u Omega) tx) + sigma(c u Omega tu)
    GaussMat dlin = GaussianRational(2) * (cg * u * f.omega);
    GaussianRational dconst = (cg * u * f.omega * u.transpose()).trace();
    // sigma(L t(x+u)) adds sigma(L tu)
    GaussianRational lconst = (f.lin.transpose() * u).trace();
    GaussianPolynomialState r = f;
    r.p = f.p.shifted(uv);
    r.lin = f.lin + dlin;
    r.s = f.s + dconst + lconst;
    return r;
}

GaussianPolynomialState state_negate_arg(const GaussianPolynomialState& f) {
    GaussianPolynomialState r = f;
    std::vector<SymPoly> subs;
    for (int v = 0; v < f.nvars(); ++v)
        subs.push_back(SymPoly::variable(f.nvars(), v, SymbolicScalar(-1)));
    r.p = f.p.substituted(subs);
    r.lin = -f.lin;
    return r;
}

bool state_equal(const GaussianPolynomialState& f, const GaussianPolynomialState& g) {
    return f.m == g.m && f.n == g.n && f.c == g.c && f.omega == g.omega && f.lin == g.lin &&
           f.s == g.s && f.p == g.p;
}

GaussianPolynomialState schrodinger_act(const HeisenbergElement& g,
                                        const GaussianPolynomialState& f) {
    if (g.law != HeisLaw::Circle) throw structural_error("schrodinger_act: circle coordinates");
    if (g.m() != f.m || g.n() != f.n) throw structural_error("schrodinger_act: shape mismatch");
    GaussMat lam = to_gauss(g.lambda), mu = to_gauss(g.mu);
    GaussianPolynomialState r = state_shift_arg(f, lam);
    GaussMat cg = to_gauss(f.c);
    // multiplier e^{2 pi i sigma(c(kappa0 + mu0 t(lambda0) + 2 x t(mu0)))}
    r.lin = r.lin + GaussianRational(2) * (cg * mu);
    r.s = r.s + (cg * (to_gauss(g.kappa) + mu * lam.transpose())).trace();
    return r;
}

namespace {

// E[u_{i1} ... u_{ik}] for covariance Sigma = Ainv/(2 pi): sum over pairings.
SymbolicScalar wick_moment(const RatMat& ainv, std::vector<int>& idx) {
    if (idx.empty()) return SymbolicScalar(1);
    if (idx.size() % 2) return SymbolicScalar(0);
    int first = idx[0];
    SymbolicScalar total;
    for (size_t t = 1; t < idx.size(); ++t) {
        Rational cov = ainv(first, idx[t]);
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (size_t u = 1; u < idx.size(); ++u)
            if (u != t) rest.push_back(idx[u]);
        if (cov != 0) {
            SymbolicScalar pair = SymbolicScalar::pi_half_pow(-2, GaussianRational(cov / 2));
            total += pair * wick_moment(ainv, rest);
        }
    }
    return total;
}

} // namespace

SymbolicScalar gaussian_inner(const GaussianPolynomialState& f, const GaussianPolynomialState& g) {
    if (!f.same_shape(g)) throw structural_error("gaussian_inner: shape/index mismatch");
    if (!(real_part(f.omega) == real_part(g.omega)))
        throw domain_error("gaussian_inner: Re Omega must match for an exact covariance");
    int nv = f.nvars();
    // combined exponent 2 pi i [sigma(c x Theta tx) + sigma(l tx) + s0] with
    // Theta = i (Im f + Im g), i.e. -pi v^T A v with A = 2 c (x) (Yf + Yg).
    RatMat y_sum = imag_part(f.omega) + imag_part(g.omega);
    RatMat a = rat_kron(f.c, Rational(2) * y_sum);
    if (!rat_positive_definite(a)) throw domain_error("gaussian_inner: non-decaying exponent");

    GaussMat lmat = f.lin - conj(g.lin);
    std::vector<GaussianRational> l(nv);
    for (int k = 0; k < f.m; ++k)
        for (int b = 0; b < f.n; ++b) l[k * f.n + b] = lmat(k, b);
    GaussianRational s0 = f.s - g.s.conj();

    RatMat ainv = a.inverse();
    // shift h = i Ainv l
    std::vector<SymbolicScalar> h(nv);
    GaussianRational w(0); // l^T Ainv l
    for (int i = 0; i < nv; ++i) {
        GaussianRational hi(0);
        for (int j = 0; j < nv; ++j) hi += GaussianRational(ainv(i, j)) * l[j];
        w += l[i] * hi;
        h[i] = SymbolicScalar(GaussianRational::i() * hi);
    }

    // prefactor: e^{-pi w} = e^{-pi Re w} e^{-i pi Im w} and
    // e^{2 pi i s0} = e^{-2 pi Im s0} e^{2 pi i Re s0}, then det(A)^{-1/2}
    SymbolicScalar pref = SymbolicScalar::exp_pi(-w.re - 2 * s0.im);
    pref *= SymbolicScalar(exact_unit_phase(-w.im));
    pref *= SymbolicScalar(exact_unit_phase(2 * s0.re));
    pref = pref / SymbolicScalar::sqrt_rational(a.det());

    // combined polynomial P_f(u+h) conj(P_g)(u+h)
    SymPoly pg_conj = g.p.convert<SymbolicScalar>([](const SymbolicScalar& c) { return c.conj(); });
    SymPoly prod = f.p * pg_conj;
    SymPoly shifted = prod.shifted(h);

    SymbolicScalar total;
    for (const auto& [e, coef] : shifted.terms()) {
        std::vector<int> idx;
        for (int v = 0; v < nv; ++v)
            for (int k = 0; k < e[v]; ++k) idx.push_back(v);
        if (idx.size() % 2) continue;
        total += coef * wick_moment(ainv, idx);
    }
    return pref * total;
}

GaussianPolynomialState fourier(const GaussianPolynomialState& f, const Rational& tau) {
    if (tau <= 0) throw domain_error("fourier: tau must be positive");
    int nv = f.nvars();
    // require c (x) Omega = i (w/2) I
    GaussMat q(nv, nv);
    GaussMat cg = to_gauss(f.c);
    for (int k = 0; k < f.m; ++k)
        for (int a = 0; a < f.n; ++a)
            for (int l = 0; l < f.m; ++l)
                for (int b = 0; b < f.n; ++b) q(k * f.n + a, l * f.n + b) = cg(k, l) * f.omega(a, b);
    GaussianRational diag = q(0, 0);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            if (i == j && !(q(i, j) == diag))
                throw domain_error("fourier: exponent not isotropic");
            if (i != j && !q(i, j).is_zero())
                throw domain_error("fourier: exponent not isotropic");
        }
    if (!(diag.re == 0) || !(diag.im > 0)) throw domain_error("fourier: exponent must be i w/2");
    Rational w = 2 * diag.im; // gaussian e^{-pi w |x|^2}
    Rational w_new = tau * tau / w;

    // base: tau^{mn/2} w^{-mn/2} e^{-pi w_new |eta|^2}, same c, Omega scaled
    GaussMat omega_new = f.omega;
    Rational ratio = w_new / w;
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j) omega_new(i, j) = omega_new(i, j) * GaussianRational(ratio);
    Rational scale_rat(1);
    for (int k = 0; k < nv; ++k) scale_rat *= tau / w;
    SymbolicScalar scale = SymbolicScalar::sqrt_rational(scale_rat);

    GaussianPolynomialState base(f.m, f.n, f.c, omega_new, GaussMat(f.m, f.n), f.s,
                                 SymPoly::constant(nv, scale));

    // apply P((i/(2 pi tau)) d/d eta): per monomial
    SymbolicScalar dcoef =
        SymbolicScalar::pi_half_pow(-2, GaussianRational(Rational(0), Rational(1) / (2 * tau)));
    GaussianPolynomialState acc = base;
    acc.p = SymPoly(nv); // zero polynomial accumulator
    for (const auto& [e, coef] : f.p.terms()) {
        GaussianPolynomialState cur = base;
        for (int v = 0; v < nv; ++v)
            for (int k = 0; k < e[v]; ++k) {
                cur = state_derivative(cur, v / f.n, v % f.n);
                cur.p = cur.p.scaled(dcoef);
            }
        acc.p += cur.p.scaled(coef);
    }

    // linear exponent acts as a frequency shift: eta -> eta - L/tau
    if (!f.lin.is_zero()) {
        GaussMat u = f.lin;
        GaussianRational minus_inv_tau = GaussianRational(Rational(-1) / tau);
        for (int i = 0; i < u.rows(); ++i)
            for (int j = 0; j < u.cols(); ++j) u(i, j) = u(i, j) * minus_inv_tau;
        acc = state_shift_arg(acc, u);
    }
    return acc;
}

} // namespace siegel
