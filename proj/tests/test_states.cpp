#include <doctest.h>

#include "siegel/hermite.hpp"
#include "siegel/states.hpp"
#include "test_util.hpp"

using namespace siegel;

namespace {

HeisenbergElement circle_elem(std::mt19937_64& g, int m, int n) {
    RatMat lam = testutil::random_rat_mat(g, m, n);
    RatMat mu = testutil::random_rat_mat(g, m, n);
    RatMat sym = testutil::random_rat_mat(g, m, m);
    sym = Rational(1, 2) * (sym + sym.transpose());
    return HeisenbergElement(lam, mu, sym - mu * lam.transpose(), HeisLaw::Circle);
}

GaussianPolynomialState random_state(std::mt19937_64& g, int m, int n) {
    auto eo = testutil::random_exact_siegel(g, n);
    GaussMat lin(m, n);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) lin(i, j) = GaussianRational(ratio(d(g), 2), ratio(d(g), 2));
    SymPoly p(m * n);
    p.add_term(SymPoly::Expo(static_cast<size_t>(m) * n, 0), SymbolicScalar(1));
    SymPoly::Expo quad(static_cast<size_t>(m) * n, 0);
    quad[0] = 2;
    p.add_term(quad, SymbolicScalar(GaussianRational(ratio(d(g), 2))));
    if (m * n > 1) {
        SymPoly::Expo mixed(static_cast<size_t>(m) * n, 0);
        mixed[0] = 1;
        mixed[static_cast<size_t>(m) * n - 1] = 1;
        p.add_term(mixed, SymbolicScalar(GaussianRational(ratio(d(g), 3))));
    }
    return GaussianPolynomialState(m, n, RatMat::identity(m), eo.omega, lin,
                                   GaussianRational(ratio(d(g), 4)), p);
}

} // namespace

TEST_CASE("polynomial algebra basics") {
    SymPoly x = SymPoly::variable(2, 0), y = SymPoly::variable(2, 1);
    SymPoly p = x * x + y.scaled(SymbolicScalar(3));
    CHECK(p.degree() == 2);
    CHECK(p.derivative(0) == x.scaled(SymbolicScalar(2)));
    std::vector<SymbolicScalar> shift{SymbolicScalar(1), SymbolicScalar(0)};
    SymPoly q = p.shifted(shift); // (x+1)^2 + 3y
    CHECK(q.eval({SymbolicScalar(0), SymbolicScalar(0)}) == SymbolicScalar(1));
    CHECK(q.eval({SymbolicScalar(1), SymbolicScalar(1)}) == SymbolicScalar(7));
}

TEST_CASE("Schroedinger action: identity, center, composition") {
    auto g = testutil::rng(41);
    for (int rep = 0; rep < 8; ++rep) {
        int m = 1 + rep % 2, n = 1 + (rep / 2) % 2;
        GaussianPolynomialState f = random_state(g, m, n);
        // identity
        CHECK(state_equal(schrodinger_act(HeisenbergElement::identity(m, n), f), f));
        // central element scales by e^{2 pi i sigma(c kappa)}
        RatMat kap = testutil::random_rat_mat(g, m, m, 1);
        kap = kap + kap.transpose();
        HeisenbergElement central(RatMat(m, n), RatMat(m, n), kap, HeisLaw::Circle);
        GaussianPolynomialState moved = schrodinger_act(central, f);
        Rational tr = (to_gauss(f.c) * to_gauss(kap)).trace().re;
        CHECK(moved.s == f.s + GaussianRational(tr));
        CHECK(moved.p == f.p);
        CHECK(moved.lin == f.lin);
        // composition law, exact in the state algebra
        HeisenbergElement g1 = circle_elem(g, m, n), g2 = circle_elem(g, m, n);
        GaussianPolynomialState two_step = schrodinger_act(g1, schrodinger_act(g2, f));
        GaussianPolynomialState one_step = schrodinger_act(heis_mul(g1, g2), f);
        CHECK(state_equal(two_step, one_step));
    }
}

TEST_CASE("exact Gaussian inner products") {
    // <f0, f0> = 1
    GaussianPolynomialState f0 = ground_state(1, 1);
    CHECK(gaussian_inner(f0, f0) == SymbolicScalar(1));
    GaussianPolynomialState f0_22 = ground_state(2, 2);
    CHECK(gaussian_inner(f0_22, f0_22) == SymbolicScalar(1));
    // <f0, xi f0> = 0 (odd integrand)
    GaussianPolynomialState xf0 = state_mul_coord(f0, 0, 0);
    CHECK(gaussian_inner(f0, xf0).is_zero());
    // <xi f0, xi f0> = second Gaussian moment: integral xi^2 * 2 e^{-4 pi xi^2}
    //                = 2 * (1/(8 pi)) * (1/2) = 1/(8 pi)
    SymbolicScalar expect = SymbolicScalar::pi_half_pow(-2, GaussianRational(Rational(1, 8)));
    CHECK(gaussian_inner(xf0, xf0) == expect);
}

TEST_CASE("norm preservation under the Schroedinger action") {
    auto g = testutil::rng(42);
    for (int rep = 0; rep < 6; ++rep) {
        int m = 1 + rep % 2, n = 1 + (rep / 2) % 2;
        GaussianPolynomialState f = random_state(g, m, n);
        SymbolicScalar before = gaussian_inner(f, f);
        HeisenbergElement h = circle_elem(g, m, n);
        GaussianPolynomialState uf = schrodinger_act(h, f);
        SymbolicScalar after = gaussian_inner(uf, uf);
        CHECK(before == after);
        CHECK_FALSE(before.is_zero());
    }
}

TEST_CASE("numeric evaluation agrees with the symbolic data") {
    auto g = testutil::rng(43);
    GaussianPolynomialState f = random_state(g, 1, 2);
    HeisenbergElement h = circle_elem(g, 1, 2);
    GaussianPolynomialState uf = schrodinger_act(h, f);
    // compare uf(x) with the action formula applied to raw values
    RMat x(1, 2);
    x << 0.3, -0.7;
    RMat lam = to_rmat(h.lambda), mu = to_rmat(h.mu), kap = to_rmat(h.kappa);
    RMat cc = to_rmat(f.c);
    double phase = (cc * (kap + mu * lam.transpose() + 2.0 * x * mu.transpose())).trace();
    cplx expect = std::exp(cplx(0.0, 2.0 * M_PI) * phase) * f.value_at(x + lam);
    CHECK(std::abs(uf.value_at(x) - expect) < 1e-12 * std::max(1.0, std::abs(expect)));
}

TEST_CASE("exact Fourier transform") {
    // self-dual Gaussian e^{-pi x^2}: c = 1, Omega = i/2, tau = 1
    GaussMat om_half(1, 1);
    om_half(0, 0) = GaussianRational(Rational(0), Rational(1, 2));
    GaussianPolynomialState sd = pure_gaussian(1, 1, RatMat::identity(1), om_half);
    GaussianPolynomialState sd_hat = fourier(sd, Rational(1));
    CHECK(state_equal(sd, sd_hat));

    // parity involution F^2 f = f(-x) for assorted tau
    for (int rep = 0; rep < 4; ++rep) {
        int mn = 1 + rep % 2;
        GaussianPolynomialState f = ground_state(1, mn);
        // decorate with a polynomial and a linear phase
        f.p = f.p * (SymPoly::variable(mn, 0) + SymPoly::constant(mn, SymbolicScalar(2)));
        GaussMat lin(1, mn);
        lin(0, 0) = GaussianRational(Rational(1, 2), Rational(1, 3));
        f.lin = lin;
        for (Rational tau : {Rational(1), Rational(2), Rational(1, 2)}) {
            GaussianPolynomialState ff = fourier(fourier(f, tau), tau);
            CHECK(state_equal(ff, state_negate_arg(f)));
        }
    }

    // numeric cross-check of F_1 against quadrature for a decorated state
    GaussianPolynomialState f = ground_state(1, 1);
    f.p = f.p * SymPoly::variable(1, 0);
    GaussianPolynomialState fh = fourier(f, Rational(1));
    double eta = 0.37;
    cplx quad(0.0, 0.0);
    int nsteps = 40000;
    double lo = -8.0, hi = 8.0, h = (hi - lo) / nsteps;
    for (int i = 0; i <= nsteps; ++i) {
        double xi = lo + i * h;
        RMat xm(1, 1);
        xm(0, 0) = xi;
        double w = (i == 0 || i == nsteps) ? 0.5 : 1.0;
        quad += w * f.value_at(xm) * std::exp(cplx(0.0, -2.0 * M_PI * xi * eta));
    }
    quad *= h;
    RMat em(1, 1);
    em(0, 0) = eta;
    CHECK(std::abs(fh.value_at(em) - quad) < 1e-9);
}
