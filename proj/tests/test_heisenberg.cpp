#include <doctest.h>

#include "siegel/heisenberg.hpp"
#include "test_util.hpp"

using namespace siegel;

namespace {

HeisenbergElement random_heis(std::mt19937_64& g, int m, int n, HeisLaw law = HeisLaw::Circle,
                              int den = 2) {
    RatMat lam = testutil::random_rat_mat(g, m, n, den);
    RatMat mu = testutil::random_rat_mat(g, m, n, den);
    RatMat sym = testutil::random_rat_mat(g, m, m, den);
    sym = Rational(1, 2) * (sym + sym.transpose());
    if (law == HeisLaw::Circle) {
        // kappa = sym - mu t(lambda) has kappa + mu t(lambda) symmetric
        return HeisenbergElement(lam, mu, sym - mu * lam.transpose(), HeisLaw::Circle);
    }
    return HeisenbergElement(lam, mu, sym, HeisLaw::Diamond);
}

} // namespace

TEST_CASE("group laws and inverses") {
    auto g = testutil::rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        int m = 1 + rep % 2, n = 1 + (rep / 2) % 2;
        HeisenbergElement e = HeisenbergElement::identity(m, n);
        HeisenbergElement a = random_heis(g, m, n);
        CHECK(heis_mul(a, e).lambda == a.lambda);
        CHECK(heis_mul(a, e).kappa == a.kappa);
        HeisenbergElement ainv = heis_inverse(a);
        HeisenbergElement prod = heis_mul(a, ainv);
        CHECK(prod.lambda.is_zero());
        CHECK(prod.mu.is_zero());
        CHECK(prod.kappa.is_zero());
        // associativity, exact
        HeisenbergElement b = random_heis(g, m, n), c = random_heis(g, m, n);
        HeisenbergElement l = heis_mul(heis_mul(a, b), c);
        HeisenbergElement r = heis_mul(a, heis_mul(b, c));
        CHECK(l.kappa == r.kappa);
        CHECK(l.lambda == r.lambda);
        CHECK(l.mu == r.mu);
    }
}

TEST_CASE("the two laws agree through the coordinate change") {
    auto g = testutil::rng(32);
    for (int rep = 0; rep < 20; ++rep) {
        int m = 1 + rep % 2, n = 1 + (rep / 2) % 2;
        HeisenbergElement a = random_heis(g, m, n);
        HeisenbergElement b = random_heis(g, m, n);
        HeisenbergElement lhs = to_diamond(heis_mul(a, b));
        HeisenbergElement rhs = heis_mul(to_diamond(a), to_diamond(b));
        CHECK(lhs.kappa == rhs.kappa);
        CHECK(lhs.lambda == rhs.lambda);
        // and back
        HeisenbergElement back = to_circle(to_diamond(a));
        CHECK(back.kappa == a.kappa);
    }
}

TEST_CASE("symplectic embedding is a homomorphism") {
    auto g = testutil::rng(33);
    for (int rep = 0; rep < 20; ++rep) {
        int m = 1 + rep % 2, n = 1 + (rep / 2) % 2;
        HeisenbergElement e = HeisenbergElement::identity(m, n);
        CHECK(embed_sp(e) == RatMat::identity(2 * (m + n)));
        HeisenbergElement a = random_heis(g, m, n, HeisLaw::Circle, 1); // integer entries
        HeisenbergElement b = random_heis(g, m, n, HeisLaw::Circle, 1);
        CHECK(embed_sp(heis_mul(a, b)) == embed_sp(a) * embed_sp(b));
        CHECK(is_symplectic_exact(embed_sp(a)));
    }
}

TEST_CASE("matrix bracket equals the closed form") {
    auto g = testutil::rng(34);
    for (int rep = 0; rep < 20; ++rep) {
        int m = 1 + rep % 2, n = 1 + (rep / 2) % 2;
        RatMat a1 = testutil::random_rat_mat(g, m, n), b1 = testutil::random_rat_mat(g, m, n);
        RatMat g1 = testutil::random_rat_mat(g, m, m);
        g1 = Rational(1, 2) * (g1 + g1.transpose());
        RatMat a2 = testutil::random_rat_mat(g, m, n), b2 = testutil::random_rat_mat(g, m, n);
        RatMat g2 = testutil::random_rat_mat(g, m, m);
        g2 = Rational(1, 2) * (g2 + g2.transpose());
        HeisenbergAlgebraElement x(a1, b1, g1), y(a2, b2, g2);
        CHECK(bracket(x, x).gamma.is_zero());
        HeisenbergAlgebraElement br = bracket(x, y);
        // commutator of the embedded matrices equals the embedded closed form
        RatMat lhs = x.matrix() * y.matrix() - y.matrix() * x.matrix();
        CHECK(lhs == br.matrix());
        // 2-step nilpotency
        RatMat a3 = testutil::random_rat_mat(g, m, n), b3 = testutil::random_rat_mat(g, m, n);
        RatMat g3 = testutil::random_rat_mat(g, m, m);
        g3 = Rational(1, 2) * (g3 + g3.transpose());
        HeisenbergAlgebraElement z(a3, b3, g3);
        CHECK(bracket(br, z).gamma.is_zero());
        CHECK(bracket(br, z).matrix().is_zero());
    }
}

TEST_CASE("basis brackets reproduce the Heisenberg relations") {
    // [X_{ka}, X^hat_{lb}] central with gamma = 2 delta_{ab} * sym(E_{kl})
    int m = 2, n = 2;
    for (int k = 0; k < m; ++k)
        for (int a = 0; a < n; ++a)
            for (int l = 0; l < m; ++l)
                for (int b = 0; b < n; ++b) {
                    RatMat eka(m, n), elb(m, n), zero_g(m, m);
                    eka(k, a) = 1;
                    elb(l, b) = 1;
                    HeisenbergAlgebraElement x(eka, RatMat(m, n), zero_g);
                    HeisenbergAlgebraElement y(RatMat(m, n), elb, zero_g);
                    HeisenbergAlgebraElement br = bracket(x, y);
                    RatMat expect(m, m);
                    if (a == b) {
                        expect(k, l) += 1;
                        expect(l, k) += 1;
                    }
                    CHECK(br.gamma == expect);
                    CHECK(br.alpha.is_zero());
                    CHECK(br.beta.is_zero());
                }
}

TEST_CASE("coadjoint action") {
    auto g = testutil::rng(35);
    for (int rep = 0; rep < 20; ++rep) {
        int m = 1 + rep % 2, n = 1 + (rep / 2) % 2;
        RatMat a = testutil::random_rat_mat(g, m, n), b = testutil::random_rat_mat(g, m, n);
        RatMat c = testutil::random_rat_mat(g, m, m);
        c = Rational(1, 2) * (c + c.transpose());
        HeisenbergElement h = random_heis(g, m, n);
        // c = 0 orbits are points
        CoadjointFunctional f0(a, b, RatMat(m, m));
        CoadjointFunctional moved0 = coadjoint(h, f0);
        CHECK(moved0.a == a);
        CHECK(moved0.b == b);
        // kappa never enters
        HeisenbergElement h2(h.lambda, h.mu, h.kappa + RatMat::identity(m) - RatMat::identity(m),
                             HeisLaw::Circle);
        CoadjointFunctional f(a, b, c);
        CHECK(coadjoint(h, f).a == coadjoint(h2, f).a);
        // action property Ad*(g1 g2) = Ad*(g1) Ad*(g2)
        HeisenbergElement h3 = random_heis(g, m, n);
        CoadjointFunctional lhs = coadjoint(heis_mul(h, h3), f);
        CoadjointFunctional rhs = coadjoint(h, coadjoint(h3, f));
        CHECK(lhs.a == rhs.a);
        CHECK(lhs.b == rhs.b);
        CHECK(lhs.c == rhs.c);
    }
}

TEST_CASE("Jacobi group action") {
    auto g = testutil::rng(36);
    int m = 1, n = 2;
    SiegelPoint om = testutil::random_siegel(g, n);
    CMat z = CMat::Random(m, n);
    // identity fixes
    auto [o1, z1] = jacobi_act(SymplecticMatrix::identity(n), HeisenbergElement::identity(m, n),
                               om, z);
    CHECK((o1.omega - om.omega).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((z1 - z).cwiseAbs().maxCoeff() < 1e-14);
    // pure translation: Z -> Z + lambda Omega + mu
    HeisenbergElement h = random_heis(g, m, n);
    auto [o2, z2] = jacobi_act(SymplecticMatrix::identity(n), h, om, z);
    CMat expect = z + to_rmat(h.lambda).cast<cplx>() * om.omega + to_rmat(h.mu).cast<cplx>();
    CHECK((z2 - expect).cwiseAbs().maxCoeff() < 1e-13);
    // action compatibility: two-step vs one-step through the group law
    for (int rep = 0; rep < 10; ++rep) {
        JacobiElement g1{testutil::random_symplectic(g, n), random_heis(g, m, n)};
        JacobiElement g2{testutil::random_symplectic(g, n), random_heis(g, m, n)};
        auto [oa, za] = jacobi_act(g2.m, g2.g, om, z);
        auto [ob, zb] = jacobi_act(g1.m, g1.g, oa, za);
        JacobiElement g12 = jacobi_mul(g1, g2);
        auto [oc, zc] = jacobi_act(g12.m, g12.g, om, z);
        CHECK((ob.omega - oc.omega).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((zb - zc).cwiseAbs().maxCoeff() < 1e-10);
    }
}
