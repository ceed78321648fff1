#include <doctest.h>

#include "siegel/symplectic.hpp"
#include "test_util.hpp"

using namespace siegel;

TEST_CASE("symplectic construction and closure") {
    auto g = testutil::rng(21);
    for (int n = 1; n <= 3; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            SymplecticMatrix a = testutil::random_symplectic(g, n);
            SymplecticMatrix b = testutil::random_symplectic(g, n);
            SymplecticMatrix c = a * b;          // constructor re-checks tM J M = J
            SymplecticMatrix inv = a.inverse();
            CHECK((inv.mat() * a.mat() - RMat::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() <
                  1e-12);
            // exact closure for the exactly representable entries
            CHECK(is_symplectic_exact(rat_from_rmat(c.mat())));
            CHECK(is_symplectic_exact(rat_from_rmat(inv.mat())));
        }
    }
}

TEST_CASE("Moebius action basics") {
    // sigma_n fixes iI
    for (int n = 1; n <= 3; ++n) {
        SiegelPoint ipt(CMat(cplx(0.0, 1.0) * CMat::Identity(n, n)));
        SiegelPoint moved = act(SymplecticMatrix::inversion(n), ipt);
        CHECK((moved.omega - ipt.omega).cwiseAbs().maxCoeff() < 1e-14);
    }
    // t_b shifts
    auto g = testutil::rng(22);
    SiegelPoint om = testutil::random_siegel(g, 2);
    RMat b = testutil::random_sym(g, 2);
    SiegelPoint shifted = act(SymplecticMatrix::translation(b), om);
    CHECK((shifted.omega - om.omega - b.cast<cplx>()).cwiseAbs().maxCoeff() < 1e-14);
    // n = 1, M = [[1,1],[1,2]], Omega = i -> (i+1)/(i+2) = (3+i)/5
    RMat m12(2, 2);
    m12 << 1, 1, 1, 2;
    CMat omi(1, 1);
    omi(0, 0) = cplx(0.0, 1.0);
    SiegelPoint res = act(SymplecticMatrix(m12), SiegelPoint(omi));
    CHECK(std::abs(res.omega(0, 0) - cplx(0.6, 0.2)) < 1e-15);
}

TEST_CASE("automorphic factor and cocycle") {
    auto g = testutil::rng(23);
    SiegelPoint om = testutil::random_siegel(g, 2);
    CHECK(std::abs(automorphic_factor(SymplecticMatrix::translation(testutil::random_sym(g, 2)),
                                      om) -
                   cplx(1.0, 0.0)) < 1e-14);
    // J(sigma_n, iI) = det(iI) = i^n
    for (int n = 1; n <= 3; ++n) {
        SiegelPoint ipt(CMat(cplx(0.0, 1.0) * CMat::Identity(n, n)));
        cplx j = automorphic_factor(SymplecticMatrix::inversion(n), ipt);
        CHECK(std::abs(j - std::pow(cplx(0.0, 1.0), n)) < 1e-14);
    }
    // J(d_a, Omega) = det(a)^{-1}
    RMat a(2, 2);
    a << 2, 1, 0, 1;
    CHECK(std::abs(automorphic_factor(SymplecticMatrix::dilation(a), om) - cplx(0.5, 0.0)) <
          1e-14);

    // weight-1 cocycle identity, exact arithmetic
    for (int rep = 0; rep < 20; ++rep) {
        ExactSiegelPoint eom = testutil::random_exact_siegel(g, 2);
        RatMat m1 = rat_from_rmat(testutil::random_symplectic(g, 2).mat());
        RatMat m2 = rat_from_rmat(testutil::random_symplectic(g, 2).mat());
        GaussianRational lhs = automorphic_factor_exact(m1 * m2, eom.omega);
        GaussMat mid = act_exact(m2, eom.omega);
        GaussianRational rhs =
            automorphic_factor_exact(m1, mid) * automorphic_factor_exact(m2, eom.omega);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("determinant law for the transformed imaginary part") {
    auto g = testutil::rng(24);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 1 + rep % 3;
        SiegelPoint om = testutil::random_siegel(g, n);
        SymplecticMatrix m = testutil::random_symplectic(g, n);
        SiegelPoint mo = act(m, om);
        double lhs = mo.y().determinant();
        double j = std::abs(automorphic_factor(m, om));
        double rhs = om.y().determinant() / (j * j);
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("geodesic distance") {
    auto g = testutil::rng(25);
    SiegelPoint om = testutil::random_siegel(g, 2);
    CHECK(geodesic_distance(om, om) == 0.0);
    // rho(iI_n, i t I_n) = sqrt(n) |log t|
    for (int n = 1; n <= 3; ++n) {
        for (double t : {0.1, 0.5, 2.0}) {
            SiegelPoint p1(CMat(cplx(0.0, 1.0) * CMat::Identity(n, n)));
            SiegelPoint p2(CMat(cplx(0.0, t) * CMat::Identity(n, n)));
            double expect = std::sqrt(static_cast<double>(n)) * std::abs(std::log(t));
            CHECK(std::abs(geodesic_distance(p1, p2) - expect) < 1e-10);
        }
    }
    // invariance under the action
    for (int rep = 0; rep < 15; ++rep) {
        int n = 1 + rep % 2;
        SiegelPoint a = testutil::random_siegel(g, n), b = testutil::random_siegel(g, n);
        SymplecticMatrix m = testutil::random_symplectic(g, n);
        double d0 = geodesic_distance(a, b);
        double d1 = geodesic_distance(act(m, a), act(m, b));
        CHECK(std::abs(d0 - d1) < 1e-9 * std::max(1.0, d0));
    }
}

TEST_CASE("Cayley transform") {
    // Psi(0) = iI
    CMat w0 = CMat::Zero(2, 2);
    SiegelPoint p = cayley(w0);
    CHECK((p.omega - cplx(0.0, 1.0) * CMat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
    // n = 1: Psi(1/2) = 3i
    CMat wh(1, 1);
    wh(0, 0) = cplx(0.5, 0.0);
    CHECK(std::abs(cayley(wh).omega(0, 0) - cplx(0.0, 3.0)) < 1e-14);
    // roundtrip on random disk points
    auto g = testutil::rng(26);
    for (int rep = 0; rep < 10; ++rep) {
        SiegelPoint om = testutil::random_siegel(g, 2);
        CMat w = cayley_inv(om);
        SiegelPoint back = cayley(w);
        CHECK((back.omega - om.omega).cwiseAbs().maxCoeff() < 1e-12);
    }
    // compatibility M . Psi(W) = Psi(M_* . W)
    for (int rep = 0; rep < 10; ++rep) {
        SiegelPoint om = testutil::random_siegel(g, 2);
        CMat w = cayley_inv(om);
        SymplecticMatrix m = testutil::random_symplectic(g, 2);
        auto [pp, qq] = cayley_conjugate(m);
        CMat moved_disk = disk_act(pp, qq, w);
        SiegelPoint lhs = act(m, om);
        SiegelPoint rhs = cayley(moved_disk);
        CHECK((lhs.omega - rhs.omega).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("Maslov index") {
    int n = 1;
    RMat e(1, 2), f(1, 2), ef(1, 2);
    e << 1, 0;
    f << 0, 1;
    ef << 1, 1;
    LagrangianSubspace le(e), lf(f), lef(ef);
    CHECK(maslov_index(le, le, le) == 0);
    CHECK(maslov_index(le, lf, lef) == -1);
    CHECK(maslov_index(lf, le, lef) == 1); // antisymmetry
    // antisymmetry + Sp-invariance over random triples
    auto g = testutil::rng(27);
    auto random_lagrangian = [&](int deg) {
        // image of the standard (x, 0) plane under a random symplectic map
        SymplecticMatrix m = testutil::random_symplectic(g, deg);
        RMat basis(deg, 2 * deg);
        basis.setZero();
        basis.leftCols(deg) = RMat::Identity(deg, deg);
        return LagrangianSubspace(basis * m.mat().transpose());
    };
    for (int rep = 0; rep < 100; ++rep) {
        int deg = 1 + rep % 2;
        LagrangianSubspace l1 = random_lagrangian(deg);
        LagrangianSubspace l2 = random_lagrangian(deg);
        LagrangianSubspace l3 = random_lagrangian(deg);
        int t123 = maslov_index(l1, l2, l3);
        CHECK(maslov_index(l2, l1, l3) == -t123);
        CHECK(maslov_index(l1, l3, l2) == -t123);
        SymplecticMatrix m = testutil::random_symplectic(g, deg);
        auto push = [&](const LagrangianSubspace& l) {
            return LagrangianSubspace(l.basis * m.mat().transpose());
        };
        CHECK(maslov_index(push(l1), push(l2), push(l3)) == t123);
    }
    (void)n;
}

TEST_CASE("Minkowski reduction") {
    RMat id = RMat::Identity(2, 2);
    auto [r0, u0] = minkowski_reduce(id);
    CHECK((r0 - id).cwiseAbs().maxCoeff() == 0.0);
    CHECK((u0 - id).cwiseAbs().maxCoeff() == 0.0);

    RMat y(2, 2);
    y << 5, 4, 4, 5;
    auto [r, u] = minkowski_reduce(y);
    // reduced form determined by the exhaustive-search oracle below
    CHECK((u * y * u.transpose() - r).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(r(0, 0) <= r(1, 1));
    CHECK(2.0 * std::abs(r(0, 1)) <= r(0, 0) + 1e-12);
    CHECK(r(0, 1) >= 0.0);
    // oracle: exhaustive search over small GL(2,Z) words for the minimum of
    // the quadratic form; the reduced r00 must equal it
    double best = 1e100;
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
            if (a == 0 && b == 0) continue;
            RMat v(1, 2);
            v << a, b;
            best = std::min(best, (v * y * v.transpose())(0, 0));
        }
    CHECK(r(0, 0) == doctest::Approx(best).epsilon(1e-12));
    CHECK(r(0, 0) == doctest::Approx(2.0));
    CHECK(std::abs(r.determinant() - y.determinant()) < 1e-9);

    // n = 1: identity
    RMat y1(1, 1);
    y1 << 7.5;
    auto [r1, u1] = minkowski_reduce(y1);
    CHECK(r1(0, 0) == 7.5);
    CHECK(u1(0, 0) == 1.0);

    auto g = testutil::rng(28);
    for (int rep = 0; rep < 25; ++rep) {
        RMat base = testutil::random_sym(g, 2, 2.0);
        RMat yy = base * base.transpose() + RMat::Identity(2, 2) * 0.3;
        auto [rr, uu] = minkowski_reduce(yy);
        CHECK(rr(0, 0) <= rr(1, 1) * (1 + 1e-12));
        CHECK(2.0 * std::abs(rr(0, 1)) <= rr(0, 0) * (1 + 1e-12));
        CHECK(rr(0, 1) >= -1e-15);
        CHECK(std::abs(std::abs(uu.determinant()) - 1.0) < 1e-9);
    }
}

TEST_CASE("Siegel reduction") {
    // translation case
    CMat om(1, 1);
    om(0, 0) = cplx(3.0, 1.0);
    SiegelReduction red = siegel_reduce(SiegelPoint(om));
    CHECK(std::abs(red.reduced.omega(0, 0) - cplx(0.0, 1.0)) < 1e-12);
    // |Omega| < 1 forces the inversion
    CMat om2(1, 1);
    om2(0, 0) = cplx(0.0, 0.1);
    SiegelReduction red2 = siegel_reduce(SiegelPoint(om2));
    CHECK(std::abs(red2.reduced.omega(0, 0) - cplx(0.0, 10.0)) < 1e-12);
    // already reduced: identity
    CMat om3(1, 1);
    om3(0, 0) = cplx(0.25, 2.0);
    SiegelReduction red3 = siegel_reduce(SiegelPoint(om3));
    CHECK((red3.gamma.mat() - RMat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
    // consistency: reduced = gamma . input, and |x| <= 1/2, Y reduced
    auto g = testutil::rng(29);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 1 + rep % 2;
        SiegelPoint p = testutil::random_siegel(g, n, 2.0);
        SiegelReduction r = siegel_reduce(p);
        SiegelPoint check = act(r.gamma, p);
        CHECK((check.omega - r.reduced.omega).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(r.reduced.x().cwiseAbs().maxCoeff() <= 0.5 + 1e-9);
        double dflip = act(SymplecticMatrix::inversion(n), r.reduced).y().determinant();
        CHECK(dflip <= r.reduced.y().determinant() * (1.0 + 1e-9));
    }
}

TEST_CASE("Siegel volume exact values") {
    auto vol = [](int n) { return siegel_volume(n); };
    CHECK(vol(1) == SymbolicScalar::pi_half_pow(2, GaussianRational(Rational(1, 3))));
    CHECK(vol(2) == SymbolicScalar::pi_half_pow(6, GaussianRational(Rational(1, 270))));
    CHECK(vol(3) == SymbolicScalar::pi_half_pow(12, GaussianRational(Rational(1, 127575))));
    CHECK(vol(4) == SymbolicScalar::pi_half_pow(20, GaussianRational(Rational(1, 200930625))));
}
