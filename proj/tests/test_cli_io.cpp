#include <doctest.h>

#include "siegel/json_io.hpp"
#include "test_util.hpp"

using namespace siegel;

TEST_CASE("JSON scalar and matrix round trips") {
    cplx z(1.25, -0.5);
    CHECK(decode_complex(encode_complex(z)) == z);

    auto g = testutil::rng(111);
    CMat m = CMat::Random(2, 3);
    CMat back = decode_cmat(encode_cmat(m));
    CHECK((m - back).cwiseAbs().maxCoeff() == 0.0);

    Rational q(-7, 12);
    CHECK(decode_rational(encode_rational(q)) == q);

    RatMat rm = testutil::random_rat_mat(g, 2, 2, 6);
    CHECK(decode_ratmat(encode_ratmat(rm)) == rm);
}

TEST_CASE("polynomial JSON round trip") {
    RatPoly p(2); // m = 2, n = 1
    RatPoly::Expo e1(2, 0), e2(2, 0);
    e1[0] = 2;
    e2[0] = 1;
    e2[1] = 3;
    p.add_term(e1, GaussianRational(Rational(3, 4), Rational(-1, 2)));
    p.add_term(e2, GaussianRational(Rational(5)));
    json j = encode_polynomial(p, 2, 1);
    RatPoly back = decode_polynomial(j, 2, 1);
    CHECK(back == p);
}

TEST_CASE("Heisenberg element JSON round trip") {
    auto g = testutil::rng(112);
    RatMat lam = testutil::random_rat_mat(g, 2, 1), mu = testutil::random_rat_mat(g, 2, 1);
    RatMat sym = testutil::random_rat_mat(g, 2, 2);
    sym = Rational(1, 2) * (sym + sym.transpose());
    HeisenbergElement h(lam, mu, sym - mu * lam.transpose(), HeisLaw::Circle);
    HeisenbergElement back = decode_heisenberg(encode_heisenberg(h));
    CHECK(back.lambda == h.lambda);
    CHECK(back.mu == h.mu);
    CHECK(back.kappa == h.kappa);
    CHECK(back.law == h.law);
}

TEST_CASE("report shape") {
    Report rep;
    rep.command = "theta eval";
    rep.residuals["x"] = 1e-12;
    rep.tail_bounds["value"] = 1e-14;
    json j = rep.to_json();
    CHECK(j["status"] == "pass");
    CHECK(j["command"] == "theta eval");
    rep.pass = false;
    CHECK(rep.to_json()["status"] == "fail");
}
