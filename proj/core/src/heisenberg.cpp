#include "siegel/heisenberg.hpp"

namespace siegel {

namespace {

void check_shapes(const RatMat& l, const RatMat& m, const RatMat& k) {
    if (l.rows() != m.rows() || l.cols() != m.cols())
        throw structural_error("HeisenbergElement: lambda/mu shape mismatch");
    if (k.rows() != l.rows() || k.cols() != l.rows())
        throw structural_error("HeisenbergElement: kappa must be m x m");
}

} // namespace

HeisenbergElement::HeisenbergElement(RatMat l, RatMat m_, RatMat k, HeisLaw law_)
    : lambda(std::move(l)), mu(std::move(m_)), kappa(std::move(k)), law(law_) {
    check_shapes(lambda, mu, kappa);
    if (law == HeisLaw::Circle) {
        RatMat s = kappa + mu * lambda.transpose();
        if (!s.is_symmetric())
            throw structural_error("HeisenbergElement: kappa + mu t(lambda) not symmetric");
    } else {
        if (!kappa.is_symmetric())
            throw structural_error("HeisenbergElement: diamond kappa must be symmetric");
    }
}

HeisenbergElement HeisenbergElement::identity(int m, int n, HeisLaw law) {
    return HeisenbergElement(RatMat(m, n), RatMat(m, n), RatMat(m, m), law);
}

HeisenbergElement heis_mul(const HeisenbergElement& a, const HeisenbergElement& b) {
    if (a.law != b.law) throw structural_error("heis_mul: mixed coordinate laws");
    if (a.m() != b.m() || a.n() != b.n()) throw structural_error("heis_mul: shape mismatch");
    if (a.law == HeisLaw::Circle) {
        return HeisenbergElement(
            a.lambda + b.lambda, a.mu + b.mu,
            a.kappa + b.kappa + a.lambda * b.mu.transpose() - a.mu * b.lambda.transpose(),
            HeisLaw::Circle);
    }
    return HeisenbergElement(
        a.lambda + b.lambda, a.mu + b.mu,
        a.kappa + b.kappa + a.lambda * b.mu.transpose() + b.mu * a.lambda.transpose(),
        HeisLaw::Diamond);
}

HeisenbergElement heis_inverse(const HeisenbergElement& g) {
    if (g.law == HeisLaw::Circle) {
        return HeisenbergElement(-g.lambda, -g.mu,
                                 -g.kappa + g.lambda * g.mu.transpose() -
                                     g.mu * g.lambda.transpose(),
                                 HeisLaw::Circle);
    }
    return HeisenbergElement(-g.lambda, -g.mu,
                             -g.kappa + g.lambda * g.mu.transpose() +
                                 g.mu * g.lambda.transpose(),
                             HeisLaw::Diamond);
}

HeisenbergElement to_diamond(const HeisenbergElement& g) {
    if (g.law != HeisLaw::Circle) throw structural_error("to_diamond: expected circle coordinates");
    // [lambda, mu, kappa] names the circle element (lambda, mu, kappa - mu t(lambda)),
    // so the diamond coordinate is kappa_circle + mu t(lambda), which the circle
    // constraint makes symmetric.
    return HeisenbergElement(g.lambda, g.mu, g.kappa + g.mu * g.lambda.transpose(),
                             HeisLaw::Diamond);
}

HeisenbergElement to_circle(const HeisenbergElement& g) {
    if (g.law != HeisLaw::Diamond) throw structural_error("to_circle: expected diamond coordinates");
    return HeisenbergElement(g.lambda, g.mu, g.kappa - g.mu * g.lambda.transpose(),
                             HeisLaw::Circle);
}

RatMat embed_sp(const HeisenbergElement& g) {
    if (g.law != HeisLaw::Circle) throw structural_error("embed_sp: circle coordinates required");
    int m = g.m(), n = g.n(), s = m + n;
    RatMat e = RatMat::identity(2 * s);
    // rows/cols blocked (n, m, n, m)
    e.set_block(n, 0, g.lambda);                  // lambda
    e.set_block(0, n + s, g.mu.transpose());      // t(mu)
    e.set_block(n, s, g.mu);                      // mu
    e.set_block(n, n + s, g.kappa);               // kappa
    e.set_block(s, n + s, -g.lambda.transpose()); // -t(lambda)
    return e;
}

HeisenbergAlgebraElement::HeisenbergAlgebraElement(RatMat a, RatMat b, RatMat g)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)) {
    check_shapes(alpha, beta, gamma);
    if (!gamma.is_symmetric()) throw structural_error("HeisenbergAlgebraElement: gamma not symmetric");
}

RatMat HeisenbergAlgebraElement::matrix() const {
    int mm = m(), nn = n(), s = mm + nn;
    RatMat x(2 * s, 2 * s);
    x.set_block(nn, 0, alpha);
    x.set_block(0, nn + s, beta.transpose());
    x.set_block(nn, s, beta);
    x.set_block(nn, nn + s, gamma);
    x.set_block(s, nn + s, -alpha.transpose());
    return x;
}

HeisenbergAlgebraElement bracket(const HeisenbergAlgebraElement& x,
                                 const HeisenbergAlgebraElement& y) {
    if (x.m() != y.m() || x.n() != y.n()) throw structural_error("bracket: shape mismatch");
    RatMat zero(x.m(), x.n());
    RatMat g = x.alpha * y.beta.transpose() + y.beta * x.alpha.transpose() -
               x.beta * y.alpha.transpose() - y.alpha * x.beta.transpose();
    return HeisenbergAlgebraElement(zero, zero, g);
}

CoadjointFunctional::CoadjointFunctional(RatMat a_, RatMat b_, RatMat c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    check_shapes(a, b, c);
    if (!c.is_symmetric()) throw structural_error("CoadjointFunctional: c not symmetric");
}

CoadjointFunctional coadjoint(const HeisenbergElement& g, const CoadjointFunctional& f) {
    if (g.m() != f.a.rows() || g.n() != f.a.cols())
        throw structural_error("coadjoint: shape mismatch");
    return CoadjointFunctional(f.a + f.c * g.mu, f.b - f.c * g.lambda, f.c);
}

std::pair<SiegelPoint, CMat> jacobi_act(const SymplecticMatrix& m, const HeisenbergElement& g,
                                        const SiegelPoint& omega, const CMat& z) {
    SiegelPoint om2 = act(m, omega);
    CMat cd = m.c() * omega.omega + m.d().cast<cplx>();
    CMat shifted = z + to_rmat(g.lambda).cast<cplx>() * omega.omega + to_rmat(g.mu).cast<cplx>();
    return {om2, shifted * cd.inverse()};
}

JacobiElement jacobi_mul(const JacobiElement& a, const JacobiElement& b) {
    // (lambda~, mu~) = (lambda, mu) M'
    int n = a.m.degree(), mrows = a.g.m();
    RatMat lm(mrows, 2 * n);
    lm.set_block(0, 0, a.g.lambda);
    lm.set_block(0, n, a.g.mu);
    RatMat mprime = rat_from_rmat(b.m.mat());
    RatMat moved = lm * mprime;
    HeisenbergElement tilde(moved.block(0, 0, mrows, n), moved.block(0, n, mrows, n),
                            a.g.kappa, HeisLaw::Circle);
    return {a.m * b.m, heis_mul(tilde, b.g)};
}

} // namespace siegel
