#pragma once

#include "siegel/foundation.hpp"
#include "siegel/symplectic.hpp"

namespace siegel {

enum class HeisLaw { Circle, Diamond }; // coordinates of Eq-style (2.1) vs (2.3)

// (lambda, mu, kappa), lambda/mu m x n, kappa m x m with kappa + mu t(lambda)
// symmetric in circle coordinates.
struct HeisenbergElement {
    RatMat lambda, mu, kappa;
    HeisLaw law = HeisLaw::Circle;

    HeisenbergElement() = default;
    HeisenbergElement(RatMat l, RatMat m, RatMat k, HeisLaw law_ = HeisLaw::Circle);

    int m() const { return lambda.rows(); }
    int n() const { return lambda.cols(); }

    static HeisenbergElement identity(int m, int n, HeisLaw law = HeisLaw::Circle);
};

HeisenbergElement heis_mul(const HeisenbergElement& a, const HeisenbergElement& b);
HeisenbergElement heis_inverse(const HeisenbergElement& g);

// [lambda, mu, kappa] = (lambda, mu, kappa - mu t(lambda))
HeisenbergElement to_diamond(const HeisenbergElement& circle);
HeisenbergElement to_circle(const HeisenbergElement& diamond);

// Block-unipotent embedding into Sp(m+n, R) as a 2(m+n) square matrix.
RatMat embed_sp(const HeisenbergElement& g);

// Lie algebra element X(alpha, beta, gamma) in sp(m+n,R), gamma symmetric.
struct HeisenbergAlgebraElement {
    RatMat alpha, beta, gamma;
    HeisenbergAlgebraElement(RatMat a, RatMat b, RatMat g);
    int m() const { return alpha.rows(); }
    int n() const { return alpha.cols(); }
    RatMat matrix() const; // the 2(m+n) square realization
};

// Closed form [X(a,b,g), X(d,e,x)] = X(0, 0, a te + e ta - b td - d tb).
HeisenbergAlgebraElement bracket(const HeisenbergAlgebraElement& x,
                                 const HeisenbergAlgebraElement& y);

struct CoadjointFunctional {
    RatMat a, b, c; // c symmetric
    CoadjointFunctional(RatMat a_, RatMat b_, RatMat c_);
};

// Ad*(g) F(a,b,c) = F(a + c mu, b - c lambda, c).
CoadjointFunctional coadjoint(const HeisenbergElement& g, const CoadjointFunctional& f);

// Jacobi group action on H_n x C^(m,n):
// (M, g) . (Omega, Z) = (M.Omega, (Z + lambda Omega + mu)(C Omega + D)^{-1}).
std::pair<SiegelPoint, CMat> jacobi_act(const SymplecticMatrix& m, const HeisenbergElement& g,
                                        const SiegelPoint& omega, const CMat& z);

// Multiplication in the Jacobi group Sp(n,R) x| H_R^(n,m); the Heisenberg
// parts must be in circle coordinates.
struct JacobiElement {
    SymplecticMatrix m;
    HeisenbergElement g;
};
JacobiElement jacobi_mul(const JacobiElement& a, const JacobiElement& b);

} // namespace siegel
