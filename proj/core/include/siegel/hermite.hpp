#pragma once

#include "siegel/multiindex.hpp"
#include "siegel/states.hpp"

namespace siegel {

struct LadderOp {
    bool create = true; // A^+ vs A^-
    int k = 0, a = 0;
};
using LadderWord = std::vector<LadderOp>;

// A^+_{ka} = (1/2)(d_{ka} - 4 pi xi_{ka}), A^-_{ka} = (1/2)(d_{ka} + 4 pi xi_{ka}).
GaussianPolynomialState ladder_plus(const GaussianPolynomialState& f, int k, int a);
GaussianPolynomialState ladder_minus(const GaussianPolynomialState& f, int k, int a);
GaussianPolynomialState ladder_apply(const LadderWord& word, const GaussianPolynomialState& f);

// f_J = (A^+)^J f_0 and the normalized h_J = (2 pi)^{-|J|/2} (J!)^{-1/2} f_J.
GaussianPolynomialState hermite_f(const MultiIndex& j);
GaussianPolynomialState hermite_h(const MultiIndex& j);
// P_J with h_J = P_J e^{-2 pi |xi|^2}.
SymPoly hermite_p(const MultiIndex& j);

// H_{ka} h_J - 8 pi (J_{ka} + 1/2) h_J, H = -d^2 + 16 pi^2 xi^2; zero iff the
// eigenrelation holds.
SymPoly hermite_operator_residual(const MultiIndex& j, int k, int a);

// Exact Hermite expansion of a state with Gaussian width 2 (the h_J basis):
// f = sum c_J h_J, finitely many terms.
std::map<MultiIndex, SymbolicScalar> hermite_expand(const GaussianPolynomialState& f);

} // namespace siegel
