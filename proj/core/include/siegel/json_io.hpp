#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "siegel/foundation.hpp"
#include "siegel/heisenberg.hpp"
#include "siegel/states.hpp"

namespace siegel {

using json = nlohmann::json;

// complex scalar as [re, im]
json encode_complex(cplx z);
cplx decode_complex(const json& j);

// matrix as row-major nested arrays of scalars
json encode_cmat(const CMat& m);
CMat decode_cmat(const json& j);
json encode_rmat(const RMat& m);
RMat decode_rmat(const json& j);

// rational as {"num": string, "den": string}
json encode_rational(const Rational& q);
Rational decode_rational(const json& j);
json encode_ratmat(const RatMat& m);
RatMat decode_ratmat(const json& j);

// polynomial: list of {"coef": [num,den,num_i,den_i], "exps": [[k,j,e],...]}
json encode_polynomial(const RatPoly& p, int m, int n);
RatPoly decode_polynomial(const json& j, int m, int n);

// {"lambda": ..., "mu": ..., "kappa": ..., "law": "circle"|"diamond"}
json encode_heisenberg(const HeisenbergElement& g);
HeisenbergElement decode_heisenberg(const json& j);

struct Report {
    std::string command;
    json inputs = json::object();
    json values = json::object();
    std::map<std::string, double> residuals;
    std::map<std::string, double> tail_bounds;
    std::map<std::string, double> tolerances;
    bool pass = true;
    long seed = 0;

    json to_json() const;
};

} // namespace siegel
