#include "siegel/json_io.hpp"

namespace siegel {

json encode_complex(cplx z) { return json::array({z.real(), z.imag()}); }

cplx decode_complex(const json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (!j.is_array() || j.size() != 2)
        throw structural_error("decode_complex: expected [re, im]");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json encode_cmat(const CMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(encode_complex(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

CMat decode_cmat(const json& j) {
    if (!j.is_array() || j.empty()) throw structural_error("decode_cmat: expected nested arrays");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    CMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw structural_error("decode_cmat: ragged rows");
        for (int k = 0; k < cols; ++k) m(i, k) = decode_complex(j[i][k]);
    }
    return m;
}

json encode_rmat(const RMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(row);
    }
    return rows;
}

RMat decode_rmat(const json& j) {
    if (!j.is_array() || j.empty()) throw structural_error("decode_rmat: expected nested arrays");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    RMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
    return m;
}

json encode_rational(const Rational& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational decode_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (!j.contains("num") || !j.contains("den"))
        throw structural_error("decode_rational: expected {num, den}");
    Rational q(BigInt(j["num"].get<std::string>()), BigInt(j["den"].get<std::string>()));
    q.canonicalize();
    return q;
}

json encode_ratmat(const RatMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(encode_rational(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

RatMat decode_ratmat(const json& j) {
    if (!j.is_array() || j.empty()) throw structural_error("decode_ratmat: expected nested arrays");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) m(i, k) = decode_rational(j[i][k]);
    return m;
}

json encode_polynomial(const RatPoly& p, int m, int n) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exps = json::array();
        for (int k = 0; k < m; ++k)
            for (int j2 = 0; j2 < n; ++j2) {
                int ex = e[static_cast<size_t>(k * n + j2)];
                if (ex > 0) exps.push_back(json::array({k + 1, j2 + 1, ex}));
            }
        terms.push_back(json{{"coef", json::array({c.re.get_num().get_str(), c.re.get_den().get_str(),
                                                   c.im.get_num().get_str(), c.im.get_den().get_str()})},
                             {"exps", exps}});
    }
    return terms;
}

RatPoly decode_polynomial(const json& j, int m, int n) {
    RatPoly p(m * n);
    for (const auto& t : j) {
        const auto& c = t.at("coef");
        GaussianRational coef(Rational(BigInt(c[0].get<std::string>()), BigInt(c[1].get<std::string>())),
                              Rational(BigInt(c[2].get<std::string>()), BigInt(c[3].get<std::string>())));
        coef.re.canonicalize();
        coef.im.canonicalize();
        RatPoly::Expo e(static_cast<size_t>(m) * n, 0);
        for (const auto& me : t.at("exps")) {
            int k = me[0].get<int>() - 1, j2 = me[1].get<int>() - 1, ex = me[2].get<int>();
            if (k < 0 || k >= m || j2 < 0 || j2 >= n)
                throw structural_error("decode_polynomial: exponent index out of range");
            e[static_cast<size_t>(k * n + j2)] = static_cast<std::uint16_t>(ex);
        }
        p.add_term(e, coef);
    }
    return p;
}

json encode_heisenberg(const HeisenbergElement& g) {
    return json{{"lambda", encode_ratmat(g.lambda)},
                {"mu", encode_ratmat(g.mu)},
                {"kappa", encode_ratmat(g.kappa)},
                {"law", g.law == HeisLaw::Circle ? "circle" : "diamond"}};
}

HeisenbergElement decode_heisenberg(const json& j) {
    HeisLaw law = HeisLaw::Circle;
    if (j.contains("law")) {
        std::string s = j["law"].get<std::string>();
        if (s == "diamond")
            law = HeisLaw::Diamond;
        else if (s != "circle")
            throw structural_error("decode_heisenberg: law must be circle or diamond");
    }
    return HeisenbergElement(decode_ratmat(j.at("lambda")), decode_ratmat(j.at("mu")),
                             decode_ratmat(j.at("kappa")), law);
}

json Report::to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["values"] = values;
    j["residuals"] = residuals;
    j["tail_bounds"] = tail_bounds;
    j["tolerances"] = tolerances;
    j["status"] = pass ? "pass" : "fail";
    j["seed"] = seed;
    return j;
}

} // namespace siegel
