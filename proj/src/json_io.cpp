#include "codent/json_io.hpp"

#include <fstream>

namespace codent::io {

namespace {

json bigint_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw ParseError("expected an integer or integer string");
}

} // namespace

json rational_to_json(const Rational& r) {
    return json::array({bigint_to_json(r.get_num()), bigint_to_json(r.get_den())});
}

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("rational must be a [num, den] pair");
    Rational r(bigint_from_json(j[0]), bigint_from_json(j[1]));
    if (r.get_den() == 0) throw ParseError("rational with zero denominator");
    r.canonicalize();
    return r;
}

json cyclo_to_json(const Cyclo8& c) {
    json out = json::array();
    for (int i = 0; i < 4; ++i) out.push_back(rational_to_json(c.coeff(i)));
    return out;
}

Cyclo8 cyclo_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError("cyclotomic value must be an array of four [num, den] pairs");
    return Cyclo8(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
                  rational_from_json(j[3]));
}

json matrix_to_json(const CMatrix& m) {
    json entries = json::array();
    for (const auto& e : m.entries()) entries.push_back(cyclo_to_json(e));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

CMatrix matrix_from_json(const json& j) {
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw ParseError("matrix entries length must be rows*cols");
    CMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = cyclo_from_json(entries[i * cols + c]);
    return m;
}

json ring_to_json(const RingSpec& spec) { return json{{"ks", spec.ks}}; }

RingSpec ring_from_json(const json& j) {
    return RingSpec::from_ks(j.at("ks").get<std::vector<long>>());
}

json genmatrix_to_json(const GenMatrix& g) {
    return json{{"modulus", g.modulus}, {"n", g.n}, {"rows", g.rows}};
}

GenMatrix genmatrix_from_json(const json& j) {
    GenMatrix g;
    g.modulus = j.at("modulus").get<int>();
    g.n = j.at("n").get<size_t>();
    g.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    g.validate();
    return g;
}

json poly_to_json(const SWEPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["exp"] = e;
        if (c.is_rational() && c.rational_part().get_den() == 1)
            term["coeff"] = bigint_to_json(c.rational_part().get_num());
        else
            term["coeff"] = cyclo_to_json(c);
        terms.push_back(std::move(term));
    }
    return json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

SWEPoly poly_from_json(const json& j) {
    SWEPoly p(j.at("nvars").get<size_t>());
    for (const auto& term : j.at("terms")) {
        ExpVec e = term.at("exp").get<ExpVec>();
        const json& c = term.at("coeff");
        Cyclo8 coeff;
        if (c.is_array())
            coeff = cyclo_from_json(c);
        else
            coeff = Cyclo8(Rational(bigint_from_json(c)));
        p.add_term(e, coeff);
    }
    return p;
}

json series_to_json(const RationalSeries& s) {
    json out = json::array();
    for (const auto& c : s.coeffs) {
        if (c.get_den() == 1)
            out.push_back(bigint_to_json(c.get_num()));
        else
            out.push_back(rational_to_json(c));
    }
    return out;
}

RationalSeries series_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("series must be a coefficient array");
    RationalSeries s;
    for (const auto& c : j) {
        if (c.is_array())
            s.coeffs.push_back(rational_from_json(c));
        else
            s.coeffs.push_back(Rational(bigint_from_json(c)));
    }
    return s;
}

json formula_to_json(const RationalFormula& f) {
    json num = json::array(), den = json::array();
    for (const auto& c : f.num) num.push_back(bigint_to_json(c));
    for (const auto& c : f.den) den.push_back(bigint_to_json(c));
    return json{{"num", std::move(num)}, {"den", std::move(den)}};
}

RationalFormula formula_from_json(const json& j) {
    RationalFormula f;
    for (const auto& c : j.at("num")) f.num.push_back(bigint_from_json(c));
    for (const auto& c : j.at("den")) f.den.push_back(bigint_from_json(c));
    if (f.den.empty() || f.den[0] == 0)
        throw ParseError("formula denominator must not vanish at t = 0");
    return f;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NotFound("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(1) << "\n";
}

} // namespace codent::io
