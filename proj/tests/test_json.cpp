#include <doctest.h>

#include "codent/catalog.hpp"
#include "codent/json_io.hpp"

using namespace codent;
using nlohmann::json;

TEST_CASE("cyclotomic values round-trip") {
    Cyclo8 v(make_rational(-3, 4), Rational(2), make_rational(1, 7), Rational(0));
    CHECK(io::cyclo_from_json(io::cyclo_to_json(v)) == v);
    json j = io::cyclo_to_json(v);
    CHECK(j.is_array());
    CHECK(j.size() == 4);
    CHECK(j[0][0].get<long>() == -3);
    CHECK(j[0][1].get<long>() == 4);
    CHECK_THROWS_AS(io::cyclo_from_json(json::array({1, 2})), ParseError);
    CHECK_THROWS_AS(io::rational_from_json(json::array({1, 0})), ParseError);
}

TEST_CASE("matrices round-trip and keys survive") {
    CMatrix m = catalog::ref_phi_chi();
    CMatrix back = io::matrix_from_json(io::matrix_to_json(m));
    CHECK(back == m);
    CHECK(back.canonical_key() == m.canonical_key());
    json bad = io::matrix_to_json(m);
    bad["entries"].erase(0);
    CHECK_THROWS_AS(io::matrix_from_json(bad), ParseError);
}

TEST_CASE("ring specs and generator matrices round-trip") {
    RingSpec spec = io::ring_from_json(json{{"ks", {1, 2}}});
    CHECK(spec.alphas == std::vector<long>{1, 2});
    CHECK(io::ring_to_json(spec) == json{{"ks", {1, 2}}});

    GenMatrix g = catalog::code_q8();
    GenMatrix back = io::genmatrix_from_json(io::genmatrix_to_json(g));
    CHECK(back.modulus == 4);
    CHECK(back.rows == g.rows);
}

TEST_CASE("polynomials round-trip, integer and cyclotomic coefficients") {
    SWEPoly p = catalog::ref_swe_e8_q8();
    SWEPoly back = io::poly_from_json(io::poly_to_json(p));
    CHECK(back == p);
    // integer coefficients serialize as plain numbers
    json j = io::poly_to_json(p);
    CHECK(j["terms"][0]["coeff"].is_number_integer());

    SWEPoly q(2);
    q.add_term({1, 1}, Cyclo8(0, 1, 0, -1));
    json jq = io::poly_to_json(q);
    CHECK(jq["terms"][0]["coeff"].is_array());
    CHECK(io::poly_from_json(jq) == q);
}

TEST_CASE("series and formulas round-trip") {
    RationalSeries s;
    s.coeffs = {Rational(1), Rational(0), make_rational(3, 2)};
    RationalSeries back = io::series_from_json(io::series_to_json(s));
    CHECK(back == s);
    json js = io::series_to_json(s);
    CHECK(js[0].is_number_integer());
    CHECK(js[2].is_array());

    RationalFormula f = catalog::molien_formula_h();
    RationalFormula fb = io::formula_from_json(io::formula_to_json(f));
    CHECK(fb.num == f.num);
    CHECK(fb.den == f.den);
}

TEST_CASE("file helpers") {
    CHECK_THROWS_AS(io::load_json_file("/nonexistent/path.json"), NotFound);
}
