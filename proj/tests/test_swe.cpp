#include <doctest.h>

#include <random>

#include "codent/catalog.hpp"
#include "codent/generators.hpp"
#include "codent/swe.hpp"

using namespace codent;

namespace {

RingSpec spec() { return catalog::ring_f2_z4(); }

CodeSet zero_code(int modulus, size_t n) {
    GenMatrix g;
    g.modulus = modulus;
    g.n = n;
    g.rows = {std::vector<int>(n, 0)};
    return enumerate_code(g);
}

SWEPoly swe_e8_q8() {
    static CodeSet e8 = enumerate_code(catalog::code_e8());
    static CodeSet q8 = enumerate_code(catalog::code_q8());
    return swe({&e8, &q8}, spec());
}

} // namespace

TEST_CASE("the zero pair gives a single monomial") {
    CodeSet z2 = zero_code(2, 5), z4 = zero_code(4, 5);
    SWEPoly p = swe({&z2, &z4}, spec());
    CHECK(p.term_count() == 1);
    CHECK(p.coeff(parse_monomial("a5", 6)) == Cyclo8(1));
}

TEST_CASE("degree-8 enumerators equal the reference polynomials") {
    SWEPoly weq = swe_e8_q8();
    CHECK(weq == catalog::ref_swe_e8_q8());
    CHECK(weq.term_count() == 38);
    CHECK(weq.coeff(parse_monomial("a8", 6)) == Cyclo8(1));
    CHECK(weq.coeff(parse_monomial("b8", 6)) == Cyclo8(32));
    CHECK(weq.coeff(parse_monomial("a3b4c", 6)) == Cyclo8(96));
    CHECK(weq.coeff(parse_monomial("ab2cd2e2", 6)) == Cyclo8(576));

    CodeSet e8 = enumerate_code(catalog::code_e8());
    CodeSet k8 = enumerate_code(catalog::code_k8());
    SWEPoly wek = swe({&e8, &k8}, spec());
    CHECK(wek == catalog::ref_swe_e8_k8());
    CHECK(wek.coeff(parse_monomial("b8", 6)) == Cyclo8(128));
    CHECK(wek.coeff(parse_monomial("e8", 6)) == Cyclo8(128));
    CHECK(wek.coeff(parse_monomial("b4e4", 6)) == Cyclo8(1792));
    CHECK(wek.coeff(parse_monomial("a6c2", 6)) == Cyclo8(28));
}

TEST_CASE("enumerators are homogeneous with integer coefficients and full mass") {
    SWEPoly weq = swe_e8_q8();
    CHECK(weq.is_homogeneous());
    CHECK(weq.degree() == 8);
    CHECK(weq.has_integer_coeffs());
    std::vector<Cyclo8> ones(6, Cyclo8(1));
    CHECK(evaluate(weq, ones) == Cyclo8(4096)); // 16 * 256

    CodeSet e8 = enumerate_code(catalog::code_e8());
    CodeSet k8 = enumerate_code(catalog::code_k8());
    CHECK(evaluate(swe({&e8, &k8}, spec()), ones) == Cyclo8(4096));
}

TEST_CASE("swe output does not depend on the worker count") {
    CodeSet e8 = enumerate_code(catalog::code_e8());
    CodeSet q8 = enumerate_code(catalog::code_q8());
    SweOptions one, four;
    one.threads = 1;
    four.threads = 4;
    CHECK(swe({&e8, &q8}, spec(), one) == swe({&e8, &q8}, spec(), four));
}

TEST_CASE("swe validation") {
    CodeSet e8 = enumerate_code(catalog::code_e8());
    CodeSet q8 = enumerate_code(catalog::code_q8());
    CHECK_THROWS_AS(swe({&e8}, spec()), DomainError);          // arity
    CHECK_THROWS_AS(swe({&q8, &q8}, spec()), DomainError);     // modulus mismatch
    CodeSet z2 = zero_code(2, 5);
    CHECK_THROWS_AS(swe({&z2, &q8}, spec()), DomainError);     // length mismatch
    SweOptions tight;
    tight.pairs_limit = 10;
    CHECK_THROWS_AS(swe({&e8, &q8}, spec(), tight), EnumerationOverflow);
}

TEST_CASE("action basics") {
    SWEPoly weq = swe_e8_q8();
    CHECK(act(CMatrix::identity(6), weq) == weq);

    // scaling one variable scales its pure power
    CMatrix d = CMatrix::identity(6);
    d.at(0, 0) = Cyclo8(2);
    SWEPoly a8 = SWEPoly::monomial(6, parse_monomial("a8", 6), Cyclo8(1));
    SWEPoly scaled = act(d, a8);
    CHECK(scaled.term_count() == 1);
    CHECK(scaled.coeff(parse_monomial("a8", 6)) == Cyclo8(256));

    CHECK_THROWS_AS(act(CMatrix::identity(5), weq), ShapeError);
}

TEST_CASE("action composition order: act(A, act(B, f)) = act(B*A, f)") {
    std::vector<CMatrix> h = catalog::h_generators();
    SWEPoly f(6);
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> small(-2, 2), expd(0, 2);
    for (int t = 0; t < 6; ++t) {
        ExpVec e(6);
        for (auto& x : e) x = static_cast<uint8_t>(expd(rng));
        f.add_term(e, Cyclo8(small(rng), small(rng), small(rng), small(rng)));
    }
    for (const CMatrix& a : {h[0], h[1], h[3]})
        for (const CMatrix& b : {h[0], h[2], h[4]}) CHECK(act(a, act(b, f)) == act(b * a, f));
}

TEST_CASE("act and evaluate are compatible, including the generic dense path") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> small(-2, 2), expd(0, 2);
    SWEPoly f(3);
    for (int t = 0; t < 5; ++t) {
        ExpVec e(3);
        for (auto& x : e) x = static_cast<uint8_t>(expd(rng));
        f.add_term(e, Cyclo8(small(rng), small(rng), small(rng), small(rng)));
    }
    // a dense matrix with denominator 3 forces the generic expansion
    CMatrix m(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            m.at(i, j) = Cyclo8(make_rational(small(rng), 3), make_rational(small(rng), 3),
                                Rational(0), Rational(0));
    SWEPoly mf = act(m, f);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Cyclo8> v(3), mv(3);
        for (auto& x : v) x = Cyclo8(small(rng), small(rng), small(rng), small(rng));
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) mv[i] += m.at(i, j) * v[j];
        CHECK(evaluate(mf, v) == evaluate(f, mv));
    }
}

TEST_CASE("invariance under the symmetrized generators") {
    SWEPoly weq = swe_e8_q8();
    std::vector<CMatrix> h = catalog::h_generators();
    CHECK(is_invariant(weq, h));
    CHECK(act(h[4], weq) == weq); // the diagonal generator alone

    // a bare monomial is not invariant under the dense generator
    SWEPoly a8 = SWEPoly::monomial(6, parse_monomial("a8", 6), Cyclo8(1));
    CHECK_FALSE(is_invariant(a8, {h[0]}));
    CHECK(act(h[0], a8).term_count() > 1);
}

TEST_CASE("coefficient extraction") {
    CodeSet e8 = enumerate_code(catalog::code_e8());
    CodeSet k8 = enumerate_code(catalog::code_k8());
    SWEPoly weq = swe_e8_q8();
    SWEPoly wek = swe({&e8, &k8}, spec());
    CMatrix m = coefficient_matrix({weq, wek}, {parse_monomial("a8", 6), parse_monomial("b8", 6)});
    CHECK(m.at(0, 0) == Cyclo8(1));
    CHECK(m.at(0, 1) == Cyclo8(32));
    CHECK(m.at(1, 0) == Cyclo8(1));
    CHECK(m.at(1, 1) == Cyclo8(128));
    CHECK(m.det() == Cyclo8(96));

    SWEPoly a5 = SWEPoly::monomial(6, parse_monomial("a5", 6), Cyclo8(1));
    CMatrix single = coefficient_matrix({a5}, {parse_monomial("a5", 6)});
    CHECK(single.at(0, 0).is_one());
}

TEST_CASE("multiplicativity against a padded direct sum") {
    // swe(C1 + Z, C2 + Z') = swe(C1, C2) * a^m for zero codes of length m
    CodeSet e8 = enumerate_code(catalog::code_e8());
    CodeSet q8 = enumerate_code(catalog::code_q8());
    GenMatrix z2;
    z2.modulus = 2;
    z2.n = 3;
    z2.rows = {{0, 0, 0}};
    GenMatrix z4 = z2;
    z4.modulus = 4;
    CodeSet ce = enumerate_code(direct_sum(catalog::code_e8(), z2));
    CodeSet cq = enumerate_code(direct_sum(catalog::code_q8(), z4));
    SWEPoly lhs = swe({&ce, &cq}, spec());
    SWEPoly rhs = swe({&e8, &q8}, spec()) *
                  SWEPoly::monomial(6, parse_monomial("a3", 6), Cyclo8(1));
    CHECK(lhs == rhs);
}

TEST_CASE("long codes take the generic accumulation path") {
    // length 35 exceeds the packed-key window; expected enumerator by hand:
    // the Z4 span of the all-ones row is {0,1,2,3}*ones, so a^35 + 2b^35 + c^35
    RingSpec s1 = RingSpec::from_ks({2});
    GenMatrix rep;
    rep.modulus = 4;
    rep.n = 35;
    rep.rows = {std::vector<int>(35, 1)};
    CodeSet c = enumerate_code(rep);
    CHECK(c.size() == 4);
    SWEPoly p = swe({&c}, s1);
    CHECK(p.term_count() == 3);
    CHECK(p.coeff(parse_monomial("a35", 3)) == Cyclo8(1));
    CHECK(p.coeff(parse_monomial("b35", 3)) == Cyclo8(2));
    CHECK(p.coeff(parse_monomial("c35", 3)) == Cyclo8(1));
}

TEST_CASE("monomial text round-trips") {
    ExpVec e = parse_monomial("ac3d3f9", 6);
    CHECK(e == ExpVec{1, 0, 3, 3, 0, 9});
    CHECK(parse_monomial("a^2*c^2*d^4*f^8", 6) == ExpVec{2, 0, 2, 4, 0, 8});
    CHECK(monomial_text(e) == "a*c^3*d^3*f^9");
    CHECK(parse_monomial(monomial_text(e), 6) == e);
    CHECK_THROWS_AS(parse_monomial("g2", 6), ParseError);
    CHECK_THROWS_AS(parse_monomial("", 6), ParseError);
}

TEST_CASE("polynomial algebra") {
    SWEPoly weq = swe_e8_q8();
    SWEPoly sq = weq.pow(2);
    CHECK(sq.degree() == 16);
    CHECK(sq.is_homogeneous());
    std::vector<Cyclo8> ones(6, Cyclo8(1));
    CHECK(evaluate(sq, ones) == Cyclo8(4096L * 4096L));
    CHECK(weq.pow(0) == SWEPoly::monomial(6, ExpVec(6, 0), Cyclo8(1)));
    CHECK((weq + weq).coeff(parse_monomial("a8", 6)) == Cyclo8(2));
}
