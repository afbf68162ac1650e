#include "codent/catalog.hpp"

#include "codent/generators.hpp"

namespace codent::catalog {

RingSpec ring_f2_z4() { return RingSpec::from_ks({1, 2}); }

IntMatrix u1() { return {{-1, -1}, {0, -1}}; }
IntMatrix u2() { return {{-1, -1}, {-2, -1}}; }

RatMatrix s1() {
    return {{Rational(1), Rational(1)}, {Rational(1), make_rational(1, 2)}};
}
RatMatrix s2() {
    return {{Rational(0), Rational(0)}, {Rational(0), make_rational(1, 2)}};
}

const char* const kGeneratorNames[6] = {"chi", "xi_u1", "xi_u2", "eta_s1", "eta_s2", "zeta8"};

std::vector<CMatrix> g_generators() {
    RingSpec spec = ring_f2_z4();
    return {build_chi(spec),      build_xi(u1(), spec), build_xi(u2(), spec),
            build_eta(s1(), spec), build_eta(s2(), spec), build_zeta(spec.r_size())};
}

std::vector<CMatrix> h_generators() {
    RingSpec spec = ring_f2_z4();
    std::vector<CMatrix> out;
    out.reserve(6);
    for (const CMatrix& g : g_generators()) out.push_back(symmetrize(g, spec));
    return out;
}

namespace {

// entry s3*z^3/4 + s1*z/4
Cyclo8 quarter(int s3, int s1) {
    return Cyclo8(Rational(0), make_rational(s1, 4), Rational(0), make_rational(s3, 4));
}

CMatrix perm_matrix(size_t n, const int cols[], const Cyclo8& value) {
    CMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, static_cast<size_t>(cols[i]) - 1) = value;
    return m;
}

CMatrix diag_matrix(const std::vector<Cyclo8>& d) {
    CMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Cyclo8 zpow(int k) { return Cyclo8::root_of_unity(k); }

} // namespace

CMatrix ref_chi() {
    // sign pairs (z^3 coefficient, z coefficient), each |1/4|
    static const int signs[8][8][2] = {
        {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}},
        {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}, {1, 1}, {1, -1}, {-1, -1}, {-1, 1}},
        {{1, 1}, {-1, -1}, {1, 1}, {-1, -1}, {1, 1}, {-1, -1}, {1, 1}, {-1, -1}},
        {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}},
        {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}},
        {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}, {-1, -1}, {-1, 1}, {1, 1}, {1, -1}},
        {{1, 1}, {-1, -1}, {1, 1}, {-1, -1}, {-1, -1}, {1, 1}, {-1, -1}, {1, 1}},
        {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
    CMatrix m(8, 8);
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) m.at(i, j) = quarter(signs[i][j][0], signs[i][j][1]);
    return m;
}

CMatrix ref_xi_u1() {
    static const int cols[8] = {1, 8, 3, 6, 5, 4, 7, 2};
    return perm_matrix(8, cols, Cyclo8(1));
}

CMatrix ref_xi_u2() {
    static const int cols[8] = {1, 8, 3, 6, 7, 2, 5, 4};
    return perm_matrix(8, cols, zpow(2));
}

CMatrix ref_eta_s1() {
    return diag_matrix({Cyclo8(1), zpow(1), Cyclo8(-1), zpow(1), zpow(2), -zpow(3), -zpow(2),
                        -zpow(3)});
}

CMatrix ref_eta_s2() {
    return diag_matrix(
        {Cyclo8(1), zpow(1), Cyclo8(-1), zpow(1), Cyclo8(1), zpow(1), Cyclo8(-1), zpow(1)});
}

CMatrix ref_zeta8() { return diag_matrix(std::vector<Cyclo8>(8, zpow(1))); }

CMatrix ref_phi_chi() {
    // multiples of (z^3 + z)/4
    static const int mult[6][6] = {{1, 2, 1, 1, 2, 1},   {1, 0, -1, 1, 0, -1},
                                   {1, -2, 1, 1, -2, 1}, {1, 2, 1, -1, -2, -1},
                                   {1, 0, -1, -1, 0, 1}, {1, -2, 1, -1, 2, -1}};
    CMatrix m(6, 6);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) m.at(i, j) = quarter(mult[i][j], mult[i][j]);
    return m;
}

CMatrix ref_phi_xi_u1() {
    static const int cols[6] = {1, 5, 3, 4, 2, 6};
    return perm_matrix(6, cols, Cyclo8(1));
}

CMatrix ref_phi_xi_u2() {
    static const int cols[6] = {1, 5, 3, 6, 2, 4};
    return perm_matrix(6, cols, zpow(2));
}

CMatrix ref_phi_eta_s1() {
    return diag_matrix({Cyclo8(1), zpow(1), Cyclo8(-1), zpow(2), -zpow(3), -zpow(2)});
}

CMatrix ref_phi_eta_s2() {
    return diag_matrix({Cyclo8(1), zpow(1), Cyclo8(-1), Cyclo8(1), zpow(1), Cyclo8(-1)});
}

CMatrix ref_phi_zeta8() { return diag_matrix(std::vector<Cyclo8>(6, zpow(1))); }

GenMatrix code_e8() {
    GenMatrix g;
    g.modulus = 2;
    g.n = 8;
    g.rows = {{1, 1, 1, 1, 0, 0, 0, 0},
              {0, 0, 1, 1, 1, 1, 0, 0},
              {0, 0, 0, 0, 1, 1, 1, 1},
              {1, 0, 1, 0, 1, 0, 1, 0}};
    return g;
}

GenMatrix code_q8() {
    GenMatrix g;
    g.modulus = 4;
    g.n = 8;
    g.rows = {{0, 0, 1, 1, 0, 2, 1, 3},
              {0, 0, 0, 2, 1, 3, 1, 1},
              {1, 1, 0, 2, 0, 0, 1, 3},
              {0, 2, 0, 2, 0, 2, 0, 2},
              {0, 0, 0, 0, 0, 0, 2, 2}};
    return g;
}

GenMatrix code_k8() {
    GenMatrix g;
    g.modulus = 4;
    g.n = 8;
    g.rows.push_back(std::vector<int>(8, 1));
    for (size_t i = 1; i < 7; ++i) {
        std::vector<int> row(8, 0);
        row[i] = 2;
        row[7] = 2;
        g.rows.push_back(std::move(row));
    }
    return g;
}

GenMatrix code_d16() {
    GenMatrix g;
    g.modulus = 2;
    g.n = 16;
    for (size_t i = 0; i < 7; ++i) {
        std::vector<int> row(16, 0);
        for (size_t j = 0; j < 4; ++j) row[2 * i + j] = 1;
        g.rows.push_back(std::move(row));
    }
    std::vector<int> alt(16, 0);
    for (size_t j = 0; j < 16; j += 2) alt[j] = 1;
    g.rows.push_back(std::move(alt));
    return g;
}

GenMatrix code_k16() {
    GenMatrix g;
    g.modulus = 4;
    g.n = 16;
    g.rows.push_back(std::vector<int>(16, 1));
    for (size_t i = 1; i < 15; ++i) {
        std::vector<int> row(16, 0);
        row[i] = 2;
        row[15] = 2;
        g.rows.push_back(std::move(row));
    }
    return g;
}

namespace {

struct RefTerm {
    long coeff;
    uint8_t e[6];
};

SWEPoly from_table(const RefTerm* terms, size_t count) {
    SWEPoly p(6);
    for (size_t i = 0; i < count; ++i)
        p.add_term(ExpVec(terms[i].e, terms[i].e + 6), Cyclo8(terms[i].coeff));
    return p;
}

// W(E8, Q8): 38 terms, coefficient mass 4096
const RefTerm kSweE8Q8[] = {
    {1, {8, 0, 0, 0, 0, 0}},   {32, {0, 8, 0, 0, 0, 0}},  {96, {3, 4, 1, 0, 0, 0}},
    {4, {6, 0, 2, 0, 0, 0}},   {96, {1, 4, 3, 0, 0, 0}},  {22, {4, 0, 4, 0, 0, 0}},
    {4, {2, 0, 6, 0, 0, 0}},   {1, {0, 0, 8, 0, 0, 0}},   {14, {4, 0, 0, 4, 0, 0}},
    {12, {2, 0, 2, 4, 0, 0}},  {14, {0, 0, 4, 4, 0, 0}},  {1, {0, 0, 0, 8, 0, 0}},
    {576, {1, 2, 1, 2, 2, 0}}, {448, {0, 4, 0, 0, 4, 0}}, {96, {3, 0, 1, 0, 4, 0}},
    {96, {1, 0, 3, 0, 4, 0}},  {32, {0, 0, 0, 0, 8, 0}},  {96, {0, 4, 0, 3, 0, 1}},
    {32, {3, 0, 1, 3, 0, 1}},  {32, {1, 0, 3, 3, 0, 1}},  {576, {2, 2, 0, 1, 2, 1}},
    {576, {0, 2, 2, 1, 2, 1}}, {96, {0, 0, 0, 3, 4, 1}},  {12, {4, 0, 0, 2, 0, 2}},
    {216, {2, 0, 2, 2, 0, 2}}, {12, {0, 0, 4, 2, 0, 2}},  {4, {0, 0, 0, 6, 0, 2}},
    {576, {1, 2, 1, 0, 2, 2}}, {96, {0, 4, 0, 1, 0, 3}},  {32, {3, 0, 1, 1, 0, 3}},
    {32, {1, 0, 3, 1, 0, 3}},  {96, {0, 0, 0, 1, 4, 3}},  {14, {4, 0, 0, 0, 0, 4}},
    {12, {2, 0, 2, 0, 0, 4}},  {14, {0, 0, 4, 0, 0, 4}},  {22, {0, 0, 0, 4, 0, 4}},
    {4, {0, 0, 0, 2, 0, 6}},   {1, {0, 0, 0, 0, 0, 8}},
};

// W(E8, K8): 26 terms, coefficient mass 4096
const RefTerm kSweE8K8[] = {
    {1, {8, 0, 0, 0, 0, 0}},    {128, {0, 8, 0, 0, 0, 0}}, {28, {6, 0, 2, 0, 0, 0}},
    {70, {4, 0, 4, 0, 0, 0}},   {28, {2, 0, 6, 0, 0, 0}},  {1, {0, 0, 8, 0, 0, 0}},
    {14, {4, 0, 0, 4, 0, 0}},   {84, {2, 0, 2, 4, 0, 0}},  {14, {0, 0, 4, 4, 0, 0}},
    {1, {0, 0, 0, 8, 0, 0}},    {1792, {0, 4, 0, 0, 4, 0}}, {128, {0, 0, 0, 0, 8, 0}},
    {224, {3, 0, 1, 3, 0, 1}},  {224, {1, 0, 3, 3, 0, 1}}, {84, {4, 0, 0, 2, 0, 2}},
    {504, {2, 0, 2, 2, 0, 2}},  {84, {0, 0, 4, 2, 0, 2}},  {28, {0, 0, 0, 6, 0, 2}},
    {224, {3, 0, 1, 1, 0, 3}},  {224, {1, 0, 3, 1, 0, 3}}, {14, {4, 0, 0, 0, 0, 4}},
    {84, {2, 0, 2, 0, 0, 4}},   {14, {0, 0, 4, 0, 0, 4}},  {70, {0, 0, 0, 4, 0, 4}},
    {28, {0, 0, 0, 2, 0, 6}},   {1, {0, 0, 0, 0, 0, 8}},
};

} // namespace

SWEPoly ref_swe_e8_q8() { return from_table(kSweE8Q8, std::size(kSweE8Q8)); }
SWEPoly ref_swe_e8_k8() { return from_table(kSweE8K8, std::size(kSweE8K8)); }

RationalFormula molien_formula_h() {
    RationalFormula f;
    f.num.assign(57, 0);
    f.num[0] = 1;
    f.num[8] = -1;
    f.num[16] = 3;
    f.num[24] = 4;
    f.num[32] = 5;
    f.num[40] = 3;
    f.num[48] = 7;
    f.num[56] = 2;
    // (1 - t^8)^3 (1 - t^24)^3
    auto mul_factor = [](std::vector<BigInt>& poly, size_t power) {
        std::vector<BigInt> out(poly.size() + power, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            out[i] += poly[i];
            out[i + power] -= poly[i];
        }
        poly = std::move(out);
    };
    f.den = {1};
    for (int i = 0; i < 3; ++i) mul_factor(f.den, 8);
    for (int i = 0; i < 3; ++i) mul_factor(f.den, 24);
    return f;
}

std::vector<std::pair<size_t, long>> molien_coeffs_h() {
    return {{0, 1}, {8, 2}, {16, 6}, {24, 20}, {32, 46}, {40, 96}, {48, 195}};
}

std::vector<ExpVec> independence_monomials_deg16() {
    std::vector<std::string> names = {"ac3d3f9",    "a2c2d4f8", "c4d4f8",
                                      "d8f8",       "ab2cd2e2f8", "b4e4f8"};
    std::vector<ExpVec> out;
    out.reserve(names.size());
    for (const auto& s : names) out.push_back(parse_monomial(s, 6));
    return out;
}

} // namespace codent::catalog
