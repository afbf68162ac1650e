#include <doctest.h>

#include <random>
#include <set>

#include "codent/catalog.hpp"
#include "codent/codes.hpp"

using namespace codent;

namespace {

// brute-force oracle: all coefficient combinations of the rows, as a word set
std::set<Codeword> span_oracle(const GenMatrix& g) {
    std::set<Codeword> words;
    size_t rows = g.rows.size();
    std::vector<int> coeff(rows, 0);
    while (true) {
        Codeword w(g.n, 0);
        for (size_t r = 0; r < rows; ++r)
            for (size_t i = 0; i < g.n; ++i)
                w[i] = static_cast<uint8_t>((w[i] + coeff[r] * g.rows[r][i]) % g.modulus);
        words.insert(w);
        size_t r = rows;
        bool done = true;
        while (r > 0) {
            --r;
            if (++coeff[r] < g.modulus) {
                done = false;
                break;
            }
            coeff[r] = 0;
        }
        if (done) break;
    }
    return words;
}

} // namespace

TEST_CASE("enumeration sizes and oracle agreement") {
    CodeSet e8 = enumerate_code(catalog::code_e8());
    CHECK(e8.size() == 16);
    std::set<Codeword> oracle = span_oracle(catalog::code_e8());
    CHECK(std::set<Codeword>(e8.words().begin(), e8.words().end()) == oracle);

    CHECK(enumerate_code(catalog::code_q8()).size() == 256);
    CHECK(enumerate_code(catalog::code_k8()).size() == 256);
    CHECK(enumerate_code(catalog::code_d16()).size() == 256);
    // one order-4 row and fourteen order-2 rows: 4 * 2^14
    CHECK(enumerate_code(catalog::code_k16()).size() == 65536);
}

TEST_CASE("both enumeration strategies agree on the catalog") {
    for (const GenMatrix& g : {catalog::code_e8(), catalog::code_q8(), catalog::code_k8(),
                               catalog::code_d16()}) {
        CodeSet a = enumerate_code(g, 1u << 26, EnumStrategy::CoefficientTuples);
        CodeSet b = enumerate_code(g, 1u << 26, EnumStrategy::AdditiveClosure);
        CHECK(a.words() == b.words());
    }
}

TEST_CASE("self-duality and the Type II condition") {
    for (const GenMatrix& g : {catalog::code_e8(), catalog::code_q8(), catalog::code_k8(),
                               catalog::code_d16(), catalog::code_k16()}) {
        CodeSet c = enumerate_code(g);
        CHECK(is_self_dual(c));
        CHECK(is_type2(c));
    }

    // {00, 10} is not self-dual
    GenMatrix bad;
    bad.modulus = 2;
    bad.n = 2;
    bad.rows = {{1, 0}};
    CHECK_FALSE(is_self_dual(enumerate_code(bad)));

    // the length-2 repetition code is self-dual but not Type II (norm 2 mod 4)
    GenMatrix rep;
    rep.modulus = 2;
    rep.n = 2;
    rep.rows = {{1, 1}};
    CodeSet repc = enumerate_code(rep);
    CHECK(is_self_dual(repc));
    CHECK_FALSE(is_type2(repc));
}

TEST_CASE("Type II weight congruences hold exhaustively") {
    for (const GenMatrix& g : {catalog::code_e8(), catalog::code_d16()}) {
        CodeSet c = enumerate_code(g);
        for (const Codeword& w : c.words()) {
            long weight = 0;
            for (uint8_t v : w) weight += v;
            CHECK(weight % 4 == 0); // binary doubly-even
        }
    }
    for (const GenMatrix& g : {catalog::code_q8(), catalog::code_k8(), catalog::code_k16()}) {
        CodeSet c = enumerate_code(g);
        for (const Codeword& w : c.words()) {
            long norm = 0;
            for (uint8_t v : w) norm += static_cast<long>(v) * v;
            CHECK(norm % 8 == 0);
        }
    }
}

TEST_CASE("codes are additively closed (random pairs)") {
    std::mt19937_64 rng(53);
    for (const GenMatrix& g : {catalog::code_e8(), catalog::code_q8(), catalog::code_k16()}) {
        CodeSet c = enumerate_code(g);
        std::uniform_int_distribution<size_t> pick(0, c.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const Codeword& a = c.words()[pick(rng)];
            const Codeword& b = c.words()[pick(rng)];
            Codeword sum(c.length());
            for (size_t i = 0; i < c.length(); ++i)
                sum[i] = static_cast<uint8_t>((a[i] + b[i]) % c.modulus());
            CHECK(c.contains(sum));
        }
    }
}

TEST_CASE("direct sums") {
    GenMatrix ee = direct_sum(catalog::code_e8(), catalog::code_e8());
    CHECK(ee.n == 16);
    CHECK(enumerate_code(ee).size() == 256); // 16 * 16

    GenMatrix qk = direct_sum(catalog::code_q8(), catalog::code_k8());
    CHECK(enumerate_code(qk).size() == 65536); // 256 * 256

    // padding with a zero code appends zero columns
    GenMatrix zero;
    zero.modulus = 2;
    zero.n = 3;
    zero.rows = {{0, 0, 0}};
    GenMatrix padded = direct_sum(catalog::code_e8(), zero);
    CodeSet pc = enumerate_code(padded);
    CHECK(pc.size() == 16);
    for (const Codeword& w : pc.words())
        for (size_t i = 8; i < 11; ++i) CHECK(w[i] == 0);

    GenMatrix z4;
    z4.modulus = 4;
    z4.n = 1;
    z4.rows = {{0}};
    CHECK_THROWS_AS(direct_sum(catalog::code_e8(), z4), DomainError);
}

TEST_CASE("limits and validation") {
    CHECK_THROWS_AS(enumerate_code(catalog::code_q8(), 10), EnumerationOverflow);
    GenMatrix bad;
    bad.modulus = 3;
    bad.n = 2;
    bad.rows = {{1, 1}};
    CHECK_THROWS_AS(enumerate_code(bad), DomainError);
    GenMatrix out_of_range;
    out_of_range.modulus = 2;
    out_of_range.n = 2;
    out_of_range.rows = {{1, 2}};
    CHECK_THROWS_AS(enumerate_code(out_of_range), DomainError);
}
