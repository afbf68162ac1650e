#include <doctest.h>

#include <random>

#include "codent/catalog.hpp"
#include "codent/generators.hpp"
#include "codent/molien.hpp"

using namespace codent;

namespace {

// test-side series tools, independent of the library implementation
std::vector<Rational> series_inverse_oracle(const std::vector<Rational>& p, size_t N) {
    std::vector<Rational> q(N + 1);
    q[0] = Rational(1) / p[0];
    for (size_t m = 1; m <= N; ++m) {
        Rational acc(0);
        for (size_t j = 1; j <= m && j < p.size(); ++j) acc += p[j] * q[m - j];
        q[m] = -acc / p[0];
    }
    return q;
}

std::vector<Cyclo8> cyclo_series_inverse(const TPoly& p, size_t N) {
    std::vector<Cyclo8> q(N + 1);
    q[0] = Cyclo8(1);
    for (size_t m = 1; m <= N; ++m) {
        Cyclo8 acc;
        for (size_t j = 1; j <= m && j <= static_cast<size_t>(p.degree()); ++j)
            acc += p.coeff(j) * q[m - j];
        q[m] = -acc;
    }
    return q;
}

CMatrix neg_identity(size_t n) { return CMatrix::identity(n).scaled(Cyclo8(-1)); }

CMatrix perm3(const std::vector<size_t>& cols) {
    CMatrix m(3, 3);
    for (size_t i = 0; i < 3; ++i) m.at(i, cols[i]) = Cyclo8(1);
    return m;
}

} // namespace

TEST_CASE("trivial group on one variable") {
    GroupClosure g = close_group({CMatrix::identity(1)});
    RationalSeries s = molien_series(g, 10);
    for (size_t i = 0; i <= 10; ++i) CHECK(s.coeffs[i] == 1);
}

TEST_CASE("the sign group {I, -I} on two variables") {
    GroupClosure g = close_group({neg_identity(2)});
    CHECK(g.order() == 2);
    RationalSeries s = molien_series(g, 9);
    // oracle: (1/2)(1/(1-t)^2 + 1/(1+t)^2) has coefficient k+1 at even k
    for (size_t k = 0; k <= 9; ++k)
        CHECK(s.coeffs[k] == (k % 2 == 0 ? Rational(static_cast<long>(k + 1)) : Rational(0)));
}

TEST_CASE("the natural representation of S3") {
    GroupClosure g = close_group({perm3({1, 0, 2}), perm3({1, 2, 0})});
    CHECK(g.order() == 6);
    RationalSeries s = molien_series(g, 8);
    // the classical answer 1/((1-t)(1-t^2)(1-t^3))
    RationalFormula f;
    f.num = {1};
    f.den = {1};
    for (size_t p : {1u, 2u, 3u}) {
        std::vector<BigInt> next(f.den.size() + p, 0);
        for (size_t i = 0; i < f.den.size(); ++i) {
            next[i] += f.den[i];
            next[i + p] -= f.den[i];
        }
        f.den = std::move(next);
    }
    CHECK(s == expand_formula(f, 8));
}

TEST_CASE("formula expansion basics") {
    RationalFormula f;
    f.num = {1};
    f.den = {1, -1}; // 1/(1-t)
    RationalSeries s = expand_formula(f, 3);
    CHECK(s.coeffs == std::vector<Rational>{1, 1, 1, 1});

    RationalFormula g;
    g.num = {1, 0, -1}; // (1-t^2)/(1-t) = 1+t
    g.den = {1, -1};
    RationalSeries t = expand_formula(g, 4);
    CHECK(t.coeffs == std::vector<Rational>{1, 1, 0, 0, 0});

    RationalFormula bad;
    bad.num = {1};
    bad.den = {0, 1};
    CHECK_THROWS_AS(expand_formula(bad, 3), DomainError);
}

TEST_CASE("bucketing the characteristic polynomials changes nothing") {
    GroupClosure g = close_group({perm3({1, 0, 2}), perm3({1, 2, 0})});
    size_t N = 8;
    // direct unbucketed sum over all elements with test-side series arithmetic
    std::vector<Cyclo8> direct(N + 1);
    for (size_t i = 0; i < g.order(); ++i) {
        std::vector<Cyclo8> inv = cyclo_series_inverse(g.element(i).char_det(), N);
        for (size_t m = 0; m <= N; ++m) direct[m] += inv[m];
    }
    // bucketed route through the library
    auto buckets = char_det_buckets(g);
    size_t total = 0;
    std::vector<Cyclo8> bucketed(N + 1);
    for (const auto& [poly, count] : buckets) {
        total += count;
        std::vector<Cyclo8> inv = cyclo_series_inverse(poly, N);
        for (size_t m = 0; m <= N; ++m) bucketed[m] += Cyclo8(static_cast<long>(count)) * inv[m];
    }
    CHECK(total == g.order());
    CHECK(direct == bucketed);

    // and the normalized series agrees with molien_series
    RationalSeries s = molien_series(g, N);
    for (size_t m = 0; m <= N; ++m) {
        Cyclo8 v = direct[m] * Cyclo8(Rational(1, 6));
        CHECK(v.is_rational());
        CHECK(v.rational_part() == s.coeffs[m]);
    }
}

TEST_CASE("series inversion oracle sanity") {
    // (1-t)^-1 = all ones
    std::vector<Rational> ones = series_inverse_oracle({Rational(1), Rational(-1)}, 5);
    for (const auto& c : ones) CHECK(c == 1);
}

TEST_CASE("fixed-space dimensions on small groups") {
    // identity: everything is fixed
    CHECK(fixed_space_dim({CMatrix::identity(2)}, 3) == 4);
    CHECK(fixed_space_dim({CMatrix::identity(2)}, 0) == 1);
    // sign group: odd degrees die
    CHECK(fixed_space_dim({neg_identity(2)}, 3) == 0);
    CHECK(fixed_space_dim({neg_identity(2)}, 4) == 5);
    // coordinate swap on two variables
    CMatrix swap(2, 2);
    swap.at(0, 1) = Cyclo8(1);
    swap.at(1, 0) = Cyclo8(1);
    CHECK(fixed_space_dim({swap}, 2) == 2); // x^2 + y^2 and xy
    CHECK(fixed_space_dim({swap}, 3) == 2); // x^3 + y^3 and x^2 y + x y^2

    // a dense involution: the normalized Hadamard matrix over Q(zeta8)
    CMatrix had(2, 2);
    Cyclo8 inv_sqrt2 = Cyclo8::inv_sqrt_pow2(1);
    had.at(0, 0) = inv_sqrt2;
    had.at(0, 1) = inv_sqrt2;
    had.at(1, 0) = inv_sqrt2;
    had.at(1, 1) = -inv_sqrt2;
    CHECK((had * had) == CMatrix::identity(2));
    size_t dim = fixed_space_dim({had}, 2);
    CHECK(dim == 2);
    // cross-check against the Molien coefficient of the same group
    GroupClosure g = close_group({had});
    CHECK(molien_series(g, 2).coeffs[2] == Rational(2));
}

TEST_CASE("fixed-space limits") {
    FixedSpaceOptions tight;
    tight.monomial_limit = 5;
    CHECK_THROWS_AS(fixed_space_dim({CMatrix::identity(3)}, 10, tight), DimensionOverflow);
    CHECK_THROWS_AS(fixed_space_dim({}, 2), DomainError);
}

TEST_CASE("series text form") {
    RationalFormula f;
    f.num = {1};
    f.den = {1, -1};
    CHECK(expand_formula(f, 2).to_text() == "1 + 1*t + 1*t^2 + O(t^3)");
}
