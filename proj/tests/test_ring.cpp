#include <doctest.h>

#include <random>

#include "codent/catalog.hpp"
#include "codent/ring.hpp"

using namespace codent;

namespace {

// the display form of the Omega(D) membership: det +-1 and subdiagonal
// entries divisible by alpha_i/alpha_j
bool omega_congruence_form(const IntMatrix& u, const RingSpec& spec) {
    long d = int_det(u);
    if (d != 1 && d != -1) return false;
    for (size_t i = 0; i < spec.g; ++i)
        for (size_t j = 0; j < i; ++j)
            if (u[i][j] % (spec.alphas[i] / spec.alphas[j]) != 0) return false;
    return true;
}

// the display form of the Lambda(D) membership for alpha = 1 specs:
// S_ij in (1/k_i)Z for i <= j
bool lambda_display_form(const RatMatrix& s, const RingSpec& spec) {
    for (size_t i = 0; i < spec.g; ++i)
        for (size_t j = 0; j < i; ++j)
            if (s[i][j] != s[j][i]) return false;
    for (size_t i = 0; i < spec.g; ++i)
        for (size_t j = i; j < spec.g; ++j) {
            Rational t = s[i][j] * spec.ks[i];
            if (t.get_den() != 1) return false;
        }
    return true;
}

} // namespace

TEST_CASE("spec validation") {
    RingSpec spec = RingSpec::from_ks({1, 2});
    CHECK(spec.alpha == 1);
    CHECK(spec.alphas == std::vector<long>{1, 2});
    CHECK(spec.r_size() == 8);
    CHECK(spec.class_count() == 6);
    CHECK_THROWS_AS(RingSpec::from_ks({2, 3}), UnsupportedSpec);
    CHECK_THROWS_AS(RingSpec::from_ks({}), UnsupportedSpec);
    CHECK_THROWS_AS(RingSpec::from_ks({0}), UnsupportedSpec);
}

TEST_CASE("element enumeration order") {
    CHECK(enumerate_R(RingSpec::from_ks({1})) == std::vector<RElement>{{0}, {1}});
    std::vector<RElement> expect = {{0, 0}, {0, 1}, {0, 2}, {0, 3},
                                    {1, 0}, {1, 1}, {1, 2}, {1, 3}};
    CHECK(enumerate_R(RingSpec::from_ks({1, 2})) == expect);
    CHECK(enumerate_R(RingSpec::from_ks({1, 1})).size() == 4);
    RingSpec spec = RingSpec::from_ks({1, 2});
    for (size_t i = 0; i < 8; ++i) CHECK(r_index(enumerate_R(spec)[i], spec) == i);
}

TEST_CASE("classification") {
    RingSpec spec = RingSpec::from_ks({1, 2});
    ClassIndex b = classify({0, 3}, spec);
    CHECK(b.rep == RElement{0, 1});
    CHECK(b.index == 1);
    CHECK(classify({0, 0}, spec).index == 0);
    CHECK(classify({1, 2}, spec).index == 5);
    CHECK(class_var_name(classify({1, 2}, spec).index, 6) == "f");

    // classify is constant on {a, -a} for every element of several small rings
    for (auto ks : std::vector<std::vector<long>>{{1, 2}, {1, 1}, {2, 2}, {1, 2, 2}}) {
        RingSpec s = RingSpec::from_ks(ks);
        CHECK(s.r_size() <= 64);
        for (const RElement& a : enumerate_R(s)) CHECK(classify(a, s) == classify(negate(a, s), s));
    }

    // class count for the rank-2 instance: 2^{g-1}(alpha^g a1 a2 + 1) = 6
    CHECK(class_reps(spec).size() == 2 * (1 * 1 * 2 + 1));
}

TEST_CASE("Omega(D) membership") {
    RingSpec spec = RingSpec::from_ks({1, 2});
    CHECK(omega_member(catalog::u1(), spec));
    CHECK(omega_member(catalog::u2(), spec));
    CHECK_FALSE(omega_member({{1, 0}, {1, 1}}, spec));
    CHECK_FALSE(omega_member({{2, 0}, {0, 1}}, spec)); // det 2
    CHECK_THROWS_AS(omega_member({{1}}, spec), ShapeError);

    // Omega(D) is closed under inversion on the catalog matrices
    IntMatrix u1_inv = {{-1, 1}, {0, -1}};
    IntMatrix u2_inv = {{1, -1}, {-2, 1}};
    // verify the hand inverses first
    for (auto [u, vi] : {std::pair{catalog::u1(), u1_inv}, std::pair{catalog::u2(), u2_inv}}) {
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) {
                long acc = 0;
                for (size_t k = 0; k < 2; ++k) acc += u[i][k] * vi[k][j];
                CHECK(acc == (i == j ? 1 : 0));
            }
    }
    CHECK(omega_member(u1_inv, spec));
    CHECK(omega_member(u2_inv, spec));
}

TEST_CASE("the integrality form and the congruence form agree") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> small(-4, 4);
    for (auto ks : std::vector<std::vector<long>>{{1, 2}, {1, 1}, {1, 4}, {2, 4}}) {
        RingSpec spec = RingSpec::from_ks(ks);
        int seen = 0;
        for (int trial = 0; trial < 4000 && seen < 60; ++trial) {
            IntMatrix u = {{small(rng), small(rng)}, {small(rng), small(rng)}};
            long d = int_det(u);
            if (d != 1 && d != -1) continue;
            ++seen;
            CHECK(omega_member(u, spec) == omega_congruence_form(u, spec));
        }
        CHECK(seen > 0);
    }
}

TEST_CASE("Lambda(D) membership") {
    RingSpec spec = RingSpec::from_ks({1, 2});
    CHECK(lambda_member(catalog::s1(), spec));
    CHECK(lambda_member(catalog::s2(), spec));
    CHECK_FALSE(lambda_member({{make_rational(1, 2), Rational(0)}, {Rational(0), Rational(0)}},
                              spec)); // S11 must be integral when k1 = 1
    CHECK_FALSE(lambda_member({{Rational(0), Rational(1)}, {Rational(2), Rational(0)}},
                              spec)); // not symmetric
    RingSpec one = RingSpec::from_ks({1});
    CHECK_FALSE(lambda_member({{make_rational(1, 2)}}, one));
    CHECK(lambda_member({{Rational(3)}}, one));

    // for alpha = 1 the SD-integrality form equals the display form
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    for (auto ks : std::vector<std::vector<long>>{{1, 2}, {1, 1}, {1, 4}}) {
        RingSpec s = RingSpec::from_ks(ks);
        for (int trial = 0; trial < 200; ++trial) {
            Rational a = make_rational(num(rng), den(rng));
            Rational b = make_rational(num(rng), den(rng));
            Rational c = make_rational(num(rng), den(rng));
            RatMatrix m = {{a, b}, {b, c}};
            CHECK(lambda_member(m, s) == lambda_display_form(m, s));
        }
    }
}
