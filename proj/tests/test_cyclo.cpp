#include <doctest.h>

#include <random>

#include "codent/cyclo.hpp"

using namespace codent;

namespace {

// independent multiplication oracle: naive convolution, then reduce z^4 = -1
Cyclo8 mul_oracle(const Cyclo8& a, const Cyclo8& b) {
    Rational raw[7];
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) raw[p + q] += a.coeff(p) * b.coeff(q);
    Rational red[4];
    for (int d = 0; d < 7; ++d) {
        if (d < 4)
            red[d] += raw[d];
        else
            red[d - 4] -= raw[d];
    }
    return Cyclo8(red[0], red[1], red[2], red[3]);
}

Cyclo8 rnd_cyclo(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    return Cyclo8(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
                  make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
}

} // namespace

TEST_CASE("basic arithmetic matches the convolution oracle") {
    Cyclo8 z = Cyclo8::zeta();
    CHECK(z * z.pow(3) == Cyclo8(-1));
    Cyclo8 s = Cyclo8(0, 1, 0, 1); // z + z^3
    CHECK(s * s == Cyclo8(-2));
    CHECK(s * s == mul_oracle(s, s));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Cyclo8 a = rnd_cyclo(rng), b = rnd_cyclo(rng);
        CHECK(a * b == mul_oracle(a, b));
    }
}

TEST_CASE("inversion") {
    Cyclo8 z = Cyclo8::zeta();
    CHECK(z.inv() == -z.pow(3));
    CHECK_THROWS_AS(Cyclo8().inv(), DivisionByZero);

    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 300) {
        Cyclo8 a = rnd_cyclo(rng);
        if (a.is_zero()) continue;
        CHECK((a * a.inv()).is_one());
        ++checked;
    }
}

TEST_CASE("roots of unity") {
    CHECK(Cyclo8::root_of_unity(0) == Cyclo8(1));
    CHECK(Cyclo8::root_of_unity(4) == Cyclo8(-1));
    CHECK(Cyclo8::root_of_unity(7) == -Cyclo8::zeta().pow(3));
    CHECK(Cyclo8::root_of_unity(-1) == Cyclo8::root_of_unity(7));
    for (long k = 0; k < 8; ++k) {
        for (long j = 0; j < 8; ++j)
            CHECK(Cyclo8::root_of_unity(k) * Cyclo8::root_of_unity(j) ==
                  Cyclo8::root_of_unity(k + j));
        CHECK(Cyclo8::root_of_unity(k).pow(8).is_one());
    }
}

TEST_CASE("inverse powers of sqrt(2)") {
    CHECK(Cyclo8::inv_sqrt_pow2(0) == Cyclo8(1));
    CHECK(Cyclo8::inv_sqrt_pow2(2) == Cyclo8(make_rational(1, 2)));
    // 1/(2*sqrt 2) = (z - z^3)/4; its square is 1/8
    Cyclo8 q = Cyclo8(make_rational(1, 4)) * Cyclo8::sqrt2();
    CHECK(Cyclo8::inv_sqrt_pow2(3) == q);
    CHECK(q * q == Cyclo8(make_rational(1, 8)));
    for (unsigned m = 0; m <= 8; ++m) {
        Cyclo8 v = Cyclo8::inv_sqrt_pow2(m);
        Cyclo8 twos(Rational(BigInt(1) << m));
        CHECK((v * v * twos).is_one());
    }
    CHECK(Cyclo8::sqrt2() * Cyclo8::sqrt2() == Cyclo8(2));
}

TEST_CASE("galois maps and conjugation") {
    Cyclo8 z = Cyclo8::zeta();
    CHECK(z.conj() == z.inv());
    CHECK_THROWS_AS(z.galois(2), DomainError);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        Cyclo8 a = rnd_cyclo(rng), b = rnd_cyclo(rng);
        for (int j : {1, 3, 5, 7}) CHECK((a * b).galois(j) == a.galois(j) * b.galois(j));
        // norm x * s3(x) * s5(x) * s7(x) is rational
        if (!a.is_zero()) CHECK((a * a.galois(3) * a.galois(5) * a.galois(7)).is_rational());
    }
}

TEST_CASE("canonical text form is a fixed point of serialize/parse") {
    CHECK(Cyclo8().to_text() == "0");
    CHECK(Cyclo8(1).to_text() == "1");
    CHECK(Cyclo8(0, 1, 0, 1).to_text() == "z + z^3");
    CHECK(Cyclo8(Rational(0), make_rational(1, 4), Rational(0), make_rational(-1, 4)).to_text() ==
          "1/4*z - 1/4*z^3");
    CHECK(Cyclo8::parse("1/4*z - 1/4*z^3") ==
          Cyclo8(Rational(0), make_rational(1, 4), Rational(0), make_rational(-1, 4)));
    CHECK(Cyclo8::parse("-2") == Cyclo8(-2));
    CHECK_THROWS_AS(Cyclo8::parse(""), ParseError);
    CHECK_THROWS_AS(Cyclo8::parse("z^5"), ParseError);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        Cyclo8 a = rnd_cyclo(rng);
        std::string s = a.to_text();
        CHECK(Cyclo8::parse(s) == a);
        CHECK(Cyclo8::parse(s).to_text() == s);
    }
}
