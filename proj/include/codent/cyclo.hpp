#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "codent/errors.hpp"

namespace codent {

using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view s);
std::string rational_text(const Rational& r);

/// Element of the 8th cyclotomic field Q(z), z = e(2*pi*i/8), written on the
/// basis {1, z, z^2, z^3} with exact rational coordinates.  Reduction uses
/// z^4 = -1.  The field contains i = z^2 and sqrt(2) = z - z^3.
class Cyclo8 {
  public:
    Cyclo8() : c_{} {}
    Cyclo8(long v) : c_{} { c_[0] = v; }
    explicit Cyclo8(Rational r) : c_{} { c_[0] = std::move(r); }
    Cyclo8(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Cyclo8 zeta() { return Cyclo8(0, 1, 0, 0); }
    static Cyclo8 sqrt2() { return Cyclo8(0, 1, 0, -1); }
    /// e(k/8), k taken mod 8.
    static Cyclo8 root_of_unity(long k);
    /// 2^{-m/2} computed through sqrt(2) = z - z^3.
    static Cyclo8 inv_sqrt_pow2(unsigned m);

    Cyclo8(long c0, long c1, long c2, long c3)
        : c_{Rational(c0), Rational(c1), Rational(c2), Rational(c3)} {}

    const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    bool is_one() const { return *this == Cyclo8(1); }
    bool is_rational() const;
    /// The value as a rational; requires is_rational().
    const Rational& rational_part() const;

    Cyclo8 operator-() const;
    Cyclo8& operator+=(const Cyclo8& o);
    Cyclo8& operator-=(const Cyclo8& o);
    Cyclo8& operator*=(const Cyclo8& o);
    friend Cyclo8 operator+(Cyclo8 a, const Cyclo8& b) { return a += b; }
    friend Cyclo8 operator-(Cyclo8 a, const Cyclo8& b) { return a -= b; }
    friend Cyclo8 operator*(const Cyclo8& a, const Cyclo8& b);

    /// Multiplicative inverse; throws DivisionByZero on zero.
    Cyclo8 inv() const;
    Cyclo8 operator/(const Cyclo8& o) const { return *this * o.inv(); }

    /// Galois map z -> z^j for odd j; j = 7 is complex conjugation.
    Cyclo8 galois(int j) const;
    Cyclo8 conj() const { return galois(7); }

    Cyclo8 pow(unsigned long e) const;

    bool operator==(const Cyclo8& o) const { return c_ == o.c_; }
    bool operator!=(const Cyclo8& o) const { return !(*this == o); }

    /// Canonical text form, ascending powers: "1/2 + 1/4*z - z^3".
    std::string to_text() const;
    static Cyclo8 parse(std::string_view s);

  private:
    std::array<Rational, 4> c_;
};

} // namespace codent
