#include "codent/cyclo.hpp"

#include <cctype>
#include <sstream>

namespace codent {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_text(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rational parse_rational(std::string_view s) {
    Rational r;
    if (r.set_str(std::string(s), 10) != 0)
        throw ParseError("bad rational: '" + std::string(s) + "'");
    r.canonicalize();
    return r;
}

Cyclo8 Cyclo8::root_of_unity(long k) {
    k %= 8;
    if (k < 0) k += 8;
    Cyclo8 out;
    out.c_[static_cast<size_t>(k % 4)] = (k < 4) ? 1 : -1;
    return out;
}

Cyclo8 Cyclo8::inv_sqrt_pow2(unsigned m) {
    // (sqrt 2)^-m; even m is a plain power of two, odd m carries one sqrt(2).
    BigInt half = BigInt(1) << (m / 2);
    if (m % 2 == 0) return Cyclo8(Rational(1, half));
    Rational c(1, half << 1); // sqrt(2)/2^{m/2+1}
    return Cyclo8(0, c, 0, -c);
}

bool Cyclo8::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo8::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

const Rational& Cyclo8::rational_part() const {
    if (!is_rational()) throw DomainError("value is not rational: " + to_text());
    return c_[0];
}

Cyclo8 Cyclo8::operator-() const {
    Cyclo8 out;
    for (size_t i = 0; i < 4; ++i) out.c_[i] = -c_[i];
    return out;
}

Cyclo8& Cyclo8::operator+=(const Cyclo8& o) {
    for (size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclo8& Cyclo8::operator-=(const Cyclo8& o) {
    for (size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclo8 operator*(const Cyclo8& a, const Cyclo8& b) {
    Cyclo8 out;
    for (size_t p = 0; p < 4; ++p) {
        if (a.c_[p] == 0) continue;
        for (size_t q = 0; q < 4; ++q) {
            if (b.c_[q] == 0) continue;
            Rational t = a.c_[p] * b.c_[q];
            size_t r = p + q;
            if (r < 4)
                out.c_[r] += t;
            else
                out.c_[r - 4] -= t; // z^4 = -1
        }
    }
    return out;
}

Cyclo8& Cyclo8::operator*=(const Cyclo8& o) { return *this = *this * o; }

Cyclo8 Cyclo8::galois(int j) const {
    j = ((j % 8) + 8) % 8;
    if (j % 2 == 0) throw DomainError("galois index must be odd");
    Cyclo8 out;
    for (int i = 0; i < 4; ++i) {
        int t = (i * j) % 8;
        if (t < 4)
            out.c_[static_cast<size_t>(t)] += c_[static_cast<size_t>(i)];
        else
            out.c_[static_cast<size_t>(t - 4)] -= c_[static_cast<size_t>(i)];
    }
    return out;
}

Cyclo8 Cyclo8::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    // x^-1 = (prod of the other Galois conjugates) / Norm(x)
    Cyclo8 y = galois(3) * galois(5) * galois(7);
    Cyclo8 n = *this * y;
    const Rational& nr = n.rational_part(); // the norm is rational by construction
    Cyclo8 out;
    for (size_t i = 0; i < 4; ++i) out.c_[i] = y.c_[i] / nr;
    return out;
}

Cyclo8 Cyclo8::pow(unsigned long e) const {
    Cyclo8 acc(1), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Cyclo8::to_text() const {
    std::string out;
    for (size_t i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        Rational mag = abs(c_[i]);
        bool negative = c_[i] < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string m = rational_text(mag);
        if (i == 0) {
            out += m;
        } else {
            if (m != "1") out += m + "*";
            out += (i == 1) ? "z" : "z^" + std::to_string(i);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

namespace {

void skip_ws(std::string_view s, size_t& p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

} // namespace

Cyclo8 Cyclo8::parse(std::string_view s) {
    std::array<Rational, 4> c{};
    size_t p = 0;
    skip_ws(s, p);
    if (p == s.size()) throw ParseError("empty cyclotomic literal");
    bool first = true;
    while (p < s.size()) {
        int sign = 1;
        skip_ws(s, p);
        if (!first || s[p] == '+' || s[p] == '-') {
            if (p >= s.size() || (s[p] != '+' && s[p] != '-'))
                throw ParseError("expected '+' or '-' in '" + std::string(s) + "'");
            sign = (s[p] == '-') ? -1 : 1;
            ++p;
            skip_ws(s, p);
        }
        first = false;
        // optional rational magnitude
        Rational mag(1);
        size_t start = p;
        while (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '/')) ++p;
        if (p > start) mag = parse_rational(s.substr(start, p - start));
        skip_ws(s, p);
        if (p < s.size() && s[p] == '*') {
            ++p;
            skip_ws(s, p);
        }
        size_t power = 0;
        if (p < s.size() && s[p] == 'z') {
            ++p;
            power = 1;
            if (p < s.size() && s[p] == '^') {
                ++p;
                size_t d = p;
                while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
                if (d == p) throw ParseError("missing exponent in '" + std::string(s) + "'");
                power = std::stoul(std::string(s.substr(d, p - d)));
            }
        } else if (p == start) {
            throw ParseError("expected term in '" + std::string(s) + "'");
        }
        if (power >= 4) throw ParseError("z power must be < 4 in canonical form");
        c[power] += sign * mag;
        skip_ws(s, p);
    }
    return Cyclo8(c[0], c[1], c[2], c[3]);
}

} // namespace codent
