#include "dyadic.hpp"

namespace codent::dyadic {

std::optional<PackedMatrix> try_pack(const CMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
    size_t n = m.rows();
    // largest power-of-two denominator across all coordinates
    unsigned scale = 0;
    for (const auto& x : m.entries()) {
        for (int k = 0; k < 4; ++k) {
            BigInt den = x.coeff(k).get_den();
            unsigned bits = 0;
            while (den % 2 == 0) {
                den /= 2;
                ++bits;
            }
            if (den != 1) return std::nullopt;
            scale = std::max(scale, bits);
        }
    }
    if (scale > 255) return std::nullopt;
    PackedMatrix p;
    p.n = static_cast<int>(n);
    p.scale = static_cast<uint8_t>(scale);
    p.coords.resize(n * n * 4);
    size_t idx = 0;
    for (const auto& x : m.entries()) {
        for (int k = 0; k < 4; ++k) {
            BigInt num = x.coeff(k).get_num();
            BigInt den = x.coeff(k).get_den();
            BigInt c = num * ((BigInt(1) << scale) / den);
            if (c < -128 || c > 127) return std::nullopt;
            p.coords[idx++] = static_cast<int8_t>(c.get_si());
        }
    }
    return p;
}

CMatrix unpack(const PackedMatrix& p) {
    size_t n = static_cast<size_t>(p.n);
    CMatrix out(n, n);
    BigInt den = BigInt(1) << p.scale;
    size_t idx = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational c[4];
            for (int k = 0; k < 4; ++k) {
                c[k] = Rational(BigInt(p.coords[idx++]), den);
                c[k].canonicalize();
            }
            out.at(i, j) = Cyclo8(c[0], c[1], c[2], c[3]);
        }
    return out;
}

void normalize(std::vector<int32_t>& coords, int& scale) {
    bool any = false;
    for (int32_t c : coords)
        if (c != 0) {
            any = true;
            break;
        }
    if (!any) {
        scale = 0;
        return;
    }
    while (scale > 0) {
        for (int32_t c : coords)
            if (c & 1) return;
        for (auto& c : coords) c >>= 1;
        --scale;
    }
}

void mul_into(const View& a, const View& b, std::vector<int32_t>& scratch, int8_t* out_coords,
              uint8_t& out_scale) {
    size_t n = static_cast<size_t>(a.n);
    scratch.assign(n * n * 4, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            const int8_t* av = &a.coords[(i * n + k) * 4];
            if (!(av[0] | av[1] | av[2] | av[3])) continue;
            const int8_t* brow = &b.coords[k * n * 4];
            int32_t* crow = &scratch[i * n * 4];
            for (size_t j = 0; j < n; ++j) {
                const int8_t* bv = brow + j * 4;
                if (!(bv[0] | bv[1] | bv[2] | bv[3])) continue;
                int32_t* cv = crow + j * 4;
                // (sum_p a_p z^p)(sum_q b_q z^q) with z^4 = -1
                cv[0] += av[0] * bv[0] - av[1] * bv[3] - av[2] * bv[2] - av[3] * bv[1];
                cv[1] += av[0] * bv[1] + av[1] * bv[0] - av[2] * bv[3] - av[3] * bv[2];
                cv[2] += av[0] * bv[2] + av[1] * bv[1] + av[2] * bv[0] - av[3] * bv[3];
                cv[3] += av[0] * bv[3] + av[1] * bv[2] + av[2] * bv[1] + av[3] * bv[0];
            }
        }
    }
    int scale = static_cast<int>(a.scale) + static_cast<int>(b.scale);
    normalize(scratch, scale);
    if (scale > 255) throw PackedRange("packed scale overflow");
    out_scale = static_cast<uint8_t>(scale);
    for (size_t i = 0; i < scratch.size(); ++i) {
        if (scratch[i] < -128 || scratch[i] > 127) throw PackedRange("packed coordinate overflow");
        out_coords[i] = static_cast<int8_t>(scratch[i]);
    }
}

PackedMatrix mul(const PackedMatrix& a, const PackedMatrix& b) {
    if (a.n != b.n) throw ShapeError("packed matrix dimension mismatch");
    PackedMatrix out;
    out.n = a.n;
    out.coords.resize(a.coords.size());
    std::vector<int32_t> scratch;
    mul_into(View{a.coords.data(), a.scale, a.n}, View{b.coords.data(), b.scale, b.n}, scratch,
             out.coords.data(), out.scale);
    return out;
}

std::string key_bytes(const PackedMatrix& p) {
    std::string key;
    key.reserve(p.coords.size() + 2);
    key.push_back(static_cast<char>(p.n));
    key.push_back(static_cast<char>(p.scale));
    key.append(reinterpret_cast<const char*>(p.coords.data()), p.coords.size());
    return key;
}

uint64_t hash_bytes(const int8_t* data, size_t len, uint64_t seed) {
    // FNV-1a
    uint64_t h = 14695981039346656037ull ^ seed;
    for (size_t i = 0; i < len; ++i) {
        h ^= static_cast<uint8_t>(data[i]);
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace codent::dyadic
