#include "codent/ring.hpp"

#include <algorithm>

namespace codent {

RingSpec RingSpec::from_ks(std::vector<long> ks) {
    if (ks.empty()) throw UnsupportedSpec("ring spec needs at least one k");
    for (size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] <= 0) throw UnsupportedSpec("k values must be positive");
        if (i > 0 && ks[i] % ks[i - 1] != 0)
            throw UnsupportedSpec("k values must form a divisibility chain");
    }
    RingSpec spec;
    spec.ks = std::move(ks);
    spec.g = spec.ks.size();
    spec.alpha = spec.ks[0];
    spec.alphas.reserve(spec.g);
    for (long k : spec.ks) spec.alphas.push_back(k / spec.alpha);
    if (spec.r_size() > (1u << 20)) throw UnsupportedSpec("ring is too large to enumerate");
    return spec;
}

size_t RingSpec::r_size() const {
    size_t n = 1;
    for (long k : ks) n *= static_cast<size_t>(2 * k);
    return n;
}

size_t RingSpec::class_count() const { return class_reps(*this).size(); }

std::vector<RElement> enumerate_R(const RingSpec& spec) {
    std::vector<RElement> out;
    out.reserve(spec.r_size());
    RElement cur(spec.g, 0);
    while (true) {
        out.push_back(cur);
        size_t i = spec.g;
        while (i > 0) {
            --i;
            if (++cur[i] < 2 * spec.ks[i]) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (spec.g == 0) return out;
    }
}

RElement negate(const RElement& a, const RingSpec& spec) {
    RElement out(spec.g);
    for (size_t i = 0; i < spec.g; ++i) {
        long m = 2 * spec.ks[i];
        out[i] = static_cast<int>((m - a[i]) % m);
    }
    return out;
}

std::vector<RElement> class_reps(const RingSpec& spec) {
    std::vector<RElement> reps;
    for (const RElement& a : enumerate_R(spec)) {
        RElement rep = std::min(a, negate(a, spec));
        if (rep == a) reps.push_back(rep);
    }
    return reps; // already lexicographically sorted
}

ClassIndex classify(const RElement& a, const RingSpec& spec) {
    if (a.size() != spec.g) throw ShapeError("element arity does not match ring spec");
    RElement rep = std::min(a, negate(a, spec));
    std::vector<RElement> reps = class_reps(spec);
    auto it = std::lower_bound(reps.begin(), reps.end(), rep);
    if (it == reps.end() || *it != rep) throw InternalError("class representative not found");
    return ClassIndex{rep, static_cast<size_t>(it - reps.begin())};
}

size_t r_index(const RElement& a, const RingSpec& spec) {
    size_t idx = 0;
    for (size_t i = 0; i < spec.g; ++i) {
        long m = 2 * spec.ks[i];
        if (a[i] < 0 || a[i] >= m) throw DomainError("element coordinate out of range");
        idx = idx * static_cast<size_t>(m) + static_cast<size_t>(a[i]);
    }
    return idx;
}

std::string class_var_name(size_t index, size_t nvars) {
    if (nvars <= 26) return std::string(1, static_cast<char>('a' + index));
    return "x" + std::to_string(index);
}

long int_det(const IntMatrix& u) {
    size_t n = u.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) {
        if (u[i].size() != n) throw ShapeError("non-square integer matrix");
        for (size_t j = 0; j < n; ++j) m[i][j] = u[i][j];
    }
    Rational d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    if (d.get_den() != 1) throw InternalError("integer determinant not integral");
    return static_cast<long>(d.get_num().get_si());
}

bool omega_member(const IntMatrix& u, const RingSpec& spec) {
    if (u.size() != spec.g) throw ShapeError("Omega(D) candidate has wrong size");
    for (const auto& row : u)
        if (row.size() != spec.g) throw ShapeError("Omega(D) candidate is not square");
    long d = int_det(u);
    if (d != 1 && d != -1) return false;
    // D^-1 U D integral: alpha_i | U_{ij} * alpha_j
    for (size_t i = 0; i < spec.g; ++i)
        for (size_t j = 0; j < spec.g; ++j)
            if ((u[i][j] * spec.alphas[j]) % spec.alphas[i] != 0) return false;
    return true;
}

bool lambda_member(const RatMatrix& s, const RingSpec& spec) {
    if (s.size() != spec.g) throw ShapeError("Lambda(D) candidate has wrong size");
    for (const auto& row : s)
        if (row.size() != spec.g) throw ShapeError("Lambda(D) candidate is not square");
    for (size_t i = 0; i < spec.g; ++i)
        for (size_t j = 0; j < i; ++j)
            if (s[i][j] != s[j][i]) return false;
    // SD integral
    for (size_t i = 0; i < spec.g; ++i)
        for (size_t j = 0; j < spec.g; ++j) {
            Rational t = s[i][j] * spec.alphas[j];
            if (t.get_den() != 1) return false;
        }
    return true;
}

} // namespace codent
