#include "codent/generators.hpp"

namespace codent {

Cyclo8 root_from_turns(const Rational& turns) {
    Rational eighths = turns * 8;
    if (eighths.get_den() != 1)
        throw UnsupportedSpec("phase e(" + rational_text(turns) + ") lies outside Q(zeta8)");
    BigInt k = eighths.get_num() % 8;
    return Cyclo8::root_of_unity(k.get_si());
}

CMatrix build_chi(const RingSpec& spec) {
    // normalization 2^g alpha^g alpha_1..alpha_g must be a power of two,
    // otherwise the square root leaves Q(zeta8)
    BigInt norm = BigInt(1) << spec.g;
    for (size_t i = 0; i < spec.g; ++i) norm *= spec.alpha;
    for (long a : spec.alphas) norm *= a;
    unsigned m = 0;
    BigInt v = norm;
    while (v % 2 == 0) {
        v /= 2;
        ++m;
    }
    if (v != 1)
        throw UnsupportedSpec("normalization " + norm.get_str() + " is not a power of two");

    Cyclo8 pref = Cyclo8::root_of_unity(static_cast<long>(spec.g)) * Cyclo8::inv_sqrt_pow2(m);
    std::vector<RElement> r = enumerate_R(spec);
    CMatrix out(r.size(), r.size());
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j) {
            // <D^-1 a, b> / 2alpha = sum_i a_i b_i / (2 alpha alpha_i)
            Rational turns(0);
            for (size_t t = 0; t < spec.g; ++t)
                turns += Rational(static_cast<long>(r[i][t]) * r[j][t],
                                  2 * spec.alpha * spec.alphas[t]);
            out.at(i, j) = pref * root_from_turns(turns);
        }
    return out;
}

CMatrix build_xi(const IntMatrix& u, const RingSpec& spec) {
    if (!omega_member(u, spec)) throw DomainError("matrix is not in Omega(D)");
    long d = int_det(u);
    Cyclo8 sq = (d == 1) ? Cyclo8(1) : Cyclo8::root_of_unity(2); // sqrt(-1) = z^2
    std::vector<RElement> r = enumerate_R(spec);
    CMatrix out(r.size(), r.size());
    std::vector<bool> hit(r.size(), false);
    for (size_t i = 0; i < r.size(); ++i) {
        RElement b(spec.g);
        for (size_t row = 0; row < spec.g; ++row) {
            long acc = 0;
            for (size_t col = 0; col < spec.g; ++col) acc += u[row][col] * r[i][col];
            long m = 2 * spec.ks[row];
            b[row] = static_cast<int>(((acc % m) + m) % m);
        }
        size_t j = r_index(b, spec);
        if (hit[j]) throw InternalError("Omega(D) element does not permute R");
        hit[j] = true;
        out.at(i, j) = sq;
    }
    return out;
}

CMatrix build_eta(const RatMatrix& s, const RingSpec& spec) {
    if (!lambda_member(s, spec)) throw DomainError("matrix is not in Lambda(D)");
    std::vector<RElement> r = enumerate_R(spec);
    CMatrix out(r.size(), r.size());
    for (size_t i = 0; i < r.size(); ++i) {
        Rational quad(0); // S[a] = a^T S a
        for (size_t p = 0; p < spec.g; ++p)
            for (size_t q = 0; q < spec.g; ++q) quad += s[p][q] * r[i][p] * r[i][q];
        out.at(i, i) = root_from_turns(quad / (4 * spec.alpha));
    }
    return out;
}

CMatrix build_zeta(size_t n) {
    CMatrix out(n, n);
    for (size_t i = 0; i < n; ++i) out.at(i, i) = Cyclo8::zeta();
    return out;
}

CMatrix symmetrize(const CMatrix& gmat, const RingSpec& spec) {
    std::vector<RElement> r = enumerate_R(spec);
    if (gmat.rows() != r.size() || gmat.cols() != r.size())
        throw ShapeError("symmetrize expects a |R| x |R| matrix");
    std::vector<RElement> reps = class_reps(spec);
    std::vector<size_t> cls(r.size());
    for (size_t i = 0; i < r.size(); ++i) cls[i] = classify(r[i], spec).index;

    CMatrix out(reps.size(), reps.size());
    for (size_t ci = 0; ci < reps.size(); ++ci) {
        size_t row_rep = r_index(reps[ci], spec);
        size_t row_neg = r_index(negate(reps[ci], spec), spec);
        std::vector<Cyclo8> sums(reps.size()), neg_sums(reps.size());
        for (size_t d = 0; d < r.size(); ++d) {
            sums[cls[d]] += gmat.at(row_rep, d);
            neg_sums[cls[d]] += gmat.at(row_neg, d);
        }
        for (size_t cj = 0; cj < reps.size(); ++cj) {
            if (sums[cj] != neg_sums[cj])
                throw NotSymmetrizable("class row sums differ between a and -a");
            out.at(ci, cj) = sums[cj];
        }
    }
    return out;
}

} // namespace codent
