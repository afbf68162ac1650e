#include "codent/molien.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "codent/swe.hpp"
#include "codent/util.hpp"
#include "dyadic.hpp"

namespace codent {

std::string RationalSeries::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs[i];
        if (i == 1)
            os << "*t";
        else if (i > 1)
            os << "*t^" << i;
        first = false;
    }
    if (first) os << "0";
    os << " + O(t^" << coeffs.size() << ")";
    return os.str();
}

namespace {

// 1/p(t) mod t^{N+1} for p with constant term 1.
std::vector<Cyclo8> invert_series(const TPoly& p, size_t N) {
    if (!p.coeff(0).is_one()) throw InternalError("series inversion needs constant term 1");
    std::vector<Cyclo8> q(N + 1);
    q[0] = Cyclo8(1);
    size_t deg = static_cast<size_t>(std::max(0L, p.degree()));
    for (size_t m = 1; m <= N; ++m) {
        Cyclo8 acc;
        for (size_t j = 1; j <= std::min(m, deg); ++j) acc += p.coeff(j) * q[m - j];
        q[m] = -acc;
    }
    return q;
}

// --- fast char_det over the packed arena -----------------------------------

struct Zd128 {
    __int128 c[4] = {0, 0, 0, 0};
};

inline void zmuladd(Zd128& dst, const Zd128& a, const Zd128& b) {
    dst.c[0] += a.c[0] * b.c[0] - a.c[1] * b.c[3] - a.c[2] * b.c[2] - a.c[3] * b.c[1];
    dst.c[1] += a.c[0] * b.c[1] + a.c[1] * b.c[0] - a.c[2] * b.c[3] - a.c[3] * b.c[2];
    dst.c[2] += a.c[0] * b.c[2] + a.c[1] * b.c[1] + a.c[2] * b.c[0] - a.c[3] * b.c[3];
    dst.c[3] += a.c[0] * b.c[3] + a.c[1] * b.c[2] + a.c[2] * b.c[1] + a.c[3] * b.c[0];
}

Rational int128_rat(__int128 v, unsigned shift) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    BigInt num = BigInt(static_cast<unsigned long>(u >> 64)) << 64;
    num += static_cast<unsigned long>(u & ~0ull);
    if (neg) num = -num;
    Rational r(num, BigInt(1) << shift);
    r.canonicalize();
    return r;
}

// det(I - tM) for one packed element via Faddeev-LeVerrier; every division is
// exact because the coefficients stay in Z[zeta8][1/2].
TPoly packed_char_det(const dyadic::PackedStore& store, size_t idx) {
    size_t n = static_cast<size_t>(store.n);
    const int8_t* raw = store.mat(idx);
    unsigned base_scale = store.scales[idx];

    std::vector<Zd128> E(n * n), Mk(n * n), T(n * n);
    for (size_t i = 0; i < n * n; ++i)
        for (int k = 0; k < 4; ++k) E[i].c[k] = raw[i * 4 + k];
    Mk = E;
    unsigned scale_k = base_scale;

    std::vector<Cyclo8> coeffs(n + 1);
    coeffs[0] = Cyclo8(1);
    for (size_t k = 1; k <= n; ++k) {
        Zd128 tr;
        for (size_t i = 0; i < n; ++i)
            for (int q = 0; q < 4; ++q) tr.c[q] += Mk[i * n + i].c[q];
        // a_k = tr / k; pull the even part of k into the scale
        unsigned kk = static_cast<unsigned>(k), shift = 0;
        while (kk % 2 == 0) {
            kk /= 2;
            ++shift;
        }
        Zd128 ak;
        for (int q = 0; q < 4; ++q) {
            if (tr.c[q] % kk != 0) throw InternalError("char_det division is not exact");
            ak.c[q] = tr.c[q] / kk;
        }
        unsigned scale_a = scale_k + shift;
        coeffs[k] = -Cyclo8(int128_rat(ak.c[0], scale_a), int128_rat(ak.c[1], scale_a),
                            int128_rat(ak.c[2], scale_a), int128_rat(ak.c[3], scale_a));
        if (k == n) break;
        // T = Mk*2^shift - ak*I at scale_a; Mk+1 = E*T
        for (size_t i = 0; i < n * n; ++i)
            for (int q = 0; q < 4; ++q) T[i].c[q] = Mk[i].c[q] << shift;
        for (size_t i = 0; i < n; ++i)
            for (int q = 0; q < 4; ++q) T[i * n + i].c[q] -= ak.c[q];
        for (auto& v : Mk) v = Zd128();
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l)
                for (size_t j = 0; j < n; ++j) zmuladd(Mk[i * n + j], E[i * n + l], T[l * n + j]);
        scale_k = base_scale + scale_a;
    }
    return TPoly(std::move(coeffs));
}

std::string tpoly_key(const TPoly& p) {
    std::string key;
    for (const auto& c : p.coeffs())
        for (int q = 0; q < 4; ++q) {
            key += c.coeff(q).get_str();
            key += ',';
        }
    return key;
}

} // namespace

std::vector<std::pair<TPoly, size_t>> char_det_buckets(const GroupClosure& group,
                                                       const MolienOptions& options) {
    unsigned threads = resolve_threads(options.threads);
    size_t count = group.order();
    using Bucket = std::map<std::string, std::pair<TPoly, size_t>>;
    std::vector<Bucket> local(threads ? threads : 1);
    const dyadic::PackedStore* store = group.packed_store();

    parallel_chunks(count, threads, [&](size_t begin, size_t end, unsigned tid) {
        for (size_t i = begin; i < end; ++i) {
            TPoly p = store ? packed_char_det(*store, i) : group.element(i).char_det();
            auto [it, inserted] = local[tid].try_emplace(tpoly_key(p), p, 0);
            ++it->second.second;
        }
    });

    Bucket merged;
    for (auto& b : local)
        for (auto& [key, pc] : b) {
            auto [it, inserted] = merged.try_emplace(key, pc.first, 0);
            it->second.second += pc.second;
        }
    std::vector<std::pair<TPoly, size_t>> out;
    out.reserve(merged.size());
    for (auto& [key, pc] : merged) out.push_back(std::move(pc));
    return out;
}

RationalSeries molien_series(const GroupClosure& group, size_t N, const MolienOptions& options) {
    auto buckets = char_det_buckets(group, options);
    std::vector<Cyclo8> total(N + 1);
    for (const auto& [poly, count] : buckets) {
        std::vector<Cyclo8> inv = invert_series(poly, N);
        Cyclo8 mult(static_cast<long>(count));
        for (size_t m = 0; m <= N; ++m) total[m] += mult * inv[m];
    }
    Rational order(static_cast<unsigned long>(group.order()));
    RationalSeries out;
    out.coeffs.resize(N + 1);
    for (size_t m = 0; m <= N; ++m) {
        Cyclo8 v = total[m] * Cyclo8(Rational(1) / order);
        if (!v.is_rational())
            throw InternalError("Molien coefficient at t^" + std::to_string(m) +
                                " is not rational");
        const Rational& r = v.rational_part();
        if (r.get_den() != 1 || r < 0)
            throw InternalError("Molien coefficient at t^" + std::to_string(m) +
                                " is not a nonnegative integer: " + rational_text(r));
        out.coeffs[m] = r;
    }
    return out;
}

RationalSeries expand_formula(const RationalFormula& f, size_t N) {
    if (f.den.empty() || f.den[0] == 0)
        throw DomainError("formula denominator must not vanish at t = 0");
    // q = num/den mod t^{N+1}: q_m = (num_m - sum_{j>=1} den_j q_{m-j}) / den_0
    RationalSeries out;
    out.coeffs.resize(N + 1);
    for (size_t m = 0; m <= N; ++m) {
        Rational acc = (m < f.num.size()) ? Rational(f.num[m]) : Rational(0);
        for (size_t j = 1; j < f.den.size() && j <= m; ++j)
            acc -= Rational(f.den[j]) * out.coeffs[m - j];
        out.coeffs[m] = acc / Rational(f.den[0]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// fixed_space_dim

namespace {

struct Basis {
    // sparse vector over monomial indices
    std::vector<std::pair<uint32_t, Cyclo8>> entries;
};

// union-find with multiplicative phases relative to the root
struct PhasedUF {
    std::vector<uint32_t> parent;
    std::vector<Cyclo8> phase; // x_i = phase[i] * x_root in the invariant
    std::vector<bool> dead;

    explicit PhasedUF(size_t n) : parent(n), phase(n, Cyclo8(1)), dead(n, false) {
        std::iota(parent.begin(), parent.end(), 0u);
    }

    std::pair<uint32_t, Cyclo8> find(uint32_t i) {
        if (parent[i] == i) return {i, phase[i]};
        auto [root, ph] = find(parent[i]);
        parent[i] = root;
        phase[i] = phase[i] * ph;
        return {root, phase[i]};
    }

    // impose lambda_a = factor * lambda_b
    void relate(uint32_t a, uint32_t b, const Cyclo8& factor) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if (pa != pb * factor) dead[ra] = true; // inconsistent cycle
            return;
        }
        // attach ra under rb: lambda_ra = lambda_a / pa = factor*lambda_b/pa
        parent[ra] = rb;
        phase[ra] = factor * pb * pa.inv();
        if (dead[ra]) dead[rb] = true;
    }
};

} // namespace

size_t fixed_space_dim(const std::vector<CMatrix>& generators, size_t degree,
                       const FixedSpaceOptions& options) {
    if (generators.empty()) throw DomainError("fixed space needs at least one generator");
    size_t nv = generators[0].rows();
    for (const auto& g : generators)
        if (!g.is_square() || g.rows() != nv)
            throw ShapeError("generators must be square matrices of equal dimension");
    if (degree == 0) return 1;

    // monomial basis size C(degree + nv - 1, nv - 1)
    BigInt count = 1;
    for (size_t i = 1; i < nv; ++i) {
        count *= degree + i;
        count /= i;
    }
    if (count > options.monomial_limit)
        throw DimensionOverflow("monomial basis of size " + count.get_str() +
                                " exceeds the configured limit");

    // enumerate monomials of the given degree
    std::vector<ExpVec> monomials;
    ExpVec cur(nv, 0);
    auto gen = [&](auto&& self, size_t var, size_t rem) -> void {
        if (var + 1 == nv) {
            cur[var] = static_cast<uint8_t>(rem);
            monomials.push_back(cur);
            return;
        }
        for (size_t v = 0; v <= rem; ++v) {
            cur[var] = static_cast<uint8_t>(v);
            self(self, var + 1, rem - v);
        }
    };
    gen(gen, 0, degree);
    std::map<ExpVec, uint32_t> index;
    for (size_t i = 0; i < monomials.size(); ++i)
        index[monomials[i]] = static_cast<uint32_t>(i);

    // only invertible monomial matrices permute the monomial basis; anything
    // else goes through the dense nullspace route
    auto is_full_monomial = [nv](const CMatrix& g) {
        if (!g.is_monomial()) return false;
        for (size_t i = 0; i < nv; ++i) {
            size_t hits = 0;
            for (size_t j = 0; j < nv; ++j)
                if (!g.at(i, j).is_zero()) ++hits;
            if (hits != 1) return false;
        }
        return true;
    };
    std::vector<const CMatrix*> monomial_gens, dense_gens;
    for (const auto& g : generators)
        (is_full_monomial(g) ? monomial_gens : dense_gens).push_back(&g);

    // orbit structure under the monomial generators
    PhasedUF uf(monomials.size());
    for (const CMatrix* gp : monomial_gens) {
        const CMatrix& g = *gp;
        std::vector<long> col(nv, -1);
        std::vector<Cyclo8> scale(nv);
        for (size_t i = 0; i < nv; ++i)
            for (size_t j = 0; j < nv; ++j)
                if (!g.at(i, j).is_zero()) {
                    col[i] = static_cast<long>(j);
                    scale[i] = g.at(i, j);
                }
        ExpVec target(nv);
        for (size_t mi = 0; mi < monomials.size(); ++mi) {
            const ExpVec& e = monomials[mi];
            std::fill(target.begin(), target.end(), 0);
            Cyclo8 factor(1);
            for (size_t i = 0; i < nv; ++i) {
                if (e[i] == 0) continue;
                target[static_cast<size_t>(col[i])] =
                    static_cast<uint8_t>(target[static_cast<size_t>(col[i])] + e[i]);
                factor *= scale[i].pow(e[i]);
            }
            // act(g, x^e) = factor * x^target, so invariance forces
            // lambda_target = factor * lambda_e
            uf.relate(index.at(target), static_cast<uint32_t>(mi), factor);
        }
    }

    // one basis vector per consistent orbit
    std::map<uint32_t, Basis> orbit_basis;
    for (size_t mi = 0; mi < monomials.size(); ++mi) {
        auto [root, ph] = uf.find(static_cast<uint32_t>(mi));
        if (uf.dead[root]) continue;
        orbit_basis[root].entries.push_back({static_cast<uint32_t>(mi), ph});
    }
    std::vector<Basis> basis;
    basis.reserve(orbit_basis.size());
    for (auto& [root, b] : orbit_basis) basis.push_back(std::move(b));

    // dense generators: intersect with the kernel of act(g, .) - id
    for (const CMatrix* gp : dense_gens) {
        if (basis.empty()) break;
        std::vector<SWEPoly> diffs;
        diffs.reserve(basis.size());
        std::map<ExpVec, uint32_t> support;
        for (const auto& b : basis) {
            SWEPoly f(nv);
            for (const auto& [mi, coeff] : b.entries) f.add_term(monomials[mi], coeff);
            SWEPoly d = act(*gp, f);
            for (const auto& [mi, coeff] : b.entries) d.add_term(monomials[mi], -coeff);
            for (const auto& [e, c] : d.terms()) support.try_emplace(e, 0);
            diffs.push_back(std::move(d));
        }
        uint32_t row = 0;
        for (auto& [e, r] : support) r = row++;
        CMatrix system(support.size(), basis.size());
        for (size_t j = 0; j < diffs.size(); ++j)
            for (const auto& [e, c] : diffs[j].terms()) system.at(support.at(e), j) = c;
        std::vector<std::vector<Cyclo8>> kernel = system.nullspace();
        std::vector<Basis> next;
        next.reserve(kernel.size());
        for (const auto& combo : kernel) {
            std::map<uint32_t, Cyclo8> acc;
            for (size_t j = 0; j < basis.size(); ++j) {
                if (combo[j].is_zero()) continue;
                for (const auto& [mi, coeff] : basis[j].entries) {
                    acc[mi] += coeff * combo[j];
                }
            }
            Basis nb;
            for (auto& [mi, coeff] : acc)
                if (!coeff.is_zero()) nb.entries.push_back({mi, coeff});
            next.push_back(std::move(nb));
        }
        basis = std::move(next);
    }
    return basis.size();
}

} // namespace codent
