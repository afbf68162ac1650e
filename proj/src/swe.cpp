#include "codent/swe.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>

#include "codent/util.hpp"
#include "dyadic.hpp"

namespace codent {

bool TermOrder::operator()(const ExpVec& a, const ExpVec& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

SWEPoly SWEPoly::monomial(size_t nvars, ExpVec exp, Cyclo8 coeff) {
    SWEPoly p(nvars);
    p.add_term(exp, coeff);
    return p;
}

void SWEPoly::add_term(const ExpVec& exp, const Cyclo8& coeff) {
    if (exp.size() != nvars_) throw ShapeError("exponent vector arity mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Cyclo8 SWEPoly::coeff(const ExpVec& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Cyclo8() : it->second;
}

long SWEPoly::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
    return d;
}

bool SWEPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0L);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0L) != d) return false;
    return true;
}

bool SWEPoly::has_integer_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_rational() || c.rational_part().get_den() != 1) return false;
    return true;
}

SWEPoly SWEPoly::operator+(const SWEPoly& o) const {
    if (nvars_ != o.nvars_) throw ShapeError("polynomial arity mismatch");
    SWEPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

SWEPoly SWEPoly::operator*(const SWEPoly& o) const {
    if (nvars_ != o.nvars_) throw ShapeError("polynomial arity mismatch");
    SWEPoly out(nvars_);
    ExpVec e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < nvars_; ++i)
                e[i] = static_cast<uint8_t>(ea[i] + eb[i]);
            out.add_term(e, ca * cb);
        }
    return out;
}

SWEPoly SWEPoly::pow(unsigned e) const {
    SWEPoly acc = SWEPoly::monomial(nvars_, ExpVec(nvars_, 0), Cyclo8(1));
    SWEPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string SWEPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono = monomial_text(e);
        std::string coeff = c.to_text();
        bool neg = false;
        if (!coeff.empty() && coeff[0] == '-' && coeff.find(' ') == std::string::npos) {
            neg = true;
            coeff = coeff.substr(1);
        } else if (coeff.find(' ') != std::string::npos) {
            coeff = "(" + coeff + ")";
        }
        std::string term;
        if (mono.empty())
            term = coeff;
        else if (coeff == "1")
            term = mono;
        else
            term = coeff + "*" + mono;
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

std::string monomial_text(const ExpVec& exp) {
    std::string out;
    for (size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += class_var_name(i, exp.size());
        if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
    }
    return out;
}

ExpVec parse_monomial(const std::string& text, size_t nvars) {
    ExpVec e(nvars, 0);
    size_t p = 0;
    auto skip = [&] {
        while (p < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[p])) || text[p] == '*'))
            ++p;
    };
    skip();
    if (p == text.size()) throw ParseError("empty monomial");
    while (p < text.size()) {
        char ch = text[p];
        if (ch < 'a' || ch >= static_cast<char>('a' + std::min<size_t>(nvars, 26)))
            throw ParseError("unknown variable '" + std::string(1, ch) + "'");
        size_t var = static_cast<size_t>(ch - 'a');
        ++p;
        if (p < text.size() && text[p] == '^') ++p;
        unsigned long d = 0;
        size_t digits = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            d = d * 10 + static_cast<unsigned long>(text[p] - '0');
            ++p;
        }
        if (digits == p) d = 1;
        if (e[var] + d > 255) throw ParseError("monomial exponent too large");
        e[var] = static_cast<uint8_t>(e[var] + d);
        skip();
    }
    return e;
}

// ---------------------------------------------------------------------------
// swe

namespace {

// Open-addressing accumulator for packed exponent keys.
class FlatCounter {
  public:
    FlatCounter() { table_.assign(1u << 12, {kEmpty, 0}); }

    void add(uint64_t key, int64_t delta) {
        if ((used_ + 1) * 10 > table_.size() * 7) grow();
        size_t mask = table_.size() - 1;
        size_t pos = static_cast<size_t>(key * 0x9e3779b97f4a7c15ull) & mask;
        while (true) {
            if (table_[pos].first == key) {
                table_[pos].second += delta;
                return;
            }
            if (table_[pos].first == kEmpty) {
                table_[pos] = {key, delta};
                ++used_;
                return;
            }
            pos = (pos + 1) & mask;
        }
    }

    template <class Fn> void for_each(Fn fn) const {
        for (const auto& [k, v] : table_)
            if (k != kEmpty) fn(k, v);
    }

  private:
    static constexpr uint64_t kEmpty = ~0ull;

    void grow() {
        auto old = std::move(table_);
        table_.assign(old.size() * 2, {kEmpty, 0});
        used_ = 0;
        for (const auto& [k, v] : old)
            if (k != kEmpty) add(k, v);
    }

    std::vector<std::pair<uint64_t, int64_t>> table_;
    size_t used_ = 0;
};

} // namespace

SWEPoly swe(const std::vector<const CodeSet*>& codes, const RingSpec& spec,
            const SweOptions& options) {
    if (codes.size() != spec.g)
        throw DomainError("code tuple arity does not match the ring spec");
    if (codes.empty()) throw DomainError("swe needs at least one code");
    size_t n = codes[0]->length();
    for (size_t i = 0; i < codes.size(); ++i) {
        if (codes[i]->length() != n) throw DomainError("codes must share one length");
        if (codes[i]->modulus() != 2 * spec.ks[i])
            throw DomainError("code modulus does not match ring component " + std::to_string(i));
    }
    if (n > 255) throw EnumerationOverflow("code length above 255 is not supported");
    BigInt tuples = 1;
    for (const auto* c : codes) tuples *= c->size();
    if (!tuples.fits_ulong_p() || tuples > options.pairs_limit)
        throw EnumerationOverflow("codeword tuple count " + tuples.get_str() +
                                  " exceeds the configured limit");
    size_t total_tuples = static_cast<size_t>(tuples.get_ui());

    // per-symbol class table in r_index order
    std::vector<RElement> relems = enumerate_R(spec);
    size_t nclasses = class_reps(spec).size();
    if (nclasses > 255) throw EnumerationOverflow("too many symbol classes");
    std::vector<uint8_t> cls(relems.size());
    for (size_t i = 0; i < relems.size(); ++i)
        cls[i] = static_cast<uint8_t>(classify(relems[i], spec).index);
    // stride of code j inside the symbol index
    std::vector<size_t> stride(spec.g, 1);
    for (size_t j = spec.g; j-- > 1;) stride[j - 1] = stride[j] * static_cast<size_t>(2 * spec.ks[j]);

    bool packable = (n <= 31 && nclasses * 5 <= 60);
    size_t g = spec.g;
    size_t inner_size = codes[g - 1]->size();
    size_t outer_total = total_tuples / inner_size;

    unsigned threads = resolve_threads(options.threads);
    std::vector<FlatCounter> packed_acc(threads ? threads : 1);
    std::vector<std::map<ExpVec, int64_t>> map_acc(threads ? threads : 1);

    parallel_chunks(outer_total, threads, [&](size_t begin, size_t end, unsigned tid) {
        std::vector<size_t> partial(n);
        std::vector<uint16_t> counts(nclasses);
        for (size_t outer = begin; outer < end; ++outer) {
            // decompose the outer index into word indices of codes 0..g-2
            size_t rem = outer;
            std::fill(partial.begin(), partial.end(), 0);
            for (size_t j = g - 1; j-- > 0;) {
                size_t sz = codes[j]->size();
                size_t wi = rem % sz;
                rem /= sz;
                const Codeword& w = codes[j]->words()[wi];
                for (size_t i = 0; i < n; ++i) partial[i] += stride[j] * w[i];
            }
            for (const Codeword& w : codes[g - 1]->words()) {
                std::fill(counts.begin(), counts.end(), 0);
                for (size_t i = 0; i < n; ++i) ++counts[cls[partial[i] + w[i]]];
                if (packable) {
                    uint64_t key = 0;
                    for (size_t c = 0; c < nclasses; ++c) key = (key << 5) | counts[c];
                    packed_acc[tid].add(key, 1);
                } else {
                    ExpVec e(counts.begin(), counts.end());
                    ++map_acc[tid][e];
                }
            }
        }
    });

    SWEPoly out(nclasses);
    if (packable) {
        std::map<uint64_t, int64_t> merged;
        for (const auto& acc : packed_acc)
            acc.for_each([&](uint64_t k, int64_t v) { merged[k] += v; });
        ExpVec e(nclasses);
        for (const auto& [key, count] : merged) {
            uint64_t k = key;
            for (size_t c = nclasses; c-- > 0;) {
                e[c] = static_cast<uint8_t>(k & 31);
                k >>= 5;
            }
            out.add_term(e, Cyclo8(static_cast<long>(count)));
        }
    } else {
        std::map<ExpVec, int64_t> merged;
        for (const auto& acc : map_acc)
            for (const auto& [e, v] : acc) merged[e] += v;
        for (const auto& [e, v] : merged) out.add_term(e, Cyclo8(static_cast<long>(v)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// act

namespace {

// Monomial bases by total degree, with push[k][r*nv+j] = index of exp_r + e_j
// in level k+1.  Shared by every term expansion of one act() call.
struct Levels {
    std::vector<std::vector<ExpVec>> exps;
    std::vector<std::vector<uint32_t>> push;

    static Levels build(size_t nv, size_t maxdeg) {
        Levels lv;
        lv.exps.resize(maxdeg + 1);
        lv.exps[0] = {ExpVec(nv, 0)};
        for (size_t d = 1; d <= maxdeg; ++d) gen(nv, d, ExpVec(), lv.exps[d]);
        lv.push.resize(maxdeg);
        for (size_t d = 0; d < maxdeg; ++d) {
            std::unordered_map<std::string, uint32_t> rank;
            rank.reserve(lv.exps[d + 1].size() * 2);
            for (size_t r = 0; r < lv.exps[d + 1].size(); ++r)
                rank[keyof(lv.exps[d + 1][r])] = static_cast<uint32_t>(r);
            lv.push[d].resize(lv.exps[d].size() * nv);
            ExpVec tmp;
            for (size_t r = 0; r < lv.exps[d].size(); ++r)
                for (size_t j = 0; j < nv; ++j) {
                    tmp = lv.exps[d][r];
                    ++tmp[j];
                    lv.push[d][r * nv + j] = rank.at(keyof(tmp));
                }
        }
        return lv;
    }

  private:
    static std::string keyof(const ExpVec& e) {
        return std::string(reinterpret_cast<const char*>(e.data()), e.size());
    }

    static void gen(size_t nv, size_t deg, ExpVec prefix, std::vector<ExpVec>& out) {
        if (prefix.size() + 1 == nv) {
            prefix.push_back(static_cast<uint8_t>(deg));
            out.push_back(std::move(prefix));
            return;
        }
        for (size_t v = 0; v <= deg; ++v) {
            ExpVec next = prefix;
            next.push_back(static_cast<uint8_t>(v));
            gen(nv, deg - v, std::move(next), out);
        }
    }
};

struct Z128 {
    __int128 c[4] = {0, 0, 0, 0};
    bool is_zero() const { return !(c[0] | c[1] | c[2] | c[3]); }
};

// dst += a * b where b is an integer zeta8 quadruple (z^4 = -1)
inline void addmul(Z128& dst, const Z128& a, const int8_t b[4]) {
    dst.c[0] += a.c[0] * b[0] - a.c[1] * b[3] - a.c[2] * b[2] - a.c[3] * b[1];
    dst.c[1] += a.c[0] * b[1] + a.c[1] * b[0] - a.c[2] * b[3] - a.c[3] * b[2];
    dst.c[2] += a.c[0] * b[2] + a.c[1] * b[1] + a.c[2] * b[0] - a.c[3] * b[3];
    dst.c[3] += a.c[0] * b[3] + a.c[1] * b[2] + a.c[2] * b[1] + a.c[3] * b[0];
}

Rational int128_over_pow2(__int128 v, unsigned shift) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    BigInt num = BigInt(static_cast<unsigned long>(u >> 64)) << 64;
    num += static_cast<unsigned long>(u & ~0ull);
    if (neg) num = -num;
    Rational r(num, BigInt(1) << shift);
    r.canonicalize();
    return r;
}

// expansion of one monomial under a packed dyadic substitution
std::vector<Z128> expand_packed(const ExpVec& e, const Levels& lv, size_t nv,
                                const dyadic::PackedMatrix& m) {
    std::vector<Z128> cur(1);
    cur[0].c[0] = 1;
    size_t deg = 0;
    std::vector<Z128> next;
    for (size_t var = 0; var < nv; ++var) {
        const int8_t* row = &m.coords[var * nv * 4];
        for (uint8_t rep = 0; rep < e[var]; ++rep) {
            next.assign(lv.exps[deg + 1].size(), Z128());
            const auto& push = lv.push[deg];
            for (size_t r = 0; r < cur.size(); ++r) {
                if (cur[r].is_zero()) continue;
                for (size_t j = 0; j < nv; ++j) {
                    const int8_t* b = row + j * 4;
                    if (!(b[0] | b[1] | b[2] | b[3])) continue;
                    addmul(next[push[r * nv + j]], cur[r], b);
                }
            }
            cur.swap(next);
            ++deg;
        }
    }
    return cur;
}

std::vector<Cyclo8> expand_generic(const ExpVec& e, const Levels& lv, size_t nv, const CMatrix& m) {
    std::vector<Cyclo8> cur(1, Cyclo8(1));
    size_t deg = 0;
    std::vector<Cyclo8> next;
    for (size_t var = 0; var < nv; ++var) {
        for (uint8_t rep = 0; rep < e[var]; ++rep) {
            next.assign(lv.exps[deg + 1].size(), Cyclo8());
            const auto& push = lv.push[deg];
            for (size_t r = 0; r < cur.size(); ++r) {
                if (cur[r].is_zero()) continue;
                for (size_t j = 0; j < nv; ++j) {
                    const Cyclo8& b = m.at(var, j);
                    if (b.is_zero()) continue;
                    next[push[r * nv + j]] += cur[r] * b;
                }
            }
            cur.swap(next);
            ++deg;
        }
    }
    return cur;
}

// conservative overflow bound for the packed expansion
bool packed_fits(const dyadic::PackedMatrix& m, size_t degree) {
    size_t nv = static_cast<size_t>(m.n);
    BigInt max_row = 0;
    for (size_t i = 0; i < nv; ++i) {
        BigInt l1 = 0;
        for (size_t j = 0; j < nv * 4; ++j) l1 += std::abs(m.coords[i * nv * 4 + j]);
        max_row = std::max(max_row, l1);
    }
    if (max_row == 0) return true;
    BigInt bound = 1;
    for (size_t d = 0; d < degree; ++d) {
        bound *= max_row;
        if (bound > (BigInt(1) << 120)) return false;
    }
    return true;
}

SWEPoly act_monomial(const CMatrix& m, const SWEPoly& f) {
    size_t nv = f.nvars();
    std::vector<long> col(nv, -1);
    std::vector<Cyclo8> scale(nv);
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = 0; j < nv; ++j)
            if (!m.at(i, j).is_zero()) {
                col[i] = static_cast<long>(j);
                scale[i] = m.at(i, j);
            }
    SWEPoly out(nv);
    ExpVec target(nv);
    for (const auto& [e, c] : f.terms()) {
        std::fill(target.begin(), target.end(), 0);
        Cyclo8 factor = c;
        bool vanished = false;
        for (size_t i = 0; i < nv && !vanished; ++i) {
            if (e[i] == 0) continue;
            if (col[i] < 0) {
                vanished = true; // variable substituted by zero
                break;
            }
            target[static_cast<size_t>(col[i])] =
                static_cast<uint8_t>(target[static_cast<size_t>(col[i])] + e[i]);
            factor *= scale[i].pow(e[i]);
        }
        if (!vanished) out.add_term(target, factor);
    }
    return out;
}

} // namespace

SWEPoly act(const CMatrix& m, const SWEPoly& f) {
    if (!m.is_square() || m.rows() != f.nvars())
        throw ShapeError("action matrix must be nvars x nvars");
    if (f.empty()) return f;
    if (m.is_monomial()) return act_monomial(m, f);

    size_t nv = f.nvars();
    size_t maxdeg = static_cast<size_t>(f.degree());
    Levels lv = Levels::build(nv, maxdeg);
    SWEPoly out(nv);

    auto packed = dyadic::try_pack(m);
    if (packed && packed_fits(*packed, maxdeg)) {
        for (const auto& [e, c] : f.terms()) {
            size_t deg = static_cast<size_t>(std::accumulate(e.begin(), e.end(), 0L));
            std::vector<Z128> dense = expand_packed(e, lv, nv, *packed);
            unsigned shift = static_cast<unsigned>(packed->scale) * static_cast<unsigned>(deg);
            for (size_t r = 0; r < dense.size(); ++r) {
                if (dense[r].is_zero()) continue;
                Cyclo8 v(int128_over_pow2(dense[r].c[0], shift),
                         int128_over_pow2(dense[r].c[1], shift),
                         int128_over_pow2(dense[r].c[2], shift),
                         int128_over_pow2(dense[r].c[3], shift));
                out.add_term(lv.exps[deg][r], v * c);
            }
        }
        return out;
    }

    for (const auto& [e, c] : f.terms()) {
        size_t deg = static_cast<size_t>(std::accumulate(e.begin(), e.end(), 0L));
        std::vector<Cyclo8> dense = expand_generic(e, lv, nv, m);
        for (size_t r = 0; r < dense.size(); ++r) {
            if (dense[r].is_zero()) continue;
            out.add_term(lv.exps[deg][r], dense[r] * c);
        }
    }
    return out;
}

bool is_invariant(const SWEPoly& f, const std::vector<CMatrix>& generators) {
    for (const auto& g : generators)
        if (act(g, f) != f) return false;
    return true;
}

Cyclo8 evaluate(const SWEPoly& f, const std::vector<Cyclo8>& point) {
    if (point.size() != f.nvars()) throw ShapeError("evaluation point arity mismatch");
    // memoized powers per variable
    std::vector<std::vector<Cyclo8>> pw(f.nvars(), {Cyclo8(1)});
    auto power = [&](size_t i, uint8_t e) -> const Cyclo8& {
        auto& v = pw[i];
        while (v.size() <= e) v.push_back(v.back() * point[i]);
        return v[e];
    };
    Cyclo8 total;
    for (const auto& [e, c] : f.terms()) {
        Cyclo8 t = c;
        for (size_t i = 0; i < f.nvars(); ++i)
            if (e[i]) t *= power(i, e[i]);
        total += t;
    }
    return total;
}

CMatrix coefficient_matrix(const std::vector<SWEPoly>& polys,
                           const std::vector<ExpVec>& monomials) {
    CMatrix out(polys.size(), monomials.size());
    for (size_t i = 0; i < polys.size(); ++i)
        for (size_t j = 0; j < monomials.size(); ++j) {
            if (monomials[j].size() != polys[i].nvars())
                throw ShapeError("monomial arity does not match polynomial");
            out.at(i, j) = polys[i].coeff(monomials[j]);
        }
    return out;
}

} // namespace codent
