#include "codent/codes.hpp"

#include <algorithm>
#include <unordered_set>

namespace codent {

void GenMatrix::validate() const {
    if (modulus < 2 || modulus % 2 != 0)
        throw DomainError("code modulus must be an even integer >= 2");
    if (n == 0) throw DomainError("code length must be positive");
    for (const auto& row : rows) {
        if (row.size() != n) throw ShapeError("generator row length does not match code length");
        for (int v : row)
            if (v < 0 || v >= modulus) throw DomainError("generator entry out of range");
    }
}

CodeSet::CodeSet(int modulus, size_t n, std::vector<Codeword> words, GenMatrix source)
    : modulus_(modulus), n_(n), words_(std::move(words)), source_(std::move(source)) {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    if (words_.empty() || !std::all_of(words_[0].begin(), words_[0].end(),
                                       [](uint8_t v) { return v == 0; }))
        throw InternalError("enumerated code does not contain the zero word");
    // |C| divides (2k)^n
    BigInt full = 1;
    for (size_t i = 0; i < n_; ++i) full *= modulus_;
    if (full % BigInt(static_cast<unsigned long>(words_.size())) != 0)
        throw InternalError("code size does not divide the ambient group order");
    // closure under adding each generator row implies full additive closure,
    // since every codeword is a row combination
    for (const auto& w : words_) {
        Codeword shifted(n_);
        for (const auto& row : source_.rows) {
            for (size_t i = 0; i < n_; ++i)
                shifted[i] = static_cast<uint8_t>((w[i] + row[i]) % modulus_);
            if (!contains(shifted)) throw InternalError("enumerated span is not additively closed");
        }
    }
}

bool CodeSet::contains(const Codeword& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

namespace {

std::string word_key(const Codeword& w) {
    return std::string(reinterpret_cast<const char*>(w.data()), w.size());
}

std::vector<Codeword> span_by_coefficients(const GenMatrix& g, size_t limit) {
    size_t rows = g.rows.size();
    // odometer over coefficient tuples in Z_m^rows
    std::vector<int> coeff(rows, 0);
    Codeword word(g.n, 0);
    std::unordered_set<std::string> seen;
    std::vector<Codeword> out;
    while (true) {
        for (size_t i = 0; i < g.n; ++i) {
            long acc = 0;
            for (size_t r = 0; r < rows; ++r) acc += coeff[r] * g.rows[r][i];
            word[i] = static_cast<uint8_t>(acc % g.modulus);
        }
        if (seen.insert(word_key(word)).second) {
            out.push_back(word);
            if (out.size() > limit) throw EnumerationOverflow("code span exceeds limit");
        }
        size_t r = rows;
        while (r > 0) {
            --r;
            if (++coeff[r] < g.modulus) break;
            coeff[r] = 0;
            if (r == 0) return out;
        }
        if (rows == 0) return out;
    }
}

std::vector<Codeword> span_by_closure(const GenMatrix& g, size_t limit) {
    std::unordered_set<std::string> seen;
    std::vector<Codeword> out;
    out.emplace_back(g.n, 0);
    seen.insert(word_key(out[0]));
    for (size_t head = 0; head < out.size(); ++head) {
        for (const auto& row : g.rows) {
            Codeword w = out[head];
            for (size_t i = 0; i < g.n; ++i)
                w[i] = static_cast<uint8_t>((w[i] + row[i]) % g.modulus);
            if (seen.insert(word_key(w)).second) {
                out.push_back(std::move(w));
                if (out.size() > limit) throw EnumerationOverflow("code span exceeds limit");
            }
        }
    }
    return out;
}

} // namespace

CodeSet enumerate_code(const GenMatrix& g, size_t limit, EnumStrategy strategy) {
    g.validate();
    if (strategy == EnumStrategy::Auto) {
        // coefficient iteration only while the tuple count stays reasonable
        double tuples = 1;
        for (size_t r = 0; r < g.rows.size(); ++r) {
            tuples *= g.modulus;
            if (tuples > (1u << 20)) break;
        }
        strategy =
            tuples <= (1u << 20) ? EnumStrategy::CoefficientTuples : EnumStrategy::AdditiveClosure;
    } else if (strategy == EnumStrategy::CoefficientTuples) {
        double tuples = 1;
        for (size_t r = 0; r < g.rows.size(); ++r) {
            tuples *= g.modulus;
            if (tuples > (1u << 26))
                throw EnumerationOverflow("coefficient enumeration too large; use AdditiveClosure");
        }
    }
    std::vector<Codeword> words = (strategy == EnumStrategy::CoefficientTuples)
                                      ? span_by_coefficients(g, limit)
                                      : span_by_closure(g, limit);
    return CodeSet(g.modulus, g.n, std::move(words), g);
}

bool is_self_dual(const CodeSet& c) {
    // |C|^2 = (2k)^n
    BigInt sq = BigInt(c.size()) * BigInt(c.size());
    BigInt full = 1;
    for (size_t i = 0; i < c.length(); ++i) full *= c.modulus();
    if (sq != full) return false;
    // <w, row> = 0 mod 2k for every word and every generator row; by
    // bilinearity this covers all pairs of codewords
    for (const auto& w : c.words()) {
        for (const auto& row : c.source().rows) {
            long acc = 0;
            for (size_t i = 0; i < c.length(); ++i) acc += static_cast<long>(w[i]) * row[i];
            if (acc % c.modulus() != 0) return false;
        }
    }
    return true;
}

bool is_type2(const CodeSet& c) {
    if (!is_self_dual(c)) return false;
    long target = 2L * c.modulus(); // 4k
    for (const auto& w : c.words()) {
        long norm = 0;
        for (uint8_t v : w) norm += static_cast<long>(v) * v;
        if (norm % target != 0) return false;
    }
    return true;
}

GenMatrix direct_sum(const GenMatrix& a, const GenMatrix& b) {
    a.validate();
    b.validate();
    if (a.modulus != b.modulus) throw DomainError("direct sum requires equal moduli");
    GenMatrix out;
    out.modulus = a.modulus;
    out.n = a.n + b.n;
    for (const auto& row : a.rows) {
        std::vector<int> r = row;
        r.resize(out.n, 0);
        out.rows.push_back(std::move(r));
    }
    for (const auto& row : b.rows) {
        std::vector<int> r(a.n, 0);
        r.insert(r.end(), row.begin(), row.end());
        out.rows.push_back(std::move(r));
    }
    return out;
}

} // namespace codent
