#pragma once

#include <cstdint>
#include <vector>

#include "codent/cyclo.hpp"

namespace codent {

using Codeword = std::vector<uint8_t>;

/// Generator matrix of a linear code over Z_{2k}; rows need not be
/// independent.
struct GenMatrix {
    int modulus = 2; // 2k
    size_t n = 0;
    std::vector<std::vector<int>> rows;

    void validate() const;
};

/// A fully enumerated code: the additive span of the generator rows, sorted
/// lexicographically and deduplicated.
class CodeSet {
  public:
    CodeSet(int modulus, size_t n, std::vector<Codeword> words, GenMatrix source);

    int modulus() const { return modulus_; }
    size_t length() const { return n_; }
    size_t size() const { return words_.size(); }
    const std::vector<Codeword>& words() const { return words_; }
    const GenMatrix& source() const { return source_; }
    bool contains(const Codeword& w) const;

  private:
    int modulus_;
    size_t n_;
    std::vector<Codeword> words_;
    GenMatrix source_;
};

enum class EnumStrategy {
    Auto,
    CoefficientTuples, // iterate all coefficient vectors over the rows
    AdditiveClosure,   // grow the span by repeated row addition
};

/// Full additive span; EnumerationOverflow past `limit` codewords (or when a
/// forced coefficient iteration is hopeless).
CodeSet enumerate_code(const GenMatrix& g, size_t limit = 1u << 26,
                       EnumStrategy strategy = EnumStrategy::Auto);

/// All inner products vanish mod 2k and |C|^2 = (2k)^n.
bool is_self_dual(const CodeSet& c);

/// Self-dual and every norm <x,x> = 0 mod 4k.
bool is_type2(const CodeSet& c);

/// Block-diagonal generator matrix of length a.n + b.n.
GenMatrix direct_sum(const GenMatrix& a, const GenMatrix& b);

} // namespace codent
