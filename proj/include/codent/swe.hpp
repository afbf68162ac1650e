#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "codent/codes.hpp"
#include "codent/matrix.hpp"
#include "codent/ring.hpp"

namespace codent {

using ExpVec = std::vector<uint8_t>;

/// Graded ordering, highest degree first, ties broken lexicographically with
/// the leading variable dominant.
struct TermOrder {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial in the class variables with exact Cyclo8
/// coefficients (plain integers for raw weight enumerators).
class SWEPoly {
  public:
    explicit SWEPoly(size_t nvars) : nvars_(nvars) {}
    static SWEPoly monomial(size_t nvars, ExpVec exp, Cyclo8 coeff);

    size_t nvars() const { return nvars_; }
    size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const std::map<ExpVec, Cyclo8, TermOrder>& terms() const { return terms_; }

    void add_term(const ExpVec& exp, const Cyclo8& coeff);
    Cyclo8 coeff(const ExpVec& exp) const;

    /// Max total degree over terms; -1 for the zero polynomial.
    long degree() const;
    bool is_homogeneous() const;
    bool has_integer_coeffs() const;

    SWEPoly operator+(const SWEPoly& o) const;
    SWEPoly operator*(const SWEPoly& o) const;
    SWEPoly pow(unsigned e) const;
    bool operator==(const SWEPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const SWEPoly& o) const { return !(*this == o); }

    /// "a^8 + 32*b^8 + 96*a^3*b^4*c + ..." in term order.
    std::string to_text() const;

  private:
    size_t nvars_;
    std::map<ExpVec, Cyclo8, TermOrder> terms_;
};

struct SweOptions {
    size_t pairs_limit = 1u << 25;
    unsigned threads = 0;
};

/// Symmetrized weight enumerator of a code tuple: sum over all codeword
/// tuples of the monomial counting, per coordinate, the ±-class of the column
/// symbol.  Codes must share one length and code i must live over Z_{2k_i}.
SWEPoly swe(const std::vector<const CodeSet*>& codes, const RingSpec& spec,
            const SweOptions& options = {});

/// Linear substitution x_i <- sum_j m[i][j] x_j, expanded exactly.
SWEPoly act(const CMatrix& m, const SWEPoly& f);

/// act(g, f) == f for every generator.
bool is_invariant(const SWEPoly& f, const std::vector<CMatrix>& generators);

Cyclo8 evaluate(const SWEPoly& f, const std::vector<Cyclo8>& point);

/// Row per polynomial, column per requested monomial; absent monomials give 0.
CMatrix coefficient_matrix(const std::vector<SWEPoly>& polys, const std::vector<ExpVec>& monomials);

/// Accepts "ac3d3f9", "a^2*c^2*d^4*f^8" and mixtures.
ExpVec parse_monomial(const std::string& text, size_t nvars);
std::string monomial_text(const ExpVec& exp);

} // namespace codent
