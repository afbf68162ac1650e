#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "codent/closure.hpp"
#include "codent/cyclo.hpp"
#include "codent/matrix.hpp"

namespace codent {

/// Truncated power series with exact rational coefficients.
struct RationalSeries {
    std::vector<Rational> coeffs; // index = power of t; size = order + 1

    size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    Rational coeff(size_t i) const { return i < coeffs.size() ? coeffs[i] : Rational(0); }
    bool operator==(const RationalSeries& o) const { return coeffs == o.coeffs; }
    std::string to_text() const;
};

/// numerator / denominator with integer coefficients; denominator(0) != 0.
struct RationalFormula {
    std::vector<BigInt> num;
    std::vector<BigInt> den;
};

struct MolienOptions {
    unsigned threads = 0;
};

/// Exact Molien series (1/|G|) sum over elements of 1/det(I - t*lambda),
/// truncated at order N.  Elements sharing a characteristic polynomial are
/// bucketed before the series inversion.  Coefficients are checked to be
/// rational, integral and nonnegative.
RationalSeries molien_series(const GroupClosure& group, size_t N, const MolienOptions& = {});

/// Power-series expansion of num/den to order N.
RationalSeries expand_formula(const RationalFormula& f, size_t N);

/// Characteristic-polynomial buckets of a closed group: (char_det, count).
std::vector<std::pair<TPoly, size_t>> char_det_buckets(const GroupClosure& group,
                                                       const MolienOptions& = {});

struct FixedSpaceOptions {
    size_t monomial_limit = 20349;
};

/// Dimension of the degree-d homogeneous polynomials fixed by every
/// generator, computed on the monomial basis: diagonal and monomial
/// generators prune by phase-consistent orbits, dense generators by an exact
/// nullspace.  DimensionOverflow when the monomial count exceeds the limit.
size_t fixed_space_dim(const std::vector<CMatrix>& generators, size_t degree,
                       const FixedSpaceOptions& = {});

} // namespace codent
