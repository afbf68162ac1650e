#pragma once

#include <string>

#include <json.hpp>

#include "codent/codes.hpp"
#include "codent/matrix.hpp"
#include "codent/molien.hpp"
#include "codent/ring.hpp"
#include "codent/swe.hpp"

namespace codent::io {

using nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// Array of four [num, den] pairs on the basis {1, z, z^2, z^3}.
json cyclo_to_json(const Cyclo8& c);
Cyclo8 cyclo_from_json(const json& j);

/// {rows, cols, entries: [...]} row-major.
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

/// {ks: [...]}; alpha and alphas are derived.
json ring_to_json(const RingSpec& spec);
RingSpec ring_from_json(const json& j);

/// {modulus, n, rows: [[...]]}.
json genmatrix_to_json(const GenMatrix& g);
GenMatrix genmatrix_from_json(const json& j);

/// {nvars, terms: [{exp: [...], coeff: ...}]}; integer coefficients are
/// written as plain numbers, anything else in the Cyclo8 array form.
json poly_to_json(const SWEPoly& p);
SWEPoly poly_from_json(const json& j);

/// Coefficient list; integers stay plain, other rationals become [num, den].
json series_to_json(const RationalSeries& s);
RationalSeries series_from_json(const json& j);

json formula_to_json(const RationalFormula& f);
RationalFormula formula_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace codent::io
