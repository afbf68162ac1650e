#pragma once

// Built-in instance data: the rank-2 ring F2 x Z4, the six group generators,
// the length-8/16 code catalog, the two reference weight enumerators and the
// closed-form dimension series.  Reference matrices and polynomials are
// frozen data tables, independent of the builder code they certify.

#include "codent/codes.hpp"
#include "codent/matrix.hpp"
#include "codent/molien.hpp"
#include "codent/ring.hpp"
#include "codent/swe.hpp"

namespace codent::catalog {

RingSpec ring_f2_z4();

IntMatrix u1();
IntMatrix u2();
RatMatrix s1();
RatMatrix s2();

// generator matrices built from the definitions
std::vector<CMatrix> g_generators(); // chi, xi_u1, xi_u2, eta_s1, eta_s2, zeta8 (8x8)
std::vector<CMatrix> h_generators(); // their symmetrized 6x6 images
extern const char* const kGeneratorNames[6];

// reference forms, transcribed entry by entry
CMatrix ref_chi();
CMatrix ref_xi_u1();
CMatrix ref_xi_u2();
CMatrix ref_eta_s1();
CMatrix ref_eta_s2();
CMatrix ref_zeta8();
CMatrix ref_phi_chi();
CMatrix ref_phi_xi_u1();
CMatrix ref_phi_xi_u2();
CMatrix ref_phi_eta_s1();
CMatrix ref_phi_eta_s2();
CMatrix ref_phi_zeta8();

inline constexpr size_t kOrderG = 589824;
inline constexpr size_t kOrderH = 294912;

GenMatrix code_e8();
GenMatrix code_q8();
GenMatrix code_k8();
GenMatrix code_d16();
GenMatrix code_k16();

// reference symmetrized weight enumerators of (E8,Q8) and (E8,K8)
SWEPoly ref_swe_e8_q8();
SWEPoly ref_swe_e8_k8();

// closed-form dimension series of H: numerator over (1-t^8)^3 (1-t^24)^3
RationalFormula molien_formula_h();
// nonzero series coefficients through t^48: degree -> dimension
std::vector<std::pair<size_t, long>> molien_coeffs_h();

// degree-16 independence monomials: ac3d3f9, a2c2d4f8, c4d4f8, d8f8,
// ab2cd2e2f8, b4e4f8
std::vector<ExpVec> independence_monomials_deg16();

} // namespace codent::catalog
