#pragma once

#include "codent/matrix.hpp"
#include "codent/ring.hpp"

namespace codent {

/// e(r) for a rational number of turns r; requires 8r integral so the value
/// stays inside Q(zeta8), otherwise UnsupportedSpec.
Cyclo8 root_from_turns(const Rational& turns);

/// The Fourier-type generator: entry (a,b) = e(1/8)^g (2^g a^g a_1..a_g)^{-1/2}
/// e(<D^-1 a, b>/2alpha), indexed by enumerate_R order.
CMatrix build_chi(const RingSpec& spec);

/// Permutation-type generator for U in Omega(D): entry (a,b) = sqrt(det U)
/// when b = U a componentwise mod 2k_i, else 0.  sqrt(1) = 1, sqrt(-1) = z^2.
CMatrix build_xi(const IntMatrix& u, const RingSpec& spec);

/// Diagonal generator for S in Lambda(D): entry (a,a) = e(S[a]/4alpha).
CMatrix build_eta(const RatMatrix& s, const RingSpec& spec);

/// Scalar matrix e(1/8) * I_n.
CMatrix build_zeta(size_t n);

/// Class symmetrization: entry (abar,bbar) = sum over d with dbar = bbar of
/// g[rep(abar), d].  Throws NotSymmetrizable when the row sums for a and -a
/// disagree for some class.
CMatrix symmetrize(const CMatrix& gmat, const RingSpec& spec);

} // namespace codent
