#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codent/cyclo.hpp"

namespace codent {

using RElement = std::vector<int>;
using IntMatrix = std::vector<std::vector<long>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// The ambient ring R = Z_{2k_1} x ... x Z_{2k_g} with k_i | k_{i+1},
/// alpha = k_1 and alpha_i = k_i / alpha.  D = diag(alpha_1..alpha_g).
struct RingSpec {
    std::vector<long> ks;
    std::vector<long> alphas;
    long alpha = 1;
    size_t g = 0;

    static RingSpec from_ks(std::vector<long> ks);

    size_t r_size() const;
    size_t class_count() const;
};

struct ClassIndex {
    RElement rep;
    size_t index;
    bool operator==(const ClassIndex&) const = default;
};

/// All of R in lexicographic order, first component outermost.
std::vector<RElement> enumerate_R(const RingSpec& spec);

RElement negate(const RElement& a, const RingSpec& spec);

/// Canonical representatives min(a, -a) of R/± in lexicographic order.
std::vector<RElement> class_reps(const RingSpec& spec);

/// The ±-class of a: canonical representative and its index in class_reps.
ClassIndex classify(const RElement& a, const RingSpec& spec);

/// Position of a in enumerate_R order.
size_t r_index(const RElement& a, const RingSpec& spec);

/// Variable name for a class index: a..z for small alphabets, x<i> beyond.
std::string class_var_name(size_t index, size_t nvars);

/// U in GL(g,Z) with D^-1 U D integral (equivalently U_{ij} = 0 mod
/// alpha_i/alpha_j below the diagonal).
bool omega_member(const IntMatrix& u, const RingSpec& spec);

/// Symmetric rational S with SD integral.
bool lambda_member(const RatMatrix& s, const RingSpec& spec);

long int_det(const IntMatrix& u);

} // namespace codent
