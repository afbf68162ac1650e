#pragma once

// Internal packed arithmetic for matrices over Z[zeta8][1/2]: every entry is
// (c0 + c1 z + c2 z^2 + c3 z^3) / 2^scale with one shared scale per matrix
// and int8 coordinates.  Entries of the catalog groups are bounded well
// within this range (unitarity bounds |coord| by 2^scale); anything that
// does not fit falls back to generic CMatrix arithmetic at the call site.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codent/matrix.hpp"

namespace codent::dyadic {

struct PackedMatrix {
    int n = 0;
    uint8_t scale = 0;
    std::vector<int8_t> coords; // ((i*n + j)*4 + k)

    bool operator==(const PackedMatrix& o) const = default;
};

struct PackedRange : Error {
    using Error::Error;
};

// Exact conversion; nullopt when a denominator is not a power of two or a
// coordinate exceeds int8.
std::optional<PackedMatrix> try_pack(const CMatrix& m);
CMatrix unpack(const PackedMatrix& p);

// Strip factors of two shared by every coordinate.
void normalize(std::vector<int32_t>& coords, int& scale);

// a * b with scale addition and normalization; PackedRange if the canonical
// result leaves int8/uint8 range.
PackedMatrix mul(const PackedMatrix& a, const PackedMatrix& b);

// Raw view over arena storage.
struct View {
    const int8_t* coords;
    uint8_t scale;
    int n;
};

// As mul(), writing into caller-owned buffers; scratch must hold n*n*4 ints.
void mul_into(const View& a, const View& b, std::vector<int32_t>& scratch, int8_t* out_coords,
              uint8_t& out_scale);

// Canonical bytes: dimension, scale, coordinates.
std::string key_bytes(const PackedMatrix& p);

uint64_t hash_bytes(const int8_t* data, size_t len, uint64_t seed);

} // namespace codent::dyadic
