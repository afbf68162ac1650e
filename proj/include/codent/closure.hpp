#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "codent/matrix.hpp"

namespace codent::dyadic {
struct PackedStore;
}

namespace codent {

struct ClosureOptions {
    size_t limit = 1u << 20;
    unsigned threads = 0; // 0 = auto
    enum class Strategy { BFS, DFS } strategy = Strategy::BFS;
};

/// A finite matrix group closed under multiplication by its generators,
/// stored either in packed dyadic form (the usual case) or as plain exact
/// matrices.  Element order is deterministic: discovery order of the closure,
/// independent of the worker count.
class GroupClosure {
  public:
    size_t order() const;
    size_t dim() const;
    const std::vector<CMatrix>& generators() const { return generators_; }

    bool contains(const CMatrix& m) const;
    CMatrix element(size_t idx) const;
    /// Canonical per-element byte keys in element order.
    std::vector<std::string> element_keys() const;

    bool is_packed() const { return packed_ != nullptr; }
    const dyadic::PackedStore* packed_store() const { return packed_.get(); }

    GroupClosure(GroupClosure&&) noexcept;
    GroupClosure& operator=(GroupClosure&&) noexcept;
    ~GroupClosure();

  private:
    GroupClosure();
    friend GroupClosure close_group(const std::vector<CMatrix>&, const ClosureOptions&);

    std::vector<CMatrix> generators_;
    std::shared_ptr<dyadic::PackedStore> packed_;
    std::vector<CMatrix> generic_elements_;
    std::vector<std::string> generic_keys_; // sorted canonical keys for lookup
};

/// Breadth-first (or depth-first) closure of the generated group, starting
/// from the identity, deduplicated by canonical key.  Throws ClosureOverflow
/// past options.limit elements, ShapeError on dimension mismatch and
/// DomainError on singular generators.
GroupClosure close_group(const std::vector<CMatrix>& generators, const ClosureOptions& options = {});

namespace dyadic {

/// Flat element arena in discovery order.
struct PackedStore {
    int n = 0;
    size_t count = 0;
    std::vector<int8_t> coords;   // count * n*n*4
    std::vector<uint8_t> scales;  // count

    const int8_t* mat(size_t i) const { return &coords[i * stride()]; }
    size_t stride() const { return static_cast<size_t>(n) * static_cast<size_t>(n) * 4; }
};

} // namespace dyadic

} // namespace codent
