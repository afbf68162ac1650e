#include "codent/closure.hpp"

#include <algorithm>
#include <deque>

#include "codent/util.hpp"
#include "dyadic.hpp"

namespace codent {

using dyadic::PackedMatrix;
using dyadic::PackedStore;

GroupClosure::GroupClosure() = default;
GroupClosure::GroupClosure(GroupClosure&&) noexcept = default;
GroupClosure& GroupClosure::operator=(GroupClosure&&) noexcept = default;
GroupClosure::~GroupClosure() = default;

size_t GroupClosure::order() const {
    return packed_ ? packed_->count : generic_elements_.size();
}

size_t GroupClosure::dim() const {
    if (packed_) return static_cast<size_t>(packed_->n);
    return generic_elements_.empty() ? 0 : generic_elements_[0].rows();
}

CMatrix GroupClosure::element(size_t idx) const {
    if (idx >= order()) throw NotFound("element index out of range");
    if (!packed_) return generic_elements_[idx];
    PackedMatrix p;
    p.n = packed_->n;
    p.scale = packed_->scales[idx];
    p.coords.assign(packed_->mat(idx), packed_->mat(idx) + packed_->stride());
    return dyadic::unpack(p);
}

std::vector<std::string> GroupClosure::element_keys() const {
    std::vector<std::string> keys;
    keys.reserve(order());
    if (packed_) {
        for (size_t i = 0; i < packed_->count; ++i) {
            std::string k;
            k.reserve(packed_->stride() + 2);
            k.push_back(static_cast<char>(packed_->n));
            k.push_back(static_cast<char>(packed_->scales[i]));
            k.append(reinterpret_cast<const char*>(packed_->mat(i)), packed_->stride());
            keys.push_back(std::move(k));
        }
    } else {
        for (const auto& m : generic_elements_) keys.push_back(m.canonical_key());
    }
    return keys;
}

bool GroupClosure::contains(const CMatrix& m) const {
    if (m.rows() != dim() || m.cols() != dim()) return false;
    if (packed_) {
        auto p = dyadic::try_pack(m);
        if (!p) return false;
        for (size_t i = 0; i < packed_->count; ++i) {
            if (packed_->scales[i] == p->scale &&
                std::equal(p->coords.begin(), p->coords.end(), packed_->mat(i)))
                return true;
        }
        return false;
    }
    std::string key = m.canonical_key();
    return std::binary_search(generic_keys_.begin(), generic_keys_.end(), key);
}

namespace {

// Open-addressing index over the packed arena.
class PackedIndex {
  public:
    PackedIndex() { rehash(4096); }

    // Returns true when inserted (element is new).
    bool insert(const PackedStore& store, const PackedMatrix& cand, size_t cand_idx) {
        if ((store.count + 1) * 4 > capacity_ * 3) rehash(store, capacity_ * 2);
        uint64_t h = hash(cand.scale, cand.coords.data(), cand.coords.size());
        size_t mask = capacity_ - 1;
        size_t pos = static_cast<size_t>(h) & mask;
        while (slots_[pos] != kEmpty) {
            size_t e = slots_[pos];
            if (store.scales[e] == cand.scale &&
                std::equal(cand.coords.begin(), cand.coords.end(), store.mat(e)))
                return false;
            pos = (pos + 1) & mask;
        }
        slots_[pos] = cand_idx;
        return true;
    }

  private:
    static constexpr size_t kEmpty = static_cast<size_t>(-1);

    static uint64_t hash(uint8_t scale, const int8_t* coords, size_t len) {
        return dyadic::hash_bytes(coords, len, scale);
    }

    void rehash(size_t cap) {
        capacity_ = 1;
        while (capacity_ < cap) capacity_ <<= 1;
        slots_.assign(capacity_, kEmpty);
    }

    void rehash(const PackedStore& store, size_t cap) {
        rehash(cap);
        size_t mask = capacity_ - 1;
        for (size_t e = 0; e < store.count; ++e) {
            uint64_t h = hash(store.scales[e], store.mat(e), store.stride());
            size_t pos = static_cast<size_t>(h) & mask;
            while (slots_[pos] != kEmpty) pos = (pos + 1) & mask;
            slots_[pos] = e;
        }
    }

    size_t capacity_ = 0;
    std::vector<size_t> slots_;
};

void append_to_store(PackedStore& store, const PackedMatrix& m) {
    store.coords.insert(store.coords.end(), m.coords.begin(), m.coords.end());
    store.scales.push_back(m.scale);
    ++store.count;
}

PackedMatrix store_ref(const PackedStore& store, size_t idx) {
    PackedMatrix p;
    p.n = store.n;
    p.scale = store.scales[idx];
    p.coords.assign(store.mat(idx), store.mat(idx) + store.stride());
    return p;
}

// Closure over the packed dyadic arena.  Candidate products are generated in
// (element, generator) order; workers only parallelize the multiplication, so
// the discovery order is identical for every worker count.
std::shared_ptr<PackedStore> close_packed(const std::vector<PackedMatrix>& gens,
                                          const ClosureOptions& options) {
    auto store = std::make_shared<PackedStore>();
    store->n = gens[0].n;
    PackedMatrix ident;
    ident.n = store->n;
    ident.scale = 0;
    ident.coords.assign(store->stride(), 0);
    for (int i = 0; i < store->n; ++i) ident.coords[(i * store->n + i) * 4] = 1;
    append_to_store(*store, ident);

    PackedIndex index;
    index.insert(*store, ident, 0);

    unsigned threads = resolve_threads(options.threads);

    if (options.strategy == ClosureOptions::Strategy::DFS) {
        std::vector<size_t> stack = {0};
        while (!stack.empty()) {
            size_t e = stack.back();
            stack.pop_back();
            PackedMatrix cur = store_ref(*store, e);
            for (const auto& g : gens) {
                PackedMatrix prod = dyadic::mul(g, cur);
                if (index.insert(*store, prod, store->count)) {
                    append_to_store(*store, prod);
                    if (store->count > options.limit)
                        throw ClosureOverflow("closure exceeded limit of " +
                                              std::to_string(options.limit));
                    stack.push_back(store->count - 1);
                }
            }
        }
        return store;
    }

    // One BFS round per pass over the frontier [frontier_begin, frontier_end).
    // Blocks bound product-buffer memory; inserts stay in (element, generator)
    // order so discovery order never depends on the worker count.
    size_t stride = store->stride();
    size_t ngens = gens.size();
    size_t block = std::max<size_t>(1, 65536 / ngens);
    std::vector<int8_t> cand_coords;
    std::vector<uint8_t> cand_scales;
    PackedMatrix cand;
    cand.n = store->n;
    size_t frontier_begin = 0, frontier_end = store->count;
    while (frontier_begin < frontier_end) {
        for (size_t bstart = frontier_begin; bstart < frontier_end; bstart += block) {
            size_t bend = std::min(frontier_end, bstart + block);
            size_t cnt = (bend - bstart) * ngens;
            cand_coords.resize(cnt * stride);
            cand_scales.resize(cnt);
            parallel_chunks(bend - bstart, threads, [&](size_t cb, size_t ce, unsigned) {
                std::vector<int32_t> scratch;
                for (size_t i = cb; i < ce; ++i) {
                    dyadic::View cur{store->mat(bstart + i), store->scales[bstart + i], store->n};
                    for (size_t gi = 0; gi < ngens; ++gi) {
                        size_t slot = i * ngens + gi;
                        dyadic::View gen{gens[gi].coords.data(), gens[gi].scale, gens[gi].n};
                        dyadic::mul_into(gen, cur, scratch, &cand_coords[slot * stride],
                                         cand_scales[slot]);
                    }
                }
            });
            for (size_t slot = 0; slot < cnt; ++slot) {
                cand.scale = cand_scales[slot];
                cand.coords.assign(&cand_coords[slot * stride], &cand_coords[(slot + 1) * stride]);
                if (index.insert(*store, cand, store->count)) {
                    append_to_store(*store, cand);
                    if (store->count > options.limit)
                        throw ClosureOverflow("closure exceeded limit of " +
                                              std::to_string(options.limit));
                }
            }
        }
        frontier_begin = frontier_end;
        frontier_end = store->count;
    }
    return store;
}

} // namespace

GroupClosure close_group(const std::vector<CMatrix>& generators, const ClosureOptions& options) {
    if (generators.empty()) throw DomainError("closure needs at least one generator");
    size_t n = generators[0].rows();
    for (const auto& g : generators) {
        if (!g.is_square() || g.rows() != n)
            throw ShapeError("generators must be square matrices of equal dimension");
        if (g.det().is_zero()) throw DomainError("generators must be invertible");
    }

    GroupClosure out;
    out.generators_ = generators;

    // packed fast path when every generator is dyadic
    std::vector<PackedMatrix> packed;
    packed.reserve(generators.size());
    bool all_packed = true;
    for (const auto& g : generators) {
        auto p = dyadic::try_pack(g);
        if (!p) {
            all_packed = false;
            break;
        }
        packed.push_back(std::move(*p));
    }
    if (all_packed) {
        try {
            out.packed_ = close_packed(packed, options);
            return out;
        } catch (const dyadic::PackedRange&) {
            // element coordinates outgrew the packed form; redo generically
        }
    }

    // generic exact-matrix closure
    std::vector<CMatrix> elements;
    std::vector<std::pair<std::string, size_t>> index;
    auto lookup = [&](const std::string& key) {
        auto it = std::lower_bound(index.begin(), index.end(), key,
                                   [](const auto& a, const std::string& k) { return a.first < k; });
        return (it != index.end() && it->first == key) ? static_cast<long>(it->second) : -1;
    };
    auto insert = [&](CMatrix m) {
        std::string key = m.canonical_key();
        if (lookup(key) >= 0) return false;
        elements.push_back(std::move(m));
        auto it = std::lower_bound(index.begin(), index.end(), key,
                                   [](const auto& a, const std::string& k) { return a.first < k; });
        index.insert(it, {std::move(key), elements.size() - 1});
        if (elements.size() > options.limit)
            throw ClosureOverflow("closure exceeded limit of " + std::to_string(options.limit));
        return true;
    };

    insert(CMatrix::identity(n));
    std::deque<size_t> work = {0};
    while (!work.empty()) {
        size_t e;
        if (options.strategy == ClosureOptions::Strategy::DFS) {
            e = work.back();
            work.pop_back();
        } else {
            e = work.front();
            work.pop_front();
        }
        for (const auto& g : generators) {
            CMatrix prod = g * elements[e];
            if (insert(std::move(prod))) work.push_back(elements.size() - 1);
        }
    }
    out.generic_elements_ = std::move(elements);
    out.generic_keys_.reserve(index.size());
    for (auto& [key, idx] : index) out.generic_keys_.push_back(std::move(key));
    return out;
}

} // namespace codent
