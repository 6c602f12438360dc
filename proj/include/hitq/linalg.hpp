#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hitq/errors.hpp"

namespace hitq {

// Dense bit vector over GF(2).
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector unit(std::size_t n, std::size_t i);
    static BitVector from_indices(std::size_t n, const std::vector<std::size_t>& idx);

    std::size_t size() const { return n_; }
    std::size_t num_words() const { return w_.size(); }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v) w_[i >> 6] |= (uint64_t{1} << (i & 63));
        else w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (uint64_t{1} << (i & 63)); }

    BitVector& operator^=(const BitVector& o);
    BitVector operator^(const BitVector& o) const {
        BitVector r = *this;
        r ^= o;
        return r;
    }
    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    bool is_zero() const;
    std::size_t popcount() const;
    // -1 when zero
    long highest() const;
    long lowest() const;
    std::vector<std::size_t> indices() const;
    bool dot(const BitVector& o) const;
    void resize(std::size_t n);

    uint64_t* data() { return w_.data(); }
    const uint64_t* data() const { return w_.data(); }
    const std::vector<uint64_t>& words() const { return w_; }

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Fully reduced row echelon basis. The pivot of a row is its coordinate of
// highest priority; by default priority equals the coordinate index.
class EchelonBasis {
public:
    struct InsertResult {
        bool inserted = false;
        BitVector remainder;   // zero when dependent
        BitVector combination; // only with tracking: generators summing to the input (dependent case)
    };
    struct MemberResult {
        bool member = false;
        BitVector remainder;
        BitVector combination; // only with tracking
    };

    EchelonBasis() = default;
    explicit EchelonBasis(std::size_t n, bool track = false);
    // priority[c] is a permutation of 0..n-1; larger value = chosen first as pivot
    EchelonBasis(std::size_t n, std::vector<uint32_t> priority, bool track = false);

    std::size_t universe() const { return n_; }
    std::size_t rank() const { return pivots_.size(); }
    std::size_t generators() const { return ngens_; }
    bool tracking() const { return track_; }

    InsertResult insert_row(const BitVector& v);
    MemberResult member(const BitVector& v) const;
    BitVector reduce(const BitVector& v) const { return member(v).remainder; }

    // Pivot coordinate (external index) of row i.
    std::size_t pivot(std::size_t i) const;
    BitVector row(std::size_t i) const;
    std::vector<BitVector> rows() const;
    // Generator combination of row i (tracking only).
    BitVector row_combination(std::size_t i) const;
    bool is_pivot(std::size_t c) const;
    std::vector<std::size_t> pivot_coordinates() const;
    std::vector<std::size_t> non_pivot_coordinates() const;

    // Fast path used by the hit engine when priority is the identity.
    // Inserts the vector with the given set coordinates; returns true when independent.
    bool insert_sparse(const uint32_t* idx, std::size_t k);
    // Reduce a sparse vector in place into out (priority-space layout = external when identity).
    void reduce_sparse(const uint32_t* idx, std::size_t k, BitVector& out) const;
    bool identity_priority() const { return prio_.empty(); }

    // Raw access for serialization (priority-space layout).
    const std::vector<uint64_t>& raw_rows() const { return rows_; }
    const std::vector<uint32_t>& raw_pivots() const { return pivots_; }
    static EchelonBasis from_raw(std::size_t n, std::vector<uint64_t> rows, std::vector<uint32_t> pivots);

private:
    BitVector to_internal(const BitVector& v) const;
    BitVector to_external(const uint64_t* w) const;
    uint64_t* rowp(std::size_t i) { return rows_.data() + i * words_; }
    const uint64_t* rowp(std::size_t i) const { return rows_.data() + i * words_; }
    bool insert_internal(BitVector& v, BitVector* combo);
    void reduce_internal(BitVector& v, BitVector* combo) const;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    bool track_ = false;
    std::size_t ngens_ = 0;
    std::vector<uint32_t> prio_;     // external -> internal, empty = identity
    std::vector<uint32_t> inv_prio_; // internal -> external
    std::vector<uint64_t> rows_;     // rank * words_
    std::vector<uint32_t> pivots_;   // internal pivot coordinate per row
    std::vector<int32_t> pivot_row_; // internal coordinate -> row or -1
    std::vector<BitVector> combos_;  // per row, over generators
};

// Basis of {x : r.x = 0 for all rows r}.
std::vector<BitVector> kernel_basis(const std::vector<BitVector>& rows, std::size_t ncols);

// span(gens) intersected with the span of allowed coordinates. Disallowed
// coordinates are eliminated first; the surviving rows use the same policy.
EchelonBasis intersect_coordinate_subspace(const std::vector<BitVector>& gens,
                                           const std::function<bool(std::size_t)>& allowed,
                                           std::size_t n);
using VectorStream = std::function<void(const std::function<void(const BitVector&)>&)>;
EchelonBasis intersect_coordinate_subspace(const VectorStream& gens,
                                           const std::function<bool(std::size_t)>& allowed,
                                           std::size_t n);

// Rank by plain Gaussian elimination on a copy.
std::size_t batch_rank(std::vector<BitVector> rows);

} // namespace hitq
