#include "hitq/linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace hitq {

BitVector BitVector::unit(std::size_t n, std::size_t i) {
    BitVector v(n);
    v.set(i);
    return v;
}

BitVector BitVector::from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
    BitVector v(n);
    for (auto i : idx) v.flip(i);
    return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (o.n_ != n_) throw DimensionError("bit vector length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVector::is_zero() const {
    for (auto x : w_)
        if (x) return false;
    return true;
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
}

long BitVector::highest() const {
    for (std::size_t i = w_.size(); i-- > 0;)
        if (w_[i]) return long(i * 64 + 63 - std::countl_zero(w_[i]));
    return -1;
}

long BitVector::lowest() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return long(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

std::vector<std::size_t> BitVector::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        uint64_t x = w_[i];
        while (x) {
            out.push_back(i * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return out;
}

bool BitVector::dot(const BitVector& o) const {
    if (o.n_ != n_) throw DimensionError("bit vector length mismatch");
    uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

void BitVector::resize(std::size_t n) {
    if (n < n_) {
        for (std::size_t i = n; i < n_; ++i) set(i, false);
    }
    n_ = n;
    w_.resize((n + 63) / 64, 0);
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

namespace {

void xor_grow(BitVector& a, const BitVector& b) {
    if (a.size() < b.size()) a.resize(b.size());
    auto* aw = a.data();
    const auto* bw = b.data();
    for (std::size_t i = 0; i < b.num_words(); ++i) aw[i] ^= bw[i];
}

inline void xor_words(uint64_t* __restrict a, const uint64_t* __restrict b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] ^= b[i];
}

} // namespace

EchelonBasis::EchelonBasis(std::size_t n, bool track)
    : n_(n), words_((n + 63) / 64), track_(track), pivot_row_(n, -1) {}

EchelonBasis::EchelonBasis(std::size_t n, std::vector<uint32_t> priority, bool track)
    : EchelonBasis(n, track) {
    if (priority.size() != n) throw DimensionError("priority length mismatch");
    bool ident = true;
    for (std::size_t i = 0; i < n; ++i) ident = ident && priority[i] == i;
    if (!ident) {
        prio_ = std::move(priority);
        inv_prio_.assign(n, 0);
        std::vector<char> seen(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (prio_[i] >= n || seen[prio_[i]]) throw std::invalid_argument("priority is not a permutation");
            seen[prio_[i]] = 1;
            inv_prio_[prio_[i]] = uint32_t(i);
        }
    }
}

EchelonBasis EchelonBasis::from_raw(std::size_t n, std::vector<uint64_t> rows, std::vector<uint32_t> pivots) {
    EchelonBasis b(n);
    if (rows.size() != pivots.size() * b.words_) throw DimensionError("raw rows size mismatch");
    b.rows_ = std::move(rows);
    b.pivots_ = std::move(pivots);
    for (std::size_t i = 0; i < b.pivots_.size(); ++i) {
        if (b.pivots_[i] >= n) throw DimensionError("raw pivot out of range");
        b.pivot_row_[b.pivots_[i]] = int32_t(i);
    }
    return b;
}

BitVector EchelonBasis::to_internal(const BitVector& v) const {
    if (v.size() != n_) throw DimensionError("vector length does not match basis universe");
    if (prio_.empty()) return v;
    BitVector r(n_);
    for (auto i : v.indices()) r.set(prio_[i]);
    return r;
}

BitVector EchelonBasis::to_external(const uint64_t* w) const {
    BitVector r(n_);
    for (std::size_t i = 0; i < words_; ++i) {
        uint64_t x = w[i];
        while (x) {
            std::size_t c = i * 64 + std::countr_zero(x);
            r.set(prio_.empty() ? c : inv_prio_[c]);
            x &= x - 1;
        }
    }
    return r;
}

void EchelonBasis::reduce_internal(BitVector& v, BitVector* combo) const {
    std::vector<int32_t> hit;
    const auto* w = v.data();
    for (std::size_t i = 0; i < words_; ++i) {
        uint64_t x = w[i];
        while (x) {
            std::size_t c = i * 64 + std::countr_zero(x);
            if (pivot_row_[c] >= 0) hit.push_back(pivot_row_[c]);
            x &= x - 1;
        }
    }
    for (auto r : hit) {
        xor_words(v.data(), rowp(r), words_);
        if (combo) xor_grow(*combo, combos_[r]);
    }
}

bool EchelonBasis::insert_internal(BitVector& v, BitVector* combo) {
    reduce_internal(v, combo);
    long p = v.highest();
    if (p < 0) return false;
    const uint64_t mask = uint64_t{1} << (p & 63);
    const std::size_t wi = std::size_t(p) >> 6;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        uint64_t* row = rowp(r);
        if (row[wi] & mask) {
            xor_words(row, v.data(), words_);
            if (combo) xor_grow(combos_[r], *combo);
        }
    }
    rows_.insert(rows_.end(), v.data(), v.data() + words_);
    pivot_row_[p] = int32_t(pivots_.size());
    pivots_.push_back(uint32_t(p));
    if (combo) combos_.push_back(*combo);
    return true;
}

EchelonBasis::InsertResult EchelonBasis::insert_row(const BitVector& v) {
    BitVector x = to_internal(v);
    InsertResult res;
    std::size_t g = ngens_++;
    BitVector combo;
    if (track_) combo = BitVector::unit(g + 1, g);
    bool ins = insert_internal(x, track_ ? &combo : nullptr);
    res.inserted = ins;
    if (ins) {
        res.remainder = to_external(x.data());
    } else {
        res.remainder = BitVector(n_);
        if (track_) {
            combo.resize(ngens_);
            combo.flip(g);
            res.combination = combo;
        }
    }
    return res;
}

EchelonBasis::MemberResult EchelonBasis::member(const BitVector& v) const {
    BitVector x = to_internal(v);
    BitVector combo;
    if (track_) combo = BitVector(ngens_);
    reduce_internal(x, track_ ? &combo : nullptr);
    MemberResult res;
    res.member = x.is_zero();
    res.remainder = to_external(x.data());
    if (track_) {
        combo.resize(ngens_);
        res.combination = combo;
    }
    return res;
}

std::size_t EchelonBasis::pivot(std::size_t i) const {
    return prio_.empty() ? pivots_.at(i) : inv_prio_[pivots_.at(i)];
}

BitVector EchelonBasis::row(std::size_t i) const {
    if (i >= pivots_.size()) throw std::out_of_range("row index");
    return to_external(rowp(i));
}

std::vector<BitVector> EchelonBasis::rows() const {
    std::vector<BitVector> out;
    out.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i) out.push_back(row(i));
    return out;
}

BitVector EchelonBasis::row_combination(std::size_t i) const {
    if (!track_) throw std::logic_error("basis does not track generators");
    BitVector c = combos_.at(i);
    c.resize(ngens_);
    return c;
}

bool EchelonBasis::is_pivot(std::size_t c) const {
    if (c >= n_) throw DimensionError("coordinate out of range");
    return pivot_row_[prio_.empty() ? c : prio_[c]] >= 0;
}

std::vector<std::size_t> EchelonBasis::pivot_coordinates() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < n_; ++c)
        if (is_pivot(c)) out.push_back(c);
    return out;
}

std::vector<std::size_t> EchelonBasis::non_pivot_coordinates() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < n_; ++c)
        if (!is_pivot(c)) out.push_back(c);
    return out;
}

void EchelonBasis::reduce_sparse(const uint32_t* idx, std::size_t k, BitVector& out) const {
    if (out.size() != n_) out = BitVector(n_);
    else std::fill(out.data(), out.data() + words_, 0);
    for (std::size_t i = 0; i < k; ++i) out.flip(idx[i]);
    for (std::size_t i = 0; i < k; ++i) {
        int32_t r = pivot_row_[idx[i]];
        if (r >= 0) xor_words(out.data(), rowp(r), words_);
    }
}

bool EchelonBasis::insert_sparse(const uint32_t* idx, std::size_t k) {
    if (!prio_.empty() || track_) throw std::logic_error("sparse insertion needs identity priority without tracking");
    BitVector v(n_);
    for (std::size_t i = 0; i < k; ++i) v.flip(idx[i]);
    // rows vanish on other pivots, so one pass over the input support suffices
    for (std::size_t i = 0; i < k; ++i) {
        int32_t r = pivot_row_[idx[i]];
        if (r >= 0) xor_words(v.data(), rowp(r), words_);
    }
    ++ngens_;
    long p = v.highest();
    if (p < 0) return false;
    const uint64_t mask = uint64_t{1} << (p & 63);
    const std::size_t wi = std::size_t(p) >> 6;
    const std::size_t nr = pivots_.size();
    uint64_t* base = rows_.data();
    for (std::size_t r = 0; r < nr; ++r) {
        uint64_t* row = base + r * words_;
        if (row[wi] & mask) xor_words(row, v.data(), words_);
    }
    rows_.insert(rows_.end(), v.data(), v.data() + words_);
    pivot_row_[p] = int32_t(nr);
    pivots_.push_back(uint32_t(p));
    return true;
}

std::vector<BitVector> kernel_basis(const std::vector<BitVector>& rows, std::size_t ncols) {
    EchelonBasis b(ncols);
    for (const auto& r : rows) {
        if (r.size() != ncols) throw DimensionError("matrix row length mismatch");
        b.insert_row(r);
    }
    std::vector<BitVector> reduced = b.rows();
    std::vector<std::size_t> piv(b.rank());
    for (std::size_t i = 0; i < b.rank(); ++i) piv[i] = b.pivot(i);
    std::vector<BitVector> out;
    for (std::size_t f : b.non_pivot_coordinates()) {
        BitVector x(ncols);
        x.set(f);
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (reduced[i].get(f)) x.set(piv[i]);
        out.push_back(std::move(x));
    }
    return out;
}

EchelonBasis intersect_coordinate_subspace(const VectorStream& gens,
                                           const std::function<bool(std::size_t)>& allowed,
                                           std::size_t n) {
    std::vector<uint32_t> prio(n);
    std::vector<char> ok(n);
    std::size_t na = 0;
    for (std::size_t c = 0; c < n; ++c) {
        ok[c] = allowed(c);
        na += ok[c];
    }
    std::size_t ia = 0, id = na;
    for (std::size_t c = 0; c < n; ++c) prio[c] = ok[c] ? uint32_t(ia++) : uint32_t(id++);
    EchelonBasis full(n, prio);
    gens([&](const BitVector& g) { full.insert_row(g); });
    EchelonBasis out(n, prio);
    for (std::size_t i = 0; i < full.rank(); ++i)
        if (ok[full.pivot(i)]) out.insert_row(full.row(i));
    return out;
}

EchelonBasis intersect_coordinate_subspace(const std::vector<BitVector>& gens,
                                           const std::function<bool(std::size_t)>& allowed,
                                           std::size_t n) {
    return intersect_coordinate_subspace(
        [&](const std::function<void(const BitVector&)>& sink) {
            for (const auto& g : gens) sink(g);
        },
        allowed, n);
}

std::size_t batch_rank(std::vector<BitVector> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    std::size_t n = rows[0].size();
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(c)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

} // namespace hitq
