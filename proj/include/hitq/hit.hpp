#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hitq/linalg.hpp"
#include "hitq/poly.hpp"

namespace hitq {

struct HitOptions {
    // drop monomials of weight below the minimal spike before eliminating
    bool singer_filter = true;
};

// Degree-n monomials used as coordinates, ascending in monomial order.
class MonomialIndex {
public:
    MonomialIndex() = default;
    // floor: keep only monomials with weight >= floor (empty keeps everything)
    MonomialIndex(int q, int n, const WeightVector& floor = {});

    int q() const { return q_; }
    int n() const { return n_; }
    std::size_t size() const { return monos_.size(); }
    const Monomial& at(std::size_t i) const { return monos_[i]; }
    const std::vector<Monomial>& monomials() const { return monos_; }
    const WeightVector& weight(std::size_t i) const { return weights_[wid_[i]]; }
    std::size_t weight_id(std::size_t i) const { return wid_[i]; }
    const std::vector<WeightVector>& distinct_weights() const { return weights_; }
    const WeightVector& floor() const { return floor_; }
    std::size_t total_monomials() const { return total_; }

    // -1 when absent
    long find(const Monomial& m) const;
    long find_packed(uint64_t key) const;
    uint64_t pack(const int* e) const;
    int bits() const { return bits_; }

private:
    int q_ = 0, n_ = 0, bits_ = 0;
    WeightVector floor_;
    std::size_t total_ = 0;
    std::vector<Monomial> monos_;
    std::vector<WeightVector> weights_; // ascending
    std::vector<uint32_t> wid_;
    std::unordered_map<uint64_t, uint32_t> index_;
};

struct HitSubspace {
    int q = 0, n = 0;
    bool filtered = false;
    MonomialIndex universe;
    EchelonBasis echelon;

    // rank inside the full space of degree-n monomials
    std::size_t full_rank() const { return echelon.rank() + (universe.total_monomials() - universe.size()); }
};

// Calls emit(coords, k) for each generator Sq^{2^i}(m) projected on the universe.
void stream_hit_generators(const MonomialIndex& u, const std::function<void(const uint32_t*, std::size_t)>& emit);

HitSubspace hit_subspace(int q, int n, HitOptions opt = {});

class QuotientBasis {
public:
    QuotientBasis() = default;
    explicit QuotientBasis(std::shared_ptr<const HitSubspace> hit);

    int q() const { return hit_->q; }
    int n() const { return hit_->n; }
    std::size_t dim() const { return admissible_.size(); }
    const std::vector<Monomial>& admissible() const { return admissible_; }
    const HitSubspace& hit() const { return *hit_; }
    std::shared_ptr<const HitSubspace> hit_ptr() const { return hit_; }

    // coordinates of [f] over the admissible basis; zero iff f is hit
    BitVector reduce(const Polynomial& f) const;
    BitVector reduce(const Monomial& m) const;
    bool is_hit(const Polynomial& f) const { return reduce(f).is_zero(); }
    Polynomial lift(const BitVector& v) const;
    long admissible_index(const Monomial& m) const;
    std::map<WeightVector, std::size_t> dims_by_weight() const;

private:
    std::shared_ptr<const HitSubspace> hit_;
    std::vector<Monomial> admissible_;
    std::vector<uint32_t> adm_coord_;
    std::vector<int32_t> coord_to_adm_;
};

class HitCache;
QuotientBasis quotient_basis(int q, int n, HitOptions opt = {}, const HitCache* cache = nullptr);

BitVector reduce_mod_hit(const Polynomial& f, const QuotientBasis& b);

std::vector<WeightVector> enumerate_weights(int q, int n);

class WeightQuotient {
public:
    int q = 0, n = 0;
    WeightVector omega;
    MonomialIndex universe;          // degree-n monomials with weight <= omega (after any filter)
    std::vector<std::size_t> exact;  // universe coordinates of weight exactly omega
    EchelonBasis reducer;            // over exact coordinates (indexed by position in exact)
    std::vector<Monomial> basis;     // non-pivot exact-weight monomials

    std::size_t dim() const { return basis.size(); }
    // coordinates of the class of f modulo hit + lower weight, over basis
    BitVector reduce(const Polynomial& f) const;
    Polynomial lift(const BitVector& v) const;

    std::vector<long> exact_pos;     // universe coordinate -> position in exact or -1
    std::vector<long> basis_pos;     // position in exact -> basis index or -1
};

WeightQuotient weight_quotient(int q, int n, const WeightVector& omega);

bool singer_hit_filter(const Monomial& m, int n);

struct KamekoMap {
    QuotientBasis source, target;
    std::vector<BitVector> columns;  // image of each source basis vector, over target
    std::vector<BitVector> kernel;   // basis of the kernel, over source
    bool onto = false;
};

KamekoMap kameko_kernel(int q, int n, HitOptions opt = {}, const HitCache* cache = nullptr);

} // namespace hitq
