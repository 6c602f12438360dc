#include "hitq/hit.hpp"

#include <algorithm>
#include <set>

#include "hitq/cache.hpp"

namespace hitq {

MonomialIndex::MonomialIndex(int q, int n, const WeightVector& floor) : q_(q), n_(n), floor_(floor) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    if (n < 0) throw std::invalid_argument("degree must be non-negative");
    bits_ = 64 / q;
    if (bits_ < 63 && (uint64_t(n) >> bits_) != 0) throw std::invalid_argument("degree too large for packed keys");
    auto all = monomials_of_degree(q, n);
    total_ = all.size();
    for (auto& m : all) {
        WeightVector w = weight_of(m);
        if (!floor_.empty() && compare_weight(w, floor_) < 0) continue;
        if (weights_.empty() || weights_.back() != w) {
            // input is sorted by weight first
            weights_.push_back(w);
        }
        wid_.push_back(uint32_t(weights_.size() - 1));
        monos_.push_back(std::move(m));
    }
    index_.reserve(monos_.size() * 2);
    for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(pack(monos_[i].e.data()), uint32_t(i));
}

uint64_t MonomialIndex::pack(const int* e) const {
    uint64_t k = 0;
    for (int i = 0; i < q_; ++i) k = (k << bits_) | uint64_t(e[i]);
    return k;
}

long MonomialIndex::find_packed(uint64_t key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : long(it->second);
}

long MonomialIndex::find(const Monomial& m) const {
    if (m.q() != q_ || m.degree() != n_) return -1;
    return find_packed(pack(m.e.data()));
}

namespace {

struct GenWalker {
    const MonomialIndex& u;
    const std::function<void(const uint32_t*, std::size_t)>& emit;
    int q;
    std::vector<int> a, img;
    std::vector<uint32_t> coords;

    void terms(int k, int rem) {
        if (k == q) {
            if (rem) return;
            long c = u.find_packed(u.pack(img.data()));
            if (c >= 0) coords.push_back(uint32_t(c));
            return;
        }
        int ak = a[k];
        // t must be a bit-subset of a_k
        for (int t = ak;; t = (t - 1) & ak) {
            if (t <= rem) {
                img[k] = ak + t;
                terms(k + 1, rem - t);
            }
            if (t == 0) break;
        }
        img[k] = ak;
    }

    void monomials(int k, int rem, int t) {
        if (k == q - 1) {
            a[k] = rem;
            img = a;
            coords.clear();
            terms(0, t);
            if (!coords.empty()) emit(coords.data(), coords.size());
            return;
        }
        for (int x = rem; x >= 0; --x) {
            a[k] = x;
            monomials(k + 1, rem - x, t);
        }
    }
};

} // namespace

void stream_hit_generators(const MonomialIndex& u, const std::function<void(const uint32_t*, std::size_t)>& emit) {
    int q = u.q(), n = u.n();
    GenWalker w{u, emit, q, std::vector<int>(q, 0), std::vector<int>(q, 0), {}};
    for (int t = 1; t <= n; t <<= 1) w.monomials(0, n - t, t);
}

namespace {

WeightVector filter_floor(int q, int n, bool on) {
    if (!on) return {};
    auto z = minimal_spike(q, n);
    if (!z) return {};
    return weight_of(*z);
}

} // namespace

HitSubspace hit_subspace(int q, int n, HitOptions opt) {
    HitSubspace h;
    h.q = q;
    h.n = n;
    WeightVector floor = filter_floor(q, n, opt.singer_filter);
    h.filtered = !floor.empty();
    h.universe = MonomialIndex(q, n, floor);
    h.echelon = EchelonBasis(h.universe.size());
    auto& ech = h.echelon;
    stream_hit_generators(h.universe, [&](const uint32_t* c, std::size_t k) { ech.insert_sparse(c, k); });
    return h;
}

QuotientBasis::QuotientBasis(std::shared_ptr<const HitSubspace> hit) : hit_(std::move(hit)) {
    const auto& u = hit_->universe;
    coord_to_adm_.assign(u.size(), -1);
    for (std::size_t c = 0; c < u.size(); ++c) {
        if (hit_->echelon.is_pivot(c)) continue;
        coord_to_adm_[c] = int32_t(admissible_.size());
        adm_coord_.push_back(uint32_t(c));
        admissible_.push_back(u.at(c));
    }
}

BitVector QuotientBasis::reduce(const Polynomial& f) const {
    const auto& u = hit_->universe;
    if (f.q() != q()) throw DimensionError("variable count mismatch");
    std::vector<uint32_t> coords;
    for (const auto& m : f.terms()) {
        if (m.degree() != n()) throw DimensionError("polynomial degree does not match the quotient");
        long c = u.find(m);
        if (c >= 0) coords.push_back(uint32_t(c)); // absent means below the spike weight, hence hit
    }
    BitVector r;
    hit_->echelon.reduce_sparse(coords.data(), coords.size(), r);
    BitVector out(dim());
    for (auto c : r.indices()) {
        int32_t a = coord_to_adm_[c];
        if (a < 0) throw std::logic_error("reduced vector has a pivot coordinate");
        out.set(std::size_t(a));
    }
    return out;
}

BitVector QuotientBasis::reduce(const Monomial& m) const { return reduce(Polynomial::of(m)); }

Polynomial QuotientBasis::lift(const BitVector& v) const {
    if (v.size() != dim()) throw DimensionError("coordinate vector length mismatch");
    Polynomial p(q());
    for (auto i : v.indices()) p.add(admissible_[i]);
    return p;
}

long QuotientBasis::admissible_index(const Monomial& m) const {
    long c = hit_->universe.find(m);
    if (c < 0) return -1;
    return coord_to_adm_[c];
}

std::map<WeightVector, std::size_t> QuotientBasis::dims_by_weight() const {
    std::map<WeightVector, std::size_t> out;
    for (const auto& w : enumerate_weights(q(), n())) out[w] = 0;
    for (auto c : adm_coord_) out[hit_->universe.weight(c)]++;
    return out;
}

QuotientBasis quotient_basis(int q, int n, HitOptions opt, const HitCache* cache) {
    if (cache) {
        if (auto b = cache->load(q, n, opt)) return *b;
    }
    auto h = std::make_shared<const HitSubspace>(hit_subspace(q, n, opt));
    QuotientBasis b(h);
    if (cache) cache->save(b);
    return b;
}

BitVector reduce_mod_hit(const Polynomial& f, const QuotientBasis& b) { return b.reduce(f); }

std::vector<WeightVector> enumerate_weights(int q, int n) {
    std::set<WeightVector, std::function<bool(const WeightVector&, const WeightVector&)>> ws(
        [](const WeightVector& a, const WeightVector& b) { return compare_weight(a, b) < 0; });
    // omega_1 has the parity of n; recurse on (n - omega_1) / 2
    std::function<void(int, WeightVector&)> rec = [&](int rem, WeightVector& cur) {
        if (rem == 0) {
            WeightVector w = cur;
            while (!w.empty() && w.back() == 0) w.pop_back();
            ws.insert(w);
            return;
        }
        for (int k = rem & 1; k <= std::min(q, rem); k += 2) {
            cur.push_back(k);
            rec((rem - k) / 2, cur);
            cur.pop_back();
        }
    };
    WeightVector cur;
    rec(n, cur);
    return {ws.begin(), ws.end()};
}

BitVector WeightQuotient::reduce(const Polynomial& f) const {
    if (f.q() != q) throw DimensionError("variable count mismatch");
    BitVector v(exact.size());
    for (const auto& m : f.terms()) {
        if (m.degree() != n) throw DimensionError("polynomial degree does not match the quotient");
        int c = compare_weight(weight_of(m), omega);
        if (c < 0) continue;
        if (c > 0) throw std::invalid_argument("term of weight above omega: " + m.to_string());
        long u = universe.find(m);
        if (u < 0) continue;
        v.flip(std::size_t(exact_pos[u]));
    }
    BitVector r = reducer.reduce(v);
    BitVector out(basis.size());
    for (auto i : r.indices()) out.set(std::size_t(basis_pos[i]));
    return out;
}

Polynomial WeightQuotient::lift(const BitVector& v) const {
    Polynomial p(q);
    for (auto i : v.indices()) p.add(basis.at(i));
    return p;
}

WeightQuotient weight_quotient(int q, int n, const WeightVector& omega) {
    if (weight_degree(omega) != n) throw std::invalid_argument("weight degree does not match n");
    WeightQuotient wq;
    wq.q = q;
    wq.n = n;
    wq.omega = omega;
    while (!wq.omega.empty() && wq.omega.back() == 0) wq.omega.pop_back();
    WeightVector floor = filter_floor(q, n, true);
    if (!floor.empty() && compare_weight(wq.omega, floor) < 0) {
        // every monomial of this weight is hit
        wq.universe = MonomialIndex(q, n, floor);
        wq.exact_pos.assign(wq.universe.size(), -1);
        wq.reducer = EchelonBasis(0);
        return wq;
    }
    wq.universe = MonomialIndex(q, n, floor);
    const auto& u = wq.universe;
    std::size_t N = u.size();
    std::vector<int> cmp(N);
    for (std::size_t c = 0; c < N; ++c) cmp[c] = compare_weight(u.weight(c), wq.omega);
    auto stream = [&](const std::function<void(const BitVector&)>& sink) {
        stream_hit_generators(u, [&](const uint32_t* c, std::size_t k) {
            BitVector v(N);
            for (std::size_t i = 0; i < k; ++i) v.flip(c[i]);
            sink(v);
        });
        for (std::size_t c = 0; c < N; ++c)
            if (cmp[c] < 0) sink(BitVector::unit(N, c));
    };
    EchelonBasis inter = intersect_coordinate_subspace(stream, [&](std::size_t c) { return cmp[c] <= 0; }, N);
    wq.exact_pos.assign(N, -1);
    for (std::size_t c = 0; c < N; ++c)
        if (cmp[c] == 0) {
            wq.exact_pos[c] = long(wq.exact.size());
            wq.exact.push_back(c);
        }
    wq.reducer = EchelonBasis(wq.exact.size());
    for (std::size_t i = 0; i < inter.rank(); ++i) {
        BitVector row = inter.row(i);
        BitVector proj(wq.exact.size());
        for (auto c : row.indices())
            if (cmp[c] == 0) proj.set(std::size_t(wq.exact_pos[c]));
        wq.reducer.insert_row(proj);
    }
    wq.basis_pos.assign(wq.exact.size(), -1);
    for (std::size_t p = 0; p < wq.exact.size(); ++p) {
        if (wq.reducer.is_pivot(p)) continue;
        wq.basis_pos[p] = long(wq.basis.size());
        wq.basis.push_back(u.at(wq.exact[p]));
    }
    return wq;
}

bool singer_hit_filter(const Monomial& m, int n) {
    if (m.degree() != n) throw std::invalid_argument("monomial degree mismatch");
    auto z = minimal_spike(m.q(), n);
    if (!z) throw NotApplicableError("mu(n) exceeds the number of variables");
    return compare_weight(weight_of(m), weight_of(*z)) < 0;
}

KamekoMap kameko_kernel(int q, int n, HitOptions opt, const HitCache* cache) {
    if (n < q || (n - q) % 2 != 0) throw UndefinedMapError("Kameko map needs n - q even and non-negative");
    KamekoMap km;
    km.source = quotient_basis(q, n, opt, cache);
    km.target = quotient_basis(q, (n - q) / 2, opt, cache);
    std::size_t td = km.target.dim();
    std::vector<BitVector> rows(td, BitVector(km.source.dim()));
    for (std::size_t i = 0; i < km.source.dim(); ++i) {
        auto d = kameko_down(km.source.admissible()[i]);
        BitVector col = d ? km.target.reduce(*d) : BitVector(td);
        for (auto r : col.indices()) rows[r].set(i);
        km.columns.push_back(std::move(col));
    }
    km.kernel = kernel_basis(rows, km.source.dim());
    km.onto = km.source.dim() - km.kernel.size() == td;
    return km;
}

} // namespace hitq
