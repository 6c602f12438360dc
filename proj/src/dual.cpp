#include "hitq/dual.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hitq {

DividedMonomial::DividedMonomial(std::vector<int> orders) : j(std::move(orders)) {
    for (int x : j)
        if (x < 0) throw std::invalid_argument("negative divided power order");
}

int DividedMonomial::degree() const {
    int d = 0;
    for (int x : j) d += x;
    return d;
}

std::string DividedMonomial::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i]) continue;
        os << "a" << i + 1 << "^(" << j[i] << ")";
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

DualElement::DualElement(int q, const std::vector<DividedMonomial>& terms) : q_(q) {
    for (const auto& t : terms) add(t);
}

DualElement DualElement::of(const DividedMonomial& m) {
    DualElement e(m.q());
    e.terms_.push_back(m);
    return e;
}

int DualElement::degree() const {
    if (terms_.empty()) return -1;
    int d = terms_[0].degree();
    for (const auto& t : terms_)
        if (t.degree() != d) return -2;
    return d;
}

void DualElement::add(const DividedMonomial& m) {
    if (m.q() != q_) throw DimensionError("divided monomial has wrong number of variables");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
    if (it != terms_.end() && *it == m) terms_.erase(it);
    else terms_.insert(it, m);
}

DualElement& DualElement::operator+=(const DualElement& o) {
    if (o.q_ != q_) throw DimensionError("dual elements in different numbers of variables");
    std::vector<DividedMonomial> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

std::string DualElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += " + ";
        s += terms_[i].to_string();
    }
    return s;
}

namespace {

void distribute(const std::vector<int>& j, std::size_t pos, int t, std::vector<int>& cur,
                std::map<std::vector<int>, bool>& acc) {
    if (pos == j.size()) {
        if (t == 0) acc[cur] = !acc[cur];
        return;
    }
    int rest_cap = 0;
    for (std::size_t k = pos + 1; k < j.size(); ++k) rest_cap += j[k] / 2;
    for (int ts = 0; ts <= j[pos] / 2 && ts <= t; ++ts) {
        if (t - ts > rest_cap) continue;
        if (!binom2(j[pos] - ts, ts)) continue;
        cur[pos] = j[pos] - ts;
        distribute(j, pos + 1, t - ts, cur, acc);
    }
    cur[pos] = j[pos];
}

} // namespace

DualElement dual_sq(int t, const DividedMonomial& m) {
    if (t < 0) throw std::invalid_argument("negative square");
    DualElement out(m.q());
    if (t == 0) return DualElement::of(m);
    std::map<std::vector<int>, bool> acc;
    std::vector<int> cur = m.j;
    distribute(m.j, 0, t, cur, acc);
    for (auto& [k, v] : acc)
        if (v) out.add(DividedMonomial(k));
    return out;
}

DualElement dual_sq(int t, const DualElement& e) {
    DualElement out(e.q());
    for (const auto& m : e.terms()) out += dual_sq(t, m);
    return out;
}

bool is_primitive(const DualElement& e) {
    int d = e.degree();
    if (d == -2) throw std::invalid_argument("dual element is not homogeneous");
    if (d <= 0) return true;
    for (int t = 1; t <= d; t <<= 1)
        if (!dual_sq(t, e).is_zero()) return false;
    return true;
}

bool pairing(const DualElement& e, const Polynomial& f) {
    if (!f.is_zero() && !e.is_zero() && e.q() != f.q()) throw DimensionError("pairing across different q");
    const auto& a = e.terms();
    const auto& b = f.terms();
    bool r = false;
    std::size_t i = 0, k = 0;
    while (i < a.size() && k < b.size()) {
        if (a[i].j < b[k].e) ++i;
        else if (b[k].e < a[i].j) ++k;
        else {
            r = !r;
            ++i;
            ++k;
        }
    }
    return r;
}

BitVector PrimitiveBasis::to_vector(const DualElement& e) const {
    BitVector v(coords.size());
    for (const auto& m : e.terms()) {
        long i = coords.find(Monomial(m.j));
        if (i < 0) throw DimensionError("divided monomial outside this degree");
        v.flip(std::size_t(i));
    }
    return v;
}

DualElement PrimitiveBasis::from_vector(const BitVector& v) const {
    DualElement e(q);
    for (auto i : v.indices()) e.add(DividedMonomial(coords.at(i).e));
    return e;
}

PrimitiveBasis primitive_basis(int q, int n) {
    if (q < 1 || n < 0) throw std::invalid_argument("primitive_basis needs q >= 1, n >= 0");
    PrimitiveBasis pb;
    pb.q = q;
    pb.n = n;
    pb.coords = MonomialIndex(q, n);
    std::size_t N = pb.coords.size();
    std::vector<BitVector> rows;
    for (int t = 1; t <= n; t <<= 1) {
        MonomialIndex target(q, n - t);
        std::vector<BitVector> block(target.size(), BitVector(N));
        for (std::size_t a = 0; a < N; ++a) {
            auto img = dual_sq(t, DividedMonomial(pb.coords.at(a).e));
            for (const auto& m : img.terms()) block[std::size_t(target.find(Monomial(m.j)))].flip(a);
        }
        for (auto& r : block)
            if (!r.is_zero()) rows.push_back(std::move(r));
    }
    pb.vectors = kernel_basis(rows, N);
    for (const auto& v : pb.vectors) pb.basis.push_back(pb.from_vector(v));
    return pb;
}

std::vector<CoinvariantGenerator> coinvariant_generators(const PrimitiveBasis& prims,
                                                         const std::vector<Polynomial>& invariants) {
    std::size_t k = invariants.size(), d = prims.dim(), N = prims.coords.size();
    std::vector<CoinvariantGenerator> out;
    if (k == 0) return out;
    // A[beta][i] = <p_i, u_beta>
    std::vector<BitVector> A(k, BitVector(d));
    std::vector<BitVector> cols(d, BitVector(k));
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t i = 0; i < d; ++i)
            if (pairing(prims.basis[i], invariants[b])) {
                A[b].set(i);
                cols[i].set(b);
            }
    EchelonBasis colspace(k, true);
    for (const auto& c : cols) colspace.insert_row(c);
    // primitives orthogonal to every invariant, in divided-monomial coordinates
    EchelonBasis ortho(N);
    for (const auto& c : kernel_basis(A, d)) {
        BitVector v(N);
        for (auto i : c.indices()) v ^= prims.vectors[i];
        ortho.insert_row(v);
    }
    for (std::size_t a = 0; a < k; ++a) {
        auto m = colspace.member(BitVector::unit(k, a));
        if (!m.member)
            throw InternalInconsistency("no primitive is dual to invariant " + std::to_string(a) +
                                        " in degree " + std::to_string(prims.n));
        BitVector v(N);
        for (auto i : m.combination.indices()) v ^= prims.vectors[i];
        v = ortho.reduce(v);
        CoinvariantGenerator g;
        g.element = prims.from_vector(v);
        g.certificate = BitVector(k);
        for (std::size_t b = 0; b < k; ++b)
            if (pairing(g.element, invariants[b])) g.certificate.set(b);
        if (g.certificate != BitVector::unit(k, a))
            throw InternalInconsistency("coinvariant certificate mismatch");
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<CoinvariantGenerator> coinvariant_generators(int q, int n, const GeneratorSet& gens,
                                                         const HitCache* cache) {
    auto qb = quotient_basis(q, n, {}, cache);
    std::vector<Polynomial> inv;
    for (const auto& v : invariant_subspace(qb, gens)) inv.push_back(qb.lift(v));
    return coinvariant_generators(primitive_basis(q, n), inv);
}

DividedMonomial dual_kameko_up(const DividedMonomial& m) {
    std::vector<int> j = m.j;
    for (auto& x : j) x = 2 * x + 1;
    return DividedMonomial(j);
}

DualElement dual_kameko_up(const DualElement& e) {
    DualElement out(e.q());
    for (const auto& m : e.terms()) out.add(dual_kameko_up(m));
    return out;
}

nlohmann::json to_json(const DualElement& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& m : e.terms()) terms.push_back(m.j);
    int d = e.degree();
    return {{"q", e.q()}, {"n", d < 0 ? 0 : d}, {"terms", terms}};
}

DualElement dual_from_json(const nlohmann::json& j) {
    int q = j.at("q").get<int>();
    DualElement e(q);
    for (const auto& t : j.at("terms")) {
        auto v = t.get<std::vector<int>>();
        if (int(v.size()) != q) throw DimensionError("term length does not match q");
        e.add(DividedMonomial(v));
    }
    if (j.contains("n") && !e.is_zero() && e.degree() != j.at("n").get<int>())
        throw std::invalid_argument("terms do not have degree n");
    return e;
}

} // namespace hitq
