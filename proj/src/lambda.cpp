#include "hitq/lambda.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "hitq/poly.hpp"

namespace hitq {

int word_degree(const LambdaWord& w) {
    int d = 0;
    for (int x : w) d += x;
    return d;
}

std::string word_to_string(const LambdaWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t k = i;
        while (k < w.size() && w[k] == w[i]) ++k;
        s += "l" + std::to_string(w[i]);
        if (k - i > 1) s += "^" + std::to_string(k - i);
        i = k;
    }
    return s;
}

LambdaElement::LambdaElement(const std::vector<LambdaWord>& words) {
    for (const auto& w : words) add(w);
}

LambdaElement LambdaElement::of(const LambdaWord& w) {
    LambdaElement e;
    e.terms_.push_back(w);
    return e;
}

int LambdaElement::length() const {
    if (terms_.empty()) return -1;
    int l = int(terms_[0].size());
    for (const auto& t : terms_)
        if (int(t.size()) != l) return -2;
    return l;
}

int LambdaElement::degree() const {
    if (terms_.empty()) return -1;
    int d = word_degree(terms_[0]);
    for (const auto& t : terms_)
        if (word_degree(t) != d) return -2;
    return d;
}

void LambdaElement::add(const LambdaWord& w) {
    for (int x : w)
        if (x < 0) throw std::invalid_argument("negative lambda index");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w);
    if (it != terms_.end() && *it == w) terms_.erase(it);
    else terms_.insert(it, w);
}

LambdaElement& LambdaElement::operator+=(const LambdaElement& o) {
    std::vector<LambdaWord> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

std::string LambdaElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += " + ";
        s += word_to_string(terms_[i]);
    }
    return s;
}

bool is_admissible(const LambdaWord& w) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (2 * w[k] < w[k + 1]) return false;
    return true;
}

bool is_admissible(const LambdaElement& e) {
    for (const auto& w : e.terms())
        if (!is_admissible(w)) return false;
    return true;
}

namespace {

struct NormalMemo {
    std::shared_mutex mu;
    std::map<LambdaWord, LambdaElement> table;
};

NormalMemo& memo() {
    static NormalMemo m;
    return m;
}

} // namespace

LambdaElement normalize(const LambdaWord& w) {
    std::size_t p = 0;
    while (p + 1 < w.size() && 2 * w[p] >= w[p + 1]) ++p;
    if (p + 1 >= w.size()) return LambdaElement::of(w);
    auto& m = memo();
    {
        std::shared_lock lk(m.mu);
        auto it = m.table.find(w);
        if (it != m.table.end()) return it->second;
    }
    // lambda_i lambda_{2i+1+n} = sum_j binom(n-1-j, j) lambda_{i+n-j} lambda_{2i+1+j}
    int i = w[p], n = w[p + 1] - 2 * i - 1;
    LambdaElement out;
    LambdaWord v = w;
    for (int j = 0; 2 * j <= n - 1; ++j) {
        if (!binom2(n - 1 - j, j)) continue;
        v[p] = i + n - j;
        v[p + 1] = 2 * i + 1 + j;
        out += normalize(v);
    }
    std::unique_lock lk(m.mu);
    m.table.emplace(w, out);
    return out;
}

LambdaElement normalize(const LambdaElement& e) {
    LambdaElement out;
    for (const auto& w : e.terms()) {
        if (is_admissible(w)) out.add(w);
        else out += normalize(w);
    }
    return out;
}

LambdaElement multiply(const LambdaElement& a, const LambdaElement& b) {
    LambdaElement out;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) {
            LambdaWord w = x;
            w.insert(w.end(), y.begin(), y.end());
            out += normalize(w);
        }
    return out;
}

LambdaElement differential_raw(const LambdaElement& e) {
    LambdaElement out;
    for (const auto& w : e.terms())
        for (std::size_t p = 0; p < w.size(); ++p) {
            // d(lambda_m) = sum_{j>=1} binom(m-j, j) lambda_{m-j} lambda_{j-1}
            int m = w[p];
            for (int j = 1; 2 * j <= m; ++j) {
                if (!binom2(m - j, j)) continue;
                LambdaWord v;
                v.reserve(w.size() + 1);
                v.insert(v.end(), w.begin(), w.begin() + long(p));
                v.push_back(m - j);
                v.push_back(j - 1);
                v.insert(v.end(), w.begin() + long(p) + 1, w.end());
                out.add(v);
            }
        }
    return out;
}

LambdaElement differential(const LambdaElement& e) { return normalize(differential_raw(e)); }

LambdaElement theta(const LambdaElement& e) {
    LambdaElement out;
    for (auto w : e.terms()) {
        for (auto& x : w) x = 2 * x + 1;
        out.add(w);
    }
    return normalize(out);
}

LambdaElement mirror(const LambdaElement& e) {
    LambdaElement out;
    for (auto w : e.terms()) {
        std::reverse(w.begin(), w.end());
        out.add(w);
    }
    return out;
}

namespace {

void gen_admissible(int s, int n, int cap, LambdaWord& cur, std::vector<LambdaWord>& out) {
    if (s == 0) {
        if (n == 0) out.push_back(cur);
        return;
    }
    for (int i = 0; i <= std::min(n, cap); ++i) {
        cur.push_back(i);
        gen_admissible(s - 1, n - i, 2 * i, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<LambdaWord> admissible_basis(int s, int n) {
    if (s < 0 || n < 0) throw std::invalid_argument("admissible_basis needs s, n >= 0");
    std::vector<LambdaWord> out;
    LambdaWord cur;
    gen_admissible(s, n, n, cur, out);
    return out;
}

bool is_cycle(const LambdaElement& e) { return differential(e).is_zero(); }

namespace {

// d: Lambda^{s-1,n+1} -> Lambda^{s,n} on admissible bases
struct Boundary {
    std::vector<LambdaWord> target, source;
    std::map<LambdaWord, std::size_t> index;
    EchelonBasis ech; // generator i = d(source[i])

    BitVector vec(const LambdaElement& z) const {
        BitVector v(target.size());
        for (const auto& w : z.terms()) {
            auto it = index.find(w);
            if (it == index.end()) throw DimensionError("lambda element outside the expected bidegree");
            v.flip(it->second);
        }
        return v;
    }
};

std::shared_ptr<const Boundary> boundary(int s, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const Boundary>> cache;
    {
        std::lock_guard lk(mu);
        auto it = cache.find({s, n});
        if (it != cache.end()) return it->second;
    }
    auto b = std::make_shared<Boundary>();
    b->target = admissible_basis(s, n);
    for (std::size_t i = 0; i < b->target.size(); ++i) b->index[b->target[i]] = i;
    if (s >= 1) b->source = admissible_basis(s - 1, n + 1);
    b->ech = EchelonBasis(b->target.size(), true);
    for (const auto& w : b->source) b->ech.insert_row(b->vec(differential(LambdaElement::of(w))));
    std::lock_guard lk(mu);
    return cache.emplace(std::make_pair(s, n), b).first->second;
}

void require_cycle(const LambdaElement& z) {
    if (!is_cycle(z)) throw NotACycleError("not a cycle: " + z.to_string());
}

std::pair<int, int> bidegree(const LambdaElement& z) {
    int s = z.length(), n = z.degree();
    if (s == -2 || n == -2) throw std::invalid_argument("lambda element is not homogeneous");
    return {s, n};
}

LambdaElement chain_of(const Boundary& b, const BitVector& combo) {
    LambdaElement w;
    for (auto i : combo.indices())
        if (i < b.source.size()) w.add(b.source[i]);
    return w;
}

} // namespace

std::optional<LambdaElement> boundary_preimage(const LambdaElement& z0) {
    LambdaElement z = normalize(z0);
    if (z.is_zero()) return LambdaElement();
    auto [s, n] = bidegree(z);
    auto b = boundary(s, n);
    auto m = b->ech.member(b->vec(z));
    if (!m.member) return std::nullopt;
    return chain_of(*b, m.combination);
}

ClassComparison classes_equal(const LambdaElement& z1, const LambdaElement& z2) {
    LambdaElement a = normalize(z1), b = normalize(z2);
    require_cycle(a);
    require_cycle(b);
    ClassComparison r;
    LambdaElement sum = a + b;
    if (sum.is_zero()) {
        r.equal = true;
        r.witness = LambdaElement();
        return r;
    }
    if (!a.is_zero() && !b.is_zero() && bidegree(a) != bidegree(b)) return r;
    r.witness = boundary_preimage(sum);
    r.equal = r.witness.has_value();
    return r;
}

CycleCatalog::CycleCatalog(int max_theta) {
    for (int i = 0; i <= 10; ++i)
        base_.push_back({"h_" + std::to_string(i), 1, (1 << i) - 1, LambdaElement::of({(1 << i) - 1})});
    LambdaElement c = normalize(LambdaElement({{2, 3, 3}}));
    LambdaElement e = normalize(LambdaElement({{8, 3, 3, 3}, {4, 5, 5, 3}, {4, 7, 3, 3}, {2, 3, 5, 7}, {6, 5, 3, 3}}));
    for (int t = 0; t <= max_theta; ++t) {
        base_.push_back({"c_" + std::to_string(t), 3, c.degree(), c});
        c = theta(c);
    }
    for (int t = 0; t <= max_theta; ++t) {
        base_.push_back({"e_" + std::to_string(t), 4, e.degree(), e});
        e = theta(e);
    }
}

std::optional<CatalogEntry> CycleCatalog::find(const std::string& name) const {
    for (const auto& b : base_)
        if (b.name == name) return b;
    return std::nullopt;
}

std::vector<CatalogEntry> CycleCatalog::entries_for(int s, int n) const {
    struct Pick {
        std::vector<std::size_t> idx;
    };
    std::vector<Pick> picks;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t from, int ls, int dn) -> void {
        if (ls == 0) {
            if (dn == 0) picks.push_back({cur});
            return;
        }
        for (std::size_t i = from; i < base_.size(); ++i) {
            if (base_[i].length > ls || base_[i].degree > dn) continue;
            cur.push_back(i);
            self(self, i, ls - base_[i].length, dn - base_[i].degree);
            cur.pop_back();
        }
    };
    if (s >= 1) rec(rec, 0, s, n);
    auto distinct = [](const Pick& p) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < p.idx.size(); ++i) d += (i == 0 || p.idx[i] != p.idx[i - 1]);
        return d;
    };
    std::stable_sort(picks.begin(), picks.end(), [&](const Pick& a, const Pick& b) {
        if (a.idx.size() != b.idx.size()) return a.idx.size() < b.idx.size();
        return distinct(a) < distinct(b);
    });
    std::vector<CatalogEntry> out;
    for (const auto& p : picks) {
        CatalogEntry e;
        e.length = s;
        e.degree = n;
        e.cycle = LambdaElement::one();
        for (std::size_t i = 0; i < p.idx.size();) {
            std::size_t k = i;
            while (k < p.idx.size() && p.idx[k] == p.idx[i]) ++k;
            e.name += base_[p.idx[i]].name;
            if (k - i > 1) e.name += "^" + std::to_string(k - i);
            i = k;
        }
        for (auto i : p.idx) e.cycle = multiply(e.cycle, base_[i].cycle);
        out.push_back(std::move(e));
    }
    return out;
}

std::string Identification::to_string() const {
    if (!identified) return "unidentified";
    if (names.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s += " + ";
        s += names[i];
    }
    return s;
}

Identification identify_class(const LambdaElement& z0, const std::vector<CatalogEntry>& entries) {
    LambdaElement z = normalize(z0);
    require_cycle(z);
    Identification r;
    if (z.is_zero() && entries.empty()) {
        r.identified = true;
        r.witness = LambdaElement();
        return r;
    }
    int s, n;
    if (!z.is_zero()) std::tie(s, n) = bidegree(z);
    else std::tie(s, n) = std::make_pair(entries[0].length, entries[0].degree);
    auto b = boundary(s, n);
    EchelonBasis ech = b->ech;
    std::size_t nb = b->source.size();
    std::vector<const CatalogEntry*> used;
    for (const auto& e : entries) {
        LambdaElement c = normalize(e.cycle);
        if (!c.is_zero() && bidegree(c) != std::make_pair(s, n)) continue;
        used.push_back(&e);
        auto ins = ech.insert_row(b->vec(c));
        if (ins.inserted) continue;
        std::string rel;
        for (auto g : ins.combination.indices())
            if (g >= nb) rel += (rel.empty() ? "" : " + ") + used[g - nb]->name;
        if (rel.empty()) r.zero_entries.push_back(e.name);
        else r.aliases.emplace_back(e.name, rel);
    }
    auto m = ech.member(b->vec(z));
    if (!m.member) return r;
    r.identified = true;
    for (auto g : m.combination.indices())
        if (g >= nb) r.names.push_back(used[g - nb]->name);
    r.witness = chain_of(*b, m.combination);
    return r;
}

Identification identify_class(const LambdaElement& z, const CycleCatalog& catalog) {
    LambdaElement nz = normalize(z);
    if (nz.is_zero()) {
        Identification r;
        r.identified = true;
        r.witness = LambdaElement();
        return r;
    }
    auto [s, n] = bidegree(nz);
    return identify_class(nz, catalog.entries_for(s, n));
}

nlohmann::json to_json(const LambdaElement& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& w : e.terms()) terms.push_back(w);
    return {{"terms", terms}};
}

LambdaElement lambda_from_json(const nlohmann::json& j) {
    LambdaElement e;
    for (const auto& t : j.at("terms")) e.add(t.get<LambdaWord>());
    return e;
}

} // namespace hitq
