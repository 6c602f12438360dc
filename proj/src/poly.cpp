#include "hitq/poly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hitq {

Monomial::Monomial(std::vector<int> exps) : e(std::move(exps)) {
    for (int x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
}

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        os << "x" << i + 1;
        if (e[i] > 1) os << "^" << e[i];
        any = true;
    }
    return any ? os.str() : "1";
}

Polynomial::Polynomial(int q, const std::vector<Monomial>& terms) : q_(q) {
    for (const auto& m : terms) add(m);
}

Polynomial Polynomial::of(const Monomial& m) {
    Polynomial p(m.q());
    p.add(m);
    return p;
}

bool Polynomial::contains(const Monomial& m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m);
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    int d = terms_[0].degree();
    for (const auto& m : terms_)
        if (m.degree() != d) return -2;
    return d;
}

void Polynomial::add(const Monomial& m) {
    if (m.q() != q_) throw std::invalid_argument("variable count mismatch");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
    if (it != terms_.end() && *it == m) terms_.erase(it);
    else terms_.insert(it, m);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.q_ != q_) throw std::invalid_argument("variable count mismatch");
    std::vector<Monomial> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += " + ";
        s += terms_[i].to_string();
    }
    return s;
}

int alpha(uint64_t n) { return std::popcount(n); }

int mu(int n) {
    if (n < 0) throw std::invalid_argument("mu of negative");
    for (int m = 0;; ++m)
        if (alpha(uint64_t(n + m)) <= m) return m;
}

bool binom2(long a, long b) {
    if (a < 0 || b < 0 || b > a) return false;
    return ((a - b) & b) == 0;
}

namespace {

void distribute(const std::vector<int>& a, std::size_t k, int rem, std::vector<int>& cur,
                std::map<Monomial, int>& acc) {
    if (k == a.size()) {
        if (rem == 0) acc[Monomial(cur)] ^= 1;
        return;
    }
    int tail = 0;
    for (std::size_t j = k + 1; j < a.size(); ++j) tail += a[j];
    // t_k must be a bit-subset of a_k
    for (int t = 0; t <= std::min(rem, a[k]); ++t) {
        if ((t & a[k]) != t) continue;
        if (rem - t > tail) continue;
        cur[k] = a[k] + t;
        distribute(a, k + 1, rem - t, cur, acc);
    }
    cur[k] = a[k];
}

} // namespace

Polynomial sq(int t, const Monomial& m) {
    if (t < 0) throw std::invalid_argument("negative square");
    Polynomial out(m.q());
    if (t > m.degree()) return out;
    std::map<Monomial, int> acc;
    std::vector<int> cur = m.e;
    distribute(m.e, 0, t, cur, acc);
    for (auto& [mm, c] : acc)
        if (c) out.add(mm);
    return out;
}

Polynomial sq(int t, const Polynomial& f) {
    Polynomial out(f.q());
    for (const auto& m : f.terms()) out += sq(t, m);
    return out;
}

WeightVector weight_of(const Monomial& m) {
    WeightVector w;
    int maxe = 0;
    for (int x : m.e) maxe = std::max(maxe, x);
    for (int j = 0; (maxe >> j) > 0; ++j) {
        int c = 0;
        for (int x : m.e) c += (x >> j) & 1;
        w.push_back(c);
    }
    while (!w.empty() && w.back() == 0) w.pop_back();
    return w;
}

int weight_degree(const WeightVector& w) {
    int d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) d += w[i] << i;
    return d;
}

int compare_weight(const WeightVector& a, const WeightVector& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

int compare(const Monomial& a, const Monomial& b) {
    if (a.q() != b.q()) throw std::invalid_argument("variable count mismatch");
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in monomial order");
    int c = compare_weight(weight_of(a), weight_of(b));
    if (c) return c;
    for (int i = 0; i < a.q(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

namespace {

void enum_monomials(int q, int k, int rem, std::vector<int>& cur, std::vector<Monomial>& out) {
    if (k == q - 1) {
        cur[k] = rem;
        out.emplace_back(cur);
        return;
    }
    for (int a = rem; a >= 0; --a) {
        cur[k] = a;
        enum_monomials(q, k + 1, rem - a, cur, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(int q, int n) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    std::vector<Monomial> out;
    if (n < 0) return out;
    std::vector<int> cur(q, 0);
    enum_monomials(q, 0, n, cur, out);
    std::vector<std::pair<WeightVector, std::size_t>> keyed;
    keyed.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(weight_of(out[i]), i);
    std::vector<std::size_t> idx(out.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        int c = compare_weight(keyed[x].first, keyed[y].first);
        if (c) return c < 0;
        return out[x].e < out[y].e;
    });
    std::vector<Monomial> sorted;
    sorted.reserve(out.size());
    for (auto i : idx) sorted.push_back(std::move(out[i]));
    return sorted;
}

bool is_spike(const Monomial& m) {
    for (int x : m.e)
        if ((x & (x + 1)) != 0) return false;
    return true;
}

std::optional<Monomial> minimal_spike(int q, int n) {
    if (n < 0 || q < 1) return std::nullopt;
    int m = mu(n);
    if (m > q) return std::nullopt;
    std::vector<int> powers; // exponents xi with sum of 2^xi = n + m
    long total = long(n) + m;
    for (int b = 62; b >= 0; --b)
        if ((total >> b) & 1) powers.push_back(b);
    // split the smallest power until there are m terms
    while (int(powers.size()) < m) {
        int last = powers.back();
        if (last == 0) return std::nullopt;
        powers.back() = last - 1;
        powers.push_back(last - 1);
    }
    std::vector<int> e(q, 0);
    for (std::size_t i = 0; i < powers.size(); ++i) {
        if (powers[i] < 1) return std::nullopt;
        e[i] = (1 << powers[i]) - 1;
    }
    return Monomial(e);
}

GF2Matrix identity_matrix(int q) {
    GF2Matrix g(q, std::vector<int>(q, 0));
    for (int i = 0; i < q; ++i) g[i][i] = 1;
    return g;
}

bool is_invertible(const GF2Matrix& g) {
    std::size_t q = g.size();
    std::vector<uint64_t> rows(q, 0);
    for (std::size_t i = 0; i < q; ++i) {
        if (g[i].size() != q) return false;
        for (std::size_t j = 0; j < q; ++j)
            if (g[i][j] & 1) rows[i] |= uint64_t{1} << j;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < q; ++c) {
        std::size_t p = rank;
        while (p < q && !((rows[p] >> c) & 1)) ++p;
        if (p == q) return false;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < q; ++r)
            if (r != rank && ((rows[r] >> c) & 1)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank == q;
}

GF2Matrix compose(const GF2Matrix& g, const GF2Matrix& h) {
    // x_i -> sum_j h_ij x_j -> sum_j h_ij sum_k g_jk x_k
    std::size_t q = g.size();
    GF2Matrix r(q, std::vector<int>(q, 0));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (h[i][j] & 1)
                for (std::size_t k = 0; k < q; ++k) r[i][k] ^= g[j][k] & 1;
    return r;
}

namespace {

// (sum of the variables in vars)^a, as exponent vectors
std::vector<std::vector<int>> power_of_sum(const std::vector<int>& vars, int a, int q) {
    std::vector<int> bits;
    for (int b = 0; (a >> b) > 0; ++b)
        if ((a >> b) & 1) bits.push_back(1 << b);
    std::vector<std::vector<int>> out;
    if (vars.empty()) {
        if (a == 0) out.emplace_back(q, 0);
        return out;
    }
    std::size_t k = vars.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < bits.size(); ++i) total *= k;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<int> e(q, 0);
        std::size_t c = code;
        for (int b : bits) {
            e[vars[c % k]] += b;
            c /= k;
        }
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

Polynomial linear_substitute(const GF2Matrix& g, const Monomial& m) {
    int q = m.q();
    if (int(g.size()) != q) throw std::invalid_argument("matrix size mismatch");
    if (!is_invertible(g)) throw std::invalid_argument("singular substitution matrix");
    std::map<std::vector<int>, int> acc;
    acc[std::vector<int>(q, 0)] = 1;
    for (int i = 0; i < q; ++i) {
        if (m.e[i] == 0) continue;
        std::vector<int> vars;
        for (int j = 0; j < q; ++j)
            if (g[i][j] & 1) vars.push_back(j);
        auto factor = power_of_sum(vars, m.e[i], q);
        std::map<std::vector<int>, int> next;
        for (const auto& [base, c] : acc) {
            if (!c) continue;
            for (const auto& f : factor) {
                std::vector<int> e = base;
                for (int j = 0; j < q; ++j) e[j] += f[j];
                next[e] ^= 1;
            }
        }
        acc = std::move(next);
    }
    Polynomial out(q);
    for (const auto& [e, c] : acc)
        if (c) out.add(Monomial(e));
    return out;
}

Polynomial linear_substitute(const GF2Matrix& g, const Polynomial& f) {
    Polynomial out(f.q());
    for (const auto& m : f.terms()) out += linear_substitute(g, m);
    return out;
}

Monomial kameko_up(const Monomial& m) {
    std::vector<int> e(m.e);
    for (int& x : e) x = 2 * x + 1;
    return Monomial(e);
}

std::optional<Monomial> kameko_down(const Monomial& m) {
    std::vector<int> e(m.e);
    for (int& x : e) {
        if (!(x & 1)) return std::nullopt;
        x = (x - 1) / 2;
    }
    return Monomial(e);
}

nlohmann::json to_json(const Monomial& m) { return nlohmann::json(m.e); }

Monomial monomial_from_json(const nlohmann::json& j) { return Monomial(j.get<std::vector<int>>()); }

nlohmann::json to_json(const Polynomial& f, int n) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& m : f.terms()) terms.push_back(m.e);
    int d = n >= 0 ? n : std::max(f.degree(), 0);
    return {{"q", f.q()}, {"n", d}, {"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    Polynomial p(j.at("q").get<int>());
    for (const auto& t : j.at("terms")) p.add(monomial_from_json(t));
    return p;
}

} // namespace hitq
