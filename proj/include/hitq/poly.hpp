#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hitq {

// x_1^{e_1} ... x_q^{e_q}
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial one(int q) { return Monomial(std::vector<int>(q, 0)); }

    int q() const { return int(e.size()); }
    int degree() const;
    // plain lexicographic order on exponent vectors, for containers
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
    std::string to_string() const;
};

// GF(2) sum of distinct monomials in q variables.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int q) : q_(q) {}
    Polynomial(int q, const std::vector<Monomial>& terms);
    static Polynomial of(const Monomial& m);

    int q() const { return q_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool contains(const Monomial& m) const;
    // -1 for the zero polynomial, -2 when not homogeneous
    int degree() const;

    // adding an existing term cancels it
    void add(const Monomial& m);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        r += o;
        return r;
    }
    bool operator==(const Polynomial& o) const { return q_ == o.q_ && terms_ == o.terms_; }
    std::string to_string() const;

private:
    int q_ = 0;
    std::vector<Monomial> terms_; // sorted, unique
};

using WeightVector = std::vector<int>;

int alpha(uint64_t n);
int mu(int n);
bool binom2(long a, long b);

Polynomial sq(int t, const Monomial& m);
Polynomial sq(int t, const Polynomial& f);

WeightVector weight_of(const Monomial& m);
int weight_degree(const WeightVector& w);
// left-lexicographic with implicit trailing zeros; returns -1, 0, 1
int compare_weight(const WeightVector& a, const WeightVector& b);
// monomial order: weight first, then exponent vector left-lex; throws on degree mismatch
int compare(const Monomial& a, const Monomial& b);
// all monomials of degree n in q variables, ascending in monomial order
std::vector<Monomial> monomials_of_degree(int q, int n);

bool is_spike(const Monomial& m);
std::optional<Monomial> minimal_spike(int q, int n);

// square matrix over GF(2); row i lists the image of x_i as a sum of variables
using GF2Matrix = std::vector<std::vector<int>>;
GF2Matrix identity_matrix(int q);
bool is_invertible(const GF2Matrix& g);
// matrix of the substitution "first h, then g"
GF2Matrix compose(const GF2Matrix& g, const GF2Matrix& h);
Polynomial linear_substitute(const GF2Matrix& g, const Monomial& m);
Polynomial linear_substitute(const GF2Matrix& g, const Polynomial& f);

Monomial kameko_up(const Monomial& m);
std::optional<Monomial> kameko_down(const Monomial& m);

nlohmann::json to_json(const Monomial& m);
Monomial monomial_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Polynomial& f, int n = -1);
Polynomial polynomial_from_json(const nlohmann::json& j);

} // namespace hitq
