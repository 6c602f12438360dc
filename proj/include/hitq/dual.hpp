#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hitq/action.hpp"
#include "hitq/hit.hpp"

namespace hitq {

// a_1^{(j_1)} ... a_q^{(j_q)}
struct DividedMonomial {
    std::vector<int> j;

    DividedMonomial() = default;
    explicit DividedMonomial(std::vector<int> orders);
    static DividedMonomial unit(int q) { return DividedMonomial(std::vector<int>(q, 0)); }

    int q() const { return int(j.size()); }
    int degree() const;
    auto operator<=>(const DividedMonomial&) const = default;
    bool operator==(const DividedMonomial&) const = default;
    std::string to_string() const;
};

class DualElement {
public:
    DualElement() = default;
    explicit DualElement(int q) : q_(q) {}
    DualElement(int q, const std::vector<DividedMonomial>& terms);
    static DualElement of(const DividedMonomial& m);

    int q() const { return q_; }
    const std::vector<DividedMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // -1 zero, -2 mixed
    int degree() const;

    void add(const DividedMonomial& m);
    DualElement& operator+=(const DualElement& o);
    DualElement operator+(const DualElement& o) const {
        DualElement r = *this;
        r += o;
        return r;
    }
    bool operator==(const DualElement& o) const { return q_ == o.q_ && terms_ == o.terms_; }
    std::string to_string() const;

private:
    int q_ = 0;
    std::vector<DividedMonomial> terms_; // sorted, unique
};

// right action of Sq^t
DualElement dual_sq(int t, const DividedMonomial& m);
DualElement dual_sq(int t, const DualElement& e);

bool is_primitive(const DualElement& e);

bool pairing(const DualElement& e, const Polynomial& f);

struct PrimitiveBasis {
    int q = 0, n = 0;
    MonomialIndex coords;             // all degree-n divided monomials, same order as monomials
    std::vector<BitVector> vectors;   // over coords
    std::vector<DualElement> basis;

    std::size_t dim() const { return basis.size(); }
    BitVector to_vector(const DualElement& e) const;
    DualElement from_vector(const BitVector& v) const;
};

PrimitiveBasis primitive_basis(int q, int n);

struct CoinvariantGenerator {
    DualElement element;
    BitVector certificate; // pairings with each invariant, a unit vector
};

// one primitive per invariant, dual to the given invariant representatives
std::vector<CoinvariantGenerator> coinvariant_generators(const PrimitiveBasis& prims,
                                                         const std::vector<Polynomial>& invariants);
std::vector<CoinvariantGenerator> coinvariant_generators(int q, int n, const GeneratorSet& gens,
                                                         const HitCache* cache = nullptr);

// orders j -> 2j + 1
DividedMonomial dual_kameko_up(const DividedMonomial& m);
DualElement dual_kameko_up(const DualElement& e);

nlohmann::json to_json(const DualElement& e);
DualElement dual_from_json(const nlohmann::json& j);

} // namespace hitq
