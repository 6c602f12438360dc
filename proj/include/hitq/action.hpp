#pragma once

#include <string>
#include <vector>

#include "hitq/hit.hpp"

namespace hitq {

enum class GroupKind { Sigma, FullLinear };

struct Generator {
    std::string name;
    GF2Matrix matrix;
};

struct GeneratorSet {
    int q = 0;
    GroupKind kind = GroupKind::Sigma;
    std::vector<Generator> gens;

    // sigma_1..sigma_{q-1} swap x_j, x_{j+1}; FullLinear adds sigma_q: x_1 -> x_1 + x_2
    static GeneratorSet make(int q, GroupKind kind);
};

GroupKind parse_group(const std::string& s);

struct ActionMatrix {
    std::string generator;
    std::vector<BitVector> columns; // image of basis vector i

    std::size_t dim() const { return columns.size(); }
    BitVector apply(const BitVector& v) const;
    bool is_invertible() const;
    bool is_identity() const;
    // this after other
    ActionMatrix after(const ActionMatrix& other) const;
};

ActionMatrix action_matrix(const Generator& g, const QuotientBasis& space);
ActionMatrix action_matrix(const Generator& g, const WeightQuotient& space);

// common fixed points of the matrices; extra rows are further linear conditions
std::vector<BitVector> fixed_points(const std::vector<ActionMatrix>& ms, std::size_t dim,
                                    const std::vector<BitVector>& extra_rows = {});

std::vector<BitVector> invariant_subspace(const QuotientBasis& space, const GeneratorSet& gens);
std::vector<BitVector> invariant_subspace(const WeightQuotient& space, const GeneratorSet& gens);

// invariants inside the kernel of the Kameko map Q_n -> Q_{(n-q)/2}, over Q_n coordinates
std::vector<BitVector> kernel_invariants(int q, int n, const GeneratorSet& gens, HitOptions opt = {},
                                         const HitCache* cache = nullptr);
std::vector<BitVector> kernel_invariants(const KamekoMap& km, const GeneratorSet& gens);

} // namespace hitq
