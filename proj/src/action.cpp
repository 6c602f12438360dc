#include "hitq/action.hpp"

#include <algorithm>

namespace hitq {

GeneratorSet GeneratorSet::make(int q, GroupKind kind) {
    GeneratorSet s;
    s.q = q;
    s.kind = kind;
    for (int j = 0; j + 1 < q; ++j) {
        GF2Matrix g = identity_matrix(q);
        std::swap(g[j], g[j + 1]);
        s.gens.push_back({"sigma_" + std::to_string(j + 1), g});
    }
    if (kind == GroupKind::FullLinear && q >= 2) {
        GF2Matrix g = identity_matrix(q);
        g[0][1] = 1;
        s.gens.push_back({"sigma_" + std::to_string(q), g});
    }
    return s;
}

GroupKind parse_group(const std::string& s) {
    if (s == "sigma" || s == "Sigma") return GroupKind::Sigma;
    if (s == "gl" || s == "GL") return GroupKind::FullLinear;
    throw std::invalid_argument("unknown group '" + s + "' (expected sigma or gl)");
}

BitVector ActionMatrix::apply(const BitVector& v) const {
    if (v.size() != dim()) throw DimensionError("vector length does not match action matrix");
    BitVector out(dim());
    for (auto i : v.indices()) out ^= columns[i];
    return out;
}

bool ActionMatrix::is_invertible() const { return batch_rank(columns) == dim(); }

bool ActionMatrix::is_identity() const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (columns[i] != BitVector::unit(dim(), i)) return false;
    return true;
}

ActionMatrix ActionMatrix::after(const ActionMatrix& other) const {
    ActionMatrix r;
    r.generator = generator + "*" + other.generator;
    for (const auto& c : other.columns) r.columns.push_back(apply(c));
    return r;
}

ActionMatrix action_matrix(const Generator& g, const QuotientBasis& space) {
    if (int(g.matrix.size()) != space.q()) throw DimensionError("generator size does not match q");
    ActionMatrix m;
    m.generator = g.name;
    for (const auto& x : space.admissible()) m.columns.push_back(space.reduce(linear_substitute(g.matrix, x)));
    return m;
}

ActionMatrix action_matrix(const Generator& g, const WeightQuotient& space) {
    if (int(g.matrix.size()) != space.q) throw DimensionError("generator size does not match q");
    ActionMatrix m;
    m.generator = g.name;
    for (const auto& x : space.basis) m.columns.push_back(space.reduce(linear_substitute(g.matrix, x)));
    return m;
}

std::vector<BitVector> fixed_points(const std::vector<ActionMatrix>& ms, std::size_t dim,
                                    const std::vector<BitVector>& extra_rows) {
    std::vector<BitVector> rows;
    for (const auto& m : ms) {
        if (m.dim() != dim) throw DimensionError("action matrix size mismatch");
        // row r of (M + I)
        std::vector<BitVector> mr(dim, BitVector(dim));
        for (std::size_t c = 0; c < dim; ++c)
            for (auto r : m.columns[c].indices()) mr[r].flip(c);
        for (std::size_t r = 0; r < dim; ++r) {
            mr[r].flip(r);
            if (!mr[r].is_zero()) rows.push_back(std::move(mr[r]));
        }
    }
    for (const auto& r : extra_rows) rows.push_back(r);
    return kernel_basis(rows, dim);
}

std::vector<BitVector> invariant_subspace(const QuotientBasis& space, const GeneratorSet& gens) {
    std::vector<ActionMatrix> ms;
    for (const auto& g : gens.gens) ms.push_back(action_matrix(g, space));
    return fixed_points(ms, space.dim());
}

std::vector<BitVector> invariant_subspace(const WeightQuotient& space, const GeneratorSet& gens) {
    std::vector<ActionMatrix> ms;
    for (const auto& g : gens.gens) ms.push_back(action_matrix(g, space));
    return fixed_points(ms, space.dim());
}

std::vector<BitVector> kernel_invariants(const KamekoMap& km, const GeneratorSet& gens) {
    std::size_t d = km.source.dim();
    std::vector<BitVector> rows(km.target.dim(), BitVector(d));
    for (std::size_t i = 0; i < d; ++i)
        for (auto r : km.columns[i].indices()) rows[r].set(i);
    std::vector<ActionMatrix> ms;
    for (const auto& g : gens.gens) ms.push_back(action_matrix(g, km.source));
    return fixed_points(ms, d, rows);
}

std::vector<BitVector> kernel_invariants(int q, int n, const GeneratorSet& gens, HitOptions opt,
                                         const HitCache* cache) {
    return kernel_invariants(kameko_kernel(q, n, opt, cache), gens);
}

} // namespace hitq
