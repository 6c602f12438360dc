#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitq/linalg.hpp"

using namespace hitq;

namespace {

BitVector random_vec(std::mt19937& rng, std::size_t n, double p = 0.3) {
    std::bernoulli_distribution b(p);
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (b(rng)) v.set(i);
    return v;
}

// every vector in the span, by enumerating subsets
std::vector<BitVector> span(const std::vector<BitVector>& gens, std::size_t n) {
    std::vector<BitVector> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << gens.size()); ++mask) {
        BitVector v(n);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (mask >> i & 1) v ^= gens[i];
        out.push_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("bit vector basics") {
    BitVector v(130);
    CHECK(v.is_zero());
    CHECK(v.highest() == -1);
    v.set(3);
    v.set(129);
    v.flip(64);
    CHECK(v.popcount() == 3);
    CHECK(v.highest() == 129);
    CHECK(v.lowest() == 3);
    CHECK(v.indices() == std::vector<std::size_t>{3, 64, 129});
    auto u = BitVector::from_indices(130, {3, 5});
    CHECK(v.dot(u) == true);
    CHECK((v ^ v).is_zero());
    v.resize(10);
    CHECK(v.indices() == std::vector<std::size_t>{3});
}

TEST_CASE("rank matches a dense elimination") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 150, m = rng() % 60;
        std::vector<BitVector> rows;
        for (std::size_t i = 0; i < m; ++i) rows.push_back(random_vec(rng, n, 0.1));
        EchelonBasis e(n);
        for (const auto& r : rows) e.insert_row(r);
        CHECK(e.rank() == batch_rank(rows));
        // reduced: every pivot column appears in exactly one row, pivots are row maxima
        for (std::size_t i = 0; i < e.rank(); ++i) {
            CHECK(std::size_t(e.row(i).highest()) == e.pivot(i));
            for (std::size_t k = 0; k < e.rank(); ++k)
                if (k != i) CHECK_FALSE(e.row(k).get(e.pivot(i)));
        }
    }
}

TEST_CASE("membership agrees with span enumeration") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 10;
        std::vector<BitVector> gens;
        for (int i = 0; i < 5; ++i) gens.push_back(random_vec(rng, n, 0.4));
        EchelonBasis e(n, true);
        for (const auto& g : gens) e.insert_row(g);
        auto all = span(gens, n);
        for (uint64_t x = 0; x < (1u << n); ++x) {
            BitVector v(n);
            for (std::size_t i = 0; i < n; ++i)
                if (x >> i & 1) v.set(i);
            bool in = std::find(all.begin(), all.end(), v) != all.end();
            auto m = e.member(v);
            REQUIRE(m.member == in);
            if (in) {
                BitVector s(n);
                for (auto g : m.combination.indices()) s ^= gens[g];
                CHECK(s == v);
            }
        }
    }
}

TEST_CASE("tracked insertion reports dependencies") {
    EchelonBasis e(4, true);
    CHECK(e.insert_row(BitVector::from_indices(4, {0, 1})).inserted);
    CHECK(e.insert_row(BitVector::from_indices(4, {1, 2})).inserted);
    auto r = e.insert_row(BitVector::from_indices(4, {0, 2}));
    CHECK_FALSE(r.inserted);
    CHECK(r.combination.indices() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("priority chooses pivots") {
    // priority reversed: lowest index wins
    std::vector<uint32_t> prio = {3, 2, 1, 0};
    EchelonBasis e(4, prio);
    e.insert_row(BitVector::from_indices(4, {0, 3}));
    CHECK(e.pivot(0) == 0);
    CHECK(e.non_pivot_coordinates() == std::vector<std::size_t>{1, 2, 3});
    CHECK(e.reduce(BitVector::from_indices(4, {0})) == BitVector::from_indices(4, {3}));
}

TEST_CASE("sparse fast path matches dense insertion") {
    std::mt19937 rng(3);
    std::size_t n = 200;
    EchelonBasis a(n), b(n);
    for (int i = 0; i < 150; ++i) {
        auto v = random_vec(rng, n, 0.03);
        std::vector<uint32_t> idx;
        for (auto k : v.indices()) idx.push_back(uint32_t(k));
        bool ins = a.insert_sparse(idx.data(), idx.size());
        CHECK(ins == b.insert_row(v).inserted);
    }
    CHECK(a.rank() == b.rank());
    for (int i = 0; i < 30; ++i) {
        auto v = random_vec(rng, n, 0.05);
        std::vector<uint32_t> idx;
        for (auto k : v.indices()) idx.push_back(uint32_t(k));
        BitVector out(n);
        a.reduce_sparse(idx.data(), idx.size(), out);
        CHECK(out == b.reduce(v));
    }
}

TEST_CASE("kernel basis") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 80;
        std::vector<BitVector> rows;
        for (int i = 0; i < int(rng() % 40); ++i) rows.push_back(random_vec(rng, n, 0.2));
        auto k = kernel_basis(rows, n);
        CHECK(k.size() == n - batch_rank(rows));
        CHECK(batch_rank(k) == k.size());
        for (const auto& x : k)
            for (const auto& r : rows) CHECK_FALSE(r.dot(x));
    }
    CHECK(kernel_basis({}, 3).size() == 3);
    CHECK_THROWS_AS(kernel_basis({BitVector(2)}, 3), DimensionError);
}

TEST_CASE("coordinate subspace intersection") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 9;
        std::vector<BitVector> gens;
        for (int i = 0; i < 6; ++i) gens.push_back(random_vec(rng, n, 0.35));
        std::vector<char> ok(n);
        for (auto& c : ok) c = rng() % 2;
        auto e = intersect_coordinate_subspace(gens, [&](std::size_t c) { return ok[c] != 0; }, n);
        // brute force: span elements supported on allowed coordinates
        std::vector<BitVector> inside;
        for (const auto& v : span(gens, n)) {
            bool good = true;
            for (auto i : v.indices()) good = good && ok[i];
            if (good && std::find(inside.begin(), inside.end(), v) == inside.end()) inside.push_back(v);
        }
        std::size_t dim = 0;
        while ((std::size_t{1} << dim) < inside.size()) ++dim;
        CHECK(e.rank() == dim);
        for (const auto& r : e.rows())
            for (auto i : r.indices()) CHECK(ok[i]);
    }
}

TEST_CASE("serialization round trip") {
    std::mt19937 rng(1);
    EchelonBasis e(100);
    for (int i = 0; i < 40; ++i) e.insert_row(random_vec(rng, 100, 0.1));
    auto f = EchelonBasis::from_raw(100, e.raw_rows(), e.raw_pivots());
    CHECK(f.rank() == e.rank());
    for (int i = 0; i < 20; ++i) {
        auto v = random_vec(rng, 100);
        CHECK(f.reduce(v) == e.reduce(v));
    }
}
