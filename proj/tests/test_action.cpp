#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitq/action.hpp"

using namespace hitq;

TEST_CASE("generator sets") {
    auto s = GeneratorSet::make(4, GroupKind::Sigma);
    auto g = GeneratorSet::make(4, GroupKind::FullLinear);
    CHECK(s.gens.size() == 3);
    CHECK(g.gens.size() == 4);
    for (const auto& x : g.gens) CHECK(is_invertible(x.matrix));
    CHECK(g.gens[3].matrix[0] == std::vector<int>{1, 1, 0, 0});
    CHECK(parse_group("gl") == GroupKind::FullLinear);
    CHECK_THROWS(parse_group("psl"));
}

TEST_CASE("identity acts trivially") {
    auto b = quotient_basis(4, 9);
    auto m = action_matrix({"id", identity_matrix(4)}, b);
    CHECK(m.is_identity());
}

TEST_CASE("swap on Q^2_3") {
    auto b = quotient_basis(2, 3);
    REQUIRE(b.dim() == 3);
    GF2Matrix sw = {{0, 1}, {1, 0}};
    auto m = action_matrix({"swap", sw}, b);
    // [x1^3] -> [x2^3], [x1 x2^2] -> [x1^2 x2] = [x1 x2^2]
    auto a = b.reduce(Monomial({3, 0})), c = b.reduce(Monomial({0, 3})), mid = b.reduce(Monomial({1, 2}));
    CHECK(m.apply(a) == c);
    CHECK(m.apply(c) == a);
    CHECK(m.apply(mid) == mid);
    CHECK(b.reduce(Monomial({2, 1})) == mid);
    CHECK(m.is_invertible());
    CHECK(m.after(m).is_identity());
}

TEST_CASE("action matrices are invertible, transpositions are involutions") {
    for (int q = 2; q <= 4; ++q)
        for (int n = 1; n <= 24; ++n) {
            auto b = quotient_basis(q, n);
            if (b.dim() == 0) continue;
            for (const auto& g : GeneratorSet::make(q, GroupKind::FullLinear).gens) {
                auto m = action_matrix(g, b);
                CAPTURE(q);
                CAPTURE(n);
                CHECK(m.is_invertible());
                CHECK(m.after(m).is_identity());
            }
        }
}

TEST_CASE("the action descends to the quotient") {
    for (int q = 2; q <= 4; ++q)
        for (int n = 1; n <= 16; ++n) {
            auto b = quotient_basis(q, n, {false});
            for (const auto& g : GeneratorSet::make(q, GroupKind::FullLinear).gens)
                for (int t = 1; t <= n; t <<= 1)
                    for (const auto& m : monomials_of_degree(q, n - t)) {
                        auto h = sq(t, m);
                        if (!b.is_hit(linear_substitute(g.matrix, h))) {
                            CAPTURE(n);
                            FAIL("image of a hit element is not hit");
                        }
                    }
        }
}

TEST_CASE("GL invariants lie inside Sigma invariants") {
    for (int n = 1; n <= 24; ++n) {
        auto b = quotient_basis(4, n);
        auto gl = invariant_subspace(b, GeneratorSet::make(4, GroupKind::FullLinear));
        auto sig = invariant_subspace(b, GeneratorSet::make(4, GroupKind::Sigma));
        CHECK(gl.size() <= sig.size());
        EchelonBasis e(b.dim());
        for (const auto& v : sig) e.insert_row(v);
        for (const auto& v : gl) CHECK(e.member(v).member);
    }
}

TEST_CASE("published invariant dimensions") {
    auto gl = GeneratorSet::make(4, GroupKind::FullLinear);
    auto sig = GeneratorSet::make(4, GroupKind::Sigma);
    auto b9 = quotient_basis(4, 9);
    CHECK(invariant_subspace(b9, sig).size() == 4);
    CHECK(invariant_subspace(b9, gl).size() == 1);
    CHECK(invariant_subspace(quotient_basis(4, 21), gl).empty());
}

TEST_CASE("invariants are fixed by every generator") {
    auto gl = GeneratorSet::make(4, GroupKind::FullLinear);
    for (int n : {9, 17, 22}) {
        auto b = quotient_basis(4, n);
        for (const auto& v : invariant_subspace(b, gl))
            for (const auto& g : gl.gens) CHECK(b.reduce(linear_substitute(g.matrix, b.lift(v))) == v);
    }
}

TEST_CASE("weight-piece invariants") {
    auto sig = GeneratorSet::make(4, GroupKind::Sigma);
    auto wq = weight_quotient(4, 9, {3, 3});
    auto inv = invariant_subspace(wq, sig);
    CHECK(!inv.empty());
    for (const auto& v : inv)
        for (const auto& g : sig.gens) CHECK(wq.reduce(linear_substitute(g.matrix, wq.lift(v))) == v);
}

TEST_CASE("kernel invariants") {
    auto gl = GeneratorSet::make(4, GroupKind::FullLinear);
    CHECK(kernel_invariants(4, 10, gl).empty());
    CHECK(kernel_invariants(4, 22, gl).empty());
    CHECK_THROWS_AS(kernel_invariants(4, 9, gl), UndefinedMapError);
    // kernel invariants are invariants killed by the Kameko map
    auto km = kameko_kernel(4, 12);
    for (const auto& v : kernel_invariants(km, gl)) {
        BitVector img(km.target.dim());
        for (auto i : v.indices()) img ^= km.columns[i];
        CHECK(img.is_zero());
    }
}
