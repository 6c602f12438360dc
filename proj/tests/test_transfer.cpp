#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitq/reference.hpp"
#include "hitq/transfer.hpp"

using namespace hitq;

namespace {

LambdaElement L(std::vector<LambdaWord> w) { return LambdaElement(w); }

} // namespace

TEST_CASE("psi base cases") {
    CHECK(psi(DividedMonomial({3})) == L({{3}}));
    CHECK(psi(DividedMonomial(std::vector<int>{})) == LambdaElement::one());
    CHECK(psi(DividedMonomial({0, 0})) == L({{0, 0}}));
}

TEST_CASE("psi on displayed elements") {
    CHECK(psi(ref::zeta_9()) == L({{1, 3, 3, 2}}));
    for (int s = 1; s <= 3; ++s) {
        int b = (1 << (s + 1)) - 1;
        CHECK(psi(ref::zeta_spike(s)) == L({{0, b, b, b}}));
    }
    // the displayed values are the terms led by lambda_{j_1}
    for (const auto& d : ref::psi_displays_9()) {
        auto full = psi(d.mono);
        LambdaElement lead;
        for (const auto& w : full.terms())
            if (w[0] == d.mono.j[0]) lead.add(w);
        CHECK(lead == d.printed);
    }
    auto last = psi(DividedMonomial({1, 6, 1, 1}));
    CHECK(std::find(last.terms().begin(), last.terms().end(), LambdaWord{1, 6, 1, 1}) != last.terms().end());
}

TEST_CASE("psi is linear") {
    std::mt19937 rng(8);
    auto ms = monomials_of_degree(4, 8);
    for (int trial = 0; trial < 20; ++trial) {
        DualElement a(4), b(4);
        for (const auto& m : ms) {
            if (rng() % 4 == 0) a.add(DividedMonomial(m.e));
            if (rng() % 4 == 0) b.add(DividedMonomial(m.e));
        }
        CHECK(psi(a + b) == psi(a) + psi(b));
    }
}

TEST_CASE("primitives map to cycles of the right bidegree") {
    for (int n = 1; n <= 24; ++n) {
        CAPTURE(n);
        for (const auto& e : primitive_basis(4, n).basis) {
            auto z = transfer_cycle(e);
            CHECK(is_cycle(z));
            if (!z.is_zero()) {
                CHECK(z.length() == 4);
                CHECK(z.degree() == n);
            }
        }
    }
}

TEST_CASE("transfer classes") {
    CycleCatalog cat;
    auto t9 = transfer_class(ref::zeta_9(), cat);
    CHECK(t9.cycle == L({{2, 3, 3, 1}}));
    CHECK(t9.id.to_string() == "h_1c_0");
    auto t17 = transfer_class(ref::zeta_17(), cat);
    CHECK(t17.id.to_string() == "e_0");
    auto e0 = mirror(ref::ebar0_as_printed());
    auto w = mirror(ref::e0_witness_as_printed());
    CHECK(normalize(t17.cycle + e0) == differential(w));
    CHECK_THROWS_AS(transfer_class(DualElement::of(DividedMonomial({2, 0, 0, 0})), cat), std::invalid_argument);
}

TEST_CASE("rank three transfer of the c_1 element") {
    CycleCatalog cat;
    auto t = transfer_class(ref::zeta_hat_19(), cat);
    CHECK(t.id.to_string() == "c_1");
}

TEST_CASE("two-factor spikes give products of h's") {
    CycleCatalog cat;
    // a3^(3) a4^(127): h_0^2 h_2 h_7
    auto z = ref::zeta_tilde(2, 5);
    CHECK(is_primitive(z));
    CHECK(psi(z) == L({{0, 0, 3, 127}}));
    auto t = transfer_class(z, cat);
    // h_0^2 h_2 = h_1^3, so the catalog reports the shorter name and records the alias
    CHECK(t.id.to_string() == "h_1^3h_7");
    CHECK(classes_equal(t.cycle, normalize(L({{0, 0, 3, 127}}))).equal);
    // h_0 h_1 = 0
    auto small = transfer_class(ref::zeta_tilde(1, 2), cat).id;
    CHECK(small.to_string() == "0");
}

TEST_CASE("image reports") {
    auto r9 = transfer_image_report(4, 9);
    CHECK(r9.summary() == "Im Tr_4 = <h_1c_0>");
    CHECK(r9.invariant_dim == 1);
    auto r21 = transfer_image_report(4, 21);
    CHECK(r21.summary() == "Im Tr_4 = 0");
    CHECK(r21.rows.empty());
    auto r17 = transfer_image_report(4, 17);
    CHECK(r17.summary() == "Im Tr_4 = <e_0>");
    auto j = r17.to_json();
    CHECK(j["bidegree"] == nlohmann::json::array({4, 21}));
    CHECK(j["generators"].size() == 1);
}

TEST_CASE("Sq^0 compatibility") {
    // spike dual in degree 3 against its double in degree 10
    auto e = DualElement::of(DividedMonomial({0, 1, 1, 1}));
    auto up = dual_kameko_up(e);
    CHECK(classes_equal(theta(transfer_cycle(e)), transfer_cycle(up)).equal);
    CHECK(theta(transfer_cycle(ref::zeta_9())) == normalize(L({{5, 7, 7, 3}})));
    for (int n : {3, 5, 9}) CHECK(sq0_compat_check(4, n).ok());
    CHECK(sq0_compat_check(3, 8).ok());
    CHECK(classes_equal(theta(LambdaElement()), transfer_cycle(dual_kameko_up(DualElement(4)))).equal);
}
