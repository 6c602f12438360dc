#include "hitq/reference.hpp"

namespace hitq::ref {

namespace {

DualElement dual4(const std::vector<std::vector<int>>& t) {
    DualElement e(int(t[0].size()));
    for (const auto& v : t) e.add(DividedMonomial(v));
    return e;
}

Polynomial poly4(const std::vector<std::vector<int>>& t) {
    Polynomial f(4);
    for (const auto& v : t) f.add(Monomial(v));
    return f;
}

int p2(int k) { return 1 << k; }

} // namespace

DualElement zeta_9() { return dual4({{1, 3, 3, 2}, {1, 3, 4, 1}, {1, 5, 2, 1}, {1, 6, 1, 1}}); }

DualElement zeta_17() {
    return dual4({{5, 5, 5, 2},  {5, 5, 6, 1},  {3, 5, 8, 1},  {5, 3, 8, 1},  {3, 6, 7, 1},  {5, 7, 4, 1},
                  {7, 5, 4, 1},  {3, 9, 4, 1},  {9, 3, 4, 1},  {3, 9, 3, 2},  {9, 3, 3, 2},  {5, 9, 2, 1},
                  {9, 5, 2, 1},  {5, 10, 1, 1}, {9, 6, 1, 1},  {3, 11, 2, 1}, {11, 3, 2, 1}, {5, 5, 3, 4},
                  {5, 3, 5, 4},  {3, 5, 5, 4},  {3, 12, 1, 1}, {11, 4, 1, 1}, {7, 8, 1, 1},  {7, 7, 1, 2},
                  {13, 2, 1, 1}, {14, 1, 1, 1}, {6, 5, 3, 3},  {5, 3, 6, 3},  {3, 6, 5, 3},  {6, 3, 3, 5},
                  {3, 3, 6, 5},  {3, 6, 3, 5},  {5, 3, 3, 6},  {3, 5, 3, 6},  {3, 3, 5, 6},  {3, 3, 3, 8},
                  {3, 3, 4, 7},  {3, 5, 2, 7},  {3, 6, 1, 7},  {3, 3, 9, 2},  {3, 3, 10, 1}, {5, 3, 7, 2},
                  {5, 7, 3, 2},  {7, 5, 3, 2}});
}

DualElement zeta_spike(int s) {
    int b = p2(s + 1) - 1;
    return dual4({{0, b, b, b}});
}

DualElement zeta_tilde(int s, int t) { return dual4({{0, 0, p2(s) - 1, p2(s + t) - 1}}); }

DualElement zeta_hat_19() { return dual4({{7, 7, 5}, {7, 9, 3}, {11, 5, 3}, {13, 3, 3}}); }

Polynomial invariant_17() {
    return poly4({{1, 1, 1, 14}, {1, 1, 14, 1}, {1, 3, 1, 12}, {1, 3, 12, 1},
                  {3, 1, 1, 12}, {3, 1, 12, 1}, {3, 5, 1, 8}, {3, 5, 8, 1}});
}

Polynomial q_9_4() {
    return poly4({{1, 1, 1, 6}, {1, 1, 6, 1}, {1, 6, 1, 1}, {3, 1, 1, 4}, {3, 1, 4, 1}, {3, 4, 1, 1}});
}

Polynomial q_small(int s, int i) {
    int A = p2(s) - 1, B = p2(s + 1) - 1, C = p2(s + 2) - 1, D = 3 * p2(s) - 1;
    switch (i) {
    case 1:
        return poly4({{0, A, A, C}, {0, A, C, A}, {0, C, A, A}, {A, 0, A, C}, {A, 0, C, A}, {A, A, 0, C},
                      {A, A, C, 0}, {A, C, 0, A}, {A, C, A, 0}, {C, 0, A, A}, {C, A, 0, A}, {C, A, A, 0}});
    case 2:
        return poly4({{0, A, B, D}, {0, B, A, D}, {0, B, D, A}, {A, 0, B, D}, {A, B, 0, D}, {A, B, D, 0},
                      {B, 0, A, D}, {B, 0, D, A}, {B, A, 0, D}, {B, A, D, 0}, {B, D, 0, A}, {B, D, A, 0}});
    case 3:
        return poly4({{0, B, B, B}, {B, 0, B, B}, {B, B, 0, B}, {B, B, B, 0}});
    }
    throw std::out_of_range("q_small index must be 1..3");
}

Polynomial q_large(int s, int i) {
    int A = p2(s) - 1, B = p2(s + 1) - 1, C = p2(s + 2) - 1, E = p2(s + 3) - 1;
    int F = 7 * p2(s) - 1, G = 3 * p2(s) - 1, H = 5 * p2(s) - 1;
    switch (i) {
    case 1:
        return poly4({{0, B, C, C}, {0, C, B, C}, {0, C, C, B}, {B, 0, C, C}, {C, 0, B, C}, {C, 0, C, B},
                      {B, C, 0, C}, {C, B, 0, C}, {C, C, 0, B}, {B, C, C, 0}, {C, B, C, 0}, {C, C, B, 0}});
    case 2:
        return poly4({{0, A, A, E}, {0, A, E, A}, {0, E, A, A}, {A, 0, A, E}, {A, 0, E, A}, {A, A, 0, E},
                      {A, A, E, 0}, {A, E, 0, A}, {A, E, A, 0}, {E, 0, A, A}, {E, A, 0, A}, {E, A, A, 0}});
    case 3:
        return poly4({{0, A, B, F}, {0, B, A, F}, {0, B, F, A}, {A, 0, B, F}, {A, B, 0, F}, {A, B, F, 0},
                      {B, 0, A, F}, {B, 0, F, A}, {B, A, 0, F}, {B, A, F, 0}, {B, F, 0, A}, {B, F, A, 0}});
    case 4:
        return poly4({{0, B, G, H}, {B, 0, G, H}, {B, G, 0, H}, {B, G, H, 0}});
    }
    throw std::out_of_range("q_large index must be 1..4");
}

LambdaElement ebar0_as_printed() {
    return LambdaElement({{3, 3, 3, 8}, {3, 5, 5, 4}, {3, 3, 7, 4}, {7, 5, 3, 2}, {3, 3, 5, 6}});
}

LambdaElement e0_witness_as_printed() { return LambdaElement({{3, 5, 10}, {3, 12, 3}, {4, 7, 7}, {0, 11, 7}}); }

std::vector<PsiDisplay> psi_displays_9() {
    return {
        {DividedMonomial({1, 3, 3, 2}), LambdaElement({{1, 3, 3, 2}, {1, 3, 4, 1}, {1, 4, 3, 1}})},
        {DividedMonomial({1, 3, 4, 1}), LambdaElement({{1, 3, 4, 1}, {1, 4, 3, 1}, {1, 5, 2, 1}})},
        {DividedMonomial({1, 5, 2, 1}), LambdaElement({{1, 5, 2, 1}, {1, 6, 1, 1}})},
        {DividedMonomial({1, 6, 1, 1}), LambdaElement({{1, 6, 1, 1}})},
    };
}

} // namespace hitq::ref
