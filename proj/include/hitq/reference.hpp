#pragma once

#include <string>
#include <vector>

#include "hitq/dual.hpp"
#include "hitq/lambda.hpp"
#include "hitq/poly.hpp"

// Explicit elements from the literature, used by the verification suites.
namespace hitq::ref {

// degree-9 primitive a1(1)a2(3)a3(3)a4(2) + ...
DualElement zeta_9();
// degree-17 primitive
DualElement zeta_17();
// a2^(2^{s+1}-1) a3^(2^{s+1}-1) a4^(2^{s+1}-1)
DualElement zeta_spike(int s);
// a3^(2^s-1) a4^(2^{s+t}-1)
DualElement zeta_tilde(int s, int t);
// a1^(7)a2^(7)a3^(5) + ... in three variables, degree 19
DualElement zeta_hat_19();

// G(4)-invariant in degree 17
Polynomial invariant_17();
// G(4)-invariant in degree 9
Polynomial q_9_4();
// sums of monomial families, degree 2^{s+2}+2^{s+1}-3, i = 1..3
Polynomial q_small(int s, int i);
// degree 2^{s+3}+2^{s+1}-3, i = 1..4
Polynomial q_large(int s, int i);

// words written left to right in the source's letter order; mirror before use
LambdaElement ebar0_as_printed();
LambdaElement e0_witness_as_printed();

struct PsiDisplay {
    DividedMonomial mono;
    LambdaElement printed;
};
// the four displayed psi values for the terms of zeta_9
std::vector<PsiDisplay> psi_displays_9();

} // namespace hitq::ref
