#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hitq/dual.hpp"
#include "hitq/lambda.hpp"

namespace hitq {

// Chain-level transfer. Words come out with the letter of the first variable
// leftmost and are not normalized.
LambdaElement psi(const DividedMonomial& m);
LambdaElement psi(const DualElement& e);

// psi read in the standard lambda convention (words reversed), normalized
LambdaElement transfer_cycle(const DualElement& e);

struct TransferClass {
    LambdaElement cycle;
    Identification id;
};

TransferClass transfer_class(const DualElement& e, const CycleCatalog& catalog);

struct TransferReport {
    struct Row {
        DualElement generator;
        LambdaElement cycle;
        Identification id;
    };
    int q = 0, n = 0;
    std::size_t invariant_dim = 0;
    std::vector<Row> rows;
    std::vector<std::string> image; // identified nonzero classes
    bool complete = true;            // every generator identified

    std::string summary() const; // "Im Tr_4 = <h_1c_0>"
    nlohmann::json to_json() const;
};

TransferReport transfer_image_report(int q, int n, const HitCache* cache = nullptr);

struct Sq0Check {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// theta(transfer(e)) ~ transfer(dual Kameko up of e) for a basis of primitives in degree n
Sq0Check sq0_compat_check(int q, int n);

} // namespace hitq
