#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hitq/linalg.hpp"

namespace hitq {

// lambda_{i_1} ... lambda_{i_s}
using LambdaWord = std::vector<int>;

int word_degree(const LambdaWord& w);
std::string word_to_string(const LambdaWord& w);

class LambdaElement {
public:
    LambdaElement() = default;
    explicit LambdaElement(const std::vector<LambdaWord>& words);
    static LambdaElement of(const LambdaWord& w);
    static LambdaElement one() { return of({}); }

    const std::vector<LambdaWord>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // -1 zero, -2 mixed
    int length() const;
    int degree() const;

    void add(const LambdaWord& w);
    LambdaElement& operator+=(const LambdaElement& o);
    LambdaElement operator+(const LambdaElement& o) const {
        LambdaElement r = *this;
        r += o;
        return r;
    }
    bool operator==(const LambdaElement& o) const { return terms_ == o.terms_; }
    std::string to_string() const;

private:
    std::vector<LambdaWord> terms_; // sorted, unique
};

bool is_admissible(const LambdaWord& w);
bool is_admissible(const LambdaElement& e);

// rewrite to the admissible basis
LambdaElement normalize(const LambdaWord& w);
LambdaElement normalize(const LambdaElement& e);

LambdaElement multiply(const LambdaElement& a, const LambdaElement& b);

// d applied letter by letter, without normalizing
LambdaElement differential_raw(const LambdaElement& e);
LambdaElement differential(const LambdaElement& e);

LambdaElement theta(const LambdaElement& e);
// reverse every word
LambdaElement mirror(const LambdaElement& e);

std::vector<LambdaWord> admissible_basis(int s, int n);

bool is_cycle(const LambdaElement& e);

struct ClassComparison {
    bool equal = false;
    std::optional<LambdaElement> witness; // w with d(w) = z1 + z2 after normalizing
};

ClassComparison classes_equal(const LambdaElement& z1, const LambdaElement& z2);
// w with normalize(d(w)) = normalize(z), if z is a boundary
std::optional<LambdaElement> boundary_preimage(const LambdaElement& z);

struct CatalogEntry {
    std::string name;
    int length = 0, degree = 0;
    LambdaElement cycle; // normalized
};

// Named Ext representatives: h_i, c_t, e_t and their products.
class CycleCatalog {
public:
    explicit CycleCatalog(int max_theta = 3);
    const std::vector<CatalogEntry>& base() const { return base_; }
    // products of base entries of total length s and degree n, fewer factors first
    std::vector<CatalogEntry> entries_for(int s, int n) const;
    std::optional<CatalogEntry> find(const std::string& name) const;

private:
    std::vector<CatalogEntry> base_;
};

struct Identification {
    bool identified = false;
    std::vector<std::string> names;   // z is the sum of these classes (empty: z is a boundary)
    std::optional<LambdaElement> witness;
    std::vector<std::string> zero_entries;   // catalog entries that are boundaries
    std::vector<std::pair<std::string, std::string>> aliases; // (entry, same class as)

    std::string to_string() const;
};

Identification identify_class(const LambdaElement& z, const std::vector<CatalogEntry>& entries);
Identification identify_class(const LambdaElement& z, const CycleCatalog& catalog);

nlohmann::json to_json(const LambdaElement& e);
LambdaElement lambda_from_json(const nlohmann::json& j);

} // namespace hitq
