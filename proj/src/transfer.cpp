#include "hitq/transfer.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hitq {

namespace {

LambdaElement psi_rec(const std::vector<int>& j) {
    if (j.empty()) return LambdaElement::one();
    if (j.size() == 1) return LambdaElement::of({j[0]});
    static std::mutex mu;
    static std::map<std::vector<int>, LambdaElement> memo;
    {
        std::lock_guard lk(mu);
        auto it = memo.find(j);
        if (it != memo.end()) return it->second;
    }
    DividedMonomial rest(std::vector<int>(j.begin() + 1, j.end()));
    int dr = rest.degree();
    LambdaElement out;
    // (rest)Sq^t vanishes once 2t > deg(rest)
    for (int t = 0; t <= dr; ++t) {
        auto img = dual_sq(t, rest);
        if (img.is_zero()) continue;
        if (2 * t > dr) throw InternalInconsistency("unstable dual square did not vanish");
        for (const auto& m : img.terms()) {
            LambdaElement tail = psi_rec(m.j);
            for (const auto& w : tail.terms()) {
                LambdaWord v{j[0] + t};
                v.insert(v.end(), w.begin(), w.end());
                out.add(v);
            }
        }
    }
    std::lock_guard lk(mu);
    memo.emplace(j, out);
    return out;
}

} // namespace

LambdaElement psi(const DividedMonomial& m) { return psi_rec(m.j); }

LambdaElement psi(const DualElement& e) {
    LambdaElement out;
    for (const auto& m : e.terms()) out += psi(m);
    return out;
}

LambdaElement transfer_cycle(const DualElement& e) { return normalize(mirror(psi(e))); }

TransferClass transfer_class(const DualElement& e, const CycleCatalog& catalog) {
    if (!is_primitive(e)) throw std::invalid_argument("transfer_class needs a primitive element");
    TransferClass r;
    r.cycle = transfer_cycle(e);
    if (!is_cycle(r.cycle))
        throw InternalInconsistency("transfer of a primitive is not a cycle: " + r.cycle.to_string());
    r.id = identify_class(r.cycle, catalog);
    return r;
}

std::string TransferReport::summary() const {
    std::string s = "Im Tr_" + std::to_string(q) + " = ";
    if (image.empty() && complete) return s + "0";
    s += "<";
    for (std::size_t i = 0; i < image.size(); ++i) s += (i ? ", " : "") + image[i];
    if (!complete) s += std::string(image.empty() ? "" : ", ") + "unidentified";
    return s + ">";
}

nlohmann::json TransferReport::to_json() const {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json g = {{"generator", hitq::to_json(r.generator)},
                            {"cycle", hitq::to_json(r.cycle)},
                            {"identified", r.id.identified},
                            {"class", r.id.to_string()}};
        if (r.id.witness) g["witness"] = hitq::to_json(*r.id.witness);
        gens.push_back(g);
    }
    return {{"q", q}, {"n", n}, {"bidegree", {q, q + n}}, {"invariant_dim", invariant_dim},
            {"generators", gens}, {"image", image}, {"complete", complete}, {"summary", summary()}};
}

TransferReport transfer_image_report(int q, int n, const HitCache* cache) {
    TransferReport rep;
    rep.q = q;
    rep.n = n;
    auto gens = coinvariant_generators(q, n, GeneratorSet::make(q, GroupKind::FullLinear), cache);
    rep.invariant_dim = gens.size();
    CycleCatalog catalog;
    for (const auto& g : gens) {
        auto tc = transfer_class(g.element, catalog);
        if (!tc.id.identified) rep.complete = false;
        else
            for (const auto& nm : tc.id.names)
                if (std::find(rep.image.begin(), rep.image.end(), nm) == rep.image.end()) rep.image.push_back(nm);
        rep.rows.push_back({g.element, tc.cycle, tc.id});
    }
    return rep;
}

Sq0Check sq0_compat_check(int q, int n) {
    Sq0Check r;
    auto pb = primitive_basis(q, n);
    for (const auto& e : pb.basis) {
        auto up = dual_kameko_up(e);
        ++r.checked;
        if (!is_primitive(up)) {
            r.failures.push_back("up image not primitive: " + e.to_string());
            continue;
        }
        auto lhs = theta(transfer_cycle(e));
        auto rhs = transfer_cycle(up);
        if (!classes_equal(lhs, rhs).equal) r.failures.push_back(e.to_string());
    }
    return r;
}

} // namespace hitq
