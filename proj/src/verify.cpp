#include "hitq/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hitq/action.hpp"
#include "hitq/dual.hpp"
#include "hitq/reference.hpp"
#include "hitq/transfer.hpp"

namespace hitq {

namespace {

struct Runner {
    const HitCache* cache;
    std::vector<CheckResult> out;

    void check(int crit, const std::string& name, const std::function<std::string(bool&)>& body) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        r.criterion = crit;
        r.name = name;
        try {
            bool ok = true;
            r.detail = body(ok);
            r.passed = ok;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }

    QuotientBasis basis(int n) { return quotient_basis(4, n, {}, cache); }
};

std::string eq_detail(const std::string& what, long got, long want, bool& ok) {
    ok = ok && got == want;
    return what + " = " + std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

bool class_fixed(const QuotientBasis& qb, const Polynomial& f, const GeneratorSet& gs) {
    auto v = qb.reduce(f);
    for (const auto& g : gs.gens)
        if (qb.reduce(linear_substitute(g.matrix, f)) != v) return false;
    return true;
}

void dims_suite(Runner& R) {
    for (auto [n, want] : {std::pair{9, 46}, {21, 94}, {45, 105}})
        R.check(1, "dim Q^4_" + std::to_string(n), [&, n = n, want = want](bool& ok) {
            return eq_detail("dim", long(R.basis(n).dim()), want, ok);
        });
    R.check(2, "dim Q^4_65", [&](bool& ok) {
        auto qb = R.basis(65);
        std::size_t sum = 0;
        for (auto& [w, d] : qb.dims_by_weight()) sum += d;
        auto s = eq_detail("dim", long(qb.dim()), 150, ok);
        return s + "; " + eq_detail("sum over weights", long(sum), 150, ok);
    });
    R.check(7, "weight decomposition n <= 24", [&](bool& ok) {
        std::ostringstream bad;
        for (int n = 0; n <= 24; ++n) {
            std::size_t total = 0;
            for (const auto& w : enumerate_weights(4, n)) total += weight_quotient(4, n, w).dim();
            std::size_t d = R.basis(n).dim();
            if (total != d) {
                ok = false;
                bad << " n=" << n << ":" << total << "!=" << d;
            }
        }
        return ok ? std::string("sum of weight pieces matches for n = 0..24") : "mismatch" + bad.str();
    });
}

void invariants_suite(Runner& R) {
    auto gl = GeneratorSet::make(4, GroupKind::FullLinear);
    auto sigma = GeneratorSet::make(4, GroupKind::Sigma);
    for (auto [n, want] : {std::pair{9, 1}, {21, 0}, {45, 1}, {17, 1}, {37, 0}})
        R.check(3, "dim (Q^4_" + std::to_string(n) + ")^GL4", [&, n = n, want = want](bool& ok) {
            return eq_detail("dim", long(invariant_subspace(R.basis(n), gl).size()), want, ok);
        });
    R.check(3, "degree 17 primitive pairs with the invariant", [&](bool& ok) {
        auto z = ref::zeta_17();
        auto u = ref::invariant_17();
        auto qb = R.basis(17);
        bool prim = is_primitive(z), inv = class_fixed(qb, u, gl) && !qb.is_hit(u), pr = pairing(z, u);
        ok = prim && inv && pr;
        std::ostringstream os;
        os << z.size() << "-term primitive: " << prim << ", invariant nonzero and fixed: " << inv
           << ", pairing: " << pr;
        return os.str();
    });
    R.check(3, "degree 9 primitive pairs with q_{1,4}", [&](bool& ok) {
        auto qb = R.basis(9);
        auto u = ref::q_9_4();
        ok = is_primitive(ref::zeta_9()) && class_fixed(qb, u, gl) && !qb.is_hit(u) && pairing(ref::zeta_9(), u);
        return std::string(ok ? "primitive, invariant, pairing 1" : "failed");
    });
    for (auto [n, want] : {std::pair{10, 0}, {22, 1}, {46, 0}}) {
        R.check(4, "kernel invariants n=" + std::to_string(n), [&, n = n](bool& ok) {
            return eq_detail("dim", long(kernel_invariants(4, n, gl, {}, R.cache).size()), 0, ok);
        });
        R.check(4, "dim (Q^4_" + std::to_string(n) + ")^GL4", [&, n = n, want = want](bool& ok) {
            return eq_detail("dim", long(invariant_subspace(R.basis(n), gl).size()), want, ok);
        });
    }
    R.check(5, "dim (Q^4_9)^Sigma4", [&](bool& ok) {
        return eq_detail("dim", long(invariant_subspace(R.basis(9), sigma).size()), 4, ok);
    });
    R.check(5, "listed Sigma4 invariants are fixed", [&](bool& ok) {
        std::ostringstream os;
        int count = 0;
        for (int s = 1; s <= 2; ++s) {
            auto small = R.basis((1 << (s + 2)) + (1 << (s + 1)) - 3);
            auto large = R.basis((1 << (s + 3)) + (1 << (s + 1)) - 3);
            for (int i = 1; i <= 3; ++i, ++count)
                if (!class_fixed(small, ref::q_small(s, i), sigma)) {
                    ok = false;
                    os << " small(s=" << s << ",i=" << i << ")";
                }
            for (int i = 1; i <= 4; ++i, ++count)
                if (!class_fixed(large, ref::q_large(s, i), sigma)) {
                    ok = false;
                    os << " large(s=" << s << ",i=" << i << ")";
                }
        }
        return ok ? std::to_string(count) + " polynomials fixed by sigma_1..sigma_3" : "not fixed:" + os.str();
    });
}

void duality(Runner& R) {
    R.check(6, "primitive dims and perfect pairing n <= 24", [&](bool& ok) {
        std::ostringstream bad;
        for (int n = 0; n <= 24; ++n) {
            auto pb = primitive_basis(4, n);
            auto qb = R.basis(n);
            if (pb.dim() != qb.dim()) {
                ok = false;
                bad << " n=" << n << " dims " << pb.dim() << "/" << qb.dim();
                continue;
            }
            std::vector<BitVector> rows(pb.dim(), BitVector(qb.dim()));
            for (std::size_t i = 0; i < pb.dim(); ++i)
                for (std::size_t j = 0; j < qb.dim(); ++j)
                    if (pairing(pb.basis[i], Polynomial::of(qb.admissible()[j]))) rows[i].set(j);
            if (batch_rank(rows) != qb.dim()) {
                ok = false;
                bad << " n=" << n << " singular";
            }
        }
        return ok ? std::string("n = 0..24 agree") : "mismatch" + bad.str();
    });
    R.check(6, "adjunction deg <= 14", [&](bool& ok) {
        std::size_t pairs = 0;
        for (int q = 1; q <= 4; ++q)
            for (int top = 1; top <= 14; ++top)
                for (int t = 1; t <= top; ++t) {
                    // relation {(e, f) : <e Sq^t, f> = 1} against {(e, f) : <e, Sq^t f> = 1}
                    std::set<std::pair<std::vector<int>, std::vector<int>>> lhs, rhs;
                    for (const auto& e : monomials_of_degree(q, top)) {
                        auto img = dual_sq(t, DividedMonomial(e.e));
                        for (const auto& f : img.terms()) lhs.insert({e.e, f.j});
                    }
                    for (const auto& f : monomials_of_degree(q, top - t)) {
                        auto img = sq(t, f);
                        for (const auto& e : img.terms()) rhs.insert({e.e, f.e});
                    }
                    pairs += lhs.size();
                    if (lhs != rhs) ok = false;
                }
        return std::to_string(pairs) + " nonzero pairings compared" + (ok ? "" : ", mismatch");
    });
    R.check(3, "invariants match coinvariant generators n <= 24", [&](bool& ok) {
        auto gl = GeneratorSet::make(4, GroupKind::FullLinear);
        std::ostringstream bad;
        for (int n = 1; n <= 24; ++n) {
            auto qb = R.basis(n);
            std::vector<Polynomial> inv;
            for (const auto& v : invariant_subspace(qb, gl)) inv.push_back(qb.lift(v));
            auto gens = coinvariant_generators(primitive_basis(4, n), inv);
            if (gens.size() != inv.size()) {
                ok = false;
                bad << " n=" << n;
            }
        }
        return ok ? std::string("one certified generator per invariant") : "mismatch" + bad.str();
    });
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void lambda_props(Runner& R) {
    R.check(8, "d o d = 0", [&](bool& ok) {
        std::size_t count = 0;
        for (int s = 1; s <= 4; ++s)
            for (int n = 0; n <= 24; ++n)
                for (const auto& w : admissible_basis(s, n)) {
                    ++count;
                    if (!differential(differential(LambdaElement::of(w))).is_zero()) ok = false;
                }
        return std::to_string(count) + " admissible words";
    });
    R.check(8, "normalize commutes with d", [&](bool& ok) {
        std::size_t count = 0;
        std::function<void(LambdaWord&, int, int)> rec = [&](LambdaWord& w, int left, int budget) {
            if (left == 0) {
                ++count;
                auto e = LambdaElement::of(w);
                if (normalize(differential_raw(e)) != differential(normalize(e))) ok = false;
                return;
            }
            for (int i = 0; i <= budget; ++i) {
                w.push_back(i);
                rec(w, left - 1, budget - i);
                w.pop_back();
            }
        };
        for (int s = 1; s <= 3; ++s) {
            LambdaWord w;
            rec(w, s, 20);
        }
        return std::to_string(count) + " words";
    });
    R.check(8, "theta is a chain map", [&](bool& ok) {
        for (int n = 0; n <= 20; ++n)
            if (theta(differential(LambdaElement::of({n}))) != differential(LambdaElement::of({2 * n + 1}))) ok = false;
        return std::string("n = 0..20");
    });
    R.check(8, "l_i l_{2i+1} = 0", [&](bool& ok) {
        for (int i = 0; i <= 10; ++i)
            if (!normalize(LambdaWord{i, 2 * i + 1}).is_zero()) ok = false;
        return std::string("i = 0..10");
    });
    R.check(8, "d(e0 representative) = 0", [&](bool& ok) {
        auto e = mirror(ref::ebar0_as_printed());
        ok = differential(e).is_zero();
        return "reversed words: " + yesno(ok) + "; as printed: " +
               yesno(differential(ref::ebar0_as_printed()).is_zero());
    });
    R.check(8, "lambda_n cycle iff n = 2^k - 1", [&](bool& ok) {
        for (int n = 0; n < 64; ++n) {
            bool spike = ((n + 1) & n) == 0;
            if (is_cycle(LambdaElement::of({n})) != spike) ok = false;
        }
        return std::string("n = 0..63");
    });
    R.check(8, "catalog entries are cycles", [&](bool& ok) {
        CycleCatalog cat;
        for (const auto& b : cat.base())
            if (!is_cycle(b.cycle) || b.cycle.is_zero()) ok = false;
        return std::to_string(cat.base().size()) + " entries";
    });
}

void transfer_suite(Runner& R) {
    CycleCatalog cat;
    R.check(9, "degree 9 primitive -> h_1c_0", [&](bool& ok) {
        auto tc = transfer_class(ref::zeta_9(), cat);
        ok = psi(ref::zeta_9()) == LambdaElement({{1, 3, 3, 2}}) && tc.id.to_string() == "h_1c_0";
        return "psi = " + psi(ref::zeta_9()).to_string() + ", class " + tc.id.to_string();
    });
    R.check(9, "displayed psi components", [&](bool& ok) {
        for (const auto& d : ref::psi_displays_9()) {
            LambdaElement lead, full = psi(d.mono);
            for (const auto& w : full.terms())
                if (w[0] == d.mono.j[0]) lead.add(w);
            if (lead != d.printed) ok = false;
        }
        return std::string("terms starting with the first letter match");
    });
    R.check(9, "degree 17 primitive -> e_0 with the printed witness", [&](bool& ok) {
        auto z = ref::zeta_17();
        auto tc = transfer_class(z, cat);
        auto e0 = mirror(ref::ebar0_as_printed());
        auto w = mirror(ref::e0_witness_as_printed());
        bool wit = normalize(tc.cycle + e0) == differential(w);
        bool eq = classes_equal(tc.cycle, e0).equal;
        ok = tc.id.to_string() == "e_0" && wit && eq;
        return "class " + tc.id.to_string() + ", witness certifies: " + yesno(wit);
    });
    R.check(9, "psi of a2a3a4 spikes", [&](bool& ok) {
        for (int s = 1; s <= 3; ++s) {
            int b = (1 << (s + 1)) - 1;
            if (psi(ref::zeta_spike(s)) != LambdaElement({{0, b, b, b}}) || !is_cycle(transfer_cycle(ref::zeta_spike(s))))
                ok = false;
        }
        return std::string("s = 1..3");
    });
    for (auto [n, want] : {std::pair{9, "Im Tr_4 = <h_1c_0>"}, {17, "Im Tr_4 = <e_0>"}, {21, "Im Tr_4 = 0"}})
        R.check(9, "transfer image n=" + std::to_string(n), [&, n = n, want = std::string(want)](bool& ok) {
            auto rep = transfer_image_report(4, n, R.cache);
            ok = rep.summary() == want;
            return rep.summary();
        });
}

using SuiteFn = void (*)(Runner&);
const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> s = {
        {"paper-dims", dims_suite},       {"paper-invariants", invariants_suite},
        {"paper-transfer", transfer_suite}, {"lambda-props", lambda_props},
        {"duality", duality}};
    return s;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, f] : suites()) v.push_back(n);
        return v;
    }();
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const HitCache* cache) {
    Runner R{cache, {}};
    bool found = false;
    for (const auto& [n, f] : suites())
        if (name == "all" || name == n) {
            f(R);
            found = true;
        }
    if (!found) throw std::invalid_argument("unknown suite '" + name + "'");
    return R.out;
}

} // namespace hitq
