#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hitq/action.hpp"
#include "hitq/cache.hpp"
#include "hitq/cli.hpp"
#include "hitq/dual.hpp"
#include "hitq/hit.hpp"
#include "hitq/lambda.hpp"
#include "hitq/transfer.hpp"
#include "hitq/verify.hpp"

namespace py = pybind11;
using namespace hitq;

namespace {

using Terms = std::vector<std::vector<int>>;

std::unique_ptr<HitCache> cache_for(bool use_cache) {
    if (!use_cache) return nullptr;
    return std::make_unique<HitCache>(HitCache::default_dir());
}

Polynomial poly_of(int q, const Terms& t) {
    Polynomial f(q);
    for (const auto& e : t) {
        if (int(e.size()) != q) throw DimensionError("exponent vector length does not match q");
        f.add(Monomial(e));
    }
    return f;
}

Terms terms_of(const Polynomial& f) {
    Terms out;
    for (const auto& m : f.terms()) out.push_back(m.e);
    return out;
}

DualElement dual_of(int q, const Terms& t) {
    DualElement d(q);
    for (const auto& j : t) {
        if (int(j.size()) != q) throw DimensionError("order vector length does not match q");
        d.add(DividedMonomial(j));
    }
    return d;
}

Terms terms_of(const DualElement& d) {
    Terms out;
    for (const auto& m : d.terms()) out.push_back(m.j);
    return out;
}

Terms words_of(const LambdaElement& e) { return e.terms(); }

QuotientBasis basis_for(int q, int n, bool filtered, bool use_cache) {
    auto c = cache_for(use_cache);
    HitOptions opt;
    opt.singer_filter = filtered;
    py::gil_scoped_release nogil;
    return quotient_basis(q, n, opt, c.get());
}

} // namespace

PYBIND11_MODULE(_hitq, m) {
    m.doc() = "Hit problem, invariants and the algebraic transfer over F_2";

    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<UndefinedMapError>(m, "UndefinedMapError", PyExc_ValueError);
    py::register_exception<NotACycleError>(m, "NotACycleError", PyExc_ValueError);
    py::register_exception<NotApplicableError>(m, "NotApplicableError", PyExc_RuntimeError);
    py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);

    m.def("hit_dim", [](int q, int n, bool filtered, bool use_cache) { return basis_for(q, n, filtered, use_cache).dim(); },
          py::arg("q"), py::arg("n"), py::arg("filtered") = true, py::arg("use_cache") = true,
          "dim Q^q_n");
    m.def("admissible_monomials",
          [](int q, int n, bool use_cache) {
              auto b = basis_for(q, n, true, use_cache);
              Terms out;
              for (const auto& a : b.admissible()) out.push_back(a.e);
              return out;
          },
          py::arg("q"), py::arg("n"), py::arg("use_cache") = true);
    m.def("dims_by_weight",
          [](int q, int n, bool use_cache) {
              std::vector<std::pair<std::vector<int>, std::size_t>> out;
              for (const auto& [w, d] : basis_for(q, n, true, use_cache).dims_by_weight()) out.emplace_back(w, d);
              return out;
          },
          py::arg("q"), py::arg("n"), py::arg("use_cache") = true, "(weight vector, dim) pairs");
    m.def("is_hit",
          [](int q, const Terms& f, bool use_cache) {
              auto p = poly_of(q, f);
              if (p.is_zero()) return true;
              int n = p.terms().front().degree();
              return basis_for(q, n, true, use_cache).is_hit(p);
          },
          py::arg("q"), py::arg("terms"), py::arg("use_cache") = true);
    m.def("sq", [](int t, int q, const Terms& f) { return terms_of(sq(t, poly_of(q, f))); },
          py::arg("t"), py::arg("q"), py::arg("terms"));
    m.def("minimal_spike",
          [](int q, int n) -> std::optional<std::vector<int>> {
              auto s = minimal_spike(q, n);
              if (!s) return std::nullopt;
              return s->e;
          },
          py::arg("q"), py::arg("n"));

    m.def("invariants",
          [](int q, int n, const std::string& group, bool use_cache) {
              auto gens = GeneratorSet::make(q, parse_group(group));
              auto qb = basis_for(q, n, true, use_cache);
              std::vector<Terms> out;
              std::vector<BitVector> inv;
              {
                  py::gil_scoped_release nogil;
                  inv = invariant_subspace(qb, gens);
              }
              for (const auto& v : inv) out.push_back(terms_of(qb.lift(v)));
              return out;
          },
          py::arg("q"), py::arg("n"), py::arg("group") = "gl", py::arg("use_cache") = true,
          "representatives of a basis of the invariant subspace");
    m.def("kernel_invariant_dim",
          [](int q, int n, const std::string& group, bool use_cache) {
              auto gens = GeneratorSet::make(q, parse_group(group));
              auto c = cache_for(use_cache);
              py::gil_scoped_release nogil;
              return kernel_invariants(q, n, gens, {}, c.get()).size();
          },
          py::arg("q"), py::arg("n"), py::arg("group") = "gl", py::arg("use_cache") = true);

    m.def("primitives",
          [](int q, int n) {
              PrimitiveBasis pb;
              {
                  py::gil_scoped_release nogil;
                  pb = primitive_basis(q, n);
              }
              std::vector<Terms> out;
              for (const auto& e : pb.basis) out.push_back(terms_of(e));
              return out;
          },
          py::arg("q"), py::arg("n"));
    m.def("is_primitive", [](int q, const Terms& e) { return is_primitive(dual_of(q, e)); }, py::arg("q"),
          py::arg("terms"));
    m.def("dual_sq", [](int t, int q, const Terms& e) { return terms_of(dual_sq(t, dual_of(q, e))); },
          py::arg("t"), py::arg("q"), py::arg("terms"));
    m.def("pairing", [](int q, const Terms& e, const Terms& f) { return pairing(dual_of(q, e), poly_of(q, f)); },
          py::arg("q"), py::arg("dual"), py::arg("poly"));
    m.def("coinvariant_generators",
          [](int q, int n, const std::string& group, bool use_cache) {
              auto gens = GeneratorSet::make(q, parse_group(group));
              auto c = cache_for(use_cache);
              std::vector<CoinvariantGenerator> g;
              {
                  py::gil_scoped_release nogil;
                  g = coinvariant_generators(q, n, gens, c.get());
              }
              std::vector<Terms> out;
              for (const auto& x : g) out.push_back(terms_of(x.element));
              return out;
          },
          py::arg("q"), py::arg("n"), py::arg("group") = "gl", py::arg("use_cache") = true);

    m.def("lambda_normalize", [](const Terms& w) { return words_of(normalize(LambdaElement(w))); },
          py::arg("words"));
    m.def("lambda_differential", [](const Terms& w) { return words_of(differential(LambdaElement(w))); },
          py::arg("words"));
    m.def("lambda_is_admissible", [](const std::vector<int>& w) { return is_admissible(w); }, py::arg("word"));
    m.def("lambda_is_cycle", [](const Terms& w) { return is_cycle(LambdaElement(w)); }, py::arg("words"));
    m.def("lambda_theta", [](const Terms& w) { return words_of(theta(LambdaElement(w))); }, py::arg("words"));
    m.def("identify",
          [](const Terms& w) {
              static const CycleCatalog catalog;
              return identify_class(LambdaElement(w), catalog).to_string();
          },
          py::arg("words"), "name of the Ext class of a normalized cycle, or 'unidentified'");

    m.def("psi", [](int q, const Terms& e) { return words_of(psi(dual_of(q, e))); }, py::arg("q"), py::arg("terms"),
          "chain-level transfer, words in variable order");
    m.def("transfer_cycle", [](int q, const Terms& e) { return words_of(transfer_cycle(dual_of(q, e))); },
          py::arg("q"), py::arg("terms"));
    m.def("_transfer_report_json",
          [](int q, int n, bool use_cache) {
              auto c = cache_for(use_cache);
              py::gil_scoped_release nogil;
              return transfer_image_report(q, n, c.get()).to_json().dump();
          },
          py::arg("q"), py::arg("n"), py::arg("use_cache") = true);

    m.def("suite_names", &suite_names);
    m.def("_verify",
          [](const std::string& suite) {
              std::vector<CheckResult> r;
              {
                  py::gil_scoped_release nogil;
                  r = run_suite(suite, nullptr);
              }
              std::vector<py::dict> out;
              for (const auto& c : r)
                  out.push_back(py::dict(py::arg("criterion") = c.criterion, py::arg("name") = c.name,
                                         py::arg("passed") = c.passed, py::arg("detail") = c.detail,
                                         py::arg("seconds") = c.seconds));
              return out;
          },
          py::arg("suite"));

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              int code;
              {
                  py::gil_scoped_release nogil;
                  code = run_cli(args, out, err);
              }
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "run a hitq subcommand; returns (exit code, stdout, stderr)");
}
