#include "hitq/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hitq/action.hpp"
#include "hitq/cache.hpp"
#include "hitq/dual.hpp"
#include "hitq/transfer.hpp"
#include "hitq/verify.hpp"

namespace hitq {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobSpec {
    int q = 4;
    int n = -1;
    std::string degrees;
    std::string group = "gl";
    bool by_weight = false;
    std::string omega;
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    int jobs = 0;
    bool allow_long = false;
    int long_threshold = 80;
    bool list = false;
    bool kernel = false;
    bool coinvariants = false;
    bool unfiltered = false;

    std::vector<int> degree_list() const {
        std::vector<int> d;
        if (n >= 0) d.push_back(n);
        if (!degrees.empty())
            for (int x : parse_degree_list(degrees)) d.push_back(x);
        if (d.empty()) throw UsageError("give --n or --degrees");
        for (int x : d) {
            if (x < 0) throw UsageError("degrees must be non-negative");
            if (x > long_threshold && !allow_long)
                throw UsageError("degree " + std::to_string(x) + " exceeds the long-job threshold " +
                                 std::to_string(long_threshold) + "; pass --allow-long to run it");
        }
        return d;
    }
    void validate() const {
        if (q < 1) throw UsageError("--q must be at least 1");
        if (format != "text" && format != "json" && format != "csv") throw UsageError("--format is json, csv or text");
    }
    std::unique_ptr<HitCache> make_cache() const {
        if (no_cache) return nullptr;
        return std::make_unique<HitCache>(cache_dir.empty() ? HitCache::default_dir() : cache_dir);
    }
    unsigned parallelism() const {
        if (jobs > 0) return unsigned(jobs);
        return std::max(1u, std::thread::hardware_concurrency());
    }
    HitOptions hit_options() const { return {!unfiltered}; }
};

WeightVector parse_omega(const std::string& s) {
    WeightVector w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }),
                  tok.end());
        if (tok.empty()) continue;
        try {
            w.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw UsageError("bad weight vector '" + s + "'");
        }
    }
    if (w.empty()) throw UsageError("empty weight vector");
    return w;
}

std::string omega_text(const WeightVector& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

std::string omega_csv(const WeightVector& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ";" : "") + std::to_string(w[i]);
    return s;
}

// runs f over the degrees with bounded parallelism, results in input order
template <class R>
std::vector<R> per_degree(const JobSpec& spec, std::ostream& err, const std::vector<int>& ds, const std::function<R(int, const HitCache*)>& f) {
    std::vector<R> out(ds.size());
    std::size_t width = std::min<std::size_t>(spec.parallelism(), ds.size());
    std::mutex mu;
    std::vector<std::string> warnings;
    auto work = [&](std::atomic<std::size_t>& next) {
        auto cache = spec.make_cache();
        for (std::size_t i; (i = next++) < ds.size();) out[i] = f(ds[i], cache.get());
        if (cache) {
            std::lock_guard lk(mu);
            warnings.insert(warnings.end(), cache->warnings.begin(), cache->warnings.end());
        }
    };
    std::atomic<std::size_t> next{0};
    if (width <= 1) work(next);
    else {
        std::vector<std::future<void>> workers;
        for (std::size_t w = 0; w < width; ++w) workers.push_back(std::async(std::launch::async, work, std::ref(next)));
        for (auto& w : workers) w.get();
    }
    std::sort(warnings.begin(), warnings.end());
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    return out;
}

void emit_json(std::ostream& out, const std::vector<json>& items) {
    if (items.size() == 1) out << items[0].dump(2) << "\n";
    else out << json(items).dump(2) << "\n";
}

int cmd_basis(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    auto ds = spec.degree_list();
    std::vector<json> items;
    std::ostringstream text, csv;
    csv << "q,n,omega,dim,kind\n";
    if (!spec.omega.empty()) {
        auto w = parse_omega(spec.omega);
        for (int n : ds) {
            auto wq = weight_quotient(spec.q, n, w);
            json j = {{"q", spec.q}, {"n", n}, {"omega", w}, {"dim", wq.dim()}};
            if (spec.list) {
                json l = json::array();
                for (const auto& m : wq.basis) l.push_back(to_json(m));
                j["admissible"] = l;
            }
            items.push_back(j);
            if (ds.size() > 1) text << "n = " << n << ": ";
            text << "dim (Q^" << spec.q << "_" << n << ")^" << omega_text(w) << " = " << wq.dim() << "\n";
            if (spec.list)
                for (const auto& m : wq.basis) text << "  " << m.to_string() << "\n";
            csv << spec.q << "," << n << "," << omega_csv(w) << "," << wq.dim() << ",omega\n";
        }
    } else {
        auto bases = per_degree<QuotientBasis>(spec, err, ds, [&](int n, const HitCache* c) {
            return quotient_basis(spec.q, n, spec.hit_options(), c);
        });
        for (std::size_t k = 0; k < ds.size(); ++k) {
            const auto& b = bases[k];
            int n = ds[k];
            json j = {{"q", spec.q}, {"n", n}, {"dim", b.dim()}, {"omega", nullptr}};
            if (ds.size() > 1) text << "n = " << n << ": ";
            text << "dim = " << b.dim() << "\n";
            csv << spec.q << "," << n << ",," << b.dim() << ",total\n";
            if (spec.by_weight) {
                json bw = json::array();
                for (const auto& [w, d] : b.dims_by_weight()) {
                    bw.push_back({{"omega", w}, {"dim", d}});
                    text << "  omega = " << omega_text(w) << ": " << d << "\n";
                    csv << spec.q << "," << n << "," << omega_csv(w) << "," << d << ",weight\n";
                }
                j["by_weight"] = bw;
            }
            if (spec.list) {
                json l = json::array();
                for (const auto& m : b.admissible()) {
                    l.push_back(to_json(m));
                    text << "  " << m.to_string() << "\n";
                }
                j["admissible"] = l;
            }
            items.push_back(j);
        }
    }
    if (spec.format == "json") emit_json(out, items);
    else if (spec.format == "csv") out << csv.str();
    else out << text.str();
    return 0;
}

int cmd_invariants(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    auto ds = spec.degree_list();
    auto gens = GeneratorSet::make(spec.q, parse_group(spec.group));
    const std::string kind = spec.kernel ? "kernel-invariants" : "invariants";
    std::vector<std::vector<Polynomial>> results;
    std::optional<WeightVector> w;
    if (!spec.omega.empty()) w = parse_omega(spec.omega);
    results = per_degree<std::vector<Polynomial>>(spec, err, ds, [&](int n, const HitCache* c) {
        std::vector<Polynomial> polys;
        if (w) {
            if (spec.kernel) throw UsageError("--kernel and --omega cannot be combined");
            auto wq = weight_quotient(spec.q, n, *w);
            for (const auto& v : invariant_subspace(wq, gens)) polys.push_back(wq.lift(v));
        } else if (spec.kernel) {
            auto km = kameko_kernel(spec.q, n, spec.hit_options(), c);
            for (const auto& v : kernel_invariants(km, gens)) polys.push_back(km.source.lift(v));
        } else {
            auto qb = quotient_basis(spec.q, n, spec.hit_options(), c);
            for (const auto& v : invariant_subspace(qb, gens)) polys.push_back(qb.lift(v));
        }
        return polys;
    });
    std::vector<json> items;
    std::ostringstream text, csv;
    csv << "q,n,omega,dim,kind\n";
    for (std::size_t k = 0; k < ds.size(); ++k) {
        int n = ds[k];
        json polys = json::array();
        for (const auto& p : results[k]) polys.push_back(to_json(p, n));
        items.push_back({{"q", spec.q},
                         {"n", n},
                         {"group", spec.group},
                         {"kind", kind},
                         {"omega", w ? json(*w) : json(nullptr)},
                         {"dim", results[k].size()},
                         {"invariants", polys}});
        if (ds.size() > 1) text << "n = " << n << ": ";
        text << "dim = " << results[k].size() << "\n";
        for (const auto& p : results[k]) text << "  " << p.to_string() << "\n";
        csv << spec.q << "," << n << "," << (w ? omega_csv(*w) : "") << "," << results[k].size() << "," << kind
            << "\n";
    }
    if (spec.format == "json") emit_json(out, items);
    else if (spec.format == "csv") out << csv.str();
    else out << text.str();
    return 0;
}

int cmd_primitives(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    auto ds = spec.degree_list();
    auto gens = GeneratorSet::make(spec.q, parse_group(spec.group));
    std::vector<json> items;
    std::ostringstream text, csv;
    csv << "q,n,omega,dim,kind\n";
    auto results = per_degree<json>(spec, err, ds, [&](int n, const HitCache* c) {
        auto pb = primitive_basis(spec.q, n);
        json j = {{"q", spec.q}, {"n", n}, {"dim", pb.dim()}};
        if (spec.list) {
            json l = json::array();
            for (const auto& e : pb.basis) l.push_back(to_json(e));
            j["basis"] = l;
        }
        if (spec.coinvariants) {
            auto qb = quotient_basis(spec.q, n, spec.hit_options(), c);
            std::vector<Polynomial> inv;
            for (const auto& v : invariant_subspace(qb, gens)) inv.push_back(qb.lift(v));
            json l = json::array();
            for (const auto& g : coinvariant_generators(pb, inv)) {
                json cert = json::array();
                for (std::size_t b = 0; b < g.certificate.size(); ++b) cert.push_back(int(g.certificate.get(b)));
                l.push_back({{"element", to_json(g.element)}, {"certificate", cert}});
            }
            j["group"] = spec.group;
            j["coinvariant_generators"] = l;
        }
        return j;
    });
    for (std::size_t k = 0; k < ds.size(); ++k) {
        const auto& j = results[k];
        items.push_back(j);
        if (ds.size() > 1) text << "n = " << ds[k] << ": ";
        text << "dim = " << j["dim"].get<std::size_t>() << "\n";
        if (j.contains("basis"))
            for (const auto& e : j["basis"]) text << "  " << dual_from_json(e).to_string() << "\n";
        if (j.contains("coinvariant_generators")) {
            text << "  coinvariant generators: " << j["coinvariant_generators"].size() << "\n";
            for (const auto& g : j["coinvariant_generators"])
                text << "    " << dual_from_json(g["element"]).to_string() << "\n";
        }
        csv << spec.q << "," << ds[k] << ",," << j["dim"].get<std::size_t>() << ",primitives\n";
    }
    if (spec.format == "json") emit_json(out, items);
    else if (spec.format == "csv") out << csv.str();
    else out << text.str();
    return 0;
}

int cmd_transfer(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    auto ds = spec.degree_list();
    auto reps = per_degree<TransferReport>(
        spec, err, ds, [&](int n, const HitCache* c) { return transfer_image_report(spec.q, n, c); });
    std::vector<json> items;
    std::ostringstream text, csv;
    csv << "q,n,omega,dim,kind\n";
    bool complete = true;
    for (std::size_t k = 0; k < ds.size(); ++k) {
        const auto& r = reps[k];
        complete = complete && r.complete;
        items.push_back(r.to_json());
        if (ds.size() > 1) text << "n = " << ds[k] << ": ";
        text << r.summary() << "\n";
        for (const auto& row : r.rows)
            text << "  " << row.generator.to_string() << "  ->  " << row.cycle.to_string() << "  ["
                 << row.id.to_string() << "]\n";
        csv << spec.q << "," << ds[k] << ",," << r.invariant_dim << ",transfer-domain\n";
    }
    if (spec.format == "json") emit_json(out, items);
    else if (spec.format == "csv") out << csv.str();
    else out << text.str();
    return 0;
}

int cmd_verify(const JobSpec& spec, const std::string& suite, bool list_suites, std::ostream& out) {
    if (list_suites) {
        for (const auto& s : suite_names()) out << s << "\n";
        return 0;
    }
    if (suite.empty()) throw UsageError("name a suite (see verify --list)");
    if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw UsageError("unknown suite '" + suite + "'");
    auto cache = spec.make_cache();
    auto results = run_suite(suite, cache.get());
    bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    if (spec.format == "json") {
        json l = json::array();
        for (const auto& r : results)
            l.push_back({{"criterion", r.criterion}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out << json({{"suite", suite}, {"passed", ok}, {"checks", l}}).dump(2) << "\n";
    } else if (spec.format == "csv") {
        out << "criterion,name,passed\n";
        for (const auto& r : results) out << r.criterion << ",\"" << r.name << "\"," << (r.passed ? 1 : 0) << "\n";
    } else {
        for (const auto& r : results)
            out << (r.passed ? "pass" : "FAIL") << "  [" << r.criterion << "] " << r.name << ": " << r.detail << "\n";
        out << suite << ": " << (ok ? "pass" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_cache(const JobSpec& spec, const std::string& action, std::ostream& out) {
    std::string dir = spec.cache_dir.empty() ? HitCache::default_dir() : spec.cache_dir;
    namespace fs = std::filesystem;
    if (action == "path") {
        out << dir << "\n";
        return 0;
    }
    std::vector<fs::path> files;
    if (fs::exists(dir))
        for (const auto& e : fs::directory_iterator(dir))
            if (e.path().filename().string().rfind("hit_", 0) == 0) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (action == "list") {
        for (const auto& f : files)
            if (f.extension() == ".json") out << f.filename().string() << "\n";
        return 0;
    }
    if (action == "clear") {
        for (const auto& f : files) fs::remove(f);
        out << "removed " << files.size() << " files\n";
        return 0;
    }
    throw UsageError("cache action is path, list or clear");
}

void add_common(CLI::App* sub, JobSpec& spec, bool degrees = true) {
    sub->add_option("--q", spec.q, "number of variables")->capture_default_str();
    if (degrees) {
        sub->add_option("--n", spec.n, "degree");
        sub->add_option("--degrees", spec.degrees, "degree list, e.g. 9,17,21 or 1-24");
        sub->add_flag("--allow-long", spec.allow_long, "run degrees above the long-job threshold");
        sub->add_option("--long-threshold", spec.long_threshold, "long-job degree threshold")->capture_default_str();
        sub->add_option("--jobs", spec.jobs, "degrees computed in parallel (default: all cores)");
        sub->add_flag("--unfiltered", spec.unfiltered, "skip the minimal-spike weight filter");
    }
    sub->add_option("--format", spec.format, "json, csv or text")->capture_default_str();
    sub->add_option("--cache", spec.cache_dir, "cache directory (default: $HITQ_CACHE or ~/.cache/hitq)");
    sub->add_flag("--no-cache", spec.no_cache, "do not read or write the cache");
}

} // namespace

std::vector<int> parse_degree_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    auto num = [&](const std::string& t) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(t, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != t.size() || t.empty()) throw std::invalid_argument("bad degree list '" + s + "'");
        return v;
    };
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (tok.empty()) continue;
        auto dash = tok.find('-', 1);
        if (dash == std::string::npos) out.push_back(num(tok));
        else {
            int a = num(tok.substr(0, dash)), b = num(tok.substr(dash + 1));
            if (b < a) throw std::invalid_argument("bad degree range '" + tok + "'");
            for (int x = a; x <= b; ++x) out.push_back(x);
        }
    }
    if (out.empty()) throw std::invalid_argument("empty degree list");
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hit problem, invariants and the algebraic transfer over GF(2)", "hitq"};
    app.require_subcommand(1);
    JobSpec spec;
    std::string suite, cache_action;
    bool list_suites = false;

    auto basis = app.add_subcommand("basis", "dimension and admissible basis of Q^q_n");
    add_common(basis, spec);
    basis->add_flag("--by-weight", spec.by_weight, "split the dimension by weight vector");
    basis->add_option("--omega", spec.omega, "weight vector, e.g. 3,3,2");
    basis->add_flag("--list", spec.list, "print the admissible monomials");

    auto inv = app.add_subcommand("invariants", "invariants of Sigma_q or GL(q) on Q^q_n");
    add_common(inv, spec);
    inv->add_option("--group", spec.group, "sigma or gl")->capture_default_str();
    inv->add_option("--omega", spec.omega, "act on the weight-omega piece instead");
    inv->add_flag("--kernel", spec.kernel, "restrict to the kernel of the Kameko map");

    auto prim = app.add_subcommand("primitives", "primitive elements of the dual");
    add_common(prim, spec);
    prim->add_flag("--list", spec.list, "print the primitive basis");
    prim->add_flag("--coinvariants", spec.coinvariants, "also print coinvariant generators");
    prim->add_option("--group", spec.group, "sigma or gl")->capture_default_str();

    auto tr = app.add_subcommand("transfer", "image of the algebraic transfer");
    add_common(tr, spec);

    auto ver = app.add_subcommand("verify", "replay a verification suite");
    add_common(ver, spec, false);
    ver->add_option("--suite,name", suite, "suite name or all");
    ver->add_flag("--list", list_suites, "list suite names");

    auto cache = app.add_subcommand("cache", "inspect or clear the basis cache");
    add_common(cache, spec, false);
    cache->add_option("action", cache_action, "path, list or clear")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        spec.validate();
        if (*basis) return cmd_basis(spec, out, err);
        if (*inv) return cmd_invariants(spec, out, err);
        if (*prim) return cmd_primitives(spec, out, err);
        if (*tr) return cmd_transfer(spec, out, err);
        if (*ver) return cmd_verify(spec, suite, list_suites, out);
        if (*cache) return cmd_cache(spec, cache_action, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotApplicableError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace hitq
