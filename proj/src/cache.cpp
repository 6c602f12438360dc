#include "hitq/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <thread>
#include <unistd.h>

namespace hitq {

namespace fs = std::filesystem;

namespace {

constexpr char kMagic[8] = {'H', 'I', 'T', 'Q', 'R', 'O', 'W', 'S'};

struct Header {
    char magic[8];
    uint32_t version, q, n, filtered;
    uint64_t universe, rank, words;
};

void write_atomic(const fs::path& path, const std::string& bytes) {
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." +
           std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write cache file " + tmp.string());
        os.write(bytes.data(), std::streamsize(bytes.size()));
        if (!os) throw std::runtime_error("short write on " + tmp.string());
    }
    fs::rename(tmp, path);
}

} // namespace

HitCache::HitCache(std::string dir) : dir_(std::move(dir)) {}

std::string HitCache::default_dir() {
    if (const char* e = std::getenv("HITQ_CACHE"); e && *e) return e;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return (fs::path(x) / "hitq").string();
    if (const char* h = std::getenv("HOME"); h && *h) return (fs::path(h) / ".cache" / "hitq").string();
    return (fs::temp_directory_path() / "hitq").string();
}

std::string HitCache::stem(int q, int n, bool filtered) const {
    return (fs::path(dir_) / ("hit_q" + std::to_string(q) + "_n" + std::to_string(n) + (filtered ? "_f" : "_u")))
        .string();
}

std::optional<QuotientBasis> HitCache::load(int q, int n, HitOptions opt) const {
    // the universe is rebuilt deterministically, then checked against the header
    WeightVector floor;
    if (opt.singer_filter)
        if (auto z = minimal_spike(q, n)) floor = weight_of(*z);
    bool filtered = !floor.empty();
    fs::path bin = stem(q, n, filtered) + ".bin";
    if (!fs::exists(bin)) return std::nullopt;
    std::ifstream is(bin, std::ios::binary);
    Header h{};
    is.read(reinterpret_cast<char*>(&h), sizeof h);
    if (!is || std::memcmp(h.magic, kMagic, 8) != 0) {
        warnings.push_back("unreadable cache entry " + bin.string() + ", recomputing");
        return std::nullopt;
    }
    if (h.version != uint32_t(kCacheVersion)) {
        warnings.push_back("cache version mismatch in " + bin.string() + ", recomputing");
        return std::nullopt;
    }
    auto hs = std::make_shared<HitSubspace>();
    hs->q = q;
    hs->n = n;
    hs->filtered = filtered;
    hs->universe = MonomialIndex(q, n, floor);
    std::size_t words = (hs->universe.size() + 63) / 64;
    if (h.q != uint32_t(q) || h.n != uint32_t(n) || h.filtered != uint32_t(filtered) ||
        h.universe != hs->universe.size() || h.words != words || h.rank > h.universe) {
        warnings.push_back("cache header mismatch in " + bin.string() + ", recomputing");
        return std::nullopt;
    }
    std::vector<uint32_t> piv(h.rank);
    std::vector<uint64_t> rows(h.rank * words);
    is.read(reinterpret_cast<char*>(piv.data()), std::streamsize(piv.size() * sizeof(uint32_t)));
    is.read(reinterpret_cast<char*>(rows.data()), std::streamsize(rows.size() * sizeof(uint64_t)));
    if (!is) {
        warnings.push_back("truncated cache entry " + bin.string() + ", recomputing");
        return std::nullopt;
    }
    try {
        hs->echelon = EchelonBasis::from_raw(hs->universe.size(), std::move(rows), std::move(piv));
    } catch (const std::exception& e) {
        warnings.push_back(std::string("corrupt cache entry: ") + e.what());
        return std::nullopt;
    }
    return QuotientBasis(std::shared_ptr<const HitSubspace>(hs));
}

void HitCache::save(const QuotientBasis& b) const {
    const auto& hs = b.hit();
    fs::create_directories(dir_);
    const auto& ech = hs.echelon;
    Header h{};
    std::memcpy(h.magic, kMagic, 8);
    h.version = kCacheVersion;
    h.q = uint32_t(hs.q);
    h.n = uint32_t(hs.n);
    h.filtered = hs.filtered;
    h.universe = hs.universe.size();
    h.rank = ech.rank();
    h.words = (hs.universe.size() + 63) / 64;
    std::string bytes(reinterpret_cast<const char*>(&h), sizeof h);
    const auto& piv = ech.raw_pivots();
    const auto& rows = ech.raw_rows();
    bytes.append(reinterpret_cast<const char*>(piv.data()), piv.size() * sizeof(uint32_t));
    bytes.append(reinterpret_cast<const char*>(rows.data()), rows.size() * sizeof(uint64_t));
    std::string stem_ = stem(hs.q, hs.n, hs.filtered);
    write_atomic(stem_ + ".bin", bytes);
    nlohmann::json side = {{"q", hs.q},     {"n", hs.n},           {"dim", b.dim()},
                           {"omega", nullptr}, {"version", kCacheVersion}, {"filtered", hs.filtered},
                           {"universe", hs.universe.size()}, {"rank", ech.rank()}};
    write_atomic(stem_ + ".json", side.dump(2) + "\n");
}

} // namespace hitq
