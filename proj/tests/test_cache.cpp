#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include <json.hpp>

#include "hitq/cache.hpp"

using namespace hitq;
namespace fs = std::filesystem;

namespace {

std::string fresh_dir(const std::string& name) {
    auto d = fs::temp_directory_path() / ("hitq-cache-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(d);
    return d.string();
}

} // namespace

TEST_CASE("round trip") {
    HitCache c(fresh_dir("rt"));
    auto b = quotient_basis(4, 21, {}, &c);
    CHECK(fs::exists(c.stem(4, 21, true) + ".json"));
    auto l = c.load(4, 21, {});
    REQUIRE(l);
    CHECK(l->dim() == 94);
    CHECK(l->admissible() == b.admissible());
    for (int i = 0; i < 30; ++i) {
        auto m = monomials_of_degree(4, 21)[std::size_t(i) * 37];
        CHECK(l->reduce(m) == b.reduce(m));
    }
    std::ifstream js(c.stem(4, 21, true) + ".json");
    auto j = nlohmann::json::parse(js);
    CHECK(j["dim"] == 94);
    CHECK(j["q"] == 4);
    CHECK(j["n"] == 21);
    CHECK(j["version"] == kCacheVersion);
    CHECK(j["omega"].is_null());
    fs::remove_all(c.dir());
}

TEST_CASE("missing and stale entries") {
    HitCache c(fresh_dir("stale"));
    CHECK_FALSE(c.load(4, 9, {}).has_value());
    quotient_basis(4, 9, {}, &c);
    auto path = c.stem(4, 9, true) + ".bin";
    {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(8);
        uint32_t bad = 999;
        f.write(reinterpret_cast<const char*>(&bad), sizeof bad);
    }
    CHECK_FALSE(c.load(4, 9, {}).has_value());
    CHECK_FALSE(c.warnings.empty());
    // recomputed and rewritten
    CHECK(quotient_basis(4, 9, {}, &c).dim() == 46);
    CHECK(c.load(4, 9, {}).has_value());
    fs::remove_all(c.dir());
}

TEST_CASE("filtered and unfiltered entries are separate") {
    HitCache c(fresh_dir("sep"));
    CHECK(c.stem(4, 9, true) != c.stem(4, 9, false));
    quotient_basis(4, 9, {true}, &c);
    CHECK_FALSE(c.load(4, 9, {false}).has_value());
    fs::remove_all(c.dir());
}
