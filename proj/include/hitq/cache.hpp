#pragma once

#include <optional>
#include <string>

#include "hitq/hit.hpp"

namespace hitq {

inline constexpr int kCacheVersion = 1;

// On-disk store of hit subspaces: a binary file of pivot rows plus a JSON sidecar.
class HitCache {
public:
    explicit HitCache(std::string dir);
    // HITQ_CACHE, then $XDG_CACHE_HOME/hitq, then ~/.cache/hitq
    static std::string default_dir();

    const std::string& dir() const { return dir_; }
    std::string stem(int q, int n, bool filtered) const;

    std::optional<QuotientBasis> load(int q, int n, HitOptions opt) const;
    void save(const QuotientBasis& b) const;

    // messages about stale or unreadable entries
    mutable std::vector<std::string> warnings;

private:
    std::string dir_;
};

} // namespace hitq
