#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teven/formula.hpp"

namespace teven {

// Cache directory resolution: explicit flag > TEVEN_CACHE_DIR > ".teven-cache".
std::string resolve_cache_dir(const std::string& flag_value);

// On-disk formula store: one JSON file per (family, n, canonical-f hash).
class FormulaCache {
public:
    explicit FormulaCache(std::string dir);

    const std::string& dir() const { return dir_; }
    std::string path_for(Family family, int n, const MultiPoly& f) const;

    // false on any I/O failure (unwritable directory etc.).
    bool store(const Formula& f) const;
    std::optional<Formula> load(Family family, int n, const MultiPoly& f) const;

    // Sorted file names of cached formulas.
    std::vector<std::string> list() const;
    // Number of removed entries; nullopt on I/O failure.
    std::optional<size_t> purge() const;

private:
    std::string dir_;
};

}  // namespace teven
