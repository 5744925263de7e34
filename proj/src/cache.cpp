#include "teven/cache.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "teven/parser.hpp"

namespace fs = std::filesystem;

namespace teven {

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("TEVEN_CACHE_DIR"); env && *env) return env;
    return ".teven-cache";
}

FormulaCache::FormulaCache(std::string dir) : dir_(std::move(dir)) {}

std::string FormulaCache::path_for(Family family, int n, const MultiPoly& f) const {
    std::string key = hex64(fnv1a(print_multipoly(f)));
    return (fs::path(dir_) /
            (family_name(family) + "_" + std::to_string(n) + "_" + key + ".json"))
        .string();
}

bool FormulaCache::store(const Formula& f) const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return false;
    std::ofstream out(path_for(f.family, f.n, f.weight), std::ios::trunc);
    if (!out) return false;
    out << formula_to_json(f).dump(2) << "\n";
    return static_cast<bool>(out.flush());
}

std::optional<Formula> FormulaCache::load(Family family, int n, const MultiPoly& f) const {
    std::ifstream in(path_for(family, n, f));
    if (!in) return std::nullopt;
    try {
        return formula_from_json(nlohmann::json::parse(in));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::vector<std::string> FormulaCache::list() const {
    std::vector<std::string> names;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir_, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            names.push_back(entry.path().filename().string());
    }
    std::sort(names.begin(), names.end());
    return names;
}

std::optional<size_t> FormulaCache::purge() const {
    size_t removed = 0;
    std::error_code ec;
    if (!fs::exists(dir_, ec)) return removed;
    if (!fs::is_directory(dir_, ec)) return std::nullopt;
    for (const auto& name : list()) {
        if (!fs::remove(fs::path(dir_) / name, ec) || ec) return std::nullopt;
        ++removed;
    }
    return removed;
}

}  // namespace teven
