#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "teven/cache.hpp"
#include "teven/formula.hpp"
#include "teven/latex.hpp"
#include "teven/parser.hpp"
#include "teven/partition.hpp"

using namespace teven;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("teven-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int counter;
};
int TempDir::counter = 0;

}  // namespace

TEST_CASE("latex scalars and polynomials") {
    CHECK(latex_rational(Rational(1, 2)) == "\\frac{1}{2}");
    CHECK(latex_rational(Rational(-3, 4)) == "-\\frac{3}{4}");
    CHECK(latex_rational(Rational(5)) == "5");

    UniPoly k = UniPoly::variable();
    CHECK(latex_unipoly(k * k - k.scaled(Rational(1, 2))) == "k^{2}-\\frac{1}{2}k");
    CHECK(latex_unipoly(UniPoly()) == "0");

    CHECK(latex_multipoly(parse_weight("k1*k2", 2)) == "k_{1}k_{2}");
    CHECK(latex_multipoly(parse_weight("k1^2 + 2*k2", 2)) == "k_{1}^{2}+2k_{2}");
}

TEST_CASE("latex formulas match the published layout") {
    Formula plain = mtv_formula(MultiPoly::constant(2, Rational(1)), 2);
    std::string s = latex_formula(plain);
    CHECK(s.find("\\sum\\nolimits^{(2)}") != std::string::npos);
    CHECK(s.find("t(2k_{1},2k_{2})") != std::string::npos);
    CHECK(s.find("\\frac{1}{4}") != std::string::npos);
    CHECK(s.find("t(2k)") != std::string::npos);

    Formula star = mtv_star_formula(MultiPoly::constant(2, Rational(1)), 2);
    CHECK(latex_formula(star).find("t^{\\star}") != std::string::npos);

    Formula bern = bernoulli_sum_formula({0, 0});
    std::string b = latex_formula(bern);
    CHECK(b.find("\\beta_{2k_{1}}") != std::string::npos);
    CHECK(b.find("(2k_{1})!") != std::string::npos);

    Formula prod = weighted_formula(parse_weight("k1*k2", 2), 2, Family::t_product);
    std::string p = latex_formula(prod);
    CHECK(p.find("t(2k_{1})t(2k_{2})") != std::string::npos);
    CHECK(p.find("\\zeta(2)t(2k-2)") != std::string::npos);
}

TEST_CASE("cache dir resolution") {
    CHECK(resolve_cache_dir("/x/y") == "/x/y");
    ::setenv("TEVEN_CACHE_DIR", "/from/env", 1);
    CHECK(resolve_cache_dir("") == "/from/env");
    CHECK(resolve_cache_dir("/flag/wins") == "/flag/wins");
    ::unsetenv("TEVEN_CACHE_DIR");
    CHECK(resolve_cache_dir("") == ".teven-cache");
}

TEST_CASE("cache store/load/list/purge") {
    TempDir tmp;
    FormulaCache cache((tmp.path / "cache").string());
    CHECK(cache.list().empty());

    Formula f = weighted_formula(parse_weight("k1*k2", 2), 2, Family::t_product);
    REQUIRE(cache.store(f));
    auto names = cache.list();
    REQUIRE(names.size() == 1);
    CHECK(names[0].find("tprod_2_") == 0);

    auto loaded = cache.load(f.family, f.n, f.weight);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == f);

    // A different weight misses.
    CHECK_FALSE(cache.load(f.family, 2, parse_weight("k1+k2", 2)).has_value());

    Formula g = mtv_formula(MultiPoly::constant(2, Rational(1)), 2);
    REQUIRE(cache.store(g));
    CHECK(cache.list().size() == 2);

    auto removed = cache.purge();
    REQUIRE(removed.has_value());
    CHECK(*removed == 2);
    CHECK(cache.list().empty());
}

TEST_CASE("cache failure paths") {
    TempDir tmp;
    fs::path file = tmp.path / "plain-file";
    std::ofstream(file) << "not a directory\n";

    FormulaCache bad(file.string());
    Formula f = mtv_formula(MultiPoly::constant(2, Rational(1)), 2);
    CHECK_FALSE(bad.store(f));
    CHECK_FALSE(bad.purge().has_value());
    CHECK(bad.list().empty());

    FormulaCache missing((tmp.path / "never-created").string());
    CHECK(missing.list().empty());
    auto removed = missing.purge();
    REQUIRE(removed.has_value());
    CHECK(*removed == 0);

    // Corrupt cache entries load as a miss, not a crash.
    FormulaCache cache((tmp.path / "cache").string());
    REQUIRE(cache.store(f));
    std::ofstream(cache.path_for(f.family, f.n, f.weight), std::ios::trunc) << "{broken";
    CHECK_FALSE(cache.load(f.family, f.n, f.weight).has_value());
}
