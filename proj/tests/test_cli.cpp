#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("teven-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int counter;
};
int TempDir::counter = 0;

RunResult run(const std::string& args) {
    static int invocation = 0;
    fs::path base = fs::temp_directory_path() /
                    ("teven-io-" + std::to_string(::getpid()) + "-" +
                     std::to_string(invocation++));
    fs::path out = base.string() + ".out", err = base.string() + ".err";
    std::string cmd = std::string(TEVEN_CLI_PATH) + " " + args + " >" + out.string() +
                      " 2>" + err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return r;
}

}  // namespace

TEST_CASE("derive: text, latex, json") {
    TempDir tmp;
    std::string cache = " --cache-dir " + (tmp.path / "c").string();

    RunResult text = run("derive --kind mtv --n 2 --f 1" + cache);
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("family: mtv") != std::string::npos);
    CHECK(text.out.find("1/4") != std::string::npos);

    RunResult latex = run("derive --kind mtv --n 2 --f 1 --format latex" + cache);
    CHECK(latex.exit_code == 0);
    CHECK(latex.out.find("\\sum\\nolimits^{(2)} t(2k_{1},2k_{2}) = \\frac{1}{4}t(2k)") !=
          std::string::npos);

    RunResult json = run("derive --kind tprod --n 2 --f k1*k2 --format json" + cache);
    CHECK(json.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(json.out);
    CHECK(j["family"] == "tprod");
    CHECK(j["n"] == 2);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["l"] == 0);
    CHECK(j["terms"][1]["l"] == 1);
}

TEST_CASE("derive: --out and determinism") {
    TempDir tmp;
    std::string cache = " --cache-dir " + (tmp.path / "c").string();
    fs::path f1 = tmp.path / "a.json", f2 = tmp.path / "b.json";
    CHECK(run("derive --kind mtv-star --n 3 --f 1 --format json --out " + f1.string() +
              cache)
              .exit_code == 0);
    CHECK(run("derive --kind mtv-star --n 3 --f 1 --format json --out " + f2.string() +
              cache)
              .exit_code == 0);
    std::string a = slurp(f1), b = slurp(f2);
    CHECK_FALSE(a.empty());
    CHECK(a == b);  // byte-identical output
}

TEST_CASE("derive: error exit codes") {
    RunResult parse_err = run("derive --kind mtv --n 2 --f 'k1 +'");
    CHECK(parse_err.exit_code == 2);
    CHECK(parse_err.err.find("error") != std::string::npos);

    RunResult arity = run("derive --kind tprod --n 2 --f k3");
    CHECK(arity.exit_code == 2);

    RunResult sym = run("derive --kind mtv --n 2 --f k1^2*k2");
    CHECK(sym.exit_code == 3);
    CHECK(sym.err.find("transposition") != std::string::npos);

    TempDir tmp;
    RunResult symmetrized = run("derive --kind mtv --n 2 --f k1^2*k2 --symmetrize "
                                "--cache-dir " + (tmp.path / "c").string());
    CHECK(symmetrized.exit_code == 0);

    CHECK(run("derive --kind nope --n 2 --f 1").exit_code == 2);
}

TEST_CASE("verify: exact and numeric") {
    RunResult exact = run("verify --kind bernoulli --n 3 --f 1 --k 3..12 --mode exact");
    CHECK(exact.exit_code == 0);
    int pass_lines = 0;
    for (size_t at = exact.out.find("PASS"); at != std::string::npos;
         at = exact.out.find("PASS", at + 1))
        ++pass_lines;
    CHECK(pass_lines == 10);
    CHECK(exact.out.find("FAIL") == std::string::npos);
    CHECK(exact.out.find("k=3 ") == 0);  // ordered output

    RunResult numeric =
        run("verify --kind mtv --n 2 --f 1 --k 2..4 --mode numeric --eps 1e-18");
    CHECK(numeric.exit_code == 0);
    CHECK(numeric.out.find("FAIL") == std::string::npos);

    RunResult both = run("verify --kind mtv-star --n 2 --f k1*k2 --k 2..3");
    CHECK(both.exit_code == 0);
    CHECK(both.out.find("exact=ok") != std::string::npos);
    CHECK(both.out.find("numeric=ok") != std::string::npos);

    CHECK(run("verify --kind tprod --n 2 --f 1 --k 1..1").exit_code == 2);
    CHECK(run("verify --kind tprod --n 2 --f 1 --k 5..3").exit_code == 2);
    CHECK(run("verify --kind tprod --n 2 --f 1 --k x").exit_code == 2);
}

TEST_CASE("appendix regeneration per section") {
    RunResult a1 = run("appendix --section A1");
    CHECK(a1.exit_code == 0);
    CHECK(a1.out.find("DIFFER") == std::string::npos);
    CHECK(a1.out.find("30 entries checked") != std::string::npos);

    RunResult a2 = run("appendix --section A2");
    CHECK(a2.exit_code == 0);
    CHECK(a2.out.find("30 entries checked") != std::string::npos);
}

TEST_CASE("cache subcommand") {
    TempDir tmp;
    std::string dir = (tmp.path / "cache").string();

    RunResult empty = run("cache --dir " + dir + " list");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.empty());

    CHECK(run("derive --kind mtv --n 2 --f 1 --cache-dir " + dir).exit_code == 0);
    RunResult one = run("cache --dir " + dir + " list");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("mtv_2_") != std::string::npos);

    // Cache transparency: the stored JSON equals a fresh derivation's JSON.
    RunResult fresh = run("derive --kind mtv --n 2 --f 1 --format json --cache-dir " + dir);
    std::string entry;
    for (const auto& e : fs::directory_iterator(dir)) entry = e.path().string();
    CHECK(nlohmann::json::parse(slurp(entry)) == nlohmann::json::parse(fresh.out));

    RunResult purge = run("cache --dir " + dir + " purge");
    CHECK(purge.exit_code == 0);
    CHECK(purge.out.find("removed 1") != std::string::npos);
    CHECK(run("cache --dir " + dir + " list").out.empty());

    // Environment variable fallback.
    fs::path envdir = tmp.path / "envcache";
    int status = std::system(("env TEVEN_CACHE_DIR=" + envdir.string() + " " +
                              TEVEN_CLI_PATH + " derive --kind mtv --n 2 --f 1 >/dev/null 2>&1")
                                 .c_str());
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(fs::exists(envdir));
    CHECK_FALSE(fs::is_empty(envdir));
}

TEST_CASE("cache purge failure exits 4") {
    TempDir tmp;
    fs::path file = tmp.path / "not-a-dir";
    std::ofstream(file) << "x\n";
    RunResult r = run("cache --dir " + file.string() + " purge");
    CHECK(r.exit_code == 4);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("debug dumps") {
    RunResult fg = run("dump-fg --m 2");
    CHECK(fg.exit_code == 0);
    CHECK(fg.out.find("F_{2,1}") != std::string::npos);

    RunResult fg_json = run("dump-fg --m 1 --format json");
    CHECK(fg_json.exit_code == 0);
    CHECK(nlohmann::json::parse(fg_json.out).contains("F"));

    RunResult exp = run("dump-expansion --m 0,0");
    CHECK(exp.exit_code == 0);
}
