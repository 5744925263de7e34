#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "teven/cache.hpp"
#include "teven/corpus.hpp"
#include "teven/errors.hpp"
#include "teven/expansion.hpp"
#include "teven/fg_table.hpp"
#include "teven/latex.hpp"
#include "teven/numeric.hpp"
#include "teven/parser.hpp"
#include "teven/partition.hpp"

namespace {

using namespace teven;

constexpr int kExitUsage = 2;
constexpr int kExitSymmetry = 3;
constexpr int kExitCache = 4;

struct KRange {
    int lo = 0;
    int hi = 0;
};

KRange parse_k_range(const std::string& s) {
    KRange r;
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(s);
        } else {
            r.lo = std::stoi(s.substr(0, dots));
            r.hi = std::stoi(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw ArgumentError("bad k range: " + s);
    }
    if (r.hi < r.lo) throw ArgumentError("empty k range: " + s);
    return r;
}

std::string render_text(const Formula& f) {
    std::ostringstream out;
    out << "family: " << family_name(f.family) << "\n";
    out << "n: " << f.n << "\n";
    out << "f: " << print_multipoly(f.weight) << "\n";
    for (const auto& [l, coeff] : f.terms) {
        out << "l=" << l;
        if (f.family == Family::bernoulli) {
            out << " [beta_{2k-" << 2 * l << "}/(2k-" << 2 * l << ")!]";
        } else if (l == 0) {
            out << " [t(2k)]";
        } else {
            out << " [zeta(" << 2 * l << ")t(2k-" << 2 * l << ")]";
        }
        out << ": " << print_unipoly(coeff) << "\n";
    }
    return out.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw ArgumentError("cannot open output file: " + out_path);
    out << text;
}

Formula derive_with_args(const std::string& kind, int n, const std::string& f_expr,
                         bool symmetrize) {
    Family family = family_from_name(kind);
    MultiPoly f = parse_weight(f_expr, n);
    if (symmetrize) f = f.symmetrized();
    return derive_formula(family, f, n);
}

int cmd_derive(const std::string& kind, int n, const std::string& f_expr, bool symmetrize,
               const std::string& format, const std::string& out_path,
               const std::string& cache_dir) {
    Formula f = derive_with_args(kind, n, f_expr, symmetrize);

    std::string text;
    if (format == "json")
        text = formula_to_json(f).dump(2) + "\n";
    else if (format == "latex")
        text = latex_formula(f) + "\n";
    else
        text = render_text(f);
    emit(text, out_path);

    FormulaCache cache(resolve_cache_dir(cache_dir));
    if (!cache.store(f))
        std::cerr << "warning: could not write formula cache in " << cache.dir() << "\n";
    return 0;
}

struct VerifyResult {
    int k = 0;
    bool pass = true;
    std::string detail;
};

VerifyResult verify_one(const Formula& f, int k, const std::string& mode,
                        mpfr_prec_t prec, double eps) {
    VerifyResult r;
    r.k = k;
    bool exact_available =
        f.family == Family::bernoulli || f.family == Family::t_product ||
        (f.n == 2 && (f.family == Family::mtv || f.family == Family::mtv_star));
    bool want_exact = mode != "numeric";
    bool want_numeric = mode != "exact" || !exact_available;

    if (want_exact && exact_available) {
        Rational rhs = evaluate_formula_exact(f, k);
        Rational lhs;
        if (f.family == Family::bernoulli || f.family == Family::t_product)
            lhs = brute_force_lhs(f.family, f.weight, f.n, k);
        else
            lhs = mtv_lhs_exact_depth2(f.weight, k, f.family == Family::mtv_star);
        bool ok = lhs == rhs;
        r.pass = r.pass && ok;
        r.detail += std::string(" exact=") + (ok ? "ok" : "mismatch");
    }
    if (want_numeric) {
        NumericVerification v = verify_formula_numeric(f, k, prec, eps);
        r.pass = r.pass && v.pass;
        r.detail += std::string(" numeric=") + (v.pass ? "ok" : "fail") +
                    " residual=" + v.residual.value.str(6) +
                    " bound=" + v.residual.error_bound.str(6);
    }
    return r;
}

int cmd_verify(const std::string& kind, int n, const std::string& f_expr,
               const std::string& k_range, const std::string& mode, long prec_bits,
               double eps) {
    KRange kr = parse_k_range(k_range);
    if (kr.lo < n) throw DomainError("k range starts below n");
    Formula f = derive_with_args(kind, n, f_expr, false);
    if (eps <= 0)
        eps = (f.family == Family::mtv || f.family == Family::mtv_star) && n >= 3
                  ? 1e-12
                  : 1e-20;

    std::vector<std::future<VerifyResult>> futures;
    for (int k = kr.lo; k <= kr.hi; ++k)
        futures.push_back(std::async(std::launch::async, verify_one, f, k, mode,
                                     static_cast<mpfr_prec_t>(prec_bits), eps));
    bool all = true;
    for (auto& fut : futures) {
        VerifyResult r = fut.get();
        all = all && r.pass;
        std::cout << "k=" << r.k << (r.pass ? " PASS" : " FAIL") << r.detail << "\n";
    }
    return all ? 0 : 1;
}

int cmd_appendix(const std::string& section, bool diff) {
    bool all_equal = true;
    int checked = 0;
    for (const AppendixEntry& e : appendix_corpus()) {
        if (section != "all" && section != e.section) continue;
        ++checked;
        Formula want = expected_formula(e);
        Formula got = derived_formula(e);
        bool equal = want == got;
        all_equal = all_equal && equal;
        std::cout << e.section << " " << family_name(e.family) << " n=" << e.n
                  << " f=" << e.weight_expr << ": " << (equal ? "EQUAL" : "DIFFER")
                  << "\n";
        if (!equal && diff) {
            for (const auto& [l, c] : want.terms)
                std::cout << "  expected l=" << l << ": " << print_unipoly(c) << "\n";
            for (const auto& [l, c] : got.terms)
                std::cout << "  derived  l=" << l << ": " << print_unipoly(c) << "\n";
        }
    }
    std::cout << checked << " entries checked\n";
    return all_equal ? 0 : 1;
}

int cmd_cache(const std::string& dir_flag, const std::string& action) {
    FormulaCache cache(resolve_cache_dir(dir_flag));
    if (action == "list") {
        for (const auto& name : cache.list()) std::cout << name << "\n";
        return 0;
    }
    auto removed = cache.purge();
    if (!removed) {
        std::cerr << "error: cannot purge cache in " << cache.dir() << "\n";
        return kExitCache;
    }
    std::cout << "removed " << *removed << " entries\n";
    return 0;
}

int cmd_dump_fg(int m, const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        for (int i = 0; i <= m + 1; ++i) {
            if (i >= 0) j["F"][std::to_string(i)] = unipoly_to_json(fg_table().f_poly(m, i));
            if (i >= 1) j["G"][std::to_string(i)] = unipoly_to_json(fg_table().g_poly(m, i));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (int i = 0; i <= m + 1; ++i)
            std::cout << "F_{" << m << "," << i
                      << "} = " << latex_unipoly(fg_table().f_poly(m, i), "x") << "\n";
        for (int i = 1; i <= m + 1; ++i)
            std::cout << "G_{" << m << "," << i
                      << "} = " << latex_unipoly(fg_table().g_poly(m, i), "x") << "\n";
    }
    return 0;
}

int cmd_dump_expansion(const std::string& m_spec, const std::string& format) {
    std::vector<int> m_vec;
    std::stringstream ss(m_spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
        m_vec.push_back(std::stoi(tok));
    const ExpansionResult& e = expand(m_vec);
    if (format == "json") {
        nlohmann::json j;
        j["m"] = e.m_vec;
        j["weight_norm"] = e.weight_norm;
        j["T"] = e.t_bound;
        for (size_t i = 0; i < e.r_polys.size(); ++i)
            j["R"][std::to_string(i)] = unipoly_to_json(e.r_polys[i]);
        std::cout << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < e.r_polys.size(); ++i)
            std::cout << "R_" << i << " = " << latex_unipoly(e.r_polys[i], "x") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted sum formulas of multiple t-values at even arguments"};
    app.require_subcommand(1);

    std::string kind, f_expr, format = "text", out_path, cache_dir, k_range,
                mode = "both", section = "all", cache_action;
    int n = 0, dump_m = 0;
    bool symmetrize = false, diff = false;
    long prec_bits = 256;
    double eps = 0;  // 0 = family-dependent default
    std::string m_spec;

    auto* derive = app.add_subcommand("derive", "derive a weighted sum formula");
    derive->add_option("--kind", kind, "bernoulli|tprod|mtv|mtv-star")->required();
    derive->add_option("--n", n, "depth")->required();
    derive->add_option("--f", f_expr, "weight polynomial expression")->required();
    derive->add_flag("--symmetrize", symmetrize, "symmetrize the weight first");
    derive->add_option("--format", format, "text|latex|json")
        ->check(CLI::IsMember({"text", "latex", "json"}));
    derive->add_option("--out", out_path, "write output to a file");
    derive->add_option("--cache-dir", cache_dir, "formula cache directory");

    auto* verify = app.add_subcommand("verify", "verify a formula over a k range");
    verify->add_option("--kind", kind, "bernoulli|tprod|mtv|mtv-star")->required();
    verify->add_option("--n", n, "depth")->required();
    verify->add_option("--f", f_expr, "weight polynomial expression")->required();
    verify->add_option("--k", k_range, "k value or range a..b")->required();
    verify->add_option("--mode", mode, "exact|numeric|both")
        ->check(CLI::IsMember({"exact", "numeric", "both"}));
    verify->add_option("--prec", prec_bits, "working precision in bits");
    verify->add_option("--eps", eps, "numeric tolerance");

    auto* appendix = app.add_subcommand("appendix", "regenerate the reference corpus");
    appendix->add_option("--section", section, "A1|A2|A3|all")
        ->check(CLI::IsMember({"A1", "A2", "A3", "all"}));
    appendix->add_flag("--diff", diff, "show term-by-term differences");

    auto* cachecmd = app.add_subcommand("cache", "manage the on-disk formula cache");
    cachecmd->add_option("--dir", cache_dir, "cache directory (default TEVEN_CACHE_DIR)");
    cachecmd->add_option("action", cache_action, "list|purge")
        ->required()
        ->check(CLI::IsMember({"list", "purge"}));

    auto* dump_fg = app.add_subcommand("dump-fg", "debug: print F/G polynomial tables");
    dump_fg->add_option("--m", dump_m, "table row")->required();
    dump_fg->add_option("--format", format, "text|json");

    auto* dump_exp =
        app.add_subcommand("dump-expansion", "debug: print R_j polynomials");
    dump_exp->add_option("--m", m_spec, "comma-separated exponents, e.g. 1,0,2")
        ->required();
    dump_exp->add_option("--format", format, "text|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*derive) return cmd_derive(kind, n, f_expr, symmetrize, format, out_path, cache_dir);
        if (*verify) return cmd_verify(kind, n, f_expr, k_range, mode, prec_bits, eps);
        if (*appendix) return cmd_appendix(section, diff);
        if (*cachecmd) return cmd_cache(cache_dir, cache_action);
        if (*dump_fg) return cmd_dump_fg(dump_m, format);
        if (*dump_exp) return cmd_dump_expansion(m_spec, format);
    } catch (const SymmetryError& e) {
        std::cerr << "error: " << e.what() << " (transposition " << e.transposition
                  << "," << e.transposition + 1 << ")\n";
        return kExitSymmetry;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
