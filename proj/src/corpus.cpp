#include "teven/corpus.hpp"

#include "teven/parser.hpp"
#include "teven/partition.hpp"

namespace teven {

namespace {

std::vector<AppendixEntry> build_corpus() {
    std::vector<AppendixEntry> c;
    auto add = [&c](const char* section, Family fam, int n, const char* f,
                    std::vector<std::pair<int, std::string>> terms) {
        c.push_back({section, fam, n, f, std::move(terms)});
    };
    const Family B = Family::bernoulli;
    const Family T = Family::t_product;
    const Family M = Family::mtv;
    const Family S = Family::mtv_star;

    // ---- A.1: Bernoulli-number weighted sums ----
    add("A1", B, 2, "1", {{0, "-(2*k1-1)"}});
    add("A1", B, 2, "k1", {{0, "-1/2*k1*(2*k1-1)"}});
    add("A1", B, 2, "k1^2",
        {{0, "-1/12*k1*(2*k1-1)*(4*k1-1)"}, {1, "-1/24*(2*k1-3)"}});
    add("A1", B, 2, "k1*k2",
        {{0, "-1/12*k1*(2*k1-1)*(2*k1+1)"}, {1, "1/24*(2*k1-3)"}});
    add("A1", B, 2, "k1^3",
        {{0, "-1/8*k1^2*(2*k1-1)^2"}, {1, "-1/16*k1*(2*k1-3)"}});
    add("A1", B, 2, "k1^2*k2",
        {{0, "-1/24*k1^2*(2*k1-1)*(2*k1+1)"}, {1, "1/48*k1*(2*k1-3)"}});
    add("A1", B, 2, "k1^4",
        {{0, "-1/240*k1*(2*k1-1)*(4*k1-1)*(12*k1^2-6*k1-1)"},
         {1, "-1/96*(2*k1-3)*(8*k1^2-6*k1+5)"},
         {2, "1/480*(2*k1-5)"}});
    add("A1", B, 2, "k1^3*k2",
        {{0, "-1/240*k1*(2*k1-1)*(2*k1+1)*(6*k1^2-1)"},
         {1, "1/96*(2*k1-3)*(2*k1^2-6*k1+5)"},
         {2, "-1/480*(2*k1-5)"}});
    add("A1", B, 2, "k1^2*k2^2",
        {{0, "-1/240*k1*(2*k1-1)*(2*k1+1)*(4*k1^2+1)"},
         {1, "1/96*(2*k1-3)*(6*k1-5)"},
         {2, "1/480*(2*k1-5)"}});
    add("A1", B, 2, "k1^5",
        {{0, "-1/96*k1^2*(2*k1-1)^2*(8*k1^2-4*k1-1)"},
         {1, "-5/192*k1*(2*k1-3)*(4*k1^2-6*k1+5)"},
         {2, "1/192*k1*(2*k1-5)"}});
    add("A1", B, 2, "k1^4*k2",
        {{0, "-1/480*k1^2*(2*k1-1)*(2*k1+1)*(8*k1^2-3)"},
         {1, "1/192*k1*(2*k1-3)*(4*k1^2-18*k1+15)"},
         {2, "-1/320*k1*(2*k1-5)"}});
    add("A1", B, 2, "k1^3*k2^2",
        {{0, "-1/480*k1^2*(2*k1-1)*(2*k1+1)*(4*k1^2+1)"},
         {1, "1/192*k1*(2*k1-3)*(6*k1-5)"},
         {2, "1/960*k1*(2*k1-5)"}});

    add("A1", B, 3, "1", {{0, "(k1-1)*(2*k1-1)"}, {1, "1/4"}});
    add("A1", B, 3, "k1", {{0, "1/3*k1*(k1-1)*(2*k1-1)"}, {1, "1/12*k1"}});
    add("A1", B, 3, "k1^2",
        {{0, "1/12*k1*(k1-1)*(2*k1-1)^2"}, {1, "1/24*(4*k1^2-11*k1+9)"}});
    add("A1", B, 3, "k1*k2",
        {{0, "1/24*k1*(k1-1)*(2*k1-1)*(2*k1+1)"}, {1, "-1/48*(k1-1)*(2*k1-9)"}});
    add("A1", B, 3, "k1^3",
        {{0, "1/120*k1*(k1-1)*(2*k1-1)*(12*k1^2-12*k1+1)"},
         {1, "1/48*(8*k1^3-24*k1^2+17*k1+3)"},
         {2, "1/240*(2*k1-5)"}});
    add("A1", B, 3, "k1^2*k2",
        {{0, "1/240*k1*(k1-1)*(2*k1-1)*(2*k1+1)*(4*k1-1)"},
         {1, "1/96*(k1-1)*(2*k1+3)"},
         {2, "-1/480*(2*k1-5)"}});
    add("A1", B, 3, "k1*k2*k3",
        {{0, "1/120*k1*(k1-1)*(k1+1)*(2*k1-1)*(2*k1+1)"},
         {1, "-1/48*(k1-3)*(k1-1)*(2*k1-1)"},
         {2, "1/240*(2*k1-5)"}});
    add("A1", B, 3, "k1^4",
        {{0, "1/240*k1*(k1-1)*(2*k1-1)^2*(8*k1^2-8*k1-1)"},
         {1, "1/96*(16*k1^4-64*k1^3+96*k1^2-79*k1+39)"},
         {2, "1/480*(2*k1-5)*(3*k1+1)"}});
    add("A1", B, 3, "k1^3*k2",
        {{0, "1/480*k1*(k1-1)*(2*k1-1)*(2*k1+1)*(4*k1^2-2*k1-1)"},
         {1, "1/192*(k1-1)*(16*k1^2-46*k1+39)"},
         {2, "-1/960*(k1+1)*(2*k1-5)"}});
    add("A1", B, 3, "k1^2*k2^2",
        {{0, "1/1440*k1*(k1-1)*(2*k1-1)*(2*k1+1)*(8*k1^2-4*k1+3)"},
         {1, "1/576*(k1-1)*(8*k1^3-64*k1^2+168*k1-117)"},
         {2, "-1/2880*(2*k1-5)*(7*k1-3)"}});
    add("A1", B, 3, "k1^2*k2*k3",
        {{0, "1/360*k1^2*(k1-1)*(k1+1)*(2*k1-1)*(2*k1+1)"},
         {1, "-1/144*k1*(k1-3)*(k1-1)*(2*k1-1)"},
         {2, "1/720*k1*(2*k1-5)"}});

    add("A1", B, 4, "1",
        {{0, "-1/3*(k1-1)*(2*k1-3)*(2*k1-1)"}, {1, "-1/3*(2*k1-3)"}});
    add("A1", B, 4, "k1",
        {{0, "-1/12*k1*(k1-1)*(2*k1-3)*(2*k1-1)"}, {1, "-1/12*k1*(2*k1-3)"}});
    add("A1", B, 4, "k1^2",
        {{0, "-1/120*k1*(k1-1)*(2*k1-3)*(2*k1-1)*(4*k1-3)"},
         {1, "-1/12*(2*k1-3)*(k1^2-3*k1+3)"},
         {2, "-1/160*(2*k1-5)"}});
    add("A1", B, 4, "k1*k2",
        {{0, "-1/120*k1*(k1-1)*(2*k1-3)*(2*k1-1)*(2*k1+1)"},
         {1, "-1/12*(k1-1)*(2*k1-3)"},
         {2, "1/480*(2*k1-5)"}});
    add("A1", B, 4, "k1^3",
        {{0, "-1/240*k1*(k1-1)*(2*k1-3)*(2*k1-1)*(4*k1^2-6*k1+1)"},
         {1, "-1/96*(2*k1-3)*(6*k1^3-21*k1^2+17*k1+6)"},
         {2, "-1/960*(2*k1-5)*(13*k1-21)"}});
    add("A1", B, 4, "k1^2*k2",
        {{0, "-1/720*k1*(k1-1)*(2*k1-3)*(2*k1-1)^2*(2*k1+1)"},
         {1, "-1/288*(k1-1)*(2*k1-3)*(2*k1^2-k1+6)"},
         {2, "7/2880*(k1-3)*(2*k1-5)"}});
    add("A1", B, 4, "k1*k2*k3",
        {{0, "-1/720*k1*(k1-1)*(k1+1)*(2*k1-3)*(2*k1-1)*(2*k1+1)"},
         {1, "1/288*(k1-6)*(k1-1)*(2*k1-3)*(2*k1-1)"},
         {2, "-1/2880*(2*k1-5)*(4*k1-21)"}});

    // ---- A.2: t-value products ----
    add("A2", T, 2, "1", {{0, "1/2*(2*k1-1)"}});
    add("A2", T, 2, "k1", {{0, "1/4*k1*(2*k1-1)"}});
    add("A2", T, 2, "k1^2",
        {{0, "1/24*k1*(2*k1-1)*(4*k1-1)"}, {1, "-1/8*(2*k1-3)"}});
    add("A2", T, 2, "k1*k2",
        {{0, "1/24*k1*(2*k1-1)*(2*k1+1)"}, {1, "1/8*(2*k1-3)"}});
    add("A2", T, 2, "k1^3",
        {{0, "1/16*k1^2*(2*k1-1)^2"}, {1, "-3/16*k1*(2*k1-3)"}});
    add("A2", T, 2, "k1^2*k2",
        {{0, "1/48*k1^2*(2*k1-1)*(2*k1+1)"}, {1, "1/16*k1*(2*k1-3)"}});
    add("A2", T, 2, "k1^4",
        {{0, "1/480*k1*(2*k1-1)*(4*k1-1)*(12*k1^2-6*k1-1)"},
         {1, "-1/32*(2*k1-3)*(8*k1^2-6*k1+5)"},
         {2, "-3/32*(2*k1-5)"}});
    add("A2", T, 2, "k1^3*k2",
        {{0, "1/480*k1*(2*k1-1)*(2*k1+1)*(6*k1^2-1)"},
         {1, "1/32*(2*k1-3)*(2*k1^2-6*k1+5)"},
         {2, "3/32*(2*k1-5)"}});
    add("A2", T, 2, "k1^2*k2^2",
        {{0, "1/480*k1*(2*k1-1)*(2*k1+1)*(4*k1^2+1)"},
         {1, "1/32*(2*k1-3)*(6*k1-5)"},
         {2, "-3/32*(2*k1-5)"}});
    add("A2", T, 2, "k1^5",
        {{0, "1/192*k1^2*(2*k1-1)^2*(8*k1^2-4*k1-1)"},
         {1, "-5/64*k1*(2*k1-3)*(4*k1^2-6*k1+5)"},
         {2, "-15/64*k1*(2*k1-5)"}});
    add("A2", T, 2, "k1^4*k2",
        {{0, "1/960*k1^2*(2*k1-1)*(2*k1+1)*(8*k1^2-3)"},
         {1, "1/64*k1*(2*k1-3)*(4*k1^2-18*k1+15)"},
         {2, "9/64*k1*(2*k1-5)"}});
    add("A2", T, 2, "k1^3*k2^2",
        {{0, "1/960*k1^2*(2*k1-1)*(2*k1+1)*(4*k1^2+1)"},
         {1, "1/64*k1*(2*k1-3)*(6*k1-5)"},
         {2, "-3/64*k1*(2*k1-5)"}});

    add("A2", T, 3, "1", {{0, "1/4*(k1-1)*(2*k1-1)"}, {1, "-3/8"}});
    add("A2", T, 3, "k1", {{0, "1/12*k1*(k1-1)*(2*k1-1)"}, {1, "-1/8*k1"}});
    add("A2", T, 3, "k1^2",
        {{0, "1/48*k1*(k1-1)*(2*k1-1)^2"}, {1, "-1/16*(4*k1^2-11*k1+9)"}});
    add("A2", T, 3, "k1*k2",
        {{0, "1/96*k1*(k1-1)*(2*k1-1)*(2*k1+1)"}, {1, "1/32*(k1-1)*(2*k1-9)"}});
    add("A2", T, 3, "k1^3",
        {{0, "1/480*k1*(k1-1)*(2*k1-1)*(12*k1^2-12*k1+1)"},
         {1, "-1/32*(8*k1^3-24*k1^2+17*k1+3)"},
         {2, "3/32*(2*k1-5)"}});
    add("A2", T, 3, "k1^2*k2",
        {{0, "1/960*k1*(k1-1)*(2*k1-1)*(2*k1+1)*(4*k1-1)"},
         {1, "-1/64*(k1-1)*(2*k1+3)"},
         {2, "-3/64*(2*k1-5)"}});
    add("A2", T, 3, "k1*k2*k3",
        {{0, "1/480*k1*(k1-1)*(k1+1)*(2*k1-1)*(2*k1+1)"},
         {1, "1/32*(k1-3)*(k1-1)*(2*k1-1)"},
         {2, "3/32*(2*k1-5)"}});
    add("A2", T, 3, "k1^4",
        {{0, "1/960*k1*(k1-1)*(2*k1-1)^2*(8*k1^2-8*k1-1)"},
         {1, "-1/64*(16*k1^4-64*k1^3+96*k1^2-79*k1+39)"},
         {2, "3/64*(2*k1-5)*(3*k1+1)"}});
    add("A2", T, 3, "k1^3*k2",
        {{0, "1/1920*k1*(k1-1)*(2*k1-1)*(2*k1+1)*(4*k1^2-2*k1-1)"},
         {1, "-1/128*(k1-1)*(16*k1^2-46*k1+39)"},
         {2, "-3/128*(k1+1)*(2*k1-5)"}});
    add("A2", T, 3, "k1^2*k2^2",
        {{0, "1/5760*k1*(k1-1)*(2*k1-1)*(2*k1+1)*(8*k1^2-4*k1+3)"},
         {1, "-1/384*(k1-1)*(8*k1^3-64*k1^2+168*k1-117)"},
         {2, "-1/128*(2*k1-5)*(7*k1-3)"}});
    add("A2", T, 3, "k1^2*k2*k3",
        {{0, "1/1440*k1^2*(k1-1)*(k1+1)*(2*k1-1)*(2*k1+1)"},
         {1, "1/96*k1*(k1-3)*(k1-1)*(2*k1-1)"},
         {2, "1/32*k1*(2*k1-5)"}});

    add("A2", T, 4, "1",
        {{0, "1/24*(k1-1)*(2*k1-3)*(2*k1-1)"}, {1, "-1/4*(2*k1-3)"}});
    add("A2", T, 4, "k1",
        {{0, "1/96*k1*(k1-1)*(2*k1-3)*(2*k1-1)"}, {1, "-1/16*k1*(2*k1-3)"}});
    add("A2", T, 4, "k1^2",
        {{0, "1/960*k1*(k1-1)*(2*k1-3)*(2*k1-1)*(4*k1-3)"},
         {1, "-1/16*(2*k1-3)*(k1^2-3*k1+3)"},
         {2, "9/128*(2*k1-5)"}});
    add("A2", T, 4, "k1*k2",
        {{0, "1/960*k1*(k1-1)*(2*k1-3)*(2*k1-1)*(2*k1+1)"},
         {1, "-1/16*(k1-1)*(2*k1-3)"},
         {2, "-3/128*(2*k1-5)"}});
    add("A2", T, 4, "k1^3",
        {{0, "1/1920*k1*(k1-1)*(2*k1-3)*(2*k1-1)*(4*k1^2-6*k1+1)"},
         {1, "-1/128*(2*k1-3)*(6*k1^3-21*k1^2+17*k1+6)"},
         {2, "3/256*(2*k1-5)*(13*k1-21)"}});
    add("A2", T, 4, "k1^2*k2",
        {{0, "1/5760*k1*(k1-1)*(2*k1-3)*(2*k1-1)^2*(2*k1+1)"},
         {1, "-1/384*(k1-1)*(2*k1-3)*(2*k1^2-k1+6)"},
         {2, "-7/256*(k1-3)*(2*k1-5)"}});
    add("A2", T, 4, "k1*k2*k3",
        {{0, "1/5760*k1*(k1-1)*(k1+1)*(2*k1-3)*(2*k1-1)*(2*k1+1)"},
         {1, "1/384*(k1-6)*(k1-1)*(2*k1-3)*(2*k1-1)"},
         {2, "1/256*(2*k1-5)*(4*k1-21)"}});

    // ---- A.3: multiple t-values ----
    add("A3", M, 2, "1", {{0, "1/4"}});
    add("A3", M, 2, "k1^2+k2^2",
        {{0, "1/8*k1*(2*k1-1)"}, {1, "-1/8*(2*k1-3)"}});
    add("A3", M, 2, "k1*k2", {{0, "1/16*k1"}, {1, "1/16*(2*k1-3)"}});
    add("A3", M, 2, "k1^3+k2^3",
        {{0, "1/16*k1^2*(4*k1-3)"}, {1, "-3/16*k1*(2*k1-3)"}});
    add("A3", M, 2, "k1^4+k2^4",
        {{0, "1/32*k1*(2*k1-1)*(4*k1^2-2*k1-1)"},
         {1, "-1/32*(2*k1-3)*(8*k1^2-6*k1+5)"},
         {2, "-3/32*(2*k1-5)"}});
    add("A3", M, 2, "k1^3*k2+k1*k2^3",
        {{0, "1/32*k1*(2*k1^2-1)"},
         {1, "1/32*(2*k1-3)*(2*k1^2-6*k1+5)"},
         {2, "3/32*(2*k1-5)"}});
    add("A3", M, 2, "k1^2*k2^2",
        {{0, "1/64*k1"}, {1, "1/64*(2*k1-3)*(6*k1-5)"}, {2, "-3/64*(2*k1-5)"}});
    add("A3", M, 2, "k1^5+k2^5",
        {{0, "1/64*k1^2*(16*k1^3-20*k1^2+5)"},
         {1, "-5/64*k1*(2*k1-3)*(4*k1^2-6*k1+5)"},
         {2, "-15/64*k1*(2*k1-5)"}});
    add("A3", M, 2, "k1^4*k2+k1*k2^4",
        {{0, "1/64*k1^2*(4*k1^2-3)"},
         {1, "1/64*k1*(2*k1-3)*(4*k1^2-18*k1+15)"},
         {2, "9/64*k1*(2*k1-5)"}});

    add("A3", S, 2, "1", {{0, "1/4*(4*k1-3)"}});
    add("A3", S, 2, "k1^2+k2^2",
        {{0, "1/24*k1*(2*k1-1)*(8*k1-5)"}, {1, "-1/8*(2*k1-3)"}});
    add("A3", S, 2, "k1*k2",
        {{0, "1/48*k1*(8*k1^2-5)"}, {1, "1/16*(2*k1-3)"}});
    add("A3", S, 2, "k1^3+k2^3",
        {{0, "1/16*k1^2*(8*k1^2-12*k1+5)"}, {1, "-3/16*k1*(2*k1-3)"}});
    add("A3", S, 2, "k1^4+k2^4",
        {{0, "1/480*k1*(2*k1-1)*(96*k1^3-132*k1^2+34*k1+17)"},
         {1, "-1/32*(2*k1-3)*(8*k1^2-6*k1+5)"},
         {2, "-3/32*(2*k1-5)"}});
    add("A3", S, 2, "k1^3*k2+k1*k2^3",
        {{0, "1/480*k1*(48*k1^4-50*k1^2+17)"},
         {1, "1/32*(2*k1-3)*(2*k1^2-6*k1+5)"},
         {2, "3/32*(2*k1-5)"}});
    add("A3", S, 2, "k1^2*k2^2",
        {{0, "1/960*k1*(32*k1^4-17)"},
         {1, "1/64*(2*k1-3)*(6*k1-5)"},
         {2, "-3/64*(2*k1-5)"}});
    add("A3", S, 2, "k1^5+k2^5",
        {{0, "1/192*k1^2*(64*k1^4-144*k1^3+100*k1^2-17)"},
         {1, "-5/64*k1*(2*k1-3)*(4*k1^2-6*k1+5)"},
         {2, "-15/64*k1*(2*k1-5)"}});
    add("A3", S, 2, "k1^4*k2+k1*k2^4",
        {{0, "1/960*k1^2*(64*k1^4-100*k1^2+51)"},
         {1, "1/64*k1*(2*k1-3)*(4*k1^2-18*k1+15)"},
         {2, "9/64*k1*(2*k1-5)"}});

    add("A3", M, 3, "1", {{0, "1/8"}, {1, "-1/16"}});
    add("A3", M, 3, "k1^2+k2^2+k3^2",
        {{0, "1/32*k1*(4*k1-3)"}, {1, "-1/32*(2*k1^2-3)"}});
    add("A3", M, 3, "k1*k2+k1*k3+k2*k3", {{0, "3/64*k1"}, {1, "-3/64"}});
    add("A3", M, 3, "k1^3+k2^3+k3^3",
        {{0, "1/128*k1*(16*k1^2-18*k1+3)"},
         {1, "-1/128*(8*k1^3-18*k1+3)"},
         {2, "3/128*(2*k1-5)"}});
    add("A3", M, 3,
        "k1^2*k2+k1*k2^2+k1^2*k3+k1*k3^2+k2^2*k3+k2*k3^2",
        {{0, "3/128*k1*(2*k1-1)"},
         {1, "-3/128*(2*k1-1)"},
         {2, "-3/128*(2*k1-5)"}});
    add("A3", M, 3, "k1*k2*k3",
        {{0, "1/128*k1"}, {1, "-1/128"}, {2, "1/128*(2*k1-5)"}});
    add("A3", M, 3, "k1^4+k2^4+k3^4",
        {{0, "1/128*k1*(16*k1^3-24*k1^2+6*k1+3)"},
         {1, "-1/128*(8*k1^4-36*k1^2+42*k1-21)"},
         {2, "3/128*(2*k1-5)*(2*k1-3)"}});
    add("A3", M, 3,
        "k1^3*k2+k1*k2^3+k1^3*k3+k1*k3^3+k2^3*k3+k2*k3^3",
        {{0, "3/128*k1*(k1-1)*(2*k1+1)"},
         {1, "-3/128*(k1-1)*(6*k1-7)"},
         {2, "-3/128*(k1-3)*(2*k1-5)"}});
    add("A3", M, 3, "k1^2*k2^2+k1^2*k3^2+k2^2*k3^2",
        {{0, "-1/256*k1*(2*k1-3)"},
         {1, "1/256*(12*k1^2-34*k1+21)"},
         {2, "-1/256*(2*k1-5)*(2*k1+9)"}});

    add("A3", S, 3, "1", {{0, "1/8*(4*k1^2-10*k1+5)"}, {1, "-1/16"}});
    add("A3", S, 3, "k1^2+k2^2+k3^2",
        {{0, "1/96*k1*(24*k1^3-80*k1^2+78*k1-25)"},
         {1, "-1/32*(6*k1^2-22*k1+21)"}});
    add("A3", S, 3, "k1*k2+k1*k3+k2*k3",
        {{0, "1/192*k1*(24*k1^3-40*k1^2-18*k1+25)"},
         {1, "1/64*(4*k1^2-22*k1+21)"}});
    add("A3", S, 3, "k1^3+k2^3+k3^3",
        {{0, "1/640*k1*(6*k1-1)*(16*k1^3-64*k1^2+76*k1-29)"},
         {1, "-1/128*(24*k1^3-96*k1^2+86*k1+9)"},
         {2, "9/128*(2*k1-5)"}});
    add("A3", S, 3,
        "k1^2*k2+k1*k2^2+k1^2*k3+k1*k3^2+k2^2*k3+k2*k3^2",
        {{0, "1/1920*k1*(2*k1-1)*(96*k1^3-152*k1^2-76*k1+87)"},
         {1, "-1/128*(8*k1^2-2*k1-9)"},
         {2, "-9/128*(2*k1-5)"}});
    add("A3", S, 3, "k1*k2*k3",
        {{0, "1/1920*k1*(16*k1^4-60*k1^2+29)"},
         {1, "1/384*(8*k1^3-36*k1^2+40*k1-9)"},
         {2, "3/128*(2*k1-5)"}});
    add("A3", S, 3, "k1^4+k2^4+k3^4",
        {{0, "1/1920*k1*(192*k1^5-960*k1^4+1560*k1^3-1000*k1^2+108*k1+85)"},
         {1, "-1/128*(24*k1^4-128*k1^3+228*k1^2-200*k1+99)"},
         {2, "3/128*(2*k1-5)*(4*k1+5)"}});
    add("A3", S, 3,
        "k1^3*k2+k1*k2^3+k1^3*k3+k1*k3^3+k2^3*k3+k2*k3^3",
        {{0, "1/1920*k1*(k1-1)*(96*k1^4-144*k1^3-144*k1^2+106*k1+85)"},
         {1, "-1/128*(k1-1)*(32*k1^2-110*k1+99)"},
         {2, "-3/128*(k1+5)*(2*k1-5)"}});
    add("A3", S, 3, "k1^2*k2^2+k1^2*k3^2+k2^2*k3^2",
        {{0, "1/3840*k1*(64*k1^5-160*k1^4+120*k1^3-124*k1+85)"},
         {1, "-1/768*(16*k1^4-144*k1^3+500*k1^2-672*k1+297)"},
         {2, "-3/256*(2*k1-5)*(4*k1-5)"}});

    add("A3", M, 4, "1", {{0, "5/64"}, {1, "-3/64"}});
    add("A3", M, 4, "k1^2+k2^2+k3^2+k4^2",
        {{0, "1/128*k1*(10*k1-9)"},
         {1, "-3/128*(2*k1^2-k1-2)"},
         {2, "3/256*(2*k1-5)"}});
    add("A3", M, 4, "k1*k2+k1*k3+k1*k4+k2*k3+k2*k4+k3*k4",
        {{0, "9/256*k1"}, {1, "-3/256*(k1+2)"}, {2, "-3/512*(2*k1-5)"}});
    add("A3", M, 4, "k1^3+k2^3+k3^3+k4^3",
        {{0, "1/512*k1*(40*k1^2-54*k1+15)"},
         {1, "-3/512*(8*k1^3-6*k1^2-10*k1+3)"},
         {2, "9/512*k1*(2*k1-5)"}});
    add("A3", M, 4,
        "k1^2*k2+k1*k2^2+k1^2*k3+k1*k3^2+k1^2*k4+k1*k4^2"
        "+k2^2*k3+k2*k3^2+k2^2*k4+k2*k4^2+k3^2*k4+k3*k4^2",
        {{0, "3/512*k1*(6*k1-5)"},
         {1, "-3/512*(2*k1^2+2*k1-3)"},
         {2, "-3/512*k1*(2*k1-5)"}});
    add("A3", M, 4, "k1*k2*k3+k1*k2*k4+k1*k3*k4+k2*k3*k4",
        {{0, "5/512*k1"}, {1, "-1/512*(2*k1+3)"}});

    add("A3", S, 4, "1",
        {{0, "1/192*(4*k1-7)*(8*k1^2-28*k1+15)"}, {1, "-1/64*(4*k1-9)"}});
    add("A3", S, 4, "k1^2+k2^2+k3^2+k4^2",
        {{0, "1/1920*k1*(128*k1^4-840*k1^3+1880*k1^2-1680*k1+527)"},
         {1, "-1/384*(32*k1^3-210*k1^2+469*k1-348)"},
         {2, "-1/256*(2*k1-5)"}});
    add("A3", S, 4, "k1*k2+k1*k3+k1*k4+k2*k3+k2*k4+k3*k4",
        {{0, "1/3840*k1*(192*k1^4-840*k1^3+680*k1^2+630*k1-527)"},
         {1, "1/768*(8*k1^3-156*k1^2+469*k1-348)"},
         {2, "1/512*(2*k1-5)"}});
    add("A3", S, 4, "k1^3+k2^3+k3^3+k4^3",
        {{0, "1/7680*k1*(256*k1^5-2016*k1^4+5640*k1^3-6720*k1^2+3464*k1-609)"},
         {1, "-1/512*(32*k1^4-232*k1^3+534*k1^2-344*k1-69)"},
         {2, "3/512*(2*k1-5)*(5*k1-26)"}});
    add("A3", S, 4,
        "k1^2*k2+k1*k2^2+k1^2*k3+k1*k3^2+k1^2*k4+k1*k4^2"
        "+k2^2*k3+k2*k3^2+k2^2*k4+k2*k4^2+k3^2*k4+k3*k4^2",
        {{0, "1/7680*k1*(256*k1^5-1344*k1^4+1880*k1^3-1356*k1+609)"},
         {1, "-1/1536*(32*k1^4-144*k1^3+274*k1^2-360*k1+207)"},
         {2, "-1/512*(2*k1-5)*(17*k1-78)"}});
    add("A3", S, 4, "k1*k2*k3+k1*k2*k4+k1*k3*k4+k2*k3*k4",
        {{0, "1/23040*k1*(128*k1^5-336*k1^4-520*k1^3+1260*k1^2+302*k1-609)"},
         {1, "1/1536*(16*k1^4-152*k1^3+404*k1^2-352*k1+69)"},
         {2, "1/256*(2*k1-5)*(3*k1-13)"}});

    return c;
}

UniPoly to_unipoly(const MultiPoly& p) {
    UniPoly r;
    for (const auto& [exps, c] : p.terms())
        r += UniPoly::monomial(static_cast<int>(exps[0]), c);
    return r;
}

}  // namespace

const std::vector<AppendixEntry>& appendix_corpus() {
    static const std::vector<AppendixEntry> corpus = build_corpus();
    return corpus;
}

Formula expected_formula(const AppendixEntry& e) {
    Formula f;
    f.family = e.family;
    f.n = e.n;
    f.weight = parse_weight(e.weight_expr, e.n);
    for (const auto& [l, expr] : e.expected_terms) {
        UniPoly coeff = to_unipoly(parse_weight(expr, 1));
        if (!coeff.is_zero()) f.terms.emplace_back(l, std::move(coeff));
    }
    return f;
}

Formula derived_formula(const AppendixEntry& e) {
    return derive_formula(e.family, parse_weight(e.weight_expr, e.n), e.n);
}

}  // namespace teven
