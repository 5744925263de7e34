#pragma once

#include <map>
#include <vector>

#include "teven/unipoly.hpp"

namespace teven {

// Expansion of D^{m_1}F ... D^{m_n}F back into the basis {1, F, DF, ...}:
// the polynomials R_0..R_{|m|_n} and the even-power coefficient table a_{jl}.
struct ExpansionResult {
    std::vector<int> m_vec;
    int weight_norm = 0;                            // |m|_n = m_1+...+m_n+n
    std::vector<UniPoly> r_polys;                   // R_0 .. R_{|m|_n}
    std::map<std::pair<int, int>, Rational> a_table;  // (j, l) -> a_{jl}
    int t_bound = 0;                                // T

    // a_{jl}; zero outside the stored range.
    Rational a(int j, int l) const;
};

// F_i(x) = sum over (i_1..i_n) with i_1+...+i_n = i, 0 <= i_j <= m_j+1,
// of F_{m_1 i_1} ... F_{m_n i_n}.
UniPoly big_f(int i, const std::vector<int>& m_vec);

// Full expansion for the given exponent vector; cached per exact vector.
const ExpansionResult& expand(const std::vector<int>& m_vec);

// Sharpened degree bound on R_1 when n is even or some m_i != 0; returns
// true when the bound holds or its hypothesis does not apply.
bool r1_degree_check(const std::vector<int>& m_vec);

}  // namespace teven
