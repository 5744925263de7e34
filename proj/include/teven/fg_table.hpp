#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "teven/unipoly.hpp"

namespace teven {

using PolyMatrix = std::vector<std::vector<UniPoly>>;

// Memoized tables of the polynomial families F_{mi}(x) and G_{mi}(x):
// F expresses D^m F(x) in powers of H(x); G gives the rows of the inverse of
// the lower-triangular matrix built from F. Reads of populated entries are
// safe concurrently; population is serialized by an internal mutex.
class FGTable {
public:
    explicit FGTable(int max_m = 64);

    // F_{mi}(x), defined for 0 <= i <= m+1.
    UniPoly f_poly(int m, int i) const;
    // G_{mi}(x), defined for 1 <= i <= m+1.
    UniPoly g_poly(int m, int i) const;

    // Coefficient of x^{m+1-i} in F_{mi} (its leading coefficient), via the
    // scalar recurrence. c_lead(m, 0) = 1/2 by convention.
    Rational c_lead(int m, int i) const;
    // Coefficient of x^{m+1-i} in G_{mi}, via the scalar recurrence.
    Rational d_lead(int m, int i) const;

    // Lower-triangular (m+1)x(m+1) matrix with row r = (F_{r1},...,F_{r,r+1}),
    // and its inverse assembled from the G table.
    PolyMatrix a_matrix(int m) const;
    PolyMatrix a_matrix_inverse(int m) const;

    int max_m() const { return max_m_; }

private:
    void check_m(int m) const;
    UniPoly f_locked(int m, int i) const;
    UniPoly g_locked(int m, int i) const;
    Rational c_locked(int m, int i) const;
    Rational d_locked(int m, int i) const;

    int max_m_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, UniPoly> f_cache_;
    mutable std::map<std::pair<int, int>, UniPoly> g_cache_;
    mutable std::map<std::pair<int, int>, Rational> c_cache_;
    mutable std::map<std::pair<int, int>, Rational> d_cache_;
};

// Process-wide shared table.
FGTable& fg_table();

}  // namespace teven
