#include "teven/fg_table.hpp"

#include "teven/errors.hpp"

namespace teven {

FGTable::FGTable(int max_m) : max_m_(max_m) {}

void FGTable::check_m(int m) const {
    if (m < 0) throw ArgumentError("FGTable: negative m");
    if (m > max_m_)
        throw CapacityError("FGTable: m exceeds the configured cap of " + std::to_string(max_m_));
}

UniPoly FGTable::f_poly(int m, int i) const {
    check_m(m);
    if (i < 0 || i > m + 1) throw ArgumentError("f_poly: i out of range 0..m+1");
    std::lock_guard lock(mutex_);
    return f_locked(m, i);
}

UniPoly FGTable::f_locked(int m, int i) const {
    auto it = f_cache_.find({m, i});
    if (it != f_cache_.end()) return it->second;

    UniPoly r;
    if (m == 0) {
        r = (i == 0) ? UniPoly::monomial(1, Rational(1, 2)) : UniPoly::constant(Rational(-1));
    } else if (i == 0) {
        r = (f_locked(m - 1, 0).derivative() * UniPoly::variable());
    } else if (i == m + 1) {
        r = f_locked(m - 1, m).scaled(Rational(m));
    } else {
        // F_{mi} = x F'_{m-1,i} + i (1-x) F_{m-1,i} + (i-1) F_{m-1,i-1}
        UniPoly prev = f_locked(m - 1, i);
        r = prev.derivative() * UniPoly::variable();
        r += (prev * UniPoly(std::vector<Rational>{Rational(1), Rational(-1)})).scaled(Rational(i));
        if (i >= 1) r += f_locked(m - 1, i - 1).scaled(Rational(i - 1));
    }
    f_cache_.emplace(std::make_pair(m, i), r);
    return r;
}

UniPoly FGTable::g_poly(int m, int i) const {
    check_m(m);
    if (i < 1 || i > m + 1) throw ArgumentError("g_poly: i out of range 1..m+1");
    std::lock_guard lock(mutex_);
    return g_locked(m, i);
}

UniPoly FGTable::g_locked(int m, int i) const {
    auto it = g_cache_.find({m, i});
    if (it != g_cache_.end()) return it->second;

    UniPoly r;
    if (i == m + 1) {
        r = UniPoly::constant(Rational(Int(-1), factorial(static_cast<unsigned long>(m))));
    } else {
        // G_{mi} = (1/m!) sum_{j=i}^{m} F_{mj} G_{j-1,i}
        UniPoly acc;
        for (int j = i; j <= m; ++j) acc += f_locked(m, j) * g_locked(j - 1, i);
        r = acc.scaled(Rational(Int(1), factorial(static_cast<unsigned long>(m))));
    }
    g_cache_.emplace(std::make_pair(m, i), r);
    return r;
}

Rational FGTable::c_lead(int m, int i) const {
    check_m(m);
    if (i < 0 || i > m + 1) throw ArgumentError("c_lead: i out of range 0..m+1");
    std::lock_guard lock(mutex_);
    return c_locked(m, i);
}

Rational FGTable::c_locked(int m, int i) const {
    if (i == 0) return Rational(1, 2);
    auto it = c_cache_.find({m, i});
    if (it != c_cache_.end()) return it->second;

    Rational r(0);
    if (i == m + 1) {
        r = Rational(-factorial(static_cast<unsigned long>(m)));
    } else {
        // c_{mi} = -i c_{m-1,i} + (i-1) c_{m-1,i-1}
        r = c_locked(m - 1, i) * Rational(-i);
        if (i >= 2) r += c_locked(m - 1, i - 1) * Rational(i - 1);
    }
    c_cache_.emplace(std::make_pair(m, i), r);
    return r;
}

Rational FGTable::d_lead(int m, int i) const {
    check_m(m);
    if (i < 1 || i > m + 1) throw ArgumentError("d_lead: i out of range 1..m+1");
    std::lock_guard lock(mutex_);
    return d_locked(m, i);
}

Rational FGTable::d_locked(int m, int i) const {
    auto it = d_cache_.find({m, i});
    if (it != d_cache_.end()) return it->second;

    Rational r(0);
    if (i == m + 1) {
        r = Rational(Int(-1), factorial(static_cast<unsigned long>(m)));
    } else {
        // d_{mi} = (1/m!) sum_{j=i}^{m} c_{mj} d_{j-1,i}
        for (int j = i; j <= m; ++j) r += c_locked(m, j) * d_locked(j - 1, i);
        r /= Rational(factorial(static_cast<unsigned long>(m)));
    }
    d_cache_.emplace(std::make_pair(m, i), r);
    return r;
}

PolyMatrix FGTable::a_matrix(int m) const {
    check_m(m);
    PolyMatrix rows;
    for (int r = 0; r <= m; ++r) {
        std::vector<UniPoly> row;
        for (int c = 0; c <= m; ++c)
            row.push_back(c <= r ? f_poly(r, c + 1) : UniPoly());
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMatrix FGTable::a_matrix_inverse(int m) const {
    check_m(m);
    PolyMatrix rows;
    for (int r = 0; r <= m; ++r) {
        std::vector<UniPoly> row;
        for (int c = 0; c <= m; ++c)
            row.push_back(c <= r ? g_poly(r, c + 1) : UniPoly());
        rows.push_back(std::move(row));
    }
    return rows;
}

FGTable& fg_table() {
    static FGTable table;
    return table;
}

}  // namespace teven
