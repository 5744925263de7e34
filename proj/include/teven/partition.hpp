#pragma once

#include <vector>

#include "teven/formula.hpp"
#include "teven/multipoly.hpp"
#include "teven/unipoly.hpp"

namespace teven {

// Partition of {1..n} into nonempty blocks; elements stored 0-based, each
// block ascending, blocks ordered by smallest element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int size() const;  // n
    // c(P) = prod (|block| - 1)!
    Rational c() const;
    // (-1)^{n - #blocks} c(P)
    Rational c_signed() const;
};

// All partitions of {1..n} via restricted growth strings. Throws
// CapacityError when n exceeds cap (Bell numbers grow fast).
std::vector<SetPartition> enumerate_partitions(int n, int cap = 10);

// Number of set partitions of {1..n} whose block sizes are the given shape
// (a partition of n, sorted descending): n! / (prod l_j! * prod mult_s!).
Int shape_multiplicity(const std::vector<int>& shape);

// The polynomial g with g(s) = sum over compositions (k_1..k_l) of s into
// l = p_vec.size() positive parts of k_1^{p_1}...k_l^{p_l}, valid for s >= l;
// deg g = p_1+...+p_l + l - 1. Built by interpolation and rechecked against
// one extra directly computed sample.
UniPoly power_sum_poly(const std::vector<int>& p_vec);

// Weighted sum formulas for multiple t-values / multiple t-star values at
// even arguments, via the symmetric sum reduction to t-products. The weight
// must be symmetric of arity n; otherwise SymmetryError carries the first
// failing adjacent transposition.
Formula mtv_formula(const MultiPoly& f, int n, int cap = 10);
Formula mtv_star_formula(const MultiPoly& f, int n, int cap = 10);

// Dispatch over all four families.
Formula derive_formula(Family family, const MultiPoly& f, int n);

}  // namespace teven
