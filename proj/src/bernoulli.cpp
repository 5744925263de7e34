#include "teven/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace teven {

namespace {

std::mutex g_mutex;
std::vector<Rational> g_cache;  // g_cache[i] = B_i

// Defining recurrence: sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
void extend_locked(unsigned upto) {
    if (g_cache.empty()) g_cache.push_back(Rational(1));
    for (unsigned m = static_cast<unsigned>(g_cache.size()); m <= upto; ++m) {
        if (m % 2 == 1 && m >= 3) {
            g_cache.push_back(Rational(0));
            continue;
        }
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * g_cache[j];
        g_cache.push_back(-acc / Rational(Int(m) + 1));
    }
}

}  // namespace

Rational bernoulli(unsigned i) {
    std::lock_guard lock(g_mutex);
    if (i >= g_cache.size()) extend_locked(i);
    return g_cache[i];
}

Rational beta(unsigned i) {
    return Rational(int_pow(2, i) - 1) * bernoulli(i);
}

}  // namespace teven
