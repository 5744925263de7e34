#include "teven/expansion.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "teven/errors.hpp"
#include "teven/fg_table.hpp"

namespace teven {

namespace {

void validate(const std::vector<int>& m_vec) {
    if (m_vec.empty()) throw ArgumentError("expand: empty exponent vector");
    for (int m : m_vec)
        if (m < 0) throw ArgumentError("expand: negative exponent");
}

int weight_norm_of(const std::vector<int>& m_vec) {
    return std::accumulate(m_vec.begin(), m_vec.end(), 0) + static_cast<int>(m_vec.size());
}

// All F_i at once: iterate the bounded tuples (i_1..i_n) in mixed radix and
// accumulate the product into the slot for i_1+...+i_n.
std::vector<UniPoly> all_big_f(const std::vector<int>& m_vec) {
    const size_t n = m_vec.size();
    const int norm = weight_norm_of(m_vec);
    std::vector<UniPoly> acc(static_cast<size_t>(norm) + 1);

    std::vector<int> tuple(n, 0);
    while (true) {
        UniPoly prod = UniPoly::constant(Rational(1));
        int sum = 0;
        for (size_t j = 0; j < n; ++j) {
            prod = prod * fg_table().f_poly(m_vec[j], tuple[j]);
            sum += tuple[j];
        }
        acc[static_cast<size_t>(sum)] += prod;

        size_t pos = 0;
        while (pos < n && tuple[pos] == m_vec[pos] + 1) tuple[pos++] = 0;
        if (pos == n) break;
        ++tuple[pos];
    }
    return acc;
}

}  // namespace

Rational ExpansionResult::a(int j, int l) const {
    auto it = a_table.find({j, l});
    return it == a_table.end() ? Rational(0) : it->second;
}

UniPoly big_f(int i, const std::vector<int>& m_vec) {
    validate(m_vec);
    if (i < 0 || i > weight_norm_of(m_vec))
        throw ArgumentError("big_f: i out of range 0..|m|_n");
    return all_big_f(m_vec)[static_cast<size_t>(i)];
}

const ExpansionResult& expand(const std::vector<int>& m_vec) {
    validate(m_vec);

    static std::mutex mutex;
    static std::map<std::vector<int>, ExpansionResult> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(m_vec);
    if (it != cache.end()) return it->second;

    ExpansionResult res;
    res.m_vec = m_vec;
    res.weight_norm = weight_norm_of(m_vec);
    const int norm = res.weight_norm;
    const int n = static_cast<int>(m_vec.size());

    std::vector<UniPoly> f = all_big_f(m_vec);

    // R_0 = F_0 + (1/2) sum_{i>=1} F_i x^i
    UniPoly r0 = f[0];
    for (int i = 1; i <= norm; ++i)
        r0 += (f[static_cast<size_t>(i)] * UniPoly::monomial(i)).scaled(Rational(1, 2));
    res.r_polys.push_back(r0);

    // R_j = sum_{i=j}^{|m|_n} F_i G_{i-1,j}
    for (int j = 1; j <= norm; ++j) {
        UniPoly rj;
        for (int i = j; i <= norm; ++i)
            rj += f[static_cast<size_t>(i)] * fg_table().g_poly(i - 1, j);
        res.r_polys.push_back(rj);
    }

    // a_{jl} from even-power coefficients; everything outside the stored
    // range is provably zero and asserted so.
    for (int j = 1; j <= norm; ++j) {
        const UniPoly& rj = res.r_polys[static_cast<size_t>(j)];
        for (int p = 0; p <= rj.degree(); ++p) {
            if (rj.coeff(p).is_zero()) continue;
            if (p % 2 != 0)
                throw std::logic_error("expand: odd-power coefficient in R_j");
            int l = p / 2;
            if (l > (norm - j) / 2)
                throw std::logic_error("expand: a_{jl} outside the theorem range");
            res.a_table.emplace(std::make_pair(j, l), rj.coeff(p));
        }
    }

    bool all_zero = std::all_of(m_vec.begin(), m_vec.end(), [](int m) { return m == 0; });
    res.t_bound = all_zero ? (n - 1) / 2 : (norm - 2) / 2;

    return cache.emplace(m_vec, std::move(res)).first->second;
}

bool r1_degree_check(const std::vector<int>& m_vec) {
    validate(m_vec);
    const int n = static_cast<int>(m_vec.size());
    bool all_zero = std::all_of(m_vec.begin(), m_vec.end(), [](int m) { return m == 0; });
    if (n % 2 != 0 && all_zero) return true;  // hypothesis not met, nothing to check
    const ExpansionResult& e = expand(m_vec);
    return e.r_polys[1].degree() <= e.weight_norm - 2;
}

}  // namespace teven
