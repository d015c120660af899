#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rlnc {

// Exact integer/rational types for combinatorial formulas. Binomial
// coefficients at the scales handled here overflow 64-bit, so every
// probability is formed as a ratio of exact integers and converted to
// double only at the very end.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// C(n, k) with the convention C(n, k) = 0 for k > n or k < 0.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }

/// 1-based lexicographic rank of a sorted index combination among all
/// C(N, n) combinations; saturates to uint64 max if it does not fit.
inline std::uint64_t combination_rank(const std::vector<int>& sortedIdx0, int N) {
    const int n = static_cast<int>(sortedIdx0.size());
    BigInt rank = 0;
    int prev = -1;
    for (int m = 0; m < n; ++m) {
        for (int v = prev + 1; v < sortedIdx0[m]; ++v)
            rank += binomial(N - 1 - v, n - 1 - m);
        prev = sortedIdx0[m];
    }
    rank += 1;
    if (rank > BigInt(UINT64_MAX)) return UINT64_MAX;
    return rank.convert_to<std::uint64_t>();
}

/// Calls fn(idx) for every n-combination of {0, ..., N-1} in lexicographic
/// order; idx is sorted ascending. Used by the enumeration oracles.
template <typename Fn>
void for_each_combination(int N, int n, Fn&& fn) {
    if (n < 0 || n > N) return;
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(static_cast<const std::vector<int>&>(idx));
        int i = n - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == N - n + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace rlnc
