#include "rlnc/enumeration.hpp"

#include <stdexcept>

namespace rlnc::enumeration {

namespace {

void check(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

BigRat selection_probability(int N, int n, int l, int m) {
    check(n >= 1 && n <= N && m >= 1 && m <= n && l >= 1 && l <= N, "enumeration::selection_probability: bad arguments");
    BigInt hits = 0, total = 0;
    for_each_combination(N, n, [&](const std::vector<int>& idx) {
        ++total;
        if (idx[static_cast<std::size_t>(m - 1)] == l - 1) ++hits;
    });
    return BigRat(hits, total);
}

BigRat expected_mth_delay(const DelayVector& d, int n, int m) {
    check(n >= 1 && n <= d.size() && m >= 1 && m <= n, "enumeration::expected_mth_delay: bad arguments");
    BigInt sum = 0, total = 0;
    for_each_combination(d.size(), n, [&](const std::vector<int>& idx) {
        ++total;
        sum += d.at(idx[static_cast<std::size_t>(m - 1)]);
    });
    return BigRat(sum, total);
}

BigRat expected_diff_delay(const DelayVector& d, int n) {
    check(n >= 2 && n <= d.size(), "enumeration::expected_diff_delay: bad arguments");
    BigInt sum = 0, total = 0;
    for_each_combination(d.size(), n, [&](const std::vector<int>& idx) {
        ++total;
        sum += d.at(idx.back()) - d.at(idx.front());
    });
    return BigRat(sum, total);
}

BigRat expected_diff_delay_redundant(const DelayVector& d, int k, int r) {
    check(k >= 1 && r >= 0 && k + r <= d.size(), "enumeration::expected_diff_delay_redundant: bad arguments");
    BigInt sum = 0, total = 0;
    for_each_combination(d.size(), k + r, [&](const std::vector<int>& idx) {
        ++total;
        sum += d.at(idx[static_cast<std::size_t>(k - 1)]) - d.at(idx.front());
    });
    return BigRat(sum, total);
}

BigRat expected_diff_delay_lossy(const DelayVector& d, int k, int r) {
    check(k >= 1 && r >= 0 && k + r <= d.size(), "enumeration::expected_diff_delay_lossy: bad arguments");
    BigInt sum = 0, total = 0;
    for_each_combination(d.size(), k + r, [&](const std::vector<int>& idx) {
        ++total;
        sum += d.at(idx.back()) - d.at(idx.front());
    });
    return BigRat(sum, total);
}

BigRat p_up_value(const DelayVector& d, int n, int r) {
    check(n - r >= 2 && n <= d.size() && r >= 0, "enumeration::p_up_value: bad arguments");
    const int target = d.at(d.size() - r - 1) - d.at(0);
    BigInt hits = 0, total = 0;
    for_each_combination(d.size(), n, [&](const std::vector<int>& idx) {
        ++total;
        const int span = d.at(idx[static_cast<std::size_t>(n - r - 1)]) - d.at(idx.front());
        if (span == target) ++hits;
    });
    return BigRat(hits, total);
}

BigRat p_specific_extremes(int N, int n, int x, int y) {
    check(n >= 2 && n <= N && x >= 1 && y <= N && x < y, "enumeration::p_specific_extremes: bad arguments");
    BigInt hits = 0, total = 0;
    for_each_combination(N, n, [&](const std::vector<int>& idx) {
        ++total;
        if (idx.front() == x - 1 && idx.back() == y - 1) ++hits;
    });
    return BigRat(hits, total);
}

BigRat expected_decoding_buffer(const DelayVector& d, int k, int r) {
    check(k >= 1 && r >= 0 && k + r <= d.size(), "enumeration::expected_decoding_buffer: bad arguments");
    BigInt sum = 0, total = 0;
    for_each_combination(d.size(), k + r, [&](const std::vector<int>& idx) {
        ++total;
        const int dk = d.at(idx[static_cast<std::size_t>(k - 1)]);
        BigInt occ = k;
        for (int m = 0; m < k; ++m) occ += dk - d.at(idx[static_cast<std::size_t>(m)]);
        sum += occ;
    });
    return BigRat(sum, total);
}

}  // namespace rlnc::enumeration
