#include "rlnc/delay_analysis.hpp"

#include "rlnc/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rlnc {

namespace {

void check_subset_args(int N, int n, const char* who) {
    if (n < 1 || n > N) throw std::invalid_argument(std::string(who) + ": need 1 <= n <= N");
}

}  // namespace

BigRat selection_probability_exact(int N, int n, int l, int m) {
    check_subset_args(N, n, "selection_probability");
    if (m < 1 || m > n) throw std::invalid_argument("selection_probability: need 1 <= m <= n");
    if (l < 1 || l > N) throw std::invalid_argument("selection_probability: need 1 <= l <= N");
    if (l < m || l > N - n + m) return BigRat(0);
    return BigRat(binomial(l - 1, m - 1) * binomial(N - l, n - m), binomial(N, n));
}

double selection_probability(int N, int n, int l, int m) {
    return to_double(selection_probability_exact(N, n, l, m));
}

BigRat expected_mth_delay_exact(const DelayVector& d, int n, int m) {
    const int N = d.size();
    check_subset_args(N, n, "expected_mth_delay");
    if (m < 1 || m > n) throw std::invalid_argument("expected_mth_delay: need 1 <= m <= n");
    BigInt acc = 0;
    for (int l = m; l <= N - n + m; ++l)
        acc += BigInt(d.at(l - 1)) * binomial(l - 1, m - 1) * binomial(N - l, n - m);
    return BigRat(acc, binomial(N, n));
}

double expected_mth_delay(const DelayVector& d, int n, int m) {
    return to_double(expected_mth_delay_exact(d, n, m));
}

BigRat expected_diff_delay_exact(const DelayVector& d, int n) {
    const int N = d.size();
    if (n < 2 || n > N) throw std::invalid_argument("expected_diff_delay: need 2 <= n <= N");
    BigInt acc = 0;
    for (int i = 0; i <= N - n; ++i)
        acc += BigInt(d.at(N - i - 1) - d.at(i)) * binomial(N - i - 1, n - 1);
    return BigRat(acc, binomial(N, n));
}

double expected_diff_delay(const DelayVector& d, int n) {
    return to_double(expected_diff_delay_exact(d, n));
}

int tau_up(const DelayVector& d, int r) {
    if (r < 0) throw std::invalid_argument("tau_up: r must be >= 0");
    if (d.size() - r < 1) throw std::invalid_argument("tau_up: need N - r >= 1");
    return d.at(d.size() - r - 1) - d.at(0);
}

BigRat p_up_exact(const DelayVector& d, int n, int r) {
    const int N = d.size();
    if (r < 0) throw std::invalid_argument("p_up: r must be >= 0");
    if (n - r < 2) throw std::invalid_argument("p_up: need n - r >= 2");
    if (n > N) throw std::invalid_argument("p_up: need n <= N");

    const int dMinCount = d.countMin();
    const int dMaxCount = d.countMax();
    // The span-defining path is mapped to one position j among the paths of
    // maximal relevant delay, the shortest to one of the D_min positions,
    // the r redundant paths above j, the remaining n-r-2 between them.
    BigInt count = 0;
    const int jLow = std::max(N - std::max(r, dMaxCount - 1), n - r);
    for (int j = jLow; j <= N - r; ++j) {
        const int iHigh = std::min(dMinCount, j - n + r + 1);
        for (int i = 1; i <= iHigh; ++i)
            count += binomial(N - j, r) * binomial(j - i - 1, n - r - 2);
    }
    return BigRat(count, binomial(N, n));
}

double p_up(const DelayVector& d, int n, int r) { return to_double(p_up_exact(d, n, r)); }

BigRat p_specific_extremes_exact(int N, int n, int x, int y) {
    check_subset_args(N, n, "p_specific_extremes");
    if (!(x >= 1 && y <= N && x < y)) throw std::invalid_argument("p_specific_extremes: need 1 <= x < y <= N");
    if (y - x - 1 < n - 2) throw std::invalid_argument("p_specific_extremes: need y - x - 1 >= n - 2");
    return BigRat(binomial(y - x - 1, n - 2), binomial(N, n));
}

double p_specific_extremes(int N, int n, int x, int y) {
    return to_double(p_specific_extremes_exact(N, n, x, y));
}

BigRat expected_diff_delay_redundant_exact(const DelayVector& d, int k, int r) {
    const int N = d.size();
    if (k < 2) throw std::invalid_argument("expected_diff_delay_redundant: k must be >= 2");
    if (r < 0) throw std::invalid_argument("expected_diff_delay_redundant: r must be >= 0");
    if (k + r > N) throw std::invalid_argument("expected_diff_delay_redundant: need k + r <= N");
    const int n = k + r;
    return expected_mth_delay_exact(d, n, n - r) - expected_mth_delay_exact(d, n, 1);
}

double expected_diff_delay_redundant(const DelayVector& d, int k, int r) {
    return to_double(expected_diff_delay_redundant_exact(d, k, r));
}

BigRat expected_diff_delay_lossy_exact(const DelayVector& d, int k, int r) {
    const int N = d.size();
    if (k < 2) throw std::invalid_argument("expected_diff_delay_lossy: k must be >= 2");
    if (r < 0) throw std::invalid_argument("expected_diff_delay_lossy: r must be >= 0");
    if (k + r > N) throw std::invalid_argument("expected_diff_delay_lossy: need k + r <= N");
    const int n = k + r;
    return expected_mth_delay_exact(d, n, n) - expected_mth_delay_exact(d, n, 1);
}

double expected_diff_delay_lossy(const DelayVector& d, int k, int r) {
    return to_double(expected_diff_delay_lossy_exact(d, k, r));
}

ReductionMetrics reduction_metrics(const DelayVector& d, int k, int r) {
    const int N = d.size();
    if (k < 2) throw std::invalid_argument("reduction_metrics: k must be >= 2");
    if (r < 0) throw std::invalid_argument("reduction_metrics: r must be >= 0");
    if (k + r > N) throw std::invalid_argument("reduction_metrics: need k + r <= N");

    const BigRat base = expected_diff_delay_exact(d, k);
    if (base == 0) throw DegenerateBaseline("reduction_metrics: zero baseline differential delay");

    ReductionMetrics out;
    out.deltaMax = static_cast<double>(d.dMax() - d.at(N - r - 1)) / static_cast<double>(d.dMax());
    out.deltaTau = to_double((base - expected_diff_delay_redundant_exact(d, k, r)) / base);
    out.overhead = static_cast<double>(r) / static_cast<double>(k);
    return out;
}

}  // namespace rlnc
