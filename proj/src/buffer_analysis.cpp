#include "rlnc/buffer_analysis.hpp"

#include "rlnc/delay_analysis.hpp"
#include "rlnc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rlnc {

SchedulerModel::SchedulerModel(int laneCount, double pollTime, double forwardTime)
    : k(laneCount), tPoll(pollTime), tForward(forwardTime) {
    if (k < 1) throw std::invalid_argument("SchedulerModel: lane count must be >= 1");
    if (tPoll < 0.0 || tForward <= 0.0) throw std::invalid_argument("SchedulerModel: nonpositive times");
    if (cycleTime() > 1.0)
        throw std::invalid_argument("SchedulerModel: cycle k * (tPoll + tForward) exceeds 1 tu");
}

SchedulerModel SchedulerModel::defaults(int laneCount) {
    const double tf = 1.0 / (laneCount + 1);
    return SchedulerModel(laneCount, tf / 100.0, tf);
}

long SchedulerModel::forwarded_per_interval(double tDelta) const {
    if (tDelta < 0.0) throw std::invalid_argument("forwarded_per_interval: negative interval");
    return static_cast<long>(std::floor(tDelta / (tPoll + tForward)));
}

long deskew_buffer(int tau, int k) {
    if (tau < 0) throw std::invalid_argument("deskew_buffer: tau must be >= 0");
    if (k < 1) throw std::invalid_argument("deskew_buffer: k must be >= 1");
    return static_cast<long>(k) * (static_cast<long>(tau) + 1);
}

long decoding_buffer(std::span<const int> sortedPathDelays, int k) {
    if (k < 1) throw std::invalid_argument("decoding_buffer: k must be >= 1");
    if (static_cast<int>(sortedPathDelays.size()) < k)
        throw std::invalid_argument("decoding_buffer: need at least k delays");
    if (!std::is_sorted(sortedPathDelays.begin(), sortedPathDelays.end()))
        throw std::invalid_argument("decoding_buffer: delays must be sorted ascending");
    const long dk = sortedPathDelays[static_cast<std::size_t>(k - 1)];
    long occ = k;
    for (int m = 0; m < k; ++m) occ += dk - sortedPathDelays[static_cast<std::size_t>(m)];
    return occ;
}

BigRat expected_decoding_buffer_exact(const DelayVector& d, int k, int r) {
    if (k < 1) throw std::invalid_argument("expected_decoding_buffer: k must be >= 1");
    if (r < 0 || k + r > d.size()) throw std::invalid_argument("expected_decoding_buffer: need k + r <= N");
    const int n = k + r;
    BigRat acc = k;
    const BigRat ek = expected_mth_delay_exact(d, n, k);
    for (int m = 1; m <= k; ++m) acc += ek - expected_mth_delay_exact(d, n, m);
    return acc;
}

double expected_decoding_buffer(const DelayVector& d, int k, int r) {
    return to_double(expected_decoding_buffer_exact(d, k, r));
}

double expected_decoding_buffer_approx(const DelayVector& d, int k, int r) {
    if (k < 2) throw std::invalid_argument("expected_decoding_buffer_approx: k must be >= 2");
    const double tauBarR = expected_diff_delay_redundant(d, k, r);
    return k + tauBarR * k / 2.0;
}

BigRat expected_deskew_buffer_exact(const DelayVector& d, int k) {
    if (k < 2 || k > d.size()) throw std::invalid_argument("expected_deskew_buffer: need 2 <= k <= N");
    return BigRat(k) * (expected_diff_delay_exact(d, k) + 1);
}

double expected_deskew_buffer(const DelayVector& d, int k) {
    return to_double(expected_deskew_buffer_exact(d, k));
}

long decoding_buffer_upper_topo(const DelayVector& d, int k, int r) {
    if (k < 1) throw std::invalid_argument("decoding_buffer_upper_topo: k must be >= 1");
    if (r < 0 || k + r > d.size()) throw std::invalid_argument("decoding_buffer_upper_topo: need k + r <= N");
    const long worst = d.at(d.size() - r - 1);
    long occ = k;
    for (int m = 0; m < k - 1; ++m) occ += worst - d.at(m);
    return occ;
}

BufferBounds decoding_buffer_bounds_absolute(int tauUp, int k) {
    if (k < 2) throw std::invalid_argument("decoding_buffer_bounds_absolute: k must be >= 2");
    if (tauUp < 0) throw std::invalid_argument("decoding_buffer_bounds_absolute: tauUp must be >= 0");
    BufferBounds b;
    b.upper = static_cast<long>(k) + static_cast<long>(k - 1) * tauUp;
    b.lower = static_cast<long>(k) + tauUp;
    return b;
}

double deskew_improvement_ratio(double tauBar) {
    if (tauBar < 0.0) throw std::invalid_argument("deskew_improvement_ratio: tauBar must be >= 0");
    return tauBar / (2.0 * (tauBar + 1.0));
}

BufferReport make_buffer_report(std::span<const int> sortedPathDelays, int k, const SchedulerModel& sched) {
    if (sched.k != k) throw std::invalid_argument("make_buffer_report: scheduler lane count mismatch");
    BufferReport rep;
    const int n = static_cast<int>(sortedPathDelays.size());
    const int r = n - k;
    if (r < 0) throw std::invalid_argument("make_buffer_report: need at least k delays");

    const int dk = sortedPathDelays[static_cast<std::size_t>(k - 1)];
    const int tau = dk - sortedPathDelays[0];
    long ini = 0;
    for (int m = 0; m < k; ++m) ini += dk - sortedPathDelays[static_cast<std::size_t>(m)];

    rep.deskewSize = deskew_buffer(tau, k);
    rep.initialPhase = ini;
    rep.steadyPerCycle = sched.forwarded_per_interval(sched.cycleTime());
    rep.decodingSize = decoding_buffer(sortedPathDelays, k);
    if (k >= 2) {
        // Bounds against the set's own decode-relevant maximal delay span.
        const BufferBounds b = decoding_buffer_bounds_absolute(tau, k);
        rep.upperBound = b.upper;
        rep.lowerBound = b.lower;
    } else {
        rep.upperBound = rep.lowerBound = rep.decodingSize;  // single lane: queue is trivial
    }
    return rep;
}

}  // namespace rlnc
