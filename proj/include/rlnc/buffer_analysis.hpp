#pragma once

#include "rlnc/combinatorics.hpp"
#include "rlnc/path_model.hpp"

#include <span>

namespace rlnc {

/// Receiver scheduler timing. The cycle must fit in one block time:
/// k * (tPoll + tForward) <= 1 tu, or construction throws.
struct SchedulerModel {
    int k = 1;
    double tPoll = 0.0;
    double tForward = 0.0;

    SchedulerModel(int laneCount, double pollTime, double forwardTime);

    /// Defaults tForward = 1/(k+1), tPoll = tForward/100, which satisfy the
    /// cycle constraint for any practical lane count.
    static SchedulerModel defaults(int laneCount);

    double cycleTime() const { return k * (tPoll + tForward); }

    /// Blocks forwarded per decoding interval (exact mathematical floor).
    long forwarded_per_interval(double tDelta) const;
};

/// Per-lane FIFO sizing for the uncoded multi-lane receiver: k lanes, each
/// provisioned for the worst lane, tau + 1 blocks.
long deskew_buffer(int tau, int k);

/// Decoding (VOQ) buffer for one concrete path set: k + sum of the delay
/// gaps between the k-th smallest member and each faster member. Delays
/// beyond the k smallest belong to redundant paths and never occupy the
/// queue.
long decoding_buffer(std::span<const int> sortedPathDelays, int k);

/// Expected decoding buffer over random (k+r)-subsets, via exact order
/// statistics: k + sum_m (E{d_(k)} - E{d_(m)}).
BigRat expected_decoding_buffer_exact(const DelayVector& d, int k, int r);
double expected_decoding_buffer(const DelayVector& d, int k, int r);

/// Equal-spacing approximation of the same quantity: k + tau_bar(r) * k/2.
double expected_decoding_buffer_approx(const DelayVector& d, int k, int r);

/// Expected deskew buffer over random k-subsets: k * (tau_bar + 1).
BigRat expected_deskew_buffer_exact(const DelayVector& d, int k);
double expected_deskew_buffer(const DelayVector& d, int k);

/// Topology-aware worst case: the k-th needed block always rides the path
/// with delay d_{N-r} while the k-1 fastest paths feed the queue.
long decoding_buffer_upper_topo(const DelayVector& d, int k, int r);

struct BufferBounds {
    long upper = 0;  // k + (k-1) * tau_up
    long lower = 0;  // k + tau_up
};

/// Absolute bounds as functions of the maximal differential delay. Equal at
/// k = 2.
BufferBounds decoding_buffer_bounds_absolute(int tauUp, int k);

/// Relative deskew-vs-decoding improvement tau_bar / (2 (tau_bar + 1));
/// grows with tau_bar and approaches 1/2.
double deskew_improvement_ratio(double tauBar);

/// Sizing summary for one concrete path set.
struct BufferReport {
    long deskewSize = 0;      // k * (tau + 1)
    long decodingSize = 0;    // steady VOQ occupancy
    long initialPhase = 0;    // blocks buffered before the first decode
    long steadyPerCycle = 0;  // blocks forwarded per cycle
    long upperBound = 0;
    long lowerBound = 0;
};

/// Assembles the report for a realized path set; the absolute bounds use
/// the set's own decode-relevant maximal differential delay, so
/// lowerBound <= decodingSize <= upperBound always holds.
BufferReport make_buffer_report(std::span<const int> sortedPathDelays, int k, const SchedulerModel& sched);

}  // namespace rlnc
