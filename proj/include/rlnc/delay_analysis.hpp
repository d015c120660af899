#pragma once

#include "rlnc/combinatorics.hpp"
#include "rlnc/path_model.hpp"

namespace rlnc {

// Order statistics of uniformly random n-subsets of an ascending delay
// vector, and the differential-delay quantities built on them. Every
// probability and expectation is computed with exact integer binomials and
// turned into a double only on return; the *_exact variants expose the
// rational values for equality-based oracle tests.

/// Probability that the path at 1-based position l of the vector is the
/// m-th smallest of a uniformly random n-subset:
///   C(l-1, m-1) * C(N-l, n-m) / C(N, n),
/// zero outside the support m <= l <= N-n+m.
BigRat selection_probability_exact(int N, int n, int l, int m);
double selection_probability(int N, int n, int l, int m);

/// Expected delay of the m-th smallest member of a random n-subset.
BigRat expected_mth_delay_exact(const DelayVector& d, int n, int m);
double expected_mth_delay(const DelayVector& d, int n, int m);

/// Expected span (max - min) of a random n-subset; equals
/// expected_mth_delay(d, n, n) - expected_mth_delay(d, n, 1).
BigRat expected_diff_delay_exact(const DelayVector& d, int n);
double expected_diff_delay(const DelayVector& d, int n);

/// Maximal differential delay that still matters with r redundant paths:
/// d_{N-r} - d_1.
int tau_up(const DelayVector& d, int r);

/// Occurrence probability of tau_up(d, r) over uniform n-subsets, honoring
/// the multiplicities of the extreme delay values. Assumes the maximal
/// relevant delay value occurs only inside its extreme tie group (true for
/// vectors whose interior values are distinct from it).
BigRat p_up_exact(const DelayVector& d, int n, int r);
double p_up(const DelayVector& d, int n, int r);

/// Probability that the paths at positions x and y (1-based, x < y) are the
/// shortest and longest members of a random n-subset: C(y-x-1, n-2)/C(N, n).
BigRat p_specific_extremes_exact(int N, int n, int x, int y);
double p_specific_extremes(int N, int n, int x, int y);

/// Expected differential delay relevant to decoding with redundancy r:
/// E{d_(k)} - E{d_(1)} over random (k+r)-subsets. Reduces to
/// expected_diff_delay(d, k) at r = 0.
BigRat expected_diff_delay_redundant_exact(const DelayVector& d, int k, int r);
double expected_diff_delay_redundant(const DelayVector& d, int k, int r);

/// Worst-case variant under packet loss: the full subset span
/// E{d_(k+r)} - E{d_(1)} matters because losses may hit the fastest paths.
BigRat expected_diff_delay_lossy_exact(const DelayVector& d, int k, int r);
double expected_diff_delay_lossy(const DelayVector& d, int k, int r);

struct ReductionMetrics {
    double deltaMax = 0.0;  // (d_N - d_{N-r}) / d_N
    double deltaTau = 0.0;  // (tau_bar - tau_bar(r)) / tau_bar
    double overhead = 0.0;  // r / k
};

/// Relative reductions bought by r redundant paths, plus their capacity
/// overhead. Throws DegenerateBaseline when the r = 0 expected differential
/// delay is zero (relative reduction undefined).
ReductionMetrics reduction_metrics(const DelayVector& d, int k, int r);

}  // namespace rlnc
