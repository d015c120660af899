#pragma once

#include "rlnc/combinatorics.hpp"
#include "rlnc/path_model.hpp"

namespace rlnc::enumeration {

// Brute-force counterparts of the closed-form delay and buffer statistics,
// evaluated by visiting every C(N, n) subset with exact rational
// arithmetic. Deliberately written as direct definitions (count, sum,
// divide) with no shared code paths into the closed forms they check.

/// Frequency with which position l (1-based) is the m-th smallest member.
BigRat selection_probability(int N, int n, int l, int m);

/// Mean delay of the m-th smallest member over all n-subsets.
BigRat expected_mth_delay(const DelayVector& d, int n, int m);

/// Mean subset span (max - min) over all n-subsets.
BigRat expected_diff_delay(const DelayVector& d, int n);

/// Mean of d_(k) - d_(1) over all (k+r)-subsets.
BigRat expected_diff_delay_redundant(const DelayVector& d, int k, int r);

/// Mean of d_(k+r) - d_(1) over all (k+r)-subsets.
BigRat expected_diff_delay_lossy(const DelayVector& d, int k, int r);

/// Fraction of n-subsets whose decode-relevant span d_(n-r) - d_(1) equals
/// the maximal differential delay d_{N-r} - d_1 (comparison by value).
BigRat p_up_value(const DelayVector& d, int n, int r);

/// Fraction of n-subsets whose minimum sits at position x and maximum at
/// position y (1-based positions into the vector).
BigRat p_specific_extremes(int N, int n, int x, int y);

/// Mean decoding-buffer occupancy k + sum_m (d_(k) - d_(m)) over all
/// (k+r)-subsets.
BigRat expected_decoding_buffer(const DelayVector& d, int k, int r);

}  // namespace rlnc::enumeration
