#pragma once

#include <vector>

namespace aphid {

/// Sequence-level count estimate: the softmax-weighted combination of the
/// per-frame counts, before and after rounding, plus the weights used.
struct CountEstimate {
    double value_real = 0.0;               ///< convex combination of the counts
    int value_int = 0;                      ///< round-half-up of value_real
    std::vector<double> per_frame_weights;  ///< softmax of the confidences, sums to 1
};

/// Weighted final count: weights are softmax(confidences / temperature)
/// (max-subtracted for stability), applied to the raw per-frame counts.
///
/// Throws std::invalid_argument on empty or mismatched inputs or
/// temperature <= 0.
CountEstimate fuse_counts(const std::vector<double>& confidences,
                          const std::vector<double>& counts,
                          double temperature = 1.0);

/// The pre-stirring baseline: the first frame's count.
int static_count(const std::vector<int>& seq_counts);

/// The naive stirring baseline: the largest per-frame count.
int max_count(const std::vector<int>& seq_counts);

} // namespace aphid
