#pragma once

#include <vector>

#include "aphidcount/detection.hpp"

namespace aphid {

/// One-to-one detection/ground-truth assignment plus the TP/FP/FN tally.
/// tp == pairs.size(), tp + fp == number of detections, tp + fn == number of
/// ground truths.
struct MatchResult {
    int tp = 0;
    int fp = 0;
    int fn = 0;

    struct Pair {
        int detection_index;
        int ground_truth_index;
        double iou;
    };
    std::vector<Pair> pairs;
};

/// Greedy matching: detections in descending confidence (ties by input
/// index) each claim the unmatched ground truth with the highest IoU, when
/// that IoU reaches iou_threshold. IoU ties go to the lower ground-truth
/// index.
MatchResult match_detections(const std::vector<Detection>& dets,
                             const std::vector<BoundingBox>& gts,
                             double iou_threshold = 0.5);

/// tp / (tp + fp + fn). An empty scene (all three zero) counts as perfect
/// agreement and returns 1.
double counting_confidence(const MatchResult& match);

struct ImageDetection {
    int image_id = 0;
    Detection det;
};

struct ImageGroundTruth {
    int image_id = 0;
    BoundingBox box;
};

/// Average precision with 101-point interpolation: detections ranked by
/// confidence descending (ties by image id, then input index), TP/FP flags
/// from per-image greedy matching, precision sampled on the recall grid
/// 0, 0.01, ..., 1.0 as the max precision at or beyond each recall.
///
/// Throws std::invalid_argument when there are no ground truths.
double average_precision(const std::vector<ImageDetection>& dets,
                         const std::vector<ImageGroundTruth>& gts,
                         double iou_threshold);

/// Mean of average_precision over IoU thresholds 0.50, 0.55, ..., 0.95.
double average_precision_range(const std::vector<ImageDetection>& dets,
                               const std::vector<ImageGroundTruth>& gts);

} // namespace aphid
