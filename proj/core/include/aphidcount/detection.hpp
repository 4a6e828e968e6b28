#pragma once

#include <vector>

namespace aphid {

/// Axis-aligned box in absolute pixel coordinates, y down. Corner form is
/// used everywhere internally; the normalized center form of the annotation
/// files exists only at the I/O boundary.
struct BoundingBox {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }

    bool operator==(const BoundingBox&) const = default;
};

struct Detection {
    BoundingBox box;
    double confidence = 0.0; ///< in [0, 1]
    int class_id = 0;        ///< 0 = aphid

    bool operator==(const Detection&) const = default;
};

/// Intersection over union. Two degenerate boxes (union area 0) give 0.
double iou(const BoundingBox& a, const BoundingBox& b);

/// Greedy hard NMS: repeatedly keep the highest-confidence detection and drop
/// every remaining one whose IoU with it exceeds iou_threshold. Confidence
/// ties break toward the lower input index. Result is sorted by confidence
/// descending.
std::vector<Detection> nms(const std::vector<Detection>& dets, double iou_threshold);

enum class SoftNmsMethod { Linear, Gaussian };

/// Soft-NMS: instead of dropping overlapping boxes, decay their scores.
/// Gaussian rescales every remaining box by exp(-iou^2 / sigma); linear
/// rescales by (1 - iou) only when iou > iou_threshold. Boxes whose decayed
/// score falls below score_threshold are discarded. Output is sorted by
/// final confidence descending, ties toward lower input index.
///
/// Throws std::invalid_argument when sigma <= 0.
std::vector<Detection> soft_nms(const std::vector<Detection>& dets,
                                SoftNmsMethod method,
                                double sigma = 0.5,
                                double iou_threshold = 0.5,
                                double score_threshold = 0.001);

/// Mean confidence over all boxes; 0.0 for an empty list.
double mean_box_confidence(const std::vector<Detection>& dets);

/// Number of detections with confidence >= threshold.
int count_detections(const std::vector<Detection>& dets, double confidence_threshold);

/// Which duplicate-suppression pass to run and with what knobs. Shared by the
/// tile merger and the CLI.
struct SuppressionConfig {
    enum class Kind { HardNms, SoftNmsLinear, SoftNmsGaussian };
    Kind kind = Kind::HardNms;
    double iou_threshold = 0.5;
    double sigma = 0.5;
    double score_threshold = 0.001;
};

std::vector<Detection> suppress(const std::vector<Detection>& dets, const SuppressionConfig& config);

} // namespace aphid
