#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aphidcount/confidence_model.hpp"
#include "aphidcount/detection.hpp"
#include "aphidcount/image.hpp"
#include "aphidcount/manifest.hpp"

namespace aphid {

/// A fully loaded sequence: images, detections in pixel coordinates, and
/// ground truth when every frame of the manifest carried one.
struct SequenceData {
    std::vector<GrayImage> images;
    std::vector<std::vector<Detection>> detections;
    std::optional<std::vector<std::vector<BoundingBox>>> ground_truth;

    std::size_t frames() const { return images.size(); }
};

/// Loads every frame referenced by a resolved manifest (as returned by
/// load_manifest). Ground truth is kept only when all frames have it.
SequenceData load_sequence(const SequenceManifest& manifest);

/// Per-frame measurements plus labels. Detections at or above
/// confidence_threshold form the counted set; those are also the ones matched
/// against ground truth for the per-frame label, so the label grades exactly
/// the count that fusion will consume. Mean confidence uses all detections.
SequenceFeatures measure_sequence(const SequenceData& data, double confidence_threshold,
                                  double iou_threshold);

/// measure_sequence plus per-sequence min-max normalization of each factor.
struct FeatureTable {
    std::vector<double> c, n, g;                ///< raw per-frame values
    std::vector<double> c_norm, n_norm, g_norm; ///< min-max normalized per sequence
    std::optional<std::vector<double>> r_label; ///< present when ground truth exists
    std::optional<std::vector<double>> r_pred;  ///< present when a model was supplied

    std::size_t frames() const { return c.size(); }
};

FeatureTable build_feature_table(const SequenceData& data, double confidence_threshold,
                                 double iou_threshold, const ConfidenceModel* model = nullptr);

/// CSV of the table. Header is always
/// "t,C,N,G,C_norm,N_norm,G_norm" plus ",R_label" and/or ",R_pred" when those
/// columns exist; one row per frame, t counting from 0, values with 6
/// decimals except N which is an integer count.
std::string feature_csv(const FeatureTable& table);

/// The three Table-style estimates for one sequence: counts are the
/// thresholded per-frame detection counts, fusion weights come from the
/// model's per-frame predictions on normalized features.
struct CountReport {
    int static_count = 0;
    int max_count = 0;
    double fused_real = 0.0;
    int fused_int = 0;
    std::vector<double> per_frame_r; ///< predicted counting confidence per frame
};

CountReport count_sequence(const SequenceData& data, const ConfidenceModel& model,
                           double confidence_threshold);

} // namespace aphid
