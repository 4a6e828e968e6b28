#include "aphidcount/sequence_pipeline.hpp"

#include <cstdio>
#include <utility>

#include "aphidcount/annotation_io.hpp"
#include "aphidcount/evaluation.hpp"
#include "aphidcount/fusion.hpp"
#include "aphidcount/pnm.hpp"

namespace aphid {

SequenceData load_sequence(const SequenceManifest& manifest) {
    SequenceData data;
    const bool with_gt = manifest.has_ground_truth();
    if (with_gt) data.ground_truth.emplace();
    for (const auto& entry : manifest.entries) {
        GrayImage image = load_pnm(entry.image_path);
        data.detections.push_back(
            load_detections(entry.detections_path, image.width, image.height));
        if (with_gt)
            data.ground_truth->push_back(
                load_ground_truth(*entry.gt_path, image.width, image.height));
        data.images.push_back(std::move(image));
    }
    return data;
}

namespace {

std::vector<Detection> above_threshold(const std::vector<Detection>& dets, double threshold) {
    std::vector<Detection> kept;
    for (const auto& d : dets)
        if (d.confidence >= threshold) kept.push_back(d);
    return kept;
}

} // namespace

SequenceFeatures measure_sequence(const SequenceData& data, double confidence_threshold,
                                  double iou_threshold) {
    std::vector<std::pair<GrayImage, std::vector<Detection>>> frames;
    frames.reserve(data.frames());
    for (std::size_t i = 0; i < data.frames(); ++i)
        frames.emplace_back(data.images[i], data.detections[i]);
    SequenceFeatures features = extract_features(frames, confidence_threshold);

    if (data.ground_truth) {
        std::vector<double> labels;
        labels.reserve(data.frames());
        for (std::size_t i = 0; i < data.frames(); ++i) {
            const auto counted = above_threshold(data.detections[i], confidence_threshold);
            const MatchResult match =
                match_detections(counted, (*data.ground_truth)[i], iou_threshold);
            labels.push_back(counting_confidence(match));
        }
        features.r = std::move(labels);
    }
    return features;
}

FeatureTable build_feature_table(const SequenceData& data, double confidence_threshold,
                                 double iou_threshold, const ConfidenceModel* model) {
    const SequenceFeatures features =
        measure_sequence(data, confidence_threshold, iou_threshold);
    FeatureTable table;
    table.c = features.c;
    table.n = features.n_count;
    table.g = features.g;
    table.c_norm = minmax_normalize(features.c);
    table.n_norm = minmax_normalize(features.n_count);
    table.g_norm = minmax_normalize(features.g);
    if (features.r) table.r_label = features.r;
    if (model) {
        std::vector<double> preds;
        preds.reserve(table.frames());
        for (std::size_t i = 0; i < table.frames(); ++i)
            preds.push_back(
                predict_confidence(*model, table.c_norm[i], table.g_norm[i], table.n_norm[i]));
        table.r_pred = std::move(preds);
    }
    return table;
}

std::string feature_csv(const FeatureTable& table) {
    std::string out = "t,C,N,G,C_norm,N_norm,G_norm";
    if (table.r_label) out += ",R_label";
    if (table.r_pred) out += ",R_pred";
    out += '\n';

    char buf[64];
    auto real = [&](double v) {
        std::snprintf(buf, sizeof buf, ",%.6f", v);
        out += buf;
    };
    for (std::size_t i = 0; i < table.frames(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu", i);
        out += buf;
        real(table.c[i]);
        std::snprintf(buf, sizeof buf, ",%d", static_cast<int>(table.n[i]));
        out += buf;
        real(table.g[i]);
        real(table.c_norm[i]);
        real(table.n_norm[i]);
        real(table.g_norm[i]);
        if (table.r_label) real((*table.r_label)[i]);
        if (table.r_pred) real((*table.r_pred)[i]);
        out += '\n';
    }
    return out;
}

CountReport count_sequence(const SequenceData& data, const ConfidenceModel& model,
                           double confidence_threshold) {
    const FeatureTable table =
        build_feature_table(data, confidence_threshold, 0.5, &model);

    CountReport report;
    report.per_frame_r = *table.r_pred;
    std::vector<int> counts(table.frames());
    for (std::size_t i = 0; i < table.frames(); ++i) counts[i] = static_cast<int>(table.n[i]);
    report.static_count = static_count(counts);
    report.max_count = max_count(counts);
    const CountEstimate fused = fuse_counts(report.per_frame_r, table.n);
    report.fused_real = fused.value_real;
    report.fused_int = fused.value_int;
    return report;
}

} // namespace aphid
