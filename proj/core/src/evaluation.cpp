#include "aphidcount/evaluation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace aphid {

MatchResult match_detections(const std::vector<Detection>& dets,
                             const std::vector<BoundingBox>& gts,
                             double iou_threshold) {
    std::vector<std::size_t> order(dets.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return dets[a].confidence > dets[b].confidence;
    });

    std::vector<bool> gt_taken(gts.size(), false);
    MatchResult result;

    for (std::size_t det_idx : order) {
        int best_gt = -1;
        double best_iou = 0.0;
        for (std::size_t g = 0; g < gts.size(); ++g) {
            if (gt_taken[g]) continue;
            const double overlap = iou(dets[det_idx].box, gts[g]);
            if (overlap > best_iou) {
                best_iou = overlap;
                best_gt = static_cast<int>(g);
            }
        }
        if (best_gt >= 0 && best_iou >= iou_threshold) {
            gt_taken[best_gt] = true;
            result.pairs.push_back({static_cast<int>(det_idx), best_gt, best_iou});
        }
    }

    result.tp = static_cast<int>(result.pairs.size());
    result.fp = static_cast<int>(dets.size()) - result.tp;
    result.fn = static_cast<int>(gts.size()) - result.tp;
    return result;
}

double counting_confidence(const MatchResult& match) {
    const int denom = match.tp + match.fp + match.fn;
    if (denom == 0) return 1.0;
    return static_cast<double>(match.tp) / static_cast<double>(denom);
}

namespace {

// Confidence-ranked TP/FP flags plus the total ground-truth count.
struct RankedFlags {
    std::vector<bool> is_tp; // in global rank order
    std::size_t total_gts = 0;
};

RankedFlags rank_and_flag(const std::vector<ImageDetection>& dets,
                          const std::vector<ImageGroundTruth>& gts,
                          double iou_threshold) {
    std::map<int, std::vector<Detection>> dets_by_image;
    std::map<int, std::vector<std::size_t>> det_rows_by_image; // original indices
    for (std::size_t i = 0; i < dets.size(); ++i) {
        dets_by_image[dets[i].image_id].push_back(dets[i].det);
        det_rows_by_image[dets[i].image_id].push_back(i);
    }
    std::map<int, std::vector<BoundingBox>> gts_by_image;
    for (const auto& g : gts) gts_by_image[g.image_id].push_back(g.box);

    // TP flag per original detection row, via per-image greedy matching.
    std::vector<bool> row_is_tp(dets.size(), false);
    for (const auto& [image_id, image_dets] : dets_by_image) {
        const auto git = gts_by_image.find(image_id);
        if (git == gts_by_image.end()) continue; // no truth here: all stay FP
        const MatchResult match = match_detections(image_dets, git->second, iou_threshold);
        for (const auto& pair : match.pairs) {
            row_is_tp[det_rows_by_image[image_id][pair.detection_index]] = true;
        }
    }

    // Global rank: confidence desc, ties by image id then input index.
    std::vector<std::size_t> rank(dets.size());
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
        if (dets[a].det.confidence != dets[b].det.confidence) {
            return dets[a].det.confidence > dets[b].det.confidence;
        }
        if (dets[a].image_id != dets[b].image_id) return dets[a].image_id < dets[b].image_id;
        return a < b;
    });

    RankedFlags out;
    out.total_gts = gts.size();
    out.is_tp.reserve(dets.size());
    for (std::size_t r : rank) out.is_tp.push_back(row_is_tp[r]);
    return out;
}

} // namespace

double average_precision(const std::vector<ImageDetection>& dets,
                         const std::vector<ImageGroundTruth>& gts,
                         double iou_threshold) {
    if (gts.empty()) {
        throw std::invalid_argument("average_precision: undefined without ground truths");
    }

    const RankedFlags flags = rank_and_flag(dets, gts, iou_threshold);
    const std::size_t n = flags.is_tp.size();

    std::vector<double> precision(n), recall(n);
    int cum_tp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (flags.is_tp[i]) ++cum_tp;
        precision[i] = static_cast<double>(cum_tp) / static_cast<double>(i + 1);
        recall[i] = static_cast<double>(cum_tp) / static_cast<double>(flags.total_gts);
    }

    // Monotone precision envelope from the right, then sample the recall grid.
    for (std::size_t i = n; i-- > 1;) {
        precision[i - 1] = std::max(precision[i - 1], precision[i]);
    }

    double sum = 0.0;
    for (int k = 0; k <= 100; ++k) {
        const double r = static_cast<double>(k) / 100.0;
        const auto it = std::lower_bound(recall.begin(), recall.end(), r);
        if (it != recall.end()) {
            sum += precision[static_cast<std::size_t>(it - recall.begin())];
        }
    }
    return sum / 101.0;
}

double average_precision_range(const std::vector<ImageDetection>& dets,
                               const std::vector<ImageGroundTruth>& gts) {
    double sum = 0.0;
    for (int i = 0; i < 10; ++i) {
        sum += average_precision(dets, gts, 0.50 + 0.05 * i);
    }
    return sum / 10.0;
}

} // namespace aphid
