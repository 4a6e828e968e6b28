#include "aphidcount/detection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace aphid {

double iou(const BoundingBox& a, const BoundingBox& b) {
    const double ix = std::min(a.xmax, b.xmax) - std::max(a.xmin, b.xmin);
    const double iy = std::min(a.ymax, b.ymax) - std::max(a.ymin, b.ymin);
    const double inter = (ix > 0.0 && iy > 0.0) ? ix * iy : 0.0;
    const double uni = a.area() + b.area() - inter;
    return uni > 0.0 ? inter / uni : 0.0;
}

namespace {

// Indices ordered by confidence descending, ties toward lower input index.
std::vector<std::size_t> order_by_confidence(const std::vector<Detection>& dets) {
    std::vector<std::size_t> idx(dets.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return dets[a].confidence > dets[b].confidence;
    });
    return idx;
}

} // namespace

std::vector<Detection> nms(const std::vector<Detection>& dets, double iou_threshold) {
    const auto order = order_by_confidence(dets);
    std::vector<bool> suppressed(dets.size(), false);
    std::vector<Detection> kept;
    kept.reserve(dets.size());

    for (std::size_t i = 0; i < order.size(); ++i) {
        if (suppressed[order[i]]) continue;
        const Detection& top = dets[order[i]];
        kept.push_back(top);
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (suppressed[order[j]]) continue;
            if (iou(top.box, dets[order[j]].box) > iou_threshold) {
                suppressed[order[j]] = true;
            }
        }
    }
    return kept;
}

std::vector<Detection> soft_nms(const std::vector<Detection>& dets,
                                SoftNmsMethod method,
                                double sigma,
                                double iou_threshold,
                                double score_threshold) {
    if (sigma <= 0.0) {
        throw std::invalid_argument("soft_nms: sigma must be > 0");
    }

    // Work on (detection, original index) so confidence ties keep input order.
    struct Entry {
        Detection det;
        std::size_t index;
    };
    std::vector<Entry> pool;
    pool.reserve(dets.size());
    for (std::size_t i = 0; i < dets.size(); ++i) pool.push_back({dets[i], i});

    std::vector<Detection> kept;
    kept.reserve(dets.size());

    while (!pool.empty()) {
        auto best = std::min_element(pool.begin(), pool.end(), [](const Entry& a, const Entry& b) {
            if (a.det.confidence != b.det.confidence) return a.det.confidence > b.det.confidence;
            return a.index < b.index;
        });
        const Detection top = best->det;
        pool.erase(best);
        kept.push_back(top);

        for (auto& entry : pool) {
            const double overlap = iou(top.box, entry.det.box);
            if (method == SoftNmsMethod::Gaussian) {
                entry.det.confidence *= std::exp(-(overlap * overlap) / sigma);
            } else if (overlap > iou_threshold) {
                entry.det.confidence *= (1.0 - overlap);
            }
        }
        std::erase_if(pool, [score_threshold](const Entry& e) {
            return e.det.confidence < score_threshold;
        });
    }
    // Pop order is already non-increasing in final confidence: each survivor
    // only decays after the current maximum is removed.
    return kept;
}

double mean_box_confidence(const std::vector<Detection>& dets) {
    if (dets.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& d : dets) sum += d.confidence;
    return sum / static_cast<double>(dets.size());
}

int count_detections(const std::vector<Detection>& dets, double confidence_threshold) {
    return static_cast<int>(std::count_if(dets.begin(), dets.end(), [&](const Detection& d) {
        return d.confidence >= confidence_threshold;
    }));
}

std::vector<Detection> suppress(const std::vector<Detection>& dets, const SuppressionConfig& config) {
    switch (config.kind) {
    case SuppressionConfig::Kind::HardNms:
        return nms(dets, config.iou_threshold);
    case SuppressionConfig::Kind::SoftNmsLinear:
        return soft_nms(dets, SoftNmsMethod::Linear, config.sigma, config.iou_threshold,
                        config.score_threshold);
    case SuppressionConfig::Kind::SoftNmsGaussian:
        return soft_nms(dets, SoftNmsMethod::Gaussian, config.sigma, config.iou_threshold,
                        config.score_threshold);
    }
    return {};
}

} // namespace aphid
