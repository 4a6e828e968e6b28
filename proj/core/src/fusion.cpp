#include "aphidcount/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aphid {

CountEstimate fuse_counts(const std::vector<double>& confidences,
                          const std::vector<double>& counts,
                          double temperature) {
    if (confidences.empty()) {
        throw std::invalid_argument("fuse_counts: empty input");
    }
    if (confidences.size() != counts.size()) {
        throw std::invalid_argument("fuse_counts: confidence/count length mismatch");
    }
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("fuse_counts: temperature must be > 0");
    }
    for (double r : confidences) {
        if (!std::isfinite(r)) {
            throw std::invalid_argument("fuse_counts: non-finite confidence");
        }
    }

    const double peak = *std::max_element(confidences.begin(), confidences.end());
    CountEstimate est;
    est.per_frame_weights.resize(confidences.size());
    double norm = 0.0;
    for (std::size_t i = 0; i < confidences.size(); ++i) {
        const double w = std::exp((confidences[i] - peak) / temperature);
        est.per_frame_weights[i] = w;
        norm += w;
    }
    for (double& w : est.per_frame_weights) w /= norm;

    double value = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        value += est.per_frame_weights[i] * counts[i];
    }
    est.value_real = value;
    est.value_int = static_cast<int>(std::floor(value + 0.5)); // round half up
    return est;
}

int static_count(const std::vector<int>& seq_counts) {
    if (seq_counts.empty()) {
        throw std::invalid_argument("static_count: empty input");
    }
    return seq_counts.front();
}

int max_count(const std::vector<int>& seq_counts) {
    if (seq_counts.empty()) {
        throw std::invalid_argument("max_count: empty input");
    }
    return *std::max_element(seq_counts.begin(), seq_counts.end());
}

} // namespace aphid
