#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aphidcount/detection.hpp"
#include "aphidcount/image.hpp"

namespace aphid {

/// Per-frame factor arrays of one stirring sequence, in time order:
/// mean box confidence, detection count and clarity, plus the counting
/// confidence labels when ground truth was available.
struct SequenceFeatures {
    std::vector<double> c;       ///< mean box confidence per frame
    std::vector<double> n_count; ///< detections at or above the count threshold
    std::vector<double> g;       ///< average gradient magnitude per frame
    std::optional<std::vector<double>> r; ///< counting-confidence labels in [0, 1]

    std::size_t frames() const { return c.size(); }
};

/// Fitted counting-confidence regression
///   r = w0 + wC * c + wG * g + wN * n
/// over per-sequence min-max normalized inputs. Residuals are the training
/// fit diagnostics, one per row; they never affect prediction.
struct ConfidenceModel {
    double w0 = 0.0;
    double wC = 0.0;
    double wG = 0.0;
    double wN = 0.0;
    std::vector<double> residuals;
};

/// Per-frame factors for a sequence of (image, detections) pairs. The count
/// threshold applies to n_count only; mean confidence runs over every box.
/// Labels are not computed here (no ground truth in sight).
SequenceFeatures extract_features(
    const std::vector<std::pair<GrayImage, std::vector<Detection>>>& frames,
    double confidence_threshold);

/// (v - min) / (max - min); a constant array maps to all 0.5.
std::vector<double> minmax_normalize(const std::vector<double>& values);

/// Element-wise means of several equal-length sequences' factor arrays and
/// labels, one averaged row per time index. Inputs are expected to be
/// normalized already and must all carry labels.
struct AveragedFeatures {
    std::vector<double> c_bar;
    std::vector<double> n_bar;
    std::vector<double> g_bar;
    std::vector<double> r_bar;
};

AveragedFeatures average_over_sets(const std::vector<SequenceFeatures>& sets);

/// One training row: normalized factors in the fixed order (C, G, N).
struct FeatureRow {
    double c = 0.0;
    double g = 0.0;
    double n = 0.0;
};

/// Ordinary least squares for the four weights, solved by a rank-revealing
/// orthogonal factorization; rank-deficient systems get the minimum-norm
/// solution. Throws std::invalid_argument with fewer rows than unknowns.
ConfidenceModel fit_model(const std::vector<FeatureRow>& rows,
                          const std::vector<double>& targets);

/// Forward evaluation of the model, clamped to [0, 1].
double predict_confidence(const ConfidenceModel& model, double c, double g, double n);

/// Flat key/value text form. Keys: format_version, feature_order, w0, wC,
/// wG, wN, residuals. Numbers use shortest round-trip decimal form, so
/// save(load(save(m))) == save(m) byte for byte.
std::string save_model(const ConfidenceModel& model);

/// Throws ParseError (MalformedDocument / MissingField / NonFiniteValue).
ConfidenceModel parse_model(const std::string& text, const std::string& origin = "");

ConfidenceModel load_model(const std::string& path);

void save_model_file(const ConfidenceModel& model, const std::string& path);

} // namespace aphid
