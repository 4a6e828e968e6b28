#pragma once

#include <cstdint>
#include <vector>

#include "aphidcount/detection.hpp"
#include "aphidcount/image.hpp"
#include "aphidcount/rng.hpp"

namespace aphid {

/// Error profile of the simulated detector. Miss probability and the
/// false-positive rate both grow with blur; box jitter and confidence noise
/// are blur-independent. The confidence mean drops only slightly with blur,
/// so the sequence-averaged mean confidence stays roughly flat.
struct DetectorProfile {
    double miss_base = 0.05;            ///< miss probability at blur 0
    double miss_blur_coeff = 0.02;      ///< extra miss probability per blur radius unit
    double fp_base = 0.3;               ///< mean false positives per frame at blur 0
    double fp_blur_coeff = 1.5;         ///< extra mean false positives per blur radius unit
    double confidence_base = 0.78;      ///< mean true-positive confidence at blur 0
    double confidence_blur_coeff = 0.01;///< confidence mean drop per blur radius unit
    double confidence_spread = 0.08;    ///< gaussian sigma of confidence noise
    double fp_confidence_mean = 0.45;   ///< mean confidence of false positives
    double jitter_px = 0.8;             ///< gaussian sigma of box center jitter
};

/// Generative parameters of one stirring sequence. trap_center_* < 0 means
/// "image center". An empty blur_schedule means default_blur_schedule(frames).
struct SimConfig {
    int image_width = 512;
    int image_height = 512;
    double trap_center_x = -1.0;
    double trap_center_y = -1.0;
    double trap_radius = 230.0;
    int true_count = 12;                  ///< aphids in the trap, visible or not
    double hidden_fraction_initial = 0.7; ///< chance each aphid starts submerged
    int frames = 9;
    double surface_rate = 0.5;     ///< per stir frame: hidden -> visible
    double resubmerge_rate = 0.05; ///< per frame after T0: visible -> hidden
    std::vector<int> blur_schedule;
    DetectorProfile detector;
    double aphid_size = 12.0; ///< rendered box side, pixels
    double noise_sigma = 2.0; ///< additive pixel noise after blur
    std::uint64_t seed = 0;

    double center_x() const { return trap_center_x >= 0.0 ? trap_center_x : image_width / 2.0; }
    double center_y() const { return trap_center_y >= 0.0 ? trap_center_y : image_height / 2.0; }

    /// Stirring runs on frames [1, frames - 2]; frame 0 is the calm
    /// pre-stirring capture and the last frame is after the water settles.
    bool is_stirring_frame(int t) const { return t >= 1 && t <= frames - 2; }
};

/// Rise-peak-fall blur radii: 0 at both ends, peak_radius mid-sequence.
std::vector<int> default_blur_schedule(int frames, int peak_radius = 4);

struct SimulatedSequence {
    std::vector<GrayImage> frames;
    std::vector<std::vector<BoundingBox>> visible_gt; ///< per frame, surfaced aphids only
    std::vector<std::vector<Detection>> detections;   ///< per frame, simulated detector output
    int true_count = 0;
};

/// Renders one frame: bright trap disk (with a fixed water-ripple texture)
/// on a mid-gray background, dark circular blobs at the visible aphid
/// positions, box blur of the given radius, then additive gaussian pixel
/// noise drawn from rng.
GrayImage render_frame(const std::vector<std::pair<double, double>>& positions,
                       int blur_radius, const SimConfig& config, Rng& rng);

/// Noisy detector over the visible ground truth: each box is found with
/// probability 1 - (miss_base + miss_blur_coeff * blur), jittered, and
/// scored around a blur-decreasing mean; Poisson false positives land
/// uniformly in the trap.
std::vector<Detection> simulate_detector(const std::vector<BoundingBox>& visible_gt,
                                         double blur_radius, const SimConfig& config, Rng& rng);

/// Full sequence generation, bitwise deterministic for a fixed config.
/// Aphid positions are drawn without box overlap inside the trap disk;
/// visibility evolves by the surface/resubmerge rates; frames render with
/// the scheduled blur; detections come from simulate_detector.
///
/// Throws std::invalid_argument on invalid rates/dimensions, and
/// std::runtime_error when non-overlapping placement keeps failing.
SimulatedSequence simulate_sequence(const SimConfig& config);

} // namespace aphid
