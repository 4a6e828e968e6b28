#include "aphidcount/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace aphid {

namespace {

constexpr double kBackgroundLevel = 120.0;
constexpr double kTrapLevel = 220.0;
constexpr double kAphidLevel = 30.0;
// Water-surface ripple inside the trap: a fixed sinusoidal texture whose
// gradients shrink sharply (and monotonically) under box blur, so measured
// clarity tracks the blur schedule instead of the aphid count.
constexpr double kRippleAmplitude = 20.0;
constexpr double kRippleWavelength = 8.0;

void validate(const SimConfig& config) {
    if (config.image_width <= 0 || config.image_height <= 0)
        throw std::invalid_argument("simulate: image dimensions must be positive");
    if (config.frames < 1)
        throw std::invalid_argument("simulate: need at least 1 frame");
    if (config.true_count < 0)
        throw std::invalid_argument("simulate: true_count must be non-negative");
    if (config.trap_radius <= 0.0)
        throw std::invalid_argument("simulate: trap_radius must be positive");
    if (config.aphid_size <= 0.0)
        throw std::invalid_argument("simulate: aphid_size must be positive");
    if (config.noise_sigma < 0.0)
        throw std::invalid_argument("simulate: noise_sigma must be non-negative");
    auto is_rate = [](double r) { return r >= 0.0 && r <= 1.0; };
    if (!is_rate(config.hidden_fraction_initial) || !is_rate(config.surface_rate) ||
        !is_rate(config.resubmerge_rate))
        throw std::invalid_argument("simulate: rates must lie in [0, 1]");
    if (!config.blur_schedule.empty() &&
        static_cast<int>(config.blur_schedule.size()) != config.frames)
        throw std::invalid_argument("simulate: blur_schedule length must equal frames");
    for (int r : config.blur_schedule)
        if (r < 0) throw std::invalid_argument("simulate: blur radii must be non-negative");
}

BoundingBox box_at(double cx, double cy, double side) {
    const double h = side / 2.0;
    return BoundingBox{cx - h, cy - h, cx + h, cy + h};
}

std::vector<std::pair<double, double>> place_aphids(const SimConfig& config, Rng& rng) {
    std::vector<std::pair<double, double>> positions;
    positions.reserve(static_cast<std::size_t>(config.true_count));
    // Keep full boxes inside the trap disk; the diagonal half-extent of a
    // square of side s is s/sqrt(2).
    const double margin = config.aphid_size * 0.7071 + 1.0;
    const double place_radius = config.trap_radius - margin;
    if (config.true_count > 0 && place_radius <= 0.0)
        throw std::invalid_argument("simulate: trap too small for the aphid size");
    const double min_center_dist = config.aphid_size + 2.0;
    const double cx0 = config.center_x();
    const double cy0 = config.center_y();

    const int max_attempts = 1000 * std::max(1, config.true_count);
    int attempts = 0;
    while (static_cast<int>(positions.size()) < config.true_count) {
        if (++attempts > max_attempts)
            throw std::runtime_error("simulate: could not place aphids without overlap");
        const double x = cx0 + rng.uniform(-place_radius, place_radius);
        const double y = cy0 + rng.uniform(-place_radius, place_radius);
        const double dx = x - cx0, dy = y - cy0;
        if (dx * dx + dy * dy > place_radius * place_radius) continue;
        bool clash = false;
        for (const auto& p : positions) {
            // Chebyshev distance: square boxes of side s never overlap when
            // centers are at least s apart on one axis.
            if (std::max(std::abs(x - p.first), std::abs(y - p.second)) < min_center_dist) {
                clash = true;
                break;
            }
        }
        if (!clash) positions.emplace_back(x, y);
    }
    return positions;
}

double ripple(int x, int y) {
    constexpr double k = 2.0 * 3.14159265358979323846 / kRippleWavelength;
    return kRippleAmplitude * std::sin(k * (x + 0.5) + 0.9) * std::sin(k * (y + 0.5) + 0.4);
}

void fill_disk(std::vector<double>& canvas, int width, int height, double cx, double cy,
               double radius, double level, bool textured = false) {
    const int x_lo = std::max(0, static_cast<int>(std::floor(cx - radius)));
    const int x_hi = std::min(width - 1, static_cast<int>(std::ceil(cx + radius)));
    const int y_lo = std::max(0, static_cast<int>(std::floor(cy - radius)));
    const int y_hi = std::min(height - 1, static_cast<int>(std::ceil(cy + radius)));
    const double r2 = radius * radius;
    for (int y = y_lo; y <= y_hi; ++y)
        for (int x = x_lo; x <= x_hi; ++x) {
            const double dx = x + 0.5 - cx, dy = y + 0.5 - cy;
            if (dx * dx + dy * dy <= r2)
                canvas[static_cast<std::size_t>(y) * width + x] =
                    textured ? level + ripple(x, y) : level;
        }
}

GrayImage quantize(const std::vector<double>& canvas, int width, int height) {
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.resize(canvas.size());
    for (std::size_t i = 0; i < canvas.size(); ++i) {
        const double v = std::round(canvas[i]);
        img.pixels[i] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
    return img;
}

} // namespace

std::vector<int> default_blur_schedule(int frames, int peak_radius) {
    if (frames <= 0) throw std::invalid_argument("default_blur_schedule: frames must be positive");
    if (peak_radius < 0)
        throw std::invalid_argument("default_blur_schedule: peak_radius must be non-negative");
    std::vector<int> schedule(static_cast<std::size_t>(frames), 0);
    if (frames == 1) return schedule;
    const double t_peak = (frames - 1) / 2.0;
    for (int t = 0; t < frames; ++t) {
        const double frac = 1.0 - std::abs(t - t_peak) / t_peak;
        schedule[static_cast<std::size_t>(t)] =
            static_cast<int>(std::lround(frac * peak_radius));
    }
    return schedule;
}

GrayImage render_frame(const std::vector<std::pair<double, double>>& positions,
                       int blur_radius, const SimConfig& config, Rng& rng) {
    const int w = config.image_width, h = config.image_height;
    std::vector<double> canvas(static_cast<std::size_t>(w) * h, kBackgroundLevel);
    fill_disk(canvas, w, h, config.center_x(), config.center_y(), config.trap_radius, kTrapLevel,
              /*textured=*/true);
    for (const auto& p : positions)
        fill_disk(canvas, w, h, p.first, p.second, config.aphid_size / 2.0, kAphidLevel);

    GrayImage img = quantize(canvas, w, h);
    if (blur_radius > 0) img = box_blur(img, blur_radius);

    if (config.noise_sigma > 0.0) {
        for (auto& px : img.pixels) {
            const double v = px + rng.normal(0.0, config.noise_sigma);
            px = static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
        }
    }
    return img;
}

std::vector<Detection> simulate_detector(const std::vector<BoundingBox>& visible_gt,
                                         double blur_radius, const SimConfig& config, Rng& rng) {
    const DetectorProfile& d = config.detector;
    std::vector<Detection> dets;

    const double miss_p = std::clamp(d.miss_base + d.miss_blur_coeff * blur_radius, 0.0, 1.0);
    const double conf_mean =
        std::clamp(d.confidence_base - d.confidence_blur_coeff * blur_radius, 0.0, 1.0);
    for (const auto& gt : visible_gt) {
        const bool missed = rng.bernoulli(miss_p);
        const double jx = rng.normal(0.0, d.jitter_px);
        const double jy = rng.normal(0.0, d.jitter_px);
        const double conf = rng.normal(conf_mean, d.confidence_spread);
        if (missed) continue;
        Detection det;
        det.box = BoundingBox{gt.xmin + jx, gt.ymin + jy, gt.xmax + jx, gt.ymax + jy};
        det.confidence = std::clamp(conf, 0.0, 1.0);
        dets.push_back(det);
    }

    const double fp_mean = d.fp_base + d.fp_blur_coeff * blur_radius;
    const int n_fp = rng.poisson(fp_mean);
    const double place_radius = std::max(1.0, config.trap_radius - config.aphid_size);
    for (int i = 0; i < n_fp; ++i) {
        double x, y;
        do {
            x = rng.uniform(-place_radius, place_radius);
            y = rng.uniform(-place_radius, place_radius);
        } while (x * x + y * y > place_radius * place_radius);
        x += config.center_x();
        y += config.center_y();
        const double conf = rng.normal(d.fp_confidence_mean, d.confidence_spread);
        Detection det;
        det.box = box_at(x, y, config.aphid_size);
        det.confidence = std::clamp(conf, 0.0, 1.0);
        dets.push_back(det);
    }
    return dets;
}

SimulatedSequence simulate_sequence(const SimConfig& config) {
    validate(config);
    Rng rng(config.seed);

    const std::vector<int> schedule =
        config.blur_schedule.empty() ? default_blur_schedule(config.frames) : config.blur_schedule;

    const auto positions = place_aphids(config, rng);

    std::vector<bool> visible(positions.size());
    for (std::size_t i = 0; i < visible.size(); ++i)
        visible[i] = !rng.bernoulli(config.hidden_fraction_initial);

    SimulatedSequence seq;
    seq.true_count = config.true_count;
    seq.frames.reserve(static_cast<std::size_t>(config.frames));
    seq.visible_gt.reserve(static_cast<std::size_t>(config.frames));
    seq.detections.reserve(static_cast<std::size_t>(config.frames));

    for (int t = 0; t < config.frames; ++t) {
        if (t > 0) {
            // Stirring churns the water: submerged aphids surface. Any frame
            // after the first can also lose a visible aphid back underwater.
            const bool stirring = config.is_stirring_frame(t);
            for (std::size_t i = 0; i < visible.size(); ++i) {
                if (!visible[i]) {
                    if (stirring && rng.bernoulli(config.surface_rate)) visible[i] = true;
                } else {
                    if (rng.bernoulli(config.resubmerge_rate)) visible[i] = false;
                }
            }
        }

        std::vector<std::pair<double, double>> shown;
        std::vector<BoundingBox> gt;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if (!visible[i]) continue;
            shown.push_back(positions[i]);
            gt.push_back(box_at(positions[i].first, positions[i].second, config.aphid_size));
        }

        const int blur = schedule[static_cast<std::size_t>(t)];
        seq.frames.push_back(render_frame(shown, blur, config, rng));
        seq.detections.push_back(simulate_detector(gt, blur, config, rng));
        seq.visible_gt.push_back(std::move(gt));
    }
    return seq;
}

} // namespace aphid
