// End-to-end acceptance gate. Each criterion prints one [PASS] line; any
// violated requirement prints [FAIL] with its location and exits nonzero.
// Run all criteria with no arguments, or one with --criterion N.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "aphidcount/clarity.hpp"
#include "aphidcount/confidence_model.hpp"
#include "aphidcount/detection.hpp"
#include "aphidcount/evaluation.hpp"
#include "aphidcount/fusion.hpp"
#include "aphidcount/rng.hpp"
#include "aphidcount/sequence_pipeline.hpp"
#include "aphidcount/simulator.hpp"
#include "aphidcount/tiling.hpp"

using namespace aphid;
namespace fs = std::filesystem;

namespace {

// Always-on requirement: never compiled out in Release.
#define REQUIRE(cond, msg)                                                      \
    do {                                                                        \
        if (!(cond)) {                                                          \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg \
                      << "\n";                                                  \
            std::exit(1);                                                       \
        }                                                                       \
    } while (0)

void pass(int criterion, const std::string& detail) {
    std::cout << "[PASS] criterion " << criterion << ": " << detail << "\n";
}

// ---------------------------------------------------------------- criterion 1

void criterion_fusion_closed_form() {
    const CountEstimate two = fuse_counts({0.0, std::log(3.0)}, {4, 8});
    REQUIRE(std::abs(two.value_real - 7.0) <= 1e-9, "two-frame softmax fusion != 7.0");
    REQUIRE(std::abs(two.per_frame_weights[0] - 0.25) <= 1e-9, "low-confidence weight != 0.25");
    REQUIRE(std::abs(two.per_frame_weights[1] - 0.75) <= 1e-9, "high-confidence weight != 0.75");

    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 9));
        const double level = rng.uniform(-2, 2);
        std::vector<double> r(static_cast<std::size_t>(n), level), counts;
        double mean = 0.0;
        for (int i = 0; i < n; ++i) {
            counts.push_back(static_cast<double>(rng.uniform_int(0, 30)));
            mean += counts.back();
        }
        mean /= n;
        REQUIRE(std::abs(fuse_counts(r, counts).value_real - mean) <= 1e-12,
                "equal-confidence fusion deviates from the arithmetic mean");
    }
    pass(1, "softmax fusion closed forms (weights 0.25/0.75 -> 7.0; equal-r -> mean)");
}

// ---------------------------------------------------------------- criterion 2

void criterion_soft_suppression() {
    const std::vector<Detection> coincident{{{0, 0, 10, 10}, 0.9, 0}, {{0, 0, 10, 10}, 0.8, 0}};
    const auto gaussian = soft_nms(coincident, SoftNmsMethod::Gaussian, 0.5);
    REQUIRE(gaussian.size() == 2, "gaussian soft suppression dropped a well-scored box");
    REQUIRE(std::abs(gaussian[0].confidence - 0.9) <= 1e-9, "winning score changed");
    REQUIRE(std::abs(gaussian[1].confidence - 0.8 * std::exp(-2.0)) <= 1e-9,
            "coincident box not decayed by exp(-iou^2/sigma)");

    const auto linear = soft_nms(coincident, SoftNmsMethod::Linear, 0.5);
    REQUIRE(linear.size() == 1, "linear decay must discard a fully-overlapped box");
    REQUIRE(std::abs(linear[0].confidence - 0.9) <= 1e-9, "linear winner score changed");
    pass(2, "soft suppression decay (0.8 -> 0.8*e^-2 gaussian; full overlap dies linearly)");
}

// ---------------------------------------------------------------- criterion 3

void criterion_regression_oracle() {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const double w0 = rng.uniform(-1, 1), wc = rng.uniform(-1, 1);
        const double wg = rng.uniform(-1, 1), wn = rng.uniform(-1, 1);
        std::vector<FeatureRow> rows;
        std::vector<double> targets;
        for (int i = 0; i < 20; ++i) {
            rows.push_back({rng.uniform(), rng.uniform(), rng.uniform()});
            targets.push_back(w0 + wc * rows.back().c + wg * rows.back().g + wn * rows.back().n);
        }
        const ConfidenceModel model = fit_model(rows, targets);
        REQUIRE(std::abs(model.w0 - w0) <= 1e-8, "noiseless fit missed the intercept");
        REQUIRE(std::abs(model.wC - wc) <= 1e-8, "noiseless fit missed wC");
        REQUIRE(std::abs(model.wG - wg) <= 1e-8, "noiseless fit missed wG");
        REQUIRE(std::abs(model.wN - wn) <= 1e-8, "noiseless fit missed wN");
    }

    for (int trial = 0; trial < 20; ++trial) {
        std::vector<FeatureRow> rows;
        std::vector<double> targets;
        for (int i = 0; i < 12; ++i) {
            rows.push_back({rng.uniform(), rng.uniform(), rng.uniform()});
            targets.push_back(rng.uniform());
        }
        const ConfidenceModel model = fit_model(rows, targets);
        double dot_1 = 0, dot_c = 0, dot_g = 0, dot_n = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            dot_1 += model.residuals[i];
            dot_c += rows[i].c * model.residuals[i];
            dot_g += rows[i].g * model.residuals[i];
            dot_n += rows[i].n * model.residuals[i];
        }
        const double worst = std::max({std::abs(dot_1), std::abs(dot_c), std::abs(dot_g),
                                       std::abs(dot_n)});
        REQUIRE(worst <= 1e-8, "residuals not orthogonal to the regressors");
    }
    pass(3, "least squares recovers 100 random generators to 1e-8; residuals orthogonal");
}

// ---------------------------------------------------------------- criterion 4

void criterion_reference_model() {
    const std::string path = REFERENCE_MODEL_PATH;
    const ConfidenceModel model = load_model(path);
    REQUIRE(model.w0 == 0.3756, "reference w0 drifted");
    REQUIRE(model.wC == -0.0023, "reference wC drifted");
    REQUIRE(model.wG == 0.3205, "reference wG drifted");
    REQUIRE(model.wN == -0.154, "reference wN drifted");

    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    REQUIRE(save_model(model) == buf.str(), "reference model does not round-trip bit-identically");

    const double top = predict_confidence(model, 1.0, 1.0, 1.0);
    REQUIRE(std::abs(top - 0.5398) <= 1e-9, "prediction at (1,1,1) != 0.5398");
    pass(4, "shipped confidence model loads losslessly; predicts 0.5398 at (1,1,1)");
}

// ---------------------------------------------------------------- criterion 5

double reference_iou(const BoundingBox& a, const BoundingBox& b) {
    const double iw = std::min(a.xmax, b.xmax) - std::max(a.xmin, b.xmin);
    const double ih = std::min(a.ymax, b.ymax) - std::max(a.ymin, b.ymin);
    if (iw <= 0 || ih <= 0) return 0.0;
    const double inter = iw * ih;
    const double uni = (a.xmax - a.xmin) * (a.ymax - a.ymin) +
                       (b.xmax - b.xmin) * (b.ymax - b.ymin) - inter;
    return uni > 0 ? inter / uni : 0.0;
}

int reference_tp(const std::vector<ImageDetection>& dets, const std::vector<ImageGroundTruth>& gts,
                 double threshold) {
    int tp = 0;
    std::vector<int> ids;
    for (const auto& d : dets) ids.push_back(d.image_id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int id : ids) {
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < dets.size(); ++i)
            if (dets[i].image_id == id) order.push_back(i);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return dets[a].det.confidence > dets[b].det.confidence;
        });
        std::vector<bool> taken(gts.size(), false);
        for (std::size_t di : order) {
            int best = -1;
            double best_iou = 0.0;
            for (std::size_t g = 0; g < gts.size(); ++g) {
                if (gts[g].image_id != id || taken[g]) continue;
                const double ov = reference_iou(dets[di].det.box, gts[g].box);
                if (ov > best_iou) {
                    best_iou = ov;
                    best = static_cast<int>(g);
                }
            }
            if (best >= 0 && best_iou >= threshold) {
                taken[static_cast<std::size_t>(best)] = true;
                ++tp;
            }
        }
    }
    return tp;
}

// Slow path: rerun the matcher for every ranked prefix, then scan the whole
// precision set at each of the 101 recall grid points.
double reference_ap(const std::vector<ImageDetection>& dets,
                    const std::vector<ImageGroundTruth>& gts, double threshold) {
    std::vector<std::size_t> rank(dets.size());
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
        if (dets[a].det.confidence != dets[b].det.confidence)
            return dets[a].det.confidence > dets[b].det.confidence;
        if (dets[a].image_id != dets[b].image_id) return dets[a].image_id < dets[b].image_id;
        return a < b;
    });
    std::vector<double> precision, recall;
    for (std::size_t k = 1; k <= rank.size(); ++k) {
        std::vector<ImageDetection> prefix;
        for (std::size_t i = 0; i < k; ++i) prefix.push_back(dets[rank[i]]);
        const int tp = reference_tp(prefix, gts, threshold);
        precision.push_back(static_cast<double>(tp) / static_cast<double>(k));
        recall.push_back(static_cast<double>(tp) / static_cast<double>(gts.size()));
    }
    double sum = 0.0;
    for (int g = 0; g <= 100; ++g) {
        const double r = static_cast<double>(g) / 100.0;
        double best = 0.0;
        for (std::size_t k = 0; k < precision.size(); ++k)
            if (recall[k] >= r) best = std::max(best, precision[k]);
        sum += best;
    }
    return sum / 101.0;
}

void criterion_ap_oracle() {
    Rng rng(5);
    auto square = [](double x, double y, double s) { return BoundingBox{x, y, x + s, y + s}; };
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<ImageDetection> dets;
        std::vector<ImageGroundTruth> gts;
        const int nd = static_cast<int>(rng.uniform_int(0, 5));
        const int ng = static_cast<int>(rng.uniform_int(1, 3));
        for (int i = 0; i < ng; ++i)
            gts.push_back({static_cast<int>(rng.uniform_int(0, 2)),
                           square(rng.uniform(0, 40), rng.uniform(0, 40), rng.uniform(6, 14))});
        for (int i = 0; i < nd; ++i)
            dets.push_back({static_cast<int>(rng.uniform_int(0, 2)),
                            {square(rng.uniform(0, 40), rng.uniform(0, 40), rng.uniform(6, 14)),
                             rng.uniform(), 0}});
        const double got = average_precision(dets, gts, 0.4);
        const double want = reference_ap(dets, gts, 0.4);
        REQUIRE(std::abs(got - want) <= 1e-12, "interpolated ap diverged from the slow reference");
    }

    const std::vector<ImageGroundTruth> gts{{0, {0, 0, 10, 10}}, {0, {30, 0, 40, 10}}};
    const std::vector<ImageDetection> worked{
        {0, {{0, 0, 10, 10}, 0.9, 0}},
        {0, {{60, 60, 70, 70}, 0.8, 0}},
        {0, {{30, 0, 40, 10}, 0.7, 0}},
    };
    const double expected = (51.0 + 50.0 * (2.0 / 3.0)) / 101.0;
    REQUIRE(std::abs(average_precision(worked, gts, 0.5) - expected) <= 1e-6,
            "three-detection worked example off");
    pass(5, "interpolated ap == brute force on 1000 instances; worked example 0.8350");
}

// ---------------------------------------------------------------- criterion 6

void criterion_tiling() {
    Rng rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const int w = static_cast<int>(rng.uniform_int(640, 2560));
        const int h = static_cast<int>(rng.uniform_int(640, 2560));
        const TileGrid grid = plan_tiles(w, h, 640, 0.2);
        for (const Tile& t : grid.tiles)
            REQUIRE(t.x0 >= 0 && t.y0 >= 0 && t.x0 + t.width <= w && t.y0 + t.height <= h,
                    "tile leaves the image");
        int reach = 0;
        for (int c = 0; c < grid.cols; ++c) {
            const Tile& t = grid.at(0, c);
            REQUIRE(t.x0 <= reach, "column gap in the tile cover");
            if (c > 0)
                REQUIRE(grid.at(0, c - 1).x0 + grid.at(0, c - 1).width - t.x0 >= 128,
                        "adjacent column overlap below 128 px");
            reach = std::max(reach, t.x0 + t.width);
        }
        REQUIRE(reach == w, "columns do not span the width");
        reach = 0;
        for (int r = 0; r < grid.rows; ++r) {
            const Tile& t = grid.at(r, 0);
            REQUIRE(t.y0 <= reach, "row gap in the tile cover");
            if (r > 0)
                REQUIRE(grid.at(r - 1, 0).y0 + grid.at(r - 1, 0).height - t.y0 >= 128,
                        "adjacent row overlap below 128 px");
            reach = std::max(reach, t.y0 + t.height);
        }
        REQUIRE(reach == h, "rows do not span the height");
    }

    for (int trial = 0; trial < 100; ++trial) {
        const int w = static_cast<int>(rng.uniform_int(640, 1920));
        const int h = static_cast<int>(rng.uniform_int(640, 1920));
        const TileGrid grid = plan_tiles(w, h, 640, 0.2);
        std::vector<Detection> global;
        const int step = 64, size = 20;
        for (int y = step / 2; y + size < h; y += step)
            for (int x = step / 2; x + size < w; x += step)
                if (rng.uniform() < 0.08)
                    global.push_back({{static_cast<double>(x), static_cast<double>(y),
                                       static_cast<double>(x + size), static_cast<double>(y + size)},
                                      rng.uniform(0.5, 1.0), 0});
        std::vector<std::pair<Tile, std::vector<Detection>>> per_tile;
        for (const Tile& tile : grid.tiles) {
            std::vector<Detection> local;
            for (const auto& d : global)
                if (tile_contains_box(tile, d.box)) {
                    Detection copy = d;
                    copy.box.xmin -= tile.x0;
                    copy.box.xmax -= tile.x0;
                    copy.box.ymin -= tile.y0;
                    copy.box.ymax -= tile.y0;
                    local.push_back(copy);
                }
            per_tile.emplace_back(tile, std::move(local));
        }
        const auto merged = merge_tiles(per_tile, grid);
        REQUIRE(merged.size() == global.size(),
                "split+merge changed the number of well-separated boxes");
    }
    pass(6, "200 grids cover every pixel with >=128 px overlap; split+merge preserves counts");
}

// ---------------------------------------------------------------- criterion 7

void criterion_clarity() {
    REQUIRE(average_gradient_magnitude(GrayImage(32, 16, 77)) == 0.0,
            "constant image has nonzero gradient");

    GrayImage ramp(64, 8);
    for (int y = 0; y < ramp.height; ++y)
        for (int x = 0; x < ramp.width; ++x) ramp.at(x, y) = static_cast<std::uint8_t>(x);
    REQUIRE(average_gradient_magnitude(ramp) == 1.0, "unit ramp gradient != 1.0");

    for (int seed = 0; seed < 20; ++seed) {
        SimConfig config;
        config.image_width = 256;
        config.image_height = 256;
        config.trap_radius = 110.0;
        config.frames = 1;
        config.blur_schedule = {0};
        config.seed = static_cast<std::uint64_t>(seed);
        const GrayImage frame = simulate_sequence(config).frames.front();
        double previous = -1.0;
        for (int radius : {0, 1, 2, 4}) {
            const double g = average_gradient_magnitude(box_blur(frame, radius));
            if (previous >= 0.0)
                REQUIRE(g <= previous, "clarity increased under heavier blur");
            previous = g;
        }
    }
    pass(7, "clarity: constant -> 0, unit ramp -> 1.0, non-increasing under blur on 20 frames");
}

// ---------------------------------------------------------------- criterion 8

SimConfig protocol_config(std::uint64_t seed) {
    SimConfig config;
    config.image_width = 256;
    config.image_height = 256;
    config.trap_radius = 110.0;
    config.true_count = 10;
    config.frames = 9;
    config.seed = seed;
    return config;
}

SequenceData sequence_data(const SimConfig& config) {
    const SimulatedSequence sim = simulate_sequence(config);
    SequenceData data;
    data.images = sim.frames;
    data.ground_truth = sim.visible_gt;
    SuppressionConfig softnms;
    softnms.kind = SuppressionConfig::Kind::SoftNmsGaussian;
    for (const auto& dets : sim.detections) data.detections.push_back(suppress(dets, softnms));
    return data;
}

void criterion_protocol() {
    const int master_seeds = 20, sequences = 9, train = 7;
    double fused_err = 0.0, static_err = 0.0, max_err = 0.0;
    int runs = 0, static_under = 0, max_dominates = 0;

    for (int master = 0; master < master_seeds; ++master) {
        std::vector<SequenceData> data;
        for (int i = 0; i < sequences; ++i)
            data.push_back(sequence_data(
                protocol_config(static_cast<std::uint64_t>(master * 1000 + i))));

        std::vector<SequenceFeatures> sets;
        for (int i = 0; i < train; ++i) {
            SequenceFeatures f = measure_sequence(data[static_cast<std::size_t>(i)], 0.25, 0.5);
            f.c = minmax_normalize(f.c);
            f.n_count = minmax_normalize(f.n_count);
            f.g = minmax_normalize(f.g);
            sets.push_back(std::move(f));
        }
        const AveragedFeatures avg = average_over_sets(sets);
        std::vector<FeatureRow> rows;
        std::vector<double> targets;
        for (std::size_t i = 0; i < avg.c_bar.size(); ++i) {
            rows.push_back({avg.c_bar[i], avg.g_bar[i], avg.n_bar[i]});
            targets.push_back(avg.r_bar[i]);
        }
        const ConfidenceModel model = fit_model(rows, targets);

        for (int i = train; i < sequences; ++i) {
            const CountReport report =
                count_sequence(data[static_cast<std::size_t>(i)], model, 0.25);
            const int truth = 10;
            fused_err += std::abs(report.fused_int - truth);
            static_err += std::abs(report.static_count - truth);
            max_err += std::abs(report.max_count - truth);
            if (report.static_count <= truth) ++static_under;
            if (report.max_count >= report.fused_int) ++max_dominates;
            ++runs;
        }
    }

    fused_err /= runs;
    static_err /= runs;
    max_err /= runs;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "mean abs error fused %.3f < static %.3f and < max %.3f over %d runs",
                  fused_err, static_err, max_err, runs);
    REQUIRE(fused_err < static_err, "fusion does not beat the first-frame baseline");
    REQUIRE(fused_err < max_err, "fusion does not beat the maximum-count baseline");
    REQUIRE(static_under * 10 >= runs * 9, "first-frame baseline fails to undercount");
    REQUIRE(max_dominates == runs, "maximum count fell below the fused count");
    pass(8, detail);
}

// ---------------------------------------------------------------- criterion 9

void criterion_trend() {
    const int seeds = 20, frames = 9;
    std::vector<double> n_avg(frames, 0.0), g_avg(frames, 0.0);
    for (int seed = 0; seed < seeds; ++seed) {
        SimConfig config = protocol_config(static_cast<std::uint64_t>(seed));
        config.true_count = 12;
        const SequenceData data = sequence_data(config);
        const SequenceFeatures f = measure_sequence(data, 0.25, 0.5);
        for (int t = 0; t < frames; ++t) {
            n_avg[static_cast<std::size_t>(t)] += f.n_count[static_cast<std::size_t>(t)];
            g_avg[static_cast<std::size_t>(t)] += f.g[static_cast<std::size_t>(t)];
        }
    }
    for (double& v : n_avg) v /= seeds;
    for (double& v : g_avg) v /= seeds;

    const int n_peak = static_cast<int>(
        std::max_element(n_avg.begin(), n_avg.end()) - n_avg.begin());
    const int g_dip = static_cast<int>(
        std::min_element(g_avg.begin(), g_avg.end()) - g_avg.begin());

    // stirring spans frames 1..7; the count peak must land in its interior,
    // and the clarity dip exactly at the heaviest-blur frame
    REQUIRE(n_peak > 1 && n_peak < 7, "seed-averaged count does not peak mid-stir");
    REQUIRE(n_avg[static_cast<std::size_t>(n_peak)] > n_avg.front(),
            "count peak does not rise above the calm first frame");
    REQUIRE(n_avg[static_cast<std::size_t>(n_peak)] > n_avg.back(),
            "count peak does not rise above the settled last frame");
    REQUIRE(g_dip == 4, "seed-averaged clarity dip missed the heaviest-blur frame");

    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "count rises then falls (peak at frame %d); clarity dips at frame %d",
                  n_peak, g_dip);
    pass(9, detail);
}

// --------------------------------------------------------------- criterion 10

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good(), "missing pipeline artifact: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_determinism() {
    const fs::path root =
        fs::temp_directory_path() / ("aphidcount_accept_" + std::to_string(::getpid()));
    fs::remove_all(root);
    fs::create_directories(root);

    auto shell = [&](const std::string& args, const fs::path& stdout_file) {
        const std::string cmd = std::string(CLI_PATH) + " " + args + " > " +
                                stdout_file.string() + " 2>&1";
        REQUIRE(std::system(cmd.c_str()) == 0, "pipeline step failed: " + cmd);
    };

    for (const char* round : {"a", "b"}) {
        const fs::path dir = root / round;
        fs::create_directories(dir);
        const std::string seq = (dir / "seq").string();
        shell("simulate --seed 11 --image-size 256 --trap-radius 110 --true-count 10"
              " --frames 9 --out-dir " + seq, dir / "simulate.log");
        shell("fit " + seq + "/sequence.manifest --out " + (dir / "model.txt").string(),
              dir / "fit.log");
        shell("features --manifest " + seq + "/sequence.manifest --model " +
              (dir / "model.txt").string() + " --csv " + (dir / "features.csv").string() +
              " --svg-plot " + (dir / "features.svg").string(), dir / "features.log");
        shell("count --manifest " + seq + "/sequence.manifest --model " +
              (dir / "model.txt").string(), dir / "count.txt");
        shell("eval-ap " + seq + "/sequence.manifest", dir / "eval.txt");
    }

    for (const char* name :
         {"seq/frame_000.pgm", "seq/frame_004.pgm", "seq/frame_008.pgm", "seq/frame_000.det.txt",
          "seq/frame_004.det.txt", "seq/frame_004.gt.txt", "seq/sequence.manifest",
          "seq/truth.txt", "model.txt", "features.csv", "features.svg", "count.txt", "eval.txt"}) {
        REQUIRE(slurp(root / "a" / name) == slurp(root / "b" / name),
                std::string("pipeline artifact differs between runs: ") + name);
    }

    std::error_code ec;
    fs::remove_all(root, ec);
    pass(10, "two seeded pipeline runs byte-identical across images, files and reports");
}

} // namespace

int main(int argc, char** argv) {
    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            selected = std::atoi(argv[++i]);
        } else if (arg.rfind("--criterion=", 0) == 0) {
            selected = std::atoi(arg.c_str() + 12);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (selected < 0 || selected > 10) {
        std::cerr << "usage: acceptance [--criterion N] with N in 1..10\n";
        return 2;
    }

    using Criterion = void (*)();
    const Criterion criteria[] = {
        criterion_fusion_closed_form, criterion_soft_suppression, criterion_regression_oracle,
        criterion_reference_model,    criterion_ap_oracle,        criterion_tiling,
        criterion_clarity,            criterion_protocol,         criterion_trend,
        criterion_determinism,
    };
    if (selected == 0) {
        for (const Criterion& fn : criteria) fn();
        std::cout << "[PASS] all criteria\n";
    } else {
        criteria[selected - 1]();
    }
    return 0;
}
