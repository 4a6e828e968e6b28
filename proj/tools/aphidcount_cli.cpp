// aphidcount: sequence simulation, tiled detection plumbing, feature
// extraction, confidence-model fitting, count fusion and AP evaluation in one
// binary. Exit codes: 0 success, 1 usage error, 2 data error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aphidcount/annotation_io.hpp"
#include "aphidcount/confidence_model.hpp"
#include "aphidcount/detection.hpp"
#include "aphidcount/errors.hpp"
#include "aphidcount/evaluation.hpp"
#include "aphidcount/fusion.hpp"
#include "aphidcount/grid_io.hpp"
#include "aphidcount/manifest.hpp"
#include "aphidcount/numio.hpp"
#include "aphidcount/pnm.hpp"
#include "aphidcount/sequence_pipeline.hpp"
#include "aphidcount/simulator.hpp"
#include "aphidcount/svg_plot.hpp"
#include "aphidcount/tiling.hpp"

namespace fs = std::filesystem;
using namespace aphid;

namespace {

std::string frame_stem(int index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "frame_%03d", index);
    return buf;
}

SuppressionConfig suppression_from(const std::string& mode, double iou_threshold, double sigma) {
    SuppressionConfig config;
    config.iou_threshold = iou_threshold;
    config.sigma = sigma;
    if (mode == "off")
        config.kind = SuppressionConfig::Kind::HardNms;
    else if (mode == "linear")
        config.kind = SuppressionConfig::Kind::SoftNmsLinear;
    else if (mode == "gaussian")
        config.kind = SuppressionConfig::Kind::SoftNmsGaussian;
    else
        throw CLI::ValidationError("--softnms", "must be off, linear or gaussian");
    return config;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParseError(ParseErrorKind::Io, path.string(), 0, "cannot open for writing");
    file << text;
    if (!file) throw ParseError(ParseErrorKind::Io, path.string(), 0, "write failed");
}

struct SimulateArgs {
    SimConfig config;
    std::string out_dir;
    std::string softnms = "gaussian";
    double sigma = 0.5;
    double nms_iou = 0.5;
    int peak_blur = 4;
};

void run_simulate(const SimulateArgs& args) {
    SimConfig config = args.config;
    if (config.blur_schedule.empty())
        config.blur_schedule = default_blur_schedule(config.frames, args.peak_blur);
    const SimulatedSequence seq = simulate_sequence(config);

    fs::create_directories(args.out_dir);
    const fs::path dir(args.out_dir);

    SequenceManifest manifest;
    for (int t = 0; t < config.frames; ++t) {
        const std::string stem = frame_stem(t);
        const auto& image = seq.frames[static_cast<std::size_t>(t)];
        save_pgm(image, (dir / (stem + ".pgm")).string());

        std::vector<Detection> dets = seq.detections[static_cast<std::size_t>(t)];
        if (args.softnms != "off")
            dets = suppress(dets, suppression_from(args.softnms, args.nms_iou, args.sigma));
        save_detections(dets, (dir / (stem + ".det.txt")).string(), image.width, image.height);
        save_ground_truth(seq.visible_gt[static_cast<std::size_t>(t)],
                          (dir / (stem + ".gt.txt")).string(), image.width, image.height);

        ManifestEntry entry;
        entry.frame_index = t;
        entry.image_path = stem + ".pgm";
        entry.detections_path = stem + ".det.txt";
        entry.gt_path = stem + ".gt.txt";
        manifest.entries.push_back(std::move(entry));
    }
    save_manifest(manifest, dir / "sequence.manifest");
    write_text(dir / "truth.txt", std::to_string(seq.true_count) + "\n");
    std::cout << "wrote " << config.frames << " frames to " << args.out_dir << "\n";
}

struct SliceArgs {
    std::string image_path;
    std::string gt_path;
    std::string out_dir;
    int tile_size = 640;
    double overlap = 0.2;
    bool filter_nonempty = false;
};

void run_slice(const SliceArgs& args) {
    const GrayImage image = load_pnm(args.image_path);
    std::vector<BoundingBox> gt;
    if (!args.gt_path.empty())
        gt = load_ground_truth(args.gt_path, image.width, image.height);

    const TileGrid grid = plan_tiles(image.width, image.height, args.tile_size, args.overlap);
    fs::create_directories(args.out_dir);
    const fs::path dir(args.out_dir);
    const std::string stem = fs::path(args.image_path).stem().string();

    int written = 0;
    for (int r = 0; r < grid.rows; ++r)
        for (int c = 0; c < grid.cols; ++c) {
            const Tile& tile = grid.at(r, c);
            std::vector<BoundingBox> local;
            for (const auto& box : gt)
                if (tile_contains_box(tile, box))
                    local.push_back(BoundingBox{box.xmin - tile.x0, box.ymin - tile.y0,
                                                box.xmax - tile.x0, box.ymax - tile.y0});
            if (args.filter_nonempty && local.empty()) continue;

            GrayImage crop;
            crop.width = tile.width;
            crop.height = tile.height;
            crop.pixels.resize(static_cast<std::size_t>(tile.width) * tile.height);
            for (int y = 0; y < tile.height; ++y)
                for (int x = 0; x < tile.width; ++x)
                    crop.pixels[static_cast<std::size_t>(y) * tile.width + x] =
                        image.at(tile.x0 + x, tile.y0 + y);

            const std::string tile_stem =
                stem + "_r" + std::to_string(r) + "_c" + std::to_string(c);
            save_pgm(crop, (dir / (tile_stem + ".pgm")).string());
            if (!args.gt_path.empty())
                save_ground_truth(local, (dir / (tile_stem + ".txt")).string(), tile.width,
                                  tile.height);
            ++written;
        }

    save_tile_grid(grid, dir / (stem + "_grid.txt"));
    std::cout << "wrote " << written << " of " << grid.rows * grid.cols << " tiles to "
              << args.out_dir << "\n";
}

struct MergeArgs {
    std::string grid_path;
    std::string out_path;
    std::vector<std::string> det_files;
    std::string softnms = "off";
    double sigma = 0.5;
    double iou_threshold = 0.5;
};

// "<anything>_r<row>_c<col>.<ext>" -> (row, col)
std::pair<int, int> tile_position_from_name(const std::string& path) {
    const std::string stem = fs::path(path).stem().string();
    const auto r_pos = stem.rfind("_r");
    const auto c_pos = stem.rfind("_c");
    if (r_pos == std::string::npos || c_pos == std::string::npos || c_pos <= r_pos)
        throw ParseError(ParseErrorKind::BadValue, path, 0,
                         "tile detection files must be named ..._r<row>_c<col>");
    try {
        const int row = std::stoi(stem.substr(r_pos + 2, c_pos - r_pos - 2));
        const int col = std::stoi(stem.substr(c_pos + 2));
        return {row, col};
    } catch (const std::exception&) {
        throw ParseError(ParseErrorKind::BadValue, path, 0,
                         "tile detection files must be named ..._r<row>_c<col>");
    }
}

void run_merge(const MergeArgs& args) {
    const TileGrid grid = load_tile_grid(args.grid_path);

    std::vector<std::pair<Tile, std::vector<Detection>>> per_tile;
    std::vector<bool> seen(grid.tiles.size(), false);
    for (const auto& file : args.det_files) {
        const auto [row, col] = tile_position_from_name(file);
        if (row < 0 || row >= grid.rows || col < 0 || col >= grid.cols)
            throw ParseError(ParseErrorKind::BadValue, file, 0, "tile position outside the grid");
        const std::size_t idx = static_cast<std::size_t>(row) * grid.cols + col;
        if (seen[idx])
            throw ParseError(ParseErrorKind::BadValue, file, 0, "duplicate tile detection file");
        seen[idx] = true;
        const Tile& tile = grid.at(row, col);
        per_tile.emplace_back(tile, load_detections(file, tile.width, tile.height));
    }

    const std::vector<Detection> merged =
        merge_tiles(per_tile, grid, suppression_from(args.softnms, args.iou_threshold, args.sigma));
    save_detections(merged, args.out_path, grid.image_width, grid.image_height);
    std::cout << "merged " << args.det_files.size() << " tiles, " << merged.size()
              << " detections\n";
}

struct FeaturesArgs {
    std::string manifest_path;
    std::string csv_path;
    std::string svg_path;
    std::string model_path;
    double conf_threshold = 0.25;
    double iou_threshold = 0.5;
};

void run_features(const FeaturesArgs& args) {
    const SequenceManifest manifest = load_manifest(args.manifest_path);
    const SequenceData data = load_sequence(manifest);

    std::optional<ConfidenceModel> model;
    if (!args.model_path.empty()) model = load_model(args.model_path);

    const FeatureTable table = build_feature_table(data, args.conf_threshold, args.iou_threshold,
                                                   model ? &*model : nullptr);
    const std::string csv = feature_csv(table);
    if (args.csv_path.empty())
        std::cout << csv;
    else
        write_text(args.csv_path, csv);

    if (!args.svg_path.empty()) {
        std::vector<PlotSeries> series{
            {"C (norm)", "#1f77b4", table.c_norm},
            {"N (norm)", "#ff7f0e", table.n_norm},
            {"G (norm)", "#2ca02c", table.g_norm},
        };
        if (table.r_label)
            series.push_back({"R (label)", "#d62728", *table.r_label});
        else if (table.r_pred)
            series.push_back({"R (predicted)", "#d62728", *table.r_pred});
        write_text(args.svg_path, render_line_chart(series, "Per-frame factors"));
    }
}

struct FitArgs {
    std::vector<std::string> manifest_paths;
    std::string out_path;
    bool average_sets = true;
    double conf_threshold = 0.25;
    double iou_threshold = 0.5;
};

void run_fit(const FitArgs& args) {
    std::vector<SequenceFeatures> sets;
    for (const auto& path : args.manifest_paths) {
        const SequenceManifest manifest = load_manifest(path);
        if (!manifest.has_ground_truth())
            throw ParseError(ParseErrorKind::MissingField, path, 0,
                             "fit needs ground truth on every frame");
        const SequenceData data = load_sequence(manifest);
        SequenceFeatures features =
            measure_sequence(data, args.conf_threshold, args.iou_threshold);
        features.c = minmax_normalize(features.c);
        features.n_count = minmax_normalize(features.n_count);
        features.g = minmax_normalize(features.g);
        sets.push_back(std::move(features));
    }

    std::vector<FeatureRow> rows;
    std::vector<double> targets;
    if (args.average_sets) {
        const AveragedFeatures avg = average_over_sets(sets);
        for (std::size_t i = 0; i < avg.c_bar.size(); ++i) {
            rows.push_back(FeatureRow{avg.c_bar[i], avg.g_bar[i], avg.n_bar[i]});
            targets.push_back(avg.r_bar[i]);
        }
    } else {
        for (const auto& set : sets)
            for (std::size_t i = 0; i < set.frames(); ++i) {
                rows.push_back(FeatureRow{set.c[i], set.g[i], set.n_count[i]});
                targets.push_back((*set.r)[i]);
            }
    }

    const ConfidenceModel model = fit_model(rows, targets);
    save_model_file(model, args.out_path);
    std::cout << "w0 " << format_double(model.w0) << "\nwC " << format_double(model.wC) << "\nwG "
              << format_double(model.wG) << "\nwN " << format_double(model.wN) << "\n";
}

struct CountArgs {
    std::string manifest_path;
    std::string model_path;
    double conf_threshold = 0.25;
};

void run_count(const CountArgs& args) {
    const SequenceManifest manifest = load_manifest(args.manifest_path);
    const SequenceData data = load_sequence(manifest);
    const ConfidenceModel model = load_model(args.model_path);
    const CountReport report = count_sequence(data, model, args.conf_threshold);

    // A human watching the stir counts the most aphids simultaneously
    // visible; that is the best manual reference per-frame boxes can give.
    std::optional<int> manual;
    if (data.ground_truth) {
        std::size_t best = 0;
        for (const auto& gt : *data.ground_truth) best = std::max(best, gt.size());
        manual = static_cast<int>(best);
    }

    char fused[32];
    std::snprintf(fused, sizeof fused, "%.6f", report.fused_real);
    std::cout << "static max fused_real fused_int" << (manual ? " manual" : "") << "\n";
    std::cout << report.static_count << ' ' << report.max_count << ' ' << fused << ' '
              << report.fused_int;
    if (manual) std::cout << ' ' << *manual;
    std::cout << "\n";
}

struct EvalApArgs {
    std::vector<std::string> manifest_paths;
    double iou_threshold = 0.5;
};

void run_eval_ap(const EvalApArgs& args) {
    std::vector<ImageDetection> dets;
    std::vector<ImageGroundTruth> gts;
    int image_id = 0;
    for (const auto& path : args.manifest_paths) {
        const SequenceManifest manifest = load_manifest(path);
        if (!manifest.has_ground_truth())
            throw ParseError(ParseErrorKind::MissingField, path, 0,
                             "eval-ap needs ground truth on every frame");
        const SequenceData data = load_sequence(manifest);
        for (std::size_t i = 0; i < data.frames(); ++i) {
            for (const auto& det : data.detections[i]) dets.push_back({image_id, det});
            for (const auto& box : (*data.ground_truth)[i]) gts.push_back({image_id, box});
            ++image_id;
        }
    }

    const double ap50 = average_precision(dets, gts, args.iou_threshold);
    const double ap_range = average_precision_range(dets, gts);
    char line[64];
    std::snprintf(line, sizeof line, "AP@0.5 %.1f\n", 100.0 * ap50);
    std::cout << line;
    std::snprintf(line, sizeof line, "AP@[0.5:0.95] %.1f\n", 100.0 * ap_range);
    std::cout << line;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"aphid counting pipeline: simulate, slice, merge, features, fit, count, eval-ap"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "generate a stirring sequence with detections");
    simulate->add_option("--seed", sim.config.seed, "random seed");
    simulate->add_option("--frames", sim.config.frames, "frames in the sequence")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--true-count", sim.config.true_count, "aphids in the trap")
        ->check(CLI::NonNegativeNumber);
    simulate->add_option("--hidden-fraction", sim.config.hidden_fraction_initial,
                         "initially submerged fraction");
    simulate->add_option("--image-size", sim.config.image_width, "square frame size in pixels");
    simulate->add_option("--trap-radius", sim.config.trap_radius, "trap disk radius in pixels");
    simulate->add_option("--surface-rate", sim.config.surface_rate,
                         "per stir frame surfacing probability");
    simulate->add_option("--resubmerge-rate", sim.config.resubmerge_rate,
                         "per frame resubmerge probability");
    simulate->add_option("--noise-sigma", sim.config.noise_sigma, "additive pixel noise sigma");
    simulate->add_option("--peak-blur", sim.peak_blur, "mid-sequence blur radius");
    simulate->add_option("--softnms", sim.softnms, "detector post-processing: off|linear|gaussian")
        ->check(CLI::IsMember({"off", "linear", "gaussian"}));
    simulate->add_option("--sigma", sim.sigma, "gaussian soft-NMS decay");
    simulate->add_option("--iou-threshold", sim.nms_iou, "suppression IoU threshold");
    simulate->add_option("--out-dir", sim.out_dir, "output directory")->required();
    simulate->callback([&] {
        sim.config.image_height = sim.config.image_width;
        run_simulate(sim);
    });

    SliceArgs slice;
    auto* slice_cmd = app.add_subcommand("slice", "split an image (and ground truth) into tiles");
    slice_cmd->add_option("--image", slice.image_path, "input image (P5/P2/P6)")->required();
    slice_cmd->add_option("--gt", slice.gt_path, "ground-truth boxes for the image");
    slice_cmd->add_option("--tile-size", slice.tile_size, "tile side in pixels");
    slice_cmd->add_option("--overlap", slice.overlap, "overlap fraction between tiles");
    slice_cmd->add_flag("--filter-nonempty", slice.filter_nonempty,
                        "write only tiles containing at least one ground-truth box");
    slice_cmd->add_option("--out-dir", slice.out_dir, "output directory")->required();
    slice_cmd->callback([&] { run_slice(slice); });

    MergeArgs merge;
    auto* merge_cmd =
        app.add_subcommand("merge", "map per-tile detections back to image coordinates");
    merge_cmd->add_option("--grid", merge.grid_path, "grid file written by slice")->required();
    merge_cmd->add_option("--out", merge.out_path, "merged detections output")->required();
    merge_cmd->add_option("--softnms", merge.softnms,
                          "cross-tile suppression: off (hard NMS)|linear|gaussian")
        ->check(CLI::IsMember({"off", "linear", "gaussian"}));
    merge_cmd->add_option("--sigma", merge.sigma, "gaussian soft-NMS decay");
    merge_cmd->add_option("--iou-threshold", merge.iou_threshold, "suppression IoU threshold");
    merge_cmd->add_option("files", merge.det_files, "per-tile detection files (..._r<R>_c<C>.txt)")
        ->required();
    merge_cmd->callback([&] { run_merge(merge); });

    FeaturesArgs features;
    auto* features_cmd =
        app.add_subcommand("features", "per-frame factor table (C, N, G) for a sequence");
    features_cmd->add_option("--manifest", features.manifest_path, "sequence manifest")
        ->required();
    features_cmd->add_option("--csv", features.csv_path, "CSV output path (default: stdout)");
    features_cmd->add_option("--svg-plot", features.svg_path, "factor curve plot output");
    features_cmd->add_option("--model", features.model_path,
                             "confidence model for predicted R column");
    features_cmd->add_option("--conf-threshold", features.conf_threshold,
                             "count threshold on detection confidence");
    features_cmd->add_option("--iou-threshold", features.iou_threshold,
                             "matching threshold for R labels");
    features_cmd->callback([&] { run_features(features); });

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "fit the counting-confidence regression");
    fit_cmd->add_option("manifests", fit.manifest_paths, "training sequence manifests (with gt)")
        ->required();
    fit_cmd->add_option("--out", fit.out_path, "model file to write")->required();
    fit_cmd->add_flag("--average-sets,!--no-average-sets", fit.average_sets,
                      "average factors across sets per time index before fitting");
    fit_cmd->add_option("--conf-threshold", fit.conf_threshold,
                        "count threshold on detection confidence");
    fit_cmd->add_option("--iou-threshold", fit.iou_threshold, "matching threshold for R labels");
    fit_cmd->callback([&] { run_fit(fit); });

    CountArgs count;
    auto* count_cmd = app.add_subcommand("count", "static, max and fused counts for a sequence");
    count_cmd->add_option("--manifest", count.manifest_path, "sequence manifest")->required();
    count_cmd->add_option("--model", count.model_path, "confidence model file")->required();
    count_cmd->add_option("--conf-threshold", count.conf_threshold,
                          "count threshold on detection confidence");
    count_cmd->callback([&] { run_count(count); });

    EvalApArgs eval_ap;
    auto* eval_cmd = app.add_subcommand("eval-ap", "average precision over annotated sequences");
    eval_cmd->add_option("manifests", eval_ap.manifest_paths, "sequence manifests (with gt)")
        ->required();
    eval_cmd->add_option("--iou-threshold", eval_ap.iou_threshold, "primary AP matching threshold");
    eval_cmd->callback([&] { run_eval_ap(eval_ap); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
