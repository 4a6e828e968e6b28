#include "aphidcount/confidence_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "aphidcount/clarity.hpp"
#include "aphidcount/errors.hpp"
#include "aphidcount/numio.hpp"

namespace aphid {

SequenceFeatures extract_features(
    const std::vector<std::pair<GrayImage, std::vector<Detection>>>& frames,
    double confidence_threshold) {
    if (frames.empty()) {
        throw std::invalid_argument("extract_features: need at least one frame");
    }
    SequenceFeatures features;
    features.c.reserve(frames.size());
    features.n_count.reserve(frames.size());
    features.g.reserve(frames.size());
    for (const auto& [image, dets] : frames) {
        features.c.push_back(mean_box_confidence(dets));
        features.n_count.push_back(count_detections(dets, confidence_threshold));
        features.g.push_back(average_gradient_magnitude(image));
    }
    return features;
}

std::vector<double> minmax_normalize(const std::vector<double>& values) {
    if (values.empty()) {
        throw std::invalid_argument("minmax_normalize: empty input");
    }
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;
    std::vector<double> out(values.size());
    if (hi == lo) {
        std::fill(out.begin(), out.end(), 0.5);
        return out;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = (values[i] - lo) / (hi - lo);
    }
    return out;
}

AveragedFeatures average_over_sets(const std::vector<SequenceFeatures>& sets) {
    if (sets.empty()) {
        throw std::invalid_argument("average_over_sets: need at least one set");
    }
    const std::size_t n = sets.front().frames();
    for (const auto& set : sets) {
        if (set.frames() != n) {
            throw std::invalid_argument("average_over_sets: sequence lengths differ");
        }
        if (!set.r.has_value() || set.r->size() != n) {
            throw std::invalid_argument("average_over_sets: every set needs labels");
        }
    }

    AveragedFeatures avg;
    avg.c_bar.assign(n, 0.0);
    avg.n_bar.assign(n, 0.0);
    avg.g_bar.assign(n, 0.0);
    avg.r_bar.assign(n, 0.0);
    for (const auto& set : sets) {
        for (std::size_t t = 0; t < n; ++t) {
            avg.c_bar[t] += set.c[t];
            avg.n_bar[t] += set.n_count[t];
            avg.g_bar[t] += set.g[t];
            avg.r_bar[t] += (*set.r)[t];
        }
    }
    const double m = static_cast<double>(sets.size());
    for (std::size_t t = 0; t < n; ++t) {
        avg.c_bar[t] /= m;
        avg.n_bar[t] /= m;
        avg.g_bar[t] /= m;
        avg.r_bar[t] /= m;
    }
    return avg;
}

ConfidenceModel fit_model(const std::vector<FeatureRow>& rows,
                          const std::vector<double>& targets) {
    if (rows.size() != targets.size()) {
        throw std::invalid_argument("fit_model: rows and targets differ in length");
    }
    if (rows.size() < 4) {
        throw std::invalid_argument("fit_model: need at least 4 rows for 4 unknowns");
    }

    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd design(n, 4);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        design(i, 0) = 1.0;
        design(i, 1) = rows[static_cast<std::size_t>(i)].c;
        design(i, 2) = rows[static_cast<std::size_t>(i)].g;
        design(i, 3) = rows[static_cast<std::size_t>(i)].n;
        y(i) = targets[static_cast<std::size_t>(i)];
    }

    // Complete orthogonal decomposition: least-squares solution, and the
    // minimum-norm one when the design is rank deficient.
    const Eigen::VectorXd weights = design.completeOrthogonalDecomposition().solve(y);
    const Eigen::VectorXd residual = y - design * weights;

    ConfidenceModel model;
    model.w0 = weights(0);
    model.wC = weights(1);
    model.wG = weights(2);
    model.wN = weights(3);
    model.residuals.assign(residual.data(), residual.data() + residual.size());
    return model;
}

double predict_confidence(const ConfidenceModel& model, double c, double g, double n) {
    const double raw = model.w0 + model.wC * c + model.wG * g + model.wN * n;
    return std::clamp(raw, 0.0, 1.0);
}

std::string save_model(const ConfidenceModel& model) {
    for (double w : {model.w0, model.wC, model.wG, model.wN}) {
        if (!std::isfinite(w)) {
            throw std::invalid_argument("save_model: non-finite weight");
        }
    }
    std::string out;
    out += "format_version 1\n";
    out += "feature_order C,G,N\n";
    out += "w0 " + format_double(model.w0) + "\n";
    out += "wC " + format_double(model.wC) + "\n";
    out += "wG " + format_double(model.wG) + "\n";
    out += "wN " + format_double(model.wN) + "\n";
    out += "residuals";
    for (std::size_t i = 0; i < model.residuals.size(); ++i) {
        out += i == 0 ? " " : ",";
        out += format_double(model.residuals[i]);
    }
    out += "\n";
    return out;
}

ConfidenceModel parse_model(const std::string& text, const std::string& origin) {
    ConfidenceModel model;
    bool seen_version = false, seen_order = false, seen_w0 = false, seen_wc = false,
         seen_wg = false, seen_wn = false, seen_residuals = false;

    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto space = line.find(' ');
        const std::string key = line.substr(0, space);
        const std::string value = space == std::string::npos ? "" : line.substr(space + 1);

        if (key == "format_version") {
            if (value != "1") {
                throw ParseError(ParseErrorKind::MalformedDocument, origin, line_no,
                                 "model file: unsupported format_version '" + value + "'");
            }
            seen_version = true;
        } else if (key == "feature_order") {
            if (value != "C,G,N") {
                throw ParseError(ParseErrorKind::MalformedDocument, origin, line_no,
                                 "model file: feature_order must be C,G,N");
            }
            seen_order = true;
        } else if (key == "w0") {
            model.w0 = parse_double(value, origin, line_no);
            seen_w0 = true;
        } else if (key == "wC") {
            model.wC = parse_double(value, origin, line_no);
            seen_wc = true;
        } else if (key == "wG") {
            model.wG = parse_double(value, origin, line_no);
            seen_wg = true;
        } else if (key == "wN") {
            model.wN = parse_double(value, origin, line_no);
            seen_wn = true;
        } else if (key == "residuals") {
            model.residuals.clear();
            if (!value.empty()) {
                std::size_t start = 0;
                while (start <= value.size()) {
                    const auto comma = value.find(',', start);
                    const std::string tok =
                        value.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
                    model.residuals.push_back(parse_double(tok, origin, line_no));
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            }
            seen_residuals = true;
        } else {
            throw ParseError(ParseErrorKind::MalformedDocument, origin, line_no,
                             "model file: unknown key '" + key + "'");
        }
    }

    const std::pair<bool, const char*> required[] = {
        {seen_version, "format_version"}, {seen_order, "feature_order"}, {seen_w0, "w0"},
        {seen_wc, "wC"},                  {seen_wg, "wG"},               {seen_wn, "wN"},
        {seen_residuals, "residuals"},
    };
    for (const auto& [seen, name] : required) {
        if (!seen) {
            throw ParseError(ParseErrorKind::MissingField, origin, 0,
                             std::string("model file: missing field ") + name);
        }
    }
    return model;
}

ConfidenceModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(ParseErrorKind::Io, path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str(), path);
}

void save_model_file(const ConfidenceModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError(ParseErrorKind::Io, path, 0, "cannot open file for writing");
    out << save_model(model);
    if (!out) throw ParseError(ParseErrorKind::Io, path, 0, "short write");
}

} // namespace aphid
