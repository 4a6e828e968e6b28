#pragma once

#include <string>
#include <vector>

#include "aphidcount/detection.hpp"

namespace aphid {

/// Detection and ground-truth text files, one record per line:
///
///   detections:   class_id cx cy w h confidence
///   ground truth: class_id cx cy w h
///
/// cx, cy, w, h are box center and size normalized to [0, 1] by the image
/// dimensions; '.' decimal point, '\n' line ends. Readers need the pixel
/// dimensions to recover corner-form boxes.

std::vector<Detection> parse_detections(const std::string& text, int image_width,
                                        int image_height, const std::string& origin = "");

std::vector<BoundingBox> parse_ground_truth(const std::string& text, int image_width,
                                            int image_height, const std::string& origin = "");

std::vector<Detection> load_detections(const std::string& path, int image_width, int image_height);

std::vector<BoundingBox> load_ground_truth(const std::string& path, int image_width,
                                           int image_height);

std::string format_detections(const std::vector<Detection>& dets, int image_width,
                              int image_height);

std::string format_ground_truth(const std::vector<BoundingBox>& boxes, int image_width,
                                int image_height);

void save_detections(const std::vector<Detection>& dets, const std::string& path,
                     int image_width, int image_height);

void save_ground_truth(const std::vector<BoundingBox>& boxes, const std::string& path,
                       int image_width, int image_height);

} // namespace aphid
