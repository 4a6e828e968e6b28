#pragma once

#include <string>

#include "aphidcount/image.hpp"

namespace aphid {

/// Decode a netpbm buffer into a gray image. Supported, bit-exact: binary
/// graymap "P5", binary pixmap "P6" and ASCII graymap "P2", maxval <= 255,
/// '#' comments permitted between header tokens. Pixmap samples convert to
/// luma as round(0.299 R + 0.587 G + 0.114 B). Sample values are stored as
/// read; maxval below 255 is not rescaled.
///
/// Throws ParseError with kind MalformedHeader, TruncatedPayload,
/// UnsupportedMaxval or BadValue.
GrayImage decode_pnm(const std::string& bytes, const std::string& origin = "");

GrayImage load_pnm(const std::string& path);

/// Binary graymap ("P5", maxval 255) encoding of the image.
std::string encode_pgm(const GrayImage& img);

void save_pgm(const GrayImage& img, const std::string& path);

} // namespace aphid
