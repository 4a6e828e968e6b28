#pragma once

#include <filesystem>
#include <string>

#include "aphidcount/tiling.hpp"

namespace aphid {

/// Text form of a tiling layout, written next to sliced tiles so a later
/// merge can map per-tile detections back to image coordinates:
///
///   image_width <w>
///   image_height <h>
///   tile_size <s>
///   overlap <f>
///   tile <row> <col> <x0> <y0> <width> <height>
///   ...
std::string format_tile_grid(const TileGrid& grid);
TileGrid parse_tile_grid(const std::string& text, const std::string& origin);

TileGrid load_tile_grid(const std::filesystem::path& path);
void save_tile_grid(const TileGrid& grid, const std::filesystem::path& path);

} // namespace aphid
