#pragma once

#include <vector>

#include "aphidcount/detection.hpp"

namespace aphid {

struct Tile {
    int x0 = 0;
    int y0 = 0;
    int width = 0;
    int height = 0;

    bool operator==(const Tile&) const = default;
};

/// Overlapping tile cover of an image, row-major. Tiles never extend past
/// the image: edge tiles are clamped back, which can only grow the overlap.
struct TileGrid {
    int image_width = 0;
    int image_height = 0;
    int tile_size = 0;
    double overlap_fraction = 0.0;
    int cols = 0;
    int rows = 0;
    std::vector<Tile> tiles; ///< rows * cols entries, row-major

    const Tile& at(int row, int col) const { return tiles[static_cast<std::size_t>(row) * cols + col]; }
};

/// Plans the tile cover: stride = floor(tile_size * (1 - overlap_fraction)),
/// origins at 0, stride, 2*stride, ... per axis; a tile that would cross the
/// image edge is clamped so its far edge lands on the edge. A dimension
/// smaller than tile_size yields a single full-dimension tile on that axis.
///
/// Throws std::invalid_argument for non-positive dimensions or tile size, or
/// overlap_fraction outside [0, 1).
TileGrid plan_tiles(int image_width, int image_height, int tile_size, double overlap_fraction);

/// Tile-local detection translated into image coordinates. Confidence and
/// class are untouched.
Detection to_global(const Detection& det, const Tile& tile);

/// Remaps every per-tile detection into image coordinates, concatenates, and
/// removes cross-tile duplicates with the chosen suppression pass. Default is
/// hard NMS at IoU 0.5.
std::vector<Detection> merge_tiles(
    const std::vector<std::pair<Tile, std::vector<Detection>>>& per_tile,
    const TileGrid& grid,
    const SuppressionConfig& suppression = {});

/// True when the box lies fully inside the tile (edges inclusive). This is
/// the assignment rule the slicer uses for ground truth: a box in an overlap
/// band is emitted for every tile that fully contains it.
bool tile_contains_box(const Tile& tile, const BoundingBox& box);

} // namespace aphid
