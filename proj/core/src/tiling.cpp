#include "aphidcount/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aphid {

namespace {

// Tile origins along one axis of length `extent`.
std::vector<int> axis_origins(int extent, int tile_size, int stride) {
    if (extent <= tile_size) return {0};
    std::vector<int> origins;
    int pos = 0;
    for (;;) {
        if (pos + tile_size >= extent) {
            origins.push_back(extent - tile_size); // clamp the last tile to the edge
            break;
        }
        origins.push_back(pos);
        pos += stride;
    }
    return origins;
}

} // namespace

TileGrid plan_tiles(int image_width, int image_height, int tile_size, double overlap_fraction) {
    if (image_width <= 0 || image_height <= 0) {
        throw std::invalid_argument("plan_tiles: image dimensions must be positive");
    }
    if (tile_size <= 0) {
        throw std::invalid_argument("plan_tiles: tile_size must be positive");
    }
    if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0)) {
        throw std::invalid_argument("plan_tiles: overlap_fraction must be in [0, 1)");
    }

    const int stride =
        std::max(1, static_cast<int>(std::floor(tile_size * (1.0 - overlap_fraction))));

    const auto xs = axis_origins(image_width, tile_size, stride);
    const auto ys = axis_origins(image_height, tile_size, stride);

    TileGrid grid;
    grid.image_width = image_width;
    grid.image_height = image_height;
    grid.tile_size = tile_size;
    grid.overlap_fraction = overlap_fraction;
    grid.cols = static_cast<int>(xs.size());
    grid.rows = static_cast<int>(ys.size());
    grid.tiles.reserve(xs.size() * ys.size());
    for (int y : ys) {
        for (int x : xs) {
            grid.tiles.push_back(Tile{x, y,
                                      std::min(tile_size, image_width),
                                      std::min(tile_size, image_height)});
        }
    }
    return grid;
}

Detection to_global(const Detection& det, const Tile& tile) {
    Detection out = det;
    out.box.xmin += tile.x0;
    out.box.xmax += tile.x0;
    out.box.ymin += tile.y0;
    out.box.ymax += tile.y0;
    return out;
}

std::vector<Detection> merge_tiles(
    const std::vector<std::pair<Tile, std::vector<Detection>>>& per_tile,
    const TileGrid& grid,
    const SuppressionConfig& suppression) {
    (void)grid;
    std::vector<Detection> pooled;
    for (const auto& [tile, dets] : per_tile) {
        for (const auto& det : dets) pooled.push_back(to_global(det, tile));
    }
    return suppress(pooled, suppression);
}

bool tile_contains_box(const Tile& tile, const BoundingBox& box) {
    return box.xmin >= tile.x0 && box.ymin >= tile.y0 &&
           box.xmax <= tile.x0 + tile.width && box.ymax <= tile.y0 + tile.height;
}

} // namespace aphid
