#include "aphidcount/grid_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "aphidcount/errors.hpp"
#include "aphidcount/numio.hpp"

namespace aphid {

std::string format_tile_grid(const TileGrid& grid) {
    std::ostringstream out;
    out << "image_width " << grid.image_width << '\n';
    out << "image_height " << grid.image_height << '\n';
    out << "tile_size " << grid.tile_size << '\n';
    out << "overlap " << format_double(grid.overlap_fraction) << '\n';
    for (int r = 0; r < grid.rows; ++r)
        for (int c = 0; c < grid.cols; ++c) {
            const Tile& t = grid.at(r, c);
            out << "tile " << r << ' ' << c << ' ' << t.x0 << ' ' << t.y0 << ' ' << t.width << ' '
                << t.height << '\n';
        }
    return out.str();
}

TileGrid parse_tile_grid(const std::string& text, const std::string& origin) {
    TileGrid grid;
    bool saw_width = false, saw_height = false, saw_size = false, saw_overlap = false;
    std::vector<std::pair<std::pair<int, int>, Tile>> tiles;

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string key;
        fields >> key;
        auto require = [&](auto& value, const char* what) {
            if (!(fields >> value))
                throw ParseError(ParseErrorKind::MalformedDocument, origin, line_no,
                                 std::string("bad ") + what);
        };
        if (key == "image_width") {
            require(grid.image_width, "image_width");
            saw_width = true;
        } else if (key == "image_height") {
            require(grid.image_height, "image_height");
            saw_height = true;
        } else if (key == "tile_size") {
            require(grid.tile_size, "tile_size");
            saw_size = true;
        } else if (key == "overlap") {
            require(grid.overlap_fraction, "overlap");
            saw_overlap = true;
        } else if (key == "tile") {
            int row = 0, col = 0;
            Tile t;
            require(row, "tile row");
            require(col, "tile col");
            require(t.x0, "tile x0");
            require(t.y0, "tile y0");
            require(t.width, "tile width");
            require(t.height, "tile height");
            tiles.push_back({{row, col}, t});
        } else {
            throw ParseError(ParseErrorKind::MalformedDocument, origin, line_no,
                             "unknown grid key: " + key);
        }
        std::string extra;
        if (fields >> extra)
            throw ParseError(ParseErrorKind::MalformedDocument, origin, line_no,
                             "trailing fields on grid line");
    }

    if (!saw_width || !saw_height || !saw_size || !saw_overlap)
        throw ParseError(ParseErrorKind::MissingField, origin, line_no,
                         "grid header needs image_width, image_height, tile_size, overlap");
    if (tiles.empty())
        throw ParseError(ParseErrorKind::MalformedDocument, origin, line_no, "grid has no tiles");

    int max_row = 0, max_col = 0;
    for (const auto& [rc, t] : tiles) {
        max_row = std::max(max_row, rc.first);
        max_col = std::max(max_col, rc.second);
    }
    grid.rows = max_row + 1;
    grid.cols = max_col + 1;
    grid.tiles.assign(static_cast<std::size_t>(grid.rows) * grid.cols, Tile{});
    std::vector<bool> seen(grid.tiles.size(), false);
    for (const auto& [rc, t] : tiles) {
        const auto [row, col] = rc;
        if (row < 0 || col < 0)
            throw ParseError(ParseErrorKind::BadValue, origin, 0, "negative tile position");
        const std::size_t idx = static_cast<std::size_t>(row) * grid.cols + col;
        if (seen[idx])
            throw ParseError(ParseErrorKind::BadValue, origin, 0,
                             "duplicate tile " + std::to_string(row) + "," + std::to_string(col));
        seen[idx] = true;
        grid.tiles[idx] = t;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw ParseError(ParseErrorKind::MissingField, origin, 0,
                             "grid is missing a tile entry");
    return grid;
}

TileGrid load_tile_grid(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError(ParseErrorKind::Io, path.string(), 0, "cannot open grid file");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_tile_grid(buffer.str(), path.string());
}

void save_tile_grid(const TileGrid& grid, const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParseError(ParseErrorKind::Io, path.string(), 0, "cannot write grid file");
    file << format_tile_grid(grid);
}

} // namespace aphid
