#pragma once

#include <cstdint>
#include <vector>

namespace aphid {

/// Row-major 8-bit luma raster. Math on pixel values promotes to double.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; ///< size == width * height

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }

    bool operator==(const GrayImage&) const = default;
};

/// Mean filter over a (2r+1)^2 window, window clipped at the borders and
/// normalized by its actual size. radius 0 is the identity. Separable
/// two-pass implementation; output is re-quantized to 8 bits.
GrayImage box_blur(const GrayImage& img, int radius);

} // namespace aphid
