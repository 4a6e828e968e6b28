#include "aphidcount/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aphid {

namespace {

// One horizontal pass of the clipped-window mean, rows independent.
void blur_rows(const std::vector<double>& src, std::vector<double>& dst, int w, int h, int r) {
    for (int y = 0; y < h; ++y) {
        const double* row = src.data() + static_cast<std::size_t>(y) * w;
        double* out = dst.data() + static_cast<std::size_t>(y) * w;
        double sum = 0.0;
        int lo = 0, hi = -1; // current window [lo, hi]
        for (int x = 0; x < w; ++x) {
            const int want_lo = std::max(0, x - r);
            const int want_hi = std::min(w - 1, x + r);
            while (hi < want_hi) sum += row[++hi];
            while (lo < want_lo) sum -= row[lo++];
            out[x] = sum / static_cast<double>(hi - lo + 1);
        }
    }
}

void blur_cols(const std::vector<double>& src, std::vector<double>& dst, int w, int h, int r) {
    for (int x = 0; x < w; ++x) {
        double sum = 0.0;
        int lo = 0, hi = -1;
        for (int y = 0; y < h; ++y) {
            const int want_lo = std::max(0, y - r);
            const int want_hi = std::min(h - 1, y + r);
            while (hi < want_hi) { ++hi; sum += src[static_cast<std::size_t>(hi) * w + x]; }
            while (lo < want_lo) { sum -= src[static_cast<std::size_t>(lo) * w + x]; ++lo; }
            dst[static_cast<std::size_t>(y) * w + x] = sum / static_cast<double>(hi - lo + 1);
        }
    }
}

} // namespace

GrayImage box_blur(const GrayImage& img, int radius) {
    if (radius < 0) throw std::invalid_argument("box_blur: radius must be >= 0");
    if (radius == 0) return img;

    const int w = img.width, h = img.height;
    std::vector<double> a(img.pixels.begin(), img.pixels.end());
    std::vector<double> b(a.size());
    blur_rows(a, b, w, h, radius);
    blur_cols(b, a, w, h, radius);

    GrayImage out(w, h);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double v = std::round(a[i]);
        out.pixels[i] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
    return out;
}

} // namespace aphid
