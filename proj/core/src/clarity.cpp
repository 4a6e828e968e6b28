#include "aphidcount/clarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aphid {

namespace {

double central_difference_mean(const GrayImage& img) {
    const int w = img.width, h = img.height;
    auto px = [&](int x, int y) { return static_cast<double>(img.at(x, y)); };

    double sum = 0.0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double gx, gy;
            if (x == 0)          gx = px(1, y) - px(0, y);
            else if (x == w - 1) gx = px(w - 1, y) - px(w - 2, y);
            else                 gx = (px(x + 1, y) - px(x - 1, y)) / 2.0;

            if (y == 0)          gy = px(x, 1) - px(x, 0);
            else if (y == h - 1) gy = px(x, h - 1) - px(x, h - 2);
            else                 gy = (px(x, y + 1) - px(x, y - 1)) / 2.0;

            sum += std::sqrt(gx * gx + gy * gy);
        }
    }
    return sum / (static_cast<double>(w) * h);
}

double sobel_mean(const GrayImage& img) {
    const int w = img.width, h = img.height;
    auto px = [&](int x, int y) {
        x = std::clamp(x, 0, w - 1);
        y = std::clamp(y, 0, h - 1);
        return static_cast<double>(img.at(x, y));
    };

    double sum = 0.0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double gx = (px(x + 1, y - 1) + 2.0 * px(x + 1, y) + px(x + 1, y + 1) -
                               px(x - 1, y - 1) - 2.0 * px(x - 1, y) - px(x - 1, y + 1)) / 8.0;
            const double gy = (px(x - 1, y + 1) + 2.0 * px(x, y + 1) + px(x + 1, y + 1) -
                               px(x - 1, y - 1) - 2.0 * px(x, y - 1) - px(x + 1, y - 1)) / 8.0;
            sum += std::sqrt(gx * gx + gy * gy);
        }
    }
    return sum / (static_cast<double>(w) * h);
}

} // namespace

double average_gradient_magnitude(const GrayImage& img, GradientKernel kernel) {
    if (img.width < 2 || img.height < 2) {
        throw std::invalid_argument("average_gradient_magnitude: image must be at least 2x2");
    }
    return kernel == GradientKernel::CentralDifference ? central_difference_mean(img)
                                                       : sobel_mean(img);
}

} // namespace aphid
