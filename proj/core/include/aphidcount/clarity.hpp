#pragma once

#include "aphidcount/image.hpp"

namespace aphid {

enum class GradientKernel {
    CentralDifference, ///< (I(x+1) - I(x-1)) / 2 interior, one-sided at borders
    Sobel3x3           ///< classic 3x3 kernels, replicated borders, /8 scale
};

/// Image clarity as the mean per-pixel gradient magnitude
/// sqrt(grad_x^2 + grad_y^2), averaged over all width*height pixels.
/// Blur lowers it; a constant image scores exactly 0. Accumulation is plain
/// row-major left-to-right, so the result is bitwise deterministic.
///
/// Throws std::invalid_argument for images narrower or shorter than 2 pixels.
double average_gradient_magnitude(const GrayImage& img,
                                  GradientKernel kernel = GradientKernel::CentralDifference);

} // namespace aphid
