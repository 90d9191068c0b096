#pragma once

#include <cmath>
#include <cstddef>

namespace pafft {

// Comparison tolerances used by the verification suites and tests. Absolute,
// per component, scaled by input magnitude and a slowly growing size factor.

// Transform results at total size n against a reference:
inline double transform_tolerance(std::size_t n, double max_abs_x) {
    return 1e-12 * std::log2(static_cast<double>(n)) * max_abs_x;
}

// Convolution results at total size n, input magnitude max|x|, impulse
// response magnitude max|h|:
inline double convolution_tolerance(std::size_t n, double max_abs_x, double max_abs_h) {
    return 1e-10 * std::sqrt(static_cast<double>(n)) * max_abs_x * max_abs_h;
}

}  // namespace pafft
