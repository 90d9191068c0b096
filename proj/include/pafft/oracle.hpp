#pragma once

#include "pafft/core.hpp"

namespace pafft::oracle {

// Brute-force references for the fast paths. Deliberately slow and simple:
// no twiddle tables, no reordering, no shared code with the kernels. Meant
// for totals up to a few thousand elements.

enum class Direction {
    forward,
    backward,
};

// Quadratic-time DFT of one line: y_j = sum_k exp(-+2*pi*i*j*k/n) * x_k,
// each factor evaluated directly, terms summed in index order. The backward
// direction flips the exponent sign and divides by n.
ComplexBuffer naive_dft(const ComplexBuffer& x, Direction dir);

// Applies the quadratic DFT along every mode's fibers in turn; the backward
// direction divides by the total size once at the end.
ComplexBuffer naive_dft_tensor(const ComplexBuffer& x, const TensorShape& shape,
                               Direction dir);

// Direct circular-convolution sum, modular per mode:
// y[i] = sum_j h[j] * x[(i - j) mod shape].
ComplexBuffer naive_circular_convolution(const ComplexBuffer& x, const ComplexBuffer& h,
                                         const TensorShape& shape);

}  // namespace pafft::oracle
