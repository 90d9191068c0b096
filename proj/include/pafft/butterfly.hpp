#pragma once

#include "pafft/core.hpp"

namespace pafft {

// The three stage-ladder flavours. `forward` runs stages ascending and
// produces the DFT of a digit-reversed input; `conjugate` is its complex
// conjugate (the inverse up to 1/n); `transposed` runs stages descending
// and produces a digit-reversed DFT of a naturally ordered input.
enum class ButterflyVariant {
    forward,
    conjugate,
    transposed,
};

// The two scaled eighth roots of unity the radix-8 kernels need:
// a = (1 - i)/sqrt(2), b = -(1 + i)/sqrt(2); note b == -i * a.
struct Radix8Constants {
    static constexpr double inv_sqrt2 = 0.70710678118654752440;
    static constexpr double a_re = inv_sqrt2;
    static constexpr double a_im = -inv_sqrt2;
    static constexpr double b_re = -inv_sqrt2;
    static constexpr double b_im = -inv_sqrt2;
};

// One-dimensional stage ladders over a standalone line buffer whose length
// equals dimension `dim` of the plan (ShapeMismatch otherwise).
void butterfly_forward(ComplexBuffer& x, const Plan& plan, std::size_t dim);
void butterfly_conjugate(ComplexBuffer& x, const Plan& plan, std::size_t dim);
void butterfly_transposed(ComplexBuffer& x, const Plan& plan, std::size_t dim);

// Applies the chosen 1-D variant along every mode, ascending (the contiguous
// mode first). Mode 1 runs in place on contiguous lines; higher modes gather
// each strided fiber into one scratch line, run the kernel, and scatter back.
// Throws LengthMismatch when the buffer length differs from the plan total.
void butterfly_tensor(ComplexBuffer& x, const Plan& plan, ButterflyVariant variant);

}  // namespace pafft
