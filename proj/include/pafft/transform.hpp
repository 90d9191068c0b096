#pragma once

#include "pafft/core.hpp"

namespace pafft {

// Full d-dimensional DFT in natural order: digit-reversal pass, then the
// forward stage ladders. Throws LengthMismatch on buffer/plan size mismatch.
void fft_forward(ComplexBuffer& x, const Plan& plan);

// Inverse DFT in natural order: digit-reversal pass, conjugate ladders, then
// one separate sweep scaling by 1/(n_1*...*n_d).
void fft_backward(ComplexBuffer& x, const Plan& plan);

// Stage ladders only — the caller owns the ordering. fft_forward(x) is
// bit-for-bit permute_tensor(x) followed by fft_forward_unordered(x), and
// likewise for the backward pair.
void fft_forward_unordered(ComplexBuffer& x, const Plan& plan);
void fft_backward_unordered(ComplexBuffer& x, const Plan& plan);

}  // namespace pafft
