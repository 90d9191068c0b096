#pragma once

#include "pafft/core.hpp"

namespace pafft {

// A filter spectrum reordered once, offline, so that online convolutions
// need no reordering at all. Bound to the plan it was prepared under.
struct PreparedFilter {
    ComplexBuffer ghat;
    PlanKey key;
};

// Digit-reverses a natural-order filter spectrum g (one reordering pass) and
// fingerprints it with the plan. The returned filter is reusable across any
// number of convolve_permfree calls under an equivalent plan.
PreparedFilter prepare_filter(const ComplexBuffer& g, const Plan& plan);

// Spectrum of an impulse response: g = fft_forward(h).
ComplexBuffer filter_from_impulse(const ComplexBuffer& h, const Plan& plan);

// x := x .* y, elementwise complex multiply. Throws LengthMismatch.
void hadamard_inplace(ComplexBuffer& x, const ComplexBuffer& y);

// Circular convolution by the textbook pipeline: forward transform, pointwise
// multiply by the natural-order spectrum g, inverse transform. Costs exactly
// two reordering passes per call.
void convolve_standard(ComplexBuffer& x, const ComplexBuffer& g, const Plan& plan);

// Same result, no reordering: transposed ladders, pointwise multiply by the
// prepared (digit-reversed) spectrum, conjugate ladders, one 1/n sweep.
// Throws FilterPlanMismatch when the filter was prepared under another plan.
void convolve_permfree(ComplexBuffer& x, const PreparedFilter& filter, const Plan& plan);

}  // namespace pafft
