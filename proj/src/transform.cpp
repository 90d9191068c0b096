#include "pafft/transform.hpp"

#include "pafft/butterfly.hpp"
#include "pafft/permutation.hpp"

namespace pafft {

void fft_forward(ComplexBuffer& x, const Plan& plan) {
    permute_tensor(x, plan);
    fft_forward_unordered(x, plan);
}

void fft_backward(ComplexBuffer& x, const Plan& plan) {
    permute_tensor(x, plan);
    fft_backward_unordered(x, plan);
}

void fft_forward_unordered(ComplexBuffer& x, const Plan& plan) {
    butterfly_tensor(x, plan, ButterflyVariant::forward);
}

void fft_backward_unordered(ComplexBuffer& x, const Plan& plan) {
    butterfly_tensor(x, plan, ButterflyVariant::conjugate);
    // Totals are powers of two, so the reciprocal is exact.
    scale_inplace(x, 1.0 / static_cast<double>(plan.total()));
}

}  // namespace pafft
