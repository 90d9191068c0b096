#include "pafft/convolution.hpp"

#include "pafft/butterfly.hpp"
#include "pafft/permutation.hpp"
#include "pafft/transform.hpp"

namespace pafft {

PreparedFilter prepare_filter(const ComplexBuffer& g, const Plan& plan) {
    if (g.size() != plan.total()) throw LengthMismatch(plan.total(), g.size());
    PreparedFilter f{g, plan.key()};
    permute_tensor(f.ghat, plan);
    return f;
}

ComplexBuffer filter_from_impulse(const ComplexBuffer& h, const Plan& plan) {
    if (h.size() != plan.total()) throw LengthMismatch(plan.total(), h.size());
    ComplexBuffer g = h;
    fft_forward(g, plan);
    return g;
}

void hadamard_inplace(ComplexBuffer& x, const ComplexBuffer& y) {
    if (x.size() != y.size()) throw LengthMismatch(x.size(), y.size());
    double* xr = x.re.data();
    double* xi = x.im.data();
    const double* yr = y.re.data();
    const double* yi = y.im.data();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = xr[i] * yr[i] - xi[i] * yi[i];
        const double m = xr[i] * yi[i] + xi[i] * yr[i];
        xr[i] = r;
        xi[i] = m;
    }
}

void convolve_standard(ComplexBuffer& x, const ComplexBuffer& g, const Plan& plan) {
    if (x.size() != plan.total()) throw LengthMismatch(plan.total(), x.size());
    if (g.size() != plan.total()) throw LengthMismatch(plan.total(), g.size());
    fft_forward(x, plan);       // reordering pass #1
    hadamard_inplace(x, g);
    fft_backward(x, plan);      // reordering pass #2, then 1/n sweep
}

void convolve_permfree(ComplexBuffer& x, const PreparedFilter& filter, const Plan& plan) {
    if (!(filter.key == plan.key())) throw FilterPlanMismatch();
    if (x.size() != plan.total()) throw LengthMismatch(plan.total(), x.size());
    butterfly_tensor(x, plan, ButterflyVariant::transposed);
    hadamard_inplace(x, filter.ghat);
    butterfly_tensor(x, plan, ButterflyVariant::conjugate);
    scale_inplace(x, 1.0 / static_cast<double>(plan.total()));
}

}  // namespace pafft
