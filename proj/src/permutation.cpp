#include "pafft/permutation.hpp"

#include <utility>
#include <vector>

namespace pafft {

namespace {

thread_local std::uint64_t g_pass_count = 0;

// Swap-based reordering of one contiguous line. rev is an involution, so
// swapping only when the partner lies ahead touches each pair exactly once.
void permute_line(double* re, double* im, std::span<const std::uint32_t> rev) {
    const std::size_t n = rev.size();
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t s = rev[j];
        if (s > j) {
            std::swap(re[j], re[s]);
            std::swap(im[j], im[s]);
        }
    }
}

}  // namespace

std::uint64_t digit_reverse(std::uint64_t j, unsigned radix, unsigned digits) {
    std::uint64_t bound = 1;
    for (unsigned s = 0; s < digits; ++s) bound *= radix;
    if (j >= bound) throw IndexOutOfRange(j, bound);
    std::uint64_t out = 0;
    for (unsigned s = 0; s < digits; ++s) {
        out = out * radix + j % radix;
        j /= radix;
    }
    return out;
}

void permute_1d(ComplexBuffer& x, const Plan& plan, std::size_t dim) {
    const std::size_t nq = plan.shape().dim(dim);
    if (x.size() != nq) throw ShapeMismatch(nq, x.size());
    permute_line(x.re.data(), x.im.data(), plan.rev_map(dim));
    ++g_pass_count;
}

void permute_tensor(ComplexBuffer& x, const Plan& plan) {
    const std::size_t total = plan.total();
    if (x.size() != total) throw LengthMismatch(total, x.size());

    if (plan.shape().rank() == 1) {
        permute_line(x.re.data(), x.im.data(), plan.rev_map(0));
        ++g_pass_count;
        return;
    }

    // One pass over linear offsets. A mixed-radix counter steps the source
    // multi-index (first digit fastest) while `partner` tracks the offset of
    // (rev(i_1), ..., rev(i_d)) incrementally. The composite map is an
    // involution, so swapping when the partner lies ahead reorders in place.
    const std::size_t d = plan.shape().rank();
    std::vector<std::size_t> weight(d);  // linear weight of each mode
    std::size_t w = 1;
    for (std::size_t q = 0; q < d; ++q) {
        weight[q] = w;
        w *= plan.shape().dim(q);
    }
    std::vector<std::size_t> idx(d, 0);
    std::size_t partner = 0;
    double* re = x.re.data();
    double* im = x.im.data();
    for (std::size_t j = 0; j < total; ++j) {
        if (partner > j) {
            std::swap(re[j], re[partner]);
            std::swap(im[j], im[partner]);
        }
        for (std::size_t q = 0; q < d; ++q) {
            const auto rev = plan.rev_map(q);
            const std::size_t nq = rev.size();
            const std::size_t old_digit = idx[q];
            if (++idx[q] < nq) {
                partner += weight[q] * rev[idx[q]];
                partner -= weight[q] * rev[old_digit];
                break;
            }
            idx[q] = 0;
            partner -= weight[q] * rev[old_digit];  // rev[0] == 0; keep carrying
        }
    }
    ++g_pass_count;
}

std::uint64_t permutation_pass_count() { return g_pass_count; }

void reset_permutation_pass_count() { g_pass_count = 0; }

}  // namespace pafft
