#pragma once

#include <cstdint>

#include "pafft/core.hpp"

namespace pafft {

// Reverses the base-r digit string of j across `digits` positions, e.g.
// digit_reverse(6, 2, 3): 110 -> 011 = 3. Involution in j for fixed (r, t).
// Throws IndexOutOfRange when j >= r^digits.
std::uint64_t digit_reverse(std::uint64_t j, unsigned radix, unsigned digits);

// In-place digit-reversal reordering of a standalone line whose length is
// dimension `dim` of the plan. Pure data movement, no arithmetic.
void permute_1d(ComplexBuffer& x, const Plan& plan, std::size_t dim);

// In-place digit-reversal reordering of the whole tensor: element at
// multi-index (i_1..i_d) swaps with (rev(i_1)..rev(i_d)). Implemented as a
// single pass over linear offsets with a mixed-radix counter tracking the
// partner offset, not as d separate fiber sweeps.
void permute_tensor(ComplexBuffer& x, const Plan& plan);

// Running count of whole-buffer reordering passes executed by this thread,
// so pipelines can be audited for how many permutation sweeps they cost.
std::uint64_t permutation_pass_count();
void reset_permutation_pass_count();

}  // namespace pafft
