"""General-radix FFT and permutation-avoiding circular convolution."""

from ._pafft import (
    Plan,
    PreparedFilter,
    convolve_permfree,
    convolve_standard,
    digit_reverse,
    estimate_ai,
    estimate_flop,
    fft_backward,
    fft_backward_unordered,
    fft_forward,
    fft_forward_unordered,
    filter_from_impulse,
    prepare_filter,
)

__all__ = [
    "Plan",
    "PreparedFilter",
    "convolve_permfree",
    "convolve_standard",
    "digit_reverse",
    "estimate_ai",
    "estimate_flop",
    "fft_backward",
    "fft_backward_unordered",
    "fft_forward",
    "fft_forward_unordered",
    "filter_from_impulse",
    "prepare_filter",
]
