#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pafft/core.hpp"

namespace pafft {

// Self-verification against the brute-force references, shared by the CLI
// `verify` subcommand and the acceptance suite.

struct VerifyCase {
    std::string name;   // e.g. "fft r=4 dims=16x16"
    bool pass = false;
    double max_err = 0.0;  // worst absolute component error observed
    double tol = 0.0;      // tolerance it was held to
};

// The shape grid both suites sweep: every 1-D power of the radix up to 4096,
// assorted 2-D shapes up to 64x64, and 3-D shapes up to 16x16x16. Totals stay
// at or below 4096 so quadratic references remain affordable.
std::vector<std::pair<Radix, TensorShape>> verification_grid(
    std::optional<Radix> radix_filter = {});

// Transform checks over the standard shape grid (1-D sizes up to 4096 for
// each radix, 2-D up to 64x64, 3-D up to 16x16x16): forward against the
// quadratic reference, then backward-of-forward against the input.
// `radix_filter` restricts to one radix when set.
std::vector<VerifyCase> verify_transforms(std::uint64_t seed,
                                          std::optional<Radix> radix_filter = {});

// Convolution checks over the same grid: the two pipelines against each
// other and each against the direct convolution sum.
std::vector<VerifyCase> verify_convolutions(std::uint64_t seed,
                                            std::optional<Radix> radix_filter = {});

}  // namespace pafft
