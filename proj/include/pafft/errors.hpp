#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace pafft {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A dimension extent is not a power of the plan radix.
struct NotAPowerOfRadix : Error {
    NotAPowerOfRadix(std::size_t dim, std::size_t extent, unsigned radix);
    std::size_t dim;     // offending dimension, 0-based
    std::size_t extent;  // its size
};

// A shape with no dimensions was supplied where a tensor is required.
struct EmptyShape : Error {
    EmptyShape();
};

// Two buffers (or a buffer and a plan) disagree on total length.
struct LengthMismatch : Error {
    LengthMismatch(std::size_t expected, std::size_t got);
};

// A line buffer does not match the dimension extent it is being processed as.
struct ShapeMismatch : Error {
    ShapeMismatch(std::size_t expected, std::size_t got);
};

// A prepared filter is being used with a plan it was not prepared under.
struct FilterPlanMismatch : Error {
    FilterPlanMismatch();
};

// An index is outside the domain of the requested digit permutation.
struct IndexOutOfRange : Error {
    IndexOutOfRange(std::uint64_t index, std::uint64_t bound);
};

}  // namespace pafft
