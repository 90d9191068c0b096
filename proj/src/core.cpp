#include "pafft/core.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace pafft {

namespace {

std::string mismatch_msg(const char* what, std::size_t expected, std::size_t got) {
    return std::string(what) + ": expected " + std::to_string(expected) + ", got " +
           std::to_string(got);
}

// n == radix^t for some t >= 0?  (0 is never a power.)
bool is_power_of(std::size_t n, unsigned radix) {
    if (n == 0) return false;
    while (n % radix == 0) n /= radix;
    return n == 1;
}

unsigned power_depth(std::size_t n, unsigned radix) {
    unsigned t = 0;
    while (n > 1) {
        n /= radix;
        ++t;
    }
    return t;
}

}  // namespace

NotAPowerOfRadix::NotAPowerOfRadix(std::size_t dim_, std::size_t extent_, unsigned radix_)
    : Error("dimension " + std::to_string(dim_) + " has extent " + std::to_string(extent_) +
            ", not a power of radix " + std::to_string(radix_)),
      dim(dim_),
      extent(extent_) {}

EmptyShape::EmptyShape() : Error("shape has no dimensions") {}

LengthMismatch::LengthMismatch(std::size_t expected, std::size_t got)
    : Error(mismatch_msg("buffer length mismatch", expected, got)) {}

ShapeMismatch::ShapeMismatch(std::size_t expected, std::size_t got)
    : Error(mismatch_msg("line length mismatch", expected, got)) {}

FilterPlanMismatch::FilterPlanMismatch()
    : Error("prepared filter does not belong to this plan") {}

IndexOutOfRange::IndexOutOfRange(std::uint64_t index, std::uint64_t bound)
    : Error("index " + std::to_string(index) + " outside [0, " + std::to_string(bound) + ")") {}

Radix radix_from_value(unsigned value) {
    switch (value) {
        case 2: return Radix::r2;
        case 4: return Radix::r4;
        case 8: return Radix::r8;
        default: throw Error("radix must be 2, 4, or 8 (got " + std::to_string(value) + ")");
    }
}

std::size_t TensorShape::total() const {
    std::size_t n = 1;
    for (std::size_t e : dims_) n *= e;
    return n;
}

double max_abs(const ComplexBuffer& x) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::sqrt(x.re[i] * x.re[i] + x.im[i] * x.im[i]);
        if (a > m) m = a;
    }
    return m;
}

void scale_inplace(ComplexBuffer& x, double s) {
    for (double& v : x.re) v *= s;
    for (double& v : x.im) v *= s;
}

TwiddleTable::TwiddleTable(std::size_t n) : n_(n), re_(n), im_(n) {
    const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double ang = step * static_cast<double>(j);
        re_[j] = std::cos(ang);
        im_[j] = std::sin(ang);
    }
}

Plan::Plan(Radix radix, TensorShape shape) : radix_(radix), shape_(std::move(shape)) {
    if (shape_.rank() == 0) throw EmptyShape();
    const unsigned r = radix_value(radix_);
    for (std::size_t q = 0; q < shape_.rank(); ++q) {
        const std::size_t nq = shape_.dim(q);
        if (!is_power_of(nq, r)) throw NotAPowerOfRadix(q, nq, r);
        if (nq > std::numeric_limits<std::uint32_t>::max())
            throw std::length_error("dimension extent exceeds 32-bit index range");
    }
    total_ = shape_.total();
    depths_.reserve(shape_.rank());
    twiddles_.reserve(shape_.rank());
    rev_maps_.reserve(shape_.rank());
    for (std::size_t q = 0; q < shape_.rank(); ++q) {
        const std::size_t nq = shape_.dim(q);
        const unsigned t = power_depth(nq, r);
        depths_.push_back(t);
        twiddles_.emplace_back(nq);

        // rev[j]: reverse the t base-r digits of j. Computed by the usual
        // shift-accumulate; stored as a full lookup since the permutation
        // kernels stream through it anyway.
        std::vector<std::uint32_t> rev(nq);
        for (std::size_t j = 0; j < nq; ++j) {
            std::size_t v = j, out = 0;
            for (unsigned s = 0; s < t; ++s) {
                out = out * r + v % r;
                v /= r;
            }
            rev[j] = static_cast<std::uint32_t>(out);
        }
        rev_maps_.push_back(std::move(rev));
    }
    key_ = PlanKey{radix_, shape_.dims()};
}

Plan plan_create(Radix radix, const TensorShape& shape) { return Plan(radix, shape); }

ComplexBuffer buffer_from_tensor(std::span<const std::complex<double>> values,
                                 const TensorShape& shape) {
    const std::size_t total = shape.total();
    if (values.size() != total) throw LengthMismatch(total, values.size());
    const std::size_t d = shape.rank();

    ComplexBuffer out(total);
    // Walk output offsets in order while stepping a multi-index whose first
    // digit is fastest; `src` tracks the same index under row-major strides.
    std::vector<std::size_t> row_stride(d, 1);
    for (std::size_t q = d; q-- > 1;) row_stride[q - 1] = row_stride[q] * shape.dim(q);
    std::vector<std::size_t> idx(d, 0);
    std::size_t src = 0;
    for (std::size_t dst = 0; dst < total; ++dst) {
        out.re[dst] = values[src].real();
        out.im[dst] = values[src].imag();
        for (std::size_t q = 0; q < d; ++q) {
            src += row_stride[q];
            if (++idx[q] < shape.dim(q)) break;
            idx[q] = 0;
            src -= row_stride[q] * shape.dim(q);
        }
    }
    return out;
}

std::vector<std::complex<double>> tensor_from_buffer(const ComplexBuffer& x,
                                                     const TensorShape& shape) {
    const std::size_t total = shape.total();
    if (x.size() != total) throw LengthMismatch(total, x.size());
    const std::size_t d = shape.rank();

    std::vector<std::complex<double>> out(total);
    std::vector<std::size_t> row_stride(d, 1);
    for (std::size_t q = d; q-- > 1;) row_stride[q - 1] = row_stride[q] * shape.dim(q);
    std::vector<std::size_t> idx(d, 0);
    std::size_t dst = 0;
    for (std::size_t src = 0; src < total; ++src) {
        out[dst] = {x.re[src], x.im[src]};
        for (std::size_t q = 0; q < d; ++q) {
            dst += row_stride[q];
            if (++idx[q] < shape.dim(q)) break;
            idx[q] = 0;
            dst -= row_stride[q] * shape.dim(q);
        }
    }
    return out;
}

}  // namespace pafft
