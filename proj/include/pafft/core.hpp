#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "pafft/errors.hpp"

namespace pafft {

// Transform radix. Nothing outside {2, 4, 8} is representable.
enum class Radix : unsigned {
    r2 = 2,
    r4 = 4,
    r8 = 8,
};

constexpr unsigned radix_value(Radix r) { return static_cast<unsigned>(r); }

// Maps 2/4/8 to the enum; anything else throws Error.
Radix radix_from_value(unsigned value);

// Extents n_1..n_d of a dense complex tensor. The *first* index varies
// fastest in memory (vec layout), so dim(0) is the contiguous mode.
class TensorShape {
public:
    TensorShape() = default;
    TensorShape(std::initializer_list<std::size_t> extents) : dims_(extents) {}
    explicit TensorShape(std::vector<std::size_t> extents) : dims_(std::move(extents)) {}

    std::size_t rank() const { return dims_.size(); }
    std::size_t dim(std::size_t q) const { return dims_[q]; }
    const std::vector<std::size_t>& dims() const { return dims_; }

    // Product of all extents; 1 for a rank-0 shape.
    std::size_t total() const;

    bool operator==(const TensorShape&) const = default;

private:
    std::vector<std::size_t> dims_;
};

// Split-complex storage for vec(X): re[i] and im[i] hold element i.
// Kernels assume every entry is finite on entry.
struct ComplexBuffer {
    std::vector<double> re;
    std::vector<double> im;

    ComplexBuffer() = default;
    explicit ComplexBuffer(std::size_t n) : re(n, 0.0), im(n, 0.0) {}

    std::size_t size() const { return re.size(); }

    std::complex<double> get(std::size_t i) const { return {re[i], im[i]}; }
    void set(std::size_t i, std::complex<double> v) {
        re[i] = v.real();
        im[i] = v.imag();
    }
};

// Largest element modulus; 0 for an empty buffer.
double max_abs(const ComplexBuffer& x);

// x *= s, both components, one sweep.
void scale_inplace(ComplexBuffer& x, double s);

// Unit-circle samples w[j] = exp(-2*pi*i*j/n) for one transform length n,
// stored split-complex. A stage working at block size k reads the table at
// stride n/k: w_k^e is entry e*(n/k). Every in-kernel exponent satisfies
// e < k, so no index ever wraps past n.
class TwiddleTable {
public:
    explicit TwiddleTable(std::size_t n);

    std::size_t length() const { return n_; }
    double re(std::size_t j) const { return re_[j]; }
    double im(std::size_t j) const { return im_[j]; }
    std::size_t stage_stride(std::size_t k) const { return n_ / k; }

private:
    std::size_t n_;
    std::vector<double> re_;
    std::vector<double> im_;
};

// Identifies the (radix, shape) pair a plan or prepared filter belongs to.
struct PlanKey {
    Radix radix;
    std::vector<std::size_t> dims;

    bool operator==(const PlanKey&) const = default;
};

// Precomputed machinery for transforms of one shape under one radix:
// per-dimension stage depths, twiddle tables, and digit-reversal maps.
// Immutable once constructed; safe to share across threads as long as
// each thread works on its own buffers.
class Plan {
public:
    Plan(Radix radix, TensorShape shape);

    Radix radix() const { return radix_; }
    const TensorShape& shape() const { return shape_; }
    std::size_t total() const { return total_; }

    // t_q such that n_q == r^t_q.
    unsigned depth(std::size_t q) const { return depths_[q]; }

    const TwiddleTable& twiddles(std::size_t q) const { return twiddles_[q]; }

    // rev_map(q)[j] = digit_reverse(j, r, t_q); an involution on [0, n_q).
    std::span<const std::uint32_t> rev_map(std::size_t q) const { return rev_maps_[q]; }

    const PlanKey& key() const { return key_; }

private:
    Radix radix_;
    TensorShape shape_;
    std::size_t total_;
    std::vector<unsigned> depths_;
    std::vector<TwiddleTable> twiddles_;
    std::vector<std::vector<std::uint32_t>> rev_maps_;
    PlanKey key_;
};

// Validates the shape against the radix and builds all per-dimension tables.
// Throws EmptyShape for rank 0 and NotAPowerOfRadix(q, n_q) for a bad extent.
Plan plan_create(Radix radix, const TensorShape& shape);

// Repacks a tensor given in natural (row-major, last index fastest) order
// into the vec layout (first index fastest). Inverse of tensor_from_buffer.
ComplexBuffer buffer_from_tensor(std::span<const std::complex<double>> values,
                                 const TensorShape& shape);
std::vector<std::complex<double>> tensor_from_buffer(const ComplexBuffer& x,
                                                     const TensorShape& shape);

}  // namespace pafft
