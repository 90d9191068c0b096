#include "pafft/oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace pafft::oracle {

namespace {

// Unnormalized line DFT with the exponent sign chosen by direction; every
// exp(sign * 2*pi*i*j*k/n) is evaluated on the spot (reduced mod n first so
// the angle stays small), terms added in index order.
ComplexBuffer dft_line(const ComplexBuffer& x, Direction dir) {
    const std::size_t n = x.size();
    const double sign = (dir == Direction::forward) ? -1.0 : 1.0;
    ComplexBuffer y(n);
    for (std::size_t j = 0; j < n; ++j) {
        double acc_re = 0.0, acc_im = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t m =
                (static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(k)) % n;
            const double ang =
                sign * 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
            const double c = std::cos(ang);
            const double s = std::sin(ang);
            acc_re += c * x.re[k] - s * x.im[k];
            acc_im += c * x.im[k] + s * x.re[k];
        }
        y.re[j] = acc_re;
        y.im[j] = acc_im;
    }
    return y;
}

}  // namespace

ComplexBuffer naive_dft(const ComplexBuffer& x, Direction dir) {
    ComplexBuffer y = dft_line(x, dir);
    if (dir == Direction::backward) {
        const double inv = 1.0 / static_cast<double>(x.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            y.re[i] *= inv;
            y.im[i] *= inv;
        }
    }
    return y;
}

ComplexBuffer naive_dft_tensor(const ComplexBuffer& x, const TensorShape& shape,
                               Direction dir) {
    const std::size_t total = shape.total();
    if (x.size() != total) throw LengthMismatch(total, x.size());

    ComplexBuffer y = x;
    std::size_t stride = 1;  // product of extents before the current mode
    for (std::size_t q = 0; q < shape.rank(); ++q) {
        const std::size_t nq = shape.dim(q);
        const std::size_t block = stride * nq;
        ComplexBuffer line(nq);
        for (std::size_t base = 0; base < total; base += block) {
            for (std::size_t inner = 0; inner < stride; ++inner) {
                const std::size_t start = base + inner;
                for (std::size_t m = 0; m < nq; ++m) {
                    line.re[m] = y.re[start + m * stride];
                    line.im[m] = y.im[start + m * stride];
                }
                const ComplexBuffer out = dft_line(line, dir);
                for (std::size_t m = 0; m < nq; ++m) {
                    y.re[start + m * stride] = out.re[m];
                    y.im[start + m * stride] = out.im[m];
                }
            }
        }
        stride = block;
    }
    if (dir == Direction::backward) {
        const double inv = 1.0 / static_cast<double>(total);
        for (std::size_t i = 0; i < total; ++i) {
            y.re[i] *= inv;
            y.im[i] *= inv;
        }
    }
    return y;
}

ComplexBuffer naive_circular_convolution(const ComplexBuffer& x, const ComplexBuffer& h,
                                         const TensorShape& shape) {
    const std::size_t total = shape.total();
    if (x.size() != total) throw LengthMismatch(total, x.size());
    if (h.size() != total) throw LengthMismatch(total, h.size());
    const std::size_t d = shape.rank();

    ComplexBuffer y(total);
    std::vector<std::size_t> iidx(d, 0);
    for (std::size_t i = 0; i < total; ++i) {
        double acc_re = 0.0, acc_im = 0.0;
        std::vector<std::size_t> jidx(d, 0);
        for (std::size_t j = 0; j < total; ++j) {
            // Source offset for (i - j) mod shape, digit by digit.
            std::size_t src = 0, w = 1;
            for (std::size_t q = 0; q < d; ++q) {
                const std::size_t nq = shape.dim(q);
                const std::size_t kq = (iidx[q] + nq - jidx[q]) % nq;
                src += kq * w;
                w *= nq;
            }
            acc_re += h.re[j] * x.re[src] - h.im[j] * x.im[src];
            acc_im += h.re[j] * x.im[src] + h.im[j] * x.re[src];
            for (std::size_t q = 0; q < d; ++q) {
                if (++jidx[q] < shape.dim(q)) break;
                jidx[q] = 0;
            }
        }
        y.re[i] = acc_re;
        y.im[i] = acc_im;
        for (std::size_t q = 0; q < d; ++q) {
            if (++iidx[q] < shape.dim(q)) break;
            iidx[q] = 0;
        }
    }
    return y;
}

}  // namespace pafft::oracle
