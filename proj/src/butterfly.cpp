#include "pafft/butterfly.hpp"

#include <algorithm>
#include <vector>

namespace pafft {

namespace {

// All kernels below work on one contiguous split-complex line of length n
// (a power of the radix) with the master twiddle table built for that n.
// A stage at block size k reads w_k^e as table entry e*(n/k); every exponent
// used here is < k, so no access wraps. Temporaries follow the classic
// z (twiddled loads) / t (sums and differences) naming.

using Table = TwiddleTable;

// ---------------------------------------------------------------- radix 2

void forward_r2(double* xr, double* xi, std::size_t n, const Table& tw) {
    for (std::size_t k = 2; k <= n; k *= 2) {
        const std::size_t l = k / 2;
        const std::size_t stride = tw.stage_stride(k);
        for (std::size_t b = 0; b < n; b += k) {
            for (std::size_t j = 0; j < l; ++j) {
                const double wr = tw.re(j * stride), wi = tw.im(j * stride);
                const std::size_t i0 = b + j, i1 = b + j + l;
                const double tr = wr * xr[i1] - wi * xi[i1];
                const double ti = wr * xi[i1] + wi * xr[i1];
                xr[i1] = xr[i0] - tr;
                xi[i1] = xi[i0] - ti;
                xr[i0] += tr;
                xi[i0] += ti;
            }
        }
    }
}

void conjugate_r2(double* xr, double* xi, std::size_t n, const Table& tw) {
    for (std::size_t k = 2; k <= n; k *= 2) {
        const std::size_t l = k / 2;
        const std::size_t stride = tw.stage_stride(k);
        for (std::size_t b = 0; b < n; b += k) {
            for (std::size_t j = 0; j < l; ++j) {
                const double wr = tw.re(j * stride), wi = -tw.im(j * stride);
                const std::size_t i0 = b + j, i1 = b + j + l;
                const double tr = wr * xr[i1] - wi * xi[i1];
                const double ti = wr * xi[i1] + wi * xr[i1];
                xr[i1] = xr[i0] - tr;
                xi[i1] = xi[i0] - ti;
                xr[i0] += tr;
                xi[i0] += ti;
            }
        }
    }
}

void transposed_r2(double* xr, double* xi, std::size_t n, const Table& tw) {
    for (std::size_t k = n; k >= 2; k /= 2) {
        const std::size_t l = k / 2;
        const std::size_t stride = tw.stage_stride(k);
        for (std::size_t b = 0; b < n; b += k) {
            for (std::size_t j = 0; j < l; ++j) {
                const double wr = tw.re(j * stride), wi = tw.im(j * stride);
                const std::size_t i0 = b + j, i1 = b + j + l;
                const double tr = xr[i1], ti = xi[i1];
                const double dr = xr[i0] - tr, di = xi[i0] - ti;
                xr[i1] = wr * dr - wi * di;
                xi[i1] = wr * di + wi * dr;
                xr[i0] += tr;
                xi[i0] += ti;
            }
        }
    }
}

// ---------------------------------------------------------------- radix 4

void forward_r4(double* xr, double* xi, std::size_t n, const Table& tw) {
    for (std::size_t k = 4; k <= n; k *= 4) {
        const std::size_t l = k / 4;
        const std::size_t stride = tw.stage_stride(k);
        for (std::size_t b = 0; b < n; b += k) {
            for (std::size_t j = 0; j < l; ++j) {
                const std::size_t e = j * stride;
                const double w1r = tw.re(e), w1i = tw.im(e);
                const double w2r = tw.re(2 * e), w2i = tw.im(2 * e);
                const double w3r = tw.re(3 * e), w3i = tw.im(3 * e);
                const std::size_t i0 = b + j, i1 = i0 + l, i2 = i1 + l, i3 = i2 + l;

                const double z1r = xr[i0], z1i = xi[i0];
                const double z2r = w1r * xr[i1] - w1i * xi[i1];
                const double z2i = w1r * xi[i1] + w1i * xr[i1];
                const double z3r = w2r * xr[i2] - w2i * xi[i2];
                const double z3i = w2r * xi[i2] + w2i * xr[i2];
                const double z4r = w3r * xr[i3] - w3i * xi[i3];
                const double z4i = w3r * xi[i3] + w3i * xr[i3];

                const double t1r = z1r + z3r, t1i = z1i + z3i;
                const double t2r = z1r - z3r, t2i = z1i - z3i;
                const double t3r = z2r + z4r, t3i = z2i + z4i;
                const double t4r = z2r - z4r, t4i = z2i - z4i;

                xr[i0] = t1r + t3r;
                xi[i0] = t1i + t3i;
                xr[i1] = t2r + t4i;  // t2 - i*t4
                xi[i1] = t2i - t4r;
                xr[i2] = t1r - t3r;
                xi[i2] = t1i - t3i;
                xr[i3] = t2r - t4i;  // t2 + i*t4
                xi[i3] = t2i + t4r;
            }
        }
    }
}

void conjugate_r4(double* xr, double* xi, std::size_t n, const Table& tw) {
    for (std::size_t k = 4; k <= n; k *= 4) {
        const std::size_t l = k / 4;
        const std::size_t stride = tw.stage_stride(k);
        for (std::size_t b = 0; b < n; b += k) {
            for (std::size_t j = 0; j < l; ++j) {
                const std::size_t e = j * stride;
                const double w1r = tw.re(e), w1i = -tw.im(e);
                const double w2r = tw.re(2 * e), w2i = -tw.im(2 * e);
                const double w3r = tw.re(3 * e), w3i = -tw.im(3 * e);
                const std::size_t i0 = b + j, i1 = i0 + l, i2 = i1 + l, i3 = i2 + l;

                const double z1r = xr[i0], z1i = xi[i0];
                const double z2r = w1r * xr[i1] - w1i * xi[i1];
                const double z2i = w1r * xi[i1] + w1i * xr[i1];
                const double z3r = w2r * xr[i2] - w2i * xi[i2];
                const double z3i = w2r * xi[i2] + w2i * xr[i2];
                const double z4r = w3r * xr[i3] - w3i * xi[i3];
                const double z4i = w3r * xi[i3] + w3i * xr[i3];

                const double t1r = z1r + z3r, t1i = z1i + z3i;
                const double t2r = z1r - z3r, t2i = z1i - z3i;
                const double t3r = z2r + z4r, t3i = z2i + z4i;
                const double t4r = z2r - z4r, t4i = z2i - z4i;

                xr[i0] = t1r + t3r;
                xi[i0] = t1i + t3i;
                xr[i1] = t2r - t4i;  // t2 + i*t4
                xi[i1] = t2i + t4r;
                xr[i2] = t1r - t3r;
                xi[i2] = t1i - t3i;
                xr[i3] = t2r + t4i;  // t2 - i*t4
                xi[i3] = t2i - t4r;
            }
        }
    }
}

void transposed_r4(double* xr, double* xi, std::size_t n, const Table& tw) {
    for (std::size_t k = n; k >= 4; k /= 4) {
        const std::size_t l = k / 4;
        const std::size_t stride = tw.stage_stride(k);
        for (std::size_t b = 0; b < n; b += k) {
            for (std::size_t j = 0; j < l; ++j) {
                const std::size_t e = j * stride;
                const double w1r = tw.re(e), w1i = tw.im(e);
                const double w2r = tw.re(2 * e), w2i = tw.im(2 * e);
                const std::size_t i0 = b + j, i1 = i0 + l, i2 = i1 + l, i3 = i2 + l;

                const double z1r = xr[i0], z1i = xi[i0];
                const double z2r = xr[i1], z2i = xi[i1];
                const double z3r = xr[i2], z3i = xi[i2];
                const double z4r = xr[i3], z4i = xi[i3];

                const double t1r = z1r + z3r, t1i = z1i + z3i;
                const double d2r = z1r - z3r, d2i = z1i - z3i;
                const double t2r = w1r * d2r - w1i * d2i;
                const double t2i = w1r * d2i + w1i * d2r;
                const double t3r = z2r + z4r, t3i = z2i + z4i;
                const double d4r = z2r - z4r, d4i = z2i - z4i;
                const double t4r = w1r * d4r - w1i * d4i;
                const double t4i = w1r * d4i + w1i * d4r;

                xr[i0] = t1r + t3r;
                xi[i0] = t1i + t3i;
                xr[i1] = t2r + t4i;  // t2 - i*t4
                xi[i1] = t2i - t4r;
                const double u2r = t1r - t3r, u2i = t1i - t3i;
                xr[i2] = w2r * u2r - w2i * u2i;
                xi[i2] = w2r * u2i + w2i * u2r;
                const double u3r = t2r - t4i, u3i = t2i + t4r;  // t2 + i*t4
                xr[i3] = w2r * u3r - w2i * u3i;
                xi[i3] = w2r * u3i + w2i * u3r;
            }
        }
    }
}

// ---------------------------------------------------------------- radix 8

void forward_r8(double* xr, double* xi, std::size_t n, const Table& tw) {
    constexpr double S = Radix8Constants::inv_sqrt2;  // a = S - iS, b = -S - iS
    for (std::size_t k = 8; k <= n; k *= 8) {
        const std::size_t l = k / 8;
        const std::size_t stride = tw.stage_stride(k);
        for (std::size_t b = 0; b < n; b += k) {
            for (std::size_t j = 0; j < l; ++j) {
                const std::size_t e = j * stride;
                const std::size_t i0 = b + j;
                double zr[8], zi[8];
                zr[0] = xr[i0];
                zi[0] = xi[i0];
                for (int m = 1; m < 8; ++m) {
                    const double wr = tw.re(static_cast<std::size_t>(m) * e);
                    const double wi = tw.im(static_cast<std::size_t>(m) * e);
                    const std::size_t im_ = i0 + static_cast<std::size_t>(m) * l;
                    zr[m] = wr * xr[im_] - wi * xi[im_];
                    zi[m] = wr * xi[im_] + wi * xr[im_];
                }

                const double t1r = zr[0] + zr[4], t1i = zi[0] + zi[4];
                const double t2r = zr[0] - zr[4], t2i = zi[0] - zi[4];
                const double t3r = zr[1] + zr[5], t3i = zi[1] + zi[5];
                const double t4r = zr[1] - zr[5], t4i = zi[1] - zi[5];
                const double t5r = zr[2] + zr[6], t5i = zi[2] + zi[6];
                const double t6r = zr[2] - zr[6], t6i = zi[2] - zi[6];
                const double t7r = zr[3] + zr[7], t7i = zi[3] + zi[7];
                const double t8r = zr[3] - zr[7], t8i = zi[3] - zi[7];

                // a*t4 = u4 + i*v4 with u4 = S*(t4r + t4i), v4 = S*(t4i - t4r);
                // b*t8 = v8 - i*u8 likewise (b = -i*a).
                const double u4 = S * (t4r + t4i), v4 = S * (t4i - t4r);
                const double u8 = S * (t8r + t8i), v8 = S * (t8i - t8r);

                xr[i0] = t1r + t3r + t5r + t7r;
                xi[i0] = t1i + t3i + t5i + t7i;
                xr[i0 + l] = t2r + u4 + t6i + v8;       // t2 + a*t4 - i*t6 + b*t8
                xi[i0 + l] = t2i + v4 - t6r - u8;
                xr[i0 + 2 * l] = t1r + t3i - t5r - t7i; // t1 - i*t3 - t5 + i*t7
                xi[i0 + 2 * l] = t1i - t3r - t5i + t7r;
                xr[i0 + 3 * l] = t2r + v4 - t6i + u8;   // t2 + b*t4 + i*t6 + a*t8
                xi[i0 + 3 * l] = t2i - u4 + t6r + v8;
                xr[i0 + 4 * l] = t1r - t3r + t5r - t7r;
                xi[i0 + 4 * l] = t1i - t3i + t5i - t7i;
                xr[i0 + 5 * l] = t2r - u4 + t6i - v8;   // t2 - a*t4 - i*t6 - b*t8
                xi[i0 + 5 * l] = t2i - v4 - t6r + u8;
                xr[i0 + 6 * l] = t1r - t3i - t5r + t7i; // t1 + i*t3 - t5 - i*t7
                xi[i0 + 6 * l] = t1i + t3r - t5i - t7r;
                xr[i0 + 7 * l] = t2r - v4 - t6i - u8;   // t2 - b*t4 + i*t6 - a*t8
                xi[i0 + 7 * l] = t2i + u4 + t6r - v8;
            }
        }
    }
}

void conjugate_r8(double* xr, double* xi, std::size_t n, const Table& tw) {
    constexpr double S = Radix8Constants::inv_sqrt2;  // conj(a) = S + iS, conj(b) = -S + iS
    for (std::size_t k = 8; k <= n; k *= 8) {
        const std::size_t l = k / 8;
        const std::size_t stride = tw.stage_stride(k);
        for (std::size_t b = 0; b < n; b += k) {
            for (std::size_t j = 0; j < l; ++j) {
                const std::size_t e = j * stride;
                const std::size_t i0 = b + j;
                double zr[8], zi[8];
                zr[0] = xr[i0];
                zi[0] = xi[i0];
                for (int m = 1; m < 8; ++m) {
                    const double wr = tw.re(static_cast<std::size_t>(m) * e);
                    const double wi = -tw.im(static_cast<std::size_t>(m) * e);
                    const std::size_t im_ = i0 + static_cast<std::size_t>(m) * l;
                    zr[m] = wr * xr[im_] - wi * xi[im_];
                    zi[m] = wr * xi[im_] + wi * xr[im_];
                }

                const double t1r = zr[0] + zr[4], t1i = zi[0] + zi[4];
                const double t2r = zr[0] - zr[4], t2i = zi[0] - zi[4];
                const double t3r = zr[1] + zr[5], t3i = zi[1] + zi[5];
                const double t4r = zr[1] - zr[5], t4i = zi[1] - zi[5];
                const double t5r = zr[2] + zr[6], t5i = zi[2] + zi[6];
                const double t6r = zr[2] - zr[6], t6i = zi[2] - zi[6];
                const double t7r = zr[3] + zr[7], t7i = zi[3] + zi[7];
                const double t8r = zr[3] - zr[7], t8i = zi[3] - zi[7];

                // conj(a)*t4 = u4 + i*v4 with u4 = S*(t4r - t4i), v4 = S*(t4r + t4i);
                // conj(b)*t8 = -v8 + i*u8 (conj(b) = i*conj(a)).
                const double u4 = S * (t4r - t4i), v4 = S * (t4r + t4i);
                const double u8 = S * (t8r - t8i), v8 = S * (t8r + t8i);

                xr[i0] = t1r + t3r + t5r + t7r;
                xi[i0] = t1i + t3i + t5i + t7i;
                xr[i0 + l] = t2r + u4 - t6i - v8;       // t2 + conj(a)*t4 + i*t6 + conj(b)*t8
                xi[i0 + l] = t2i + v4 + t6r + u8;
                xr[i0 + 2 * l] = t1r - t3i - t5r + t7i; // t1 + i*t3 - t5 - i*t7
                xi[i0 + 2 * l] = t1i + t3r - t5i - t7r;
                xr[i0 + 3 * l] = t2r - v4 + t6i + u8;   // t2 + conj(b)*t4 - i*t6 + conj(a)*t8
                xi[i0 + 3 * l] = t2i + u4 - t6r + v8;
                xr[i0 + 4 * l] = t1r - t3r + t5r - t7r;
                xi[i0 + 4 * l] = t1i - t3i + t5i - t7i;
                xr[i0 + 5 * l] = t2r - u4 - t6i + v8;   // t2 - conj(a)*t4 + i*t6 - conj(b)*t8
                xi[i0 + 5 * l] = t2i - v4 + t6r - u8;
                xr[i0 + 6 * l] = t1r + t3i - t5r - t7i; // t1 - i*t3 - t5 + i*t7
                xi[i0 + 6 * l] = t1i - t3r - t5i + t7r;
                xr[i0 + 7 * l] = t2r + v4 + t6i - u8;   // t2 - conj(b)*t4 - i*t6 - conj(a)*t8
                xi[i0 + 7 * l] = t2i - u4 - t6r - v8;
            }
        }
    }
}

void transposed_r8(double* xr, double* xi, std::size_t n, const Table& tw) {
    constexpr double S = Radix8Constants::inv_sqrt2;
    for (std::size_t k = n; k >= 8; k /= 8) {
        const std::size_t l = k / 8;
        const std::size_t stride = tw.stage_stride(k);
        for (std::size_t b = 0; b < n; b += k) {
            for (std::size_t j = 0; j < l; ++j) {
                const std::size_t e = j * stride;
                const double w1r = tw.re(e), w1i = tw.im(e);
                const double w2r = tw.re(2 * e), w2i = tw.im(2 * e);
                const double w4r = tw.re(4 * e), w4i = tw.im(4 * e);
                const double w6r = tw.re(6 * e), w6i = tw.im(6 * e);
                const std::size_t i0 = b + j;

                double zr[8], zi[8];
                for (int m = 0; m < 8; ++m) {
                    const std::size_t im_ = i0 + static_cast<std::size_t>(m) * l;
                    zr[m] = xr[im_];
                    zi[m] = xi[im_];
                }

                // Odd-row differences pick up w_k^j before recombination.
                const double t1r = zr[0] + zr[4], t1i = zi[0] + zi[4];
                const double d2r = zr[0] - zr[4], d2i = zi[0] - zi[4];
                const double t2r = w1r * d2r - w1i * d2i, t2i = w1r * d2i + w1i * d2r;
                const double t3r = zr[1] + zr[5], t3i = zi[1] + zi[5];
                const double d4r = zr[1] - zr[5], d4i = zi[1] - zi[5];
                const double t4r = w1r * d4r - w1i * d4i, t4i = w1r * d4i + w1i * d4r;
                const double t5r = zr[2] + zr[6], t5i = zi[2] + zi[6];
                const double d6r = zr[2] - zr[6], d6i = zi[2] - zi[6];
                const double t6r = w1r * d6r - w1i * d6i, t6i = w1r * d6i + w1i * d6r;
                const double t7r = zr[3] + zr[7], t7i = zi[3] + zi[7];
                const double d8r = zr[3] - zr[7], d8i = zi[3] - zi[7];
                const double t8r = w1r * d8r - w1i * d8i, t8i = w1r * d8i + w1i * d8r;

                const double u4 = S * (t4r + t4i), v4 = S * (t4i - t4r);
                const double u8 = S * (t8r + t8i), v8 = S * (t8i - t8r);

                xr[i0] = t1r + t3r + t5r + t7r;
                xi[i0] = t1i + t3i + t5i + t7i;
                xr[i0 + l] = t2r + u4 + t6i + v8;  // t2 + a*t4 - i*t6 + b*t8
                xi[i0 + l] = t2i + v4 - t6r - u8;

                const double c2r = t1r + t3i - t5r - t7i;  // t1 - i*t3 - t5 + i*t7
                const double c2i = t1i - t3r - t5i + t7r;
                xr[i0 + 2 * l] = w2r * c2r - w2i * c2i;
                xi[i0 + 2 * l] = w2r * c2i + w2i * c2r;
                const double c3r = t2r + v4 - t6i + u8;  // t2 + b*t4 + i*t6 + a*t8
                const double c3i = t2i - u4 + t6r + v8;
                xr[i0 + 3 * l] = w2r * c3r - w2i * c3i;
                xi[i0 + 3 * l] = w2r * c3i + w2i * c3r;

                const double c4r = t1r - t3r + t5r - t7r;
                const double c4i = t1i - t3i + t5i - t7i;
                xr[i0 + 4 * l] = w4r * c4r - w4i * c4i;
                xi[i0 + 4 * l] = w4r * c4i + w4i * c4r;
                const double c5r = t2r - u4 + t6i - v8;  // t2 - a*t4 - i*t6 - b*t8
                const double c5i = t2i - v4 - t6r + u8;
                xr[i0 + 5 * l] = w4r * c5r - w4i * c5i;
                xi[i0 + 5 * l] = w4r * c5i + w4i * c5r;

                const double c6r = t1r - t3i - t5r + t7i;  // t1 + i*t3 - t5 - i*t7
                const double c6i = t1i + t3r - t5i - t7r;
                xr[i0 + 6 * l] = w6r * c6r - w6i * c6i;
                xi[i0 + 6 * l] = w6r * c6i + w6i * c6r;
                const double c7r = t2r - v4 - t6i - u8;  // t2 - b*t4 + i*t6 - a*t8
                const double c7i = t2i + u4 + t6r - v8;
                xr[i0 + 7 * l] = w6r * c7r - w6i * c7i;
                xi[i0 + 7 * l] = w6r * c7i + w6i * c7r;
            }
        }
    }
}

using LineKernel = void (*)(double*, double*, std::size_t, const Table&);

LineKernel select_kernel(Radix radix, ButterflyVariant variant) {
    switch (radix) {
        case Radix::r2:
            return variant == ButterflyVariant::forward     ? forward_r2
                   : variant == ButterflyVariant::conjugate ? conjugate_r2
                                                            : transposed_r2;
        case Radix::r4:
            return variant == ButterflyVariant::forward     ? forward_r4
                   : variant == ButterflyVariant::conjugate ? conjugate_r4
                                                            : transposed_r4;
        case Radix::r8:
        default:
            return variant == ButterflyVariant::forward     ? forward_r8
                   : variant == ButterflyVariant::conjugate ? conjugate_r8
                                                            : transposed_r8;
    }
}

void butterfly_line(ComplexBuffer& x, const Plan& plan, std::size_t dim,
                    ButterflyVariant variant) {
    const std::size_t nq = plan.shape().dim(dim);
    if (x.size() != nq) throw ShapeMismatch(nq, x.size());
    if (nq == 1) return;
    select_kernel(plan.radix(), variant)(x.re.data(), x.im.data(), nq, plan.twiddles(dim));
}

}  // namespace

void butterfly_forward(ComplexBuffer& x, const Plan& plan, std::size_t dim) {
    butterfly_line(x, plan, dim, ButterflyVariant::forward);
}

void butterfly_conjugate(ComplexBuffer& x, const Plan& plan, std::size_t dim) {
    butterfly_line(x, plan, dim, ButterflyVariant::conjugate);
}

void butterfly_transposed(ComplexBuffer& x, const Plan& plan, std::size_t dim) {
    butterfly_line(x, plan, dim, ButterflyVariant::transposed);
}

void butterfly_tensor(ComplexBuffer& x, const Plan& plan, ButterflyVariant variant) {
    const std::size_t total = plan.total();
    if (x.size() != total) throw LengthMismatch(total, x.size());

    const LineKernel kernel = select_kernel(plan.radix(), variant);
    const std::size_t d = plan.shape().rank();

    std::size_t max_dim = 0;
    for (std::size_t q = 0; q < d; ++q) max_dim = std::max(max_dim, plan.shape().dim(q));
    std::vector<double> sre(max_dim), sim(max_dim);

    double* xr = x.re.data();
    double* xi = x.im.data();
    std::size_t stride = 1;
    for (std::size_t q = 0; q < d; ++q) {
        const std::size_t nq = plan.shape().dim(q);
        if (nq > 1) {
            const Table& tw = plan.twiddles(q);
            if (stride == 1) {
                // Contiguous mode: run directly on each line.
                for (std::size_t base = 0; base < total; base += nq)
                    kernel(xr + base, xi + base, nq, tw);
            } else {
                // Strided mode: gather each fiber into the scratch line.
                const std::size_t block = stride * nq;
                for (std::size_t base = 0; base < total; base += block) {
                    for (std::size_t inner = 0; inner < stride; ++inner) {
                        const std::size_t start = base + inner;
                        for (std::size_t m = 0; m < nq; ++m) {
                            sre[m] = xr[start + m * stride];
                            sim[m] = xi[start + m * stride];
                        }
                        kernel(sre.data(), sim.data(), nq, tw);
                        for (std::size_t m = 0; m < nq; ++m) {
                            xr[start + m * stride] = sre[m];
                            xi[start + m * stride] = sim[m];
                        }
                    }
                }
            }
        }
        stride *= nq;
    }
}

}  // namespace pafft
