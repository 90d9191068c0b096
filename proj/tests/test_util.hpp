#pragma once

#include <complex>
#include <initializer_list>
#include <random>

#include "pafft/core.hpp"

namespace testutil {

inline pafft::ComplexBuffer buf(std::initializer_list<std::complex<double>> values) {
    pafft::ComplexBuffer b(values.size());
    std::size_t i = 0;
    for (const auto& v : values) {
        b.re[i] = v.real();
        b.im[i] = v.imag();
        ++i;
    }
    return b;
}

inline double max_diff(const pafft::ComplexBuffer& a, const pafft::ComplexBuffer& b) {
    if (a.size() != b.size()) return 1e300;
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a.re[i] - b.re[i]));
        m = std::max(m, std::abs(a.im[i] - b.im[i]));
    }
    return m;
}

inline bool bitwise_equal(const pafft::ComplexBuffer& a, const pafft::ComplexBuffer& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.re[i] != b.re[i] || a.im[i] != b.im[i]) return false;
    return true;
}

inline void fill_random(pafft::ComplexBuffer& x, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x.re[i] = dist(rng);
        x.im[i] = dist(rng);
    }
}

inline pafft::ComplexBuffer random_buffer(std::size_t n, std::uint64_t seed) {
    pafft::ComplexBuffer x(n);
    fill_random(x, seed);
    return x;
}

}  // namespace testutil
