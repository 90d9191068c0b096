#include "pafft/verify.hpp"

#include <cmath>
#include <random>

#include "pafft/convolution.hpp"
#include "pafft/oracle.hpp"
#include "pafft/tolerance.hpp"
#include "pafft/transform.hpp"

namespace pafft {

std::vector<std::pair<Radix, TensorShape>> verification_grid(std::optional<Radix> filter) {
    std::vector<std::pair<Radix, TensorShape>> grid;
    const auto add = [&](Radix r, std::vector<std::size_t> dims) {
        if (!filter || *filter == r) grid.emplace_back(r, TensorShape(std::move(dims)));
    };

    for (std::size_t n = 2; n <= 4096; n *= 2) add(Radix::r2, {n});
    for (std::size_t n = 4; n <= 4096; n *= 4) add(Radix::r4, {n});
    for (std::size_t n = 8; n <= 4096; n *= 8) add(Radix::r8, {n});

    for (auto dims : {std::vector<std::size_t>{2, 2},
                      {4, 8},
                      {8, 4},
                      {32, 2},
                      {16, 16},
                      {2, 64},
                      {64, 64}})
        add(Radix::r2, dims);
    for (auto dims : {std::vector<std::size_t>{4, 4}, {16, 4}, {4, 16}, {16, 16}, {4, 64}, {64, 64}})
        add(Radix::r4, dims);
    for (auto dims : {std::vector<std::size_t>{8, 8}, {64, 8}, {8, 64}, {64, 64}})
        add(Radix::r8, dims);

    for (auto dims : {std::vector<std::size_t>{2, 2, 2}, {4, 2, 8}, {8, 8, 8}, {2, 16, 4},
                      {16, 16, 16}})
        add(Radix::r2, dims);
    for (auto dims : {std::vector<std::size_t>{4, 4, 4}, {16, 4, 4}, {4, 16, 16}, {16, 16, 16}})
        add(Radix::r4, dims);
    add(Radix::r8, {8, 8, 8});

    return grid;
}

namespace {

void fill_random(ComplexBuffer& x, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x.re[i] = dist(rng);
        x.im[i] = dist(rng);
    }
}

double max_component_diff(const ComplexBuffer& a, const ComplexBuffer& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a.re[i] - b.re[i]));
        m = std::max(m, std::abs(a.im[i] - b.im[i]));
    }
    return m;
}

std::string dims_label(const std::vector<std::size_t>& dims) {
    std::string s;
    for (std::size_t q = 0; q < dims.size(); ++q) {
        if (q) s += 'x';
        s += std::to_string(dims[q]);
    }
    return s;
}

}  // namespace

std::vector<VerifyCase> verify_transforms(std::uint64_t seed,
                                          std::optional<Radix> radix_filter) {
    std::vector<VerifyCase> cases;
    std::mt19937_64 rng(seed);
    for (const auto& [radix, shape] : verification_grid(radix_filter)) {
        const Plan plan = plan_create(radix, shape);
        const std::size_t n = plan.total();

        ComplexBuffer x(n);
        fill_random(x, rng);
        const double tol = transform_tolerance(n, max_abs(x));
        const std::string label =
            "r=" + std::to_string(radix_value(radix)) + " dims=" + dims_label(shape.dims());

        // Forward against the quadratic reference.
        ComplexBuffer fast = x;
        fft_forward(fast, plan);
        const ComplexBuffer slow = oracle::naive_dft_tensor(x, shape, oracle::Direction::forward);
        double err = max_component_diff(fast, slow);
        cases.push_back({"fft " + label, err <= tol, err, tol});

        // Backward undoes forward.
        ComplexBuffer back = fast;
        fft_backward(back, plan);
        err = max_component_diff(back, x);
        cases.push_back({"ifft-of-fft " + label, err <= tol, err, tol});
    }
    return cases;
}

std::vector<VerifyCase> verify_convolutions(std::uint64_t seed,
                                            std::optional<Radix> radix_filter) {
    std::vector<VerifyCase> cases;
    std::mt19937_64 rng(seed);
    for (const auto& [radix, shape] : verification_grid(radix_filter)) {
        const Plan plan = plan_create(radix, shape);
        const std::size_t n = plan.total();

        ComplexBuffer x(n), h(n);
        fill_random(x, rng);
        fill_random(h, rng);
        const ComplexBuffer g = filter_from_impulse(h, plan);
        const PreparedFilter prepared = prepare_filter(g, plan);
        const std::string label =
            "r=" + std::to_string(radix_value(radix)) + " dims=" + dims_label(shape.dims());

        ComplexBuffer via_std = x;
        convolve_standard(via_std, g, plan);
        ComplexBuffer via_pa = x;
        convolve_permfree(via_pa, prepared, plan);

        // The two pipelines against each other at transform tolerance.
        const double tol_pair = transform_tolerance(n, max_abs(x));
        double err = max_component_diff(via_std, via_pa);
        cases.push_back({"conv-std-vs-pa " + label, err <= tol_pair, err, tol_pair});

        // Each against the direct convolution sum.
        const ComplexBuffer direct = oracle::naive_circular_convolution(x, h, shape);
        const double tol_conv = convolution_tolerance(n, max_abs(x), max_abs(h));
        err = max_component_diff(via_std, direct);
        cases.push_back({"conv-std-vs-direct " + label, err <= tol_conv, err, tol_conv});
        err = max_component_diff(via_pa, direct);
        cases.push_back({"conv-pa-vs-direct " + label, err <= tol_conv, err, tol_conv});
    }
    return cases;
}

}  // namespace pafft
