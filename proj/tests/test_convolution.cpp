#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "pafft/convolution.hpp"
#include "pafft/oracle.hpp"
#include "pafft/permutation.hpp"
#include "pafft/tolerance.hpp"
#include "pafft/transform.hpp"
#include "test_util.hpp"

using namespace pafft;
using testutil::buf;
using testutil::bitwise_equal;
using testutil::max_diff;
using testutil::random_buffer;

TEST_CASE("pointwise multiply") {
    ComplexBuffer x = buf({{1, 2}, {0, 1}});
    const ComplexBuffer y = buf({{3, 4}, {2, 0}});
    hadamard_inplace(x, y);
    CHECK(max_diff(x, buf({{-5, 10}, {0, 2}})) == 0.0);

    ComplexBuffer bad(3);
    CHECK_THROWS_AS(hadamard_inplace(bad, y), LengthMismatch);
}

TEST_CASE("filter preparation digit-reverses the spectrum once") {
    const Plan plan = plan_create(Radix::r2, TensorShape{4});
    const ComplexBuffer g = buf({0, 1, 2, 3});
    const PreparedFilter filter = prepare_filter(g, plan);
    CHECK(max_diff(filter.ghat, buf({0, 2, 1, 3})) == 0.0);
    CHECK(filter.key == plan.key());
    CHECK_THROWS_AS(prepare_filter(ComplexBuffer(3), plan), LengthMismatch);
}

TEST_CASE("impulse response to spectrum") {
    const Plan plan = plan_create(Radix::r2, TensorShape{4});
    // A one-sample delay: spectrum is w^j = 1, -i, -1, i.
    ComplexBuffer h = buf({0, 1, 0, 0});
    const ComplexBuffer g = filter_from_impulse(h, plan);
    CHECK(max_diff(g, buf({1, {0, -1}, -1, {0, 1}})) < 1e-14);
}

TEST_CASE("both pipelines realize the one-sample delay") {
    const Plan plan = plan_create(Radix::r2, TensorShape{4});
    const ComplexBuffer g = buf({1, {0, -1}, -1, {0, 1}});

    ComplexBuffer x = buf({1, 2, 3, 4});
    convolve_standard(x, g, plan);
    CHECK(max_diff(x, buf({4, 1, 2, 3})) < 1e-13);

    const PreparedFilter filter = prepare_filter(g, plan);
    ComplexBuffer y = buf({1, 2, 3, 4});
    convolve_permfree(y, filter, plan);
    CHECK(max_diff(y, buf({4, 1, 2, 3})) < 1e-13);
}

TEST_CASE("reordering passes: two per standard call, none per prepared call") {
    const Plan plan = plan_create(Radix::r4, TensorShape{16, 16});
    const ComplexBuffer g = random_buffer(plan.total(), 73);
    ComplexBuffer x = random_buffer(plan.total(), 74);

    reset_permutation_pass_count();
    convolve_standard(x, g, plan);
    CHECK(permutation_pass_count() == 2);

    reset_permutation_pass_count();
    const PreparedFilter filter = prepare_filter(g, plan);
    CHECK(permutation_pass_count() == 1);

    reset_permutation_pass_count();
    convolve_permfree(x, filter, plan);
    CHECK(permutation_pass_count() == 0);
}

TEST_CASE("prepared filters are pinned to their plan") {
    const Plan plan = plan_create(Radix::r2, TensorShape{16});
    const PreparedFilter filter = prepare_filter(random_buffer(16, 79), plan);

    // Same length, different radix.
    const Plan other_radix = plan_create(Radix::r4, TensorShape{16});
    ComplexBuffer x = random_buffer(16, 80);
    CHECK_THROWS_AS(convolve_permfree(x, filter, other_radix), FilterPlanMismatch);

    // Same total, different shape.
    const Plan other_shape = plan_create(Radix::r2, TensorShape{4, 4});
    CHECK_THROWS_AS(convolve_permfree(x, filter, other_shape), FilterPlanMismatch);

    // An equivalent plan built independently is accepted.
    const Plan same = plan_create(Radix::r2, TensorShape{16});
    convolve_permfree(x, filter, same);
}

TEST_CASE("a prepared filter is reusable without drift") {
    const Plan plan = plan_create(Radix::r2, TensorShape{8, 8});
    const PreparedFilter filter = prepare_filter(random_buffer(plan.total(), 83), plan);
    const ComplexBuffer x = random_buffer(plan.total(), 84);

    ComplexBuffer first = x;
    convolve_permfree(first, filter, plan);
    for (int round = 0; round < 3; ++round) {
        ComplexBuffer again = x;
        convolve_permfree(again, filter, plan);
        CHECK(bitwise_equal(again, first));
    }
}

TEST_CASE("pipelines agree with each other and the direct sum") {
    const std::vector<std::pair<Radix, TensorShape>> cases = {
        {Radix::r2, TensorShape{2}},
        {Radix::r2, TensorShape{64}},
        {Radix::r2, TensorShape{8, 4}},
        {Radix::r2, TensorShape{2, 2, 2, 2}},
        {Radix::r4, TensorShape{256}},
        {Radix::r4, TensorShape{16, 16}},
        {Radix::r4, TensorShape{4, 16, 4}},
        {Radix::r8, TensorShape{512}},
        {Radix::r8, TensorShape{8, 8, 8}},
    };
    for (const auto& [radix, shape] : cases) {
        const Plan plan = plan_create(radix, shape);
        const std::size_t n = plan.total();
        const ComplexBuffer x = random_buffer(n, 89 + n);
        const ComplexBuffer h = random_buffer(n, 90 + n);
        const ComplexBuffer g = filter_from_impulse(h, plan);

        ComplexBuffer via_standard = x;
        convolve_standard(via_standard, g, plan);
        ComplexBuffer via_prepared = x;
        convolve_permfree(via_prepared, prepare_filter(g, plan), plan);

        const double pair_tol = transform_tolerance(n, std::max(max_abs(via_standard), 1.0));
        CHECK(max_diff(via_standard, via_prepared) <= pair_tol);

        const ComplexBuffer direct = oracle::naive_circular_convolution(x, h, shape);
        const double tol = convolution_tolerance(n, max_abs(x), max_abs(h));
        CHECK(max_diff(via_standard, direct) <= tol);
        CHECK(max_diff(via_prepared, direct) <= tol);
    }
}
