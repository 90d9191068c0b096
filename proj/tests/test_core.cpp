#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "pafft/core.hpp"
#include "test_util.hpp"

using namespace pafft;
using testutil::buf;

TEST_CASE("radix_from_value accepts 2/4/8 only") {
    CHECK(radix_from_value(2) == Radix::r2);
    CHECK(radix_from_value(4) == Radix::r4);
    CHECK(radix_from_value(8) == Radix::r8);
    CHECK_THROWS_AS(radix_from_value(3), Error);
    CHECK_THROWS_AS(radix_from_value(16), Error);
}

TEST_CASE("TensorShape totals and equality") {
    CHECK(TensorShape{8}.total() == 8);
    CHECK(TensorShape{4, 8}.total() == 32);
    CHECK(TensorShape{2, 2, 2}.rank() == 3);
    CHECK(TensorShape{4, 8} == TensorShape{4, 8});
    CHECK_FALSE(TensorShape{4, 8} == TensorShape{8, 4});
}

TEST_CASE("plan_create validates shape against radix") {
    CHECK_THROWS_AS(plan_create(Radix::r2, TensorShape(std::vector<std::size_t>{})), EmptyShape);
    CHECK_THROWS_AS(plan_create(Radix::r8, TensorShape{4}), NotAPowerOfRadix);
    CHECK_THROWS_AS(plan_create(Radix::r4, TensorShape{8}), NotAPowerOfRadix);
    CHECK_THROWS_AS(plan_create(Radix::r2, TensorShape{0}), NotAPowerOfRadix);

    try {
        plan_create(Radix::r2, TensorShape{8, 3});
        FAIL("expected NotAPowerOfRadix");
    } catch (const NotAPowerOfRadix& e) {
        CHECK(e.dim == 1);
        CHECK(e.extent == 3);
    }
}

TEST_CASE("plan carries per-dimension depths and digit-reversal maps") {
    const Plan p2 = plan_create(Radix::r2, TensorShape{8});
    CHECK(p2.depth(0) == 3);
    const std::vector<std::uint32_t> expect{0, 4, 2, 6, 1, 5, 3, 7};
    const auto rev = p2.rev_map(0);
    REQUIRE(rev.size() == 8);
    for (std::size_t j = 0; j < 8; ++j) CHECK(rev[j] == expect[j]);

    // One base-4 digit: the map is the identity.
    const Plan p4 = plan_create(Radix::r4, TensorShape{4});
    CHECK(p4.depth(0) == 1);
    for (std::size_t j = 0; j < 4; ++j) CHECK(p4.rev_map(0)[j] == j);

    const Plan p44 = plan_create(Radix::r4, TensorShape{16, 64});
    CHECK(p44.depth(0) == 2);
    CHECK(p44.depth(1) == 3);
    CHECK(p44.total() == 1024);
    CHECK(p44.key() == PlanKey{Radix::r4, {16, 64}});

    // Plans are deterministic: same inputs, same tables.
    const Plan again = plan_create(Radix::r2, TensorShape{8});
    for (std::size_t j = 0; j < 8; ++j) {
        CHECK(again.rev_map(0)[j] == p2.rev_map(0)[j]);
        CHECK(again.twiddles(0).re(j) == p2.twiddles(0).re(j));
        CHECK(again.twiddles(0).im(j) == p2.twiddles(0).im(j));
    }
}

TEST_CASE("twiddle tables sample the unit circle clockwise") {
    for (std::size_t n : {8ul, 64ul, 4096ul}) {
        const TwiddleTable tw(n);
        CHECK(tw.length() == n);
        CHECK(tw.re(0) == 1.0);
        CHECK(tw.im(0) == 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const double mag = std::sqrt(tw.re(j) * tw.re(j) + tw.im(j) * tw.im(j));
            CHECK(std::abs(mag - 1.0) < 1e-15);
        }
        // w[j] * w[n-j] == 1: the samples pair off into conjugates.
        for (std::size_t j = 1; j < n; ++j) {
            const double pr = tw.re(j) * tw.re(n - j) - tw.im(j) * tw.im(n - j);
            const double pi_ = tw.re(j) * tw.im(n - j) + tw.im(j) * tw.re(n - j);
            CHECK(std::abs(pr - 1.0) < 1e-14);
            CHECK(std::abs(pi_) < 1e-14);
        }
        // Stage access rule: entry e*(n/k) is exp(-2*pi*i*e/k).
        for (std::size_t k = 2; k <= n; k *= 2) {
            for (std::size_t e : {0ul, 1ul, k / 2, k - 1}) {
                const double ang = -2.0 * std::numbers::pi * static_cast<double>(e) /
                                   static_cast<double>(k);
                CHECK(std::abs(tw.re(e * tw.stage_stride(k)) - std::cos(ang)) < 1e-13);
                CHECK(std::abs(tw.im(e * tw.stage_stride(k)) - std::sin(ang)) < 1e-13);
            }
        }
    }
}

TEST_CASE("buffer_from_tensor repacks natural order into first-index-fastest") {
    using C = std::complex<double>;
    // [[a, b], [c, d]] row-major; columns end up adjacent.
    const std::vector<C> values{{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    const ComplexBuffer b = buffer_from_tensor(values, TensorShape{2, 2});
    CHECK(b.get(0) == C{1, 0});
    CHECK(b.get(1) == C{3, 0});
    CHECK(b.get(2) == C{2, 0});
    CHECK(b.get(3) == C{4, 0});

    // Rank 1 is the identity repack.
    const std::vector<C> line{{1, 1}, {2, -2}, {3, 3}};
    const ComplexBuffer lb = buffer_from_tensor(line, TensorShape{3});
    for (std::size_t i = 0; i < 3; ++i) CHECK(lb.get(i) == line[i]);

    CHECK_THROWS_AS(buffer_from_tensor(values, TensorShape{2, 4}), LengthMismatch);
}

TEST_CASE("buffer_from_tensor round-trips through tensor_from_buffer") {
    using C = std::complex<double>;
    const TensorShape shape{2, 3, 4};
    std::vector<C> values(shape.total());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = {static_cast<double>(i), -static_cast<double>(i)};
    const ComplexBuffer b = buffer_from_tensor(values, shape);
    const std::vector<C> back = tensor_from_buffer(b, shape);
    CHECK(back == values);

    // Spot-check the layout itself: natural index (i1,i2,i3) lands at
    // vec offset i1 + n1*i2 + n1*n2*i3.
    const std::size_t i1 = 1, i2 = 2, i3 = 3;
    const C at_natural = values[i1 * 3 * 4 + i2 * 4 + i3];
    CHECK(b.get(i1 + 2 * i2 + 6 * i3) == at_natural);
}

TEST_CASE("max_abs and scale_inplace") {
    ComplexBuffer x = buf({{3, 4}, {0, -1}});
    CHECK(max_abs(x) == doctest::Approx(5.0));
    scale_inplace(x, 0.5);
    CHECK(x.get(0) == std::complex<double>{1.5, 2.0});
    CHECK(max_abs(ComplexBuffer{}) == 0.0);
}
