#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "pafft/bench.hpp"

using namespace pafft;

TEST_CASE("op names round-trip") {
    for (BenchOp op : {BenchOp::permute, BenchOp::fft, BenchOp::fft_unordered, BenchOp::ifft,
                       BenchOp::ifft_unordered, BenchOp::conv_std, BenchOp::conv_pa,
                       BenchOp::prepare_filter}) {
        CHECK(bench_op_from_name(bench_op_name(op)) == op);
    }
    CHECK(std::string(bench_op_name(BenchOp::conv_pa)) == "conv-pa");
    CHECK(std::string(bench_op_name(BenchOp::fft_unordered)) == "fft-unordered");
    CHECK_THROWS_AS(bench_op_from_name("dct"), Error);
}

TEST_CASE("flop model") {
    CHECK(estimate_flop(1u << 20, Radix::r2) == 104857600.0);
    CHECK(estimate_flop(4, Radix::r4) == 34.0);
    CHECK(std::abs(estimate_flop(8, Radix::r8) - 97.92) < 1e-9);
    CHECK(estimate_flop(1, Radix::r2) == 0.0);
    CHECK(estimate_flop(0, Radix::r8) == 0.0);
}

TEST_CASE("intensity model") {
    // Without a reordering pass the intensity is length-independent:
    // coefficient * log2(radix) / 32.
    CHECK(std::abs(estimate_ai(1u << 20, Radix::r2, true) - 0.15625) < 1e-15);
    CHECK(std::abs(estimate_ai(64, Radix::r2, true) - 0.15625) < 1e-15);
    CHECK(std::abs(estimate_ai(4096, Radix::r4, true) - 0.265625) < 1e-15);
    CHECK(std::abs(estimate_ai(512, Radix::r8, true) - 0.3825) < 1e-12);

    // With the pass, the extra 2n accesses dilute it.
    CHECK(std::abs(estimate_ai(1u << 20, Radix::r2, false) - 0.15625 * 20.0 / 21.0) < 1e-12);
    const double diluted = estimate_ai(4096, Radix::r4, false);
    CHECK(std::abs(diluted - 0.265625 * 6.0 / 7.0) < 1e-12);
    CHECK(diluted < estimate_ai(4096, Radix::r4, true));
}

TEST_CASE("table rendering") {
    BenchRecord a;
    a.op = "fft";
    a.radix = 4;
    a.dims = {1024, 1024};
    a.total_n = 1048576;
    a.reps = 5;
    a.median_seconds = 0.001234567;
    a.min_seconds = 0.001;
    a.flop_estimate = 1000000.0;
    a.bytes_estimate = 250000000.0;
    a.ai_estimate = 0.004;
    BenchRecord b = a;
    b.op = "permute";
    b.dims = {65536};
    b.total_n = 65536;

    const std::string csv = emit_table({a, b}, TableFormat::csv);
    std::istringstream lines(csv);
    std::string line;
    std::vector<std::string> got;
    while (std::getline(lines, line)) got.push_back(line);
    REQUIRE(got.size() == 3);
    CHECK(got[0] == "op,radix,dims,total_n,reps,median_s,min_s,flop_est,bytes_est,ai_est");
    CHECK(got[1] == "fft,4,1024x1024,1048576,5,0.00123457,0.001,1000000,250000000,0.004");
    CHECK(got[2].substr(0, 14) == "permute,4,6553");

    const std::string md = emit_table({a, b}, TableFormat::md);
    std::istringstream md_lines(md);
    std::vector<std::string> md_got;
    while (std::getline(md_lines, line)) md_got.push_back(line);
    REQUIRE(md_got.size() == 4);
    for (const auto& row : md_got) {
        CHECK(row.front() == '|');
        CHECK(row.back() == '|');
    }
    CHECK(md_got[0].find(" op ") != std::string::npos);
    CHECK(md_got[1].find('-') != std::string::npos);
    CHECK(md_got[2].find("1024x1024") != std::string::npos);
}

TEST_CASE("harness validates its configuration") {
    BenchConfig config;
    config.dims = {64};
    config.reps = 0;
    CHECK_THROWS_AS(run_bench(config), Error);
    config.reps = 1;
    config.warmup = -1;
    CHECK_THROWS_AS(run_bench(config), Error);
    config.warmup = 0;
    config.dims = {24};
    CHECK_THROWS_AS(run_bench(config), NotAPowerOfRadix);
}

TEST_CASE("timed region sees the expected number of reordering sweeps") {
    BenchConfig config;
    config.radix = Radix::r4;
    config.dims = {16, 16};
    config.reps = 3;
    config.warmup = 1;

    config.op = BenchOp::fft;
    CHECK(run_bench(config).timed_permutation_passes == 3);

    config.op = BenchOp::fft_unordered;
    CHECK(run_bench(config).timed_permutation_passes == 0);

    config.op = BenchOp::conv_std;
    CHECK(run_bench(config).timed_permutation_passes == 6);

    config.op = BenchOp::conv_pa;
    CHECK(run_bench(config).timed_permutation_passes == 0);

    config.op = BenchOp::permute;
    CHECK(run_bench(config).timed_permutation_passes == 3);

    config.op = BenchOp::prepare_filter;
    CHECK(run_bench(config).timed_permutation_passes == 3);
}

TEST_CASE("records carry the model estimates and ordered timings") {
    BenchConfig config;
    config.op = BenchOp::fft;
    config.radix = Radix::r2;
    config.dims = {64};
    config.reps = 4;
    const BenchRecord rec = run_bench(config);

    CHECK(rec.op == "fft");
    CHECK(rec.radix == 2);
    CHECK(rec.total_n == 64);
    CHECK(rec.reps == 4);
    CHECK(rec.min_seconds > 0.0);
    CHECK(rec.median_seconds >= rec.min_seconds);
    CHECK(rec.flop_estimate == estimate_flop(64, Radix::r2));
    CHECK(std::abs(rec.ai_estimate - estimate_ai(64, Radix::r2, false)) < 1e-15);
    CHECK(rec.ai_estimate * rec.bytes_estimate == doctest::Approx(rec.flop_estimate));

    config.op = BenchOp::conv_pa;
    const BenchRecord conv = run_bench(config);
    CHECK(conv.flop_estimate == 2.0 * estimate_flop(64, Radix::r2) + 6.0 * 64.0);
    CHECK(conv.bytes_estimate > 0.0);
}
