#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pafft/core.hpp"

namespace pafft {

// Operations the benchmark harness can time.
enum class BenchOp {
    permute,
    fft,
    fft_unordered,
    ifft,
    ifft_unordered,
    conv_std,
    conv_pa,
    prepare_filter,
};

const char* bench_op_name(BenchOp op);          // e.g. "conv-pa"
BenchOp bench_op_from_name(const std::string&); // throws Error on unknown name

struct BenchConfig {
    BenchOp op = BenchOp::fft;
    Radix radix = Radix::r2;
    std::vector<std::size_t> dims;
    int reps = 5;        // timed repetitions (>= 1)
    int warmup = 1;      // untimed repetitions (>= 0)
    std::uint64_t seed = 0x5eed5eed5eed5eedULL;
};

struct BenchRecord {
    std::string op;
    unsigned radix = 0;
    std::vector<std::size_t> dims;
    std::size_t total_n = 0;
    int reps = 0;
    double median_seconds = 0.0;
    double min_seconds = 0.0;
    double flop_estimate = 0.0;
    double bytes_estimate = 0.0;
    double ai_estimate = 0.0;
    // Reordering sweeps observed inside the timed region (all reps summed);
    // diagnostic only, not part of the emitted table.
    std::uint64_t timed_permutation_passes = 0;
};

// Butterfly FLOP model for one full transform of total size n:
// 5*n*log2(n) at radix 2, 4.25*n*log2(n) at radix 4, 4.08*n*log2(n) at
// radix 8; 0 when n < 2. Multi-dimensional totals use the same formula,
// since summing per-mode fiber costs telescopes to it.
double estimate_flop(std::size_t n, Radix radix);

// Arithmetic intensity (FLOP/byte) of one full transform under a streaming
// traffic model of 16 bytes per element: 2*n*(1 + log_r n) element accesses
// with a reordering pass, 2*n*log_r n without one.
double estimate_ai(std::size_t n, Radix radix, bool permutation_free);

// Times one operation: deterministic seeded input, `warmup` untimed
// applications, `reps` timed ones on a monotonic clock, median and min
// reported. Filter preparation for conv-pa happens outside the timed
// region. Cheap sanity assertions (permute involution; the two convolution
// pipelines agreeing on the benchmark input) run before timing starts.
BenchRecord run_bench(const BenchConfig& config);

enum class TableFormat {
    csv,
    md,
};

// Renders records as a table: CSV is exactly one header line plus one line
// per record; markdown adds the separator row (records + 2 lines total).
// Seconds use 6 significant digits; dims join with 'x' (e.g. "64x64").
std::string emit_table(const std::vector<BenchRecord>& records, TableFormat format);

}  // namespace pafft
