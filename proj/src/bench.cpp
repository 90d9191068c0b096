#include "pafft/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "pafft/convolution.hpp"
#include "pafft/permutation.hpp"
#include "pafft/tolerance.hpp"
#include "pafft/transform.hpp"

#if defined(__linux__)
#include <sched.h>
#endif

namespace pafft {

namespace {

// splitmix64: counter-based 64-bit generator (Steele/Lea/Flood mixing
// function). One draw per call; top 53 bits become a double in [-1, 1].
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_unit() {
        // 53 uniform bits over [0, 2^53 - 1] -> [0, 1] -> [-1, 1].
        const double u =
            static_cast<double>(next_u64() >> 11) / 9007199254740991.0;
        return 2.0 * u - 1.0;
    }
};

void fill_random(ComplexBuffer& x, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x.re[i] = rng.next_unit();
        x.im[i] = rng.next_unit();
    }
}

void pin_to_one_cpu() {
#if defined(__linux__)
    cpu_set_t set;
    CPU_ZERO(&set);
    CPU_SET(0, &set);
    sched_setaffinity(0, sizeof(set), &set);  // best effort; failure is fine
#endif
}

double log_base(double n, double b) { return std::log2(n) / std::log2(b); }

bool buffers_close(const ComplexBuffer& a, const ComplexBuffer& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.re[i] - b.re[i]) > tol) return false;
        if (std::abs(a.im[i] - b.im[i]) > tol) return false;
    }
    return true;
}

std::string join_dims(const std::vector<std::size_t>& dims) {
    std::string s;
    for (std::size_t q = 0; q < dims.size(); ++q) {
        if (q) s += 'x';
        s += std::to_string(dims[q]);
    }
    return s;
}

std::string format_double(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

const char* bench_op_name(BenchOp op) {
    switch (op) {
        case BenchOp::permute: return "permute";
        case BenchOp::fft: return "fft";
        case BenchOp::fft_unordered: return "fft-unordered";
        case BenchOp::ifft: return "ifft";
        case BenchOp::ifft_unordered: return "ifft-unordered";
        case BenchOp::conv_std: return "conv-std";
        case BenchOp::conv_pa: return "conv-pa";
        case BenchOp::prepare_filter: return "prepare-filter";
    }
    return "?";
}

BenchOp bench_op_from_name(const std::string& name) {
    for (BenchOp op : {BenchOp::permute, BenchOp::fft, BenchOp::fft_unordered, BenchOp::ifft,
                       BenchOp::ifft_unordered, BenchOp::conv_std, BenchOp::conv_pa,
                       BenchOp::prepare_filter}) {
        if (name == bench_op_name(op)) return op;
    }
    throw Error("unknown op '" + name + "'");
}

double estimate_flop(std::size_t n, Radix radix) {
    if (n < 2) return 0.0;
    double per_log2 = 5.0;
    if (radix == Radix::r4) per_log2 = 4.25;
    if (radix == Radix::r8) per_log2 = 4.08;
    return per_log2 * static_cast<double>(n) * std::log2(static_cast<double>(n));
}

double estimate_ai(std::size_t n, Radix radix, bool permutation_free) {
    if (n < 2) return 0.0;
    const double logr = log_base(static_cast<double>(n), radix_value(radix));
    const double elements = permutation_free
                                ? 2.0 * static_cast<double>(n) * logr
                                : 2.0 * static_cast<double>(n) * (1.0 + logr);
    return estimate_flop(n, radix) / (16.0 * elements);
}

BenchRecord run_bench(const BenchConfig& config) {
    if (config.reps < 1) throw Error("reps must be >= 1");
    if (config.warmup < 0) throw Error("warmup must be >= 0");

    const Plan plan = plan_create(config.radix, TensorShape(config.dims));
    const std::size_t n = plan.total();

    ComplexBuffer x(n);
    fill_random(x, config.seed);

    // Filter spectrum for the convolution ops (prepared outside any timing).
    ComplexBuffer g;
    PreparedFilter prepared;
    const bool wants_filter = config.op == BenchOp::conv_std || config.op == BenchOp::conv_pa ||
                              config.op == BenchOp::prepare_filter;
    if (wants_filter) {
        g = ComplexBuffer(n);
        fill_random(g, config.seed + 1);
        prepared = prepare_filter(g, plan);
    }

    // Sanity assertions on the actual benchmark input, before any timing.
    if (config.op == BenchOp::permute) {
        ComplexBuffer y = x;
        permute_tensor(y, plan);
        permute_tensor(y, plan);
        for (std::size_t i = 0; i < n; ++i) {
            if (y.re[i] != x.re[i] || y.im[i] != x.im[i])
                throw Error("permutation self-inverse check failed");
        }
    }
    if (config.op == BenchOp::conv_std || config.op == BenchOp::conv_pa) {
        ComplexBuffer a = x, b = x;
        convolve_standard(a, g, plan);
        convolve_permfree(b, prepared, plan);
        const double tol =
            transform_tolerance(n, max_abs(x)) * std::max(1.0, max_abs(g));
        if (!buffers_close(a, b, tol))
            throw Error("convolution pipelines disagree on benchmark input");
    }

    const auto apply = [&](ComplexBuffer& buf) {
        switch (config.op) {
            case BenchOp::permute: permute_tensor(buf, plan); break;
            case BenchOp::fft: fft_forward(buf, plan); break;
            case BenchOp::fft_unordered: fft_forward_unordered(buf, plan); break;
            case BenchOp::ifft: fft_backward(buf, plan); break;
            case BenchOp::ifft_unordered: fft_backward_unordered(buf, plan); break;
            case BenchOp::conv_std: convolve_standard(buf, g, plan); break;
            case BenchOp::conv_pa: convolve_permfree(buf, prepared, plan); break;
            case BenchOp::prepare_filter: prepared = prepare_filter(g, plan); break;
        }
    };

    pin_to_one_cpu();

    for (int w = 0; w < config.warmup; ++w) apply(x);

    std::vector<double> seconds(static_cast<std::size_t>(config.reps));
    const std::uint64_t passes_before = permutation_pass_count();
    for (int rep = 0; rep < config.reps; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        apply(x);
        const auto t1 = std::chrono::steady_clock::now();
        seconds[static_cast<std::size_t>(rep)] =
            std::chrono::duration<double>(t1 - t0).count();
    }
    const std::uint64_t passes_after = permutation_pass_count();

    std::vector<double> sorted = seconds;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    const double median = (sorted.size() % 2 == 1)
                              ? sorted[mid]
                              : 0.5 * (sorted[mid - 1] + sorted[mid]);

    // FLOP/byte model per op. Transforms use the single-transform model;
    // the convolution composites add two transforms plus one pointwise
    // multiply (6 FLOP and 3 element accesses per element); pure reordering
    // ops move 2n elements and do no arithmetic.
    const double nd = static_cast<double>(n);
    const double fft_flop = estimate_flop(n, config.radix);
    const double logr = n < 2 ? 0.0 : log_base(nd, radix_value(config.radix));
    const double full_elems = 2.0 * nd * (1.0 + logr);
    const double bare_elems = 2.0 * nd * logr;
    double flop = 0.0, bytes = 0.0;
    switch (config.op) {
        case BenchOp::permute:
        case BenchOp::prepare_filter:
            flop = 0.0;
            bytes = 16.0 * 2.0 * nd;
            break;
        case BenchOp::fft:
        case BenchOp::ifft:
            flop = fft_flop;
            bytes = 16.0 * full_elems;
            break;
        case BenchOp::fft_unordered:
        case BenchOp::ifft_unordered:
            flop = fft_flop;
            bytes = 16.0 * bare_elems;
            break;
        case BenchOp::conv_std:
            flop = 2.0 * fft_flop + 6.0 * nd;
            bytes = 16.0 * (2.0 * full_elems + 3.0 * nd);
            break;
        case BenchOp::conv_pa:
            flop = 2.0 * fft_flop + 6.0 * nd;
            bytes = 16.0 * (2.0 * bare_elems + 3.0 * nd);
            break;
    }

    BenchRecord rec;
    rec.op = bench_op_name(config.op);
    rec.radix = radix_value(config.radix);
    rec.dims = config.dims;
    rec.total_n = n;
    rec.reps = config.reps;
    rec.median_seconds = median;
    rec.min_seconds = sorted.front();
    rec.flop_estimate = flop;
    rec.bytes_estimate = bytes;
    rec.ai_estimate = bytes > 0.0 ? flop / bytes : 0.0;
    rec.timed_permutation_passes = passes_after - passes_before;
    return rec;
}

std::string emit_table(const std::vector<BenchRecord>& records, TableFormat format) {
    const char* headers[10] = {"op",       "radix",    "dims",     "total_n", "reps",
                               "median_s", "min_s",    "flop_est", "bytes_est", "ai_est"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const BenchRecord& r : records) {
        rows.push_back({r.op, std::to_string(r.radix), join_dims(r.dims),
                        std::to_string(r.total_n), std::to_string(r.reps),
                        format_double(r.median_seconds, "%.6g"),
                        format_double(r.min_seconds, "%.6g"),
                        format_double(r.flop_estimate, "%.10g"),
                        format_double(r.bytes_estimate, "%.10g"),
                        format_double(r.ai_estimate, "%.6g")});
    }

    std::string out;
    if (format == TableFormat::csv) {
        for (int c = 0; c < 10; ++c) {
            if (c) out += ',';
            out += headers[c];
        }
        out += '\n';
        for (const auto& row : rows) {
            for (int c = 0; c < 10; ++c) {
                if (c) out += ',';
                out += row[static_cast<std::size_t>(c)];
            }
            out += '\n';
        }
        return out;
    }

    // Markdown: pad each column to its widest cell.
    std::size_t width[10];
    for (int c = 0; c < 10; ++c) width[c] = std::string(headers[c]).size();
    for (const auto& row : rows)
        for (int c = 0; c < 10; ++c)
            width[c] = std::max(width[c], row[static_cast<std::size_t>(c)].size());
    const auto emit_row = [&](const std::vector<std::string>& cells) {
        out += '|';
        for (int c = 0; c < 10; ++c) {
            std::string cell = cells[static_cast<std::size_t>(c)];
            cell.resize(width[c], ' ');
            out += ' ';
            out += cell;
            out += " |";
        }
        out += '\n';
    };
    std::vector<std::string> head(headers, headers + 10);
    emit_row(head);
    out += '|';
    for (int c = 0; c < 10; ++c) out += std::string(width[c] + 2, '-') + "|";
    out += '\n';
    for (const auto& row : rows) emit_row(row);
    return out;
}

}  // namespace pafft
