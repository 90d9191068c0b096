// Command-line front end: `pafft bench` times one operation and emits a
// CSV or markdown table; `pafft verify` replays the reference checks.
// Exit codes: 0 success, 1 verification failure, 2 usage or plan error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pafft/bench.hpp"
#include "pafft/verify.hpp"

namespace {

// "64x64" -> {64, 64}; accepts any positive extents, the plan validates.
std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> dims;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find('x', pos);
        const std::string part =
            text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (part.empty()) throw pafft::Error("bad --dims value '" + text + "'");
        dims.push_back(static_cast<std::size_t>(std::stoull(part)));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return dims;
}

int run_bench_command(const std::string& op_name, unsigned radix_num, const std::string& dims_text,
                      int reps, int warmup, std::uint64_t seed, const std::string& format,
                      const std::string& out_path) {
    pafft::BenchConfig config;
    config.op = pafft::bench_op_from_name(op_name);
    config.radix = pafft::radix_from_value(radix_num);
    config.dims = parse_dims(dims_text);
    config.reps = reps;
    config.warmup = warmup;
    config.seed = seed;

    const pafft::BenchRecord record = pafft::run_bench(config);
    const std::string table = pafft::emit_table(
        {record}, format == "md" ? pafft::TableFormat::md : pafft::TableFormat::csv);

    if (out_path.empty()) {
        std::cout << table;
    } else {
        std::ofstream out(out_path);
        if (!out) throw pafft::Error("cannot open '" + out_path + "' for writing");
        out << table;
    }
    // Run metadata goes to stderr so the table stays machine-parseable.
    std::cerr << "# bench op=" << record.op << " radix=" << record.radix
              << " reps=" << reps << " warmup=" << warmup << " seed=" << seed
              << " prng=splitmix64 clock=steady_clock\n";
    return 0;
}

int run_verify_command(std::optional<unsigned> radix_num, std::uint64_t seed) {
    std::optional<pafft::Radix> filter;
    if (radix_num) filter = pafft::radix_from_value(*radix_num);

    std::vector<pafft::VerifyCase> cases = pafft::verify_transforms(seed, filter);
    std::vector<pafft::VerifyCase> conv = pafft::verify_convolutions(seed + 1, filter);
    cases.insert(cases.end(), conv.begin(), conv.end());

    std::size_t failed = 0;
    for (const pafft::VerifyCase& c : cases) {
        if (!c.pass) {
            ++failed;
            std::printf("FAIL %-40s max_err=%.3e tol=%.3e\n", c.name.c_str(), c.max_err, c.tol);
        }
    }
    std::printf("%zu/%zu checks passed\n", cases.size() - failed, cases.size());
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"general-radix FFT and circular-convolution benchmark/verification tool"};
    app.require_subcommand(1);

    std::string op_name = "fft";
    unsigned radix_num = 2;
    std::string dims_text;
    int reps = 5;
    int warmup = 1;
    std::uint64_t seed = 0x5eed5eed5eed5eedULL;
    std::string format = "csv";
    std::string out_path;

    CLI::App* bench = app.add_subcommand("bench", "time one operation and emit a table");
    bench->add_option("--op", op_name,
                      "permute|fft|fft-unordered|ifft|ifft-unordered|conv-std|conv-pa|"
                      "prepare-filter")
        ->required();
    bench->add_option("--radix", radix_num, "2, 4, or 8")->default_val(2);
    bench->add_option("--dims", dims_text, "extents joined by 'x', e.g. 1024 or 64x64")
        ->required();
    bench->add_option("--reps", reps, "timed repetitions")->default_val(5);
    bench->add_option("--warmup", warmup, "untimed repetitions")->default_val(1);
    bench->add_option("--seed", seed, "input generator seed");
    bench->add_option("--format", format, "csv or md")
        ->check(CLI::IsMember({"csv", "md"}))
        ->default_val("csv");
    bench->add_option("--out", out_path, "write the table here instead of stdout");

    std::optional<unsigned> verify_radix;
    CLI::App* verify = app.add_subcommand("verify", "run reference checks, exit 1 on failure");
    verify->add_option("--radix", verify_radix, "restrict to one radix");
    verify->add_option("--seed", seed, "random-case seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (bench->parsed())
            return run_bench_command(op_name, radix_num, dims_text, reps, warmup, seed, format,
                                     out_path);
        return run_verify_command(verify_radix, seed);
    } catch (const pafft::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
