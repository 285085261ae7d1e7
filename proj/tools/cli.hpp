// cli.hpp
// The qifft command-line front end. Kept as a header so the test suite can
// drive every subcommand in-process.
//
// Exit codes: 0 success, 1 validation/parse/IO error, 2 usage error.

#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qifft/qifft.hpp"

namespace qifft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

inline constexpr double kRoundTripTolerance = 1e-10;

class IoError : public Error {
 public:
  using Error::Error;
};

enum class GenKind { impulse, constant, exponential, random };

inline KetSequence generate(GenKind kind, std::size_t n, std::size_t dim, std::uint64_t seed, std::size_t bin) {
  KetSequence s(n, dim);
  switch (kind) {
    case GenKind::impulse:
      s.sample(0)[0] = 1.0;
      break;
    case GenKind::constant:
      for (std::size_t t = 0; t < n; ++t) s.sample(t)[0] = 1.0;
      break;
    case GenKind::exponential:
      for (std::size_t t = 0; t < n; ++t) {
        const double angle = 2 * std::numbers::pi * static_cast<double>((bin * t) % n) / static_cast<double>(n);
        s.sample(t)[0] = std::polar(1.0, angle);
      }
      break;
    case GenKind::random: {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      for (auto& z : s.data()) {
        const double re = u(rng);
        z = {re, u(rng)};
      }
      break;
    }
  }
  return s;
}

// Largest componentwise |a - b|.
inline double max_abs_difference(const KetSequence& a, const KetSequence& b) {
  double err = 0;
  const auto x = a.data();
  const auto y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) err = std::max(err, std::abs(x[i] - y[i]));
  return err;
}

inline double max_abs(const KetSequence& s) {
  double m = 0;
  for (const auto& z : s.data()) m = std::max(m, std::abs(z));
  return m;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("write failed for " + path);
}

// Files are read by extension; --format only describes stdin.
inline Format input_format(const std::string& path, const std::string& flag) {
  if (path != "-") return format_for_path(path);
  return flag.empty() ? Format::json : *parse_format(flag);
}

inline Format output_format(const std::string& path, const std::string& flag) {
  if (!flag.empty()) return *parse_format(flag);
  return path.empty() || path == "-" ? Format::json : format_for_path(path);
}

inline KetSequence pad_to_power_of_two(const KetSequence& s, std::ostream& err) {
  const std::size_t n = s.length();
  const std::size_t padded = std::bit_ceil(n);
  if (padded == n) return s;
  err << "warning: zero-padded from " << n << " to " << padded << " samples; the transform length is now " << padded
      << "\n";
  KetSequence out(padded, s.dim(), s.domain(), s.ordering());
  std::copy(s.data().begin(), s.data().end(), out.data().begin());
  return out;
}

inline KetSequence load_transform_input(const std::string& path, const std::string& format, bool pad,
                                        std::ostream& err) {
  auto s = read_signal(read_file(path), input_format(path, format));
  if (pad) return pad_to_power_of_two(s, err);
  if (!is_power_of_two(s.length()))
    throw SizeError("signal length " + std::to_string(s.length()) + " is not a power of two (use --pad zero)",
                    s.length());
  return s;
}

inline CLI::Validator power_of_two_validator(std::size_t min) {
  return CLI::Validator(
      [min](std::string& v) -> std::string {
        std::size_t n = 0;
        try {
          n = std::stoull(v);
        } catch (...) {
          return "not an integer: " + v;
        }
        if (n < min || !is_power_of_two(n)) return v + " is not a power of two >= " + std::to_string(min);
        return {};
      },
      "POW2");
}

inline const std::map<std::string, Convention> kConventions{{"standard", Convention::standard},
                                                    {"unitary", Convention::unitary}};

}  // namespace detail

struct TransformOptions {
  std::string input;
  std::string output;
  std::string format;
  std::string pad;
  std::string trace_path;
  Convention convention = Convention::standard;
  bool assume_bit_reversed = false;
  bool count_ops = false;
};

inline void run_transform(const TransformOptions& opt, Direction direction, std::ostream& out, std::ostream& err) {
  const auto input = detail::load_transform_input(opt.input, opt.format, !opt.pad.empty(), err);
  const Domain expected = direction == Direction::forward ? Domain::time : Domain::frequency;
  if (input.domain() != expected) {
    err << "warning: input is labelled " << to_string(input.domain()) << " domain; "
        << (direction == Direction::forward ? "fft" : "ifft") << " normally takes " << to_string(expected)
        << " domain input\n";
  }

  TransformConfig cfg;
  cfg.convention = opt.convention;
  cfg.input_ordering = opt.assume_bit_reversed || input.ordering() == Ordering::bit_reversed ? Ordering::bit_reversed
                                                                                            : Ordering::natural;
  const auto report = direction == Direction::forward ? qfft(input, cfg) : qifft(input, cfg);

  detail::write_output(opt.output, write_signal(report.output, detail::output_format(opt.output, opt.format)), out);
  if (!opt.trace_path.empty())
    detail::write_output(opt.trace_path, trace_to_dot(input.length(), direction, opt.convention), out);
  if (opt.count_ops) {
    err << "butterflies=" << report.butterfly_count << " ket_adds=" << report.ket_add_count
        << " ket_scales=" << report.ket_scale_count << "\n";
  }
}

struct BenchRow {
  std::size_t n = 0;
  std::uint64_t butterflies = 0;
  std::uint64_t oracle_multiplies = 0;
  double engine_seconds = 0;
  double oracle_seconds = 0;
};

// Best-of-`repetitions` wall time for engine and oracle on a random signal.
inline BenchRow bench_one(std::size_t n, std::size_t dim, unsigned repetitions, bool time_oracle = true) {
  const auto x = generate(GenKind::random, n, dim, 12345, 0);
  BenchRow row{n};
  using clock = std::chrono::steady_clock;
  row.engine_seconds = row.oracle_seconds = std::numeric_limits<double>::infinity();
  for (unsigned r = 0; r < std::max(1u, repetitions); ++r) {
    auto t0 = clock::now();
    const auto rep = qfft(x);
    auto t1 = clock::now();
    row.butterflies = rep.butterfly_count;
    row.engine_seconds = std::min(row.engine_seconds, std::chrono::duration<double>(t1 - t0).count());
    if (time_oracle) {
      t0 = clock::now();
      const auto ref = direct_dft(x);
      t1 = clock::now();
      row.oracle_multiplies = ref.multiply_count;
      row.oracle_seconds = std::min(row.oracle_seconds, std::chrono::duration<double>(t1 - t0).count());
    }
  }
  if (!time_oracle) {
    row.oracle_multiplies = static_cast<std::uint64_t>(n) * n;
    row.oracle_seconds = 0;
  }
  return row;
}

inline void print_bench_table(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << std::setw(8) << "n" << std::setw(14) << "butterflies" << std::setw(16) << "oracle_mults" << std::setw(12)
      << "ratio" << std::setw(14) << "engine_us" << std::setw(14) << "oracle_us" << "\n";
  for (const auto& r : rows) {
    const double ratio = static_cast<double>(r.butterflies) / static_cast<double>(r.oracle_multiplies);
    out << std::setw(8) << r.n << std::setw(14) << r.butterflies << std::setw(16) << r.oracle_multiplies
        << std::setw(12) << std::setprecision(6) << ratio << std::fixed << std::setprecision(2) << std::setw(14)
        << r.engine_seconds * 1e6 << std::setw(14) << r.oracle_seconds * 1e6 << std::defaultfloat << "\n";
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ket-valued radix-2 FFT / inverse FFT toolkit", "qifft"};
  app.require_subcommand(1);

  TransformOptions fft_opt;
  TransformOptions ifft_opt;
  auto add_transform = [&](const char* name, const char* desc, TransformOptions& o) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("input", o.input, "Input signal file ('-' for stdin)")->required();
    sub->add_option("-o,--output", o.output, "Output file (default stdout)");
    sub->add_option("--format", o.format, "Output format (and stdin input format), overriding the extension")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--pad", o.pad, "Zero-pad to the next power of two")->check(CLI::IsMember({"zero"}));
    sub->add_flag("--assume-bit-reversed", o.assume_bit_reversed, "Input is already in bit-reversed order");
    sub->add_option("--convention", o.convention, "standard or unitary scaling")
        ->transform(CLI::CheckedTransformer(detail::kConventions));
    sub->add_flag("--count-ops", o.count_ops, "Print operation counters to stderr");
    sub->add_option("--trace", o.trace_path, "Write the butterfly network as a DOT graph");
    return sub;
  };
  auto* fft_cmd = add_transform("fft", "Forward transform", fft_opt);
  auto* ifft_cmd = add_transform("ifft", "Inverse transform", ifft_opt);

  std::string gen_kind;
  std::size_t gen_n = 0;
  std::size_t gen_dim = 1;
  std::uint64_t gen_seed = 1;
  std::size_t gen_bin = 1;
  std::string gen_output;
  std::string gen_format;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a test signal");
  gen_cmd->add_option("kind", gen_kind, "impulse | constant | exponential | random")
      ->required()
      ->check(CLI::IsMember({"impulse", "constant", "exponential", "random"}));
  gen_cmd->add_option("-n,--length", gen_n, "Number of samples")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--dim", gen_dim, "Ket dimension")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen_seed, "Seed for random signals");
  gen_cmd->add_option("--bin", gen_bin, "Frequency bin for exponential signals");
  gen_cmd->add_option("-o,--output", gen_output, "Output file (default stdout)");
  gen_cmd->add_option("--format", gen_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string rt_input;
  std::string rt_format;
  std::string rt_pad;
  Convention rt_convention = Convention::standard;
  auto* rt_cmd = app.add_subcommand("roundtrip", "Check that ifft(fft(x)) reproduces x");
  rt_cmd->add_option("input", rt_input, "Input signal file ('-' for stdin)")->required();
  rt_cmd->add_option("--format", rt_format, "Format of stdin input")
      ->check(CLI::IsMember({"json", "csv"}));
  rt_cmd->add_option("--pad", rt_pad, "Zero-pad to the next power of two")->check(CLI::IsMember({"zero"}));
  rt_cmd->add_option("--convention", rt_convention, "standard or unitary scaling")
      ->transform(CLI::CheckedTransformer(detail::kConventions));

  std::size_t trace_n = 0;
  std::string trace_direction = "inverse";
  std::string trace_output;
  Convention trace_convention = Convention::standard;
  auto* trace_cmd = app.add_subcommand("trace", "Emit the butterfly network as a DOT graph");
  trace_cmd->add_option("-n,--length", trace_n, "Transform size")->required()->check(detail::power_of_two_validator(2));
  trace_cmd->add_option("--direction", trace_direction, "forward or inverse")
      ->check(CLI::IsMember({"forward", "inverse"}));
  trace_cmd->add_option("--convention", trace_convention, "standard or unitary scaling")
      ->transform(CLI::CheckedTransformer(detail::kConventions));
  trace_cmd->add_option("-o,--output", trace_output, "Output file (default stdout)");

  std::vector<std::size_t> bench_sizes{2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
  std::size_t bench_dim = 1;
  unsigned bench_reps = 3;
  auto* bench_cmd = app.add_subcommand("bench", "Compare engine and direct-DFT operation counts and timings");
  bench_cmd->add_option("-n,--sizes", bench_sizes, "Comma-separated transform sizes")
      ->delimiter(',')
      ->check(detail::power_of_two_validator(1));
  bench_cmd->add_option("--dim", bench_dim, "Ket dimension")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--reps", bench_reps, "Repetitions per size (best time is reported)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*fft_cmd) {
      run_transform(fft_opt, Direction::forward, out, err);
    } else if (*ifft_cmd) {
      run_transform(ifft_opt, Direction::inverse, out, err);
    } else if (*gen_cmd) {
      const GenKind kind = gen_kind == "impulse"    ? GenKind::impulse
                           : gen_kind == "constant" ? GenKind::constant
                           : gen_kind == "random"   ? GenKind::random
                                                    : GenKind::exponential;
      const auto s = generate(kind, gen_n, gen_dim, gen_seed, gen_bin);
      detail::write_output(gen_output, write_signal(s, detail::output_format(gen_output, gen_format)), out);
    } else if (*rt_cmd) {
      const auto x = detail::load_transform_input(rt_input, rt_format, !rt_pad.empty(), err);
      TransformConfig cfg;
      cfg.convention = rt_convention;
      const auto back = qifft(qfft(x, cfg).output, cfg).output;
      const double error = max_abs_difference(back, x);
      const double tolerance = kRoundTripTolerance * std::max(1.0, max_abs(x));
      const bool pass = error <= tolerance;
      out << "n=" << x.length() << " dim=" << x.dim() << " max_abs_error=" << std::setprecision(6) << error
          << " tolerance=" << tolerance << " " << (pass ? "PASS" : "FAIL") << "\n";
      return pass ? kExitOk : kExitInvalid;
    } else if (*trace_cmd) {
      const Direction dir = trace_direction == "forward" ? Direction::forward : Direction::inverse;
      detail::write_output(trace_output, trace_to_dot(trace_n, dir, trace_convention), out);
    } else if (*bench_cmd) {
      std::vector<BenchRow> rows;
      for (const auto n : bench_sizes) rows.push_back(bench_one(n, bench_dim, bench_reps));
      print_bench_table(rows, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace qifft::cli
