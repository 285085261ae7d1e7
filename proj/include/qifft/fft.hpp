// fft.hpp
// Radix-2 decimation-in-time butterfly engine over ket-valued sequences.
//
// The forward transform computes X[k] = sum_n W_N^{nk} x[n] with
// W_N = exp(-2*pi*i/N). The inverse never uses a positive-exponent table:
// it conjugates the input, runs the same forward network, conjugates the
// result and divides by N.

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qifft/error.hpp"
#include "qifft/ket.hpp"

namespace qifft {

enum class Convention { standard, unitary };
enum class Direction { forward, inverse };

constexpr bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

// Number of butterfly stages for an N-point transform; N must be a power of two.
constexpr unsigned stage_count(std::size_t n) noexcept { return static_cast<unsigned>(std::countr_zero(n)); }

// Reverses the low `bits` bits of j.
constexpr std::size_t bit_reverse(std::size_t j, unsigned bits) noexcept {
  std::size_t r = 0;
  for (unsigned b = 0; b < bits; ++b) {
    r = (r << 1) | (j & 1);
    j >>= 1;
  }
  return r;
}

inline void require_radix2(std::size_t n) {
  if (n == 0) throw SizeError("transform length must be at least 1", n);
  if (!is_power_of_two(n))
    throw SizeError("transform length " + std::to_string(n) + " is not a power of two", n);
}

// One two-input two-output crossing of the network. The applied factor is
// W_N^twiddle_exponent, i.e. the exponent is expressed over the common
// denominator N regardless of the stage's own span.
struct ButterflyOp {
  unsigned stage = 0;
  std::size_t top_index = 0;
  std::size_t bottom_index = 0;
  std::size_t twiddle_exponent = 0;

  friend bool operator==(const ButterflyOp&, const ButterflyOp&) = default;
};

// Outer index is the stage.
using Trace = std::vector<std::vector<ButterflyOp>>;

struct TransformConfig {
  Convention convention = Convention::standard;
  // bit_reversed means the caller already permuted the input; the engine skips its own permutation.
  Ordering input_ordering = Ordering::natural;
  bool trace_enabled = false;
};

template <typename Real>
struct BasicTransformReport {
  BasicKetSequence<Real> output;
  std::uint64_t butterfly_count = 0;
  std::uint64_t ket_add_count = 0;
  std::uint64_t ket_scale_count = 0;
  std::optional<Trace> trace;
};

using TransformReport = BasicTransformReport<double>;

// (top, bottom) -> (top + w*bottom, top - w*bottom), in place.
struct DitButterfly {
  template <typename C>
  static void apply(std::span<C> top, std::span<C> bottom, C w) noexcept {
    for (std::size_t j = 0; j < top.size(); ++j) {
      const C t = w * bottom[j];
      bottom[j] = top[j] - t;
      top[j] = top[j] + t;
    }
  }
};

template <typename Real>
std::pair<BasicKet<Real>, BasicKet<Real>> butterfly(const BasicKet<Real>& top, const BasicKet<Real>& bottom,
                                                    std::complex<Real> w) {
  if (top.dim() != bottom.dim()) throw DimensionMismatch(top.dim(), bottom.dim());
  std::pair<BasicKet<Real>, BasicKet<Real>> out{top, bottom};
  DitButterfly::apply(out.first.amplitudes(), out.second.amplitudes(), w);
  return out;
}

// Moves sample j to bitreverse(j) and flips the ordering flag.
template <typename Real>
BasicKetSequence<Real> bit_reverse_permute(const BasicKetSequence<Real>& s) {
  const std::size_t n = s.length();
  if (!is_power_of_two(n))
    throw SizeError("bit reversal needs a power-of-two length, got " + std::to_string(n), n);
  const unsigned bits = stage_count(n);
  BasicKetSequence<Real> out(n, s.dim(), s.domain(), flipped(s.ordering()));
  for (std::size_t j = 0; j < n; ++j) {
    const auto src = s.sample(j);
    std::copy(src.begin(), src.end(), out.sample(bit_reverse(j, bits)).begin());
  }
  return out;
}

// Visits the iterative DIT schedule in execution order. Stage m combines
// blocks of span 2^(m+1); within a block, position j pairs top = start + j
// with bottom = top + 2^m under W_N^(j * N / 2^(m+1)).
template <typename Fn>
void for_each_butterfly(std::size_t n, Fn&& fn) {
  const unsigned stages = stage_count(n);
  for (unsigned m = 0; m < stages; ++m) {
    const std::size_t half = std::size_t{1} << m;
    const std::size_t span = half << 1;
    const std::size_t stride = n / span;
    for (std::size_t start = 0; start < n; start += span)
      for (std::size_t j = 0; j < half; ++j) fn(ButterflyOp{m, start + j, start + j + half, j * stride});
  }
}

// Stage-by-stage butterfly structure. The inverse runs the same network
// between its two conjugations, so direction does not change the result.
inline Trace transform_trace(std::size_t n, Direction = Direction::forward) {
  require_radix2(n);
  Trace trace(stage_count(n));
  for_each_butterfly(n, [&](const ButterflyOp& op) { trace[op.stage].push_back(op); });
  return trace;
}

template <typename Real>
Trace transform_trace(const BasicKetSequence<Real>& s, Direction direction = Direction::forward) {
  return transform_trace(s.length(), direction);
}

namespace detail {

// Runs the butterfly stages in place on `work`, which is already in bit-reversed order.
template <typename Butterfly, typename Real>
void run_stages(BasicKetSequence<Real>& work, BasicTransformReport<Real>& report, bool trace_enabled) {
  const std::size_t n = work.length();
  const BasicTwiddleTable<Real> table(n);
  if (trace_enabled) report.trace.emplace(stage_count(n));
  for_each_butterfly(n, [&](const ButterflyOp& op) {
    Butterfly::apply(work.sample(op.top_index), work.sample(op.bottom_index), table[op.twiddle_exponent]);
    if (trace_enabled) (*report.trace)[op.stage].push_back(op);
  });
  report.butterfly_count = (n / 2) * stage_count(n);
  report.ket_add_count = 2 * report.butterfly_count;
  report.ket_scale_count = report.butterfly_count;
}

template <typename Real>
BasicKetSequence<Real> working_copy(const BasicKetSequence<Real>& s, const TransformConfig& cfg) {
  require_radix2(s.length());
  if (cfg.input_ordering == Ordering::bit_reversed) return s;
  return bit_reverse_permute(s);
}

template <typename Real>
void scale_in_place(BasicKetSequence<Real>& s, Real factor, BasicTransformReport<Real>& report) {
  for (auto& z : s.data()) z *= factor;
  report.ket_scale_count += s.length();
}

}  // namespace detail

// Forward transform. Standard convention is unscaled; unitary scales by 1/sqrt(N).
template <typename Butterfly = DitButterfly, typename Real>
BasicTransformReport<Real> qfft(const BasicKetSequence<Real>& s, const TransformConfig& cfg = {}) {
  BasicTransformReport<Real> report{detail::working_copy(s, cfg), 0, 0, 0, std::nullopt};
  auto& work = report.output;
  detail::run_stages<Butterfly>(work, report, cfg.trace_enabled);
  if (cfg.convention == Convention::unitary)
    detail::scale_in_place(work, Real{1} / std::sqrt(static_cast<Real>(work.length())), report);
  work.set_domain(Domain::frequency);
  work.set_ordering(Ordering::natural);
  return report;
}

// Inverse transform: conjugate, forward network, conjugate, divide by N
// (by sqrt(N) under the unitary convention).
template <typename Butterfly = DitButterfly, typename Real>
BasicTransformReport<Real> qifft(const BasicKetSequence<Real>& s, const TransformConfig& cfg = {}) {
  BasicTransformReport<Real> report{seq_conj(detail::working_copy(s, cfg)), 0, 0, 0, std::nullopt};
  auto& work = report.output;
  detail::run_stages<Butterfly>(work, report, cfg.trace_enabled);
  const auto n = static_cast<Real>(work.length());
  const Real factor = cfg.convention == Convention::unitary ? Real{1} / std::sqrt(n) : Real{1} / n;
  for (auto& z : work.data()) z = std::conj(z);
  detail::scale_in_place(work, factor, report);
  work.set_domain(Domain::time);
  work.set_ordering(Ordering::natural);
  return report;
}

}  // namespace qifft
