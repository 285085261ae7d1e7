// oracle.hpp
// Direct O(N^2) DFT/IDFT over ket sequences. Accepts any length. Each kernel
// value is evaluated from the exponential on its own and never read from a
// TwiddleTable, so these functions serve as a separate reference for the engine.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>

#include "qifft/ket.hpp"

namespace qifft {

template <typename Real>
struct BasicOracleResult {
  BasicKetSequence<Real> output;
  std::uint64_t multiply_count = 0;
};

using OracleResult = BasicOracleResult<double>;

namespace detail {

// sign = -1: output[k] = sum_n exp(-2*pi*i*n*k/N) s[n]
// sign = +1: output[n] = sum_k exp(+2*pi*i*n*k/N) s[k]
template <typename Real>
BasicOracleResult<Real> direct_sum(const BasicKetSequence<Real>& s, int sign, Domain out_domain) {
  const std::size_t n = s.length();
  const std::size_t dim = s.dim();
  BasicOracleResult<Real> result{BasicKetSequence<Real>(n, dim, out_domain, Ordering::natural)};
  const Real turn = 2 * std::numbers::pi_v<Real> / static_cast<Real>(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto acc = result.output.sample(k);
    for (std::size_t t = 0; t < n; ++t) {
      // Reduce n*k mod N before forming the angle.
      const Real angle = sign * turn * static_cast<Real>((t * k) % n);
      const std::complex<Real> kernel = std::exp(std::complex<Real>(0, angle));
      const auto x = s.sample(t);
      for (std::size_t j = 0; j < dim; ++j) acc[j] += kernel * x[j];
      ++result.multiply_count;
    }
  }
  return result;
}

}  // namespace detail

template <typename Real>
BasicOracleResult<Real> direct_dft(const BasicKetSequence<Real>& s) {
  return detail::direct_sum(s, -1, Domain::frequency);
}

template <typename Real>
BasicOracleResult<Real> direct_idft(const BasicKetSequence<Real>& s) {
  auto result = detail::direct_sum(s, +1, Domain::time);
  const Real inv_n = Real{1} / static_cast<Real>(s.length());
  for (auto& z : result.output.data()) z *= inv_n;
  return result;
}

}  // namespace qifft
