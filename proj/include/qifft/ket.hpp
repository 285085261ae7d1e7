// ket.hpp
// Vector-valued samples ("kets"), sequences of them, and the primitive
// operations every butterfly is built from: addition, scalar product and
// componentwise conjugation. Kets are plain complex vectors; nothing here
// renormalizes.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qifft/error.hpp"

namespace qifft {

enum class Domain { time, frequency };
enum class Ordering { natural, bit_reversed };

constexpr std::string_view to_string(Domain d) noexcept {
  return d == Domain::time ? "time" : "frequency";
}

constexpr std::string_view to_string(Ordering o) noexcept {
  return o == Ordering::natural ? "natural" : "bit_reversed";
}

constexpr Domain flipped(Domain d) noexcept {
  return d == Domain::time ? Domain::frequency : Domain::time;
}

constexpr Ordering flipped(Ordering o) noexcept {
  return o == Ordering::natural ? Ordering::bit_reversed : Ordering::natural;
}

template <typename Real>
class BasicKet {
 public:
  using value_type = std::complex<Real>;

  // Zero ket of the given dimension.
  explicit BasicKet(std::size_t dim) : amps_(dim) {
    if (dim == 0) throw SizeError("ket dimension must be at least 1", dim);
  }

  BasicKet(std::initializer_list<value_type> amps) : BasicKet(std::vector<value_type>(amps)) {}

  explicit BasicKet(std::vector<value_type> amps) : amps_(std::move(amps)) {
    if (amps_.empty()) throw SizeError("ket dimension must be at least 1", 0);
  }

  explicit BasicKet(std::span<const value_type> amps) : BasicKet(std::vector<value_type>(amps.begin(), amps.end())) {}

  std::size_t dim() const noexcept { return amps_.size(); }

  value_type& operator[](std::size_t j) noexcept { return amps_[j]; }
  const value_type& operator[](std::size_t j) const noexcept { return amps_[j]; }

  std::span<value_type> amplitudes() noexcept { return amps_; }
  std::span<const value_type> amplitudes() const noexcept { return amps_; }

  auto begin() noexcept { return amps_.begin(); }
  auto end() noexcept { return amps_.end(); }
  auto begin() const noexcept { return amps_.begin(); }
  auto end() const noexcept { return amps_.end(); }

  friend bool operator==(const BasicKet&, const BasicKet&) = default;

 private:
  std::vector<value_type> amps_;
};

// a + b, componentwise.
template <typename Real>
BasicKet<Real> ket_add(const BasicKet<Real>& a, const BasicKet<Real>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  BasicKet<Real> out(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) out[j] = a[j] + b[j];
  return out;
}

template <typename Real>
BasicKet<Real> ket_scale(std::complex<Real> s, const BasicKet<Real>& a) {
  BasicKet<Real> out(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) out[j] = s * a[j];
  return out;
}

template <typename Real>
BasicKet<Real> ket_conj(const BasicKet<Real>& a) {
  BasicKet<Real> out(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) out[j] = std::conj(a[j]);
  return out;
}

template <typename Real>
Real squared_norm(const BasicKet<Real>& a) noexcept {
  Real acc = 0;
  for (const auto& z : a) acc += std::norm(z);
  return acc;
}

// N samples of uniform dimension, stored contiguously sample-major so that
// the transform engine can work on spans without per-sample allocation.
template <typename Real>
class BasicKetSequence {
 public:
  using value_type = std::complex<Real>;
  using ket_type = BasicKet<Real>;

  BasicKetSequence(std::size_t length, std::size_t dim, Domain domain = Domain::time,
                   Ordering ordering = Ordering::natural)
      : length_(length), dim_(dim), domain_(domain), ordering_(ordering) {
    if (length == 0) throw SizeError("sequence length must be at least 1", length);
    if (dim == 0) throw SizeError("ket dimension must be at least 1", dim);
    data_.assign(length * dim, value_type{});
  }

  explicit BasicKetSequence(const std::vector<ket_type>& samples, Domain domain = Domain::time,
                            Ordering ordering = Ordering::natural)
      : BasicKetSequence(samples.size(), samples.empty() ? 1 : samples.front().dim(), domain, ordering) {
    for (std::size_t i = 0; i < length_; ++i) set(i, samples[i]);
  }

  // Scalar (dim = 1) sequence, the classical case.
  static BasicKetSequence from_scalars(std::span<const value_type> values, Domain domain = Domain::time,
                                       Ordering ordering = Ordering::natural) {
    BasicKetSequence s(values.size(), 1, domain, ordering);
    std::copy(values.begin(), values.end(), s.data_.begin());
    return s;
  }

  static BasicKetSequence from_scalars(std::initializer_list<value_type> values, Domain domain = Domain::time,
                                       Ordering ordering = Ordering::natural) {
    return from_scalars(std::span<const value_type>(values.begin(), values.size()), domain, ordering);
  }

  std::size_t length() const noexcept { return length_; }
  std::size_t dim() const noexcept { return dim_; }
  Domain domain() const noexcept { return domain_; }
  Ordering ordering() const noexcept { return ordering_; }
  void set_domain(Domain d) noexcept { domain_ = d; }
  void set_ordering(Ordering o) noexcept { ordering_ = o; }

  std::span<value_type> sample(std::size_t i) noexcept { return {data_.data() + i * dim_, dim_}; }
  std::span<const value_type> sample(std::size_t i) const noexcept { return {data_.data() + i * dim_, dim_}; }

  ket_type ket(std::size_t i) const { return ket_type(sample(i)); }

  void set(std::size_t i, const ket_type& k) {
    if (k.dim() != dim_) throw DimensionMismatch(dim_, k.dim());
    std::copy(k.begin(), k.end(), sample(i).begin());
  }

  // All N*dim amplitudes, sample-major.
  std::span<value_type> data() noexcept { return data_; }
  std::span<const value_type> data() const noexcept { return data_; }

  friend bool operator==(const BasicKetSequence&, const BasicKetSequence&) = default;

 private:
  std::size_t length_;
  std::size_t dim_;
  Domain domain_;
  Ordering ordering_;
  std::vector<value_type> data_;
};

template <typename Real>
BasicKetSequence<Real> seq_conj(BasicKetSequence<Real> s) {
  for (auto& z : s.data()) z = std::conj(z);
  return s;
}

template <typename Real>
BasicKetSequence<Real> seq_scale(std::complex<Real> c, BasicKetSequence<Real> s) {
  for (auto& z : s.data()) z = c * z;
  return s;
}

// Roots of unity W_N^k = exp(-2*pi*i*k/N), 0 <= k < N.
template <typename Real>
class BasicTwiddleTable {
 public:
  using value_type = std::complex<Real>;

  explicit BasicTwiddleTable(std::size_t n) : roots_(n) {
    if (n == 0) throw SizeError("twiddle table size must be at least 1", n);
    for (std::size_t k = 0; k < n; ++k) {
      // Multiples of a quarter turn are exact.
      if ((4 * k) % n == 0) {
        static constexpr value_type quarter[] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
        roots_[k] = quarter[(4 * k) / n];
        continue;
      }
      const Real angle = -2 * std::numbers::pi_v<Real> * static_cast<Real>(k) / static_cast<Real>(n);
      roots_[k] = {std::cos(angle), std::sin(angle)};
    }
  }

  std::size_t size() const noexcept { return roots_.size(); }
  const value_type& operator[](std::size_t k) const noexcept { return roots_[k]; }
  std::span<const value_type> roots() const noexcept { return roots_; }

 private:
  std::vector<value_type> roots_;
};

template <typename Real = double>
BasicTwiddleTable<Real> twiddle_table(std::size_t n) {
  return BasicTwiddleTable<Real>(n);
}

using Complex = std::complex<double>;
using Ket = BasicKet<double>;
using KetSequence = BasicKetSequence<double>;
using TwiddleTable = BasicTwiddleTable<double>;

}  // namespace qifft
