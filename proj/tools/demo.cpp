// Transforms a small two-component ket sequence, inverts it, and prints the
// butterfly schedule.

#include <cstdio>

#include "qifft/qifft.hpp"

int main() {
  using namespace std::complex_literals;
  using qifft::Ket;

  const qifft::KetSequence x(std::vector<Ket>{
      Ket{1.0, 0.0},
      Ket{0.5i, 1.0},
      Ket{-1.0, 0.25},
      Ket{0.0, -1i},
  });

  qifft::TransformConfig cfg;
  cfg.trace_enabled = true;
  const auto spectrum = qifft::qfft(x, cfg);
  const auto back = qifft::qifft(spectrum.output);

  std::printf("k  |X_k> component 0          component 1\n");
  for (std::size_t k = 0; k < spectrum.output.length(); ++k) {
    const auto s = spectrum.output.sample(k);
    std::printf("%zu  (%+.3f %+.3fi)  (%+.3f %+.3fi)\n", k, s[0].real(), s[0].imag(), s[1].real(), s[1].imag());
  }

  std::printf("\nbutterflies: %llu\n", static_cast<unsigned long long>(spectrum.butterfly_count));
  for (const auto& stage : *spectrum.trace)
    for (const auto& op : stage)
      std::printf("  stage %u: (%zu, %zu) W_%zu^%zu\n", op.stage, op.top_index, op.bottom_index, x.length(),
                  op.twiddle_exponent);

  double err = 0;
  for (std::size_t i = 0; i < x.data().size(); ++i) err = std::max(err, std::abs(back.output.data()[i] - x.data()[i]));
  std::printf("\nround-trip max error: %.3g\n", err);
  return err < 1e-12 ? 0 : 1;
}
