// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qifft/qifft.hpp"
#include "test_util.hpp"

using namespace qifft;
using namespace qifft::testing;

namespace {

// Butterfly with "+" on both outputs. The network it builds is singular, so
// inversion must fail with it.
struct PlusPlusButterfly {
  template <typename C>
  static void apply(std::span<C> top, std::span<C> bottom, C w) noexcept {
    for (std::size_t j = 0; j < top.size(); ++j) {
      const C t = w * bottom[j];
      top[j] = top[j] + t;
      bottom[j] = top[j];
    }
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* name, const Outcome& o) {
  std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

constexpr double kRoundTripTol = 1e-10;
constexpr double kOracleTol = 1e-10;
constexpr double kPropertyTol = 1e-10;
constexpr double kClassicalTol = 1e-12;
constexpr double kEngineSlopeMax = 1.5;
constexpr double kOracleSlopeMin = 1.8;

// 200 random sequences over N in {1..1024}, dim in {1,2,4}. Returns the worst error/tolerance ratio.
template <typename Butterfly>
double worst_round_trip_ratio() {
  std::mt19937_64 rng(2024);
  const std::size_t dims[] = {1, 2, 4};
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::size_t{1} << (i % 11);
    const std::size_t dim = dims[(i / 11) % 3];
    const auto x = random_sequence(rng, n, dim);
    const auto back = qifft::qifft<Butterfly>(qfft<Butterfly>(x).output).output;
    worst = std::max(worst, max_abs_diff(back, x) / (kRoundTripTol * std::max(1.0, max_modulus(x))));
  }
  return worst;
}

Outcome criterion_round_trip() {
  const double worst = worst_round_trip_ratio<DitButterfly>();
  return {worst <= 1.0, fmt("200 sequences, worst error/tolerance = %.3g (tolerance 1e-10*max(1,max|x|))", worst)};
}

Outcome criterion_oracle() {
  std::mt19937_64 rng(7);
  double worst_fwd = 0, worst_inv = 0;
  int cases = 0;
  for (std::size_t n = 1; n <= 256; n <<= 1)
    for (std::size_t dim = 1; dim <= 4; ++dim)
      for (int t = 0; t < 50; ++t) {
        const auto x = random_sequence(rng, n, dim);
        worst_fwd = std::max(worst_fwd, rel_frobenius(qfft(x).output, direct_dft(x).output));
        worst_inv = std::max(worst_inv, rel_frobenius(qifft::qifft(x).output, direct_idft(x).output));
        ++cases;
      }
  const bool pass = worst_fwd <= kOracleTol && worst_inv <= kOracleTol;
  return {pass, std::to_string(cases) + " cases, " +
                    fmt("worst rel Frobenius qfft=%.3g qifft=%.3g (tolerance 1e-10)", worst_fwd, worst_inv)};
}

double loglog_slope(const std::vector<double>& ns, const std::vector<double>& ts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = double(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(ns[i]);
    const double y = std::log(ts[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

// Best time per call, each sample batching enough calls to span >= ~2 ms.
double time_per_call(const std::function<void()>& fn, int samples) {
  using clock = std::chrono::steady_clock;
  int batch = 1;
  for (;;) {
    const auto t0 = clock::now();
    for (int i = 0; i < batch; ++i) fn();
    const double dt = std::chrono::duration<double>(clock::now() - t0).count();
    if (dt >= 2e-3 || batch >= (1 << 20)) break;
    batch *= 2;
  }
  double best = 1e300;
  for (int s = 0; s < samples; ++s) {
    const auto t0 = clock::now();
    for (int i = 0; i < batch; ++i) fn();
    best = std::min(best, std::chrono::duration<double>(clock::now() - t0).count() / batch);
  }
  return best;
}

Outcome criterion_complexity() {
  bool counts_ok = true;
  for (std::size_t n = 2; n <= 1024; n <<= 1) {
    const KetSequence x(n, 1);
    const auto rep = qfft(x);
    const std::uint64_t expected = (n / 2) * static_cast<std::uint64_t>(std::countr_zero(n));
    counts_ok = counts_ok && rep.butterfly_count == expected && qifft::qifft(x).butterfly_count == expected &&
                direct_dft(x).multiply_count == n * n && direct_idft(x).multiply_count == n * n;
  }

  std::mt19937_64 rng(99);
  std::vector<double> ns, engine_t, oracle_t;
  volatile double sink = 0;
  for (std::size_t n = 256; n <= 16384; n <<= 1) {
    const auto x = random_sequence(rng, n, 1);
    ns.push_back(double(n));
    engine_t.push_back(time_per_call([&] { sink = sink + qfft(x).output.data()[1].real(); }, 5));
    oracle_t.push_back(
        time_per_call([&] { sink = sink + direct_dft(x).output.data()[1].real(); }, n >= 4096 ? 1 : 3));
  }
  const double engine_slope = loglog_slope(ns, engine_t);
  const double oracle_slope = loglog_slope(ns, oracle_t);
  const bool pass = counts_ok && engine_slope < kEngineSlopeMax && oracle_slope > kOracleSlopeMin;
  return {pass, std::string(counts_ok ? "counts exact (N/2)log2N and N^2 for N=2..1024" : "COUNT MISMATCH") +
                    fmt("; log-log slope engine=%.3f (<1.5) oracle=%.3f (>1.8)", engine_slope, oracle_slope)};
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(QIFFT_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t occurrences(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

Outcome criterion_trace_structure() {
  const auto t = transform_trace(4, Direction::inverse);
  bool structure = t.size() == 2 && t[0].size() == 2 && t[1].size() == 2;
  if (structure) {
    structure = t[0][0] == ButterflyOp{0, 0, 1, 0} && t[0][1] == ButterflyOp{0, 2, 3, 0} &&
                t[1][0] == ButterflyOp{1, 0, 2, 0} && t[1][1] == ButterflyOp{1, 1, 3, 1};
  }
  const auto dot = trace_to_dot(4, Direction::inverse);
  const bool golden = dot == read_golden("trace_n4_inverse.dot");
  const bool wrapped = occurrences(dot, "label=\"conj\"") == 8 && occurrences(dot, "label=\"1/4\"") == 4 &&
                       occurrences(dot, "// butterfly stage=0") == 2 &&
                       occurrences(dot, "// butterfly stage=1") == 2 &&
                       dot.find("stage=1 top=1 bottom=3 twiddle=1/4") != std::string::npos &&
                       dot.find("conj_in") < dot.find("cluster_stage0") &&
                       dot.find("conj_out") > dot.find("cluster_stage1") &&
                       dot.find("scale0") > dot.find("conj_out0");
  return {structure && golden && wrapped,
          std::string("stages 2x2, exponents {0,0} then {0,1} over 4: ") + (structure ? "ok" : "MISMATCH") +
              "; golden file: " + (golden ? "identical" : "DIFFERS") + "; conj/1/N wrapping: " +
              (wrapped ? "ok" : "MISSING")};
}

Outcome criterion_classical() {
  double worst = 0;
  for (std::size_t n : {4u, 16u, 64u, 256u}) {
    const double dn = double(n);
    KetSequence impulse(n, 1), constant(n, 1), expo(n, 1);
    impulse.data()[0] = 1;
    for (std::size_t t = 0; t < n; ++t) constant.data()[t] = 1;
    const std::size_t bin = n / 4 + 1;
    for (std::size_t t = 0; t < n; ++t)
      expo.data()[t] = std::polar(1.0, 2 * std::numbers::pi * double((bin * t) % n) / dn);

    KetSequence ones(n, 1, Domain::frequency), dc(n, 1, Domain::frequency), line(n, 1, Domain::frequency);
    for (auto& z : ones.data()) z = 1;
    dc.data()[0] = dn;
    line.data()[bin] = dn;

    const std::pair<const KetSequence*, const KetSequence*> fixtures[] = {
        {&impulse, &ones}, {&constant, &dc}, {&expo, &line}};
    for (const auto& [in, analytic] : fixtures) {
      const auto engine = qfft(*in).output;
      worst = std::max(worst, max_abs_diff(engine, direct_dft(*in).output));
      worst = std::max(worst, max_abs_diff(engine, *analytic));
    }
  }
  return {worst <= kClassicalTol,
          fmt("impulse/constant/exponential, N=4..256, worst abs deviation = %.3g (tolerance 1e-12)", worst)};
}

Outcome criterion_parseval_linearity() {
  std::mt19937_64 rng(555);
  const std::size_t dims[] = {1, 2, 4};
  double worst_parseval = 0, worst_linear = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = std::size_t{1} << (i % 11);
    const std::size_t dim = dims[i % 3];
    const auto x = random_sequence(rng, n, dim);
    const double e_time = energy(x);
    const double e_freq = energy(qfft(x).output) / double(n);
    worst_parseval = std::max(worst_parseval, std::abs(e_time - e_freq) / e_time);
  }
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = std::size_t{1} << (i % 11);
    const std::size_t dim = dims[i % 3];
    const auto x = random_sequence(rng, n, dim);
    const auto y = random_sequence(rng, n, dim);
    const auto a = random_complex(rng);
    const auto b = random_complex(rng);
    worst_linear = std::max(
        worst_linear, rel_frobenius(qfft(combine(a, x, b, y)).output, combine(a, qfft(x).output, b, qfft(y).output)));
  }
  return {worst_parseval <= kPropertyTol && worst_linear <= kPropertyTol,
          fmt("100+100 instances, worst relative Parseval=%.3g linearity=%.3g (tolerance 1e-10)", worst_parseval,
              worst_linear)};
}

Outcome criterion_sign_regression() {
  const double literal = worst_round_trip_ratio<PlusPlusButterfly>();
  const double corrected = worst_round_trip_ratio<DitButterfly>();
  return {literal > 1.0 && corrected <= 1.0,
          fmt("'+/+' butterfly round-trip error/tolerance = %.3g (must exceed 1); '+/-' = %.3g", literal, corrected)};
}

bool bit_equal(const KetSequence& a, const KetSequence& b) {
  return a.length() == b.length() && a.dim() == b.dim() && a.domain() == b.domain() &&
         a.ordering() == b.ordering() &&
         std::memcmp(a.data().data(), b.data().data(), a.data().size_bytes()) == 0;
}

std::vector<std::string> corrupted_files() {
  const auto base = KetSequence(std::vector<Ket>{Ket{1.0, Complex(0, 2)}, Ket{-0.5, 3.25}}, Domain::time);
  const std::string good = write_signal(base, Format::json);
  auto replace = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    const auto p = s.find(from);
    if (p == std::string::npos) throw std::logic_error("mutation anchor not found: " + from);
    return s.replace(p, from.size(), to);
  };
  std::vector<std::string> files;
  const auto close = good.rfind('}');
  for (std::size_t cut : {std::size_t{1}, std::size_t{20}, good.find("samples"), good.find("[[") + 1,
                          good.find("], [") + 1, close - 3})
    files.push_back(good.substr(0, cut));
  files.push_back(replace("[[-0.5, 0.0], [3.25, 0.0]]", "[[-0.5, 0.0]]"));
  files.push_back(replace("[[-0.5, 0.0], [3.25, 0.0]]", "[[-0.5, 0.0], [3.25, 0.0], [1.0, 1.0]]"));
  files.push_back(replace("\"dim\": 2", "\"dim\": 3"));
  files.push_back(replace("\"length\": 2", "\"length\": 3"));
  files.push_back(replace("3.25", "NaN"));
  files.push_back(replace("3.25", "Infinity"));
  files.push_back(replace("3.25", "1e999"));
  files.push_back(replace("3.25", "\"3.25\""));
  files.push_back(replace("[3.25, 0.0]", "[3.25]"));
  files.push_back(replace("\"time\"", "\"spatial\""));
  files.push_back(replace("\"natural\"", "\"reversed\""));
  files.push_back(replace("\"samples\"", "\"sample\""));
  files.push_back(replace(", 2.0]", " 2.0]"));
  files.push_back(replace("\"length\": 2", "\"length\": -2"));
  return files;
}

Outcome criterion_signal_io() {
  std::mt19937_64 rng(8080);
  std::uniform_int_distribution<std::uint64_t> bits;
  int exact = 0;
  for (int i = 0; i < 100; ++i) {
    auto s = random_sequence(rng, 1 + i % 33, 1 + i % 4);
    for (auto& z : s.data()) {
      double im = std::bit_cast<double>(bits(rng));
      if (!std::isfinite(im)) im = -0.0;
      z = {z.real(), im};
    }
    if (i % 2) s.set_domain(Domain::frequency);
    if (i % 3 == 0) s.set_ordering(Ordering::bit_reversed);
    if (bit_equal(read_signal(write_signal(s, Format::json), Format::json), s)) ++exact;
  }
  const auto files = corrupted_files();
  int rejected = 0;
  for (const auto& f : files) {
    try {
      read_signal(f, Format::json);
    } catch (const Error& e) {
      if (std::strlen(e.what()) > 0) ++rejected;
    }
  }
  const bool pass = exact == 100 && files.size() == 20 && rejected == 20;
  return {pass, std::to_string(exact) + "/100 bit-exact round trips; " + std::to_string(rejected) + "/" +
                    std::to_string(files.size()) + " corrupted files rejected with diagnostics"};
}

}  // namespace

int main() {
  report("C1", "round-trip identity", criterion_round_trip());
  report("C2", "oracle equivalence", criterion_oracle());
  report("C3", "complexity witness", criterion_complexity());
  report("C4", "four-point inverse network structure", criterion_trace_structure());
  report("C5", "classical degeneration", criterion_classical());
  report("C6", "Parseval and linearity", criterion_parseval_linearity());
  report("C7", "sign-correction regression", criterion_sign_regression());
  report("C8", "signal-io round trip and rejection", criterion_signal_io());
  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
