// dot.hpp
// Renders the butterfly network of an N-point transform as a Graphviz
// digraph. Inputs are listed in bit-reversed label order, one cluster per
// stage, and edges into a butterfly's outputs carry W_N^e (top output) or
// -W_N^e (bottom output) when they come from the bottom input. The inverse
// direction is bracketed by per-lane conjugation nodes and a final scale node.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qifft/fft.hpp"

namespace qifft {

namespace detail {

inline std::string dot_node(const std::string& id, const std::string& shape, const std::string& label) {
  return "  " + id + " [shape=" + shape + ", label=\"" + label + "\"];\n";
}

inline std::string dot_edge(const std::string& from, const std::string& to, const std::string& label = {}) {
  std::string s = "  " + from + " -> " + to;
  if (!label.empty()) s += " [label=\"" + label + "\"]";
  return s + ";\n";
}

inline std::string lane(const char* prefix, std::size_t j) { return prefix + std::to_string(j); }

inline std::string stage_node(unsigned m, std::size_t j) {
  return "s" + std::to_string(m) + "_" + std::to_string(j);
}

}  // namespace detail

inline std::string trace_to_dot(std::size_t n, Direction direction, Convention convention = Convention::standard) {
  using namespace detail;
  const Trace trace = transform_trace(n, direction);
  const unsigned bits = stage_count(n);
  const bool inverse = direction == Direction::inverse;
  const std::string ns = std::to_string(n);
  const char* in_sym = inverse ? "X" : "x";
  const char* out_sym = inverse ? "x" : "X";

  std::string scale_label;
  if (convention == Convention::unitary) scale_label = "1/sqrt(" + ns + ")";
  else if (inverse) scale_label = "1/" + ns;

  std::string g = "digraph ";
  g += inverse ? "qifft_" : "qfft_";
  g += ns + " {\n  rankdir=LR;\n";
  g += "  label=\"" + std::string(inverse ? "inverse" : "forward") + " N=" + ns + "\";\n";

  g += "  // inputs, bit-reversed order\n";
  for (std::size_t j = 0; j < n; ++j)
    g += dot_node(lane("in", j), "plaintext", std::string(in_sym) + "[" + std::to_string(bit_reverse(j, bits)) + "]");

  std::vector<std::string> prev(n);
  for (std::size_t j = 0; j < n; ++j) prev[j] = lane("in", j);

  if (inverse) {
    g += "  // conjugate input\n";
    for (std::size_t j = 0; j < n; ++j) {
      g += dot_node(lane("conj_in", j), "box", "conj");
      g += dot_edge(prev[j], lane("conj_in", j));
      prev[j] = lane("conj_in", j);
    }
  }

  for (const auto& stage : trace) {
    const unsigned m = stage.front().stage;
    g += "  subgraph cluster_stage" + std::to_string(m) + " {\n";
    g += "    label=\"stage " + std::to_string(m) + "\";\n";
    for (std::size_t j = 0; j < n; ++j) g += "  " + dot_node(stage_node(m, j), "point", "");
    g += "  }\n";
    for (const auto& op : stage) {
      const std::string w = "W_" + ns + "^" + std::to_string(op.twiddle_exponent);
      const auto top_out = stage_node(m, op.top_index);
      const auto bottom_out = stage_node(m, op.bottom_index);
      g += "  // butterfly stage=" + std::to_string(m) + " top=" + std::to_string(op.top_index) +
           " bottom=" + std::to_string(op.bottom_index) + " twiddle=" + std::to_string(op.twiddle_exponent) + "/" +
           ns + "\n";
      g += dot_edge(prev[op.top_index], top_out);
      g += dot_edge(prev[op.bottom_index], top_out, w);
      g += dot_edge(prev[op.top_index], bottom_out);
      g += dot_edge(prev[op.bottom_index], bottom_out, "-" + w);
    }
    for (std::size_t j = 0; j < n; ++j) prev[j] = stage_node(m, j);
  }

  if (inverse) {
    g += "  // conjugate output\n";
    for (std::size_t j = 0; j < n; ++j) {
      g += dot_node(lane("conj_out", j), "box", "conj");
      g += dot_edge(prev[j], lane("conj_out", j));
      prev[j] = lane("conj_out", j);
    }
  }

  if (!scale_label.empty()) {
    g += "  // scale\n";
    for (std::size_t j = 0; j < n; ++j) {
      g += dot_node(lane("scale", j), "box", scale_label);
      g += dot_edge(prev[j], lane("scale", j));
      prev[j] = lane("scale", j);
    }
  }

  g += "  // outputs, natural order\n";
  for (std::size_t j = 0; j < n; ++j) {
    g += dot_node(lane("out", j), "plaintext", std::string(out_sym) + "[" + std::to_string(j) + "]");
    g += dot_edge(prev[j], lane("out", j));
  }
  g += "}\n";
  return g;
}

}  // namespace qifft
