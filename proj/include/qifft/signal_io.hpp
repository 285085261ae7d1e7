// signal_io.hpp
// On-disk signal files.
//
// JSON (any dim):
//   {"length": N, "dim": d, "domain": "time"|"frequency",
//    "ordering": "natural"|"bit_reversed",
//    "samples": [ [[re, im], ... d pairs], ... N samples ]}
//
// CSV (dim = 1 only): one "re,im" row per sample, optional "re,im" header.
// Domain and ordering default to time/natural on read and are not written.
//
// Numbers are written in shortest round-trip decimal form, so a read of a
// written sequence reproduces every double bit for bit.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "qifft/error.hpp"
#include "qifft/ket.hpp"

namespace qifft {

enum class Format { json, csv };

inline std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

// ".csv" selects CSV; anything else is JSON.
inline Format format_for_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot != std::string_view::npos) {
    std::string ext(path.substr(dot + 1));
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == "csv") return Format::csv;
  }
  return Format::json;
}

namespace detail {

// Shortest round-trip text that always reads back as a floating-point number.
inline void append_number(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string_view s(buf, static_cast<std::size_t>(res.ptr - buf));
  out += s;
  if (s.find_first_of(".eEn") == std::string_view::npos) out += ".0";
}

inline std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline std::size_t json_size_field(const nlohmann::json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
  if (!it->is_number_integer() || it->get<long long>() < 1)
    throw ValidationError(std::string("field \"") + key + "\" must be a positive integer");
  return it->get<std::size_t>();
}

inline std::string json_string_field(const nlohmann::json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
  if (!it->is_string()) throw ValidationError(std::string("field \"") + key + "\" must be a string");
  return it->get<std::string>();
}

inline double json_component(const nlohmann::json& v, std::size_t sample) {
  if (!v.is_number()) throw ValidationError("amplitude component is not a number", sample);
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ValidationError("non-finite amplitude component", sample);
  return d;
}

inline KetSequence read_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(e.what(), line, column);
  } catch (const nlohmann::json::exception& e) {
    // e.g. a literal too large for a double
    throw ValidationError(e.what());
  }
  if (!doc.is_object()) throw ValidationError("top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "length" && key != "dim" && key != "domain" && key != "ordering" && key != "samples")
      throw ValidationError("unknown field \"" + key + "\"");
  }

  const std::size_t length = json_size_field(doc, "length");
  const std::size_t dim = json_size_field(doc, "dim");

  const std::string domain_name = json_string_field(doc, "domain");
  Domain domain;
  if (domain_name == "time") domain = Domain::time;
  else if (domain_name == "frequency") domain = Domain::frequency;
  else throw ValidationError("unknown domain \"" + domain_name + "\"");

  const std::string ordering_name = json_string_field(doc, "ordering");
  Ordering ordering;
  if (ordering_name == "natural") ordering = Ordering::natural;
  else if (ordering_name == "bit_reversed") ordering = Ordering::bit_reversed;
  else throw ValidationError("unknown ordering \"" + ordering_name + "\"");

  const auto samples_it = doc.find("samples");
  if (samples_it == doc.end()) throw ValidationError("missing field \"samples\"");
  if (!samples_it->is_array()) throw ValidationError("field \"samples\" must be an array");
  const auto& samples = *samples_it;
  if (samples.size() != length) {
    throw ValidationError("samples has " + std::to_string(samples.size()) + " entries but length is " +
                              std::to_string(length),
                          std::min(samples.size(), length));
  }

  KetSequence seq(length, dim, domain, ordering);
  for (std::size_t i = 0; i < length; ++i) {
    const auto& ket = samples[i];
    if (!ket.is_array()) throw ValidationError("sample is not an array", i);
    if (ket.size() != dim)
      throw ValidationError("expected " + std::to_string(dim) + " amplitudes, found " + std::to_string(ket.size()), i);
    auto out = seq.sample(i);
    for (std::size_t j = 0; j < dim; ++j) {
      const auto& pair = ket[j];
      if (!pair.is_array() || pair.size() != 2) throw ValidationError("amplitude must be a [re, im] pair", i);
      out[j] = {json_component(pair[0], i), json_component(pair[1], i)};
    }
  }
  return seq;
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double csv_field(std::string_view line_text, std::string_view field, std::size_t line) {
  const auto t = trim(field);
  const std::size_t column = static_cast<std::size_t>(field.data() - line_text.data()) + 1;
  if (t.empty()) throw ParseError("empty field", line, column);
  double v = 0;
  // from_chars rejects a leading '+', which is common in hand-written files.
  const char* first = t.data();
  if (*first == '+') ++first;
  const auto res = std::from_chars(first, t.data() + t.size(), v);
  if (res.ec == std::errc::result_out_of_range) throw ParseError("number out of range", line, column);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size())
    throw ParseError("not a number: \"" + std::string(t) + "\"", line, column);
  return v;
}

inline KetSequence read_csv(std::string_view text) {
  std::vector<Complex> values;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    const auto line_text = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line;
    const auto content = trim(line_text);
    if (content.empty()) continue;
    if (line == 1 && content == "re,im") continue;

    const auto comma = line_text.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected two columns re,im", line, line_text.size() + 1);
    if (line_text.find(',', comma + 1) != std::string_view::npos)
      throw ParseError("expected two columns re,im", line, line_text.find(',', comma + 1) + 1);
    const double re = csv_field(line_text, line_text.substr(0, comma), line);
    const double im = csv_field(line_text, line_text.substr(comma + 1), line);
    if (!std::isfinite(re) || !std::isfinite(im))
      throw ValidationError("non-finite amplitude component", values.size());
    values.emplace_back(re, im);
  }
  if (values.empty()) throw ValidationError("signal has no samples");
  return KetSequence::from_scalars(values);
}

}  // namespace detail

inline KetSequence read_signal(std::string_view text, Format format) {
  return format == Format::json ? detail::read_json(text) : detail::read_csv(text);
}

inline KetSequence read_signal(std::istream& in, Format format) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return read_signal(std::string_view(text), format);
}

inline std::string write_signal(const KetSequence& s, Format format) {
  std::string out;
  if (format == Format::csv) {
    if (s.dim() != 1)
      throw UnsupportedFormat("csv holds only dim=1 signals, this one has dim=" + std::to_string(s.dim()));
    for (const auto& z : s.data()) {
      detail::append_number(out, z.real());
      out += ',';
      detail::append_number(out, z.imag());
      out += '\n';
    }
    return out;
  }

  out += "{\n  \"length\": " + std::to_string(s.length()) + ",\n";
  out += "  \"dim\": " + std::to_string(s.dim()) + ",\n";
  out += "  \"domain\": \"" + std::string(to_string(s.domain())) + "\",\n";
  out += "  \"ordering\": \"" + std::string(to_string(s.ordering())) + "\",\n";
  out += "  \"samples\": [\n";
  for (std::size_t i = 0; i < s.length(); ++i) {
    out += "    [";
    const auto ket = s.sample(i);
    for (std::size_t j = 0; j < ket.size(); ++j) {
      if (j) out += ", ";
      out += '[';
      detail::append_number(out, ket[j].real());
      out += ", ";
      detail::append_number(out, ket[j].imag());
      out += ']';
    }
    out += i + 1 < s.length() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

inline void write_signal(std::ostream& os, const KetSequence& s, Format format) { os << write_signal(s, format); }

}  // namespace qifft
