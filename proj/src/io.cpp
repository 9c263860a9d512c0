#include "expann/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

namespace expann::io {

namespace {

[[noreturn]] void input_error(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) input_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) input_error(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<Complex> values_from_json(const json& j) {
  if (!j.is_array()) input_error("\"values\" must be an array");
  std::vector<Complex> values;
  values.reserve(j.size());
  for (const json& v : j) values.push_back(complex_from_json(v));
  return values;
}

json values_to_json(std::span<const Complex> values, double real_tol) {
  double norm = 0.0;
  double max_im = 0.0;
  for (const Complex& v : values) {
    norm = std::max(norm, std::abs(v));
    max_im = std::max(max_im, std::abs(v.imag()));
  }
  const bool real = max_im <= real_tol * norm;
  json out = json::array();
  for (const Complex& v : values) out.push_back(real ? json(v.real()) : complex_to_json(v));
  return out;
}

int line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line of the n-th (0-based) "freq" key in the raw document, 0 if not found.
int line_of_freq_entry(const std::string& text, std::size_t n) {
  std::size_t pos = 0;
  for (std::size_t seen = 0;; ++seen) {
    pos = text.find("\"freq\"", pos);
    if (pos == std::string::npos) return 0;
    if (seen == n) return line_of_offset(text, pos);
    pos += 6;
  }
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    input_error("line " + std::to_string(line_of_offset(text, err.byte)) + ": " + err.what());
  }
}

}  // namespace

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  input_error("expected a number or an [re, im] pair, got " + j.dump());
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Frequency parse_frequency(std::string_view text) {
  bool imaginary = false;
  if (!text.empty() && text.back() == 'i') {
    imaginary = true;
    text.remove_suffix(1);
  }
  std::string buf(text);
  char* end = nullptr;
  const double x = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    input_error("cannot parse frequency \"" + buf + (imaginary ? "i" : "") + "\"");
  }
  return imaginary ? Frequency::imag(x) : Frequency::real(x);
}

GridSamples grid_from_json(const json& j) {
  const json& origin = field(j, "origin");
  if (!origin.is_array() || origin.size() != 2 || !origin[0].is_number_integer() ||
      !origin[1].is_number_integer()) {
    input_error("\"origin\" must be an integer pair");
  }
  const int level = int_field(j, "level");
  if (level < 0) input_error("\"level\" must be non-negative");
  Window window{{origin[0].get<int>(), origin[1].get<int>()}, int_field(j, "width"),
                int_field(j, "height")};
  if (window.width < 1 || window.height < 1) input_error("width and height must be positive");
  std::vector<Complex> values = values_from_json(field(j, "values"));
  if (values.size() != static_cast<std::size_t>(window.width) * window.height) {
    input_error("\"values\" has " + std::to_string(values.size()) + " entries, expected width*height = " +
                std::to_string(window.width * window.height));
  }
  return GridSamples(level, window, std::move(values));
}

json grid_to_json(const GridSamples& s, double real_tol) {
  return json{{"level", s.level()},
              {"origin", {s.origin().i, s.origin().j}},
              {"width", s.width()},
              {"height", s.height()},
              {"values", values_to_json(s.values(), real_tol)}};
}

ExponentialSum sum_from_json(const json& j) { return sum_from_text(j.dump(1)); }

ExponentialSum sum_from_text(const std::string& text) {
  const json doc = parse_document(text);
  const json& terms = field(doc, "terms");
  if (!terms.is_array()) input_error("\"terms\" must be an array");
  std::vector<Term> out;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const json& term = terms[n];
    const Complex coeff = complex_from_json(field(term, "coeff"));
    const json& freq = field(term, "freq");
    if (!freq.is_array() || freq.size() != 2) input_error("\"freq\" must hold two components");
    try {
      out.push_back({coeff, FrequencyVector(Frequency(complex_from_json(freq[0])),
                                            Frequency(complex_from_json(freq[1])))});
    } catch (const Error& err) {
      throw Error(err.kind(), "line " + std::to_string(line_of_freq_entry(text, n)) + ": term " +
                                  std::to_string(n) + ": " + err.what());
    }
  }
  return ExponentialSum(std::move(out));
}

json sum_to_json(const ExponentialSum& f) {
  json terms = json::array();
  for (const Term& t : f.terms()) {
    terms.push_back({{"coeff", complex_to_json(t.coeff)}, {"freq", frequency_to_json(t.freq)}});
  }
  return json{{"terms", terms}};
}

Sequence sequence_from_json(const json& j) {
  Sequence s;
  s.level = int_field(j, "level");
  if (s.level < 0) input_error("\"level\" must be non-negative");
  s.origin = j.contains("origin") ? int_field(j, "origin") : 0;
  s.values = values_from_json(field(j, "values"));
  return s;
}

json sequence_to_json(const Sequence& s, double real_tol) {
  return json{{"level", s.level}, {"origin", s.origin}, {"values", values_to_json(s.values, real_tol)}};
}

json frequency_to_json(const FrequencyVector& g) {
  return json::array({complex_to_json(g.g1().value()), complex_to_json(g.g2().value())});
}

json report_to_json(const DetectionReport& report) {
  json estimates = json::array();
  for (const CoshEstimate& est : report.estimates) {
    const Index2 e = unit_index(est.axis);
    estimates.push_back({{"axis", {e.i, e.j}},
                         {"cosh", complex_to_json(est.value)},
                         {"base", {est.base.i, est.base.j}},
                         {"step", {est.step_used.tv().i, est.step_used.tv().j}},
                         {"denominator", est.denominator_magnitude},
                         {"samples", est.sample_count}});
  }
  json out{{"classification", to_string(report.classification)},
           {"gamma", frequency_to_json(report.gamma)},
           {"constant_axes", {report.constant_axis[0], report.constant_axis[1]}},
           {"estimates", estimates},
           {"residual", report.residual},
           {"residual_steps",
            {{report.residual_steps[0].i, report.residual_steps[0].j},
             {report.residual_steps[1].i, report.residual_steps[1].j}}}};
  if (!report.reason.empty()) out["reason"] = report.reason;
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace expann::io
