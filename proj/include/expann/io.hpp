#pragma once

// JSON file formats shared by the command-line tool and the Python module.
//
//   grid:     { "level": k, "origin": [i, j], "width": w, "height": h,
//               "values": [v, ...] }               v = number | [re, im]
//   sum:      { "terms": [ { "coeff": [re, im], "freq": [[re, im], [re, im]] } ] }
//   sequence: { "level": k, "origin": i, "values": [v, ...] }   origin optional
//
// Grid values are row-major with the first index running fastest.

#include <string>
#include <string_view>

#include "json.hpp"

#include "expann/detection.hpp"
#include "expann/expspace.hpp"
#include "expann/subdivision.hpp"

namespace expann::io {

using nlohmann::json;

/// Reads a number or an [re, im] pair.
Complex complex_from_json(const json& j);
/// [re, im] pair.
json complex_to_json(Complex c);

/// Parses "0.8", "-1.5", "0.4i", "-2.1i" as a frequency in D.
Frequency parse_frequency(std::string_view text);

GridSamples grid_from_json(const json& j);
/// Values are written as plain numbers when every imaginary part is within
/// real_tol * max|S| of zero, otherwise as [re, im] pairs.
json grid_to_json(const GridSamples& s, double real_tol = 1e-12);

/// `text` is the raw document; violations of the frequency domain are
/// reported with the line of the offending "freq" entry.
ExponentialSum sum_from_text(const std::string& text);
ExponentialSum sum_from_json(const json& j);
json sum_to_json(const ExponentialSum& f);

Sequence sequence_from_json(const json& j);
json sequence_to_json(const Sequence& s, double real_tol = 1e-12);

json frequency_to_json(const FrequencyVector& g);
json report_to_json(const DetectionReport& report);

/// Indented output, trailing newline.
std::string dump(const json& j);

}  // namespace expann::io
