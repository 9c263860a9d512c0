#include "expann/subdivision.hpp"

#include <array>
#include <cmath>

#include "expann/detection.hpp"

namespace expann {

LevelParameter LevelParameter::make(int level, Complex cosh_value) {
  if (level < 0) throw Error(ErrorKind::InvalidParameter, "level must be non-negative");
  if (std::abs(cosh_value.imag()) > 1e-9 * (1.0 + std::abs(cosh_value))) {
    throw Error(ErrorKind::InvalidParameter, "level parameter must be real");
  }
  if (!(cosh_value.real() > -1.0)) {
    throw Error(ErrorKind::InvalidParameter, "level parameter must exceed -1");
  }
  return LevelParameter{level, cosh_value};
}

LevelParameter LevelParameter::from_frequency(const Frequency& gamma, int level) {
  return make(level, std::cosh(gamma.value() * grid_spacing(level)));
}

LevelParameter refine_parameter(const LevelParameter& p) {
  if (!(p.cosh_value.real() > -1.0)) {
    throw Error(ErrorKind::InvalidParameter, "cannot halve the argument of cosh <= -1");
  }
  return LevelParameter{p.level + 1, std::sqrt((p.cosh_value + 1.0) / 2.0)};
}

InsertionRule synthesize_rule(Complex c_half) {
  if (std::abs(c_half) <= 1e-12 || std::abs(c_half + 1.0) <= 1e-12) {
    throw Error(ErrorKind::SingularRule, "no symmetric rule for c_half in {0, -1}");
  }
  // Unknowns (w, u). Row 0: constants are reproduced, 2w + 2u = 1.
  // Row 1: e^{gamma z} at the midpoint, 2w cosh(3x) + 2u cosh(x) = 1 with
  // cosh(3x) = 4c^3 - 3c; minus row 0 and divided by (c - 1) this reads
  // 2w (2c + 1)^2 + 2u = 0, which stays regular as c -> 1.
  const Complex c = c_half;
  const std::array<std::array<Complex, 2>, 2> a{{{2.0, 2.0}, {2.0 * (2.0 * c + 1.0) * (2.0 * c + 1.0), 2.0}}};
  const std::array<Complex, 2> b{1.0, 0.0};
  const Complex det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  const Complex w = (b[0] * a[1][1] - a[0][1] * b[1]) / det;
  const Complex u = (a[0][0] * b[1] - b[0] * a[1][0]) / det;
  return InsertionRule{w, u};
}

Sequence refine(const Sequence& data, const LevelParameter& p) {
  const std::size_t n = data.values.size();
  if (n < 4) throw Error(ErrorKind::TooShort, "refinement needs at least four values");
  if (p.level != data.level) {
    throw Error(ErrorKind::InvalidParameter, "level parameter does not match the data level");
  }
  const InsertionRule rule = synthesize_rule(refine_parameter(p).cosh_value);
  const auto& v = data.values;
  Sequence out{data.level + 1, 2 * (data.origin + 1), {}};
  out.values.reserve(2 * (n - 3) + 1);
  for (std::size_t a = 1; a + 2 < n; ++a) {
    out.values.push_back(v[a]);
    out.values.push_back(rule.apply(v[a - 1], v[a], v[a + 1], v[a + 2]));
  }
  out.values.push_back(v[n - 2]);
  return out;
}

AutoRefineResult refine_with_frequency(const Sequence& data, const Frequency& gamma, int rounds) {
  if (rounds < 0) throw Error(ErrorKind::InvalidArgument, "rounds must be non-negative");
  AutoRefineResult result{data, gamma, LevelParameter::from_frequency(gamma, data.level)};
  for (int r = 0; r < rounds; ++r) {
    result.data = refine(result.data, result.parameter);
    result.parameter = refine_parameter(result.parameter);
  }
  return result;
}

AutoRefineResult auto_refine(const Sequence& data, int rounds, double tol_den, double tol_im) {
  if (data.values.size() < 4) throw Error(ErrorKind::TooShort, "detection needs four values");
  if (rounds < 0) throw Error(ErrorKind::InvalidArgument, "rounds must be non-negative");
  const Complex c = univariate_cosh(data.values, 1, tol_den);
  const Frequency gamma = cosh_to_frequency(c, grid_spacing(data.level), tol_im);
  AutoRefineResult result{data, gamma, LevelParameter::make(data.level, c)};
  for (int r = 0; r < rounds; ++r) {
    result.data = refine(result.data, result.parameter);
    result.parameter = refine_parameter(result.parameter);
  }
  return result;
}

}  // namespace expann
