#include "expann/detection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace expann {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Constant: return "Constant";
    case Classification::Frequency: return "Frequency";
    case Classification::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

const std::array<IntegerStep, 4>& fallback_steps(Axis axis) {
  static const std::array<IntegerStep, 4> along_x{IntegerStep{0, 1}, IntegerStep{1, 1},
                                                  IntegerStep{0, -1}, IntegerStep{-1, -1}};
  static const std::array<IntegerStep, 4> along_y{IntegerStep{1, 0}, IntegerStep{1, 1},
                                                  IntegerStep{-1, 0}, IntegerStep{-1, -1}};
  return axis == Axis::X ? along_x : along_y;
}

namespace {

Complex zero_difference(const GridSamples& s, Index2 b, const IntegerStep& step) {
  return s.at(b + step.tv()) - s.at(b);
}

bool stencil_fits(const GridSamples& s, Index2 alpha, Index2 e, Index2 step) {
  for (int lambda = 0; lambda <= 1; ++lambda) {
    for (int mu = 0; mu <= 2; ++mu) {
      if (!s.contains(alpha + lambda * step + mu * e)) return false;
    }
  }
  return true;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// First admissible stencil at alpha, in fallback order.
std::optional<CoshEstimate> single_estimate(const GridSamples& s, Index2 alpha, Axis axis,
                                            double tol_den) {
  for (const IntegerStep& step : fallback_steps(axis)) {
    try {
      return cosh_from_stencil(s, alpha, axis, step, tol_den);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::DenominatorZero) throw;
    }
  }
  return std::nullopt;
}

// Median over every base point and admissible step whose stencil fits.
std::optional<CoshEstimate> robust_estimate(const GridSamples& s, Axis axis, double tol_den) {
  std::vector<CoshEstimate> all;
  const Index2 e = unit_index(axis);
  const Window& w = s.window();
  for (int j = w.origin.j; j < w.origin.j + w.height; ++j) {
    for (int i = w.origin.i; i < w.origin.i + w.width; ++i) {
      for (const IntegerStep& step : fallback_steps(axis)) {
        if (!stencil_fits(s, {i, j}, e, step.tv())) continue;
        try {
          all.push_back(cosh_from_stencil(s, {i, j}, axis, step, tol_den));
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::DenominatorZero) throw;
        }
      }
    }
  }
  if (all.empty()) return std::nullopt;
  std::vector<double> re;
  std::vector<double> im;
  for (const CoshEstimate& est : all) {
    re.push_back(est.value.real());
    im.push_back(est.value.imag());
  }
  const double re_med = median(re);
  // Report the stencil whose estimate sits closest to the median.
  auto nearest = std::min_element(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    return std::abs(a.value.real() - re_med) < std::abs(b.value.real() - re_med);
  });
  CoshEstimate out = *nearest;
  out.value = Complex(re_med, median(im));
  out.sample_count = static_cast<int>(all.size());
  return out;
}

}  // namespace

CoshEstimate cosh_from_stencil(const GridSamples& s, Index2 alpha, Axis axis,
                               const IntegerStep& step, double tol_den) {
  const Index2 e = unit_index(axis);
  if (!stencil_fits(s, alpha, e, step.tv())) {
    throw Error(ErrorKind::OutOfWindow, "six-point stencil leaves the sample window");
  }
  const Complex d0 = zero_difference(s, alpha, step);
  const Complex d1 = zero_difference(s, alpha + e, step);
  const Complex d2 = zero_difference(s, alpha + 2 * e, step);
  const double den = std::abs(d1);
  if (den <= tol_den * s.max_abs()) {
    throw Error(ErrorKind::DenominatorZero, "difference at alpha + e vanishes for this step");
  }
  return CoshEstimate{axis, (d2 + d0) / (2.0 * d1), alpha, step, den};
}

bool classify_constant(const GridSamples& s, Index2 alpha, Axis axis, double tol_den) {
  const Index2 center = alpha + unit_index(axis);
  const double threshold = tol_den * s.max_abs();
  for (const IntegerStep& step : fallback_steps(axis)) {
    if (std::abs(zero_difference(s, center, step)) > threshold) return false;
  }
  return true;
}

Frequency cosh_to_frequency(Complex c, double scale, double tol_im) {
  if (!(scale > 0.0)) throw Error(ErrorKind::InvalidArgument, "scale must be positive");
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) ||
      std::abs(c.imag()) > tol_im * (1.0 + std::abs(c))) {
    throw Error(ErrorKind::InvalidCosh, "cosh estimate is not real");
  }
  const double x = c.real();
  if (x >= 1.0) return Frequency::real(std::acosh(x) / scale);
  if (x > -1.0) {
    const double y = std::acos(x) / scale;
    if (y >= std::numbers::pi) {
      throw Error(ErrorKind::InvalidCosh, "imaginary frequency leaves i(0, pi) at level 0");
    }
    return Frequency::imag(y);
  }
  throw Error(ErrorKind::InvalidCosh, "cosh estimate <= -1");
}

std::vector<Index2> detection_footprint(Index2 alpha) {
  std::vector<Index2> points;
  for (Axis axis : {Axis::X, Axis::Y}) {
    const Index2 e = unit_index(axis);
    for (const IntegerStep& step : fallback_steps(axis)) {
      for (int lambda = 0; lambda <= 1; ++lambda) {
        for (int mu = 0; mu <= 2; ++mu) {
          const Index2 p = alpha + lambda * step.tv() + mu * e;
          if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
        }
      }
    }
  }
  return points;
}

DetectionReport detect(const GridSamples& s, Index2 alpha, const DetectionOptions& options) {
  for (const Index2& p : detection_footprint(alpha)) {
    if (!s.contains(p)) throw Error(ErrorKind::OutOfWindow, "detection stencil leaves the window");
  }

  DetectionReport report;
  std::array<Frequency, 2> components{};
  bool cosh_failed = false;
  const std::array<Axis, 2> axes{Axis::X, Axis::Y};
  for (std::size_t n = 0; n < 2; ++n) {
    const Axis axis = axes[n];
    std::optional<CoshEstimate> est = options.mode == DetectionMode::Robust
                                          ? robust_estimate(s, axis, options.tol_den)
                                          : single_estimate(s, alpha, axis, options.tol_den);
    if (!est) {
      if (!classify_constant(s, alpha, axis, options.tol_den)) {
        report.reason = "no admissible stencil and data not constant";
        return report;
      }
      report.constant_axis[n] = true;
      report.residual_steps[n] = fallback_steps(axis).front().tv();
      continue;
    }
    report.residual_steps[n] = est->step_used.tv();
    report.estimates.push_back(*est);
    try {
      components[n] = cosh_to_frequency(est->value, grid_spacing(s.level()), options.tol_im);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::InvalidCosh) throw;
      cosh_failed = true;
      report.reason = err.what();
    }
  }
  report.gamma = FrequencyVector(components[0], components[1]);

  double residual = 0.0;
  for (std::size_t n = 0; n < 2; ++n) {
    const auto chain = reduced_chain_for_symmetric_set(report.gamma, axes[n],
                                                       IntegerStep(report.residual_steps[n]));
    residual = std::max(residual, grid_residual(chain, s));
  }
  report.residual = residual;

  if (cosh_failed) return report;
  if (residual > options.tol_res) {
    report.reason = "residual of the implied annihilator exceeds tolerance";
    return report;
  }
  if (report.constant_axis[0] && report.constant_axis[1]) {
    report.classification = Classification::Constant;
  } else if (report.gamma.is_zero()) {
    report.reason = "zero frequency detected on non-constant data";
  } else {
    report.classification = Classification::Frequency;
  }
  return report;
}

Complex univariate_cosh(std::span<const Complex> values, int alpha, double tol_den) {
  const auto n = static_cast<int>(values.size());
  if (alpha < 1 || alpha + 2 >= n) {
    throw Error(ErrorKind::OutOfWindow, "four-point relation needs indices alpha-1 .. alpha+2");
  }
  double norm = 0.0;
  for (const Complex& v : values) norm = std::max(norm, std::abs(v));
  const double threshold = tol_den * norm;
  const Complex fm = values[alpha - 1];
  const Complex f0 = values[alpha];
  const Complex f1 = values[alpha + 1];
  const Complex f2 = values[alpha + 2];
  if (std::abs(f1 - f0) <= threshold) {
    if (std::abs(fm - f0) <= threshold && std::abs(f2 - f0) <= threshold) {
      return Complex(1.0, 0.0);
    }
    throw Error(ErrorKind::DenominatorZero, "f(alpha+1) - f(alpha) vanishes on non-constant data");
  }
  return ((f2 - fm) / (f1 - f0) - 1.0) / 2.0;
}

Frequency detect_univariate(std::span<const Complex> values, int level, int alpha,
                            double tol_den, double tol_im) {
  return cosh_to_frequency(univariate_cosh(values, alpha, tol_den), grid_spacing(level), tol_im);
}

}  // namespace expann
