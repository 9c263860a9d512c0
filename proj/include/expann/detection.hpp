#pragma once

// Recovery of the unknown frequency gamma of the symmetric space
// span{1, e^{gamma.z}, e^{-gamma.z}, e^{mirror(gamma).z}, e^{-mirror(gamma).z}}
// from grid samples, using the three-factor annihilator along each axis.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "expann/expspace.hpp"
#include "expann/operators.hpp"

namespace expann {

enum class DetectionMode { Single, Robust };

struct DetectionOptions {
  DetectionMode mode = DetectionMode::Single;
  /// Denominators with |.| <= tol_den * max|S| count as zero.
  double tol_den = 1e-10;
  /// Largest admissible |Im cosh| relative to 1 + |cosh|.
  double tol_im = 1e-9;
  /// Largest admissible residual of the implied annihilator, relative to max|S|.
  double tol_res = 1e-8;
};

/// Estimate of cosh(2^-k gamma . e) read off one six-point stencil.
struct CoshEstimate {
  Axis axis;
  Complex value;
  Index2 base;
  IntegerStep step_used;
  double denominator_magnitude;
  /// Number of stencil estimates combined into value (1 unless robust mode).
  int sample_count = 1;
};

enum class Classification { Constant, Frequency, Inconsistent };

const char* to_string(Classification c);

struct DetectionReport {
  Classification classification = Classification::Inconsistent;
  /// Detected level-0 frequency; zero components for constant axes.
  FrequencyVector gamma;
  std::vector<CoshEstimate> estimates;
  /// Which axes were certified constant (x, y).
  std::array<bool, 2> constant_axis{false, false};
  /// Extra steps used for the residual check, one per axis (x, y).
  std::array<Index2, 2> residual_steps{};
  double residual = 0.0;
  /// Human-readable cause when classification is Inconsistent.
  std::string reason;
};

/// Admissible steps for an axis, in fallback order. All of them stay inside
/// the extended-butterfly stencil union around the base point.
const std::array<IntegerStep, 4>& fallback_steps(Axis axis);

/// (D(a + 2e) + D(a)) / (2 D(a + e)) with D(b) = S(b + step) - S(b).
CoshEstimate cosh_from_stencil(const GridSamples& s, Index2 alpha, Axis axis,
                               const IntegerStep& step, double tol_den = 1e-10);

/// True iff every step in the axis's fallback set sees no difference at a + e.
bool classify_constant(const GridSamples& s, Index2 alpha, Axis axis, double tol_den = 1e-10);

/// Inverts c = cosh(scale * gamma) onto G: real gamma >= 0 for c >= 1,
/// gamma in i(0, pi/scale) for -1 < c < 1.
Frequency cosh_to_frequency(Complex c, double scale, double tol_im = 1e-9);

DetectionReport detect(const GridSamples& s, Index2 alpha, const DetectionOptions& options = {});

/// Every grid point detect() may read for a given base point.
std::vector<Index2> detection_footprint(Index2 alpha);

/// cosh(2^-k gamma) from the four-term relation
///   f(a-1) - (2c+1) f(a) + (2c+1) f(a+1) - f(a+2) = 0,
/// with alpha an index into values. Returns exactly 1 for data that is
/// constant on the four points.
Complex univariate_cosh(std::span<const Complex> values, int alpha, double tol_den = 1e-10);

Frequency detect_univariate(std::span<const Complex> values, int level, int alpha,
                            double tol_den = 1e-10, double tol_im = 1e-9);

}  // namespace expann
