#pragma once

// Univariate interpolatory four-point refinement that reproduces
// span{1, e^{gamma z}, e^{-gamma z}}, with the level-dependent parameter
// c_k = cosh(2^-k gamma) propagated from level to level.

#include <span>
#include <vector>

#include "expann/expspace.hpp"

namespace expann {

/// c_k = cosh(2^-k gamma) at level k.
struct LevelParameter {
  int level = 0;
  Complex cosh_value{1.0, 0.0};

  /// Checks the branch invariant: c real (up to rounding) and c > -1.
  static LevelParameter make(int level, Complex cosh_value);
  static LevelParameter from_frequency(const Frequency& gamma, int level);
};

/// Insertion weights (w, u, u, w) applied to f(a-1), f(a), f(a+1), f(a+2).
struct InsertionRule {
  Complex outer;
  Complex inner;

  Complex apply(Complex fm, Complex f0, Complex f1, Complex f2) const {
    return outer * (fm + f2) + inner * (f0 + f1);
  }
};

/// Values on indices origin, origin+1, ... of the grid 2^-level Z.
struct Sequence {
  int level = 0;
  int origin = 0;
  std::vector<Complex> values;
};

/// c_{k+1} = sqrt((c_k + 1) / 2), principal root.
LevelParameter refine_parameter(const LevelParameter& p);

/// Solves the exactness conditions for the symmetric four-point rule, given
/// c_half = cosh of the half coarse step times gamma.
InsertionRule synthesize_rule(Complex c_half);

/// One round of interpolatory binary refinement. Boundary insertions that
/// would need points outside the data are dropped, so n inputs give
/// 2(n-3)+1 outputs starting at fine index 2(origin+1).
Sequence refine(const Sequence& data, const LevelParameter& p);

struct AutoRefineResult {
  Sequence data;
  Frequency gamma;
  LevelParameter parameter;  // at the final level
};

/// Detects gamma at the leftmost interior index and refines `rounds` times.
AutoRefineResult auto_refine(const Sequence& data, int rounds, double tol_den = 1e-10,
                             double tol_im = 1e-9);

/// Same, with a given frequency instead of a detected one.
AutoRefineResult refine_with_frequency(const Sequence& data, const Frequency& gamma, int rounds);

}  // namespace expann
