#pragma once

// Brute-force validators and reproducible random instances. Nothing here
// calls the operator or detection code it is meant to check.

#include <cstdint>
#include <numbers>
#include <random>

#include "expann/expspace.hpp"

namespace expann::oracle {

/// Portable generator: std::mt19937_64 (its output sequence is fixed by the
/// C++ standard) with explicit bit-level mappings to doubles and integers,
/// so a seed yields the same instance on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) from the top 53 bits of one draw.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform in [lo, hi] by modular reduction of one draw.
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

enum class FrequencyKind { Any, Real, Imaginary, Mixed };

struct RandomSpec {
  std::uint64_t seed = 0;
  FrequencyKind kind = FrequencyKind::Any;
  /// Magnitude ranges for real and imaginary frequency components. The lower
  /// bounds keep components away from zero so the five members stay separated.
  double real_min = 0.1;
  double real_max = 2.0;
  double imag_min = 0.1;
  double imag_max = 0.9 * std::numbers::pi;
  double coeff_min = 0.1;
  double coeff_max = 10.0;
  int min_window = 6;
  int max_window = 12;
  int level = 0;
};

struct RandomInstance {
  FrequencyVector gamma;
  ExponentialSum sum;
  GridSamples grid;
};

/// Draws gamma in G^2 \ {0}, a member of the symmetric five-frequency space
/// whose coefficients satisfy c(conj mu) = conj(c(mu)) so the samples are
/// real up to rounding, and its samples on a random window.
RandomInstance random_instance(const RandomSpec& spec);

/// A random member of span{exp(mu . z) : mu in set}, one coefficient per member.
ExponentialSum random_member(Rng& rng, const FrequencySet& set, double coeff_min = 0.1,
                             double coeff_max = 10.0);

/// (F(z + h v) - F(z)) / h.
Complex finite_difference_directional(const ExponentialSum& f, Vec2 z, Vec2 v, double h);

/// Enumerates every tuple of steps (s_1, ..., s_n) with s_i in [-B, B]^2 \ {0}
/// and checks that the difference chain over gamma_set annihilates f for each.
/// The per-term multipliers exp(mu . s) - exp(gamma . s) are evaluated
/// directly; a subtree is skipped only once every term is exactly zero.
bool exhaustive_annihilation_check(const ExponentialSum& f, const FrequencySet& gamma_set,
                                   int step_bound);

}  // namespace expann::oracle
