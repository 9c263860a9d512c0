#pragma once

// Exponential sums F(z) = sum_l c_l exp(<gamma_l, z>) on R^2, their
// frequency sets, and samples of them on dyadic grids 2^-k Z^2.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "expann/error.hpp"

namespace expann {

using Complex = std::complex<double>;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Index2 {
  int i = 0;
  int j = 0;

  friend bool operator==(const Index2&, const Index2&) = default;
  friend Index2 operator+(Index2 a, Index2 b) { return {a.i + b.i, a.j + b.j}; }
  friend Index2 operator*(int s, Index2 a) { return {s * a.i, s * a.j}; }
};

/// A scalar exponent in D = R u i(-pi, pi): either purely real, or purely
/// imaginary with |Im| < pi. Membership is checked exactly at construction.
class Frequency {
 public:
  Frequency() = default;
  explicit Frequency(Complex value);

  static Frequency real(double x) { return Frequency(Complex(x, 0.0)); }
  static Frequency imag(double y) { return Frequency(Complex(0.0, y)); }

  const Complex& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == Complex(0.0, 0.0); }
  bool is_real() const noexcept { return value_.imag() == 0.0; }

  /// Membership in G = [0, inf) u i(0, pi).
  bool is_restricted() const noexcept;

  Frequency operator-() const { return Frequency(-value_); }
  Frequency conj() const { return Frequency(std::conj(value_)); }

  friend bool operator==(const Frequency& a, const Frequency& b) { return a.value_ == b.value_; }

 private:
  Complex value_{0.0, 0.0};
};

/// gamma = (gamma_1, gamma_2) in D^2.
class FrequencyVector {
 public:
  FrequencyVector() = default;
  FrequencyVector(Frequency g1, Frequency g2) : g1_(g1), g2_(g2) {}
  FrequencyVector(Complex g1, Complex g2) : g1_(g1), g2_(g2) {}

  static FrequencyVector real(double x, double y) {
    return {Frequency::real(x), Frequency::real(y)};
  }

  const Frequency& g1() const noexcept { return g1_; }
  const Frequency& g2() const noexcept { return g2_; }

  /// (gamma_1, -gamma_2).
  FrequencyVector mirror() const { return {g1_, -g2_}; }
  FrequencyVector conj() const { return {g1_.conj(), g2_.conj()}; }
  FrequencyVector operator-() const { return {-g1_, -g2_}; }

  bool is_zero() const noexcept { return g1_.is_zero() && g2_.is_zero(); }
  bool is_restricted() const noexcept { return g1_.is_restricted() && g2_.is_restricted(); }

  Complex dot(Vec2 z) const { return g1_.value() * z.x + g2_.value() * z.y; }
  Complex dot(Index2 a) const {
    return dot(Vec2{static_cast<double>(a.i), static_cast<double>(a.j)});
  }

  friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;

  /// Lexicographic on (Re g1, Im g1, Re g2, Im g2); used for canonical ordering.
  friend bool operator<(const FrequencyVector& a, const FrequencyVector& b);

 private:
  Frequency g1_;
  Frequency g2_;
};

/// Ordered list of pairwise distinct frequency vectors.
class FrequencySet {
 public:
  FrequencySet() = default;
  explicit FrequencySet(std::vector<FrequencyVector> members);

  const std::vector<FrequencyVector>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const FrequencyVector& g) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::vector<FrequencyVector> members_;
};

struct Term {
  Complex coeff;
  FrequencyVector freq;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite sum of exponentials, always held in canonical form: frequencies
/// sorted and distinct, no exactly-zero coefficients.
class ExponentialSum {
 public:
  ExponentialSum() = default;
  explicit ExponentialSum(std::vector<Term> terms);

  static ExponentialSum single(Complex coeff, const FrequencyVector& freq) {
    return ExponentialSum({Term{coeff, freq}});
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  double max_coefficient() const;
  FrequencySet frequencies() const;

  Complex evaluate(Vec2 z) const;

  friend ExponentialSum operator+(const ExponentialSum& a, const ExponentialSum& b);
  friend ExponentialSum operator*(Complex s, const ExponentialSum& a);
  friend bool operator==(const ExponentialSum&, const ExponentialSum&) = default;

 private:
  std::vector<Term> terms_;
};

/// Merges equal frequencies, drops zero coefficients, sorts.
std::vector<Term> canonicalize(std::vector<Term> terms);

inline Complex evaluate(const ExponentialSum& f, Vec2 z) { return f.evaluate(z); }

/// Rectangular index window [origin, origin + (width, height)).
struct Window {
  Index2 origin;
  int width = 1;
  int height = 1;

  bool contains(Index2 a) const noexcept {
    return a.i >= origin.i && a.j >= origin.j && a.i < origin.i + width &&
           a.j < origin.j + height;
  }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Grid spacing 2^-level.
double grid_spacing(int level);

/// Complex samples on an index window of the grid 2^-level Z^2, stored
/// row-major (the first index runs fastest).
class GridSamples {
 public:
  GridSamples(int level, Window window, std::vector<Complex> values);

  int level() const noexcept { return level_; }
  const Window& window() const noexcept { return window_; }
  Index2 origin() const noexcept { return window_.origin; }
  int width() const noexcept { return window_.width; }
  int height() const noexcept { return window_.height; }
  std::span<const Complex> values() const noexcept { return values_; }

  bool contains(Index2 a) const noexcept { return window_.contains(a); }
  const Complex& at(Index2 a) const;

  /// max |value|, 0 for an all-zero grid.
  double max_abs() const;

  /// Physical location 2^-level * a of an index.
  Vec2 point(Index2 a) const;

 private:
  int level_;
  Window window_;
  std::vector<Complex> values_;
};

GridSamples sample(const ExponentialSum& f, int level, const Window& window);

/// Samples an arbitrary function; used for data outside every exponential space.
GridSamples sample(const std::function<Complex(Vec2)>& f, int level, const Window& window);

/// {0, gamma, -gamma, mirror(gamma), -mirror(gamma)} with duplicates removed.
/// Requires gamma in G^2 and gamma != 0.
FrequencySet symmetric_set(const FrequencyVector& g);

}  // namespace expann
