#pragma once

// Directional differential operators D_v^gamma F = (grad F - gamma F) . v and
// difference operators Delta_{tv}^gamma F(z) = F(z + tv) - exp(gamma . tv) F(z),
// applied symbolically to exponential sums or numerically to grid samples.

#include <functional>
#include <vector>

#include "expann/expspace.hpp"

namespace expann {

/// Relative threshold below which a symbolic coefficient counts as zero.
inline constexpr double kCoefficientZeroTol = 1e-12;

/// Unit vector; keeps the magnitude of the vector it was built from.
class Direction {
 public:
  explicit Direction(Vec2 v);

  const Vec2& unit() const noexcept { return unit_; }
  double magnitude() const noexcept { return magnitude_; }
  Vec2 raw() const noexcept { return {unit_.x * magnitude_, unit_.y * magnitude_}; }
  Direction perp() const { return Direction(Vec2{-unit_.y, unit_.x}); }

 private:
  Vec2 unit_;
  double magnitude_;
};

/// Nonzero integer step tv, viewed as length t = |tv| times direction v.
class IntegerStep {
 public:
  IntegerStep(int dx, int dy);
  explicit IntegerStep(Index2 tv) : IntegerStep(tv.i, tv.j) {}

  const Index2& tv() const noexcept { return tv_; }
  double length() const;
  Direction direction() const;
  Vec2 as_vec() const { return {static_cast<double>(tv_.i), static_cast<double>(tv_.j)}; }

  friend bool operator==(const IntegerStep&, const IntegerStep&) = default;

 private:
  Index2 tv_;
};

enum class Axis { X, Y };

/// (1, 0) for X, (0, 1) for Y.
Index2 unit_index(Axis axis);

struct DeltaFactor {
  FrequencyVector gamma;
  IntegerStep step;
};

struct DiffFactor {
  FrequencyVector gamma;
  Direction dir;
};

/// Delta^{gamma_1}_{s_1} ... Delta^{gamma_n}_{s_n}; applied left to right.
class AnnihilatorChain {
 public:
  explicit AnnihilatorChain(std::vector<DeltaFactor> factors);
  const std::vector<DeltaFactor>& factors() const noexcept { return factors_; }

 private:
  std::vector<DeltaFactor> factors_;
};

/// D^{gamma_1}_{v_1} ... D^{gamma_n}_{v_n}; symbolic use only.
class DifferentialChain {
 public:
  explicit DifferentialChain(std::vector<DiffFactor> factors);
  const std::vector<DiffFactor>& factors() const noexcept { return factors_; }

 private:
  std::vector<DiffFactor> factors_;
};

/// Pairs the members of a frequency set with steps (or directions) in order.
AnnihilatorChain make_chain(const FrequencySet& gammas, const std::vector<IntegerStep>& steps);
DifferentialChain make_chain(const FrequencySet& gammas, const std::vector<Direction>& dirs);

// -- symbolic action on exponential sums ------------------------------------

ExponentialSum diff_apply(const FrequencyVector& gamma, const Direction& dir,
                          const ExponentialSum& f);
/// Same operator with a non-normalized direction vector w.
ExponentialSum diff_apply_raw(const FrequencyVector& gamma, Vec2 w, const ExponentialSum& f);

ExponentialSum delta_apply(const FrequencyVector& gamma, const IntegerStep& step,
                           const ExponentialSum& f);
/// Real-valued step tv; used for the t -> 0 limit.
ExponentialSum delta_apply(const FrequencyVector& gamma, Vec2 step, const ExponentialSum& f);

ExponentialSum chain_apply(const AnnihilatorChain& chain, const ExponentialSum& f);
ExponentialSum chain_apply(const DifferentialChain& chain, const ExponentialSum& f);

/// True when the result's largest coefficient is within kCoefficientZeroTol
/// of the input's largest coefficient.
bool annihilates(const AnnihilatorChain& chain, const ExponentialSum& f);
bool annihilates(const DifferentialChain& chain, const ExponentialSum& f);

// -- numeric action on grid samples -----------------------------------------

/// out(a) = S(a + tv) - exp(gamma . tv * 2^-k) S(a) on the shrunk window.
/// Throws EmptyWindow when no a has both lookups inside the window.
GridSamples delta_apply(const FrequencyVector& gamma, const IntegerStep& step,
                        const GridSamples& s);

GridSamples chain_apply(const AnnihilatorChain& chain, const GridSamples& s);

/// max |chain(S)| / max |S|, or 0 when S vanishes identically.
double grid_residual(const AnnihilatorChain& chain, const GridSamples& s);

/// The composite operator written as a weighted point stencil at level k:
/// (chain S)(a) = sum_p weight_p * S(a + offset_p).
struct StencilPoint {
  Index2 offset;
  Complex weight;
};
std::vector<StencilPoint> chain_stencil(const AnnihilatorChain& chain, int level);

Complex apply_stencil(const std::vector<StencilPoint>& stencil,
                      const std::function<Complex(Index2)>& lookup, Index2 alpha);

/// Delta^0_extra Delta^gamma_e Delta^-gamma_e: annihilates the whole
/// symmetric five-frequency space and reads at most six points.
AnnihilatorChain reduced_chain_for_symmetric_set(const FrequencyVector& g, Axis axis,
                                                 const IntegerStep& extra);

}  // namespace expann
