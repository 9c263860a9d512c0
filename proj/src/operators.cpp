#include "expann/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace expann {

Direction::Direction(Vec2 v) {
  magnitude_ = std::hypot(v.x, v.y);
  if (!(magnitude_ > 0.0) || !std::isfinite(magnitude_)) {
    throw Error(ErrorKind::InvalidArgument, "direction must be a finite nonzero vector");
  }
  unit_ = {v.x / magnitude_, v.y / magnitude_};
}

IntegerStep::IntegerStep(int dx, int dy) : tv_{dx, dy} {
  if (dx == 0 && dy == 0) throw Error(ErrorKind::InvalidArgument, "step must be nonzero");
}

double IntegerStep::length() const { return std::hypot(tv_.i, tv_.j); }

Direction IntegerStep::direction() const { return Direction(as_vec()); }

Index2 unit_index(Axis axis) { return axis == Axis::X ? Index2{1, 0} : Index2{0, 1}; }

AnnihilatorChain::AnnihilatorChain(std::vector<DeltaFactor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorKind::InvalidArgument, "empty annihilator chain");
}

DifferentialChain::DifferentialChain(std::vector<DiffFactor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorKind::InvalidArgument, "empty differential chain");
}

AnnihilatorChain make_chain(const FrequencySet& gammas, const std::vector<IntegerStep>& steps) {
  if (steps.size() != gammas.size()) {
    throw Error(ErrorKind::InvalidArgument, "one step per frequency required");
  }
  std::vector<DeltaFactor> factors;
  for (std::size_t n = 0; n < steps.size(); ++n) {
    factors.push_back({gammas.members()[n], steps[n]});
  }
  return AnnihilatorChain(std::move(factors));
}

DifferentialChain make_chain(const FrequencySet& gammas, const std::vector<Direction>& dirs) {
  if (dirs.size() != gammas.size()) {
    throw Error(ErrorKind::InvalidArgument, "one direction per frequency required");
  }
  std::vector<DiffFactor> factors;
  for (std::size_t n = 0; n < dirs.size(); ++n) factors.push_back({gammas.members()[n], dirs[n]});
  return DifferentialChain(std::move(factors));
}

namespace {

template <typename Multiplier>
ExponentialSum scale_terms(const ExponentialSum& f, Multiplier&& multiplier) {
  std::vector<Term> terms = f.terms();
  for (Term& t : terms) t.coeff *= multiplier(t.freq);
  return ExponentialSum(std::move(terms));
}

Complex dot_difference(const FrequencyVector& mu, const FrequencyVector& gamma, Vec2 w) {
  return (mu.g1().value() - gamma.g1().value()) * w.x +
         (mu.g2().value() - gamma.g2().value()) * w.y;
}

bool negligible(const ExponentialSum& result, const ExponentialSum& input) {
  return result.max_coefficient() <= kCoefficientZeroTol * input.max_coefficient();
}

}  // namespace

ExponentialSum diff_apply_raw(const FrequencyVector& gamma, Vec2 w, const ExponentialSum& f) {
  return scale_terms(f, [&](const FrequencyVector& mu) { return dot_difference(mu, gamma, w); });
}

ExponentialSum diff_apply(const FrequencyVector& gamma, const Direction& dir,
                          const ExponentialSum& f) {
  return diff_apply_raw(gamma, dir.unit(), f);
}

ExponentialSum delta_apply(const FrequencyVector& gamma, Vec2 step, const ExponentialSum& f) {
  const Complex weight = std::exp(gamma.dot(step));
  return scale_terms(f, [&](const FrequencyVector& mu) { return std::exp(mu.dot(step)) - weight; });
}

ExponentialSum delta_apply(const FrequencyVector& gamma, const IntegerStep& step,
                           const ExponentialSum& f) {
  return delta_apply(gamma, step.as_vec(), f);
}

ExponentialSum chain_apply(const AnnihilatorChain& chain, const ExponentialSum& f) {
  ExponentialSum out = f;
  for (const DeltaFactor& factor : chain.factors()) out = delta_apply(factor.gamma, factor.step, out);
  return out;
}

ExponentialSum chain_apply(const DifferentialChain& chain, const ExponentialSum& f) {
  ExponentialSum out = f;
  for (const DiffFactor& factor : chain.factors()) out = diff_apply(factor.gamma, factor.dir, out);
  return out;
}

bool annihilates(const AnnihilatorChain& chain, const ExponentialSum& f) {
  return negligible(chain_apply(chain, f), f);
}

bool annihilates(const DifferentialChain& chain, const ExponentialSum& f) {
  return negligible(chain_apply(chain, f), f);
}

GridSamples delta_apply(const FrequencyVector& gamma, const IntegerStep& step,
                        const GridSamples& s) {
  const Index2 tv = step.tv();
  const Window& in = s.window();
  Window out{{in.origin.i + std::max(0, -tv.i), in.origin.j + std::max(0, -tv.j)},
             in.width - std::abs(tv.i), in.height - std::abs(tv.j)};
  if (out.width < 1 || out.height < 1) {
    throw Error(ErrorKind::EmptyWindow, "step is larger than the sample window");
  }
  const Complex weight = std::exp(gamma.dot(tv) * grid_spacing(s.level()));
  std::vector<Complex> values;
  values.reserve(static_cast<std::size_t>(out.width) * out.height);
  for (int r = 0; r < out.height; ++r) {
    for (int c = 0; c < out.width; ++c) {
      const Index2 a{out.origin.i + c, out.origin.j + r};
      values.push_back(s.at(a + tv) - weight * s.at(a));
    }
  }
  return GridSamples(s.level(), out, std::move(values));
}

GridSamples chain_apply(const AnnihilatorChain& chain, const GridSamples& s) {
  GridSamples out = s;
  for (const DeltaFactor& factor : chain.factors()) out = delta_apply(factor.gamma, factor.step, out);
  return out;
}

double grid_residual(const AnnihilatorChain& chain, const GridSamples& s) {
  const GridSamples out = chain_apply(chain, s);
  const double scale = s.max_abs();
  if (scale == 0.0) return 0.0;
  return out.max_abs() / scale;
}

std::vector<StencilPoint> chain_stencil(const AnnihilatorChain& chain, int level) {
  const double h = grid_spacing(level);
  std::vector<StencilPoint> stencil{{Index2{0, 0}, Complex(1.0, 0.0)}};
  for (const DeltaFactor& factor : chain.factors()) {
    const Index2 tv = factor.step.tv();
    const Complex weight = std::exp(factor.gamma.dot(tv) * h);
    std::vector<StencilPoint> next;
    auto accumulate = [&next](Index2 offset, Complex w) {
      auto it = std::find_if(next.begin(), next.end(),
                             [&](const StencilPoint& p) { return p.offset == offset; });
      if (it == next.end()) {
        next.push_back({offset, w});
      } else {
        it->weight += w;
      }
    };
    for (const StencilPoint& p : stencil) {
      accumulate(p.offset + tv, p.weight);
      accumulate(p.offset, -weight * p.weight);
    }
    stencil = std::move(next);
  }
  return stencil;
}

Complex apply_stencil(const std::vector<StencilPoint>& stencil,
                      const std::function<Complex(Index2)>& lookup, Index2 alpha) {
  Complex sum(0.0, 0.0);
  for (const StencilPoint& p : stencil) sum += p.weight * lookup(alpha + p.offset);
  return sum;
}

AnnihilatorChain reduced_chain_for_symmetric_set(const FrequencyVector& g, Axis axis,
                                                 const IntegerStep& extra) {
  const IntegerStep e(unit_index(axis));
  return AnnihilatorChain({{FrequencyVector{}, extra}, {g, e}, {-g, e}});
}

}  // namespace expann
