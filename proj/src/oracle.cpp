#include "expann/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace expann::oracle {

namespace {

Frequency draw_component(Rng& rng, const RandomSpec& spec, bool real) {
  return real ? Frequency::real(rng.uniform(spec.real_min, spec.real_max))
              : Frequency::imag(rng.uniform(spec.imag_min, spec.imag_max));
}

FrequencyVector draw_gamma(Rng& rng, const RandomSpec& spec) {
  bool real1 = true;
  bool real2 = true;
  switch (spec.kind) {
    case FrequencyKind::Any:
      real1 = rng.coin();
      real2 = rng.coin();
      break;
    case FrequencyKind::Real:
      break;
    case FrequencyKind::Imaginary:
      real1 = real2 = false;
      break;
    case FrequencyKind::Mixed:
      real1 = rng.coin();
      real2 = !real1;
      break;
  }
  const Frequency g1 = draw_component(rng, spec, real1);
  const Frequency g2 = draw_component(rng, spec, real2);
  return {g1, g2};
}

}  // namespace

ExponentialSum random_member(Rng& rng, const FrequencySet& set, double coeff_min,
                             double coeff_max) {
  std::vector<Term> terms;
  for (const FrequencyVector& mu : set) {
    const FrequencyVector partner = mu.conj();
    const double magnitude = rng.uniform(coeff_min, coeff_max);
    Complex coeff;
    if (partner == mu) {
      coeff = rng.coin() ? magnitude : -magnitude;
    } else {
      auto it = std::find_if(terms.begin(), terms.end(),
                             [&](const Term& t) { return t.freq == partner; });
      coeff = it != terms.end() ? std::conj(it->coeff)
                                : std::polar(magnitude, rng.uniform(0.0, 2.0 * std::numbers::pi));
    }
    terms.push_back({coeff, mu});
  }
  return ExponentialSum(std::move(terms));
}

RandomInstance random_instance(const RandomSpec& spec) {
  Rng rng(spec.seed);
  const FrequencyVector gamma = draw_gamma(rng, spec);
  ExponentialSum sum = random_member(rng, symmetric_set(gamma), spec.coeff_min, spec.coeff_max);
  Window window;
  window.width = rng.integer(spec.min_window, spec.max_window);
  window.height = rng.integer(spec.min_window, spec.max_window);
  window.origin = {rng.integer(-3, 3), rng.integer(-3, 3)};
  GridSamples grid = sample(sum, spec.level, window);
  return {gamma, std::move(sum), std::move(grid)};
}

Complex finite_difference_directional(const ExponentialSum& f, Vec2 z, Vec2 v, double h) {
  const Vec2 shifted{z.x + h * v.x, z.y + h * v.y};
  return (f.evaluate(shifted) - f.evaluate(z)) / h;
}

bool exhaustive_annihilation_check(const ExponentialSum& f, const FrequencySet& gamma_set,
                                   int step_bound) {
  if (step_bound < 1 || step_bound > 3) {
    throw Error(ErrorKind::InvalidArgument, "step bound must lie in 1..3");
  }
  if (f.is_zero()) return true;
  if (gamma_set.size() == 0) return false;

  std::vector<Vec2> steps;
  for (int dx = -step_bound; dx <= step_bound; ++dx) {
    for (int dy = -step_bound; dy <= step_bound; ++dy) {
      if (dx != 0 || dy != 0) steps.push_back({static_cast<double>(dx), static_cast<double>(dy)});
    }
  }
  const auto& terms = f.terms();
  const auto& gammas = gamma_set.members();
  const std::size_t n_terms = terms.size();
  const std::size_t n_steps = steps.size();

  // multiplier[(factor * n_steps + step) * n_terms + term]
  std::vector<Complex> multiplier(gammas.size() * n_steps * n_terms);
  for (std::size_t g = 0; g < gammas.size(); ++g) {
    for (std::size_t s = 0; s < n_steps; ++s) {
      const Vec2 st = steps[s];
      const Complex gz = gammas[g].g1().value() * st.x + gammas[g].g2().value() * st.y;
      for (std::size_t t = 0; t < n_terms; ++t) {
        const Complex mz = terms[t].freq.g1().value() * st.x + terms[t].freq.g2().value() * st.y;
        multiplier[(g * n_steps + s) * n_terms + t] = std::exp(mz) - std::exp(gz);
      }
    }
  }

  double scale = 0.0;
  for (const Term& t : terms) scale = std::max(scale, std::abs(t.coeff));
  const double threshold = 1e-12 * scale;

  // Only terms that are still nonzero are carried down the recursion; a term
  // hit by its own frequency becomes exactly zero and drops out.
  struct Active {
    std::size_t term;
    Complex value;
  };
  std::vector<std::vector<Active>> running(gammas.size() + 1);
  for (std::size_t t = 0; t < n_terms; ++t) {
    if (terms[t].coeff != Complex(0.0, 0.0)) running[0].push_back({t, terms[t].coeff});
  }
  const std::size_t last = gammas.size() - 1;

  std::function<bool(std::size_t)> visit = [&](std::size_t depth) -> bool {
    const auto& current = running[depth];
    if (current.empty()) return true;
    if (depth == last) {
      for (std::size_t s = 0; s < n_steps; ++s) {
        const Complex* m = &multiplier[(depth * n_steps + s) * n_terms];
        for (const Active& a : current) {
          if (std::abs(a.value * m[a.term]) > threshold) return false;
        }
      }
      return true;
    }
    auto& next = running[depth + 1];
    for (std::size_t s = 0; s < n_steps; ++s) {
      const Complex* m = &multiplier[(depth * n_steps + s) * n_terms];
      next.clear();
      for (const Active& a : current) {
        const Complex v = a.value * m[a.term];
        if (v != Complex(0.0, 0.0)) next.push_back({a.term, v});
      }
      if (!visit(depth + 1)) return false;
    }
    return true;
  };
  return visit(0);
}

}  // namespace expann::oracle
