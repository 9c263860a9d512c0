// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "expann/detection.hpp"
#include "expann/operators.hpp"
#include "expann/oracle.hpp"
#include "expann/subdivision.hpp"

namespace fs = std::filesystem;
using namespace expann;

namespace {

constexpr double kSuiteBudgetSeconds = 10.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Context {
  std::string cli;
  fs::path workdir;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

// A frequency in G \ {0}: real in [0.1, 2] or imaginary in i[0.1, 0.9 pi].
Frequency random_restricted(oracle::Rng& rng) {
  return rng.coin() ? Frequency::real(rng.uniform(0.1, 2.0))
                    : Frequency::imag(rng.uniform(0.1, 0.9 * std::numbers::pi));
}

FrequencyVector random_frequency(oracle::Rng& rng) {
  auto component = [&rng]() {
    return rng.coin() ? Frequency::real(rng.uniform(-2.0, 2.0))
                      : Frequency::imag(rng.uniform(-3.0, 3.0));
  };
  const Frequency a = component();
  const Frequency b = component();
  return {a, b};
}

IntegerStep random_step(oracle::Rng& rng, int bound) {
  for (;;) {
    const int dx = rng.integer(-bound, bound);
    const int dy = rng.integer(-bound, bound);
    if (dx != 0 || dy != 0) return {dx, dy};
  }
}

Complex random_complex(oracle::Rng& rng) { return {rng.uniform(-3, 3), rng.uniform(-3, 3)}; }

double max_coefficient_diff(const ExponentialSum& a, const ExponentialSum& b) {
  return (a + Complex(-1.0) * b).max_coefficient();
}

// -- criteria -----------------------------------------------------------------

Outcome univariate_relation() {
  oracle::Rng rng(101);
  double worst = 0.0;
  for (int draw = 0; draw < 30; ++draw) {
    const Complex a = random_complex(rng);
    const Complex b = random_complex(rng);
    const Complex g = random_restricted(rng).value();
    for (int k = 0; k <= 4; ++k) {
      const double h = grid_spacing(k);
      std::vector<Complex> f;
      for (int n = -6; n <= 6; ++n) {
        f.push_back(1.0 + a * std::exp(g * (h * n)) + b * std::exp(-g * (h * n)));
      }
      const Complex c = std::cosh(g * h);
      double scale = 0.0;
      for (const Complex& v : f) scale = std::max(scale, std::abs(v));
      for (std::size_t al = 1; al + 2 < f.size(); ++al) {
        const Complex r = f[al - 1] - (2.0 * c + 1.0) * f[al] + (2.0 * c + 1.0) * f[al + 1] - f[al + 2];
        worst = std::max(worst, std::abs(r) / scale);
      }
    }
  }
  return {worst <= 1e-11, "max relative residual " + sci(worst) + " (tol 1e-11), 30 draws x 5 levels"};
}

Outcome discrete_characterization() {
  oracle::Rng rng(202);
  int failures = 0;
  for (int draw = 0; draw < 30; ++draw) {
    oracle::RandomSpec spec;
    spec.seed = 2000 + static_cast<std::uint64_t>(draw);
    const auto inst = oracle::random_instance(spec);
    const FrequencySet set = symmetric_set(inst.gamma);
    if (!oracle::exhaustive_annihilation_check(inst.sum, set, 2)) ++failures;
    FrequencyVector extra = FrequencyVector::real(rng.uniform(-2, 2), rng.uniform(-2, 2));
    while (set.contains(extra)) extra = FrequencyVector::real(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const auto perturbed = inst.sum + ExponentialSum::single(random_complex(rng), extra);
    if (oracle::exhaustive_annihilation_check(perturbed, set, 2)) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " failures over 30 members and 30 perturbations (B = 2)"};
}

Outcome reduced_annihilator() {
  oracle::Rng rng(303);
  double worst = 0.0;
  std::size_t widest = 0;
  double stencil_gap = 0.0;
  for (int draw = 0; draw < 30; ++draw) {
    oracle::RandomSpec spec;
    spec.seed = 3000 + static_cast<std::uint64_t>(draw);
    spec.level = draw % 4;
    const auto inst = oracle::random_instance(spec);
    const GridSamples& s = inst.grid;
    for (Axis axis : {Axis::X, Axis::Y}) {
      const auto chain = reduced_chain_for_symmetric_set(inst.gamma, axis, random_step(rng, 1));
      worst = std::max(worst, grid_residual(chain, s));
      const GridSamples out = chain_apply(chain, s);
      const auto stencil = chain_stencil(chain, s.level());
      for (int j = 0; j < out.height(); ++j) {
        for (int i = 0; i < out.width(); ++i) {
          const Index2 a = out.origin() + Index2{i, j};
          std::set<std::pair<int, int>> touched;
          const Complex v = apply_stencil(stencil, [&](Index2 b) {
            touched.insert({b.i, b.j});
            return s.at(b);
          }, a);
          widest = std::max(widest, touched.size());
          stencil_gap = std::max(stencil_gap, std::abs(v - out.at(a)) / s.max_abs());
        }
      }
    }
  }
  const bool pass = worst <= 1e-11 && widest <= 6 && stencil_gap <= 1e-11;
  return {pass, "max residual " + sci(worst) + " (tol 1e-11), max points read " + std::to_string(widest) +
                    " (limit 6), stencil/chain gap " + sci(stencil_gap)};
}

Outcome frequency_identification() {
  const std::array<oracle::FrequencyKind, 3> kinds{oracle::FrequencyKind::Real,
                                                   oracle::FrequencyKind::Imaginary,
                                                   oracle::FrequencyKind::Mixed};
  double worst = 0.0;
  int misclassified = 0;
  for (int draw = 0; draw < 50; ++draw) {
    oracle::RandomSpec spec;
    spec.seed = 4000 + static_cast<std::uint64_t>(draw);
    spec.kind = kinds[static_cast<std::size_t>(draw) % kinds.size()];
    spec.level = draw % 4;
    const auto inst = oracle::random_instance(spec);
    const DetectionReport r = detect(inst.grid, inst.grid.origin() + Index2{1, 1});
    if (r.classification != Classification::Frequency) {
      ++misclassified;
      continue;
    }
    worst = std::max({worst, std::abs(r.gamma.g1().value() - inst.gamma.g1().value()),
                      std::abs(r.gamma.g2().value() - inst.gamma.g2().value())});
  }

  const GridSamples flat = sample([](Vec2) { return Complex(2.5); }, 1, Window{{0, 0}, 6, 6});
  const bool constant_ok = detect(flat, {1, 1}).classification == Classification::Constant;

  int gauss_wrong = 0;
  for (int k = 0; k <= 3; ++k) {
    const GridSamples gauss = sample([](Vec2 z) { return Complex(std::exp(-(z.x * z.x + z.y * z.y))); }, k,
                                     Window{{-2, -2}, 7, 7});
    if (detect(gauss, {-1, -1}).classification != Classification::Inconsistent) ++gauss_wrong;
  }
  const bool pass = misclassified == 0 && worst <= 1e-8 && constant_ok && gauss_wrong == 0;
  return {pass, "max component error " + sci(worst) + " (tol 1e-8) on 50 instances, " +
                    std::to_string(misclassified) + " misclassified, constant grid " +
                    (constant_ok ? "Constant" : "WRONG") + ", Gaussian grids " +
                    std::to_string(gauss_wrong) + " not Inconsistent"};
}

bool bitwise_equal(const GridSamples& a, const GridSamples& b) {
  return a.window() == b.window() && a.values().size() == b.values().size() &&
         std::memcmp(a.values().data(), b.values().data(), a.values().size_bytes()) == 0;
}

Outcome symmetry_identities() {
  oracle::Rng rng(505);
  int mismatches = 0;
  for (int draw = 0; draw < 20; ++draw) {
    const FrequencyVector g(random_restricted(rng), random_restricted(rng));
    const FrequencyVector m = g.mirror();
    std::vector<Complex> values(64);
    for (Complex& v : values) v = random_complex(rng);
    const GridSamples s(draw % 4, Window{{-3, -3}, 8, 8}, values);
    const IntegerStep ex(1, 0);
    const IntegerStep ey(0, 1);
    mismatches += !bitwise_equal(delta_apply(g, ex, s), delta_apply(m, ex, s));
    mismatches += !bitwise_equal(delta_apply(-g, ex, s), delta_apply(-m, ex, s));
    mismatches += !bitwise_equal(delta_apply(g, ey, s), delta_apply(-m, ey, s));
    mismatches += !bitwise_equal(delta_apply(-g, ey, s), delta_apply(m, ey, s));
  }
  return {mismatches == 0, std::to_string(mismatches) + " of 80 identity pairs differ bitwise"};
}

Outcome commutativity() {
  oracle::Rng rng(606);
  double worst = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    std::vector<FrequencyVector> members;
    while (members.size() < 4) {
      const FrequencyVector mu = random_frequency(rng);
      if (std::find(members.begin(), members.end(), mu) == members.end()) members.push_back(mu);
    }
    const ExponentialSum f = oracle::random_member(rng, FrequencySet(members));
    const FrequencyVector g = random_frequency(rng);
    const FrequencyVector h = random_frequency(rng);
    const IntegerStep s = random_step(rng, 3);
    const IntegerStep r = random_step(rng, 3);
    const auto lhs = delta_apply(g, s, delta_apply(h, r, f));
    const auto rhs = delta_apply(h, r, delta_apply(g, s, f));
    const double scale = std::max(lhs.max_coefficient(), rhs.max_coefficient());
    if (scale > 0.0) worst = std::max(worst, max_coefficient_diff(lhs, rhs) / scale);
  }
  return {worst <= 1e-13, "max relative coefficient gap " + sci(worst) + " (tol 1e-13), 20 pairs"};
}

Outcome differential_consistency() {
  oracle::Rng rng(707);
  double lo = 1e300;
  double hi = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    std::vector<FrequencyVector> members;
    while (members.size() < 3) {
      const FrequencyVector mu = random_frequency(rng);
      if (std::find(members.begin(), members.end(), mu) == members.end()) members.push_back(mu);
    }
    const ExponentialSum f = oracle::random_member(rng, FrequencySet(members));
    const FrequencyVector g = random_frequency(rng);
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Direction v(Vec2{std::cos(angle), std::sin(angle)});
    const Vec2 z{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Complex exact = diff_apply(g, v, f).evaluate(z);
    const Complex shift = g.dot(v.unit()) * f.evaluate(z);
    std::vector<double> errors;
    for (const double h : {1e-2, 5e-3, 2.5e-3}) {
      errors.push_back(std::abs(oracle::finite_difference_directional(f, z, v.unit(), h) - shift - exact));
    }
    for (std::size_t n = 0; n + 1 < errors.size(); ++n) {
      const double ratio = errors[n] / errors[n + 1];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  return {lo >= 1.8 && hi <= 2.2,
          "error ratios in [" + sci(lo) + ", " + sci(hi) + "] (required [1.8, 2.2]), 20 draws"};
}

Outcome subdivision_reproduction() {
  oracle::Rng rng(808);
  double worst_data = 0.0;
  double worst_gamma = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const Frequency g = random_restricted(rng);
    const Complex a = rng.uniform(-3, 3);
    const Complex b = rng.uniform(-3, 3);
    const Complex c0 = rng.uniform(-3, 3);
    const auto f = [&](double z) {
      return c0 + a * std::exp(g.value() * z) + b * std::exp(-g.value() * z);
    };
    Sequence coarse{0, -4, {}};
    for (int n = 0; n < 10; ++n) coarse.values.push_back(f(coarse.origin + n));
    const AutoRefineResult r = auto_refine(coarse, 4);
    worst_gamma = std::max(worst_gamma, std::abs(r.gamma.value() - g.value()));
    const double h = grid_spacing(r.data.level);
    double scale = 0.0;
    double diff = 0.0;
    for (std::size_t n = 0; n < r.data.values.size(); ++n) {
      const Complex want = f(h * (r.data.origin + static_cast<double>(n)));
      scale = std::max(scale, std::abs(want));
      diff = std::max(diff, std::abs(r.data.values[n] - want));
    }
    worst_data = std::max(worst_data, diff / scale);
  }
  const InsertionRule classic = synthesize_rule(1.0);
  const bool exact = classic.outer == Complex(-1.0 / 16.0) && classic.inner == Complex(9.0 / 16.0);
  return {worst_data <= 1e-10 && worst_gamma <= 1e-9 && exact,
          "max relative data error " + sci(worst_data) + " (tol 1e-10), gamma error " + sci(worst_gamma) +
              " (tol 1e-9), c = 1 weights " + (exact ? "exactly (-1/16, 9/16)" : "NOT exact")};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome golden_determinism(const Context& ctx) {
  if (ctx.cli.empty()) return {false, "no --cli given"};
  const std::array<fs::path, 2> dirs{ctx.workdir / "run1", ctx.workdir / "run2"};
  for (const fs::path& d : dirs) {
    fs::remove_all(d);
    const std::string cmd = "\"" + ctx.cli + "\" golden --seed 0 --out \"" + d.string() + "\"";
    const int raw = std::system(cmd.c_str());
    if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) return {false, "golden run failed: " + cmd};
  }
  std::string detail;
  bool pass = true;
  for (const char* name : {"instance.json", "report.json", "refined.json"}) {
    const std::string a = slurp(dirs[0] / name);
    const std::string b = slurp(dirs[1] / name);
    const bool same = !a.empty() && a == b;
    pass = pass && same;
    detail += std::string(detail.empty() ? "" : ", ") + name + (same ? " identical" : " DIFFERS");
  }
  return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  Context ctx;
  std::string workdir = "acceptance_work";
  app.add_option("--cli", ctx.cli, "Path to the expann executable");
  app.add_option("--workdir", workdir, "Scratch directory for golden files");
  CLI11_PARSE(app, argc, argv);
  ctx.workdir = workdir;
  fs::create_directories(ctx.workdir);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 univariate four-term relation", univariate_relation},
      {"AC2 discrete characterization, exhaustive B = 2", discrete_characterization},
      {"AC3 reduced three-factor annihilator", reduced_annihilator},
      {"AC4 frequency identification", frequency_identification},
      {"AC5 symmetry identities", symmetry_identities},
      {"AC6 commutativity", commutativity},
      {"AC7 differential/difference consistency", differential_consistency},
      {"AC8 subdivision reproduction", subdivision_reproduction},
      {"AC9 golden-file determinism", [&] { return golden_determinism(ctx); }},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& err) {
      o = {false, std::string("exception: ") + err.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kSuiteBudgetSeconds) {
      o.pass = false;
      o.detail += "; over the time budget";
    }
    failed += !o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << timing << "]\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
