#include "expann/expspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

namespace expann {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidFrequency: return "InvalidFrequency";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::OutOfWindow: return "OutOfWindow";
    case ErrorKind::DenominatorZero: return "DenominatorZero";
    case ErrorKind::InvalidCosh: return "InvalidCosh";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::SingularRule: return "SingularRule";
    case ErrorKind::TooShort: return "TooShort";
  }
  return "Unknown";
}

Frequency::Frequency(Complex value) : value_(value) {
  const double re = value.real();
  const double im = value.imag();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw Error(ErrorKind::InvalidFrequency, "non-finite frequency");
  }
  const bool real = im == 0.0;
  const bool imaginary = re == 0.0 && std::abs(im) < std::numbers::pi;
  if (!real && !imaginary) {
    std::ostringstream os;
    os << "frequency (" << re << ", " << im << ") is neither real nor in i(-pi, pi)";
    throw Error(ErrorKind::InvalidFrequency, os.str());
  }
}

bool Frequency::is_restricted() const noexcept {
  const double re = value_.real();
  const double im = value_.imag();
  return (im == 0.0 && re >= 0.0) || (re == 0.0 && im > 0.0 && im < std::numbers::pi);
}

bool operator<(const FrequencyVector& a, const FrequencyVector& b) {
  auto key = [](const FrequencyVector& g) {
    return std::make_tuple(g.g1().value().real(), g.g1().value().imag(),
                           g.g2().value().real(), g.g2().value().imag());
  };
  return key(a) < key(b);
}

FrequencySet::FrequencySet(std::vector<FrequencyVector> members) : members_(std::move(members)) {
  for (std::size_t a = 0; a < members_.size(); ++a) {
    for (std::size_t b = a + 1; b < members_.size(); ++b) {
      if (members_[a] == members_[b]) {
        throw Error(ErrorKind::InvalidArgument, "frequency set members must be distinct");
      }
    }
  }
}

bool FrequencySet::contains(const FrequencyVector& g) const {
  return std::find(members_.begin(), members_.end(), g) != members_.end();
}

std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.freq < b.freq; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().freq == t.freq) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == Complex(0.0, 0.0); });
  return out;
}

ExponentialSum::ExponentialSum(std::vector<Term> terms) : terms_(canonicalize(std::move(terms))) {}

double ExponentialSum::max_coefficient() const {
  double m = 0.0;
  for (const Term& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

FrequencySet ExponentialSum::frequencies() const {
  std::vector<FrequencyVector> f;
  f.reserve(terms_.size());
  for (const Term& t : terms_) f.push_back(t.freq);
  return FrequencySet(std::move(f));
}

Complex ExponentialSum::evaluate(Vec2 z) const {
  Complex sum(0.0, 0.0);
  for (const Term& t : terms_) sum += t.coeff * std::exp(t.freq.dot(z));
  return sum;
}

ExponentialSum operator+(const ExponentialSum& a, const ExponentialSum& b) {
  std::vector<Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return ExponentialSum(std::move(terms));
}

ExponentialSum operator*(Complex s, const ExponentialSum& a) {
  std::vector<Term> terms = a.terms_;
  for (Term& t : terms) t.coeff *= s;
  return ExponentialSum(std::move(terms));
}

double grid_spacing(int level) {
  if (level < 0) throw Error(ErrorKind::InvalidArgument, "level must be non-negative");
  return std::ldexp(1.0, -level);
}

GridSamples::GridSamples(int level, Window window, std::vector<Complex> values)
    : level_(level), window_(window), values_(std::move(values)) {
  if (level_ < 0) throw Error(ErrorKind::InvalidArgument, "level must be non-negative");
  if (window_.width < 1 || window_.height < 1) {
    throw Error(ErrorKind::EmptyWindow, "grid window must have positive width and height");
  }
  const auto expected = static_cast<std::size_t>(window_.width) * window_.height;
  if (values_.size() != expected) {
    std::ostringstream os;
    os << "expected " << expected << " values for a " << window_.width << "x" << window_.height
       << " window, got " << values_.size();
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

const Complex& GridSamples::at(Index2 a) const {
  if (!contains(a)) {
    std::ostringstream os;
    os << "index (" << a.i << ", " << a.j << ") outside window";
    throw Error(ErrorKind::OutOfWindow, os.str());
  }
  const auto col = static_cast<std::size_t>(a.i - window_.origin.i);
  const auto row = static_cast<std::size_t>(a.j - window_.origin.j);
  return values_[row * static_cast<std::size_t>(window_.width) + col];
}

double GridSamples::max_abs() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

Vec2 GridSamples::point(Index2 a) const {
  const double h = grid_spacing(level_);
  return {h * a.i, h * a.j};
}

GridSamples sample(const std::function<Complex(Vec2)>& f, int level, const Window& window) {
  if (window.width < 1 || window.height < 1) {
    throw Error(ErrorKind::EmptyWindow, "sampling window must have positive width and height");
  }
  const double h = grid_spacing(level);
  std::vector<Complex> values;
  values.reserve(static_cast<std::size_t>(window.width) * window.height);
  for (int r = 0; r < window.height; ++r) {
    for (int c = 0; c < window.width; ++c) {
      const Index2 a{window.origin.i + c, window.origin.j + r};
      values.push_back(f(Vec2{h * a.i, h * a.j}));
    }
  }
  return GridSamples(level, window, std::move(values));
}

GridSamples sample(const ExponentialSum& f, int level, const Window& window) {
  return sample([&f](Vec2 z) { return f.evaluate(z); }, level, window);
}

FrequencySet symmetric_set(const FrequencyVector& g) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "symmetric set needs gamma != 0");
  if (!g.is_restricted()) {
    throw Error(ErrorKind::InvalidFrequency, "symmetric set needs gamma in G^2");
  }
  std::vector<FrequencyVector> members;
  for (const FrequencyVector& m : {FrequencyVector{}, g, -g, g.mirror(), -g.mirror()}) {
    if (std::find(members.begin(), members.end(), m) == members.end()) members.push_back(m);
  }
  return FrequencySet(std::move(members));
}

}  // namespace expann
