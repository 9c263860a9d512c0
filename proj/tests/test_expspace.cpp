#include <cmath>
#include <numbers>

#include "doctest.h"

#include "expann/expspace.hpp"
#include "expann/oracle.hpp"
#include "test_support.hpp"

using namespace expann;
using expann::test::close;

TEST_SUITE("expspace") {
  TEST_CASE("frequency domain membership is exact") {
    CHECK_NOTHROW(Frequency(Complex(2.5, 0.0)));
    CHECK_NOTHROW(Frequency(Complex(-7.0, 0.0)));
    CHECK_NOTHROW(Frequency(Complex(0.0, 3.14)));
    CHECK_NOTHROW(Frequency(Complex(0.0, -3.14)));
    CHECK_THROWS_AS(Frequency(Complex(0.0, std::numbers::pi)), Error);
    CHECK_THROWS_AS(Frequency(Complex(1e-300, 0.5)), Error);
    CHECK_THROWS_AS(Frequency(Complex(NAN, 0.0)), Error);

    CHECK(Frequency::real(0.0).is_restricted());
    CHECK(Frequency::real(1.0).is_restricted());
    CHECK_FALSE(Frequency::real(-1.0).is_restricted());
    CHECK(Frequency::imag(1.0).is_restricted());
    CHECK_FALSE(Frequency::imag(-1.0).is_restricted());
  }

  TEST_CASE("mirror is an involution") {
    oracle::Rng rng(11);
    for (int n = 0; n < 50; ++n) {
      const FrequencyVector g(rng.coin() ? Frequency::real(rng.uniform(-3, 3))
                                         : Frequency::imag(rng.uniform(-3, 3)),
                              rng.coin() ? Frequency::real(rng.uniform(-3, 3))
                                         : Frequency::imag(rng.uniform(-3, 3)));
      CHECK(g.mirror().mirror() == g);
      CHECK(g.mirror().g1() == g.g1());
      CHECK(g.mirror().g2() == -g.g2());
    }
  }

  TEST_CASE("frequency sets reject duplicates") {
    const auto g = FrequencyVector::real(1.0, 0.5);
    CHECK_THROWS_AS(FrequencySet({g, FrequencyVector{}, g}), Error);
    CHECK(FrequencySet({g, -g}).contains(-g));
  }

  TEST_CASE("canonical form merges, drops zeros and is idempotent") {
    const auto a = FrequencyVector::real(1.0, 0.0);
    const auto b = FrequencyVector::real(-1.0, 2.0);
    const ExponentialSum f({{2.0, a}, {1.0, b}, {3.0, a}, {0.0, FrequencyVector{}}});
    REQUIRE(f.size() == 2);
    CHECK(f.terms()[0].freq == b);
    CHECK(f.terms()[1].coeff == Complex(5.0));
    CHECK(ExponentialSum(f.terms()) == f);

    const ExponentialSum cancel({{1.5, a}, {-1.5, a}});
    CHECK(cancel.is_zero());
  }

  TEST_CASE("evaluate") {
    CHECK(ExponentialSum::single(1.0, {}).evaluate({3.7, -2.0}) == Complex(1.0));
    const auto two_e = ExponentialSum::single(2.0, FrequencyVector::real(1.0, 0.0)).evaluate({1.0, 5.0});
    CHECK(close(two_e, 5.4365636569180904707, 1e-15));
    const FrequencyVector quarter_turn(Frequency{}, Frequency::imag(std::numbers::pi / 2));
    CHECK(close(ExponentialSum::single(1.0, quarter_turn).evaluate({0.0, 1.0}), Complex(0.0, 1.0),
                1e-15));
  }

  TEST_CASE("evaluation is linear") {
    oracle::Rng rng(3);
    const FrequencySet set({FrequencyVector::real(0.3, -0.2), FrequencyVector::real(1.1, 0.0),
                            FrequencyVector(Frequency::imag(0.7), Frequency::real(0.4))});
    for (int n = 0; n < 50; ++n) {
      const ExponentialSum f = oracle::random_member(rng, set);
      const ExponentialSum g = oracle::random_member(rng, set);
      const Complex a(rng.uniform(-2, 2), rng.uniform(-2, 2));
      const Complex b(rng.uniform(-2, 2), rng.uniform(-2, 2));
      const Vec2 z{rng.uniform(-2, 2), rng.uniform(-2, 2)};
      const Complex lhs = (a * f + b * g).evaluate(z);
      const Complex rhs = a * f.evaluate(z) + b * g.evaluate(z);
      const double scale = std::max({std::abs(a * f.evaluate(z)), std::abs(b * g.evaluate(z)), 1.0});
      CHECK(std::abs(lhs - rhs) <= 1e-13 * scale);
    }
  }

  TEST_CASE("conjugate-paired imaginary sums are real") {
    oracle::Rng rng(5);
    for (int n = 0; n < 50; ++n) {
      const FrequencyVector g(Frequency::imag(rng.uniform(0.1, 3.0)),
                              Frequency::imag(rng.uniform(0.1, 3.0)));
      const ExponentialSum f = oracle::random_member(rng, FrequencySet({g, g.conj()}));
      const Vec2 z{rng.uniform(-5, 5), rng.uniform(-5, 5)};
      const Complex v = f.evaluate(z);
      CHECK(std::abs(v.imag()) <= 1e-13 * std::max(std::abs(v), 1.0));
    }
  }

  TEST_CASE("sample") {
    const auto constant = sample(ExponentialSum::single(5.0, {}), 3, Window{{-2, 4}, 3, 2});
    for (const Complex& v : constant.values()) CHECK(v == Complex(5.0));

    const auto f = ExponentialSum::single(1.0, FrequencyVector::real(0.6, 0.4));
    const auto column = sample(f, 0, Window{{0, 0}, 1, 3});
    CHECK(column.values()[0] == Complex(1.0));
    CHECK(close(column.values()[1], std::exp(0.4), 1e-15));
    CHECK(close(column.values()[2], std::exp(0.8), 1e-15));

    const ExponentialSum sym({{1.0, FrequencyVector::real(1.0, 0.0)},
                              {1.0, FrequencyVector::real(-1.0, 0.0)}});
    const auto fine = sample(sym, 1, Window{{0, 0}, 3, 3});
    CHECK(close(fine.at({1, 0}), 2.2552519304127615705, 1e-15));
    CHECK_THROWS_AS(fine.at({3, 0}), Error);
    CHECK(fine.point({1, 2}) == Vec2{0.5, 1.0});
  }

  TEST_CASE("grid construction validates its shape") {
    CHECK_THROWS_AS(GridSamples(0, Window{{0, 0}, 2, 2}, std::vector<Complex>(3)), Error);
    CHECK_THROWS_AS(GridSamples(0, Window{{0, 0}, 0, 2}, {}), Error);
    CHECK_THROWS_AS(GridSamples(-1, Window{{0, 0}, 1, 1}, {1.0}), Error);
  }

  TEST_CASE("symmetric set") {
    CHECK(symmetric_set(FrequencyVector::real(1.0, 0.5)).size() == 5);

    const auto collapsed = symmetric_set(FrequencyVector::real(0.7, 0.0));
    CHECK(collapsed.size() == 3);
    CHECK(collapsed.contains(FrequencyVector{}));
    CHECK(collapsed.contains(FrequencyVector::real(-0.7, 0.0)));

    const FrequencyVector axis2(Frequency{}, Frequency::imag(std::numbers::pi / 3));
    const auto trig = symmetric_set(axis2);
    CHECK(trig.size() == 3);
    CHECK(trig.contains(-axis2));

    CHECK_THROWS_AS(symmetric_set(FrequencyVector{}), Error);
    CHECK_THROWS_AS(symmetric_set(FrequencyVector::real(-1.0, 0.5)), Error);
  }
}
