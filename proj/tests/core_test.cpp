#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "ehvi/core.hpp"
#include "ehvi/normal.hpp"
#include "test_support.hpp"

namespace {

using ehvi::ErrorKind;
using ehvi::Point;
using ehvi::testing::kInf;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ehvi::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::InvalidArgument;
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(ehvi::dominates({2, 3}, {1, 3}));
  EXPECT_FALSE(ehvi::dominates({1, 2}, {2, 1}));
  EXPECT_FALSE(ehvi::dominates({1, 1}, {1, 1}));
  EXPECT_TRUE(ehvi::weakly_dominates({1, 1}, {1, 1}));
  EXPECT_EQ(kind_of([] { ehvi::dominates({1, 2}, {1, 2, 3}); }), ErrorKind::DimensionMismatch);
}

TEST(Dominance, StrictPartialOrder) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(0, 3);
  auto draw = [&] { return Point{double(coord(rng)), double(coord(rng)), double(coord(rng))}; };
  for (int i = 0; i < 5000; ++i) {
    const Point p = draw(), q = draw(), s = draw();
    EXPECT_FALSE(ehvi::dominates(p, p));
    if (ehvi::dominates(p, q)) {
      EXPECT_FALSE(ehvi::dominates(q, p));
    }
    if (ehvi::dominates(p, q) && ehvi::dominates(q, s)) {
      EXPECT_TRUE(ehvi::dominates(p, s));
    }
  }
}

TEST(ValidateFront, AcceptsNonDominatedSet) {
  const auto f = ehvi::validate_front({{1, 2}, {2, 1}}, {0, 0});
  EXPECT_EQ(f.size(), 2U);
  EXPECT_EQ(f.dim(), 2U);
}

TEST(ValidateFront, Errors) {
  EXPECT_EQ(kind_of([] { ehvi::validate_front({{1, 2}, {2, 3}}, {0, 0}); }),
            ErrorKind::DominatedMember);
  EXPECT_EQ(kind_of([] { ehvi::validate_front({{1, 2}}, {1, 0}); }),
            ErrorKind::ReferenceNotDominated);
  EXPECT_EQ(kind_of([] { ehvi::validate_front({{1, 2}, {1, 2}}, {0, 0}); }),
            ErrorKind::DuplicatePoint);
  EXPECT_EQ(kind_of([] { ehvi::validate_front({{1, 2, 3}}, {0, 0}); }),
            ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { ehvi::validate_front({{1, std::nan("")}}, {0, 0}); }),
            ErrorKind::NonFiniteCoordinate);
  EXPECT_EQ(kind_of([] { ehvi::validate_front({{1, kInf}}, {0, 0}); }),
            ErrorKind::NonFiniteCoordinate);
}

TEST(ValidateFront, EmptyFrontKeepsDimension) {
  const auto f = ehvi::validate_front({}, {0, 0, 0});
  EXPECT_TRUE(f.empty());
  EXPECT_EQ(f.dim(), 3U);
}

TEST(GaussianPredictor, Validation) {
  EXPECT_NO_THROW(ehvi::GaussianPredictor({0, 0}, {1, 1}));
  EXPECT_EQ(kind_of([] { ehvi::GaussianPredictor({0, 0}, {1, 0}); }), ErrorKind::InvalidPredictor);
  EXPECT_EQ(kind_of([] { ehvi::GaussianPredictor({0, 0}, {1, -1}); }), ErrorKind::InvalidPredictor);
  EXPECT_EQ(kind_of([] { ehvi::GaussianPredictor({0, 0}, {1}); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { ehvi::GaussianPredictor({kInf, 0}, {1, 1}); }),
            ErrorKind::InvalidPredictor);
}

TEST(Normal, KnownValues) {
  EXPECT_DOUBLE_EQ(ehvi::std_normal_pdf(0), 0.3989422804014327);
  EXPECT_EQ(ehvi::std_normal_cdf(0), 0.5);
  EXPECT_EQ(ehvi::std_normal_cdf(kInf), 1.0);
  EXPECT_EQ(ehvi::std_normal_cdf(-kInf), 0.0);
  EXPECT_EQ(ehvi::std_normal_pdf(kInf), 0.0);
  EXPECT_EQ(ehvi::std_normal_pdf(-kInf), 0.0);
}

TEST(Normal, TailsStayAccurate) {
  // 1 - Phi(10) = 7.6198530241605260e-24
  EXPECT_NEAR(ehvi::std_normal_sf(10) / 7.6198530241605260e-24, 1.0, 1e-13);
  EXPECT_NEAR(ehvi::normal_mass(10, kInf, 0, 1) / 7.6198530241605260e-24, 1.0, 1e-13);
  EXPECT_EQ(ehvi::normal_mass(1, 1, 0, 1), 0.0);
  EXPECT_NEAR(ehvi::normal_mass(-kInf, kInf, 3, 2), 1.0, 1e-15);
}

TEST(Psi, Examples) {
  EXPECT_DOUBLE_EQ(ehvi::psi(0, 0, 0, 1), 0.3989422804014327);
  EXPECT_EQ(ehvi::psi(0.5, kInf, 1, 2), 0.0);
  EXPECT_EQ(ehvi::psi(-3, kInf, 10, 0.1), 0.0);
  // phi(1) - (1 - Phi(1)), 30-digit evaluation
  EXPECT_NEAR(ehvi::psi(1, 1, 0, 1), 0.0833154705876862983830627385676, 1e-15);
  EXPECT_THROW(ehvi::psi(0, 0, 0, 0), ehvi::Error);
}

TEST(Psi, DifferenceIsPartialImprovement) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  std::uniform_real_distribution<double> s(0.1, 2);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), mu = u(rng), sigma = s(rng);
    double l = u(rng), h = u(rng);
    if (l > h) std::swap(l, h);
    const double oracle = ehvi::testing::simpson(
        [&](double z) { return (z - a) * ehvi::testing::pdf((z - mu) / sigma) / sigma; }, l, h,
        1e-14);
    const double diff = ehvi::psi(a, l, mu, sigma) - ehvi::psi(a, h, mu, sigma);
    EXPECT_NEAR(diff, oracle, 1e-11) << a << ' ' << l << ' ' << h << ' ' << mu << ' ' << sigma;
  }
}

TEST(PartialEi, Examples) {
  EXPECT_NEAR(ehvi::partial_ei_1d(0, 0, kInf, 0, 1), 0.3989422804014327, 1e-15);
  EXPECT_EQ(ehvi::partial_ei_1d(0, 3, 3, 0.2, 0.5), 0.0);
  EXPECT_NEAR(ehvi::partial_ei_1d(0, 0, 1, 0, 1), 0.156971555882289328142115866999, 1e-15);
  EXPECT_NEAR(ehvi::partial_ei_1d(0, 0, 1, 0, 1), ehvi::psi(0, 0, 0, 1) - ehvi::psi(0, 1, 0, 1),
              1e-16);
  EXPECT_THROW(ehvi::partial_ei_1d(0, 2, 1, 0, 1), ehvi::Error);
}

TEST(PartialEi, NonNegativeAboveFbest) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    const double f = u(rng);
    const double l = f + std::abs(u(rng));
    const double h = l + std::abs(u(rng));
    EXPECT_GE(ehvi::partial_ei_1d(f, l, h, u(rng), 0.01 + std::abs(u(rng))), 0.0);
  }
}

TEST(ErrorText, NamesKind) {
  try {
    ehvi::validate_front({{1, 2}, {2, 3}}, {0, 0});
  } catch (const ehvi::Error& e) {
    EXPECT_NE(std::string(e.what()).find("DominatedMember"), std::string::npos);
  }
}

}  // namespace
