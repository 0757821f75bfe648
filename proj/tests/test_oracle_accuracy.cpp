#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "lambertw/accuracy.hpp"
#include "lambertw/lambert_w.hpp"
#include "lambertw/oracle.hpp"

namespace {

using lambertw::Branch;
using lambertw::GridKind;
using lambertw::GridSpec;
using lambertw::Stage;
const double kBp = lambertw::constants::kBranchPointX;

TEST(Oracle, Examples) {
  EXPECT_EQ(lambertw::reference_w(Branch::principal, 0.0), 0.0);
  EXPECT_EQ(lambertw::reference_w(Branch::principal, std::exp(1.0)), 1.0);
  EXPECT_EQ(lambertw::reference_w(Branch::principal, 1.0), 0.5671432904097838);
  EXPECT_NEAR(0.5671432904 * std::exp(0.5671432904), 1.0, 1e-9);
  EXPECT_EQ(lambertw::reference_w(Branch::principal, kBp), -1.0);
  EXPECT_EQ(lambertw::reference_w(Branch::lower, kBp), -1.0);
}

TEST(Oracle, NoNeighbourHasSmallerResidual) {
  auto check = [](Branch b, double x) {
    const double y = lambertw::reference_w(b, x);
    const long double r = lambertw::reference_residual(x, y);
    EXPECT_LE(r, lambertw::reference_residual(x, std::nextafter(y, -INFINITY))) << "x=" << x;
    EXPECT_LE(r, lambertw::reference_residual(x, std::nextafter(y, INFINITY))) << "x=" << x;
  };
  for (double x : GridSpec{GridKind::linear, kBp + 1e-9, 0.3, 1000}.points()) check(Branch::principal, x);
  for (double x : GridSpec{GridKind::log, 0.3, 1e300, 1000}.points()) check(Branch::principal, x);
  for (double x : GridSpec{GridKind::linear, kBp + 1e-9, -1e-6, 1000}.points()) check(Branch::lower, x);
  for (double x : GridSpec{GridKind::log, -0.36, -1e-300, 1000}.points()) check(Branch::lower, x);
}

TEST(Oracle, BranchesSplitAtMinusOne) {
  for (double x : GridSpec{GridKind::linear, kBp + 1e-9, -1e-6, 200}.points()) {
    EXPECT_GT(lambertw::reference_w(Branch::principal, x), -1.0) << x;
    EXPECT_LT(lambertw::reference_w(Branch::lower, x), -1.0) << x;
  }
}

TEST(Oracle, ResidualWithinFourUlp) {
  const double ulp4 = 4 * 0x1p-52;
  for (double x : GridSpec{GridKind::linear, kBp + 1e-9, 1.0, 2000}.points()) {
    const double y = lambertw::reference_w(Branch::principal, x);
    EXPECT_LE(std::fabs(lambertw::reference_residual(x, y)), ulp4 * std::fmax(std::fabs(x), 1)) << x;
  }
  for (double x : GridSpec{GridKind::log, -0.36, -1e-300, 2000}.points()) {
    const double y = lambertw::reference_w(Branch::lower, x);
    EXPECT_LE(std::fabs(lambertw::reference_residual(x, y)), ulp4 * std::fmax(std::fabs(x), 1)) << x;
  }
}

TEST(Oracle, Domain) {
  EXPECT_THROW(lambertw::reference_w(Branch::principal, -0.5), lambertw::DomainError);
  EXPECT_THROW(lambertw::reference_w(Branch::lower, 0.0), lambertw::DomainError);
  EXPECT_THROW(lambertw::reference_w(Branch::lower, std::nan("")), lambertw::DomainError);
}

TEST(Delta, Examples) {
  EXPECT_EQ(lambertw::delta_accuracy(0.25, 0.25), 17.0);
  EXPECT_NEAR(lambertw::delta_accuracy(-0.99, -1.0), 2.0, 1e-12);
  EXPECT_GE(lambertw::delta_accuracy(lambertw::lambert_w_approximation(Branch::principal, 1.0),
                                     lambertw::reference_w(Branch::principal, 1.0)),
            5.0);
  EXPECT_NEAR(lambertw::delta_accuracy(1.0 + 0x1p-52, 1.0), 52 * std::log10(2.0), 1e-12);
  EXPECT_THROW(lambertw::delta_accuracy(1.0, 0.0), lambertw::DomainError);
}

TEST(Grid, ParseAndDescribe) {
  const auto g = lambertw::parse_grid("log[0.3,100000,1000]");
  EXPECT_EQ(g.kind, GridKind::log);
  EXPECT_EQ(g.lower, 0.3);
  EXPECT_EQ(g.upper, 1e5);
  EXPECT_EQ(g.count, 1000);
  EXPECT_EQ(g.describe(), "log[0.29999999999999999,100000,1000]");
  EXPECT_EQ(lambertw::parse_grid(g.describe()).lower, g.lower);

  const auto pts = g.points();
  ASSERT_EQ(pts.size(), 1000u);
  EXPECT_EQ(pts.front(), 0.3);
  EXPECT_EQ(pts.back(), 1e5);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));

  const auto neg = lambertw::parse_grid("log[-0.3,-1e-6,50]").points();
  EXPECT_EQ(neg.front(), -0.3);
  EXPECT_EQ(neg.back(), -1e-6);
  EXPECT_TRUE(std::is_sorted(neg.begin(), neg.end()));

  for (const char* bad : {"linear[0,1]", "cubic[0,1,3]", "log[-1,1,5]", "linear[0,1,0]",
                          "linear[0,1,5", "linear[a,1,5]", "linear[0,1,5,6]"})
    EXPECT_THROW(lambertw::parse_grid(bad), std::invalid_argument) << bad;
}

TEST(Stage, Names) {
  for (Stage s : {Stage::approximation, Stage::one_halley, Stage::one_fritsch, Stage::converged})
    EXPECT_EQ(lambertw::parse_stage(lambertw::to_string(s)), s);
  EXPECT_THROW(lambertw::parse_stage("two-halley"), std::invalid_argument);
}

TEST(Sweep, Examples) {
  EXPECT_GE(lambertw::accuracy_sweep(Branch::principal, Stage::approximation,
                                     {GridKind::linear, kBp + 1e-9, 0.3, 1000})
                .min_delta,
            5.0);
  EXPECT_GE(lambertw::accuracy_sweep(Branch::principal, Stage::one_fritsch, {GridKind::log, 0.3, 1e5, 1000})
                .min_delta,
            13.0);
  EXPECT_GE(lambertw::accuracy_sweep(Branch::lower, Stage::one_halley,
                                     {GridKind::linear, kBp + 1e-9, -1e-6, 1000})
                .min_delta,
            13.0);
}

TEST(Sweep, MinDeltaAndZeroSkipped) {
  const auto r = lambertw::accuracy_sweep(Branch::principal, Stage::approximation,
                                          {GridKind::linear, -0.3, 0.3, 11});
  EXPECT_EQ(r.samples.size(), 10u);
  double m = 17;
  for (const auto& s : r.samples) {
    EXPECT_NE(s.x, 0.0);
    m = std::fmin(m, s.delta);
  }
  EXPECT_EQ(r.min_delta, m);
}

TEST(Sweep, SerialAndParallelAgree) {
  for (Stage stage : {Stage::approximation, Stage::one_halley, Stage::one_fritsch}) {
    const GridSpec g{GridKind::log, 0.3, 1e5, 700};
    const auto a = lambertw::accuracy_sweep(Branch::principal, stage, g, lambertw::Execution::serial);
    const auto b = lambertw::accuracy_sweep(Branch::principal, stage, g, lambertw::Execution::parallel);
    ASSERT_EQ(a.samples.size(), b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
      EXPECT_EQ(a.samples[i].x, b.samples[i].x);
      EXPECT_EQ(a.samples[i].delta, b.samples[i].delta);
      EXPECT_EQ(a.samples[i].region, b.samples[i].region);
    }
    EXPECT_EQ(a.min_delta, b.min_delta);
  }
}

TEST(Sweep, OutOfDomainNamesThePoint) {
  try {
    lambertw::accuracy_sweep(Branch::lower, Stage::approximation, {GridKind::linear, -0.1, 0.1, 3});
    FAIL() << "expected DomainError";
  } catch (const lambertw::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("0.1"), std::string::npos);
  }
}

TEST(Sweep, FileFormat) {
  const auto r = lambertw::accuracy_sweep(Branch::lower, Stage::one_fritsch, {GridKind::log, -0.3, -1e-3, 5});
  std::ostringstream os;
  lambertw::write_accuracy_file(os, r);
  std::istringstream in(os.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("# branch=-1 stage=one-fritsch grid=log[", 0), 0u) << header;
  EXPECT_NE(header.find("min_delta="), std::string::npos);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    double x = 0, delta = 0;
    std::string region, extra;
    fields >> x >> delta >> region;
    ASSERT_FALSE(fields.fail()) << line;
    EXPECT_FALSE(fields >> extra);
    EXPECT_EQ(x, r.samples[rows].x);
    EXPECT_EQ(delta, r.samples[rows].delta);
    EXPECT_EQ(region, lambertw::to_string(r.samples[rows].region));
    ++rows;
  }
  EXPECT_EQ(rows, r.samples.size());
}

}  // namespace
