#include <sstream>

#include <gtest/gtest.h>

#include "lambertw/bench.hpp"

namespace {

using lambertw::Branch;
using lambertw::GridKind;
using lambertw::GridSpec;
using lambertw::Scheme;
namespace bench = lambertw::bench;

TEST(Bench, ReportInvariants) {
  const GridSpec grid{GridKind::log, 0.3, 1e5, 12};
  const auto report = bench::run_benchmark(Branch::principal, grid, {Scheme::fritsch, Scheme::halley},
                                           {10'000, 5});
  const auto* f = report.find(Scheme::fritsch);
  const auto* h = report.find(Scheme::halley);
  ASSERT_NE(f, nullptr);
  ASSERT_NE(h, nullptr);
  EXPECT_TRUE(f->checksum_stable);
  EXPECT_TRUE(h->checksum_stable);
  EXPECT_EQ(f->timing.checksum, bench::untimed_checksum(Branch::principal, grid.points(), Scheme::fritsch, 10'000));
  EXPECT_LE(f->total_steps, h->total_steps);
  EXPECT_EQ(f->max_steps, 1);
  EXPECT_EQ(f->timing.calls, 12 * 10'000L);
  for (const auto* s : {f, h}) {
    EXPECT_GE(s->timing.net_per_call.count(), 0.0);
    EXPECT_GE(s->timing.spread.count(), 0.0);
  }
  for (const auto& p : report.points) EXPECT_GE(p.net_per_call.count(), 0.0);
  EXPECT_EQ(report.points.size(), 24u);
  EXPECT_FALSE(report.regions.empty());
  EXPECT_GT(report.identity.checksum, 0.0);

  std::ostringstream os;
  bench::write_report(os, report);
  EXPECT_EQ(os.str().rfind("# branch=0 grid=log[", 0), 0u);
  EXPECT_EQ(os.str().find("unstable"), std::string::npos);
}

TEST(Bench, Validation) {
  const GridSpec grid{GridKind::log, 0.3, 10, 3};
  EXPECT_THROW(bench::run_benchmark(Branch::principal, grid, {Scheme::fritsch}, {9'999, 5}),
               std::invalid_argument);
  EXPECT_THROW(bench::run_benchmark(Branch::principal, grid, {Scheme::fritsch}, {10'000, 4}),
               std::invalid_argument);
}

TEST(Bench, HalleyNeedsAnotherStepInTheGap) {
  const auto xs = GridSpec{GridKind::log, 6.6, 189, 60}.points();
  double halley = 0;
  for (double x : xs) {
    halley += bench::steps_to_converge(Branch::principal, x, Scheme::halley);
    EXPECT_EQ(bench::steps_to_converge(Branch::principal, x, Scheme::fritsch), 1) << x;
  }
  EXPECT_GT(halley / static_cast<double>(xs.size()), 1.0);
}

TEST(Bench, StepCountsAtSpecialPoints) {
  EXPECT_EQ(bench::steps_to_converge(Branch::principal, 0.0, Scheme::fritsch), 0);
  EXPECT_EQ(bench::steps_to_converge(Branch::lower, lambertw::constants::kBranchPointX, Scheme::halley), 0);
  EXPECT_EQ(bench::solve(Branch::principal, 0.0, Scheme::halley), 0.0);
}

TEST(Bench, SweepPathsAgree) {
  const auto t = bench::time_sweep(Branch::lower, lambertw::Stage::one_fritsch,
                                   {GridKind::log, -0.3, -1e-6, 300});
  EXPECT_TRUE(t.identical);
  EXPECT_GE(t.threads, 1);
}

}  // namespace
