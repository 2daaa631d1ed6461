#include <gtest/gtest.h>

#include "tco/breakeven.hpp"
#include "tco/errors.hpp"
#include "test_util.hpp"

using namespace tco;
using test::deployment;
using test::offering;

namespace {

const WorkloadProfile kPaper = paper_workload();

BreakEvenResult solve(const std::string& model, const std::string& api,
                      const WorkloadProfile& w = kPaper) {
  return solve_break_even(deployment(model), offering(api), w);
}

DeploymentSpec free_hardware(const std::string& model) {
  DeploymentSpec d = deployment(model);
  d.gpu.unit_price = Money{};
  return d;
}

}  // namespace

TEST(SolveBreakEven, Qwen30VsGpt5) {
  const auto r = solve("qwen3-30b", "gpt-5");
  EXPECT_EQ(r.status, BreakEvenStatus::BreaksEven);
  ASSERT_TRUE(r.t_star);
  EXPECT_NEAR(*r.t_star, 2000.0 / 794.64, 1e-12);
  EXPECT_EQ(r.tier, DecisionTier::Rapid);
  EXPECT_EQ(r.monthly_api_cost.str(2), "807.84");
  EXPECT_EQ(r.monthly_electricity.str(2), "13.20");
  EXPECT_EQ(r.hardware.str(2), "2000.00");
  EXPECT_EQ(r.replicas, 1);
  EXPECT_FALSE(r.degenerate);
}

TEST(SolveBreakEven, KimiVsGpt5) {
  const auto r = solve("kimi-k2", "gpt-5");
  EXPECT_EQ(r.monthly_api_cost.str(2), "3590.40");
  EXPECT_NEAR(*r.t_star, 240000.0 / (3590.40 - 126.72), 1e-10);
  EXPECT_EQ(r.tier, DecisionTier::Challenging);
}

TEST(SolveBreakEven, ExaoneVsOpus) {
  const auto r = solve("exaone-32b", "claude-4-opus");
  EXPECT_NEAR(*r.t_star, 2000.0 / 6956.40, 1e-12);
  EXPECT_EQ(r.tier, DecisionTier::Rapid);
}

TEST(SolveBreakEven, KimiVsGeminiUsesAccountingPrice) {
  const auto r = solve("kimi-k2", "gemini-2.5-pro");
  EXPECT_NEAR(*r.t_star, 240000.0 / (3928.32 - 126.72), 1e-10);
}

TEST(SolveBreakEven, ZeroHardwareWithMarginIsImmediate) {
  const auto r = solve_break_even(free_hardware("qwen3-30b"), offering("gpt-5"), kPaper);
  EXPECT_EQ(r.status, BreakEvenStatus::Immediate);
  EXPECT_EQ(r.t_star, 0.0);
  EXPECT_EQ(r.tier, DecisionTier::Rapid);
  EXPECT_FALSE(r.degenerate);
}

TEST(SolveBreakEven, NoMarginNeverBreaksEven) {
  ApiOffering cheap = offering("gpt-5");
  cheap.input_price = Money{};
  cheap.output_price = cheap.accounting_output_price = Money{};
  const auto r = solve_break_even(deployment("qwen3-30b"), cheap, kPaper);
  EXPECT_EQ(r.status, BreakEvenStatus::Never);
  EXPECT_FALSE(r.t_star);
  EXPECT_FALSE(r.tier);
  EXPECT_FALSE(r.degenerate);
}

TEST(SolveBreakEven, ZeroHardwareAndNoMarginIsDegenerate) {
  ApiOffering cheap = offering("gpt-5");
  cheap.input_price = Money{};
  cheap.output_price = cheap.accounting_output_price = Money{};
  const auto r = solve_break_even(free_hardware("qwen3-30b"), cheap, kPaper);
  EXPECT_EQ(r.status, BreakEvenStatus::Never);
  EXPECT_TRUE(r.degenerate);
}

TEST(SolveBreakEven, DemandScalesReplicas) {
  WorkloadProfile w = kPaper;
  w.demand = Tokens::from_units(1'000'000'000);
  const auto r = solve("kimi-k2", "gpt-5", w);
  EXPECT_EQ(r.replicas, 2);
  EXPECT_EQ(r.hardware.str(2), "480000.00");
  EXPECT_EQ(r.monthly_electricity.str(2), "253.44");
  EXPECT_EQ(r.capacity, Tokens::from_units(1'000'000'000));
  // 1e9 tokens: 1e9/3 in at 1.25 plus 2e9/3 out at 10.
  EXPECT_EQ(r.monthly_api_cost.str(2), "7083.33");
}

TEST(SolveBreakEven, ZeroDemandNeedsNoHardware) {
  WorkloadProfile w = kPaper;
  w.demand = Tokens{};
  const auto r = solve("qwen3-30b", "gpt-5", w);
  EXPECT_EQ(r.replicas, 0);
  EXPECT_TRUE(r.hardware.is_zero());
  EXPECT_TRUE(r.monthly_api_cost.is_zero());
  EXPECT_TRUE(r.monthly_electricity.is_zero());
  EXPECT_EQ(r.status, BreakEvenStatus::Never);
  EXPECT_TRUE(r.degenerate);
}

TEST(SolveBreakEven, InvalidWorkloadThrows) {
  WorkloadProfile w = kPaper;
  w.hours_per_day = Decimal{};
  EXPECT_THROW(solve("qwen3-30b", "gpt-5", w), DomainError);
}

TEST(SolveBreakEven, AttachesGap) {
  const auto r = solve("qwen3-235b", "gpt-5");
  ASSERT_TRUE(r.gap);
  EXPECT_EQ(r.gap->mean_str(2), "0.45");
}

TEST(ClassifyTier, Examples) {
  EXPECT_EQ(classify_tier(2.5), DecisionTier::Rapid);
  EXPECT_EQ(classify_tier(17.8), DecisionTier::Strategic);
  EXPECT_EQ(classify_tier(69.3), DecisionTier::Challenging);
}

TEST(ClassifyTier, Boundaries) {
  EXPECT_EQ(classify_tier(0.0), DecisionTier::Rapid);
  EXPECT_EQ(classify_tier(6.0), DecisionTier::Rapid);
  EXPECT_EQ(classify_tier(std::nextafter(6.0, 7.0)), DecisionTier::Strategic);
  EXPECT_EQ(classify_tier(24.0), DecisionTier::Strategic);
  EXPECT_EQ(classify_tier(std::nextafter(24.0, 25.0)), DecisionTier::Challenging);
  EXPECT_THROW(classify_tier(-0.1), DomainError);
}

TEST(Names, StatusAndTier) {
  EXPECT_EQ(status_name(BreakEvenStatus::BreaksEven), "breaks_even");
  EXPECT_EQ(status_name(BreakEvenStatus::Immediate), "immediate");
  EXPECT_EQ(status_name(BreakEvenStatus::Never), "never");
  EXPECT_EQ(tier_name(DecisionTier::Strategic), "strategic");
  EXPECT_EQ(tier_label(DecisionTier::Challenging), "Challenging");
}

TEST(PerformanceGap, Qwen235VsGpt5) {
  const auto g = performance_gap(deployment("qwen3-235b").scores, offering("gpt-5").scores);
  EXPECT_EQ(g.count, 4);
  EXPECT_EQ(g.per_benchmark.at(Benchmark::Gpqa), Decimal::parse("-6.4"));
  EXPECT_EQ(g.per_benchmark.at(Benchmark::Math500), Decimal::parse("-1.0"));
  EXPECT_EQ(g.per_benchmark.at(Benchmark::LiveCodeBench), Decimal::parse("12.0"));
  EXPECT_EQ(g.per_benchmark.at(Benchmark::MmluPro), Decimal::parse("-2.8"));
  EXPECT_EQ(g.delta_sum, Decimal::parse("1.8"));
  EXPECT_DOUBLE_EQ(g.mean_delta(), 0.45);
}

TEST(PerformanceGap, IdenticalScores) {
  const auto& s = offering("gpt-5").scores;
  const auto g = performance_gap(s, s);
  EXPECT_EQ(g.mean_delta(), 0.0);
  for (const auto& [b, d] : g.per_benchmark) EXPECT_TRUE(d.is_zero());
}

TEST(PerformanceGap, GptOssSkipsMissingBenchmark) {
  const auto g = performance_gap(deployment("gpt-oss-120b").scores, offering("gpt-5").scores);
  EXPECT_EQ(g.count, 3);
  EXPECT_EQ(g.per_benchmark.count(Benchmark::Math500), 0u);
  EXPECT_EQ(g.per_benchmark.at(Benchmark::Gpqa), Decimal::parse("-7.2"));
  EXPECT_EQ(g.per_benchmark.at(Benchmark::LiveCodeBench), Decimal::parse("-2.9"));
  EXPECT_EQ(g.per_benchmark.at(Benchmark::MmluPro), Decimal::parse("-6.3"));
  EXPECT_EQ(g.mean_str(2), "-5.47");
}

TEST(PerformanceGap, MeanRoundsHalfAwayFromZeroOnExactSum) {
  // Qwen3-30B vs Grok-4 sums to -35.7 over 4 benchmarks: -8.925.
  const auto g = performance_gap(deployment("qwen3-30b").scores, offering("grok-4").scores);
  EXPECT_EQ(g.mean_str(2), "-8.93");
  EXPECT_EQ(g.mean_str(3), "-8.925");
}

TEST(PerformanceGap, DisjointThrows) {
  BenchmarkScores a{{Benchmark::Gpqa, Decimal::from_units(50)}};
  BenchmarkScores b{{Benchmark::Math500, Decimal::from_units(50)}};
  EXPECT_THROW(performance_gap(a, b), DomainError);
  EXPECT_THROW(performance_gap({}, b), DomainError);
}

TEST(Matrix, ShapeAndOrder) {
  const auto m = break_even_matrix(builtin_paper_catalog(), kPaper);
  ASSERT_EQ(m.deployments.size(), 9u);
  ASSERT_EQ(m.offerings.size(), 5u);
  ASSERT_EQ(m.cells.size(), 45u);
  EXPECT_EQ(m.cell(8, 0).deployment_id, "magistral-small");
  EXPECT_EQ(m.cell(8, 4).offering_id, "gemini-2.5-pro");
  EXPECT_EQ(m.cell(2, 1), solve("qwen3-235b", "claude-4-opus"));
}

TEST(Matrix, GrokColumnEqualsSonnetColumn) {
  const auto m = break_even_matrix(builtin_paper_catalog(), kPaper);
  for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(m.cell(i, 2).t_star, m.cell(i, 3).t_star);
}

TEST(Matrix, RowRangeCoversFiniteCells) {
  const auto m = break_even_matrix(builtin_paper_catalog(), kPaper);
  ASSERT_TRUE(m.row_ranges[0]);
  EXPECT_EQ(m.row_ranges[0]->first, *m.cell(0, 1).t_star);
  EXPECT_EQ(m.row_ranges[0]->second, *m.cell(0, 0).t_star);
}

TEST(Matrix, SingleCell) {
  Catalog c;
  c.gpus = {deployment("qwen3-30b").gpu};
  c.deployments = {deployment("qwen3-30b")};
  c.offerings = {offering("gpt-5")};
  const auto m = break_even_matrix(c, kPaper);
  ASSERT_EQ(m.cells.size(), 1u);
  ASSERT_TRUE(m.row_ranges[0]);
  EXPECT_EQ(m.row_ranges[0]->first, m.row_ranges[0]->second);
  EXPECT_EQ(m.row_ranges[0]->first, *m.cells[0].t_star);
}

TEST(Matrix, NeverRowHasNoRange) {
  Catalog c;
  c.gpus = {deployment("qwen3-30b").gpu};
  c.deployments = {deployment("qwen3-30b")};
  ApiOffering free = offering("gpt-5");
  free.input_price = Money{};
  free.output_price = free.accounting_output_price = Money{};
  c.offerings = {free};
  const auto m = break_even_matrix(c, kPaper);
  EXPECT_EQ(m.cells[0].status, BreakEvenStatus::Never);
  EXPECT_FALSE(m.row_ranges[0]);
}

TEST(Curves, Qwen30VsGpt5) {
  const auto s = cost_curves(deployment("qwen3-30b"), offering("gpt-5"), kPaper,
                             Months::from_units(12), Months::from_units(1));
  ASSERT_EQ(s.points.size(), 13u);
  EXPECT_EQ(s.points[0].local_cost.str(2), "2000.00");
  EXPECT_TRUE(s.points[0].api_cost.is_zero());
  EXPECT_EQ(s.points[3].t, Months::from_units(3));
  EXPECT_EQ(s.points[3].local_cost.str(2), "2039.60");
  EXPECT_EQ(s.points[3].api_cost.str(2), "2423.52");
  ASSERT_TRUE(s.break_even_marker);
  EXPECT_NEAR(*s.break_even_marker, 2.516863, 1e-6);
}

TEST(Curves, StepEqualsHorizon) {
  const auto s = cost_curves(deployment("qwen3-30b"), offering("gpt-5"), kPaper,
                             Months::from_units(12), Months::from_units(12));
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_EQ(s.points[1].t, Months::from_units(12));
}

TEST(Curves, HorizonIsAlwaysLastSample) {
  const auto s = cost_curves(deployment("qwen3-30b"), offering("gpt-5"), kPaper,
                             Months::from_units(10), Months::from_units(3));
  ASSERT_EQ(s.points.size(), 5u);
  EXPECT_EQ(s.points[3].t, Months::from_units(9));
  EXPECT_EQ(s.points[4].t, Months::from_units(10));
}

TEST(Curves, MarkerOnlyInsideHorizon) {
  const auto inside = cost_curves(deployment("kimi-k2"), offering("claude-4-opus"), kPaper,
                                  Months::from_units(12), Months::from_units(1));
  ASSERT_TRUE(inside.break_even_marker);
  EXPECT_NEAR(*inside.break_even_marker, 8.6481, 1e-4);
  const auto outside = cost_curves(deployment("kimi-k2"), offering("gpt-5"), kPaper,
                                   Months::from_units(12), Months::from_units(1));
  EXPECT_FALSE(outside.break_even_marker);
}

TEST(Curves, RejectsBadSampling) {
  const auto& d = deployment("qwen3-30b");
  const auto& o = offering("gpt-5");
  EXPECT_THROW(cost_curves(d, o, kPaper, Months{}, Months::from_units(1)), DomainError);
  EXPECT_THROW(cost_curves(d, o, kPaper, Months::from_units(12), Months{}), DomainError);
  EXPECT_THROW(cost_curves(d, o, kPaper, Months::from_units(12), Months::from_units(13)),
               DomainError);
  EXPECT_THROW(cost_curves(d, o, kPaper, Months::from_units(12), Months::from_units(-1)),
               DomainError);
}

TEST(Sweep, SingletonGridIsBaseline) {
  const auto pts = sweep(deployment("qwen3-30b"), offering("gpt-5"), kPaper,
                         SweepParameter::ElectricityRate, {Fraction::parse("0.15")});
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].result, solve("qwen3-30b", "gpt-5"));
}

TEST(Sweep, GpuPriceIsMonotone) {
  const auto pts = sweep(deployment("qwen3-30b"), offering("gpt-5"), kPaper,
                         SweepParameter::GpuUnitPrice,
                         {Fraction(1000, 1), Fraction(2000, 1), Fraction(4000, 1)});
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_NEAR(*pts[0].result.t_star, 1000 / 794.64, 1e-12);
  EXPECT_NEAR(*pts[1].result.t_star, 2000 / 794.64, 1e-12);
  EXPECT_NEAR(*pts[2].result.t_star, 4000 / 794.64, 1e-12);
  EXPECT_LT(*pts[0].result.t_star, *pts[1].result.t_star);
  EXPECT_LT(*pts[1].result.t_star, *pts[2].result.t_star);
}

TEST(Sweep, OutputShare) {
  const auto pts = sweep(deployment("qwen3-30b"), offering("gpt-5"), kPaper,
                         SweepParameter::OutputShare, {Fraction(0, 1), Fraction(2, 3)});
  EXPECT_EQ(pts[0].result.monthly_api_cost.str(2), "142.56");
  EXPECT_EQ(pts[1].result.monthly_api_cost.str(2), "807.84");
  EXPECT_EQ(pts[1].value, Fraction(2, 3));
}

TEST(Sweep, OtherParameters) {
  const auto& d = deployment("qwen3-30b");
  const auto& o = offering("gpt-5");
  auto one = [&](SweepParameter p, Fraction v) { return sweep(d, o, kPaper, p, {v})[0].result; };
  EXPECT_EQ(one(SweepParameter::HoursPerDay, Fraction(16, 1)).monthly_electricity.str(2), "26.40");
  EXPECT_EQ(one(SweepParameter::DaysPerMonth, Fraction(11, 1)).monthly_electricity.str(2), "6.60");
  EXPECT_EQ(one(SweepParameter::InputPrice, Fraction(0, 1)).monthly_api_cost.str(2), "760.32");
  EXPECT_EQ(one(SweepParameter::OutputPrice, Fraction(0, 1)).monthly_api_cost.str(2), "47.52");
  EXPECT_EQ(one(SweepParameter::Throughput, Fraction(360, 1)).capacity,
            Tokens::from_units(228'096'000));
}

TEST(Sweep, OutputPriceMovesAccountingPrice) {
  const auto r = sweep(deployment("kimi-k2"), offering("gemini-2.5-pro"), kPaper,
                       SweepParameter::OutputPrice, {Fraction(10, 1)})[0]
                     .result;
  EXPECT_EQ(r.monthly_api_cost, solve("kimi-k2", "gpt-5").monthly_api_cost);
}

TEST(Sweep, RejectsOutOfDomainValues) {
  const auto& d = deployment("qwen3-30b");
  const auto& o = offering("gpt-5");
  EXPECT_THROW(sweep(d, o, kPaper, SweepParameter::OutputShare, {}), DomainError);
  EXPECT_THROW(sweep(d, o, kPaper, SweepParameter::OutputShare, {Fraction(3, 2)}), DomainError);
  EXPECT_THROW(sweep(d, o, kPaper, SweepParameter::HoursPerDay, {Fraction(25, 1)}), DomainError);
  EXPECT_THROW(sweep(d, o, kPaper, SweepParameter::ElectricityRate, {Fraction(-1, 100)}),
               DomainError);
  EXPECT_THROW(sweep(d, o, kPaper, SweepParameter::Throughput, {Fraction(0, 1)}), DomainError);
  try {
    sweep(d, o, kPaper, SweepParameter::GpuUnitPrice, {Fraction(1, 1), Fraction(-5, 1)});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("-5"), std::string::npos) << e.what();
  }
}

TEST(Sweep, ParameterNames) {
  for (int i = 0; i <= static_cast<int>(SweepParameter::Throughput); ++i) {
    const auto p = static_cast<SweepParameter>(i);
    EXPECT_EQ(sweep_parameter_from_name(sweep_parameter_name(p)), p);
  }
  EXPECT_FALSE(sweep_parameter_from_name("latency"));
}
