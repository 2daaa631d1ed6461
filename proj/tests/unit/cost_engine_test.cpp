#include <gtest/gtest.h>

#include "tco/cost_engine.hpp"
#include "tco/errors.hpp"
#include "test_util.hpp"

using namespace tco;
using test::deployment;
using test::offering;

namespace {

const WorkloadProfile kPaper = paper_workload();

Tokens tokens(std::int64_t n) { return Tokens::from_units(n); }

}  // namespace

TEST(Workload, Defaults) {
  EXPECT_EQ(operating_hours(kPaper), Decimal::from_units(176));
  EXPECT_EQ(kPaper.output_share, Fraction(2, 3));
  EXPECT_EQ(kPaper.electricity_rate, Money::parse("0.15"));
  EXPECT_FALSE(kPaper.demand);
}

TEST(Workload, ValidationNamesTheField) {
  auto field_of = [](WorkloadProfile w) {
    try {
      validate_workload(w);
    } catch (const DomainError& e) {
      return e.field();
    }
    return std::string("ok");
  };
  WorkloadProfile w = kPaper;
  w.hours_per_day = Decimal{};
  EXPECT_EQ(field_of(w), "hours_per_day");
  w = kPaper;
  w.hours_per_day = Decimal::parse("24.5");
  EXPECT_EQ(field_of(w), "hours_per_day");
  w = kPaper;
  w.days_per_month = Decimal::from_units(32);
  EXPECT_EQ(field_of(w), "days_per_month");
  w = kPaper;
  w.electricity_rate = Money::parse("-0.01");
  EXPECT_EQ(field_of(w), "electricity_rate");
  w = kPaper;
  w.output_share = Fraction(4, 3);
  EXPECT_EQ(field_of(w), "output_share");
  w = kPaper;
  w.demand = Tokens::from_units(-1);
  EXPECT_EQ(field_of(w), "demand");
  w = kPaper;
  w.hours_per_day = Decimal::from_units(24);
  w.days_per_month = Decimal::from_units(31);
  w.output_share = Fraction(0, 1);
  EXPECT_EQ(field_of(w), "ok");
}

TEST(HardwareCost, KimiK2) {
  EXPECT_EQ(hardware_cost(deployment("kimi-k2")).str(2), "240000.00");
}

TEST(HardwareCost, Exaone) {
  EXPECT_EQ(hardware_cost(deployment("exaone-32b")).str(2), "2000.00");
}

TEST(HardwareCost, ZeroPriceSku) {
  DeploymentSpec d = deployment("kimi-k2");
  d.gpu.unit_price = Money{};
  EXPECT_EQ(hardware_cost(d).str(2), "0.00");
}

TEST(Electricity, KimiK2) {
  EXPECT_EQ(electricity_monthly(deployment("kimi-k2"), kPaper).str(2), "126.72");
}

TEST(Electricity, Qwen30) {
  EXPECT_EQ(electricity_monthly(deployment("qwen3-30b"), kPaper).str(2), "13.20");
}

TEST(Electricity, ZeroRate) {
  WorkloadProfile w = kPaper;
  w.electricity_rate = Money{};
  EXPECT_TRUE(electricity_monthly(deployment("glm-4.5"), w).is_zero());
}

TEST(Electricity, UsesAccountingNotRatedPower) {
  DeploymentSpec d = deployment("qwen3-30b");
  d.gpu.rated_power = Decimal::from_units(9999);
  EXPECT_EQ(electricity_monthly(d, kPaper).str(2), "13.20");
  d.gpu.accounting_power = Decimal::from_units(575);
  EXPECT_EQ(electricity_monthly(d, kPaper).str(2), "15.18");
}

TEST(LocalCumulative, Examples) {
  const auto& q = deployment("qwen3-30b");
  EXPECT_EQ(local_cumulative_cost(q, kPaper, Months{}).str(2), "2000.00");
  EXPECT_EQ(local_cumulative_cost(q, kPaper, Months::from_units(10)).str(2), "2132.00");
  EXPECT_EQ(local_cumulative_cost(deployment("kimi-k2"), kPaper, Months::from_units(12)).str(2),
            "241520.64");
  EXPECT_THROW(local_cumulative_cost(q, kPaper, Months::parse("-0.1")), DomainError);
}

TEST(Capacity, Examples) {
  EXPECT_EQ(monthly_capacity(deployment("qwen3-30b"), kPaper), tokens(114'048'000));
  EXPECT_EQ(monthly_capacity(deployment("kimi-k2"), kPaper), tokens(506'880'000));
  DeploymentSpec d = deployment("qwen3-30b");
  d.throughput = Decimal{};
  EXPECT_TRUE(monthly_capacity(d, kPaper).is_zero());
}

TEST(Capacity, DoublesWithThroughputOrHours) {
  DeploymentSpec d = deployment("magistral-small");
  const Tokens base = monthly_capacity(d, kPaper);
  WorkloadProfile w = kPaper;
  w.hours_per_day = Decimal::from_units(16);
  EXPECT_EQ(monthly_capacity(d, w), base * 2);
  d.throughput = d.throughput * 2;
  EXPECT_EQ(monthly_capacity(d, kPaper), base * 2);
}

TEST(ApiMonthly, Gpt5) {
  EXPECT_EQ(api_monthly_cost(offering("gpt-5"), tokens(114'048'000), Fraction(2, 3)).str(2),
            "807.84");
}

TEST(ApiMonthly, Opus) {
  EXPECT_EQ(
      api_monthly_cost(offering("claude-4-opus"), tokens(126'720'000), Fraction(2, 3)).str(2),
      "6969.60");
}

TEST(ApiMonthly, ZeroTokens) {
  EXPECT_TRUE(api_monthly_cost(offering("grok-4"), Tokens{}, Fraction(2, 3)).is_zero());
}

TEST(ApiMonthly, AllInputShare) {
  EXPECT_EQ(api_monthly_cost(offering("gpt-5"), tokens(114'048'000), Fraction(0, 1)).str(2),
            "142.56");
  EXPECT_EQ(api_monthly_cost(offering("gpt-5"), tokens(114'048'000), Fraction(1, 1)).str(2),
            "1140.48");
}

TEST(ApiMonthly, UsesAccountingOutputPrice) {
  // 506.88M tokens: 168.96M in at 1.25 plus 337.92M out at 11.00.
  EXPECT_EQ(
      api_monthly_cost(offering("gemini-2.5-pro"), tokens(506'880'000), Fraction(2, 3)).str(2),
      "3928.32");
}

TEST(ApiCumulative, Examples) {
  const Tokens q = tokens(114'048'000);
  EXPECT_TRUE(api_cumulative_cost(offering("gpt-5"), q, Fraction(2, 3), Months{}).is_zero());
  EXPECT_EQ(api_cumulative_cost(offering("gpt-5"), q, Fraction(2, 3), Months::from_units(2)).str(2),
            "1615.68");
  EXPECT_EQ(api_cumulative_cost(offering("claude-4-opus"), tokens(126'720'000), Fraction(2, 3),
                                Months::parse("0.5"))
                .str(2),
            "3484.80");
  EXPECT_THROW(api_cumulative_cost(offering("gpt-5"), q, Fraction(2, 3), Months::parse("-1")),
               DomainError);
}

TEST(Replicas, Ceiling) {
  const auto& d = deployment("qwen3-30b");
  const Tokens cap = monthly_capacity(d, kPaper);
  EXPECT_EQ(required_replicas(d, kPaper, cap), 1);
  EXPECT_EQ(required_replicas(d, kPaper, Tokens::from_micro(cap.micro() * 21 / 10)), 3);
  EXPECT_EQ(required_replicas(d, kPaper, Tokens{}), 0);
  EXPECT_EQ(required_replicas(d, kPaper, cap + Tokens::from_micro(1)), 2);
  EXPECT_EQ(required_replicas(d, kPaper, Tokens::from_units(1)), 1);
}

TEST(Replicas, ZeroCapacityWithDemandThrows) {
  DeploymentSpec d = deployment("qwen3-30b");
  d.throughput = Decimal{};
  EXPECT_THROW(required_replicas(d, kPaper, Tokens::from_units(1)), DomainError);
  EXPECT_EQ(required_replicas(d, kPaper, Tokens{}), 0);
  EXPECT_THROW(required_replicas(deployment("qwen3-30b"), kPaper, Tokens::from_units(-1)),
               DomainError);
}
