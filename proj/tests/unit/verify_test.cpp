#include <fekete/errors.hpp>
#include <fekete/verify.hpp>
#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"

namespace fekete {
namespace {

using testing::Gen;

const GridSpec kSmall = GridSpec::uniform(16);

TEST(Experiment, A2AtTheStarlikeCorner) {
  const auto r = run_experiment(FunctionalDescriptor::a2(), {0, 0, 1}, kSmall);
  EXPECT_DOUBLE_EQ(r.as_stated, 1);
  EXPECT_NEAR(r.oracle, 1, 1e-9);
  EXPECT_GE(r.empirical_sup, 0.999);
  EXPECT_LE(r.empirical_sup, 1 + 1e-9);
  EXPECT_TRUE(r.discrepancies.empty());
  EXPECT_EQ(r.experiment_id, "a2@vartheta=0,kappa=0,varkappa=1");
}

TEST(Experiment, A2WithBothParametersOne) {
  const auto r = run_experiment(FunctionalDescriptor::a2(), {1, 1, 1}, kSmall);
  EXPECT_DOUBLE_EQ(r.as_stated, 0.25);
  EXPECT_NEAR(r.oracle, 0.25, 1e-9);
  EXPECT_GE(r.empirical_sup, 0.249);
  EXPECT_TRUE(r.sound());
}

TEST(Experiment, FeketeSzegoCarriesPiecewiseVerdict) {
  const auto r = run_experiment(FunctionalDescriptor::fekete_szego(0.0), {0, 0, 1}, kSmall);
  ASSERT_TRUE(r.piecewise.has_value());
  EXPECT_EQ(r.piecewise->branch, Branch::AboveSigma2);
  EXPECT_TRUE(r.sound());
  EXPECT_FALSE(r.has("D6"));
  EXPECT_TRUE(r.has("D9"));
  const auto complex_mu = run_experiment(FunctionalDescriptor::fekete_szego({0.5, 0.5}), {0.2, 0.3, 2}, kSmall);
  EXPECT_FALSE(complex_mu.piecewise.has_value());
  EXPECT_TRUE(complex_mu.sound());
}

TEST(Experiment, DiscrepanciesOneThroughFour) {
  const ClassParams star{0, 0, 1};
  const auto a3 = run_experiment(FunctionalDescriptor::a3(), star, kSmall);
  ASSERT_TRUE(a3.has("D1"));
  EXPECT_DOUBLE_EQ(a3.discrepancies.front().stated, 1.25);
  EXPECT_DOUBLE_EQ(a3.discrepancies.front().reference, 1.0);
  EXPECT_TRUE(a3.has("D10"));

  const auto d2 = run_experiment(FunctionalDescriptor::inverse_d2(), star, kSmall);
  EXPECT_TRUE(d2.has("D2"));
  EXPECT_TRUE(d2.has("D7"));  // the sampled |d2| reaches 1 > 1/2

  const auto g2 = run_experiment(FunctionalDescriptor::log_gamma2(), star, kSmall);
  EXPECT_TRUE(g2.has("D3"));

  const auto conv = run_experiment(FunctionalDescriptor::conv_fs(0.0, {1, 1}, "unit"), star, kSmall);
  ASSERT_TRUE(conv.has("D4"));
  for (const auto& d : conv.discrepancies) {
    if (d.id == "D4") {
      EXPECT_DOUBLE_EQ(d.stated, 6);
      EXPECT_DOUBLE_EQ(d.reference, 1);
    }
  }

  const auto inv = run_experiment(FunctionalDescriptor::inverse_fs(0.0), star, kSmall);
  EXPECT_TRUE(inv.has("D11"));
}

TEST(Experiment, DiscrepancyOneOnlyAtPresets) {
  const auto r = run_experiment(FunctionalDescriptor::a3(), {0.3, 0.3, 1}, kSmall);
  EXPECT_FALSE(r.has("D1"));
  EXPECT_FALSE(match_preset({0.3, 0.3, 1}).has_value());
  EXPECT_EQ(match_preset({1, 0, 5}), ClassPreset::RClass);
}

TEST(Experiment, LemmaFunctionalsUseTheLemmaBounds) {
  const auto l1 = run_experiment(FunctionalDescriptor::lemma1(2.0), {}, kSmall);
  EXPECT_DOUBLE_EQ(l1.as_stated, 6);
  EXPECT_DOUBLE_EQ(l1.oracle, 6);
  EXPECT_NEAR(l1.empirical_sup, 6, 1e-9);
  const auto l4 = run_experiment(FunctionalDescriptor::lemma4({3, 0}), {}, kSmall);
  EXPECT_DOUBLE_EQ(l4.as_stated, 4);
  EXPECT_TRUE(l4.sound());
  EXPECT_THROW((void)run_experiment(FunctionalDescriptor::lemma1(0) = {FunctionalKind::Lemma1, {0, 1}}, {}, kSmall),
               Error);
}

// The master property: no sampled supremum beats the lemma-derived oracle.
TEST(Soundness, RandomParametersAndFunctionals) {
  Gen g(99);
  const GridSpec grid = GridSpec::uniform(10);
  for (int trial = 0; trial < 40; ++trial) {
    const ClassParams p{g.uniform(0, 2), g.uniform(0, 2), g.uniform(0, 4)};
    const Complex arg(g.uniform(-3, 3), g.integer(0, 1) ? g.uniform(-1, 1) : 0.0);
    std::vector<FunctionalDescriptor> fs = {
        FunctionalDescriptor::a2(),          FunctionalDescriptor::a3(),
        FunctionalDescriptor::fekete_szego(arg), FunctionalDescriptor::inverse_fs(arg),
        FunctionalDescriptor::log_gamma2(),
        FunctionalDescriptor::conv_fs(arg, {g.uniform(0.1, 1), g.uniform(0.1, 1)}, "random")};
    for (const auto& f : fs) {
      const auto r = run_experiment(f, p, grid);
      EXPECT_TRUE(r.sound()) << r.experiment_id << " sup " << r.empirical_sup << " oracle " << r.oracle;
      EXPECT_GE(r.gap(), -1e-9);
    }
  }
}

TEST(Sweep, OrderedByParametersWithNoA2Discrepancies) {
  std::vector<ClassParams> params;
  for (double th : {1.0, 0.0, 0.5}) {
    for (double k : {0.5, 1.0, 0.0}) params.push_back({th, k, 1});
  }
  const auto result = sweep(params, {FunctionalDescriptor::a2()}, GridSpec::uniform(8));
  ASSERT_EQ(result.reports.size(), 9u);
  EXPECT_TRUE(result.summary.discrepancy_counts.empty());
  EXPECT_EQ(result.summary.soundness_violations, 0u);
  for (std::size_t i = 1; i < result.reports.size(); ++i) {
    const auto& a = result.reports[i - 1].params;
    const auto& b = result.reports[i].params;
    EXPECT_LT(std::tie(a.vartheta, a.kappa), std::tie(b.vartheta, b.kappa));
  }
}

TEST(Sweep, EmptyInputs) {
  try {
    (void)sweep({ClassParams{}}, {}, kSmall);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySweep);
  }
  EXPECT_THROW((void)sweep({}, {FunctionalDescriptor::a2()}, kSmall), Error);
}

TEST(Suites, RemarksFlagTheRemarkMismatch) {
  const auto result = run_suite(Suite::Remarks, GridSpec::uniform(8));
  EXPECT_EQ(result.reports.size(), 35u);
  bool starlike_d1 = false;
  for (const auto& r : result.reports) {
    if (r.functional.kind == FunctionalKind::A3 && r.params.vartheta == 0 && r.params.kappa == 0) {
      starlike_d1 = r.has("D1");
    }
  }
  EXPECT_TRUE(starlike_d1);
  EXPECT_EQ(result.summary.soundness_violations, 0u);
  EXPECT_EQ(parse_suite("full"), Suite::Full);
  EXPECT_THROW((void)parse_suite("everything"), Error);
}

TEST(Reports, JsonIsDeterministicAndParses) {
  const auto first = run_suite(Suite::Lemmas, GridSpec::uniform(6));
  const auto second = run_suite(Suite::Lemmas, GridSpec::uniform(6));
  ASSERT_EQ(first.reports.size(), second.reports.size());
  for (std::size_t i = 0; i < first.reports.size(); ++i) {
    const std::string line = to_json_line(first.reports[i]);
    EXPECT_EQ(line, to_json_line(second.reports[i]));
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["experimentId"], first.reports[i].experiment_id);
    EXPECT_TRUE(j["sound"].get<bool>());
    EXPECT_EQ(nlohmann::json::parse(j.dump()), j);
  }
  const auto summary = nlohmann::json::parse(summary_json_line(first.summary));
  EXPECT_EQ(summary["summary"]["reports"], first.reports.size());
}

TEST(Reports, NumberFormatting) {
  EXPECT_EQ(round_significant(-0.0, 12), 0.0);
  EXPECT_FALSE(std::signbit(round_significant(-1e-300 * 1e-300, 12)));
  EXPECT_EQ(format_number(1.0 / 3, 6), "0.333333");
  EXPECT_EQ(format_number(-0.0, 12), "0");
  EXPECT_DOUBLE_EQ(round_significant(0.1234567890123456, 12), 0.123456789012);
  EXPECT_EQ(FunctionalDescriptor::fekete_szego({0.5, -1}).label(), "fs(mu=0.5-1i)");
  EXPECT_EQ(FunctionalDescriptor::inverse_fs(2.0).label(), "inverse-fs(hbar=2)");
}

}  // namespace
}  // namespace fekete
