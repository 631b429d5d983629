#include <gtest/gtest.h>

#include "properties.hpp"

using namespace hopf32;

namespace {

const std::vector<ClassificationRun>& runs() {
  static const std::vector<ClassificationRun> r = [] {
    auto all = run_all();
    auto golden = load_golden();
    for (auto& x : all) attach_labels(x, golden);
    return all;
  }();
  return r;
}

std::string joined(const properties::Failures& f) {
  std::string out;
  for (std::size_t k = 0; k < f.size() && k < 20; ++k) out += f[k] + "\n";
  return out;
}

}  // namespace

TEST(Properties, RunsCoverTheCatalogue) {
  EXPECT_EQ(runs().size(), catalogue_ids().size());
  for (const auto& r : runs()) EXPECT_TRUE(r.errors.empty()) << r.group;
}

TEST(Properties, BraidEquationAndCompatibility) {
  auto f = properties::braid_and_compatibility(runs());
  EXPECT_TRUE(f.empty()) << joined(f);
}

TEST(Properties, PalindromicHilbertSeries) {
  auto f = properties::palindromic(runs());
  EXPECT_TRUE(f.empty()) << joined(f);
}

TEST(Properties, GrowthMatchesSymmetrizer) {
  auto f = properties::growth_matches_symmetrizer(runs());
  EXPECT_TRUE(f.empty()) << joined(f);
}

TEST(Properties, DerivationZeroTest) {
  int samples = 0;
  auto f = properties::derivation_zero_test(runs(), samples);
  EXPECT_GE(samples, 100);
  EXPECT_TRUE(f.empty()) << joined(f);
}

TEST(Properties, QuantumLinearSpaceFormula) {
  auto f = properties::qls_agreement(runs());
  EXPECT_TRUE(f.empty()) << joined(f);
}

TEST(Properties, BosonizationIsConsistent) {
  auto f = properties::zero_lambda(runs());
  EXPECT_TRUE(f.empty()) << joined(f);
}

TEST(Properties, DiamondContainsCharacterConstraints) {
  auto f = properties::diamond_contains_chi(runs());
  EXPECT_TRUE(f.empty()) << joined(f);
}

TEST(Properties, TotalsAreSumsOfFamilies) {
  for (const auto& r : runs()) {
    if (r.group_algebra) {
      EXPECT_EQ(r.total(), 1);
      continue;
    }
    long sum = 0;
    bool infinite = false;
    for (const auto& l : r.liftings) {
      ASSERT_TRUE(l.family.has_value()) << r.group << " " << l.error;
      if (l.family->infinite()) {
        infinite = true;
      } else {
        sum += *l.family->count;
      }
    }
    if (infinite) {
      EXPECT_FALSE(r.total().has_value()) << r.group;
    } else {
      EXPECT_EQ(r.total(), sum) << r.group;
    }
  }
}

TEST(Properties, ListedModulesFitTheBudget) {
  for (const auto& r : runs()) {
    for (const auto& t : r.tables) {
      if (t.key.find("realized") == std::string::npos) continue;
      for (int m : t.rows) {
        auto d = r.modules[m].nichols.dimension();
        ASSERT_TRUE(d.has_value());
        EXPECT_LE(*d * r.order, 32) << properties::where(r, m);
      }
    }
    for (const auto& l : r.liftings) {
      auto d = r.modules[l.module].nichols.dimension();
      ASSERT_TRUE(d.has_value());
      EXPECT_EQ(*d * r.order, 32) << properties::where(r, l.module);
    }
  }
}
