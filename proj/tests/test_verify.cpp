#include <gtest/gtest.h>

#include "delone/verify.hpp"

using namespace delone;

namespace {

void expect_same(const verify::SuiteReport& a, const verify::SuiteReport& b) {
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_EQ(a.failed_cases, b.failed_cases);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        EXPECT_EQ(a.checks[i].name, b.checks[i].name);
        EXPECT_EQ(a.checks[i].passed, b.checks[i].passed);
        EXPECT_EQ(a.checks[i].total, b.checks[i].total);
    }
}

}  // namespace

class SuitePasses : public ::testing::TestWithParam<std::string> {};

TEST_P(SuitePasses, AtModerateCaseCount) {
    const auto r = verify::run_suite(GetParam(), 30, 7, 2);
    EXPECT_TRUE(r.passed()) << r.first_failure;
    EXPECT_EQ(r.failed_cases, 0U);
    EXPECT_FALSE(r.checks.empty());
    for (const auto& t : r.checks) EXPECT_EQ(t.passed, t.total) << t.name;
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SuitePasses, ::testing::ValuesIn(verify::suite_names()),
                         [](const ::testing::TestParamInfo<std::string>& info) {
                             std::string s;
                             for (char c : info.param) s.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
                             return s;
                         });

TEST(Verify, SameSeedSameReport) {
    for (const auto& name : {"boundaries", "sum-identity", "density-formula"}) {
        expect_same(verify::run_suite(name, 20, 11, 1), verify::run_suite(name, 20, 11, 1));
        // the thread count does not change which cases run or how they come out
        expect_same(verify::run_suite(name, 20, 11, 1), verify::run_suite(name, 20, 11, 3));
    }
}

TEST(Verify, BoundariesSuiteCoversBothDiscreteGroupsAndTheReals) {
    const auto r = verify::boundaries(100, 3, 2);
    EXPECT_EQ(r.cases, 210U);
    EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(Verify, UnknownSuiteIsRejected) {
    EXPECT_THROW(verify::run_suite("no-such-suite", 1, 1, 1), Error);
}
