#include <gtest/gtest.h>

#include <string>

#include "entrobound/verify.hpp"

using namespace entrobound;

class Suite : public ::testing::TestWithParam<std::string_view> {};

TEST_P(Suite, AllChecksPass) {
    const auto r = verify::run_suite(GetParam());
    ASSERT_TRUE(r.has_value());
    EXPECT_FALSE(r->checks.empty());
    for (const auto& c : r->checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    EXPECT_TRUE(r->passed());
}

INSTANTIATE_TEST_SUITE_P(Verify, Suite, ::testing::ValuesIn(verify::kSuites), [](const auto& info) {
    std::string n(info.param);
    for (auto& ch : n)
        if (ch == '-') ch = '_';
    return n;
});

TEST(Verify, UnknownSuite) { EXPECT_FALSE(verify::run_suite("nope").has_value()); }

TEST(Verify, JsonShape) {
    verify::SuiteResult r{"x", {{"a", true, "ok"}, {"b", false, "bad"}}};
    const auto j = verify::to_json(r);
    EXPECT_EQ(j.at("suite"), "x");
    EXPECT_FALSE(j.at("passed").get<bool>());
    EXPECT_EQ(j.at("checks").size(), 2u);
}
