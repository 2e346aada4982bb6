#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace
{

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "laft");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = laft::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, TransformWorkedExample)
{
    const auto r = run({"transform", "--kind", "0-inf", "--f", "-4*z^-1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "-2*zetahat^(-1/2) + 1/4\n");
}

TEST(Cli, TransformSlopeViolation)
{
    const auto r = run({"transform", "--kind", "inf-0", "--f", "zeta^(-3/2)"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("SlopeViolation"), std::string::npos);
}

TEST(Cli, TransformJordanAndJson)
{
    const auto r = run({"transform", "--kind", "0-inf", "--f", "-4*z^-1", "--jordan", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-2*zetahat^(-1/2) + 1/4  jordan 3\n");
    const auto j = run({"transform", "--kind", "0-inf", "--f", "-4*z^-1", "--json"});
    EXPECT_EQ(j.code, 0);
    EXPECT_NE(j.out.find("\"ramification\":2"), std::string::npos);
    EXPECT_NE(j.out.find("\"slope\":\"1/2\""), std::string::npos);
}

TEST(Cli, RootUnavailableSuggestsComplex)
{
    const auto r = run({"transform", "--kind", "0-inf", "--f", "4*z^-1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("RootUnavailable"), std::string::npos);
    EXPECT_NE(r.err.find("--backend complex"), std::string::npos);
    const auto c = run({"transform", "--kind", "0-inf", "--f", "4*z^-1", "--backend", "complex", "--prec", "128"});
    EXPECT_EQ(c.code, 0) << c.err;
    EXPECT_NE(c.out.find("zetahat^(-1/2)"), std::string::npos);
}

TEST(Cli, SyntaxErrorExitsOne)
{
    const auto r = run({"transform", "--kind", "0-inf", "--f", "z^^2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("SyntaxError"), std::string::npos);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"transform", "--kind", "sideways", "--f", "z"}).code, 1);
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, NormalizeAndInvert)
{
    const auto n = run({"normalize", "--f", "7/3", "--q", "2"});
    EXPECT_EQ(n.code, 0);
    EXPECT_EQ(n.out, "1/3\n");
    const auto i = run({"invert", "--f", "z - z^2", "--order", "4"});
    EXPECT_EQ(i.code, 0);
    EXPECT_EQ(i.out, "z + z^2 + 2*z^3 + 5*z^4 + O(z^5)\n");
}

TEST(Cli, VerifyLagrange)
{
    const auto r = run({"verify", "--suite", "lagrange", "--trials", "50", "--seed", "7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("lagrange: 50/50\n", 0), 0U) << r.out;
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args{"verify", "--suite", "roundtrip", "--trials", "5", "--seed", "3"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> t{"transform", "--kind", "inf-inf", "--f", "zeta^(-3/2)", "--backend", "complex"};
    EXPECT_EQ(run(t).out, run(t).out);
}
