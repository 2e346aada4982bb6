#include <laft/connection.hpp>

#include "test_support.hpp"
#include "verify.hpp"

using namespace laft;
using laft::test::rs;

namespace
{

CanonicalClass<RationalField> cls(std::string_view text, unsigned long qv, Var v = Var::zeta)
{
    return normalize(rs(text, v), qv);
}

} // namespace

TEST(ConnectionObject, Construction)
{
    const ConnectionObject<RationalField> e({{cls("zeta^(-1/2)", 2), 3}});
    EXPECT_EQ(e.size(), 1U);
    EXPECT_EQ(e.var(), Var::zeta);
    EXPECT_EQ(e.summands().front().jordan, 3UL);
}

TEST(ConnectionObject, RejectsBadSummands)
{
    using Obj = ConnectionObject<RationalField>;
    EXPECT_LAFT_ERROR(Obj({}), errc::invalid_argument);
    EXPECT_LAFT_ERROR(Obj({{cls("zeta^-1", 1), 0}}), errc::invalid_argument);
    EXPECT_LAFT_ERROR(Obj({{cls("zeta^-1", 2), 1}}), errc::not_irreducible);
    EXPECT_LAFT_ERROR(Obj({{cls("zeta^-1", 1), 1}, {cls("z^-1", 1, Var::z), 1}}), errc::variable_mismatch);
}

TEST(SlopeSubcategory, Examples)
{
    using Obj = ConnectionObject<RationalField>;
    EXPECT_TRUE(in_slope_subcategory(Obj({{cls("zeta^(-1/2)", 2), 1}}), SlopeBound::below_one));
    EXPECT_TRUE(in_slope_subcategory(Obj({{cls("zeta^-2", 1), 1}, {cls("zeta^-3", 1), 2}}), SlopeBound::above_one));
    EXPECT_FALSE(
        in_slope_subcategory(Obj({{cls("zeta^(-1/2)", 2), 1}, {cls("zeta^-2", 1), 1}}), SlopeBound::below_one));
    EXPECT_FALSE(in_slope_subcategory(Obj({{cls("zeta^-1", 1), 1}}), SlopeBound::above_one));
    EXPECT_LAFT_ERROR(in_slope_subcategory(Obj({{cls("z^-1", 1, Var::z), 1}}), SlopeBound::below_one),
                      errc::wrong_point);
}

TEST(HorizontalSections, Examples)
{
    using Obj = ConnectionObject<RationalField>;
    EXPECT_FALSE(has_horizontal_sections(Obj({{cls("z^-1", 1, Var::z), 1}})));
    EXPECT_TRUE(has_horizontal_sections(Obj({{cls("0", 1, Var::z), 1}})));
    EXPECT_FALSE(has_horizontal_sections(Obj({{cls("1/3", 1, Var::z), 1}})));
    EXPECT_TRUE(has_horizontal_sections(Obj({{cls("z^-1", 1, Var::z), 1}, {cls("2", 1, Var::z), 4}})));
}

// Replacing a summand by an equal class (twist and (1/q)Z shift) changes
// neither predicate.
TEST(ConnectionProperty, InvariantUnderEqualClasses)
{
    for (std::uint64_t t = 0; t < 40; ++t) {
        verify::Sampler rng(4000 + t);
        std::vector<Summand<RationalField>> a;
        std::vector<Summand<RationalField>> b;
        const long n = rng.range(1, 3);
        for (long i = 0; i < n; ++i) {
            const auto kind = rng.coin() ? TransformKind::inf_to_zero : TransformKind::inf_to_inf;
            auto rc = verify::random_class(rng, kind);
            if (rng.range(0, 3) == 0) {
                rc.f = RationalSeries::constant(RationalField{}, Var::zeta, make_rational(rng.range(-3, 3), 1));
                rc.r = 1;
            }
            const auto c = normalize(rc.f.with_var(Var::zeta), static_cast<unsigned long>(rc.r));
            const auto shifted = c.rep()
                                 + RationalSeries::constant(RationalField{}, Var::zeta,
                                                            make_rational(rng.range(-4, 4), rc.r));
            const auto twin = galois_twist(normalize(shifted, c.q()), rc.r % 2 == 0 ? rc.r / 2 : 0);
            ASSERT_TRUE(classes_equal(c, twin));
            const auto m = static_cast<unsigned long>(rng.range(1, 4));
            a.push_back({c, m});
            b.push_back({twin, m});
        }
        const ConnectionObject<RationalField> ea(a);
        const ConnectionObject<RationalField> eb(b);
        EXPECT_EQ(in_slope_subcategory(ea, SlopeBound::below_one), in_slope_subcategory(eb, SlopeBound::below_one));
        EXPECT_EQ(in_slope_subcategory(ea, SlopeBound::above_one), in_slope_subcategory(eb, SlopeBound::above_one));
        EXPECT_EQ(has_horizontal_sections(ea), has_horizontal_sections(eb));
    }
}
