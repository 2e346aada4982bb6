#ifndef LAFT_TEST_SUPPORT_HPP
#define LAFT_TEST_SUPPORT_HPP

#include <string_view>

#include <gtest/gtest.h>

#include <laft/error.hpp>
#include <laft/expr_io.hpp>
#include <laft/rational.hpp>

namespace laft::test
{

inline Rational q(long num, long den = 1)
{
    return make_rational(num, den);
}

inline RationalSeries rs(std::string_view text, Var var = Var::z)
{
    return parse_series<RationalField>(text, var);
}

inline ComplexSeries cs(std::string_view text, const ComplexField &field, Var var = Var::z)
{
    return parse_series<ComplexField>(text, var, field);
}

} // namespace laft::test

namespace laft
{

template <CoefficientField F>
void PrintTo(const PuiseuxSeries<F> &f, std::ostream *os)
{
    *os << format_series(f);
}

} // namespace laft

#define EXPECT_LAFT_ERROR(stmt, expected_code)                                                                                  \
    do {                                                                                                               \
        try {                                                                                                          \
            stmt;                                                                                                      \
            ADD_FAILURE() << "expected " << ::laft::errc_name(expected_code);                                                   \
        } catch (const ::laft::error &e_) {                                                                            \
            EXPECT_EQ(e_.code(), expected_code) << e_.what();                                                                   \
        }                                                                                                              \
    } while (false)

#endif
