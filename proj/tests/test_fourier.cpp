#include <numeric>

#include <laft/fourier.hpp>

#include "test_support.hpp"
#include "verify.hpp"

using namespace laft;
using laft::test::q;
using laft::test::rs;

namespace
{

const RationalField k;

template <CoefficientField F>
PuiseuxSeries<F> mono(const F &field, Var v, const Rational &e)
{
    return PuiseuxSeries<F>::monomial(field, v, field.one(), e);
}

// Left side of the defining equation, as a series in the source variable:
// zhat = -z^{-1} f for 0-inf, zhat = zeta f for inf-0 and inf-inf.
template <CoefficientField F>
PuiseuxSeries<F> defining_series(const PuiseuxSeries<F> &f, TransformKind kind)
{
    if (kind == TransformKind::zero_to_inf) {
        return shift(-f, Rational(-1));
    }
    return shift(f, Rational(1));
}

// The value the defining series takes at the solved coordinate.
template <CoefficientField F>
PuiseuxSeries<F> defining_value(const F &field, TransformKind kind)
{
    if (kind == TransformKind::inf_to_zero) {
        return mono(field, Var::zhat, Rational(1));
    }
    return mono(field, Var::zetahat, Rational(-1));
}

// J(Y) = j(Y^r): integer exponents, so evaluating it needs no root choices.
template <CoefficientField F>
PuiseuxSeries<F> in_root_variable(const PuiseuxSeries<F> &j, long r)
{
    PuiseuxSeries<F> out(j.field(), j.var());
    for (const auto &[e, c] : j.terms()) {
        out.add_term(e * Rational(r), c);
    }
    return out;
}

// Some y with y^r = x satisfies J(y) = want below the propagated truncation.
template <CoefficientField F>
bool back_substitutes(const PuiseuxSeries<F> &j, long r, const PuiseuxSeries<F> &x, const PuiseuxSeries<F> &want,
                      double tol)
{
    const auto &field = x.field();
    const auto big_j = in_root_variable(j, r);
    const auto y0 = pow_rat(x, make_rational(1, r), x.trunc() - x.leading_exponent() + x.leading_exponent() / r);
    for (long b = 0; b < r; ++b) {
        typename F::value_type w;
        try {
            w = field.unit_root_power(static_cast<unsigned long>(r), b);
        } catch (const error &) {
            continue;
        }
        const auto y = scale(w, y0);
        const auto back = compose(big_j, y);
        if (!(want.ord() < back.trunc())) {
            continue;
        }
        if (max_deviation_below(back, want, back.trunc()) <= tol) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST(SolveCoordinate, Examples)
{
    const auto x = solve_coordinate(normalize(rs("-4*z^-1"), 1), TransformKind::zero_to_inf, ExtRational(q(3)));
    EXPECT_EQ(x.var(), Var::zetahat);
    EXPECT_TRUE(agree_below(x, rs("2*zetahat^(1/2)", Var::zetahat), ExtRational(q(3))));

    const auto y = solve_coordinate(normalize(rs("1/3"), 1), TransformKind::zero_to_inf, ExtRational(q(4)));
    EXPECT_TRUE(agree_below(y, rs("-1/3*zetahat", Var::zetahat), ExtRational(q(4))));

    const auto w = solve_coordinate(normalize(rs("5/2*zeta^-2", Var::zeta), 1), TransformKind::inf_to_inf,
                                    ExtRational(q(4)));
    EXPECT_TRUE(agree_below(w, rs("5/2*zetahat", Var::zetahat), ExtRational(q(4))));
}

TEST(Fourier0Inf, WorkedExample)
{
    const auto g = fourier_0_inf(normalize(rs("-4*z^-1"), 1));
    EXPECT_EQ(g.q(), 2UL);
    EXPECT_EQ(g.var(), Var::zetahat);
    EXPECT_EQ(slope(g), q(1, 2));
    EXPECT_TRUE(classes_equal(g, normalize(rs("-2*zetahat^(-1/2) + 1/4", Var::zetahat), 2)));
    EXPECT_EQ(g.coeff_at(0), q(1, 4));
}

TEST(Fourier0Inf, RegularConstant)
{
    const auto g = fourier_0_inf(normalize(rs("1/3"), 1));
    EXPECT_EQ(g.q(), 1UL);
    EXPECT_EQ(g.rep(), rs("1/3", Var::zetahat));
}

TEST(Fourier0Inf, ComplexRootsAreGaloisEqual)
{
    const ComplexField c(256);
    const auto f = normalize(laft::test::cs("4*z^-1", c), 1);
    TransformOptions other;
    other.root_branch = 1;
    const auto g0 = fourier_0_inf(f);
    const auto g1 = fourier_0_inf(f, other);
    EXPECT_TRUE(classes_equal(g0, g1));
    const auto two_i = c.make(BigFloat(0, 256), BigFloat(2, 256));
    const auto lead = g0.coeff_at(-1);
    EXPECT_TRUE(c.equal(lead, two_i) || c.equal(lead, -two_i));
    EXPECT_LT(c.abs_diff(g0.coeff_at(0), c.from_rational(q(1, 4))), 1e-60);
    EXPECT_LAFT_ERROR(fourier_0_inf(normalize(rs("4*z^-1"), 1)), errc::root_unavailable);
}

TEST(FourierInf0, Examples)
{
    const auto g = fourier_inf_0(normalize(rs("1/3", Var::zeta), 1));
    EXPECT_EQ(g.var(), Var::zhat);
    EXPECT_EQ(g.rep(), rs("2/3", Var::zhat));

    // zhat = zeta f = 3 zeta^{1/2}: zeta = zhat^2/9, g = -9 zhat^{-1} + 1/2.
    const auto h = fourier_inf_0(normalize(rs("3*zeta^(-1/2)", Var::zeta), 2));
    EXPECT_EQ(h.q(), 1UL);
    EXPECT_EQ(h.rep().ord(), ExtRational(q(-1)));
    EXPECT_EQ(h.rep(), rs("-9*zhat^-1 + 1/2", Var::zhat));

    EXPECT_LAFT_ERROR(fourier_inf_0(normalize(rs("zeta^(-3/2)", Var::zeta), 2)), errc::slope_violation);
}

TEST(FourierInfInf, Examples)
{
    const auto g = fourier_inf_inf(normalize(rs("5/2*zeta^-2", Var::zeta), 1));
    EXPECT_EQ(g.q(), 1UL);
    EXPECT_EQ(g.rep(), rs("-2/5*zetahat^-2", Var::zetahat));

    EXPECT_LAFT_ERROR(fourier_inf_inf(normalize(rs("zeta^-1", Var::zeta), 1)), errc::slope_violation);

    const auto h = fourier_inf_inf(normalize(rs("zeta^(-3/2)", Var::zeta), 2));
    EXPECT_EQ(h.q(), 1UL);
    EXPECT_EQ(h.rep().ord(), ExtRational(q(-3)));
    EXPECT_EQ(slope(h), q(3));
}

TEST(Fourier, WrongPoint)
{
    EXPECT_LAFT_ERROR(fourier_0_inf(normalize(rs("zeta^-1", Var::zeta), 1)), errc::wrong_point);
    EXPECT_LAFT_ERROR(fourier_inf_0(normalize(rs("z^-1"), 1)), errc::wrong_point);
}

TEST(TransformConnection, Examples)
{
    const ConnectionObject<RationalField> e({{normalize(rs("-4*z^-1"), 1), 3}});
    const auto t = transform_connection(e, TransformKind::zero_to_inf);
    ASSERT_EQ(t.size(), 1U);
    EXPECT_EQ(t.summands()[0].jordan, 3UL);
    EXPECT_TRUE(classes_equal(t.summands()[0].cls, normalize(rs("-2*zetahat^(-1/2) + 1/4", Var::zetahat), 2)));

    const ConnectionObject<RationalField> two({{normalize(rs("-4*z^-1"), 1), 1}, {normalize(rs("1/3"), 1), 2}});
    const auto t2 = transform_connection(two, TransformKind::zero_to_inf);
    ASSERT_EQ(t2.size(), 2U);
    EXPECT_EQ(t2.summands()[0].cls.q(), 2UL);
    EXPECT_EQ(t2.summands()[1].cls.rep(), rs("1/3", Var::zetahat));
    EXPECT_EQ(t2.summands()[1].jordan, 2UL);

    const ConnectionObject<RationalField> zero({{normalize(rs("-4*z^-1"), 1), 1}, {normalize(rs("2"), 1), 1}});
    try {
        (void)transform_connection(zero, TransformKind::zero_to_inf);
        ADD_FAILURE() << "expected ZeroClass";
    } catch (const summand_error &err) {
        EXPECT_EQ(err.code(), errc::zero_class);
        EXPECT_EQ(err.index(), 1U);
    }
}

TEST(FourierProperty, SlopeLawsAndIrreducibility)
{
    for (int kk = 0; kk < 3; ++kk) {
        const auto kind = static_cast<TransformKind>(kk);
        for (std::uint64_t t = 0; t < 40; ++t) {
            verify::Sampler rng(6000 + 100 * kk + t);
            const auto rc = verify::random_class(rng, kind);
            const auto g = fourier_transform(normalize(rc.f, static_cast<unsigned long>(rc.r)), kind);
            Rational expected;
            switch (kind) {
                case TransformKind::zero_to_inf:
                    expected = make_rational(-rc.s, rc.r + rc.s);
                    break;
                case TransformKind::inf_to_zero:
                    expected = make_rational(-rc.s, rc.r - rc.s);
                    break;
                case TransformKind::inf_to_inf:
                    expected = make_rational(-rc.s, rc.s - rc.r);
                    break;
            }
            EXPECT_EQ(g.rep().ord(), ExtRational(expected)) << kind_name(kind) << " " << format_series(rc.f);
            EXPECT_TRUE(is_irreducible(g)) << kind_name(kind) << " " << format_series(rc.f);
        }
    }
}

TEST(FourierProperty, BackSubstitutionExact)
{
    for (int kk = 0; kk < 3; ++kk) {
        const auto kind = static_cast<TransformKind>(kk);
        for (std::uint64_t t = 0; t < 30; ++t) {
            verify::Sampler rng(7000 + 100 * kk + t);
            const auto rc = verify::random_class(rng, kind);
            const auto c = normalize(rc.f, static_cast<unsigned long>(rc.r));
            long q_out = rc.r + rc.s;
            if (kind == TransformKind::inf_to_zero) {
                q_out = rc.r - rc.s;
            } else if (kind == TransformKind::inf_to_inf) {
                q_out = rc.s - rc.r;
            }
            const ExtRational trunc(make_rational(rc.r, q_out) + Rational(2));
            const auto x = solve_coordinate(c, kind, trunc);
            const auto j = defining_series(c.rep(), kind);
            EXPECT_TRUE(back_substitutes(j, rc.r, x, defining_value(k, kind), 0.0))
                << kind_name(kind) << " " << format_series(rc.f);
        }
    }
}

TEST(FourierProperty, BackSubstitutionComplex)
{
    const ComplexField c(256);
    for (std::uint64_t t = 0; t < 20; ++t) {
        verify::Sampler rng(7500 + t);
        long r = 1;
        long s = 1;
        do {
            r = rng.range(1, 4);
            s = rng.range(1, 5);
        } while (std::gcd(r, s) != 1);
        const auto f = normalize(verify::random_complex_class(rng, c, Var::z, r, s, nullptr),
                                 static_cast<unsigned long>(r));
        const auto x = solve_coordinate(f, TransformKind::zero_to_inf, ExtRational(q(2)));
        const auto j = defining_series(f.rep(), TransformKind::zero_to_inf);
        EXPECT_TRUE(back_substitutes(j, r, x, defining_value(c, TransformKind::zero_to_inf), 1e-40))
            << format_series(f.rep());
    }
}

TEST(FourierProperty, ConstantTermFormula)
{
    for (std::uint64_t t = 0; t < 60; ++t) {
        verify::Sampler rng(8000 + t);
        const auto rc = verify::random_class(rng, TransformKind::zero_to_inf);
        const auto d = transform_series(rc.f, static_cast<unsigned long>(rc.r), TransformKind::zero_to_inf);
        const Rational rr(rc.r);
        const Rational ss(rc.s);
        EXPECT_EQ(d.raw.coeff(q(0)), rc.b * rr / (rr + ss) + ss / (Rational(2) * (rr + ss)))
            << format_series(rc.f);
    }
}

TEST(FourierProperty, GaloisChoiceIndependence)
{
    const ComplexField c(256);
    for (std::uint64_t t = 0; t < 20; ++t) {
        verify::Sampler rng(8500 + t);
        long r = 1;
        long s = 1;
        do {
            r = rng.range(1, 3);
            s = rng.range(1, 4);
        } while (std::gcd(r, s) != 1);
        const auto f = normalize(verify::random_complex_class(rng, c, Var::z, r, s, nullptr),
                                 static_cast<unsigned long>(r));
        const auto g0 = fourier_0_inf(f);
        for (long branch = 1; branch < r + s; ++branch) {
            TransformOptions o;
            o.root_branch = branch;
            EXPECT_TRUE(classes_equal(g0, fourier_0_inf(f, o))) << "branch " << branch;
        }
    }
}

TEST(FourierProperty, PrecisionStability)
{
    for (int kk = 0; kk < 3; ++kk) {
        const auto kind = static_cast<TransformKind>(kk);
        for (std::uint64_t t = 0; t < 20; ++t) {
            verify::Sampler rng(9000 + 100 * kk + t);
            const auto rc = verify::random_class(rng, kind);
            const auto c = normalize(rc.f, static_cast<unsigned long>(rc.r));
            const auto x1 = solve_coordinate(c, kind, ExtRational(q(2)));
            const auto x2 = solve_coordinate(c, kind, ExtRational(q(3)));
            EXPECT_TRUE(agree_below(x1, x2, ExtRational(q(2))));
            TransformOptions checked;
            checked.stability_check = true;
            EXPECT_NO_THROW((void)fourier_transform(c, kind, checked));
        }
    }
}
