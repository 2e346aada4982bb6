// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include <laft/expr_io.hpp>
#include <laft/fourier.hpp>
#include <laft/operator_lab.hpp>

#include "verify.hpp"

using namespace laft;

namespace
{

const RationalField kq;

struct Outcome {
    bool ok = true;
    std::string detail;
};

RationalSeries rs(std::string_view text, Var v = Var::z)
{
    return parse_series<RationalField>(text, v);
}

Rational rat(long n, long d = 1)
{
    return make_rational(n, d);
}

// 1. Worked transform.
Outcome worked_transform()
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto f = normalize(rs("-4*z^-1"), 1);
    const auto g = fourier_0_inf(f);
    const auto x = solve_coordinate(f, TransformKind::zero_to_inf, ExtRational(rat(3)));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    // zhat = -z^{-1} f = 4 z^{-2} must equal zetahat^{-1} at z = x.
    const auto back = compose(shift(-f.rep(), Rational(-1)), x);
    const auto want = RationalSeries::monomial(kq, Var::zetahat, Rational(1), Rational(-1));
    const auto residual = back - want;
    bool residual_zero = true;
    for (const auto &[e, c] : residual.terms()) {
        if (ExtRational(e) < residual.trunc()) {
            residual_zero = false;
        }
    }
    const auto expected = normalize(rs("-2*zetahat^(-1/2) + 1/4", Var::zetahat), 2);
    Outcome o;
    o.ok = classes_equal(g, expected) && g.q() == 2 && slope(g) == rat(1, 2) && residual_zero
           && ExtRational(rat(0)) < residual.trunc() && secs < 1.0;
    std::ostringstream d;
    d << "g = " << format_class(g) << ", q = " << g.q() << ", slope " << to_string(slope(g))
      << ", back-substitution residual " << (residual_zero ? "0" : "nonzero") << " below "
      << to_string(residual.trunc()) << ", " << secs * 1000.0 << " ms";
    o.detail = d.str();
    return o;
}

// 2. Constant term of the transformed class.
Outcome constant_term()
{
    std::size_t exact_ok = 0;
    const std::size_t exact_n = 120;
    for (std::size_t i = 0; i < exact_n; ++i) {
        verify::Sampler rng(0xC1A1 + i);
        const auto rc = verify::random_class(rng, TransformKind::zero_to_inf);
        const auto d = transform_series(rc.f, static_cast<unsigned long>(rc.r), TransformKind::zero_to_inf);
        const Rational want = rc.b * Rational(rc.r) / Rational(rc.r + rc.s) + Rational(rc.s) / Rational(2 * (rc.r + rc.s));
        if (d.raw.coeff(Rational(0)) == want) {
            ++exact_ok;
        }
    }
    const ComplexField kc(256);
    std::size_t complex_ok = 0;
    const std::size_t complex_n = 40;
    double worst = 0.0;
    for (std::size_t i = 0; i < complex_n; ++i) {
        verify::Sampler rng(0xC1A2 + i);
        long r = 1;
        long s = 1;
        do {
            r = rng.range(1, 4);
            s = rng.range(1, 6);
        } while (std::gcd(r, s) != 1);
        Rational b;
        const auto f = verify::random_complex_class(rng, kc, Var::z, r, s, &b);
        const auto d = transform_series(f, static_cast<unsigned long>(r), TransformKind::zero_to_inf);
        const Rational want = b * Rational(r) / Rational(r + s) + Rational(s) / Rational(2 * (r + s));
        const double err = kc.abs_diff(d.raw.coeff(Rational(0)), kc.from_rational(want));
        worst = std::max(worst, err);
        if (err < 1e-40) {
            ++complex_ok;
        }
    }
    Outcome o;
    o.ok = exact_ok == exact_n && complex_ok == complex_n;
    std::ostringstream d;
    d << "rational " << exact_ok << "/" << exact_n << " exact, complex " << complex_ok << "/" << complex_n
      << " (max error " << worst << ")";
    o.detail = d.str();
    return o;
}

// 3. Slope laws and irreducibility.
Outcome slope_laws()
{
    std::ostringstream d;
    bool ok = true;
    for (const auto kind : {TransformKind::zero_to_inf, TransformKind::inf_to_zero, TransformKind::inf_to_inf}) {
        const std::size_t n = 110;
        std::size_t good = 0;
        for (std::size_t i = 0; i < n; ++i) {
            verify::Sampler rng(0x51 + 1000 * static_cast<std::uint64_t>(kind) + i);
            const auto rc = verify::random_class(rng, kind);
            const auto g = fourier_transform(normalize(rc.f, static_cast<unsigned long>(rc.r)), kind);
            long den = rc.r + rc.s;
            if (kind == TransformKind::inf_to_zero) {
                den = rc.r - rc.s;
            } else if (kind == TransformKind::inf_to_inf) {
                den = rc.s - rc.r;
            }
            if (g.rep().ord() == ExtRational(rat(-rc.s, den)) && is_irreducible(g)) {
                ++good;
            }
        }
        ok = ok && good == n;
        d << kind_name(kind) << " " << good << "/" << n << " ";
    }
    return {ok, d.str()};
}

// 4. Lagrange inversion.
Outcome lagrange()
{
    const std::size_t n = 60;
    std::size_t good = 0;
    for (std::size_t i = 0; i < n; ++i) {
        verify::Sampler rng(0x1A6 + i);
        const auto h = verify::random_power_series(rng, Var::z);
        const auto [lhs, rhs] = lagrange_check(h, rng.range(1, 4), rng.range(0, 6));
        if (lhs == rhs) {
            ++good;
        }
    }
    return {good == n, std::to_string(good) + "/" + std::to_string(n) + " exact"};
}

// 5. Compositional inverse through order 10.
Outcome inverse_round_trip()
{
    const std::size_t n = 60;
    std::size_t good = 0;
    const ExtRational through(rat(11));
    for (std::size_t i = 0; i < n; ++i) {
        verify::Sampler rng(0x1F5 + i);
        const auto j = verify::random_laurent(rng, Var::z);
        const int sign = sgn(j.leading_exponent());
        const auto x = comp_inverse(j, Var::zhat, through);
        const auto back = compose(j, x);
        const auto id = RationalSeries::monomial(kq, sign > 0 ? Var::zhat : Var::zetahat, Rational(1), Rational(sign));
        if (through <= back.trunc() && agree_below(back, id, through)) {
            ++good;
        }
    }
    return {good == n, std::to_string(good) + "/" + std::to_string(n) + " exact through order 10"};
}

// 6. Operator expansion.
Outcome expansion()
{
    std::size_t runs = 0;
    std::size_t good = 0;
    std::size_t min_cols = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < 12; ++i) {
        verify::Sampler rng(0xE6 + i);
        const auto weak = verify::random_expansion_config(rng, false);
        const auto strict = verify::random_expansion_config(rng, true);
        for (long m = -3; m <= 5; ++m) {
            const auto &c = m < 0 ? strict : weak;
            const auto rep = expansion_residual(c.a, c.b, m, verify::expansion_window(c.a, c.b, m));
            ++runs;
            if (rep.holds && rep.unclipped > 0) {
                ++good;
            }
            min_cols = std::min(min_cols, rep.unclipped);
        }
    }
    const Window w{-6, 8};
    const auto a = GradedOperator::multiplication(rs("z^-1"), 1);
    const auto b = GradedOperator::derivation(0, 1);
    const auto rep = expansion_residual(a, b, 2, w);
    const auto sum = a + b;
    const auto resid = compose(sum, sum) - compose(a, a) - Rational(2) * compose(a, b) - commutator(b, a);
    std::size_t compared = 0;
    const bool is_b2 = agree_on_window(TruncatedOperator::from_graded(resid, w),
                                       TruncatedOperator::from_graded(compose(b, b), w), &compared)
                       && compared > 0;
    const bool boundary = rep.holds && rep.residual_ord == ExtRational(rat(-2)) && is_b2;
    std::ostringstream d;
    d << good << "/" << runs << " (12 configurations, m = -3..5, min unclipped columns " << min_cols
      << "), boundary m = 2: residual = B^2 with Ord " << to_string(rep.residual_ord) << " = bound "
      << to_string(rep.bound);
    return {good == runs && boundary, d.str()};
}

// 7. Fractional roots.
Outcome fractional_roots()
{
    std::size_t runs = 0;
    std::size_t good = 0;
    std::size_t compared = 0;
    for (std::size_t i = 0; i < 12; ++i) {
        for (const long p : {-3, -2, 2, 3}) {
            verify::Sampler rng(0xF7 + 10 * i + static_cast<std::uint64_t>(p + 3));
            const auto rep = check_fractional_root(verify::random_root_operator(rng, p), p, Window{-6, 6});
            ++runs;
            compared += rep.compared;
            if (rep.holds && rep.compared > 0) {
                ++good;
            }
        }
    }
    const auto id = check_fractional_root(GradedOperator::identity(1), 3, Window{-6, 6});
    const auto one_z = check_fractional_root(GradedOperator::multiplication(rs("1 + z"), 1), 2, Window{-6, 6});
    const auto mixed = check_fractional_root(
        GradedOperator::multiplication(rs("z^-2"), 1) + GradedOperator::derivation(0, 1), -2, Window{-6, 6});
    const bool fixed = id.holds && one_z.holds && mixed.holds;
    std::ostringstream d;
    d << good << "/" << runs << " random (p in {-3,-2,2,3}, " << compared
      << " entries compared); identity, 1+z, z^-2 + d/dz " << (fixed ? "hold" : "FAIL");
    return {good == runs && fixed, d.str()};
}

// 8. Star coefficient.
Outcome star()
{
    std::vector<std::pair<RationalSeries, unsigned long>> inputs{
        {rs("-4*z^-1"), 1}, {rs("-8*z^(-1/2) + 5/3"), 2}, {rs("z^-3 + 2*z^(-5/2) - z^-1"), 2}, {rs("3*z^(-2/3)"), 3}};
    for (std::uint64_t i = 0; i < 4; ++i) {
        verify::Sampler rng(0x57A + i);
        const auto rc = verify::random_class(rng, TransformKind::zero_to_inf);
        inputs.emplace_back(rc.f, static_cast<unsigned long>(rc.r));
    }
    std::size_t good = 0;
    std::size_t columns = 0;
    for (const auto &[f, r] : inputs) {
        const auto rep = verify_star_coefficient(f, r, Window{-8, 8});
        columns += rep.columns.size();
        if (rep.checked() && rep.holds() && rep.lower_orders_match) {
            ++good;
        }
    }
    std::ostringstream d;
    d << good << "/" << inputs.size() << " inputs, " << columns << " unclipped monomials matched";
    return {good == inputs.size(), d.str()};
}

// 9. Round trip.
Outcome round_trip()
{
    const ComplexField kc(256);
    const std::size_t n = 30;
    unsigned common = 15U;
    std::size_t classified = 0;
    for (std::size_t i = 0; i < n; ++i) {
        verify::Sampler rng(0x9A + i);
        long r = 1;
        long s = 1;
        do {
            r = rng.range(1, 3);
            s = rng.range(1, 4);
        } while (std::gcd(r, s) != 1);
        const auto f = verify::random_complex_class(rng, kc, Var::z, r, s, nullptr);
        const unsigned mask = verify::round_trip_branches(f, static_cast<unsigned long>(r));
        if (mask != 0) {
            ++classified;
        }
        common &= mask;
    }
    // Regular classes exactly: b -> b -> -b.
    const auto b = normalize(rs("1/3"), 1);
    const auto back = fourier_inf_0(with_var(fourier_0_inf(b), Var::zeta));
    const bool regular = back.rep() == rs("2/3", Var::zhat);

    const bool literal = (common & (verify::RoundTripBranch::same | verify::RoundTripBranch::reflected)) != 0;
    std::ostringstream d;
    d << classified << "/" << n << " trials classified, common branch "
      << (common != 0 ? verify::branch_name(common) : std::string("none"))
      << (literal ? "" : " (outside the f(z), f(-z) pair; consistent on every trial)")
      << ", regular 1/3 -> " << format_class(back);
    return {classified == n && common != 0 && regular, d.str()};
}

// 10. Direct sums.
Outcome corollary()
{
    std::size_t n = 0;
    std::size_t good = 0;
    for (const auto kind : {TransformKind::zero_to_inf, TransformKind::inf_to_zero, TransformKind::inf_to_inf}) {
        for (std::uint64_t i = 0; i < 30; ++i) {
            verify::Sampler rng(0xC0 + 100 * static_cast<std::uint64_t>(kind) + i);
            std::vector<Summand<RationalField>> parts;
            const long count = rng.range(1, 4);
            for (long k = 0; k < count; ++k) {
                const auto rc = verify::random_class(rng, kind);
                parts.push_back({normalize(rc.f, static_cast<unsigned long>(rc.r)),
                                 static_cast<unsigned long>(rng.range(1, 5))});
            }
            const ConnectionObject<RationalField> e(parts);
            const auto t = transform_connection(e, kind);
            bool ok = t.size() == e.size() && t.var() == target_var(kind);
            for (std::size_t k = 0; ok && k < e.size(); ++k) {
                ok = t.summands()[k].jordan == e.summands()[k].jordan
                     && classes_equal(t.summands()[k].cls, fourier_transform(e.summands()[k].cls, kind));
            }
            ++n;
            if (ok) {
                ++good;
            }
        }
    }
    return {good == n, std::to_string(good) + "/" + std::to_string(n) + " direct sums, counts and Jordan sizes kept"};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"worked transform -4z^-1", worked_transform},
        {"constant term b r/(r+s) + s/(2(r+s))", constant_term},
        {"slope laws and irreducibility", slope_laws},
        {"Lagrange inversion identity", lagrange},
        {"compositional inverse round trip", inverse_round_trip},
        {"operator expansion bound", expansion},
        {"fractional operator roots", fractional_roots},
        {"star coefficient", star},
        {"round trip inf-0 after 0-inf", round_trip},
        {"direct sums keep Jordan sizes", corollary},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const error &e) {
            o = {false, std::string(e.name()) + ": " + e.what()};
        } catch (const std::exception &e) {
            o = {false, e.what()};
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
                  << std::endl;
        failed += o.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
