#ifndef LAFT_SERIES_COMPOSE_HPP
#define LAFT_SERIES_COMPOSE_HPP

#include <utility>

#include <laft/error.hpp>
#include <laft/puiseux_series.hpp>

namespace laft
{

// f^e with principal roots, exact below min(cap, trunc(f) - ord(f) + e ord(f)).
// Exact series need a finite cap unless e is a nonnegative integer or f is a
// monomial.
template <CoefficientField F>
PuiseuxSeries<F> pow_rat(const PuiseuxSeries<F> &f, const Rational &e, const ExtRational &cap = ExtRational::pos_inf())
{
    auto r = detail::unit_power(f, e, cap);
    r.truncate(cap);
    return r;
}

// sum_e c_e inner^e over the terms of outer. The result lives in inner's
// variable. Unknown terms of a truncated outer series contribute at orders
// >= trunc(outer) * ord(inner), which requires ord(inner) > 0.
template <CoefficientField F>
PuiseuxSeries<F> compose(const PuiseuxSeries<F> &outer, const PuiseuxSeries<F> &inner,
                         const ExtRational &cap = ExtRational::pos_inf())
{
    outer.require_lower_unbounded("compose");
    inner.require_lower_unbounded("compose");
    ExtRational t = cap;
    if (outer.trunc().is_finite()) {
        if (inner.empty() || sgn(inner.leading_exponent()) <= 0) {
            raise(errc::insufficient_precision, "composition with a truncated outer series needs an inner series of "
                                                "positive order");
        }
        t = min(t, outer.trunc() * inner.leading_exponent());
    }
    PuiseuxSeries<F> r(inner.field(), inner.var(), inner.ram());
    r.truncate(t);
    for (const auto &[e, c] : outer.terms()) {
        if (inner.empty() && sgn(e) < 0) {
            raise(errc::zero_divisor, "negative power of a zero inner series");
        }
        r = r + scale(c, pow_rat(inner, e, t));
    }
    return r;
}

// Reversion data for j = a v^{p/q} (1 + u) with q = ram(j): a series y in
// w^{1/|p|} such that j(y^q) = w^{sign p}, where the powers of y^q are
// taken as integer powers of y. This sidesteps root-branch ambiguity in
// nested fractional powers.
template <CoefficientField F>
struct ReversionRoot {
    PuiseuxSeries<F> root;
    unsigned long q = 1;
    long p = 0;
};

namespace detail
{

template <CoefficientField F>
struct ReversionSetup {
    unsigned long q;
    long p;
    unsigned long n;
    Var out;
    typename F::value_type d;
    PuiseuxSeries<F> unit; // u rescaled to integer exponents i, u = sum u_i v^{i/q}
};

template <CoefficientField F>
ReversionSetup<F> reversion_setup(const PuiseuxSeries<F> &j, Var value_var, long branch)
{
    using S = typename F::value_type;
    j.require_lower_unbounded("comp_inverse");
    if (j.empty()) {
        raise(errc::zero_divisor, "compositional inverse of a series with no leading term");
    }
    const auto &field = j.field();
    const unsigned long q = j.ram();
    const Rational l = j.leading_exponent();
    const long p = to_long(Rational(l * Rational(static_cast<long>(q))));
    if (p == 0) {
        raise(errc::zero_leading_exponent, "leading exponent is zero");
    }
    const unsigned long n = static_cast<unsigned long>(p < 0 ? -p : p);
    const Var out = p > 0 ? value_var : reciprocal(value_var);
    const S a = j.leading_coeff();
    S d = pow_rational(field, a, make_rational(-1, p));
    if (branch % static_cast<long>(n) != 0) {
        d = S(d * field.unit_root_power(n, branch));
    }
    PuiseuxSeries<F> unit(field, out);
    const ExtRational rel = j.trunc() - l;
    if (rel.is_finite()) {
        unit.truncate(rel * Rational(static_cast<long>(q)));
    }
    const S inv_a = S(field.one() / a);
    for (const auto &[e, c] : j.terms()) {
        const Rational i = (e - l) * Rational(static_cast<long>(q));
        if (sgn(i) > 0) {
            unit.add_term(i, S(c * inv_a));
        }
    }
    return {q, p, n, out, d, std::move(unit)};
}

} // namespace detail

// Solves y = d w^{1/N} (1 + u(y^q))^{-1/p} by fixed-point iteration; every
// pass gains at least 1/N in truncation. Stops at root_trunc or when the
// input precision is exhausted. `branch` multiplies the leading coefficient
// by exp(2 pi i branch / N), selecting another root of the same orbit.
template <CoefficientField F>
ReversionRoot<F> reversion_root(const PuiseuxSeries<F> &j, Var value_var, const ExtRational &root_trunc,
                                long branch = 0)
{
    auto s = detail::reversion_setup(j, value_var, branch);
    const auto &field = j.field();
    const Rational step(1, static_cast<long>(s.n));
    const Rational e = make_rational(-1, s.p);
    const ExtRational rel = root_trunc - step;

    auto y = PuiseuxSeries<F>::monomial(field, s.out, s.d, step);
    y.truncate(ExtRational(Rational(2 * step)));
    const auto one = PuiseuxSeries<F>::one(field, s.out);
    while (y.trunc() < root_trunc) {
        auto next = shift(scale(s.d, pow_rat(one + compose(s.unit, y, rel), e, rel)), step);
        next.truncate(root_trunc);
        if (!(y.trunc() < next.trunc())) {
            break;
        }
        y = std::move(next);
    }
    return {std::move(y), s.q, s.p};
}

// Compositional inverse x of j, a series in w^{1/|p|} with w = value_var for
// p > 0 and its reciprocal for p < 0, satisfying j(x) = w^{sign p} below
// trunc_req (the value variable written in the output variable).
template <CoefficientField F>
PuiseuxSeries<F> comp_inverse(const PuiseuxSeries<F> &j, Var value_var, const ExtRational &trunc_req,
                              long branch = 0)
{
    if (!trunc_req.is_finite()) {
        raise(errc::insufficient_precision, "compositional inverse needs a finite truncation order");
    }
    j.require_lower_unbounded("comp_inverse");
    if (j.empty()) {
        raise(errc::zero_divisor, "compositional inverse of a series with no leading term");
    }
    const Rational l = j.leading_exponent();
    const long p = to_long(Rational(l * Rational(static_cast<long>(j.ram()))));
    if (p == 0) {
        raise(errc::zero_leading_exponent, "leading exponent is zero");
    }
    const long sigma = p > 0 ? 1 : -1;
    const Rational step(1, p > 0 ? p : -p);
    const auto rr = reversion_root(j, value_var, trunc_req - Rational(sigma) + step, branch);
    return pow_int(rr.root, static_cast<long>(rr.q));
}

// Both sides of (r+s) [z^{r+s}] (h^<-1>)^r = r [z^{-r}] h^{-(r+s)} for a power
// series h = c z + ..., computed independently.
template <CoefficientField F>
std::pair<typename F::value_type, typename F::value_type> lagrange_check(const PuiseuxSeries<F> &h, long r, long s)
{
    using S = typename F::value_type;
    if (r <= 0 || s < 0) {
        raise(errc::invalid_argument, "lagrange_check needs r > 0 and s >= 0");
    }
    if (h.empty() || h.leading_exponent() != 1 || h.minimal_ram() != 1) {
        raise(errc::invalid_argument, "lagrange_check needs a power series h = c z + ... with c != 0");
    }
    const auto &field = h.field();
    const auto x = comp_inverse(h, h.var(), ExtRational(Rational(s + 2)));
    const auto xr = pow_int(x, r);
    const S lhs = S(field.from_rational(Rational(r + s)) * xr.coeff(Rational(r + s)));
    const auto hp = pow_int(h, -(r + s), ExtRational(Rational(1 - r)));
    const S rhs = S(field.from_rational(Rational(r)) * hp.coeff(Rational(-r)));
    return {lhs, rhs};
}

} // namespace laft

#endif
