#ifndef LAFT_PUISEUX_SERIES_HPP
#define LAFT_PUISEUX_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <laft/error.hpp>
#include <laft/rational.hpp>
#include <laft/scalar_field.hpp>
#include <laft/var_tag.hpp>

namespace laft
{

// A truncated Puiseux series sum_e c_e v^e in one variable, with exponents in
// (1/ram)Z. The series is known exactly for exponents in the open window
// (lower, trunc); lower is -inf except after substitute_reciprocal() of a
// truncated series. Zero coefficients are never stored.
template <CoefficientField F>
class PuiseuxSeries
{
public:
    using field_type = F;
    using scalar_type = typename F::value_type;
    using container_type = std::map<Rational, scalar_type>;

    explicit PuiseuxSeries(F field = F{}, Var var = Var::z, unsigned long ram = 1)
        : m_field(std::move(field)), m_var(var), m_ram(ram)
    {
        if (ram == 0) {
            raise(errc::invalid_argument, "ramification must be positive");
        }
    }

    PuiseuxSeries(F field, Var var, std::initializer_list<std::pair<Rational, Rational>> terms)
        : PuiseuxSeries(std::move(field), var)
    {
        for (const auto &[e, c] : terms) {
            add_term(e, m_field.from_rational(c));
        }
    }

    static PuiseuxSeries monomial(F field, Var var, const scalar_type &c, const Rational &e)
    {
        PuiseuxSeries r(std::move(field), var);
        r.add_term(e, c);
        return r;
    }
    static PuiseuxSeries constant(F field, Var var, const scalar_type &c)
    {
        return monomial(std::move(field), var, c, Rational(0));
    }
    static PuiseuxSeries one(F field, Var var)
    {
        const scalar_type c = field.one();
        return constant(std::move(field), var, c);
    }

    const F &field() const noexcept
    {
        return m_field;
    }
    Var var() const noexcept
    {
        return m_var;
    }
    unsigned long ram() const noexcept
    {
        return m_ram;
    }
    const ExtRational &trunc() const noexcept
    {
        return m_trunc;
    }
    const ExtRational &lower() const noexcept
    {
        return m_lower;
    }
    const container_type &terms() const noexcept
    {
        return m_terms;
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    // No stored terms (the series may still be truncated).
    bool empty() const noexcept
    {
        return m_terms.empty();
    }
    bool is_exact() const noexcept
    {
        return m_trunc.is_pos_inf() && m_lower.is_neg_inf();
    }
    bool is_exact_zero() const noexcept
    {
        return m_terms.empty() && is_exact();
    }

    // Coefficient at e; zero when absent. Raises InsufficientPrecision outside
    // the exactness window.
    scalar_type coeff(const Rational &e) const
    {
        if (!(ExtRational(e) < m_trunc) || !(m_lower < ExtRational(e))) {
            raise(errc::insufficient_precision,
                  "coefficient of exponent " + to_string(e) + " is outside the exact window");
        }
        const auto it = m_terms.find(e);
        return it == m_terms.end() ? m_field.zero() : it->second;
    }

    // Accumulates c into the coefficient of e. Exponents at or beyond the
    // truncation are dropped silently; the ramification grows as needed.
    void add_term(const Rational &e, const scalar_type &c)
    {
        if (!(ExtRational(e) < m_trunc)) {
            return;
        }
        if (!(m_lower < ExtRational(e))) {
            return;
        }
        absorb_denominator(e);
        auto it = m_terms.find(e);
        if (it == m_terms.end()) {
            if (!m_field.is_zero(c)) {
                m_terms.emplace(e, c);
            }
            return;
        }
        it->second = scalar_type(it->second + c);
        if (m_field.is_zero(it->second)) {
            m_terms.erase(it);
        }
    }

    // Lowers the truncation to min(trunc, t), discarding terms at or above it.
    void truncate(const ExtRational &t)
    {
        if (!(t < m_trunc)) {
            return;
        }
        m_trunc = t;
        if (t.is_finite()) {
            m_terms.erase(m_terms.lower_bound(t.value()), m_terms.end());
        } else {
            m_terms.clear();
        }
    }

    // Raises the lower edge of the exactness window, discarding terms at or below it.
    void restrict_below(const ExtRational &lo)
    {
        if (!(m_lower < lo)) {
            return;
        }
        m_lower = lo;
        if (lo.is_finite()) {
            m_terms.erase(m_terms.begin(), m_terms.upper_bound(lo.value()));
        } else {
            m_terms.clear();
        }
    }

    // Declares a (possibly non-minimal) ramification; must be compatible
    // with every stored exponent.
    void set_ram(unsigned long q)
    {
        if (q == 0) {
            raise(errc::invalid_argument, "ramification must be positive");
        }
        for (const auto &[e, c] : m_terms) {
            if (q % mpz_get_ui(e.get_den_mpz_t()) != 0) {
                raise(errc::invalid_argument,
                      "exponent " + to_string(e) + " is not in (1/" + std::to_string(q) + ")Z");
            }
        }
        m_ram = q;
    }

    // lcm of the stored exponent denominators.
    unsigned long minimal_ram() const
    {
        unsigned long q = 1;
        for (const auto &[e, c] : m_terms) {
            q = lcm(q, mpz_get_ui(e.get_den_mpz_t()));
        }
        return q;
    }

    PuiseuxSeries with_var(Var v) const
    {
        PuiseuxSeries r = *this;
        r.m_var = v;
        return r;
    }

    // Smallest stored exponent; +inf for the zero series.
    ExtRational ord() const
    {
        if (!m_lower.is_neg_inf()) {
            raise(errc::indeterminate_order, "series has unknown low-order terms");
        }
        if (!m_terms.empty()) {
            return ExtRational(m_terms.begin()->first);
        }
        if (m_trunc.is_finite() && m_trunc <= ExtRational(0L)) {
            raise(errc::indeterminate_order, "zero series with truncation " + to_string(m_trunc));
        }
        return ExtRational::pos_inf();
    }

    // ord() when a term exists, otherwise the truncation: a lower bound for
    // the order of the true series, used by truncation propagation.
    ExtRational valuation_bound() const
    {
        if (!m_lower.is_neg_inf()) {
            raise(errc::indeterminate_order, "series has unknown low-order terms");
        }
        if (!m_terms.empty()) {
            return ExtRational(m_terms.begin()->first);
        }
        return m_trunc;
    }

    // Leading term; ZeroDivisor when no term is stored.
    const Rational &leading_exponent() const
    {
        require_leading();
        return m_terms.begin()->first;
    }
    const scalar_type &leading_coeff() const
    {
        require_leading();
        return m_terms.begin()->second;
    }
    const Rational &max_exponent() const
    {
        require_leading();
        return m_terms.rbegin()->first;
    }

    void require_lower_unbounded(const char *op) const
    {
        if (!m_lower.is_neg_inf()) {
            raise(errc::indeterminate_order, std::string(op) + ": series has unknown low-order terms");
        }
    }

    // Structural equality under the field's equality; ramification is a
    // representation detail and is not compared.
    friend bool operator==(const PuiseuxSeries &a, const PuiseuxSeries &b)
    {
        if (a.m_var != b.m_var || a.m_trunc != b.m_trunc || a.m_lower != b.m_lower
            || a.m_terms.size() != b.m_terms.size()) {
            return false;
        }
        auto it = b.m_terms.begin();
        for (const auto &[e, c] : a.m_terms) {
            if (e != it->first || !a.m_field.equal(c, it->second)) {
                return false;
            }
            ++it;
        }
        return true;
    }

private:
    void absorb_denominator(const Rational &e)
    {
        const unsigned long d = mpz_get_ui(e.get_den_mpz_t());
        if (m_ram % d != 0) {
            m_ram = lcm(m_ram, d);
        }
    }
    void require_leading() const
    {
        if (m_terms.empty()) {
            raise(errc::zero_divisor, "series has no leading term");
        }
        require_lower_unbounded("leading term");
    }

    template <CoefficientField G>
    friend PuiseuxSeries<G> substitute_reciprocal(const PuiseuxSeries<G> &);

    F m_field;
    Var m_var;
    unsigned long m_ram;
    container_type m_terms;
    ExtRational m_trunc = ExtRational::pos_inf();
    ExtRational m_lower = ExtRational::neg_inf();
};

using RationalSeries = PuiseuxSeries<RationalField>;
using ComplexSeries = PuiseuxSeries<ComplexField>;

namespace detail
{

template <CoefficientField F>
void require_same_var(const PuiseuxSeries<F> &f, const PuiseuxSeries<F> &g)
{
    if (f.var() != g.var()) {
        raise(errc::variable_mismatch, "series in " + std::string(var_name(f.var())) + " and "
                                           + std::string(var_name(g.var())));
    }
}

// Number of lattice points k >= 0 (step 1/ram) with k/ram < rel.
inline long lattice_count(const Rational &rel, unsigned long ram)
{
    if (sgn(rel) <= 0) {
        return 0;
    }
    const Rational scaled = rel * Rational(static_cast<long>(ram));
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return to_long(c);
}

} // namespace detail

template <CoefficientField F>
PuiseuxSeries<F> operator-(const PuiseuxSeries<F> &f)
{
    PuiseuxSeries<F> r(f.field(), f.var(), f.ram());
    r.restrict_below(f.lower());
    r.truncate(f.trunc());
    for (const auto &[e, c] : f.terms()) {
        r.add_term(e, typename F::value_type(-c));
    }
    return r;
}

// trunc(f + g) = min(trunc f, trunc g); exactness windows intersect.
template <CoefficientField F>
PuiseuxSeries<F> operator+(const PuiseuxSeries<F> &f, const PuiseuxSeries<F> &g)
{
    detail::require_same_var(f, g);
    PuiseuxSeries<F> r(f.field(), f.var(), lcm(f.ram(), g.ram()));
    r.restrict_below(max(f.lower(), g.lower()));
    r.truncate(min(f.trunc(), g.trunc()));
    for (const auto &[e, c] : f.terms()) {
        r.add_term(e, c);
    }
    for (const auto &[e, c] : g.terms()) {
        r.add_term(e, c);
    }
    return r;
}

template <CoefficientField F>
PuiseuxSeries<F> operator-(const PuiseuxSeries<F> &f, const PuiseuxSeries<F> &g)
{
    return f + (-g);
}

template <CoefficientField F>
PuiseuxSeries<F> scale(const typename F::value_type &c, const PuiseuxSeries<F> &f)
{
    PuiseuxSeries<F> r(f.field(), f.var(), f.ram());
    if (f.field().is_zero(c)) {
        return r;
    }
    r.restrict_below(f.lower());
    r.truncate(f.trunc());
    for (const auto &[e, a] : f.terms()) {
        r.add_term(e, typename F::value_type(c * a));
    }
    return r;
}

// Multiplication by the monomial v^e.
template <CoefficientField F>
PuiseuxSeries<F> shift(const PuiseuxSeries<F> &f, const Rational &e)
{
    PuiseuxSeries<F> r(f.field(), f.var(), f.ram());
    r.restrict_below(f.lower() + e);
    r.truncate(f.trunc() + e);
    for (const auto &[x, c] : f.terms()) {
        r.add_term(Rational(x + e), c);
    }
    return r;
}

// Copy with the truncation lowered to min(trunc, t).
template <CoefficientField F>
PuiseuxSeries<F> truncated(PuiseuxSeries<F> f, const ExtRational &t)
{
    f.truncate(t);
    return f;
}

// trunc(f g) = min(trunc f + ord g, trunc g + ord f), further capped at `cap`.
template <CoefficientField F>
PuiseuxSeries<F> mul(const PuiseuxSeries<F> &f, const PuiseuxSeries<F> &g,
                     const ExtRational &cap = ExtRational::pos_inf())
{
    detail::require_same_var(f, g);
    f.require_lower_unbounded("mul");
    g.require_lower_unbounded("mul");
    PuiseuxSeries<F> r(f.field(), f.var(), lcm(f.ram(), g.ram()));
    if (f.is_exact_zero() || g.is_exact_zero()) {
        return r;
    }
    const ExtRational vf = f.valuation_bound();
    const ExtRational vg = g.valuation_bound();
    ExtRational t = cap;
    if (vg.is_finite()) {
        t = min(t, f.trunc() + vg.value());
    }
    if (vf.is_finite()) {
        t = min(t, g.trunc() + vf.value());
    }
    r.truncate(t);
    for (const auto &[e1, c1] : f.terms()) {
        for (const auto &[e2, c2] : g.terms()) {
            Rational e(e1 + e2);
            if (!(ExtRational(e) < t)) {
                break;
            }
            r.add_term(e, typename F::value_type(c1 * c2));
        }
    }
    return r;
}

template <CoefficientField F>
PuiseuxSeries<F> operator*(const PuiseuxSeries<F> &f, const PuiseuxSeries<F> &g)
{
    return mul(f, g);
}

namespace detail
{

// f^e for a rational exponent e, with f = a v^l (1 + u). The unit part is
// expanded with the J.C.P. Miller recurrence
//     k P_k = sum_{i=1..k} ((e + 1) i - k) u_i P_{k-i},
// valid for any exponent in characteristic zero. The leading coefficient is
// a^e with principal-root semantics.
template <CoefficientField F>
PuiseuxSeries<F> unit_power(const PuiseuxSeries<F> &f, const Rational &e, const ExtRational &cap)
{
    using S = typename F::value_type;
    const F &field = f.field();
    f.require_lower_unbounded("pow");
    if (f.empty()) {
        if (sgn(e) > 0 && is_integer(e)) {
            // 0^m for m > 0: exactly zero only if f is exactly zero.
            PuiseuxSeries<F> r(field, f.var(), f.ram());
            if (f.trunc().is_finite()) {
                r.truncate(f.trunc() * e);
            }
            return r;
        }
        if (sgn(e) == 0) {
            return PuiseuxSeries<F>::one(field, f.var());
        }
        raise(errc::zero_divisor, "power of a series with no leading term");
    }
    if (sgn(e) == 0) {
        return PuiseuxSeries<F>::one(field, f.var());
    }

    const Rational l = f.leading_exponent();
    const S a = f.leading_coeff();
    const Rational le = l * e;
    const unsigned long ram = f.ram();

    if (f.size() == 1 && f.trunc().is_pos_inf()) {
        PuiseuxSeries<F> r(field, f.var(), lcm(ram, mpz_get_ui(le.get_den_mpz_t())));
        r.add_term(le, pow_rational(field, a, e));
        r.truncate(cap);
        return r;
    }

    // Relative truncation of the unit part.
    ExtRational rel = min(f.trunc() - l, cap - le);
    bool exact = false;
    if (rel.is_pos_inf()) {
        if (!(is_integer(e) && sgn(e) > 0)) {
            raise(errc::insufficient_precision, "an explicit truncation order is required for f^"
                                                    + to_string(e) + " of an exact series");
        }
        // Polynomial case: the expansion terminates.
        rel = ExtRational(Rational(e * (f.max_exponent() - l) + Rational(1, static_cast<long>(ram))));
        exact = true;
    }
    PuiseuxSeries<F> r(field, f.var(), lcm(ram, mpz_get_ui(le.get_den_mpz_t())));
    if (!exact) {
        r.truncate(rel + le);
    }
    if (!rel.is_finite() || sgn(rel.value()) <= 0) {
        return r;
    }

    const long count = lattice_count(rel.value(), ram);
    const Rational step(1, static_cast<long>(ram));
    std::vector<S> u(static_cast<std::size_t>(count), field.zero());
    const S inv_a = S(field.one() / a);
    for (const auto &[x, c] : f.terms()) {
        const Rational k = (x - l) * Rational(static_cast<long>(ram));
        const long idx = to_long(k);
        if (idx >= count) {
            break;
        }
        if (idx > 0) {
            u[static_cast<std::size_t>(idx)] = S(c * inv_a);
        }
    }
    std::vector<S> p(static_cast<std::size_t>(count), field.zero());
    if (count > 0) {
        p[0] = field.one();
    }
    const Rational e1 = e + 1;
    for (long k = 1; k < count; ++k) {
        S acc = field.zero();
        for (long i = 1; i <= k; ++i) {
            const auto &ui = u[static_cast<std::size_t>(i)];
            if (field.is_zero(ui)) {
                continue;
            }
            const Rational w = e1 * Rational(i) - Rational(k);
            if (sgn(w) == 0) {
                continue;
            }
            acc = S(acc + field.from_rational(w) * ui * p[static_cast<std::size_t>(k - i)]);
        }
        p[static_cast<std::size_t>(k)] = S(acc * field.from_rational(Rational(1, k)));
    }
    const S lead = pow_rational(field, a, e);
    for (long k = 0; k < count; ++k) {
        const auto &pk = p[static_cast<std::size_t>(k)];
        if (!field.is_zero(pk)) {
            r.add_term(Rational(le + step * Rational(k)), S(lead * pk));
        }
    }
    return r;
}

} // namespace detail

// g with f g = 1 below trunc(g) = min(cap, trunc(f) - 2 ord(f)).
template <CoefficientField F>
PuiseuxSeries<F> mul_inverse(const PuiseuxSeries<F> &f, const ExtRational &cap)
{
    if (f.empty()) {
        raise(errc::zero_divisor, "inverse of a series with no leading term");
    }
    return detail::unit_power(f, Rational(-1), cap);
}

// f^m. Negative powers of exact series need a finite cap.
template <CoefficientField F>
PuiseuxSeries<F> pow_int(const PuiseuxSeries<F> &f, long m, const ExtRational &cap = ExtRational::pos_inf())
{
    if (m < 0 && f.empty()) {
        raise(errc::zero_divisor, "negative power of a series with no leading term");
    }
    auto r = detail::unit_power(f, Rational(m), cap);
    r.truncate(cap);
    return r;
}

// c v^e -> c w^{-e} with w = 1/v; the exactness window (lo, hi) becomes (-hi, -lo).
template <CoefficientField F>
PuiseuxSeries<F> substitute_reciprocal(const PuiseuxSeries<F> &f)
{
    PuiseuxSeries<F> r(f.field(), reciprocal(f.var()), f.ram());
    r.m_trunc = -f.lower();
    r.m_lower = -f.trunc();
    for (const auto &[e, c] : f.terms()) {
        r.m_terms.emplace(Rational(-e), c);
    }
    return r;
}

// Coefficientwise agreement (field equality) for all exponents below t.
template <CoefficientField F>
bool agree_below(const PuiseuxSeries<F> &f, const PuiseuxSeries<F> &g, const ExtRational &t)
{
    if (f.var() != g.var()) {
        return false;
    }
    const auto &field = f.field();
    const auto zero = field.zero();
    const auto below = [&](const Rational &e) { return ExtRational(e) < t; };
    for (const auto &[e, c] : f.terms()) {
        if (!below(e)) {
            break;
        }
        const auto it = g.terms().find(e);
        if (!field.equal(c, it == g.terms().end() ? zero : it->second)) {
            return false;
        }
    }
    for (const auto &[e, c] : g.terms()) {
        if (!below(e)) {
            break;
        }
        if (f.terms().find(e) == f.terms().end() && !field.is_zero(c)) {
            return false;
        }
    }
    return true;
}

// Largest coefficient deviation below t (for tolerance-based acceptance checks).
template <CoefficientField F>
double max_deviation_below(const PuiseuxSeries<F> &f, const PuiseuxSeries<F> &g, const ExtRational &t)
{
    const auto &field = f.field();
    const auto zero = field.zero();
    double worst = 0.0;
    std::map<Rational, int> exps;
    for (const auto &[e, c] : f.terms()) {
        exps.emplace(e, 0);
    }
    for (const auto &[e, c] : g.terms()) {
        exps.emplace(e, 0);
    }
    for (const auto &[e, unused] : exps) {
        if (!(ExtRational(e) < t)) {
            break;
        }
        const auto fi = f.terms().find(e);
        const auto gi = g.terms().find(e);
        const double d = field.abs_diff(fi == f.terms().end() ? zero : fi->second,
                                        gi == g.terms().end() ? zero : gi->second);
        worst = d > worst ? d : worst;
    }
    return worst;
}

} // namespace laft

#endif
