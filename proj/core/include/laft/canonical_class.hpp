#ifndef LAFT_CANONICAL_CLASS_HPP
#define LAFT_CANONICAL_CLASS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <laft/error.hpp>
#include <laft/puiseux_series.hpp>

namespace laft
{

// Integer window for the (1/q)Z coset search on non-rational constants.
inline constexpr long coset_search_bound = 64;

// An element of R_q: a series with exponents <= 0 modulo (1/q)Z constants,
// compared up to the Galois action z^{1/q} -> eta z^{1/q}. The stored rep is
// exact; a rational constant term is reduced into [0, 1/q).
template <CoefficientField F>
class CanonicalClass
{
public:
    using series_type = PuiseuxSeries<F>;
    using scalar_type = typename F::value_type;

    unsigned long q() const noexcept
    {
        return m_q;
    }
    const series_type &rep() const noexcept
    {
        return m_rep;
    }
    Var var() const noexcept
    {
        return m_rep.var();
    }
    const F &field() const noexcept
    {
        return m_rep.field();
    }

    // Coefficient at n/q.
    scalar_type coeff_at(long n) const
    {
        return m_rep.coeff(make_rational(n, static_cast<long>(m_q)));
    }

    template <CoefficientField G>
    friend CanonicalClass<G> normalize(const PuiseuxSeries<G> &, unsigned long);
    template <CoefficientField G>
    friend CanonicalClass<G> galois_twist(const CanonicalClass<G> &, long);

private:
    CanonicalClass(unsigned long q, series_type rep) : m_q(q), m_rep(std::move(rep)) {}

    unsigned long m_q;
    series_type m_rep;
};

namespace detail
{

inline long scaled_index(const Rational &e, unsigned long q)
{
    return to_long(Rational(e * Rational(static_cast<long>(q))));
}

} // namespace detail

template <CoefficientField F>
CanonicalClass<F> normalize(const PuiseuxSeries<F> &f, unsigned long q)
{
    using S = typename F::value_type;
    if (q == 0) {
        raise(errc::invalid_argument, "ramification must be positive");
    }
    f.require_lower_unbounded("normalize");
    if (!(ExtRational(0L) < f.trunc())) {
        raise(errc::insufficient_precision, "class needs the series exact through exponent 0, trunc is "
                                                + to_string(f.trunc()));
    }
    const auto &field = f.field();
    PuiseuxSeries<F> rep(field, f.var(), q);
    for (const auto &[e, c] : f.terms()) {
        if (!is_integer(Rational(e * Rational(static_cast<long>(q))))) {
            raise(errc::invalid_argument,
                  "exponent " + to_string(e) + " is not in (1/" + std::to_string(q) + ")Z");
        }
        if (sgn(e) > 0) {
            break;
        }
        if (sgn(e) == 0) {
            if (const auto b = field.as_rational(c)) {
                // b mod 1/q into [0, 1/q).
                const Rational bq = *b * Rational(static_cast<long>(q));
                const Rational reduced = (bq - Rational(floor(bq))) / Rational(static_cast<long>(q));
                rep.add_term(e, field.from_rational(reduced));
                continue;
            }
        }
        rep.add_term(e, S(c));
    }
    return CanonicalClass<F>(q, std::move(rep));
}

// Coefficient at n/q multiplied by eta^{n k}, eta = exp(2 pi i / q).
template <CoefficientField F>
CanonicalClass<F> galois_twist(const CanonicalClass<F> &c, long k)
{
    using S = typename F::value_type;
    const auto &field = c.field();
    PuiseuxSeries<F> rep(field, c.var(), c.q());
    for (const auto &[e, a] : c.rep().terms()) {
        const long n = detail::scaled_index(e, c.q());
        rep.add_term(e, S(a * field.unit_root_power(c.q(), n * k)));
    }
    return CanonicalClass<F>(c.q(), std::move(rep));
}

namespace detail
{

// Termwise equality of nonconstant parts, constants compared modulo (1/q)Z.
template <CoefficientField F>
bool same_up_to_coset(const CanonicalClass<F> &a, const CanonicalClass<F> &b)
{
    using S = typename F::value_type;
    const auto &field = a.field();
    const Rational zero(0);
    const auto nonconstant_equal = [&](const auto &x, const auto &y) {
        for (const auto &[e, c] : x.rep().terms()) {
            if (e == zero) {
                continue;
            }
            const auto it = y.rep().terms().find(e);
            if (it == y.rep().terms().end() || !field.equal(c, it->second)) {
                return false;
            }
        }
        return true;
    };
    if (!nonconstant_equal(a, b) || !nonconstant_equal(b, a)) {
        return false;
    }
    const auto ca = a.rep().coeff(zero);
    const auto cb = b.rep().coeff(zero);
    const S delta = S((ca - cb) * field.from_rational(Rational(static_cast<long>(a.q()))));
    return field.integer_offset(delta, coset_search_bound).has_value();
}

} // namespace detail

// Same q and some twist of c1 matching c2, constants modulo (1/q)Z. Twists
// whose roots of unity the backend cannot represent are skipped.
template <CoefficientField F>
bool classes_equal(const CanonicalClass<F> &c1, const CanonicalClass<F> &c2)
{
    if (c1.var() != c2.var()) {
        raise(errc::variable_mismatch, "classes in " + std::string(var_name(c1.var())) + " and "
                                           + std::string(var_name(c2.var())));
    }
    if (c1.q() != c2.q()) {
        return false;
    }
    for (long k = 0; k < static_cast<long>(c1.q()); ++k) {
        std::optional<CanonicalClass<F>> t;
        try {
            t = galois_twist(c1, k);
        } catch (const error &e) {
            if (e.code() == errc::root_unavailable) {
                continue;
            }
            throw;
        }
        if (detail::same_up_to_coset(*t, c2)) {
            return true;
        }
    }
    return false;
}

// gcd(q, {n != 0 : coefficient at n/q nonzero}) == 1.
template <CoefficientField F>
bool is_irreducible(const CanonicalClass<F> &c)
{
    unsigned long g = c.q();
    for (const auto &[e, a] : c.rep().terms()) {
        const long n = detail::scaled_index(e, c.q());
        if (n != 0) {
            g = gcd(g, static_cast<unsigned long>(n < 0 ? -n : n));
        }
    }
    return g == 1;
}

template <CoefficientField F>
Rational slope(const CanonicalClass<F> &c)
{
    const auto &terms = c.rep().terms();
    if (terms.empty() || sgn(terms.begin()->first) >= 0) {
        return Rational(0);
    }
    return Rational(-terms.begin()->first);
}

// s with ord(rep) = -s/q (0 when there is no negative exponent).
template <CoefficientField F>
long slope_numerator(const CanonicalClass<F> &c)
{
    return to_long(Rational(slope(c) * Rational(static_cast<long>(c.q()))));
}

// The zero class: no nonconstant terms and a constant in (1/q)Z.
template <CoefficientField F>
bool is_zero_class(const CanonicalClass<F> &c)
{
    const auto &terms = c.rep().terms();
    if (terms.empty()) {
        return true;
    }
    if (terms.size() > 1 || sgn(terms.begin()->first) != 0) {
        return false;
    }
    const auto &field = c.field();
    const auto scaled = typename F::value_type(terms.begin()->second * field.from_rational(Rational(static_cast<long>(c.q()))));
    return field.integer_offset(scaled, coset_search_bound).has_value();
}

// Among the representable twists, the one whose coefficients are
// lexicographically least by ascending exponent (display only).
template <CoefficientField F>
CanonicalClass<F> display_representative(const CanonicalClass<F> &c)
{
    const auto &field = c.field();
    CanonicalClass<F> best = c;
    const auto less = [&](const CanonicalClass<F> &a, const CanonicalClass<F> &b) {
        auto ia = a.rep().terms().begin();
        auto ib = b.rep().terms().begin();
        for (; ia != a.rep().terms().end() && ib != b.rep().terms().end(); ++ia, ++ib) {
            if (ia->first != ib->first) {
                return false; // twists share their support; unreachable in practice
            }
            const int d = field.display_compare(ia->second, ib->second);
            if (d != 0) {
                return d < 0;
            }
        }
        return false;
    };
    for (long k = 1; k < static_cast<long>(c.q()); ++k) {
        try {
            auto t = galois_twist(c, k);
            if (less(t, best)) {
                best = std::move(t);
            }
        } catch (const error &e) {
            if (e.code() != errc::root_unavailable) {
                throw;
            }
        }
    }
    return best;
}

template <CoefficientField F>
CanonicalClass<F> with_var(const CanonicalClass<F> &c, Var v)
{
    return normalize(c.rep().with_var(v), c.q());
}

} // namespace laft

#endif
