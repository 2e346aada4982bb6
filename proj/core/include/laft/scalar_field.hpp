#ifndef LAFT_SCALAR_FIELD_HPP
#define LAFT_SCALAR_FIELD_HPP

#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include <laft/big_complex.hpp>
#include <laft/error.hpp>
#include <laft/rational.hpp>

namespace laft
{

// A coefficient literal as it appears in the text grammar, before it is
// interpreted by a particular field.
struct CoefficientLiteral {
    enum class form { rational, decimal, complex };

    form kind = form::rational;
    Rational exact;       // rational, and decimal when exactly representable
    std::string real_text; // decimal / complex real part
    std::string imag_text; // complex imaginary part
};

// Fields are cheap value objects carrying backend configuration (e.g.
// precision). Series store their field; scalars carry only their value.
template <typename F>
concept CoefficientField = std::copy_constructible<F> && requires(const F &f, const typename F::value_type &a,
                                                                    const Rational &q, unsigned long n, long k) {
    typename F::value_type;
    { f.name() } -> std::convertible_to<std::string_view>;
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_rational(q) } -> std::same_as<typename F::value_type>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.equal(a, a) } -> std::same_as<bool>;
    { f.nth_root(a, n) } -> std::same_as<typename F::value_type>;
    { f.unit_root_power(n, k) } -> std::same_as<typename F::value_type>;
    { f.as_rational(a) } -> std::same_as<std::optional<Rational>>;
    { f.integer_offset(a, k) } -> std::same_as<std::optional<long>>;
    { f.format(a) } -> std::same_as<std::string>;
    { f.abs_diff(a, a) } -> std::same_as<double>;
    { f.display_compare(a, a) } -> std::same_as<int>;
    { a + a } -> std::convertible_to<typename F::value_type>;
    { a - a } -> std::convertible_to<typename F::value_type>;
    { a * a } -> std::convertible_to<typename F::value_type>;
    { a / a } -> std::convertible_to<typename F::value_type>;
    { -a } -> std::convertible_to<typename F::value_type>;
};

// Exact arithmetic over Q. Roots exist only when they are rational; roots of
// unity only for n in {1, 2}.
class RationalField
{
public:
    using value_type = Rational;

    std::string_view name() const noexcept
    {
        return "rational";
    }
    Rational zero() const
    {
        return Rational(0);
    }
    Rational one() const
    {
        return Rational(1);
    }
    Rational from_rational(const Rational &q) const
    {
        return q;
    }
    Rational from_literal(const CoefficientLiteral &) const;

    bool is_zero(const Rational &x) const
    {
        return sgn(x) == 0;
    }
    bool equal(const Rational &a, const Rational &b) const
    {
        return a == b;
    }

    // Positive root for x > 0, the real root for odd n and x < 0.
    Rational nth_root(const Rational &x, unsigned long n) const;
    // exp(2*pi*i*k/n) when it is rational (i.e. +-1).
    Rational unit_root_power(unsigned long n, long k) const;
    Rational root_of_unity(unsigned long n) const
    {
        return unit_root_power(n, 1);
    }

    std::optional<Rational> as_rational(const Rational &x) const
    {
        return x;
    }
    std::optional<long> integer_offset(const Rational &x, long bound) const;

    std::string format(const Rational &x) const
    {
        return to_string(x);
    }
    double abs_diff(const Rational &a, const Rational &b) const;
    int display_compare(const Rational &a, const Rational &b) const
    {
        return cmp(a, b);
    }

    friend bool operator==(const RationalField &, const RationalField &) = default;
};

// Big-float complex numbers at a fixed binary precision. Equality and zero
// tests use a relative epsilon of 2^-(tolerance bits), by default half the
// precision.
class ComplexField
{
public:
    using value_type = BigComplex;

    explicit ComplexField(mpfr_prec_t prec = 256, long tolerance_bits = 0);

    std::string_view name() const noexcept
    {
        return "complex";
    }
    mpfr_prec_t precision() const noexcept
    {
        return m_prec;
    }
    long tolerance_bits() const noexcept
    {
        return m_tol_bits;
    }

    BigComplex zero() const
    {
        return BigComplex(m_prec);
    }
    BigComplex one() const
    {
        return BigComplex(Rational(1), m_prec);
    }
    BigComplex from_rational(const Rational &q) const
    {
        return BigComplex(q, m_prec);
    }
    BigComplex from_literal(const CoefficientLiteral &) const;
    BigComplex make(const BigFloat &re, const BigFloat &im) const
    {
        return BigComplex(re, im);
    }

    bool is_zero(const BigComplex &x) const;
    bool equal(const BigComplex &a, const BigComplex &b) const;

    BigComplex nth_root(const BigComplex &x, unsigned long n) const
    {
        return principal_root(x, n);
    }
    BigComplex unit_root_power(unsigned long n, long k) const
    {
        return unit_root(n, k, m_prec);
    }
    BigComplex root_of_unity(unsigned long n) const
    {
        return unit_root(n, 1, m_prec);
    }

    std::optional<Rational> as_rational(const BigComplex &) const
    {
        return std::nullopt;
    }
    std::optional<long> integer_offset(const BigComplex &x, long bound) const;

    // "(re,im)" with enough significant digits for the precision.
    std::string format(const BigComplex &x) const;
    double abs_diff(const BigComplex &a, const BigComplex &b) const;
    int display_compare(const BigComplex &a, const BigComplex &b) const;

    int digits() const noexcept;

    friend bool operator==(const ComplexField &, const ComplexField &) = default;

private:
    mpfr_prec_t m_prec;
    long m_tol_bits;
};

static_assert(CoefficientField<RationalField>);
static_assert(CoefficientField<ComplexField>);

// x^e with principal-root semantics: nth_root(x, den(e))^num(e).
template <CoefficientField F>
typename F::value_type pow_rational(const F &field, const typename F::value_type &x, const Rational &e)
{
    using S = typename F::value_type;
    const unsigned long den = mpz_get_ui(e.get_den_mpz_t());
    const long num = to_long(Integer(e.get_num()));
    if (num < 0 && field.is_zero(x)) {
        throw error(errc::zero_divisor, "negative power of zero");
    }
    S base = den == 1 ? S(x) : field.nth_root(x, den);
    if (num < 0) {
        base = S(field.one() / base);
    }
    unsigned long n = static_cast<unsigned long>(num < 0 ? -num : num);
    S result = field.one();
    while (n != 0) {
        if (n & 1u) {
            result = S(result * base);
        }
        n >>= 1;
        if (n != 0) {
            base = S(base * base);
        }
    }
    return result;
}

} // namespace laft

#endif
