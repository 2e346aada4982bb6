#include <laft/scalar_field.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include <laft/error.hpp>

namespace laft
{

namespace
{

// Exact n-th root of a nonnegative integer, if any.
std::optional<Integer> exact_root(const Integer &z, unsigned long n)
{
    Integer r;
    if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), n) == 0) {
        return std::nullopt;
    }
    return r;
}

[[noreturn]] void no_root(const std::string &x, unsigned long n)
{
    raise(errc::root_unavailable,
          "no rational " + std::to_string(n) + "-th root of " + x + " (try the complex backend)");
}

} // namespace

Rational RationalField::from_literal(const CoefficientLiteral &lit) const
{
    switch (lit.kind) {
        case CoefficientLiteral::form::rational:
        case CoefficientLiteral::form::decimal:
            return lit.exact;
        case CoefficientLiteral::form::complex:
            break;
    }
    raise(errc::invalid_argument, "complex coefficient requires the complex backend");
}

Rational RationalField::nth_root(const Rational &x, unsigned long n) const
{
    if (n == 0) {
        raise(errc::invalid_argument, "0-th root");
    }
    if (n == 1 || sgn(x) == 0) {
        return x;
    }
    const bool negative = sgn(x) < 0;
    if (negative && n % 2 == 0) {
        no_root(to_string(x), n);
    }
    const Integer num = negative ? Integer(-x.get_num()) : Integer(x.get_num());
    const auto rn = exact_root(num, n);
    const auto rd = exact_root(Integer(x.get_den()), n);
    if (!rn || !rd) {
        no_root(to_string(x), n);
    }
    Rational r(*rn, *rd);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

Rational RationalField::unit_root_power(unsigned long n, long k) const
{
    if (n == 0) {
        raise(errc::invalid_argument, "root of unity of order 0");
    }
    long kk = k % static_cast<long>(n);
    if (kk < 0) {
        kk += static_cast<long>(n);
    }
    if (kk == 0) {
        return Rational(1);
    }
    if (2 * kk == static_cast<long>(n)) {
        return Rational(-1);
    }
    raise(errc::root_unavailable, "primitive root of unity of order " + std::to_string(n / std::gcd(n, static_cast<unsigned long>(kk)))
                                      + " is not rational (try the complex backend)");
}

std::optional<long> RationalField::integer_offset(const Rational &x, long bound) const
{
    if (!is_integer(x)) {
        return std::nullopt;
    }
    const Integer v(x.get_num());
    if (!v.fits_slong_p()) {
        return std::nullopt;
    }
    const long t = v.get_si();
    if (t > bound || t < -bound) {
        return std::nullopt;
    }
    return t;
}

double RationalField::abs_diff(const Rational &a, const Rational &b) const
{
    const Rational d = a - b;
    return std::fabs(d.get_d());
}

ComplexField::ComplexField(mpfr_prec_t prec, long tolerance_bits)
    : m_prec(prec), m_tol_bits(tolerance_bits > 0 ? tolerance_bits : static_cast<long>(prec) / 2)
{
    if (prec < MPFR_PREC_MIN || prec > 1 << 20) {
        raise(errc::invalid_argument, "unsupported precision " + std::to_string(prec));
    }
}

BigComplex ComplexField::from_literal(const CoefficientLiteral &lit) const
{
    switch (lit.kind) {
        case CoefficientLiteral::form::rational:
            return BigComplex(lit.exact, m_prec);
        case CoefficientLiteral::form::decimal:
            return BigComplex(BigFloat::parse(lit.real_text, m_prec), BigFloat(m_prec));
        case CoefficientLiteral::form::complex:
            return BigComplex(BigFloat::parse(lit.real_text, m_prec), BigFloat::parse(lit.imag_text, m_prec));
    }
    raise(errc::internal_error, "unknown literal form");
}

bool ComplexField::is_zero(const BigComplex &x) const
{
    return compare(x.norm(), exp2_int(-m_tol_bits, m_prec)) <= 0;
}

bool ComplexField::equal(const BigComplex &a, const BigComplex &b) const
{
    const BigFloat diff = (a - b).norm();
    BigFloat scale(1L, m_prec);
    const BigFloat na = a.norm();
    const BigFloat nb = b.norm();
    if (compare(na, scale) > 0) {
        scale = na;
    }
    if (compare(nb, scale) > 0) {
        scale = nb;
    }
    return compare(diff, scale * exp2_int(-m_tol_bits, m_prec)) <= 0;
}

std::optional<long> ComplexField::integer_offset(const BigComplex &x, long bound) const
{
    const BigFloat eps = exp2_int(-m_tol_bits, m_prec);
    if (compare(abs(x.imag()), eps) > 0) {
        return std::nullopt;
    }
    const BigFloat t = round_nearest(x.real());
    if (compare(abs(x.real() - t), eps) > 0) {
        return std::nullopt;
    }
    if (!mpfr_fits_slong_p(t.get(), MPFR_RNDN)) {
        return std::nullopt;
    }
    const long v = mpfr_get_si(t.get(), MPFR_RNDN);
    if (v > bound || v < -bound) {
        return std::nullopt;
    }
    return v;
}

int ComplexField::digits() const noexcept
{
    // floor(prec * log10(2)), at least a handful.
    return std::max(6, static_cast<int>(static_cast<double>(m_prec) * 0.30102999566398120));
}

std::string ComplexField::format(const BigComplex &x) const
{
    // Values below the zero tolerance print as 0 so output is stable.
    const BigFloat eps = exp2_int(-m_tol_bits, m_prec);
    const auto part = [&](const BigFloat &v) {
        if (compare(abs(v), eps) <= 0) {
            return std::string("0");
        }
        return v.to_string(digits());
    };
    return "(" + part(x.real()) + "," + part(x.imag()) + ")";
}

double ComplexField::abs_diff(const BigComplex &a, const BigComplex &b) const
{
    return (a - b).norm().to_double();
}

int ComplexField::display_compare(const BigComplex &a, const BigComplex &b) const
{
    const BigFloat eps = exp2_int(-m_tol_bits, m_prec);
    const auto cmp_part = [&](const BigFloat &x, const BigFloat &y) {
        if (compare(abs(x - y), eps) <= 0) {
            return 0;
        }
        return compare(x, y) < 0 ? -1 : 1;
    };
    if (const int c = cmp_part(a.real(), b.real()); c != 0) {
        return c;
    }
    return cmp_part(a.imag(), b.imag());
}

} // namespace laft
