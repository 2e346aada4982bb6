#ifndef LAFT_BIG_COMPLEX_HPP
#define LAFT_BIG_COMPLEX_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <mpfr.h>

#include <laft/rational.hpp>

namespace laft
{

// RAII owner of an mpfr_t. Precision travels with the value; binary
// operations produce a result at the larger of the two precisions.
class BigFloat
{
public:
    explicit BigFloat(mpfr_prec_t prec = 256);
    BigFloat(const Rational &q, mpfr_prec_t prec);
    BigFloat(long v, mpfr_prec_t prec);
    BigFloat(const BigFloat &);
    BigFloat(BigFloat &&) noexcept;
    BigFloat &operator=(const BigFloat &);
    BigFloat &operator=(BigFloat &&) noexcept;
    ~BigFloat();

    // Decimal or scientific notation accepted by mpfr_set_str.
    static BigFloat parse(std::string_view text, mpfr_prec_t prec);

    mpfr_prec_t precision() const noexcept
    {
        return mpfr_get_prec(m_value);
    }
    mpfr_srcptr get() const noexcept
    {
        return m_value;
    }
    mpfr_ptr get() noexcept
    {
        return m_value;
    }

    int sign() const noexcept
    {
        return mpfr_sgn(m_value);
    }
    bool is_zero() const noexcept
    {
        return mpfr_zero_p(m_value) != 0;
    }
    double to_double() const noexcept
    {
        return mpfr_get_d(m_value, MPFR_RNDN);
    }

    // Shortest round-tripping-ish decimal text with the given significant digits.
    std::string to_string(int digits) const;

    friend BigFloat operator+(const BigFloat &, const BigFloat &);
    friend BigFloat operator-(const BigFloat &, const BigFloat &);
    friend BigFloat operator*(const BigFloat &, const BigFloat &);
    friend BigFloat operator/(const BigFloat &, const BigFloat &);
    friend BigFloat operator-(const BigFloat &);

    friend int compare(const BigFloat &a, const BigFloat &b)
    {
        return mpfr_cmp(a.m_value, b.m_value);
    }

private:
    mpfr_t m_value;
};

BigFloat abs(const BigFloat &);
BigFloat hypot(const BigFloat &, const BigFloat &);
BigFloat atan2(const BigFloat &y, const BigFloat &x);
BigFloat exp2_int(long e, mpfr_prec_t prec);
BigFloat round_nearest(const BigFloat &);

// Complex number with BigFloat parts.
class BigComplex
{
public:
    explicit BigComplex(mpfr_prec_t prec = 256) : m_re(prec), m_im(prec) {}
    BigComplex(BigFloat re, BigFloat im) : m_re(std::move(re)), m_im(std::move(im)) {}
    BigComplex(const Rational &q, mpfr_prec_t prec) : m_re(q, prec), m_im(prec) {}

    const BigFloat &real() const noexcept
    {
        return m_re;
    }
    const BigFloat &imag() const noexcept
    {
        return m_im;
    }
    mpfr_prec_t precision() const noexcept
    {
        return m_re.precision() > m_im.precision() ? m_re.precision() : m_im.precision();
    }

    BigFloat norm() const; // |x|

    friend BigComplex operator+(const BigComplex &, const BigComplex &);
    friend BigComplex operator-(const BigComplex &, const BigComplex &);
    friend BigComplex operator*(const BigComplex &, const BigComplex &);
    friend BigComplex operator/(const BigComplex &, const BigComplex &);
    friend BigComplex operator-(const BigComplex &);

    BigComplex &operator+=(const BigComplex &o)
    {
        return *this = *this + o;
    }
    BigComplex &operator-=(const BigComplex &o)
    {
        return *this = *this - o;
    }
    BigComplex &operator*=(const BigComplex &o)
    {
        return *this = *this * o;
    }

private:
    BigFloat m_re;
    BigFloat m_im;
};

// Principal n-th root: |x|^(1/n) * exp(i*arg(x)/n), arg in (-pi, pi].
BigComplex principal_root(const BigComplex &x, unsigned long n);

// exp(2*pi*i*k/n).
BigComplex unit_root(unsigned long n, long k, mpfr_prec_t prec);

std::ostream &operator<<(std::ostream &, const BigComplex &);

} // namespace laft

#endif
