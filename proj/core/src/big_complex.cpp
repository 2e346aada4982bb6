#include <laft/big_complex.hpp>

#include <algorithm>
#include <string>

#include <laft/error.hpp>

namespace laft
{

namespace
{

mpfr_prec_t join(const BigFloat &a, const BigFloat &b)
{
    return std::max(a.precision(), b.precision());
}

} // namespace

BigFloat::BigFloat(mpfr_prec_t prec)
{
    mpfr_init2(m_value, prec);
    mpfr_set_zero(m_value, 1);
}

BigFloat::BigFloat(const Rational &q, mpfr_prec_t prec)
{
    mpfr_init2(m_value, prec);
    mpfr_set_q(m_value, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec)
{
    mpfr_init2(m_value, prec);
    mpfr_set_si(m_value, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat &other)
{
    mpfr_init2(m_value, other.precision());
    mpfr_set(m_value, other.m_value, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&other) noexcept
{
    // Leave the moved-from object valid (and cheap) at minimal precision.
    mpfr_init2(m_value, MPFR_PREC_MIN);
    mpfr_swap(m_value, other.m_value);
}

BigFloat &BigFloat::operator=(const BigFloat &other)
{
    if (this != &other) {
        mpfr_set_prec(m_value, other.precision());
        mpfr_set(m_value, other.m_value, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&other) noexcept
{
    mpfr_swap(m_value, other.m_value);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(m_value);
}

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t prec)
{
    BigFloat r(prec);
    const std::string s(text);
    if (s.empty() || mpfr_set_str(r.m_value, s.c_str(), 10, MPFR_RNDN) != 0) {
        raise(errc::invalid_argument, "not a decimal literal: '" + s + "'");
    }
    return r;
}

std::string BigFloat::to_string(int digits) const
{
    if (is_zero()) {
        return "0";
    }
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, m_value);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

BigFloat operator+(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(join(a, b));
    mpfr_add(r.m_value, a.m_value, b.m_value, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(join(a, b));
    mpfr_sub(r.m_value, a.m_value, b.m_value, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(join(a, b));
    mpfr_mul(r.m_value, a.m_value, b.m_value, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat &a, const BigFloat &b)
{
    if (b.is_zero()) {
        raise(errc::zero_divisor, "division by zero");
    }
    BigFloat r(join(a, b));
    mpfr_div(r.m_value, a.m_value, b.m_value, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat &a)
{
    BigFloat r(a.precision());
    mpfr_neg(r.m_value, a.m_value, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat &a)
{
    BigFloat r(a.precision());
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(join(a, b));
    mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat &y, const BigFloat &x)
{
    BigFloat r(join(y, x));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat exp2_int(long e, mpfr_prec_t prec)
{
    BigFloat r(1L, prec);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

BigFloat round_nearest(const BigFloat &a)
{
    BigFloat r(a.precision());
    mpfr_round(r.get(), a.get());
    return r;
}

BigFloat BigComplex::norm() const
{
    return hypot(m_re, m_im);
}

BigComplex operator+(const BigComplex &a, const BigComplex &b)
{
    return BigComplex(a.m_re + b.m_re, a.m_im + b.m_im);
}

BigComplex operator-(const BigComplex &a, const BigComplex &b)
{
    return BigComplex(a.m_re - b.m_re, a.m_im - b.m_im);
}

BigComplex operator*(const BigComplex &a, const BigComplex &b)
{
    return BigComplex(a.m_re * b.m_re - a.m_im * b.m_im, a.m_re * b.m_im + a.m_im * b.m_re);
}

BigComplex operator/(const BigComplex &a, const BigComplex &b)
{
    // Smith's algorithm keeps the intermediate magnitudes bounded.
    if (b.m_re.is_zero() && b.m_im.is_zero()) {
        raise(errc::zero_divisor, "complex division by zero");
    }
    if (compare(abs(b.m_re), abs(b.m_im)) >= 0) {
        const BigFloat t = b.m_im / b.m_re;
        const BigFloat d = b.m_re + b.m_im * t;
        return BigComplex((a.m_re + a.m_im * t) / d, (a.m_im - a.m_re * t) / d);
    }
    const BigFloat t = b.m_re / b.m_im;
    const BigFloat d = b.m_re * t + b.m_im;
    return BigComplex((a.m_re * t + a.m_im) / d, (a.m_im * t - a.m_re) / d);
}

BigComplex operator-(const BigComplex &a)
{
    return BigComplex(-a.m_re, -a.m_im);
}

BigComplex principal_root(const BigComplex &x, unsigned long n)
{
    if (n == 0) {
        raise(errc::invalid_argument, "0-th root");
    }
    const mpfr_prec_t prec = x.precision();
    if (x.real().is_zero() && x.imag().is_zero()) {
        return BigComplex(prec);
    }
    if (n == 1) {
        return x;
    }
    BigFloat modulus = x.norm();
    BigFloat root_modulus(prec);
    mpfr_rootn_ui(root_modulus.get(), modulus.get(), n, MPFR_RNDN);
    // A signed zero imaginary part must not flip a negative real onto -pi.
    const BigFloat im = x.imag().is_zero() ? BigFloat(prec) : x.imag();
    BigFloat angle = atan2(im, x.real());
    mpfr_div_ui(angle.get(), angle.get(), n, MPFR_RNDN);
    BigFloat s(prec), c(prec);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    return BigComplex(root_modulus * c, root_modulus * s);
}

BigComplex unit_root(unsigned long n, long k, mpfr_prec_t prec)
{
    if (n == 0) {
        raise(errc::invalid_argument, "root of unity of order 0");
    }
    long kk = k % static_cast<long>(n);
    if (kk < 0) {
        kk += static_cast<long>(n);
    }
    if (kk == 0) {
        return BigComplex(Rational(1), prec);
    }
    // Exact values where they exist avoid spurious rounding in twists.
    if (2 * kk == static_cast<long>(n)) {
        return BigComplex(Rational(-1), prec);
    }
    if (4 * kk == static_cast<long>(n)) {
        return BigComplex(BigFloat(prec), BigFloat(1L, prec));
    }
    if (4 * kk == 3 * static_cast<long>(n)) {
        return BigComplex(BigFloat(prec), BigFloat(-1L, prec));
    }
    BigFloat angle(prec);
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_si(angle.get(), angle.get(), 2 * kk, MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), n, MPFR_RNDN);
    BigFloat s(prec), c(prec);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    return BigComplex(c, s);
}

std::ostream &operator<<(std::ostream &os, const BigComplex &x)
{
    return os << '(' << x.real().to_string(20) << ',' << x.imag().to_string(20) << ')';
}

} // namespace laft
