#include <laft/rational.hpp>

#include <limits>
#include <numeric>

#include <laft/error.hpp>

namespace laft
{

Rational make_rational(long num, long den)
{
    if (den == 0) {
        raise(errc::zero_divisor, "rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &r)
{
    return r.get_str(10);
}

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const auto num_text = s.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        raise(errc::invalid_argument, "not a rational literal: '" + std::string(text) + "'");
    }
    Integer num(std::string(num_text), 10);
    Integer den(std::string(den_text), 10);
    if (den == 0) {
        raise(errc::invalid_argument, "zero denominator in '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

bool is_integer(const Rational &r)
{
    return r.get_den() == 1;
}

Integer floor(const Rational &r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

long to_long(const Integer &z)
{
    if (!z.fits_slong_p()) {
        raise(errc::internal_error, "integer out of range: " + z.get_str());
    }
    return z.get_si();
}

long to_long(const Rational &r)
{
    if (!is_integer(r)) {
        raise(errc::internal_error, "expected an integer, got " + to_string(r));
    }
    return to_long(Integer(r.get_num()));
}

unsigned long gcd(unsigned long a, unsigned long b)
{
    return std::gcd(a, b);
}

unsigned long lcm(unsigned long a, unsigned long b)
{
    return std::lcm(a, b);
}

const Rational &ExtRational::value() const
{
    if (m_kind != kind::finite) {
        raise(errc::internal_error, "value() of an infinite order");
    }
    return m_value;
}

bool operator==(const ExtRational &a, const ExtRational &b)
{
    if (a.m_kind != b.m_kind) {
        return false;
    }
    return a.m_kind != ExtRational::kind::finite || a.m_value == b.m_value;
}

std::strong_ordering operator<=>(const ExtRational &a, const ExtRational &b)
{
    if (a.m_kind != b.m_kind) {
        return static_cast<int>(a.m_kind) <=> static_cast<int>(b.m_kind);
    }
    if (a.m_kind != ExtRational::kind::finite) {
        return std::strong_ordering::equal;
    }
    const int c = cmp(a.m_value, b.m_value);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

ExtRational operator+(const ExtRational &a, const Rational &b)
{
    if (!a.is_finite()) {
        return a;
    }
    return ExtRational(Rational(a.m_value + b));
}

ExtRational operator-(const ExtRational &a, const Rational &b)
{
    if (!a.is_finite()) {
        return a;
    }
    return ExtRational(Rational(a.m_value - b));
}

ExtRational operator-(const ExtRational &a)
{
    switch (a.m_kind) {
        case ExtRational::kind::pos_inf:
            return ExtRational::neg_inf();
        case ExtRational::kind::neg_inf:
            return ExtRational::pos_inf();
        default:
            return ExtRational(Rational(-a.m_value));
    }
}

ExtRational operator*(const ExtRational &a, const Rational &b)
{
    if (a.is_finite()) {
        return ExtRational(Rational(a.m_value * b));
    }
    if (sgn(b) == 0) {
        raise(errc::internal_error, "0 * infinity");
    }
    return sgn(b) > 0 ? a : -a;
}

ExtRational min(const ExtRational &a, const ExtRational &b)
{
    return b < a ? b : a;
}

ExtRational max(const ExtRational &a, const ExtRational &b)
{
    return a < b ? b : a;
}

std::string to_string(const ExtRational &e)
{
    switch (e.get_kind()) {
        case ExtRational::kind::pos_inf:
            return "inf";
        case ExtRational::kind::neg_inf:
            return "-inf";
        default:
            return to_string(e.value());
    }
}

std::ostream &operator<<(std::ostream &os, const ExtRational &e)
{
    return os << to_string(e);
}

} // namespace laft
