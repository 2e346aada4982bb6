#ifndef LAFT_RATIONAL_HPP
#define LAFT_RATIONAL_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace laft
{

using Integer = mpz_class;
using Rational = mpq_class;

// Canonicalized num/den.
Rational make_rational(long num, long den = 1);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational &);

// Accepts "p", "-p", "p/q"; throws error(invalid_argument) otherwise.
Rational parse_rational(std::string_view);

bool is_integer(const Rational &);
Integer floor(const Rational &);

// Conversion for small values (exponent indices, window positions).
// Throws if the value is not an integer or does not fit.
long to_long(const Rational &);
long to_long(const Integer &);

unsigned long lcm(unsigned long, unsigned long);
unsigned long gcd(unsigned long, unsigned long);

// Rational number extended by -infinity and +infinity. Used for truncation
// orders ("exact below") and the lower edge of exactness windows.
class ExtRational
{
public:
    enum class kind { neg_inf, finite, pos_inf };

    ExtRational() : m_kind(kind::pos_inf) {}
    ExtRational(const Rational &v) : m_kind(kind::finite), m_value(v) {}
    ExtRational(long v) : m_kind(kind::finite), m_value(v) {}

    static ExtRational pos_inf()
    {
        return ExtRational(kind::pos_inf);
    }
    static ExtRational neg_inf()
    {
        return ExtRational(kind::neg_inf);
    }

    bool is_finite() const noexcept
    {
        return m_kind == kind::finite;
    }
    bool is_pos_inf() const noexcept
    {
        return m_kind == kind::pos_inf;
    }
    bool is_neg_inf() const noexcept
    {
        return m_kind == kind::neg_inf;
    }
    kind get_kind() const noexcept
    {
        return m_kind;
    }

    // Throws error(internal_error) when infinite.
    const Rational &value() const;

    friend bool operator==(const ExtRational &, const ExtRational &);
    friend std::strong_ordering operator<=>(const ExtRational &, const ExtRational &);

    // Finite shift; infinities absorb.
    friend ExtRational operator+(const ExtRational &, const Rational &);
    friend ExtRational operator-(const ExtRational &, const Rational &);
    friend ExtRational operator-(const ExtRational &);
    // Scaling by a finite rational; sign flips the infinity. 0 * inf is rejected.
    friend ExtRational operator*(const ExtRational &, const Rational &);

private:
    explicit ExtRational(kind k) : m_kind(k) {}

    kind m_kind;
    Rational m_value;
};

ExtRational min(const ExtRational &, const ExtRational &);
ExtRational max(const ExtRational &, const ExtRational &);

// "inf", "-inf" or the rational text.
std::string to_string(const ExtRational &);
std::ostream &operator<<(std::ostream &, const ExtRational &);

} // namespace laft

#endif
