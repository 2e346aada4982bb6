#ifndef LAFT_POLYNOMIAL_HPP
#define LAFT_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <laft/rational.hpp>

namespace laft
{

// Dense univariate polynomial over Q in the basis index beta; coefficients
// from degree 0 upward, no trailing zeros.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational &c);
    // a * beta + b
    static Polynomial linear(const Rational &a, const Rational &b);

    bool is_zero() const noexcept
    {
        return m_c.empty();
    }
    bool is_constant() const noexcept
    {
        return m_c.size() <= 1;
    }
    // -1 for the zero polynomial.
    long degree() const noexcept
    {
        return static_cast<long>(m_c.size()) - 1;
    }
    const std::vector<Rational> &coeffs() const noexcept
    {
        return m_c;
    }
    Rational coeff(std::size_t k) const;
    Rational constant_term() const
    {
        return coeff(0);
    }

    Rational operator()(const Rational &x) const;

    // p(beta + c).
    Polynomial shifted(const Rational &c) const;

    friend Polynomial operator+(const Polynomial &, const Polynomial &);
    friend Polynomial operator-(const Polynomial &, const Polynomial &);
    friend Polynomial operator-(const Polynomial &);
    friend Polynomial operator*(const Polynomial &, const Polynomial &);
    friend Polynomial operator*(const Rational &, const Polynomial &);
    Polynomial &operator+=(const Polynomial &o)
    {
        return *this = *this + o;
    }

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    void trim();

    std::vector<Rational> m_c;
};

// The q with sum_{k=0}^{n-1} q(beta + k step) = rhs(beta); unique since the
// map is triangular with diagonal n on the monomial basis.
Polynomial solve_shift_sum(unsigned long n, const Polynomial &rhs, long step = 1);

std::string to_string(const Polynomial &, const char *var = "b");

} // namespace laft

#endif
