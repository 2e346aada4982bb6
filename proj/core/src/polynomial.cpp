#include <laft/polynomial.hpp>

#include <algorithm>
#include <utility>

#include <laft/error.hpp>

namespace laft
{

Polynomial::Polynomial(std::vector<Rational> coeffs) : m_c(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::constant(const Rational &c)
{
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::linear(const Rational &a, const Rational &b)
{
    return Polynomial(std::vector<Rational>{b, a});
}

void Polynomial::trim()
{
    while (!m_c.empty() && sgn(m_c.back()) == 0) {
        m_c.pop_back();
    }
}

Rational Polynomial::coeff(std::size_t k) const
{
    return k < m_c.size() ? m_c[k] : Rational(0);
}

Rational Polynomial::operator()(const Rational &x) const
{
    Rational acc(0);
    for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::shifted(const Rational &c) const
{
    if (sgn(c) == 0 || m_c.size() <= 1) {
        return *this;
    }
    // Horner in the shifted variable: p(b + c) = (...(a_n (b + c) + a_{n-1})(b + c) ...).
    std::vector<Rational> out(m_c.size(), Rational(0));
    std::size_t len = 0;
    for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) {
        // out <- out * (b + c) + a
        std::vector<Rational> next(len + 1, Rational(0));
        for (std::size_t k = 0; k < len; ++k) {
            next[k + 1] += out[k];
            next[k] += out[k] * c;
        }
        next[0] += *it;
        for (std::size_t k = 0; k < next.size(); ++k) {
            out[k] = next[k];
        }
        len = next.size();
    }
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial &a, const Polynomial &b)
{
    std::vector<Rational> c(std::max(a.m_c.size(), b.m_c.size()), Rational(0));
    for (std::size_t k = 0; k < a.m_c.size(); ++k) {
        c[k] += a.m_c[k];
    }
    for (std::size_t k = 0; k < b.m_c.size(); ++k) {
        c[k] += b.m_c[k];
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial &a)
{
    std::vector<Rational> c(a.m_c);
    for (auto &x : c) {
        x = -x;
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b)
{
    return a + (-b);
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> c(a.m_c.size() + b.m_c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.m_c.size(); ++i) {
        if (sgn(a.m_c[i]) == 0) {
            continue;
        }
        for (std::size_t k = 0; k < b.m_c.size(); ++k) {
            c[i + k] += a.m_c[i] * b.m_c[k];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational &s, const Polynomial &p)
{
    if (sgn(s) == 0) {
        return {};
    }
    std::vector<Rational> c(p.m_c);
    for (auto &x : c) {
        x *= s;
    }
    return Polynomial(std::move(c));
}

Polynomial solve_shift_sum(unsigned long n, const Polynomial &rhs, long step)
{
    if (n == 0) {
        raise(errc::invalid_argument, "shift sum of length 0");
    }
    const auto sum_shifts = [n, step](const Polynomial &p) {
        Polynomial acc;
        for (unsigned long k = 0; k < n; ++k) {
            acc += p.shifted(Rational(static_cast<long>(k) * step));
        }
        return acc;
    };
    Polynomial sol;
    Polynomial residual = rhs;
    for (long m = residual.degree(); m >= 0; --m) {
        const Rational c = residual.coeff(static_cast<std::size_t>(m)) / Rational(static_cast<long>(n));
        if (sgn(c) == 0) {
            continue;
        }
        std::vector<Rational> mono(static_cast<std::size_t>(m) + 1, Rational(0));
        mono.back() = c;
        const Polynomial term(std::move(mono));
        sol += term;
        residual = residual - sum_shifts(term);
    }
    if (!residual.is_zero()) {
        raise(errc::internal_error, "shift-sum back substitution left a residual");
    }
    return sol;
}

std::string to_string(const Polynomial &p, const char *var)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Rational &c = p.coeffs()[k];
        if (sgn(c) == 0) {
            continue;
        }
        if (!out.empty()) {
            out += sgn(c) < 0 ? " - " : " + ";
        } else if (sgn(c) < 0) {
            out += "-";
        }
        const Rational a = abs(c);
        if (k == 0 || a != 1) {
            out += to_string(a);
            if (k > 0) {
                out += "*";
            }
        }
        if (k > 0) {
            out += var;
            if (k > 1) {
                out += "^" + std::to_string(k);
            }
        }
    }
    return out;
}

} // namespace laft
