#ifndef LAFT_CONNECTION_HPP
#define LAFT_CONNECTION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <laft/canonical_class.hpp>
#include <laft/error.hpp>

namespace laft
{

// E_f tensor J_m, with the Jordan block recorded as its size m.
template <CoefficientField F>
struct Summand {
    CanonicalClass<F> cls;
    unsigned long jordan = 1;
};

// A formal direct sum of irreducible summands sharing one coordinate.
template <CoefficientField F>
class ConnectionObject
{
public:
    explicit ConnectionObject(std::vector<Summand<F>> summands) : m_summands(std::move(summands))
    {
        if (m_summands.empty()) {
            raise(errc::invalid_argument, "a connection needs at least one summand");
        }
        for (std::size_t i = 0; i < m_summands.size(); ++i) {
            const auto &s = m_summands[i];
            if (s.jordan == 0) {
                raise(errc::invalid_argument, "summand " + std::to_string(i) + ": Jordan size must be >= 1");
            }
            if (s.cls.var() != m_summands.front().cls.var()) {
                raise(errc::variable_mismatch, "summand " + std::to_string(i) + " is in a different coordinate");
            }
            if (!is_irreducible(s.cls)) {
                raise(errc::not_irreducible, "summand " + std::to_string(i) + " is not irreducible for q = "
                                                 + std::to_string(s.cls.q()));
            }
        }
    }

    const std::vector<Summand<F>> &summands() const noexcept
    {
        return m_summands;
    }
    std::size_t size() const noexcept
    {
        return m_summands.size();
    }
    Var var() const noexcept
    {
        return m_summands.front().cls.var();
    }

private:
    std::vector<Summand<F>> m_summands;
};

enum class SlopeBound { below_one, above_one };

template <CoefficientField F>
bool in_slope_subcategory(const ConnectionObject<F> &e, SlopeBound which)
{
    if (!is_at_infinity(e.var())) {
        raise(errc::wrong_point, "slope subcategories are defined at infinity, not in "
                                     + std::string(var_name(e.var())));
    }
    const Rational one(1);
    for (const auto &s : e.summands()) {
        const Rational sl = slope(s.cls);
        if (which == SlopeBound::below_one ? !(sl < one) : !(sl > one)) {
            return false;
        }
    }
    return true;
}

template <CoefficientField F>
bool has_horizontal_sections(const ConnectionObject<F> &e)
{
    for (const auto &s : e.summands()) {
        if (is_zero_class(s.cls)) {
            return true;
        }
    }
    return false;
}

} // namespace laft

#endif
