#ifndef LAFT_ERROR_HPP
#define LAFT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace laft
{

// Stable error identifiers. The names returned by errc_name() are part of the
// CLI contract (printed on stderr), so they must not change.
enum class errc {
    root_unavailable,
    indeterminate_order,
    variable_mismatch,
    zero_divisor,
    zero_leading_exponent,
    insufficient_precision,
    slope_violation,
    zero_class,
    not_irreducible,
    wrong_point,
    hypothesis_violated,
    not_unit_leading,
    syntax_error,
    exponent_not_rational,
    invalid_argument,
    internal_error
};

std::string_view errc_name(errc) noexcept;

// Domain errors are the ones the CLI maps to exit status 2.
bool is_domain_error(errc) noexcept;

class error : public std::runtime_error
{
public:
    error(errc code, const std::string &what);

    errc code() const noexcept
    {
        return m_code;
    }
    std::string_view name() const noexcept
    {
        return errc_name(m_code);
    }

private:
    errc m_code;
};

// Parse failures carry the byte offset of the offending character.
class syntax_error : public error
{
public:
    syntax_error(errc code, std::size_t offset, const std::string &what);

    std::size_t offset() const noexcept
    {
        return m_offset;
    }

private:
    std::size_t m_offset;
};

// Raised by transform_connection: wraps the failure of one summand.
class summand_error : public error
{
public:
    summand_error(std::size_t index, const error &cause);

    std::size_t index() const noexcept
    {
        return m_index;
    }

private:
    std::size_t m_index;
};

[[noreturn]] void raise(errc code, const std::string &what);

} // namespace laft

#endif
