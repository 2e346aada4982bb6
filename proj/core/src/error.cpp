#include <laft/error.hpp>

namespace laft
{

std::string_view errc_name(errc e) noexcept
{
    switch (e) {
        case errc::root_unavailable:
            return "RootUnavailable";
        case errc::indeterminate_order:
            return "IndeterminateOrder";
        case errc::variable_mismatch:
            return "VariableMismatch";
        case errc::zero_divisor:
            return "ZeroDivisor";
        case errc::zero_leading_exponent:
            return "ZeroLeadingExponent";
        case errc::insufficient_precision:
            return "InsufficientPrecision";
        case errc::slope_violation:
            return "SlopeViolation";
        case errc::zero_class:
            return "ZeroClass";
        case errc::not_irreducible:
            return "NotIrreducible";
        case errc::wrong_point:
            return "WrongPoint";
        case errc::hypothesis_violated:
            return "HypothesisViolated";
        case errc::not_unit_leading:
            return "NotUnitLeading";
        case errc::syntax_error:
            return "SyntaxError";
        case errc::exponent_not_rational:
            return "ExponentNotRational";
        case errc::invalid_argument:
            return "InvalidArgument";
        case errc::internal_error:
            return "InternalError";
    }
    return "UnknownError";
}

bool is_domain_error(errc e) noexcept
{
    switch (e) {
        case errc::syntax_error:
        case errc::exponent_not_rational:
        case errc::invalid_argument:
        case errc::internal_error:
            return false;
        default:
            return true;
    }
}

error::error(errc code, const std::string &what) : std::runtime_error(what), m_code(code) {}

syntax_error::syntax_error(errc code, std::size_t offset, const std::string &what)
    : error(code, what + " (at offset " + std::to_string(offset) + ")"), m_offset(offset)
{
}

summand_error::summand_error(std::size_t index, const error &cause)
    : error(cause.code(), "summand " + std::to_string(index) + ": " + cause.what()), m_index(index)
{
}

void raise(errc code, const std::string &what)
{
    throw error(code, what);
}

} // namespace laft
