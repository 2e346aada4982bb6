#ifndef LAFT_VAR_TAG_HPP
#define LAFT_VAR_TAG_HPP

#include <optional>
#include <string_view>

namespace laft
{

// Local coordinates: z at zero, zeta = 1/z at infinity, and their Fourier
// duals zhat, zetahat = 1/zhat.
enum class Var { z, zeta, zhat, zetahat };

constexpr Var reciprocal(Var v) noexcept
{
    switch (v) {
        case Var::z:
            return Var::zeta;
        case Var::zeta:
            return Var::z;
        case Var::zhat:
            return Var::zetahat;
        case Var::zetahat:
            return Var::zhat;
    }
    return v;
}

// z <-> zhat, zeta <-> zetahat.
constexpr Var fourier_dual(Var v) noexcept
{
    switch (v) {
        case Var::z:
            return Var::zhat;
        case Var::zhat:
            return Var::z;
        case Var::zeta:
            return Var::zetahat;
        case Var::zetahat:
            return Var::zeta;
    }
    return v;
}

constexpr bool is_at_infinity(Var v) noexcept
{
    return v == Var::zeta || v == Var::zetahat;
}

constexpr std::string_view var_name(Var v) noexcept
{
    switch (v) {
        case Var::z:
            return "z";
        case Var::zeta:
            return "zeta";
        case Var::zhat:
            return "zhat";
        case Var::zetahat:
            return "zetahat";
    }
    return "?";
}

constexpr std::optional<Var> parse_var(std::string_view s) noexcept
{
    if (s == "z") {
        return Var::z;
    }
    if (s == "zeta") {
        return Var::zeta;
    }
    if (s == "zhat") {
        return Var::zhat;
    }
    if (s == "zetahat") {
        return Var::zetahat;
    }
    return std::nullopt;
}

} // namespace laft

#endif
