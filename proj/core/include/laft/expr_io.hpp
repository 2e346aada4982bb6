#ifndef LAFT_EXPR_IO_HPP
#define LAFT_EXPR_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <laft/canonical_class.hpp>
#include <laft/connection.hpp>
#include <laft/error.hpp>
#include <laft/puiseux_series.hpp>

namespace laft
{

// One signed term of a series expression, before a field interprets it.
struct TermExpr {
    bool negated = false;
    std::optional<CoefficientLiteral> coeff; // absent means 1
    std::optional<Var> var;                  // absent for a constant
    Rational exponent;                       // 0 for a constant
};

struct SeriesExpr {
    std::vector<TermExpr> terms;
};

// Grammar (whitespace insignificant):
//   series   := term (("+" | "-") term)*      with an optional leading sign
//   term     := coeff ["*"] var ["^" exponent] | coeff | var ["^" exponent]
//   exponent := ["-"] digits | "(" ["-"] digits ["/" digits] ")"
//   coeff    := digits ["/" digits] | digits "." digits | "(" real "," real ")"
SeriesExpr parse_expr(std::string_view text);

namespace detail
{

std::string format_exponent(const Rational &e);

template <CoefficientField F>
typename F::value_type literal_value(const F &field, const CoefficientLiteral &lit)
{
    return field.from_literal(lit);
}

} // namespace detail

// Series in the expression's variable (default_var when it names none).
template <CoefficientField F>
PuiseuxSeries<F> parse_series(std::string_view text, Var default_var, const F &field = F{})
{
    const SeriesExpr ex = parse_expr(text);
    std::optional<Var> var;
    for (const auto &t : ex.terms) {
        if (t.var && var && *t.var != *var) {
            raise(errc::variable_mismatch, "expression mixes " + std::string(var_name(*var)) + " and "
                                               + std::string(var_name(*t.var)));
        }
        if (t.var) {
            var = t.var;
        }
    }
    PuiseuxSeries<F> out(field, var.value_or(default_var));
    for (const auto &t : ex.terms) {
        typename F::value_type c = t.coeff ? detail::literal_value(field, *t.coeff) : field.one();
        if (t.negated) {
            c = -c;
        }
        out.add_term(t.exponent, c);
    }
    return out;
}

// Ascending exponents, e.g. "-2*zetahat^(-1/2) + 1/4"; "0" for the zero
// series. A truncated series ends in "+ O(var^t)".
template <CoefficientField F>
std::string format_series(const PuiseuxSeries<F> &f)
{
    const auto &field = f.field();
    const std::string v(var_name(f.var()));
    std::string out;
    for (const auto &[e, c] : f.terms()) {
        std::string body;
        bool negative = false;
        const auto q = field.as_rational(c);
        std::string coeff;
        if (q) {
            negative = sgn(*q) < 0;
            coeff = to_string(Rational(negative ? Rational(-*q) : *q));
        } else {
            coeff = field.format(c);
        }
        const bool unit = q && abs(*q) == 1;
        if (sgn(e) == 0) {
            body = coeff;
        } else {
            if (!unit) {
                body = coeff + "*";
            }
            body += v;
            if (e != 1) {
                body += "^" + detail::format_exponent(e);
            }
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    if (out.empty()) {
        out = "0";
    }
    if (f.trunc().is_finite()) {
        out += " + O(" + v + "^" + detail::format_exponent(f.trunc().value()) + ")";
    }
    return out;
}

template <CoefficientField F>
std::string format_class(const CanonicalClass<F> &c)
{
    return format_series(c.rep());
}

// Plain record behind the JSON schema; all numbers are kept as strings.
struct ClassRecord {
    std::string variable;
    unsigned long ramification = 1;
    std::string slope; // "s/r"
    std::vector<std::pair<std::string, std::string>> terms; // (exp, coeff)
    std::optional<unsigned long> jordan;
};

// {"variable", "ramification", "slope", "terms": [{"exp", "coeff"}], "jordan"?}
std::string to_json(const ClassRecord &rec);
std::string to_json(const std::vector<ClassRecord> &summands);

template <CoefficientField F>
ClassRecord class_record(const CanonicalClass<F> &c, std::optional<unsigned long> jordan = std::nullopt)
{
    ClassRecord rec;
    rec.variable = std::string(var_name(c.var()));
    rec.ramification = c.q();
    rec.slope = std::to_string(slope_numerator(c)) + "/" + std::to_string(c.q());
    for (const auto &[e, v] : c.rep().terms()) {
        rec.terms.emplace_back(to_string(e), c.field().format(v));
    }
    rec.jordan = jordan;
    return rec;
}

template <CoefficientField F>
std::string to_json(const CanonicalClass<F> &c, std::optional<unsigned long> jordan = std::nullopt)
{
    return to_json(class_record(c, jordan));
}

template <CoefficientField F>
std::string to_json(const ConnectionObject<F> &e)
{
    std::vector<ClassRecord> recs;
    for (const auto &s : e.summands()) {
        recs.push_back(class_record(s.cls, s.jordan));
    }
    return to_json(recs);
}

} // namespace laft

#endif
