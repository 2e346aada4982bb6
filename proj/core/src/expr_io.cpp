#include <laft/expr_io.hpp>

#include <cctype>

#include <json.hpp>

namespace laft
{

namespace
{

// Base 10 always: gmp would read a leading zero as octal.
Integer decimal(const std::string &digits)
{
    return Integer(digits, 10);
}

class Parser
{
public:
    explicit Parser(std::string_view text) : m_text(text) {}

    SeriesExpr run()
    {
        SeriesExpr ex;
        skip_ws();
        if (at_end()) {
            fail(m_pos, "empty expression");
        }
        bool negated = false;
        if (peek() == '+' || peek() == '-') {
            negated = peek() == '-';
            ++m_pos;
        }
        ex.terms.push_back(term(negated));
        for (;;) {
            skip_ws();
            if (at_end()) {
                break;
            }
            if (peek() != '+' && peek() != '-') {
                fail(m_pos, std::string("expected '+' or '-', got '") + peek() + "'");
            }
            negated = peek() == '-';
            ++m_pos;
            ex.terms.push_back(term(negated));
        }
        return ex;
    }

private:
    [[noreturn]] void fail(std::size_t at, const std::string &what, errc code = errc::syntax_error) const
    {
        throw syntax_error(code, at, what);
    }

    bool at_end() const
    {
        return m_pos >= m_text.size();
    }
    char peek() const
    {
        return at_end() ? '\0' : m_text[m_pos];
    }
    bool peek_digit() const
    {
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) {
            ++m_pos;
        }
    }
    void expect(char c)
    {
        skip_ws();
        if (peek() != c) {
            fail(m_pos, std::string("expected '") + c + "'");
        }
        ++m_pos;
    }

    std::string digits()
    {
        const std::size_t start = m_pos;
        while (peek_digit()) {
            ++m_pos;
        }
        if (start == m_pos) {
            fail(m_pos, "expected a digit");
        }
        return std::string(m_text.substr(start, m_pos - start));
    }

    TermExpr term(bool negated)
    {
        TermExpr t;
        t.negated = negated;
        skip_ws();
        const std::size_t start = m_pos;
        if (peek_digit() || peek() == '(') {
            t.coeff = coefficient();
            skip_ws();
            if (peek() == '*') {
                ++m_pos;
                skip_ws();
                if (!std::isalpha(static_cast<unsigned char>(peek()))) {
                    fail(m_pos, "expected a variable after '*'");
                }
            }
        }
        if (std::isalpha(static_cast<unsigned char>(peek())) != 0) {
            t.var = variable();
            skip_ws();
            t.exponent = Rational(1);
            if (peek() == '^') {
                ++m_pos;
                t.exponent = exponent();
            }
        }
        if (!t.coeff && !t.var) {
            fail(start, at_end() ? "expected a term" : std::string("unexpected '") + peek() + "'");
        }
        return t;
    }

    Var variable()
    {
        const std::size_t start = m_pos;
        while (std::isalpha(static_cast<unsigned char>(peek())) != 0) {
            ++m_pos;
        }
        const auto name = m_text.substr(start, m_pos - start);
        const auto v = parse_var(name);
        if (!v) {
            fail(start, "unknown variable '" + std::string(name) + "'");
        }
        return *v;
    }

    Rational exponent()
    {
        skip_ws();
        if (peek() == '(') {
            ++m_pos;
            skip_ws();
            const bool neg = sign();
            const std::size_t num_at = m_pos;
            const std::string num = digits();
            std::string den = "1";
            skip_ws();
            if (peek() == '.') {
                fail(num_at, "exponent must be an exact rational", errc::exponent_not_rational);
            }
            if (peek() == '/') {
                ++m_pos;
                skip_ws();
                const std::size_t den_at = m_pos;
                den = digits();
                if (decimal(den) == 0) {
                    fail(den_at, "zero denominator in exponent", errc::exponent_not_rational);
                }
                if (peek() == '.') {
                    fail(den_at, "exponent must be an exact rational", errc::exponent_not_rational);
                }
            }
            expect(')');
            Rational e{decimal(num), decimal(den)};
            e.canonicalize();
            return neg ? Rational(-e) : e;
        }
        const bool neg = sign();
        const std::size_t num_at = m_pos;
        const std::string num = digits();
        if (peek() == '.') {
            fail(num_at, "exponent must be an exact rational", errc::exponent_not_rational);
        }
        if (peek() == '/') {
            fail(m_pos, "fractional exponents need parentheses, e.g. ^(-3/2)");
        }
        const Rational e{decimal(num)};
        return neg ? Rational(-e) : e;
    }

    bool sign()
    {
        if (peek() == '-' || peek() == '+') {
            const bool neg = peek() == '-';
            ++m_pos;
            skip_ws();
            return neg;
        }
        return false;
    }

    // [sign] digits ["." digits] [("e"|"E") [sign] digits]
    std::string real_literal()
    {
        skip_ws();
        std::string out;
        if (peek() == '-' || peek() == '+') {
            out += peek();
            ++m_pos;
        }
        out += digits();
        if (peek() == '.') {
            ++m_pos;
            out += "." + digits();
        }
        if (peek() == 'e' || peek() == 'E') {
            out += peek();
            ++m_pos;
            if (peek() == '-' || peek() == '+') {
                out += peek();
                ++m_pos;
            }
            out += digits();
        }
        return out;
    }

    CoefficientLiteral coefficient()
    {
        CoefficientLiteral lit;
        if (peek() == '(') {
            ++m_pos;
            lit.kind = CoefficientLiteral::form::complex;
            lit.real_text = real_literal();
            expect(',');
            lit.imag_text = real_literal();
            expect(')');
            return lit;
        }
        const std::string whole = digits();
        if (peek() == '.') {
            ++m_pos;
            const std::string frac = digits();
            lit.kind = CoefficientLiteral::form::decimal;
            lit.real_text = whole + "." + frac;
            Integer den(1);
            for (std::size_t i = 0; i < frac.size(); ++i) {
                den *= 10;
            }
            lit.exact = Rational(decimal(whole + frac), den);
            lit.exact.canonicalize();
            return lit;
        }
        lit.kind = CoefficientLiteral::form::rational;
        if (peek() == '/') {
            ++m_pos;
            const std::size_t den_at = m_pos;
            const std::string den = digits();
            if (decimal(den) == 0) {
                fail(den_at, "zero denominator");
            }
            lit.exact = Rational(decimal(whole), decimal(den));
            lit.exact.canonicalize();
        } else {
            lit.exact = Rational(decimal(whole));
        }
        lit.real_text = to_string(lit.exact);
        return lit;
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

nlohmann::ordered_json record_json(const ClassRecord &rec)
{
    nlohmann::ordered_json j;
    j["variable"] = rec.variable;
    j["ramification"] = rec.ramification;
    j["slope"] = rec.slope;
    auto terms = nlohmann::ordered_json::array();
    for (const auto &[e, c] : rec.terms) {
        terms.push_back(nlohmann::ordered_json{{"exp", e}, {"coeff", c}});
    }
    j["terms"] = std::move(terms);
    if (rec.jordan) {
        j["jordan"] = *rec.jordan;
    }
    return j;
}

} // namespace

SeriesExpr parse_expr(std::string_view text)
{
    return Parser(text).run();
}

namespace detail
{

std::string format_exponent(const Rational &e)
{
    if (is_integer(e)) {
        return to_string(e);
    }
    return "(" + to_string(e) + ")";
}

} // namespace detail

std::string to_json(const ClassRecord &rec)
{
    return record_json(rec).dump();
}

std::string to_json(const std::vector<ClassRecord> &summands)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto &rec : summands) {
        arr.push_back(record_json(rec));
    }
    return nlohmann::ordered_json{{"summands", std::move(arr)}}.dump();
}

} // namespace laft
