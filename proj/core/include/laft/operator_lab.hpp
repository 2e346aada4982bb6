#ifndef LAFT_OPERATOR_LAB_HPP
#define LAFT_OPERATOR_LAB_HPP

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <laft/polynomial.hpp>
#include <laft/puiseux_series.hpp>
#include <laft/rational.hpp>

namespace laft
{

// Operators on K_q = k((z^{1/q})) of the form
//     z^{b/q} -> sum_{i >= 0} t_i(b) z^{(b + shift + i)/q},
// with polynomial components t_i. Only the first size() components are
// known unless the operator is exact, in which case the rest are zero.
class GradedOperator
{
public:
    GradedOperator(unsigned long q, long shift, std::vector<Polynomial> comps, bool exact);

    static GradedOperator identity(unsigned long q);
    static GradedOperator zero(unsigned long q);
    // Multiplication by a finite series with exponents in (1/q)Z.
    static GradedOperator multiplication(const RationalSeries &f, unsigned long q);
    // z^n d/dz.
    static GradedOperator derivation(long n, unsigned long q);

    unsigned long q() const noexcept
    {
        return m_q;
    }
    long shift() const noexcept
    {
        return m_shift;
    }
    bool exact() const noexcept
    {
        return m_exact;
    }
    // Number of stored (known) components.
    std::size_t size() const noexcept
    {
        return m_comps.size();
    }
    const std::vector<Polynomial> &components() const noexcept
    {
        return m_comps;
    }
    // t_i; zero past the end of an exact operator, an error otherwise.
    Polynomial component(std::size_t i) const;
    bool is_zero() const;

    // Ord from the lowest nonzero component, as a symbolic check.
    ExtRational graded_ord() const;

    // Keeps at most k components (the result is no longer exact if any
    // nonzero component is dropped).
    GradedOperator truncated(std::size_t k) const;

private:
    void trim();

    unsigned long m_q;
    long m_shift;
    std::vector<Polynomial> m_comps;
    bool m_exact;
};

GradedOperator operator+(const GradedOperator &, const GradedOperator &);
GradedOperator operator-(const GradedOperator &, const GradedOperator &);
GradedOperator operator*(const Rational &, const GradedOperator &);
// a then b is written compose(a, b) = a o b, i.e. b is applied first.
GradedOperator compose(const GradedOperator &a, const GradedOperator &b,
                       std::size_t max_comps = std::numeric_limits<std::size_t>::max());
GradedOperator commutator(const GradedOperator &a, const GradedOperator &b,
                          std::size_t max_comps = std::numeric_limits<std::size_t>::max());
// Inverse with `comps` known components; needs t_0 a nonzero constant.
GradedOperator inverse(const GradedOperator &a, std::size_t comps);
// a^m; negative m goes through inverse(a, comps).
GradedOperator power(const GradedOperator &a, long m, std::size_t comps);
// Q with Q_0 = 1 and Q^p = P, for P with P_0 = 1 and shift divisible by p.
// Raises NotUnitLeading when P_0 != 1.
GradedOperator fractional_root(const GradedOperator &p_op, long p, std::size_t comps);

// Basis index range lo <= n <= hi for monomials z^{n/q}.
struct Window {
    long lo = -8;
    long hi = 8;

    long width() const noexcept
    {
        return hi - lo + 1;
    }
};

// Matrix of an operator on a window of monomials. For each column we record
// whether its image has (possibly) nonzero entries below the window, and the
// index below which its in-window entries are exact. Entries above the window
// are not recorded.
class TruncatedOperator
{
public:
    static constexpr long unlimited = std::numeric_limits<long>::max() / 4;

    TruncatedOperator(unsigned long q, Window w, Rational shift);

    static TruncatedOperator from_graded(const GradedOperator &g, Window w);

    unsigned long q() const noexcept
    {
        return m_q;
    }
    const Window &window() const noexcept
    {
        return m_w;
    }
    // Declared lower bound on Ord.
    const Rational &shift() const noexcept
    {
        return m_shift;
    }

    const Rational &entry(long row, long col) const;
    void set_entry(long row, long col, const Rational &v);
    bool spills_below(long col) const;
    long known_limit(long col) const;
    void set_column_state(long col, bool spills_below, long known_limit);

    // Entry (row, col) is exact and inside the window.
    bool entry_known(long row, long col) const;
    // Column usable for Ord: nothing below the window, every in-window entry
    // exact, and a nonzero entry in the window whenever the image is nonzero.
    bool unclipped(long col) const;
    std::size_t unclipped_count() const;
    std::vector<long> unclipped_columns() const;

private:
    std::size_t index(long row, long col) const;
    std::size_t col_index(long col) const;

    unsigned long m_q;
    Window m_w;
    Rational m_shift;
    std::vector<Rational> m_entries;
    std::vector<bool> m_below;
    std::vector<long> m_known;
    std::vector<bool> m_dropped; // image may be nonzero above the window
    friend TruncatedOperator compose(const TruncatedOperator &, const TruncatedOperator &);
};

TruncatedOperator mult_operator(const RationalSeries &f, Window w, unsigned long q);
TruncatedOperator derivation_operator(long n, Window w, unsigned long q);

// Matrix product on the window, propagating clipping conservatively.
TruncatedOperator compose(const TruncatedOperator &a, const TruncatedOperator &b);

// min over unclipped columns of (lowest nonzero row - col)/q; +inf when no
// unclipped column has a nonzero image.
ExtRational op_ord(const TruncatedOperator &a);

// Entrywise comparison where both sides are known; `compared` counts the
// entries inspected.
bool agree_on_window(const TruncatedOperator &a, const TruncatedOperator &b, std::size_t *compared = nullptr);

struct ExpansionReport {
    Rational a;
    Rational b;
    long m = 0;
    Rational bound; // a(m-1) + b
    ExtRational residual_ord;
    std::size_t unclipped = 0;
    bool holds = false; // residual_ord >= bound
};

// Ord((A+B)^m - A^m - m A^{m-1} B - m(m-1)/2 A^{m-2} [B,A]) on the window.
// Raises HypothesisViolated if A is not invertible, Ord(A) != -Ord(A^{-1}),
// Ord(A) > Ord(B), [A,[B,A]] != 0, or m < 0 with Ord(A) = Ord(B).
ExpansionReport expansion_residual(const GradedOperator &a, const GradedOperator &b, long m, Window w);

struct FracRootReport {
    long p = 0;
    std::size_t compared = 0; // entries compared on the window
    bool holds = false;
};

// Builds Q = P^{1/p}, recomputes Q^p independently and compares it with P
// on the window.
FracRootReport check_fractional_root(const GradedOperator &p_op, long p, Window w);

struct StarColumn {
    long n = 0;          // source monomial z^{n/r}
    Rational observed;   // coefficient of D at z^{(n + r + s)/r}
    Rational naive;      // algebraic part: [v^{s/r}] (1 + u)^{-r/(r+s)}
    Rational predicted;  // naive - a^{-1}[(n + r)/(r+s) + s/(2(r+s))]
    bool match = false;
};

struct StarReport {
    long r = 0;
    long s = 0;
    Rational a;
    bool degenerate = false; // s = 0: no correction term to test
    std::vector<StarColumn> columns;
    std::size_t clipped = 0;
    bool lower_orders_match = true; // components 0..s-1 of D equal the algebraic ones
    // Something was actually compared.
    bool checked() const noexcept
    {
        return !degenerate && !columns.empty();
    }
    // No mismatch among the compared columns.
    bool holds() const;
};

// For f = a z^{-s/r} + ... (exponents in (1/r)Z, rational data with the
// needed roots), forms A = z^{-1} f, B = d/dz, P = (A + B)/a, Q = P^{-1/(r+s)}
// and D = Q^r - z, and compares D's component at z^{1+s/r} on every
// monomial of the window with the predicted operator coefficient.
StarReport verify_star_coefficient(const RationalSeries &f, unsigned long r, Window w);

} // namespace laft

#endif
