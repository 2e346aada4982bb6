#include <laft/operator_lab.hpp>

#include <algorithm>
#include <utility>

#include <laft/error.hpp>
#include <laft/series_compose.hpp>

namespace laft
{

namespace
{

constexpr std::size_t no_limit = std::numeric_limits<std::size_t>::max();

void require_same_q(const GradedOperator &a, const GradedOperator &b)
{
    if (a.q() != b.q()) {
        raise(errc::invalid_argument, "operators act on different ramifications");
    }
}

// Component k of a, zero outside the stored range of an exact operator.
Polynomial comp_or_zero(const GradedOperator &a, long k)
{
    if (k < 0) {
        return {};
    }
    return a.component(static_cast<std::size_t>(k));
}

} // namespace

GradedOperator::GradedOperator(unsigned long q, long shift, std::vector<Polynomial> comps, bool exact)
    : m_q(q), m_shift(shift), m_comps(std::move(comps)), m_exact(exact)
{
    if (q == 0) {
        raise(errc::invalid_argument, "ramification must be positive");
    }
    trim();
}

void GradedOperator::trim()
{
    // Leading zero components are known zeros, so they only move the shift.
    std::size_t lead = 0;
    while (lead < m_comps.size() && m_comps[lead].is_zero()) {
        ++lead;
    }
    if (lead == m_comps.size() && m_exact) {
        m_comps.clear();
        m_shift = 0;
        return;
    }
    if (lead > 0 && lead < m_comps.size()) {
        m_comps.erase(m_comps.begin(), m_comps.begin() + static_cast<long>(lead));
        m_shift += static_cast<long>(lead);
    }
    if (m_exact) {
        while (!m_comps.empty() && m_comps.back().is_zero()) {
            m_comps.pop_back();
        }
    }
}

GradedOperator GradedOperator::identity(unsigned long q)
{
    return {q, 0, {Polynomial::constant(Rational(1))}, true};
}

GradedOperator GradedOperator::zero(unsigned long q)
{
    return {q, 0, {}, true};
}

GradedOperator GradedOperator::multiplication(const RationalSeries &f, unsigned long q)
{
    if (!f.is_exact()) {
        raise(errc::insufficient_precision, "multiplication operator needs an exact series");
    }
    if (f.empty()) {
        return zero(q);
    }
    const Rational qq(static_cast<long>(q));
    long lo = 0;
    long hi = 0;
    bool first = true;
    for (const auto &[e, c] : f.terms()) {
        const Rational idx = e * qq;
        if (!is_integer(idx)) {
            raise(errc::invalid_argument, "exponent " + to_string(e) + " is not in (1/" + std::to_string(q) + ")Z");
        }
        const long n = to_long(idx);
        lo = first ? n : std::min(lo, n);
        hi = first ? n : std::max(hi, n);
        first = false;
    }
    std::vector<Polynomial> comps(static_cast<std::size_t>(hi - lo + 1));
    for (const auto &[e, c] : f.terms()) {
        comps[static_cast<std::size_t>(to_long(Rational(e * qq)) - lo)] = Polynomial::constant(c);
    }
    return {q, lo, std::move(comps), true};
}

GradedOperator GradedOperator::derivation(long n, unsigned long q)
{
    // z^n d/dz sends z^{b/q} to (b/q) z^{(b + q(n-1))/q}.
    const long qq = static_cast<long>(q);
    return {q, qq * (n - 1), {Polynomial::linear(make_rational(1, qq), Rational(0))}, true};
}

Polynomial GradedOperator::component(std::size_t i) const
{
    if (i < m_comps.size()) {
        return m_comps[i];
    }
    if (m_exact) {
        return {};
    }
    raise(errc::insufficient_precision, "component " + std::to_string(i) + " of a truncated operator is unknown");
}

bool GradedOperator::is_zero() const
{
    return std::all_of(m_comps.begin(), m_comps.end(), [](const Polynomial &p) { return p.is_zero(); });
}

ExtRational GradedOperator::graded_ord() const
{
    for (std::size_t i = 0; i < m_comps.size(); ++i) {
        if (!m_comps[i].is_zero()) {
            return ExtRational(make_rational(m_shift + static_cast<long>(i), static_cast<long>(m_q)));
        }
    }
    if (!m_exact) {
        raise(errc::indeterminate_order, "no nonzero known component");
    }
    return ExtRational::pos_inf();
}

GradedOperator GradedOperator::truncated(std::size_t k) const
{
    if (k >= m_comps.size()) {
        return *this;
    }
    return {m_q, m_shift, std::vector<Polynomial>(m_comps.begin(), m_comps.begin() + static_cast<long>(k)), false};
}

GradedOperator operator+(const GradedOperator &a, const GradedOperator &b)
{
    require_same_q(a, b);
    if (a.exact() && a.size() == 0) {
        return b;
    }
    if (b.exact() && b.size() == 0) {
        return a;
    }
    const long d = std::min(a.shift(), b.shift());
    const long oa = a.shift() - d;
    const long ob = b.shift() - d;
    const bool exact = a.exact() && b.exact();
    long len = 0;
    if (exact) {
        len = std::max(oa + static_cast<long>(a.size()), ob + static_cast<long>(b.size()));
    } else {
        len = std::numeric_limits<long>::max();
        if (!a.exact()) {
            len = std::min(len, oa + static_cast<long>(a.size()));
        }
        if (!b.exact()) {
            len = std::min(len, ob + static_cast<long>(b.size()));
        }
    }
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<std::size_t>(len));
    for (long k = 0; k < len; ++k) {
        comps.push_back(comp_or_zero(a, k - oa) + comp_or_zero(b, k - ob));
    }
    return {a.q(), d, std::move(comps), exact};
}

GradedOperator operator*(const Rational &c, const GradedOperator &a)
{
    std::vector<Polynomial> comps;
    comps.reserve(a.size());
    for (const auto &p : a.components()) {
        comps.push_back(c * p);
    }
    return {a.q(), a.shift(), std::move(comps), a.exact()};
}

GradedOperator operator-(const GradedOperator &a, const GradedOperator &b)
{
    return a + Rational(-1) * b;
}

GradedOperator compose(const GradedOperator &a, const GradedOperator &b, std::size_t max_comps)
{
    require_same_q(a, b);
    if ((a.exact() && a.size() == 0) || (b.exact() && b.size() == 0)) {
        return GradedOperator::zero(a.q());
    }
    std::size_t len = no_limit;
    bool exact = a.exact() && b.exact();
    if (exact) {
        len = a.size() + b.size() - 1;
    } else {
        if (!a.exact()) {
            len = std::min(len, a.size());
        }
        if (!b.exact()) {
            len = std::min(len, b.size());
        }
    }
    if (len > max_comps) {
        len = max_comps;
        exact = false;
    }
    // (a o b)_m(beta) = sum_{i+k=m} a_k(beta + shift_b + i) b_i(beta)
    std::vector<Polynomial> comps(len);
    for (std::size_t i = 0; i < len && i < (b.exact() ? b.size() : len); ++i) {
        const Polynomial bi = b.component(i);
        if (bi.is_zero()) {
            continue;
        }
        for (std::size_t k = 0; i + k < len; ++k) {
            if (a.exact() && k >= a.size()) {
                break;
            }
            const Polynomial ak = a.component(k);
            if (ak.is_zero()) {
                continue;
            }
            comps[i + k] += ak.shifted(Rational(b.shift() + static_cast<long>(i))) * bi;
        }
    }
    return {a.q(), a.shift() + b.shift(), std::move(comps), exact};
}

GradedOperator commutator(const GradedOperator &a, const GradedOperator &b, std::size_t max_comps)
{
    return compose(a, b, max_comps) - compose(b, a, max_comps);
}

GradedOperator inverse(const GradedOperator &a, std::size_t comps)
{
    if (a.size() == 0 || !a.components().front().is_constant() || a.components().front().is_zero()) {
        raise(errc::hypothesis_violated, "inverse needs a nonzero constant leading component");
    }
    if (!a.exact()) {
        comps = std::min(comps, a.size());
    }
    const Rational inv_c = Rational(1) / a.components().front().constant_term();
    const long d = a.shift();
    if (a.exact() && a.size() == 1) {
        return {a.q(), -d, {Polynomial::constant(inv_c)}, true};
    }
    // c x_m(beta) = -sum_{k=1..m} a_k(beta - d + m - k) x_{m-k}(beta)
    std::vector<Polynomial> x;
    x.reserve(comps);
    for (std::size_t m = 0; m < comps; ++m) {
        if (m == 0) {
            x.push_back(Polynomial::constant(inv_c));
            continue;
        }
        Polynomial acc;
        for (std::size_t k = 1; k <= m; ++k) {
            if (a.exact() && k >= a.size()) {
                break;
            }
            const Polynomial ak = a.component(k);
            if (ak.is_zero() || x[m - k].is_zero()) {
                continue;
            }
            acc += ak.shifted(Rational(-d + static_cast<long>(m - k))) * x[m - k];
        }
        x.push_back(Rational(-inv_c) * acc);
    }
    return {a.q(), -d, std::move(x), false};
}

GradedOperator power(const GradedOperator &a, long m, std::size_t comps)
{
    if (m == 0) {
        return GradedOperator::identity(a.q());
    }
    const GradedOperator base = m > 0 ? a : inverse(a, comps);
    const long n = m > 0 ? m : -m;
    GradedOperator acc = base;
    for (long k = 1; k < n; ++k) {
        acc = compose(acc, base, comps);
    }
    return acc.truncated(comps);
}

GradedOperator fractional_root(const GradedOperator &p_op, long p, std::size_t comps)
{
    if (p == 0) {
        raise(errc::invalid_argument, "fractional root of order 0");
    }
    if (p_op.size() == 0 || p_op.components().front() != Polynomial::constant(Rational(1))) {
        raise(errc::not_unit_leading, "leading component must be the identity");
    }
    const GradedOperator t = p > 0 ? p_op : inverse(p_op, comps);
    const long n = p > 0 ? p : -p;
    if (t.shift() % n != 0) {
        raise(errc::invalid_argument, "shift " + std::to_string(p_op.shift()) + " is not divisible by "
                                          + std::to_string(p));
    }
    const long e = t.shift() / n;
    if (!t.exact()) {
        comps = std::min(comps, t.size());
    }
    if (t.exact() && t.size() == 1) {
        return {p_op.q(), e, {Polynomial::constant(Rational(1))}, true};
    }
    std::vector<Polynomial> qc{Polynomial::constant(Rational(1))};
    for (std::size_t i = 1; i < comps; ++i) {
        qc.emplace_back();
        const GradedOperator trial(p_op.q(), e, qc, false);
        const GradedOperator tn = power(trial, n, i + 1);
        const Polynomial rhs = t.component(i) - tn.component(i);
        qc.back() = solve_shift_sum(static_cast<unsigned long>(n), rhs, e);
    }
    return {p_op.q(), e, std::move(qc), false};
}

// ---------------------------------------------------------------------------

TruncatedOperator::TruncatedOperator(unsigned long q, Window w, Rational shift)
    : m_q(q), m_w(w), m_shift(std::move(shift))
{
    if (w.hi < w.lo) {
        raise(errc::invalid_argument, "empty window");
    }
    const auto n = static_cast<std::size_t>(w.width());
    m_entries.assign(n * n, Rational(0));
    m_below.assign(n, false);
    m_known.assign(n, unlimited);
    m_dropped.assign(n, false);
}

std::size_t TruncatedOperator::col_index(long col) const
{
    if (col < m_w.lo || col > m_w.hi) {
        raise(errc::invalid_argument, "column " + std::to_string(col) + " outside the window");
    }
    return static_cast<std::size_t>(col - m_w.lo);
}

std::size_t TruncatedOperator::index(long row, long col) const
{
    if (row < m_w.lo || row > m_w.hi) {
        raise(errc::invalid_argument, "row " + std::to_string(row) + " outside the window");
    }
    return static_cast<std::size_t>(row - m_w.lo) * static_cast<std::size_t>(m_w.width()) + col_index(col);
}

const Rational &TruncatedOperator::entry(long row, long col) const
{
    return m_entries[index(row, col)];
}

void TruncatedOperator::set_entry(long row, long col, const Rational &v)
{
    m_entries[index(row, col)] = v;
}

bool TruncatedOperator::spills_below(long col) const
{
    return m_below[col_index(col)];
}

long TruncatedOperator::known_limit(long col) const
{
    return m_known[col_index(col)];
}

void TruncatedOperator::set_column_state(long col, bool spills_below, long known_limit)
{
    const auto c = col_index(col);
    m_below[c] = spills_below;
    m_known[c] = known_limit;
    m_dropped[c] = known_limit <= m_w.hi;
}

bool TruncatedOperator::entry_known(long row, long col) const
{
    return row >= m_w.lo && row <= m_w.hi && row < known_limit(col);
}

bool TruncatedOperator::unclipped(long col) const
{
    const auto c = col_index(col);
    if (m_below[c] || m_known[c] <= m_w.hi) {
        return false;
    }
    if (!m_dropped[c]) {
        return true;
    }
    for (long row = m_w.lo; row <= m_w.hi; ++row) {
        if (sgn(entry(row, col)) != 0) {
            return true;
        }
    }
    return false;
}

std::size_t TruncatedOperator::unclipped_count() const
{
    return unclipped_columns().size();
}

std::vector<long> TruncatedOperator::unclipped_columns() const
{
    std::vector<long> out;
    for (long col = m_w.lo; col <= m_w.hi; ++col) {
        if (unclipped(col)) {
            out.push_back(col);
        }
    }
    return out;
}

TruncatedOperator TruncatedOperator::from_graded(const GradedOperator &g, Window w)
{
    const long qq = static_cast<long>(g.q());
    TruncatedOperator t(g.q(), w, make_rational(g.shift(), qq));
    const long k = static_cast<long>(g.size());
    for (long col = w.lo; col <= w.hi; ++col) {
        const auto c = t.col_index(col);
        const Rational beta(col);
        bool below = false;
        bool dropped = !g.exact();
        const long known = g.exact() ? unlimited : col + g.shift() + k;
        for (long i = 0; i < k; ++i) {
            const long row = col + g.shift() + i;
            if (row > w.hi) {
                if (!g.components()[static_cast<std::size_t>(i)].is_zero()) {
                    dropped = true;
                }
                break;
            }
            const Rational v = g.components()[static_cast<std::size_t>(i)](beta);
            if (sgn(v) == 0) {
                continue;
            }
            if (row < w.lo) {
                below = true;
            } else {
                t.set_entry(row, col, v);
            }
        }
        // Unknown components start at `known`; they may land below the window.
        if (known < w.lo) {
            below = true;
        }
        t.m_below[c] = below;
        t.m_known[c] = known;
        t.m_dropped[c] = dropped;
    }
    return t;
}

TruncatedOperator mult_operator(const RationalSeries &f, Window w, unsigned long q)
{
    return TruncatedOperator::from_graded(GradedOperator::multiplication(f, q), w);
}

TruncatedOperator derivation_operator(long n, Window w, unsigned long q)
{
    return TruncatedOperator::from_graded(GradedOperator::derivation(n, q), w);
}

TruncatedOperator compose(const TruncatedOperator &a, const TruncatedOperator &b)
{
    if (a.q() != b.q() || a.window().lo != b.window().lo || a.window().hi != b.window().hi) {
        raise(errc::invalid_argument, "operators live on different windows");
    }
    const Window w = a.window();
    const long qq = static_cast<long>(a.q());
    const long a_shift = to_long(floor(Rational(a.shift() * Rational(qq))));
    TruncatedOperator out(a.q(), w, a.shift() + b.shift());
    const auto sat = [](long x, long y) {
        return x >= TruncatedOperator::unlimited ? x : x + y;
    };
    for (long col = w.lo; col <= w.hi; ++col) {
        const auto c = out.col_index(col);
        bool below = b.spills_below(col);
        long known = sat(b.known_limit(col), a_shift);
        bool dropped = b.m_dropped[b.col_index(col)];
        if (dropped) {
            known = std::min(known, w.hi + 1 + a_shift);
        }
        for (long mid = w.lo; mid <= w.hi; ++mid) {
            const Rational &bv = b.entry(mid, col);
            if (sgn(bv) == 0) {
                continue;
            }
            below = below || a.spills_below(mid);
            known = std::min(known, a.known_limit(mid));
            dropped = dropped || a.m_dropped[a.col_index(mid)];
            for (long row = w.lo; row <= w.hi; ++row) {
                const Rational &av = a.entry(row, mid);
                if (sgn(av) != 0) {
                    out.m_entries[out.index(row, col)] += av * bv;
                }
            }
        }
        if (known < w.lo) {
            below = true;
        }
        out.m_below[c] = below;
        out.m_known[c] = known;
        out.m_dropped[c] = dropped;
    }
    return out;
}

ExtRational op_ord(const TruncatedOperator &a)
{
    ExtRational best = ExtRational::pos_inf();
    const Window &w = a.window();
    const long qq = static_cast<long>(a.q());
    for (const long col : a.unclipped_columns()) {
        for (long row = w.lo; row <= w.hi; ++row) {
            if (sgn(a.entry(row, col)) != 0) {
                best = min(best, ExtRational(make_rational(row - col, qq)));
                break;
            }
        }
    }
    return best;
}

bool agree_on_window(const TruncatedOperator &a, const TruncatedOperator &b, std::size_t *compared)
{
    if (a.q() != b.q() || a.window().lo != b.window().lo || a.window().hi != b.window().hi) {
        raise(errc::invalid_argument, "operators live on different windows");
    }
    const Window &w = a.window();
    std::size_t n = 0;
    bool ok = true;
    for (long col = w.lo; col <= w.hi; ++col) {
        for (long row = w.lo; row <= w.hi; ++row) {
            if (!a.entry_known(row, col) || !b.entry_known(row, col)) {
                continue;
            }
            ++n;
            if (a.entry(row, col) != b.entry(row, col)) {
                ok = false;
            }
        }
    }
    if (compared != nullptr) {
        *compared = n;
    }
    return ok;
}

// ---------------------------------------------------------------------------

ExpansionReport expansion_residual(const GradedOperator &a, const GradedOperator &b, long m, Window w)
{
    require_same_q(a, b);
    const auto fail = [](const std::string &why) { raise(errc::hypothesis_violated, why); };
    if (a.size() == 0 || !a.components().front().is_constant() || a.components().front().is_zero()) {
        fail("A is not invertible with a constant leading component");
    }
    const std::size_t probe = static_cast<std::size_t>(w.width()) + 1;
    const GradedOperator a_inv = inverse(a, probe);
    const ExtRational ord_a = op_ord(TruncatedOperator::from_graded(a, w));
    const ExtRational ord_ainv = op_ord(TruncatedOperator::from_graded(a_inv, w));
    const ExtRational ord_b = op_ord(TruncatedOperator::from_graded(b, w));
    if (!ord_a.is_finite() || !ord_ainv.is_finite() || !ord_b.is_finite()) {
        fail("Ord(A), Ord(A^-1) or Ord(B) is not visible on the window");
    }
    if (ord_ainv != -ord_a) {
        fail("Ord(A^-1) = " + to_string(ord_ainv) + " but Ord(A) = " + to_string(ord_a));
    }
    if (ord_a > ord_b) {
        fail("Ord(A) > Ord(B)");
    }
    const GradedOperator ba = commutator(b, a, probe);
    if (!commutator(a, ba, probe).is_zero()) {
        fail("[A,[B,A]] is not zero");
    }
    if (m < 0 && ord_a == ord_b) {
        fail("negative powers need Ord(A) < Ord(B)");
    }

    ExpansionReport rep;
    rep.a = ord_a.value();
    rep.b = ord_b.value();
    rep.m = m;
    rep.bound = rep.a * Rational(m - 1) + rep.b;

    std::size_t k = no_limit;
    if (m < 0) {
        const long gap = to_long(Rational((rep.b - rep.a) * Rational(static_cast<long>(a.q()))));
        k = static_cast<std::size_t>(gap + 2 * w.width() + 1);
    }
    const GradedOperator sum = a + b;
    GradedOperator resid = power(sum, m, k) - power(a, m, k);
    if (m != 0) {
        resid = resid - Rational(m) * compose(power(a, m - 1, k), b, k);
    }
    if (m != 0 && m != 1) {
        const Rational c(make_rational(m * (m - 1), 2));
        resid = resid - c * compose(power(a, m - 2, k), ba, k);
    }
    const auto t = TruncatedOperator::from_graded(resid, w);
    rep.residual_ord = op_ord(t);
    rep.unclipped = t.unclipped_count();
    rep.holds = rep.residual_ord >= ExtRational(rep.bound);
    return rep;
}

FracRootReport check_fractional_root(const GradedOperator &p_op, long p, Window w)
{
    const long span = p_op.shift() < 0 ? -p_op.shift() : p_op.shift();
    const auto k = static_cast<std::size_t>(w.width() + span + 1);
    const GradedOperator q = fractional_root(p_op, p, k);
    const long n = p > 0 ? p : -p;
    GradedOperator back = power(q, n, k);
    if (p < 0) {
        back = inverse(back, k);
    }
    FracRootReport rep;
    rep.p = p;
    rep.holds = agree_on_window(TruncatedOperator::from_graded(back, w), TruncatedOperator::from_graded(p_op, w),
                                &rep.compared)
                && rep.compared > 0;
    return rep;
}

// ---------------------------------------------------------------------------

bool StarReport::holds() const
{
    return lower_orders_match
           && std::all_of(columns.begin(), columns.end(), [](const StarColumn &c) { return c.match; });
}

StarReport verify_star_coefficient(const RationalSeries &f_in, unsigned long r, Window w)
{
    if (r == 0) {
        raise(errc::invalid_argument, "ramification must be positive");
    }
    const auto &field = f_in.field();
    RationalSeries f(field, f_in.var(), r);
    for (const auto &[e, c] : f_in.terms()) {
        if (sgn(e) <= 0) {
            f.add_term(e, c);
        }
    }
    if (f.empty()) {
        raise(errc::zero_class, "f has no terms of exponent <= 0");
    }
    const long rr = static_cast<long>(r);
    const Rational lead_e = f.leading_exponent();
    const Rational sr = -lead_e * Rational(rr);
    if (!is_integer(sr)) {
        raise(errc::invalid_argument, "leading exponent is not in (1/r)Z");
    }
    StarReport rep;
    rep.r = rr;
    rep.s = to_long(sr);
    rep.a = f.leading_coeff();
    const long s = rep.s;
    if (s == 0) {
        rep.degenerate = true;
        return rep;
    }

    // f = a z^{-s/r} (1 + u); naive_i = [z^{i/r}] (1 + u)^{-r/(r+s)}.
    const auto unit = shift(scale(Rational(Rational(1) / rep.a), f), -lead_e);
    const ExtRational cap(make_rational(s + 1, rr));
    const auto naive_series = pow_rat(unit, make_rational(-rr, rr + s), cap);
    const auto naive = [&](long i) { return naive_series.coeff(make_rational(i, rr)); };

    const GradedOperator a_op = GradedOperator::multiplication(shift(f, Rational(-1)), r);
    const GradedOperator b_op = GradedOperator::derivation(0, r);
    const GradedOperator p_op = Rational(Rational(1) / rep.a) * (a_op + b_op);
    const auto k = static_cast<std::size_t>(s + 1);
    const GradedOperator q_op = fractional_root(p_op, -(rr + s), k);
    const GradedOperator d_op = power(q_op, rr, k) - GradedOperator::multiplication(
                                                          RationalSeries::monomial(field, f.var(), Rational(1), Rational(1)), r);

    // d_op is normalized to start at its first nonzero component; align to z^1.
    const long base = rr;
    const auto d_comp = [&](long i) { return comp_or_zero(d_op, base + i - d_op.shift()); };
    for (long i = 0; i < s; ++i) {
        const Rational want = i == 0 ? Rational(0) : naive(i);
        if (d_comp(i) != Polynomial::constant(want)) {
            rep.lower_orders_match = false;
        }
    }

    const auto t = TruncatedOperator::from_graded(d_op, w);
    const Rational inv_a = Rational(1) / rep.a;
    const Rational rs(rr + s);
    for (long n = w.lo; n <= w.hi; ++n) {
        const long row = n + rr + s;
        if (!t.entry_known(row, n)) {
            ++rep.clipped;
            continue;
        }
        StarColumn col;
        col.n = n;
        col.observed = t.entry(row, n);
        col.naive = naive(s);
        col.predicted = col.naive
                        - inv_a * (Rational(Rational(n + rr) / rs) + Rational(Rational(s) / Rational(2 * (rr + s))));
        col.match = col.observed == col.predicted;
        rep.columns.push_back(std::move(col));
    }
    return rep;
}

} // namespace laft
