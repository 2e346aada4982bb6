#include "verify.hpp"

#include <algorithm>
#include <numeric>

#include <laft/expr_io.hpp>

namespace laft::verify
{

long Sampler::range(long lo, long hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(m_rng() % span);
}

bool Sampler::coin()
{
    return (m_rng() & 1U) != 0;
}

Rational Sampler::rational(long max_num, long max_den)
{
    return make_rational(range(-max_num, max_num), range(1, max_den));
}

Rational Sampler::nonzero_rational(long max_num, long max_den)
{
    long n = range(1, max_num);
    if (coin()) {
        n = -n;
    }
    return make_rational(n, range(1, max_den));
}

namespace
{

Rational rpow(const Rational &x, long n)
{
    Rational out(1);
    for (long i = 0; i < n; ++i) {
        out *= x;
    }
    return out;
}

std::pair<long, long> draw_slope(Sampler &rng, TransformKind kind)
{
    for (;;) {
        long r = 1;
        long s = 1;
        switch (kind) {
            case TransformKind::zero_to_inf:
                r = rng.range(1, 4);
                s = rng.range(1, 6);
                break;
            case TransformKind::inf_to_zero:
                r = rng.range(2, 5);
                s = rng.range(1, r - 1);
                break;
            case TransformKind::inf_to_inf:
                r = rng.range(1, 4);
                s = rng.range(r + 1, r + 5);
                break;
        }
        if (std::gcd(r, s) == 1) {
            return {r, s};
        }
    }
}

template <CoefficientField F, typename Draw>
PuiseuxSeries<F> class_body(Sampler &rng, const F &field, Var var, long r, long s, const typename F::value_type &a,
                            const Rational &b, Draw &&draw)
{
    PuiseuxSeries<F> f(field, var, static_cast<unsigned long>(r));
    f.add_term(make_rational(-s, r), a);
    for (long k = 1; k < s; ++k) {
        if (rng.coin()) {
            f.add_term(make_rational(-s + k, r), draw());
        }
    }
    f.add_term(Rational(0), field.from_rational(b));
    if (rng.coin()) {
        f.add_term(make_rational(1, r), draw());
    }
    return f;
}

} // namespace

RandomClass random_class(Sampler &rng, TransformKind kind)
{
    const auto [r, s] = draw_slope(rng, kind);
    const Rational c = rng.nonzero_rational(3, 2);
    Rational a;
    switch (kind) {
        case TransformKind::zero_to_inf:
            a = -rpow(c, r + s);
            break;
        case TransformKind::inf_to_zero:
            a = rpow(c, r - s);
            break;
        case TransformKind::inf_to_inf:
            a = rpow(c, s - r);
            break;
    }
    const Rational b = rng.rational(5, 4);
    RationalField field;
    auto f = class_body(rng, field, source_var(kind), r, s, a, b, [&] { return rng.nonzero_rational(4, 3); });
    return {std::move(f), r, s, a, b};
}

ComplexSeries random_complex_class(Sampler &rng, const ComplexField &field, Var var, long r, long s, Rational *b)
{
    const BigComplex a = BigComplex(field.from_rational(rng.nonzero_rational(7, 3))
                                    * field.unit_root_power(8, rng.range(0, 7)));
    const Rational bb = rng.rational(5, 4);
    if (b != nullptr) {
        *b = bb;
    }
    return class_body(rng, field, var, r, s, a, bb, [&] { return field.from_rational(rng.nonzero_rational(4, 3)); });
}

RationalSeries random_power_series(Sampler &rng, Var var)
{
    RationalField field;
    RationalSeries h(field, var);
    h.add_term(Rational(1), rng.nonzero_rational(4, 3));
    const long k = rng.range(1, 6);
    for (long e = 2; e <= k; ++e) {
        if (rng.coin()) {
            h.add_term(Rational(e), rng.nonzero_rational(4, 3));
        }
    }
    return h;
}

RationalSeries random_laurent(Sampler &rng, Var var)
{
    RationalField field;
    long p = rng.range(1, 3);
    if (rng.coin()) {
        p = -p;
    }
    RationalSeries j(field, var);
    const Rational c = rng.nonzero_rational(3, 2);
    j.add_term(Rational(p), rpow(c, p < 0 ? -p : p));
    for (long e = p + 1; e <= p + 5; ++e) {
        if (rng.coin()) {
            j.add_term(Rational(e), rng.nonzero_rational(4, 3));
        }
    }
    return j;
}

ExpansionConfig random_expansion_config(Sampler &rng, bool strict)
{
    RationalField field;
    const long q = rng.range(1, 2);
    const long k = rng.range(0, 3);
    RationalSeries f(field, Var::z, static_cast<unsigned long>(q));
    f.add_term(make_rational(-k, q), rng.nonzero_rational(4, 3));
    const long extra = rng.range(0, 3);
    for (long i = 1; i <= extra; ++i) {
        f.add_term(make_rational(-k + i, q), rng.rational(4, 3));
    }
    // Ord(B) = n - 1 against Ord(A) = -k/q - 1.
    const Rational floor_n = make_rational(-k, q);
    long n = to_long(floor(floor_n));
    if (Rational(n) < floor_n || (strict && Rational(n) == floor_n)) {
        ++n;
    }
    n += rng.range(0, 2);
    ExpansionConfig cfg{GradedOperator::multiplication(shift(f, Rational(-1)), static_cast<unsigned long>(q)),
                        GradedOperator::derivation(n, static_cast<unsigned long>(q)), ""};
    cfg.label = "A = mult(z^-1 (" + format_series(f) + ")), B = z^" + std::to_string(n) + " d/dz, q = "
                + std::to_string(q);
    return cfg;
}

Window expansion_window(const GradedOperator &a, const GradedOperator &b, long m)
{
    const Rational bound = a.graded_ord().value() * Rational(m - 1) + b.graded_ord().value();
    const Window base{-6, 6};
    // A lowers by |ord A| per factor (raises for m < 0), B raises by at most ord B.
    const Rational q(static_cast<long>(a.q()));
    const Rational oa = abs(Rational(a.graded_ord().value()));
    const Rational ob = std::max(Rational(b.graded_ord().value()), Rational(0));
    const Rational steps(std::abs(m));
    const Rational down = m > 0 ? Rational(q * steps * oa) : Rational(0);
    const Rational up = m < 0 ? Rational(q * steps * std::max(oa, ob)) : Rational(q * steps * ob);
    return {base.lo - to_long(floor(down)) - 1, base.hi + to_long(floor(up)) + 1};
}

GradedOperator random_root_operator(Sampler &rng, long p)
{
    RationalField field;
    const long d = p * rng.range(-1, 1);
    RationalSeries m(field, Var::z);
    m.add_term(Rational(d), Rational(1));
    for (long i = 1; i <= 2; ++i) {
        if (rng.coin()) {
            m.add_term(Rational(d + i), rng.nonzero_rational(3, 2));
        }
    }
    const long e = rng.range(2, 3);
    return GradedOperator::multiplication(m, 1)
           + rng.nonzero_rational(3, 2) * GradedOperator::derivation(d + e, 1);
}

ComplexSeries reflect(const ComplexSeries &f)
{
    const auto &field = f.field();
    ComplexSeries out(field, f.var(), f.ram());
    for (const auto &[e, c] : f.terms()) {
        const long den = to_long(Integer(e.get_den()));
        const long num = to_long(Integer(e.get_num()));
        out.add_term(e, BigComplex(c * field.unit_root_power(static_cast<unsigned long>(2 * den), num)));
    }
    out.truncate(f.trunc());
    return out;
}

std::string branch_name(unsigned mask)
{
    if (mask & RoundTripBranch::same) {
        return "f(z)";
    }
    if (mask & RoundTripBranch::reflected) {
        return "f(-z)";
    }
    if (mask & RoundTripBranch::dual_reflected) {
        return "-f(-z)";
    }
    if (mask & RoundTripBranch::dual) {
        return "-f(z)";
    }
    return "none";
}

unsigned round_trip_branches(const ComplexSeries &f, unsigned long r)
{
    const auto cls = normalize(f, r);
    const auto back = fourier_inf_0(with_var(fourier_0_inf(cls), Var::zeta));
    const auto refl = reflect(f);
    const auto cand = [&](const ComplexSeries &h) { return normalize(h.with_var(Var::zhat), r); };
    unsigned mask = 0;
    if (classes_equal(back, cand(f))) {
        mask |= RoundTripBranch::same;
    }
    if (classes_equal(back, cand(refl))) {
        mask |= RoundTripBranch::reflected;
    }
    if (classes_equal(back, cand(-refl))) {
        mask |= RoundTripBranch::dual_reflected;
    }
    if (classes_equal(back, cand(-f))) {
        mask |= RoundTripBranch::dual;
    }
    return mask;
}

const std::vector<std::string_view> &suite_names()
{
    static const std::vector<std::string_view> names{"expansion", "fracroot", "lagrange",
                                                     "claim1",    "roundtrip", "slopes"};
    return names;
}

namespace
{

constexpr Window root_window{-6, 6};

Sampler trial_sampler(std::uint64_t seed, std::size_t i)
{
    return Sampler(seed * 0x9E3779B97F4A7C15ULL + i);
}

// Empty string on success, otherwise a description of the failure.
std::string expansion_trial(Sampler &rng)
{
    const long m = rng.range(-3, 5);
    const auto cfg = random_expansion_config(rng, m < 0);
    const auto rep = expansion_residual(cfg.a, cfg.b, m, expansion_window(cfg.a, cfg.b, m));
    if (rep.unclipped == 0) {
        return cfg.label + ", m = " + std::to_string(m) + ": no unclipped columns";
    }
    if (!rep.holds) {
        return cfg.label + ", m = " + std::to_string(m) + ": Ord = " + to_string(rep.residual_ord) + " < "
               + to_string(rep.bound);
    }
    return {};
}

std::string fracroot_trial(Sampler &rng)
{
    static constexpr long choices[] = {2, -2, 3, -3};
    const long p = choices[rng.range(0, 3)];
    const auto op = random_root_operator(rng, p);
    const auto rep = check_fractional_root(op, p, root_window);
    if (!rep.holds) {
        return "p = " + std::to_string(p) + ": Q^p != P on the window";
    }
    return {};
}

std::string lagrange_trial(Sampler &rng)
{
    const auto h = random_power_series(rng, Var::z);
    const long r = rng.range(1, 4);
    const long s = rng.range(0, 6);
    const auto [lhs, rhs] = lagrange_check(h, r, s);
    if (lhs != rhs) {
        return "h = " + format_series(h) + ", r = " + std::to_string(r) + ", s = " + std::to_string(s) + ": "
               + to_string(lhs) + " != " + to_string(rhs);
    }
    return {};
}

std::string claim1_trial(Sampler &rng)
{
    const auto rc = random_class(rng, TransformKind::zero_to_inf);
    const auto det = transform_series(rc.f, static_cast<unsigned long>(rc.r), TransformKind::zero_to_inf);
    const Rational want = rc.b * make_rational(rc.r, rc.r + rc.s) + make_rational(rc.s, 2 * (rc.r + rc.s));
    const Rational got = det.raw.coeff(Rational(0));
    if (got != want) {
        return "f = " + format_series(rc.f) + ": constant " + to_string(got) + " != " + to_string(want);
    }
    return {};
}

std::string roundtrip_trial(Sampler &rng, unsigned &mask)
{
    const ComplexField field(256);
    const auto [r, s] = draw_slope(rng, TransformKind::zero_to_inf);
    const auto f = random_complex_class(rng, field, Var::z, r, s, nullptr);
    mask = round_trip_branches(f, static_cast<unsigned long>(r));
    if (mask == 0) {
        return "f = " + format_series(f) + ": round trip matches none of f(z), f(-z), -f(-z), -f(z)";
    }
    return {};
}

std::string slopes_trial(Sampler &rng)
{
    for (const auto kind : {TransformKind::zero_to_inf, TransformKind::inf_to_zero, TransformKind::inf_to_inf}) {
        const auto rc = random_class(rng, kind);
        const auto g = transform_series(rc.f, static_cast<unsigned long>(rc.r), kind).g;
        long den = rc.r + rc.s;
        if (kind == TransformKind::inf_to_zero) {
            den = rc.r - rc.s;
        } else if (kind == TransformKind::inf_to_inf) {
            den = rc.s - rc.r;
        }
        const Rational want = make_rational(-rc.s, den);
        const std::string where = std::string(kind_name(kind)) + ", f = " + format_series(rc.f);
        if (g.rep().empty() || g.rep().leading_exponent() != want) {
            return where + ": ord " + (g.rep().empty() ? std::string("inf") : to_string(g.rep().leading_exponent()))
                   + " != " + to_string(want);
        }
        if (!is_irreducible(g)) {
            return where + ": output is not irreducible";
        }
    }
    return {};
}

} // namespace

SuiteResult run_suite(std::string_view name, std::size_t trials, std::uint64_t seed)
{
    const auto &names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        raise(errc::invalid_argument, "unknown suite '" + std::string(name) + "'");
    }
    SuiteResult res;
    res.name = std::string(name);
    res.trials = trials;
    unsigned common = ~0U;
    for (std::size_t i = 0; i < trials; ++i) {
        Sampler rng = trial_sampler(seed, i);
        std::string why;
        try {
            if (name == "expansion") {
                why = expansion_trial(rng);
            } else if (name == "fracroot") {
                why = fracroot_trial(rng);
            } else if (name == "lagrange") {
                why = lagrange_trial(rng);
            } else if (name == "claim1") {
                why = claim1_trial(rng);
            } else if (name == "roundtrip") {
                unsigned mask = 0;
                why = roundtrip_trial(rng, mask);
                common &= mask;
            } else {
                why = slopes_trial(rng);
            }
        } catch (const error &e) {
            why = std::string(e.name()) + ": " + e.what();
        }
        if (why.empty()) {
            ++res.passed;
        } else {
            res.failures.push_back("trial " + std::to_string(i) + ": " + why);
        }
    }
    if (name == "roundtrip") {
        if ((common & 15U) == 0) {
            res.failures.push_back("no single branch fits every trial");
        } else {
            res.notes.push_back("branch: " + branch_name(common));
        }
    }
    return res;
}

} // namespace laft::verify
