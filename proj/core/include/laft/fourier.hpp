#ifndef LAFT_FOURIER_HPP
#define LAFT_FOURIER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <laft/canonical_class.hpp>
#include <laft/connection.hpp>
#include <laft/error.hpp>
#include <laft/series_compose.hpp>

namespace laft
{

enum class TransformKind { zero_to_inf, inf_to_zero, inf_to_inf };

constexpr std::string_view kind_name(TransformKind k) noexcept
{
    switch (k) {
        case TransformKind::zero_to_inf:
            return "0-inf";
        case TransformKind::inf_to_zero:
            return "inf-0";
        case TransformKind::inf_to_inf:
            return "inf-inf";
    }
    return "?";
}

constexpr std::optional<TransformKind> parse_kind(std::string_view s) noexcept
{
    if (s == "0-inf") {
        return TransformKind::zero_to_inf;
    }
    if (s == "inf-0") {
        return TransformKind::inf_to_zero;
    }
    if (s == "inf-inf") {
        return TransformKind::inf_to_inf;
    }
    return std::nullopt;
}

// Coordinate of the input and output of each transform.
constexpr Var source_var(TransformKind k) noexcept
{
    return k == TransformKind::zero_to_inf ? Var::z : Var::zeta;
}
constexpr Var target_var(TransformKind k) noexcept
{
    return k == TransformKind::inf_to_zero ? Var::zhat : Var::zetahat;
}

struct TransformOptions {
    // Selects the root exp(2 pi i branch / q_out) times the principal one.
    long root_branch = 0;
    // Recompute with one more step of precision and compare exponents <= 0.
    bool stability_check = true;
};

template <CoefficientField F>
struct TransformDetail {
    CanonicalClass<F> g;
    PuiseuxSeries<F> raw;        // g before normalization, exact through exponent 0
    PuiseuxSeries<F> coordinate; // z (or zeta) in the output variable
    long r = 0;
    long s = 0;
    long q_out = 0;
};

namespace detail
{

template <CoefficientField F>
struct TransformSetup {
    PuiseuxSeries<F> f;     // exponents <= 0 only
    PuiseuxSeries<F> j;     // zhat as a series in the source coordinate, ram r
    PuiseuxSeries<F> f_int; // f rescaled to integer exponents n (f = sum c_n v^{n/r})
    long r;
    long s;
    long q_out;
    int sign; // g = sign * f(x) + s / (2 q_out)
};

template <CoefficientField F>
TransformSetup<F> transform_setup(const PuiseuxSeries<F> &f_in, unsigned long r, TransformKind kind)
{
    if (f_in.var() != source_var(kind)) {
        raise(errc::wrong_point, std::string(kind_name(kind)) + " needs a class in "
                                     + std::string(var_name(source_var(kind))) + ", got "
                                     + std::string(var_name(f_in.var())));
    }
    const auto cls = normalize(f_in, r);
    if (is_zero_class(cls)) {
        raise(errc::zero_class, "the zero class has horizontal sections");
    }
    if (!is_irreducible(cls)) {
        raise(errc::not_irreducible, "class is not irreducible for q = " + std::to_string(r));
    }
    const auto &field = f_in.field();
    PuiseuxSeries<F> f(field, f_in.var(), r);
    PuiseuxSeries<F> f_int(field, f_in.var());
    for (const auto &[e, c] : f_in.terms()) {
        if (sgn(e) > 0) {
            break;
        }
        f.add_term(e, c);
        f_int.add_term(Rational(e * Rational(static_cast<long>(r))), c);
    }
    const long rr = static_cast<long>(r);
    const long s = slope_numerator(cls);
    long q_out = 0;
    int sign = 1;
    PuiseuxSeries<F> j(field, f.var(), r);
    switch (kind) {
        case TransformKind::zero_to_inf:
            q_out = rr + s;
            j = shift(-f, Rational(-1));
            break;
        case TransformKind::inf_to_zero:
            if (s >= rr) {
                raise(errc::slope_violation, "inf-0 needs slope < 1, got " + to_string(make_rational(s, rr)));
            }
            q_out = rr - s;
            sign = -1;
            j = shift(f, Rational(1));
            break;
        case TransformKind::inf_to_inf:
            if (s <= rr) {
                raise(errc::slope_violation, "inf-inf needs slope > 1, got " + to_string(make_rational(s, rr)));
            }
            q_out = s - rr;
            sign = -1;
            j = shift(f, Rational(1));
            break;
    }
    j.set_ram(r);
    return {std::move(f), std::move(j), std::move(f_int), rr, s, q_out, sign};
}

// g = sign * f(x) + s/(2 q_out), exact through exponent 0, where x = y^r and
// y is known below (s + 2 + extra) / q_out.
template <CoefficientField F>
std::pair<PuiseuxSeries<F>, PuiseuxSeries<F>> transform_raw(const TransformSetup<F> &st, long extra, long branch)
{
    const auto &field = st.f.field();
    const Rational step(1, st.q_out);
    const ExtRational root_trunc(Rational(Rational(st.s + 2 + extra) * step));
    const auto rr = reversion_root(st.j, Var::zhat, root_trunc, branch);
    if (rr.root.trunc() < root_trunc) {
        raise(errc::internal_error, "coordinate solve stalled below the required order");
    }
    auto fx = compose(st.f_int, rr.root, ExtRational(step));
    if (st.sign < 0) {
        fx = -fx;
    }
    const auto c = PuiseuxSeries<F>::constant(field, fx.var(), field.from_rational(make_rational(st.s, 2 * st.q_out)));
    auto raw = fx + c;
    raw.set_ram(static_cast<unsigned long>(st.q_out));
    return {std::move(raw), pow_int(rr.root, st.r)};
}

} // namespace detail

// Transform of the class of f (exponents in (1/r)Z, exact through exponent 0).
// The raw series keeps f's own constant term, so it can be used to check the
// constant-term law before the (1/q)Z reduction.
template <CoefficientField F>
TransformDetail<F> transform_series(const PuiseuxSeries<F> &f, unsigned long r, TransformKind kind,
                                    const TransformOptions &opts = {})
{
    const auto st = detail::transform_setup(f, r, kind);
    auto [raw, coord] = detail::transform_raw(st, 0, opts.root_branch);
    if (opts.stability_check) {
        const auto again = detail::transform_raw(st, 1, opts.root_branch);
        if (!agree_below(raw, again.first, ExtRational(Rational(1, st.q_out)))) {
            raise(errc::internal_error, "precision stability check failed");
        }
    }
    auto g = normalize(raw, static_cast<unsigned long>(st.q_out));
    return {std::move(g), std::move(raw), std::move(coord), st.r, st.s, st.q_out};
}

template <CoefficientField F>
TransformDetail<F> transform_detail(const CanonicalClass<F> &f, TransformKind kind, const TransformOptions &opts = {})
{
    return transform_series(f.rep(), f.q(), kind, opts);
}

template <CoefficientField F>
CanonicalClass<F> fourier_0_inf(const CanonicalClass<F> &f, const TransformOptions &opts = {})
{
    return transform_detail(f, TransformKind::zero_to_inf, opts).g;
}

template <CoefficientField F>
CanonicalClass<F> fourier_inf_0(const CanonicalClass<F> &f, const TransformOptions &opts = {})
{
    return transform_detail(f, TransformKind::inf_to_zero, opts).g;
}

template <CoefficientField F>
CanonicalClass<F> fourier_inf_inf(const CanonicalClass<F> &f, const TransformOptions &opts = {})
{
    return transform_detail(f, TransformKind::inf_to_inf, opts).g;
}

template <CoefficientField F>
CanonicalClass<F> fourier_transform(const CanonicalClass<F> &f, TransformKind kind, const TransformOptions &opts = {})
{
    return transform_detail(f, kind, opts).g;
}

// The source coordinate (z or zeta) as a series in the output variable,
// exact below target_trunc.
template <CoefficientField F>
PuiseuxSeries<F> solve_coordinate(const CanonicalClass<F> &f, TransformKind kind, const ExtRational &target_trunc,
                                  long branch = 0)
{
    if (!target_trunc.is_finite()) {
        raise(errc::insufficient_precision, "solve_coordinate needs a finite truncation order");
    }
    const auto st = detail::transform_setup(f.rep(), f.q(), kind);
    const Rational step(1, st.q_out);
    const Rational lead(Rational(st.r) * step);
    const auto rr = reversion_root(st.j, Var::zhat, target_trunc - lead + step, branch);
    auto x = pow_int(rr.root, st.r);
    x.truncate(target_trunc);
    return x;
}

// Summand-wise transform; Jordan sizes are carried over unchanged.
template <CoefficientField F>
ConnectionObject<F> transform_connection(const ConnectionObject<F> &e, TransformKind kind,
                                         const TransformOptions &opts = {})
{
    std::vector<Summand<F>> out;
    out.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        const auto &s = e.summands()[i];
        try {
            out.push_back({fourier_transform(s.cls, kind, opts), s.jordan});
        } catch (const error &err) {
            throw summand_error(i, err);
        }
    }
    return ConnectionObject<F>(std::move(out));
}

} // namespace laft

#endif
