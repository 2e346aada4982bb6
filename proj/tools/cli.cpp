#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include <laft/expr_io.hpp>
#include <laft/fourier.hpp>

#include "verify.hpp"

namespace laft::cli
{

namespace
{

struct Options {
    std::string kind = "0-inf";
    std::string f;
    std::optional<unsigned long> jordan;
    std::string backend = "rational";
    long prec = 256;
    bool json = false;
    unsigned long q = 1;
    long order = 6;
    std::string suite;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
};

long default_precision()
{
    if (const char *env = std::getenv("LAFT_PREC")) {
        try {
            const long p = std::stol(env);
            if (p >= 16) {
                return p;
            }
        } catch (const std::exception &) {
        }
    }
    return 256;
}

template <CoefficientField F>
int do_transform(const Options &o, const F &field, std::ostream &out)
{
    const auto kind = parse_kind(o.kind);
    const auto f = parse_series<F>(o.f, source_var(*kind), field);
    const auto q = f.empty() ? 1UL : f.minimal_ram();
    const auto cls = normalize(f, q);
    if (o.jordan) {
        const ConnectionObject<F> e({{cls, *o.jordan}});
        const auto t = transform_connection(e, *kind);
        const auto &s = t.summands().front();
        if (o.json) {
            out << to_json(s.cls, s.jordan) << '\n';
        } else {
            out << format_class(s.cls) << "  jordan " << s.jordan << '\n';
        }
        return 0;
    }
    const auto g = fourier_transform(cls, *kind);
    if (o.json) {
        out << to_json(g) << '\n';
    } else {
        out << format_class(g) << '\n';
    }
    return 0;
}

template <CoefficientField F>
int do_normalize(const Options &o, const F &field, std::ostream &out)
{
    const auto f = parse_series<F>(o.f, Var::z, field);
    out << format_class(normalize(f, o.q)) << '\n';
    return 0;
}

template <CoefficientField F>
int do_invert(const Options &o, const F &field, std::ostream &out)
{
    const auto j = parse_series<F>(o.f, Var::z, field);
    auto x = comp_inverse(j, j.var(), ExtRational(Rational(o.order + 1)));
    x.truncate(ExtRational(Rational(o.order + 1)));
    out << format_series(x) << '\n';
    return 0;
}

int do_verify(const Options &o, std::ostream &out)
{
    const auto res = verify::run_suite(o.suite, o.trials, o.seed);
    out << res.name << ": " << res.passed << "/" << res.trials << '\n';
    for (const auto &n : res.notes) {
        out << n << '\n';
    }
    for (const auto &f : res.failures) {
        out << "FAIL " << f << '\n';
    }
    return res.ok() ? 0 : 3;
}

template <typename Fn>
int with_backend(const Options &o, Fn &&fn)
{
    if (o.backend == "complex") {
        return fn(ComplexField(static_cast<mpfr_prec_t>(o.prec)));
    }
    return fn(RationalField{});
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    Options o;
    o.prec = default_precision();

    CLI::App app{"Local formal Fourier transforms of connections", "laft"};
    app.require_subcommand(1);

    auto *transform = app.add_subcommand("transform", "Apply a local Fourier transform to a class");
    transform->add_option("--kind", o.kind, "0-inf, inf-0 or inf-inf")
        ->required()
        ->check(CLI::IsMember({"0-inf", "inf-0", "inf-inf"}));
    transform->add_option("--f", o.f, "Class representative, e.g. \"-4*z^-1\"")->required();
    transform->add_option("--jordan", o.jordan, "Jordan block size")->check(CLI::PositiveNumber);
    transform->add_option("--backend", o.backend)->check(CLI::IsMember({"rational", "complex"}));
    transform->add_option("--prec", o.prec, "Complex precision in bits (default: LAFT_PREC or 256)")
        ->check(CLI::Range(16L, 1L << 20));
    transform->add_flag("--json", o.json, "Print the result as JSON");

    auto *norm = app.add_subcommand("normalize", "Canonical representative of a class");
    norm->add_option("--f", o.f)->required();
    norm->add_option("--q", o.q, "Ramification index")->required()->check(CLI::PositiveNumber);
    norm->add_option("--backend", o.backend)->check(CLI::IsMember({"rational", "complex"}));
    norm->add_option("--prec", o.prec)->check(CLI::Range(16L, 1L << 20));

    auto *invert = app.add_subcommand("invert", "Compositional inverse of a series");
    invert->add_option("--f", o.f)->required();
    invert->add_option("--order", o.order, "Exact through this exponent")->check(CLI::Range(0L, 200L));
    invert->add_option("--backend", o.backend)->check(CLI::IsMember({"rational", "complex"}));
    invert->add_option("--prec", o.prec)->check(CLI::Range(16L, 1L << 20));

    auto *verify_cmd = app.add_subcommand("verify", "Run a randomized property suite");
    verify_cmd->add_option("--suite", o.suite)
        ->required()
        ->check(CLI::IsMember({"expansion", "fracroot", "lagrange", "claim1", "roundtrip", "slopes"}));
    verify_cmd->add_option("--trials", o.trials)->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    verify_cmd->add_option("--seed", o.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (transform->parsed()) {
            return with_backend(o, [&](const auto &field) { return do_transform(o, field, out); });
        }
        if (norm->parsed()) {
            return with_backend(o, [&](const auto &field) { return do_normalize(o, field, out); });
        }
        if (invert->parsed()) {
            return with_backend(o, [&](const auto &field) { return do_invert(o, field, out); });
        }
        return do_verify(o, out);
    } catch (const error &e) {
        err << e.name() << ": " << e.what() << '\n';
        if (e.code() == errc::root_unavailable && o.backend == "rational") {
            err << "hint: the exact backend has no such root; retry with --backend complex\n";
        }
        return is_domain_error(e.code()) ? 2 : 1;
    }
}

} // namespace laft::cli
