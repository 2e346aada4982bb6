#ifndef LAFT_TOOLS_VERIFY_HPP
#define LAFT_TOOLS_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <laft/fourier.hpp>
#include <laft/operator_lab.hpp>

namespace laft::verify
{

// Bounded draws built directly on the engine output, so a seed gives the
// same sequence with every standard library.
class Sampler
{
public:
    explicit Sampler(std::uint64_t seed) : m_rng(seed) {}

    // Uniform-ish integer in [lo, hi].
    long range(long lo, long hi);
    bool coin();
    // num/den with |num| <= max_num, 1 <= den <= max_den; may be zero.
    Rational rational(long max_num, long max_den);
    Rational nonzero_rational(long max_num, long max_den);

private:
    std::mt19937_64 m_rng;
};

// A class a z^{-s/r} + ... + b (plus a positive-exponent tail that the
// normalization drops), with a chosen so that every root the exact backend
// needs for `kind` is rational.
struct RandomClass {
    RationalSeries f;
    long r = 1;
    long s = 1;
    Rational a;
    Rational b;
};

RandomClass random_class(Sampler &rng, TransformKind kind);

// Same shape over the complex backend with an arbitrary leading coefficient.
ComplexSeries random_complex_class(Sampler &rng, const ComplexField &field, Var var, long r, long s, Rational *b);

// h = c z + c_2 z^2 + ... + c_k z^k.
RationalSeries random_power_series(Sampler &rng, Var var);

// Finite Laurent polynomial with integer exponents and ord != 0.
RationalSeries random_laurent(Sampler &rng, Var var);

struct ExpansionConfig {
    GradedOperator a;
    GradedOperator b;
    std::string label;
};

// A = mult(z^{-1} f) with f a random Laurent polynomial, B = z^n d/dz with
// Ord(A) <= Ord(B); `strict` asks for Ord(A) < Ord(B).
ExpansionConfig random_expansion_config(Sampler &rng, bool strict);

// Window starting at -6 that is tall enough for the residual bound
// a(m-1) + b to be visible; negative m pushes images far upward.
Window expansion_window(const GradedOperator &a, const GradedOperator &b, long m);

// P with P_0 = 1 and shift divisible by p.
GradedOperator random_root_operator(Sampler &rng, long p);

// class(f(-z)) in the same variable: coefficients times exp(pi i e).
ComplexSeries reflect(const ComplexSeries &f);

// Candidate landing points of the round trip, as bits.
enum RoundTripBranch : unsigned { same = 1, reflected = 2, dual_reflected = 4, dual = 8 };
// "f(z)", "f(-z)", "-f(-z)", "-f(z)"; the lowest set bit names a mask.
std::string branch_name(unsigned mask);
// Which of f(z), f(-z), -f(-z), -f(z) the round trip of f lands on.
unsigned round_trip_branches(const ComplexSeries &f, unsigned long r);

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t trials = 0;
    std::vector<std::string> notes;    // extra report lines
    std::vector<std::string> failures; // one line per failed trial
    bool ok() const noexcept
    {
        return passed == trials && failures.empty();
    }
};

const std::vector<std::string_view> &suite_names();

// Runs trials 0..n-1; trial i draws from Sampler(seed + i), so results do
// not depend on evaluation order.
SuiteResult run_suite(std::string_view name, std::size_t trials, std::uint64_t seed);

} // namespace laft::verify

#endif
