#pragma once

// Characteristic roots r_{a_1..a_t} (the unique x >= 1 with 1 = sum x^{-a_i}),
// the growth bases Theta_d and Gamma_d, and the closed-form upper bounds on
// total reduced Betti numbers of independence complexes.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace flagbetti {

struct RootQuery {
    std::vector<int> exponents;
};

struct RootResult {
    double value = 1.0;
    double residual = 0.0;
    double tolerance = 0.0;
};

inline constexpr double kDefaultRootTolerance = 1e-12;

/// Bisection on [1, B], B doubled until the right-hand side drops below 1.
/// Throws ArgumentError for an empty tuple, a nonpositive exponent or tol <= 0.
RootResult solve_root(const RootQuery& q, double tol = kDefaultRootTolerance);

/// Right-hand side sum_i x^{-a_i}.
double root_equation_rhs(const std::vector<int>& exponents, double x);

/// Parses "5,6,7,7" into a query; throws ParseError with the byte offset.
RootQuery parse_tuple(const std::string& text);
std::string format_tuple(const std::vector<int>& exponents);

/// d^{1/(d+1)}, the root for d copies of d+1.
double theta(int d);
/// The root for the tuple (d+1, d+2, ..., 2d).
double gamma(int d);

std::vector<int> theta_tuple(int d);
std::vector<int> gamma_tuple(int d);

/// Tuples listed in the appendix comparison table, in printed order.
std::vector<std::vector<int>> appendix_tuples();

/// Exact rational exponent.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// The exact value 2^{exp2} * 3^{exp3}.
struct ExactPower {
    Rational exp2;
    Rational exp3;
    double to_double() const;
    std::string to_string() const;
};

/// Exact three-way comparison of a nonnegative integer with 2^{e2} 3^{e3}.
std::strong_ordering compare_exact(std::int64_t value, const ExactPower& bound);

namespace bound {
struct General { int n; };                  // Theta_4^n = 4^{n/5}
struct K5Free { int n; };                   // Theta_3^n = 3^{n/4}
struct MK5Free { int m; int n; };           // 4^{m-1} Theta_3^{n-5(m-1)}
struct K4Free { int n; };                   // 2^{n/3}
struct K4FreeStrong { int n; };             // (T^-4 + T^-5 + T^-6) T^n, T = Theta_2
struct TriangleFree { int n; };             // Gamma_4^n
struct TriangleFree2Degenerate { int n; };  // Gamma_2^n
struct TPBound { int n; };                  // 2^{n/4}
struct TCBound { int n; };                  // 2^{n/4} (2^{-1/2} + 2^{-1/4})
} // namespace bound

using BoundFormula = std::variant<bound::General, bound::K5Free, bound::MK5Free, bound::K4Free,
                                  bound::K4FreeStrong, bound::TriangleFree, bound::TriangleFree2Degenerate,
                                  bound::TPBound, bound::TCBound>;

struct BoundValue {
    double value = 0.0;
    /// Present when the bound is a pure product of powers of 2 and 3.
    std::optional<ExactPower> exact;
};

/// Throws ArgumentError when n < 0 or m < 1.
BoundValue theorem_bound(const BoundFormula& f);
std::string describe(const BoundFormula& f);

/// True when value <= bound, exactly if the bound is exact, otherwise with a
/// relative slack of 1e-9 against floating-point noise.
bool within_bound(std::int64_t value, const BoundValue& bound);

} // namespace flagbetti
