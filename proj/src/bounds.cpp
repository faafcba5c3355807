#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>

#include "flagbetti/bounds.hpp"
#include "flagbetti/error.hpp"

namespace flagbetti {

using boost::multiprecision::cpp_int;

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw ArgumentError("zero denominator");
    if (d < 0) n = -n, d = -d;
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : 0;
    den = g ? d / g : 1;
}

double ExactPower::to_double() const {
    return std::pow(2.0, exp2.to_double()) * std::pow(3.0, exp3.to_double());
}

std::string ExactPower::to_string() const {
    auto term = [](int base, const Rational& e) {
        if (e.num == 0) return std::string();
        std::string s = std::to_string(base) + "^";
        if (e.den == 1) return s + std::to_string(e.num);
        return s + "(" + std::to_string(e.num) + "/" + std::to_string(e.den) + ")";
    };
    const std::string a = term(2, exp2), b = term(3, exp3);
    if (a.empty() && b.empty()) return "1";
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

std::strong_ordering compare_exact(std::int64_t value, const ExactPower& bound) {
    if (value < 0) throw ArgumentError("compare_exact expects a nonnegative value");
    if (value == 0) return std::strong_ordering::less;
    // raise both sides to the common denominator L, moving negative exponents across
    const std::int64_t L = std::lcm(bound.exp2.den, bound.exp3.den);
    const std::int64_t e2 = bound.exp2.num * (L / bound.exp2.den);
    const std::int64_t e3 = bound.exp3.num * (L / bound.exp3.den);
    cpp_int lhs = boost::multiprecision::pow(cpp_int(value), static_cast<unsigned>(L));
    cpp_int rhs = 1;
    if (e2 >= 0)
        rhs *= boost::multiprecision::pow(cpp_int(2), static_cast<unsigned>(e2));
    else
        lhs *= boost::multiprecision::pow(cpp_int(2), static_cast<unsigned>(-e2));
    if (e3 >= 0)
        rhs *= boost::multiprecision::pow(cpp_int(3), static_cast<unsigned>(e3));
    else
        lhs *= boost::multiprecision::pow(cpp_int(3), static_cast<unsigned>(-e3));
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

void require_n(int n) {
    if (n < 0) throw ArgumentError("bound parameter n must be nonnegative");
}

struct Evaluate {
    BoundValue operator()(const bound::General& b) const {
        require_n(b.n);
        ExactPower e{Rational(2 * b.n, 5), Rational(0)};
        return {e.to_double(), e};
    }
    BoundValue operator()(const bound::K5Free& b) const {
        require_n(b.n);
        ExactPower e{Rational(0), Rational(b.n, 4)};
        return {e.to_double(), e};
    }
    BoundValue operator()(const bound::MK5Free& b) const {
        require_n(b.n);
        if (b.m < 1) throw ArgumentError("bound parameter m must be at least 1");
        ExactPower e{Rational(2 * (b.m - 1)), Rational(b.n - 5 * (b.m - 1), 4)};
        return {e.to_double(), e};
    }
    BoundValue operator()(const bound::K4Free& b) const {
        require_n(b.n);
        ExactPower e{Rational(b.n, 3), Rational(0)};
        return {e.to_double(), e};
    }
    BoundValue operator()(const bound::K4FreeStrong& b) const {
        require_n(b.n);
        const double t = theta(2);
        return {(std::pow(t, -4) + std::pow(t, -5) + std::pow(t, -6)) * std::pow(t, b.n), std::nullopt};
    }
    BoundValue operator()(const bound::TriangleFree& b) const {
        require_n(b.n);
        return {std::pow(gamma(4), b.n), std::nullopt};
    }
    BoundValue operator()(const bound::TriangleFree2Degenerate& b) const {
        require_n(b.n);
        return {std::pow(gamma(2), b.n), std::nullopt};
    }
    BoundValue operator()(const bound::TPBound& b) const {
        require_n(b.n);
        ExactPower e{Rational(b.n, 4), Rational(0)};
        return {e.to_double(), e};
    }
    BoundValue operator()(const bound::TCBound& b) const {
        require_n(b.n);
        return {std::pow(2.0, b.n / 4.0) * (std::pow(2.0, -0.5) + std::pow(2.0, -0.25)), std::nullopt};
    }
};

struct Describe {
    std::string operator()(const bound::General& b) const { return "Theta_4^" + std::to_string(b.n); }
    std::string operator()(const bound::K5Free& b) const { return "Theta_3^" + std::to_string(b.n); }
    std::string operator()(const bound::MK5Free& b) const {
        return "4^" + std::to_string(b.m - 1) + "*Theta_3^" + std::to_string(b.n - 5 * (b.m - 1));
    }
    std::string operator()(const bound::K4Free& b) const { return "2^(" + std::to_string(b.n) + "/3)"; }
    std::string operator()(const bound::K4FreeStrong& b) const {
        return "(Theta_2^-4+Theta_2^-5+Theta_2^-6)*Theta_2^" + std::to_string(b.n);
    }
    std::string operator()(const bound::TriangleFree& b) const { return "Gamma_4^" + std::to_string(b.n); }
    std::string operator()(const bound::TriangleFree2Degenerate& b) const {
        return "Gamma_2^" + std::to_string(b.n);
    }
    std::string operator()(const bound::TPBound& b) const { return "2^(" + std::to_string(b.n) + "/4)"; }
    std::string operator()(const bound::TCBound& b) const {
        return "2^(" + std::to_string(b.n) + "/4)*(2^-1/2+2^-1/4)";
    }
};

} // namespace

BoundValue theorem_bound(const BoundFormula& f) { return std::visit(Evaluate{}, f); }

std::string describe(const BoundFormula& f) { return std::visit(Describe{}, f); }

bool within_bound(std::int64_t value, const BoundValue& bound) {
    if (bound.exact) return compare_exact(value, *bound.exact) != std::strong_ordering::greater;
    return static_cast<double>(value) <= bound.value * (1.0 + 1e-9);
}

} // namespace flagbetti
