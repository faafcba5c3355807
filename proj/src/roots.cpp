#include <cmath>
#include <limits>

#include "flagbetti/bounds.hpp"
#include "flagbetti/error.hpp"

namespace flagbetti {

double root_equation_rhs(const std::vector<int>& exponents, double x) {
    double s = 0.0;
    for (int a : exponents) s += std::pow(x, -a);
    return s;
}

RootResult solve_root(const RootQuery& q, double tol) {
    if (q.exponents.empty()) throw ArgumentError("root query needs at least one exponent");
    for (int a : q.exponents)
        if (a < 1) throw ArgumentError("root exponents must be positive");
    if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");

    RootResult out;
    out.tolerance = tol;
    // rhs(1) = t, so a single exponent has its root exactly at 1
    if (q.exponents.size() == 1) return out;

    const auto& a = q.exponents;
    double lo = 1.0, hi = 2.0;
    while (root_equation_rhs(a, hi) >= 1.0) {
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 2000 && hi - lo > std::numeric_limits<double>::epsilon() * hi; ++it) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;
        if (root_equation_rhs(a, mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    const double rl = std::abs(1.0 - root_equation_rhs(a, lo));
    const double rh = std::abs(1.0 - root_equation_rhs(a, hi));
    out.value = rl <= rh ? lo : hi;
    out.residual = std::min(rl, rh);
    if (out.residual > tol)
        throw Error("root solver residual " + std::to_string(out.residual) + " exceeds tolerance");
    return out;
}

RootQuery parse_tuple(const std::string& text) {
    // Accepts "3,4", "(3,4)" and "(3, 4)"; offsets in errors refer to the raw text.
    RootQuery q;
    std::size_t pos = 0;
    std::size_t end = text.size();
    auto space = [&](std::size_t i) { return text[i] == ' ' || text[i] == '\t'; };
    while (pos < end && space(pos)) ++pos;
    while (end > pos && space(end - 1)) --end;
    if (pos == end) throw ParseError("empty exponent tuple", 0);
    if (text[pos] == '(') {
        if (text[end - 1] != ')') throw ParseError("unbalanced '('", pos);
        ++pos;
        --end;
    }
    while (true) {
        while (pos < end && space(pos)) ++pos;
        const std::size_t start = pos;
        long long v = 0;
        while (pos < end && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) throw ParseError("exponent too large", start);
            ++pos;
        }
        if (pos == start) throw ParseError("expected a positive integer", pos);
        if (v < 1) throw ParseError("exponents must be positive", start);
        q.exponents.push_back(static_cast<int>(v));
        while (pos < end && space(pos)) ++pos;
        if (pos == end) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return q;
}

std::string format_tuple(const std::vector<int>& exponents) {
    std::string s = "(";
    for (std::size_t i = 0; i < exponents.size(); ++i) s += (i ? "," : "") + std::to_string(exponents[i]);
    return s + ")";
}

std::vector<int> theta_tuple(int d) {
    if (d < 1) throw ArgumentError("theta needs d >= 1");
    return std::vector<int>(d, d + 1);
}

std::vector<int> gamma_tuple(int d) {
    if (d < 1) throw ArgumentError("gamma needs d >= 1");
    std::vector<int> t;
    for (int a = d + 1; a <= 2 * d; ++a) t.push_back(a);
    return t;
}

double theta(int d) {
    if (d < 1) throw ArgumentError("theta needs d >= 1");
    return std::pow(static_cast<double>(d), 1.0 / (d + 1));
}

double gamma(int d) { return solve_root({gamma_tuple(d)}).value; }

std::vector<std::vector<int>> appendix_tuples() {
    return {
        {3, 3},
        {6, 6, 6, 6},
        {5, 7, 10, 10, 11, 11, 12, 12},
        {6, 6, 9, 10, 11, 11, 12, 13},
        {6, 6, 7, 8, 9},
        {1, 7},
        {5, 6, 6, 8},
        {5, 6, 7, 7},
        {4, 5, 6},
        {5, 5, 5},
        {3, 4},
    };
}

} // namespace flagbetti
