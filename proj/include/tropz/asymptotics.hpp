#pragma once

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "partitions.hpp"

namespace tropz {

using Real = boost::multiprecision::cpp_bin_float_50;

// (2g)! / ((2 floor(g/m) + 2)!)^m * (m!)^4
inline Rational asymp2_bound(int m, int g) {
    if (m < 1 || g < 0) throw DomainError("asymp2_bound needs m >= 1 and g >= 0");
    BigInt den = 1, block = factorial(2 * (g / m) + 2);
    for (int i = 0; i < m; ++i) den *= block;
    BigInt mf = factorial(m);
    return Rational(factorial(2 * g) * mf * mf * mf * mf, den);
}

// floor((h - n0 - 1)/3)!
inline BigInt factorial_bound(int h, int n0) {
    if (h <= n0) throw DomainError("factorial_bound needs h > n0");
    return factorial((h - n0 - 1) / 3);
}

inline Real log_factorial(long long n) {
    if (n < 0) throw DomainError("log_factorial of a negative number");
    if (n < 2) return 0;
    return boost::math::lgamma(Real(n + 1));
}

// Through the exact big-integer factorial; for cross-validation at moderate n.
inline Real log_factorial_exact(int n) {
    if (n < 0) throw DomainError("log_factorial of a negative number");
    if (n > 200000) throw ResourceError("exact factorial too large");
    BigInt f = factorial(n);
    // split off a power of two so the conversion stays in range
    std::size_t bits = f == 0 ? 0 : boost::multiprecision::msb(f);
    std::size_t shift = bits > 1000 ? bits - 1000 : 0;
    Real mant(static_cast<BigInt>(f >> shift));
    return log(mant) + Real(shift) * log(Real(2));
}

inline Real log_asymp2_bound(long long m, long long g) {
    return log_factorial(2 * g) + 4 * log_factorial(m) - Real(m) * log_factorial(2 * (g / m) + 2);
}

// log asymp2_bound over its leading term: part 1 divides by 2g ln m, part 2 by 2g ln m + 4m ln m.
inline Real lemma_a1_ratio(int part, long long m, long long g) {
    if (m <= 1 || g < 1) throw DomainError("needs m > 1 and g >= 1");
    Real lm = log(Real(m));
    Real den = 2 * Real(g) * lm;
    if (part == 2) den += 4 * Real(m) * lm;
    else if (part != 1) throw DomainError("ratio part must be 1 or 2");
    return log_asymp2_bound(m, g) / den;
}

inline Real s_ratio(long long g, long long h, long long m, long long n0) {
    if (m <= 1 || h <= n0 + 1 || g < 1) throw DomainError("s_ratio needs m > 1, h > n0 + 1, g >= 1");
    long long k = (h - n0 - 1) / 3;  // floor(h/3 - (n0+1)/3)
    Real num = log_factorial(2 * g) + 4 * log_factorial(m - 1) -
               Real(m - 1) * log_factorial(2 * (g / (m - 1)) + 2) + log_factorial(k);
    Real lm = log(Real(m));
    Real den = 2 * Real(g) * lm + 4 * Real(m) * lm + Real(h) / 3 * log(Real(h));
    return num / den;
}

enum class LimitLemma : std::uint8_t { A1Part1, A1Part2, A2 };

struct ProbePoint {
    long long g = 0, h = 0, m = 0;
};

struct ProbeRow {
    ProbePoint p;
    Real ratio, abs_err;
};

struct ProbeTable {
    std::vector<ProbeRow> rows;
    bool monotone = true;  // |ratio - 1| non-increasing from the second point on
};

inline ProbeTable limit_probe(LimitLemma lemma, const std::vector<ProbePoint>& ray, long long n0 = 0) {
    for (std::size_t i = 1; i < ray.size(); ++i)
        if (ray[i].g < ray[i - 1].g || ray[i].m < ray[i - 1].m || ray[i].h < ray[i - 1].h)
            throw DomainError("probe ray must be monotone increasing");
    ProbeTable t;
    for (const auto& p : ray) {
        Real r = lemma == LimitLemma::A1Part1   ? lemma_a1_ratio(1, p.m, p.g)
                 : lemma == LimitLemma::A1Part2 ? lemma_a1_ratio(2, p.m, p.g)
                                                : s_ratio(p.g, p.h, p.m, n0);
        t.rows.push_back({p, r, abs(r - 1)});
    }
    for (std::size_t i = 2; i < t.rows.size(); ++i)
        if (t.rows[i].abs_err > t.rows[i - 1].abs_err) t.monotone = false;
    return t;
}

}  // namespace tropz
