#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace mal {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the convention C(i,j) = 0 for j < 0 or i < j.
inline Int binomial(long long i, long long j) {
    if (j < 0 || i < j) return 0;
    if (j > i - j) j = i - j;
    Int r = 1;
    for (long long k = 1; k <= j; ++k) {
        r *= i - k + 1;
        r /= k;
    }
    return r;
}

/// Dense integer polynomial, coefficient of x^k at index k.
using IntPoly = std::vector<Int>;

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline IntPoly poly_add(IntPoly a, const IntPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

inline IntPoly poly_scale(IntPoly a, const Int& c) {
    for (auto& x : a) x *= c;
    return a;
}

/// (base)^e for a polynomial base.
inline IntPoly poly_pow(const IntPoly& base, int e) {
    IntPoly r{1};
    for (int i = 0; i < e; ++i) r = poly_mul(r, base);
    return r;
}

inline void poly_trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace mal
