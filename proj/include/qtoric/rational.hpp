#pragma once

// Exact arithmetic primitives shared by every module: arbitrary-precision
// rationals, continued-fraction rounding of floating-point data, and the
// Lagrange square decompositions used to split positive rationals into
// sums of rational squares.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtoric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer result = 1;
    for (int i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

// Floor of sqrt(n) for n >= 0.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Integer& n, Integer& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

// Best rational approximation of x with denominator <= max_den, by walking
// the continued-fraction convergents. NaN and infinities are rejected.
inline Rational rationalize(double x, const Integer& max_den) {
    if (!std::isfinite(x)) throw std::domain_error("cannot rationalize non-finite value");
    if (max_den < 1) throw std::domain_error("denominator cap must be >= 1");
    bool negative = x < 0;
    double v = negative ? -x : x;

    Integer p0 = 0, q0 = 1;  // previous convergent
    Integer p1 = 1, q1 = 0;  // current convergent
    double frac = v;
    for (int step = 0; step < 64; ++step) {
        double integral = std::floor(frac);
        if (integral > 9.0e18) break;  // x effectively integral at double precision
        Integer a(static_cast<long long>(integral));
        Integer p2 = a * p1 + p0;
        Integer q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1;
        p1 = p2; q1 = q2;
        double rem = frac - integral;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return negative ? -r : r;
}

namespace detail {

// Sum of at most three squares for n not of the form 4^a(8b+7); returns
// true on success within the search caps.
inline bool three_square_roots(const Integer& n, std::vector<Integer>& out) {
    if (n == 0) return true;
    Integer top = isqrt(n);
    int attempts = 0;
    for (Integer b = top; b >= 0 && attempts < 512; --b, ++attempts) {
        Integer rem = n - b * b;
        // two squares: rem = c^2 + d^2 with c >= d
        Integer c_top = isqrt(rem);
        int inner = 0;
        for (Integer c = c_top; c * c * 2 >= rem && inner < 4096; --c, ++inner) {
            Integer d;
            if (is_perfect_square(rem - c * c, d)) {
                if (b > 0) out.push_back(b);
                if (c > 0) out.push_back(c);
                if (d > 0) out.push_back(d);
                return true;
            }
        }
    }
    return false;
}

}  // namespace detail

// Roots (s_1, ..., s_k) with sum s_i^2 == n. Almost always k <= 4 (Lagrange);
// a greedy fallback with more terms guards the search caps. n >= 0.
inline std::vector<Integer> four_square_roots(Integer n) {
    if (n < 0) throw std::domain_error("four_square_roots of negative integer");
    std::vector<Integer> out;
    if (n == 0) return out;
    // Pull out factors of 4: roots scale by 2.
    Integer scale = 1;
    while (n % 4 == 0) {
        n /= 4;
        scale *= 2;
    }
    Integer top = isqrt(n);
    for (Integer a = top, tries = 0; a >= 0 && tries < 256; --a, ++tries) {
        std::vector<Integer> rest;
        if (detail::three_square_roots(n - a * a, rest)) {
            if (a > 0) out.push_back(a);
            for (auto& r : rest) out.push_back(r);
            for (auto& r : out) r *= scale;
            return out;
        }
    }
    // Greedy fallback: strictly decreasing remainders, a few extra terms.
    Integer rem = n;
    while (rem > 0) {
        Integer a = isqrt(rem);
        out.push_back(a);
        rem -= a * a;
    }
    for (auto& r : out) r *= scale;
    return out;
}

// Splits a positive rational p/q into rational square roots r_i with
// sum r_i^2 == value, via p/q = (p*q)/q^2 and integer squares of p*q.
inline std::vector<Rational> rational_square_roots(const Rational& value) {
    if (value < 0) throw std::domain_error("rational_square_roots of negative value");
    std::vector<Rational> out;
    if (value == 0) return out;
    Integer p = numerator(value), q = denominator(value);
    for (const auto& s : four_square_roots(p * q)) out.emplace_back(Rational(s, q));
    return out;
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace qtoric
