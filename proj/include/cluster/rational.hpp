#pragma once

#include "cluster/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace cluster {

using i64 = long long;
using BigInt = boost::multiprecision::cpp_int;

// Overflow-checked 64-bit helpers for exponent-vector arithmetic; matrix
// and coefficient arithmetic runs on BigInt rationals and cannot overflow.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("integer overflow in sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in mul");
    return r;
}

inline i64 narrow(const BigInt& v) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw ArithmeticError("value " + v.str() + " exceeds the 64-bit exponent range");
    return v.convert_to<i64>();
}

// Exact rational number, always normalized: den > 0, gcd(|num|, den) = 1.
struct Rat {
    BigInt num = 0;
    BigInt den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}     // NOLINT: implicit by design
    Rat(int n) : num(n), den(1) {}     // NOLINT
    Rat(BigInt n) : num(std::move(n)), den(1) {} // NOLINT
    Rat(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw ArithmeticError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            den = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num, den);
        num /= g;
        den /= g;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    bool is_positive() const { return num > 0; }
    bool is_negative() const { return num < 0; }

    const BigInt& as_big() const {
        if (den != 1) throw ArithmeticError("rational " + str() + " is not an integer");
        return num;
    }
    i64 as_integer() const { return narrow(as_big()); }

    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

    std::string str() const {
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a) {
        Rat r = a;
        r.num = -r.num;
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw ArithmeticError("rational division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }
};

inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// [x]_+ = max(x, 0)
inline Rat plus_part(const Rat& x) { return x.num > 0 ? x : Rat(0); }
inline i64 plus_part(i64 x) { return x > 0 ? x : 0; }

} // namespace cluster
