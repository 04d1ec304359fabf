#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace iqg {

// Exact rational scalar for the linear-algebra oracle.  Intermediate
// products go through 128 bits; the matrices involved are tiny.
struct Rat {
    long long n = 0;
    long long d = 1;

    Rat() = default;
    Rat(long long v) : n(v), d(1) {}
    Rat(long long n_, long long d_) : n(n_), d(d_) { norm(); }

    void norm() {
        if (d == 0) throw std::runtime_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }

    static Rat make(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 g = 1;
        {
            __int128 x = a, y = d;
            while (y) {
                __int128 t = x % y;
                x = y;
                y = t;
            }
            g = x ? x : 1;
        }
        n /= g;
        d /= g;
        constexpr __int128 lim = 0x7fffffffffffffffLL;
        if (n > lim || -n > lim || d > lim) throw std::runtime_error("rational overflow");
        Rat r;
        r.n = (long long)n;
        r.d = (long long)d;
        return r;
    }

    bool zero() const { return n == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make((__int128)a.n * b.d + (__int128)b.n * a.d, (__int128)a.d * b.d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make((__int128)a.n * b.d - (__int128)b.n * a.d, (__int128)a.d * b.d);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make((__int128)a.n * b.n, (__int128)a.d * b.d);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.n == 0) throw std::runtime_error("rational division by zero");
        return make((__int128)a.n * b.d, (__int128)a.d * b.n);
    }
    Rat operator-() const { return Rat(-n, d); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.n == b.n && a.d == b.d; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
};

}  // namespace iqg

#include <Eigen/Core>

namespace Eigen {
template <>
struct NumTraits<iqg::Rat> : GenericNumTraits<iqg::Rat> {
    typedef iqg::Rat Real;
    typedef iqg::Rat NonInteger;
    typedef iqg::Rat Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 4
    };
    static inline Real epsilon() { return iqg::Rat(0); }
    static inline Real dummy_precision() { return iqg::Rat(0); }
    static inline int digits10() { return 18; }
};
}  // namespace Eigen
