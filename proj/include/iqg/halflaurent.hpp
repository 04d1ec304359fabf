#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace iqg {

// Laurent polynomial in u = v^{1/2} with integer coefficients, together with
// the bar involution u -> u^{-1}.  Exponents are counted in u-units, so the
// variable v corresponds to u^2.
class HalfLaurent {
public:
    HalfLaurent() = default;
    HalfLaurent(long long c) {
        if (c != 0) c_[0] = c;
    }

    static HalfLaurent u_pow(int k, long long c = 1) {
        HalfLaurent r;
        if (c != 0) r.c_[k] = c;
        return r;
    }
    static HalfLaurent v_pow(int k, long long c = 1) { return u_pow(2 * k, c); }

    bool is_zero() const { return c_.empty(); }
    long long coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? 0 : it->second;
    }
    const std::map<int, long long>& coeffs() const { return c_; }

    void add_term(int k, long long c) {
        if (c == 0) return;
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    int min_deg() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_deg() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    HalfLaurent bar() const {
        HalfLaurent r;
        for (auto& [k, c] : c_) r.c_[-k] = c;
        return r;
    }
    bool bar_invariant() const { return bar() == *this; }
    bool nonneg() const {
        for (auto& [k, c] : c_)
            if (c < 0) return false;
        return true;
    }

    // true if the polynomial is a single term c*u^k
    bool is_monomial() const { return c_.size() == 1; }

    friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) {
        HalfLaurent r = a;
        for (auto& [k, c] : b.c_) r.add_term(k, c);
        return r;
    }
    friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) {
        HalfLaurent r = a;
        for (auto& [k, c] : b.c_) r.add_term(k, -c);
        return r;
    }
    HalfLaurent operator-() const {
        HalfLaurent r;
        for (auto& [k, c] : c_) r.c_[k] = -c;
        return r;
    }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
        HalfLaurent r;
        for (auto& [k1, c1] : a.c_)
            for (auto& [k2, c2] : b.c_) r.add_term(k1 + k2, c1 * c2);
        return r;
    }
    HalfLaurent& operator+=(const HalfLaurent& o) { return *this = *this + o; }
    HalfLaurent& operator-=(const HalfLaurent& o) { return *this = *this - o; }
    HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }

    friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }
    friend bool operator<(const HalfLaurent& a, const HalfLaurent& b) { return a.c_ < b.c_; }

    // printed in terms of v, with half-integer exponents where needed
    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [k, c] : c_) {
            if (!first) os << (c >= 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            long long a = c < 0 ? -c : c;
            if (a != 1 || k == 0) os << a;
            if (k != 0) {
                if (a != 1) os << "*";
                os << "v^";
                if (k % 2 == 0) os << k / 2;
                else os << "(" << k << "/2)";
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<int, long long> c_;  // exponent (in u) -> coefficient
};

}  // namespace iqg
