#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "conelift/errors.hpp"

namespace conelift {

/// Exact rational number on 64-bit numerator/denominator.
///
/// Invariants: denominator > 0, gcd(|num|, den) == 1, zero is 0/1.
/// Intermediate products use 128-bit arithmetic; a result that cannot be
/// reduced back into 64 bits throws InputError.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (d == 0) throw InputError("rational: zero denominator");
        reduce();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return make(-static_cast<__int128>(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.num_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw InputError("rational: division by zero");
        __int128 n = static_cast<__int128>(a.num_) * b.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.num_;
        return make(n, d);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    /// Renders "p/q", or just "p" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p" or "p/q" with optional leading minus. Throws InputError.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            size_t used = 0;
            if (slash == std::string::npos) {
                long long n = std::stoll(s, &used);
                if (used != s.size()) throw InputError("rational: trailing characters in '" + s + "'");
                return Rational(n);
            }
            long long n = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw InputError("rational: bad numerator in '" + s + "'");
            std::string dpart = s.substr(slash + 1);
            long long d = std::stoll(dpart, &used);
            if (used != dpart.size()) throw InputError("rational: trailing characters in '" + s + "'");
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw InputError("rational: cannot parse '" + s + "'");
        } catch (const std::out_of_range&) {
            throw InputError("rational: out of range '" + s + "'");
        }
    }

  private:
    long long num_;
    long long den_;

    static Rational make(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw InputError("rational: value exceeds 64-bit range");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void reduce() {
        Rational r = make(num_, den_);
        num_ = r.num_;
        den_ = r.den_;
    }
};

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
  public:
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
        if (rows < 0 || cols <= 0) throw InputError("rational matrix: bad dimensions");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& operator()(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
    Rational& operator()(int r, int c) { return e_[size_t(r) * cols_ + c]; }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    bool is_integral() const {
        for (const auto& x : e_)
            if (!x.is_integer()) return false;
        return true;
    }

    RationalMatrix scaled(const Rational& c) const {
        RationalMatrix out(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * c;
        return out;
    }

    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw InputError("rational matrix: dimension mismatch in addition");
        RationalMatrix out(a.rows_, a.cols_);
        for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
        return out;
    }

  private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

/// Least common multiple of all entry denominators (1 for an all-integer matrix).
inline long long common_denominator(const RationalMatrix& z) {
    long long l = 1;
    for (int r = 0; r < z.rows(); ++r)
        for (int c = 0; c < z.cols(); ++c) {
            long long d = z(r, c).den();
            l = std::lcm(l, d);
        }
    return l;
}

} // namespace conelift
