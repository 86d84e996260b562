#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace wiener {

using Int = boost::multiprecision::cpp_int;

/// Exact fraction in canonical reduced form, denominator > 0.
/// No floating point appears anywhere in formula evaluation.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(Int v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator<(const Rational& x, const Rational& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;
    }

    bool is_integer() const { return den_ == 1; }

    /// Exact conversion; throws if the value is not an integer.
    long long to_integer() const {
        if (den_ != 1) throw std::domain_error("Rational: value is not an integer");
        return num_.convert_to<long long>();
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_, den_;
};

inline Int binom(const Int& n, int k) {
    if (k < 0 || n < 0 || n < k) return 0;
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - (k - i);
        result /= i;
    }
    return result;
}

inline Int binom(long long n, int k) { return binom(Int(n), k); }

}  // namespace wiener
