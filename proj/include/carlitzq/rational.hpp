// Copyright 2026 the carlitzq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CARLITZQ_RATIONAL_HPP
#define CARLITZQ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "carlitzq/errors.hpp"

namespace carlitzq {

/// Arbitrary-precision signed integer. Zero has a unique representation.
using BigInt = mpz_class;

inline BigInt int_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Exact rational number with the canonical representation den > 0,
/// gcd(|num|, den) = 1, and 0 = 0/1. Canonicalization happens at
/// construction, so structural and mathematical equality coincide.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {} // NOLINT: implicit by design

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw ZeroDenominator("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses a literal of the form `p` or `p/q` with an optional leading
    /// sign and decimal digits; this is the CLI's exact-input syntax.
    static Rational parse(const std::string& text) {
        std::size_t i = 0;
        bool negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            negative = text[i] == '-';
            ++i;
        }
        auto digits = [&](std::size_t from, std::size_t to) {
            if (from >= to) return false;
            for (std::size_t j = from; j < to; ++j)
                if (text[j] < '0' || text[j] > '9') return false;
            return true;
        };
        std::size_t slash = text.find('/');
        std::size_t num_end = slash == std::string::npos ? text.size() : slash;
        if (!digits(i, num_end)) throw Error("Rational: malformed literal '" + text + "'");
        BigInt num(text.substr(i, num_end - i));
        if (negative) num = -num;
        if (slash == std::string::npos) return Rational(num);
        if (!digits(slash + 1, text.size()))
            throw Error("Rational: malformed literal '" + text + "'");
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ZeroDenominator("Rational: zero denominator in '" + text + "'");
        return Rational(num, den);
    }

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

    /// Integer power; negative exponents invert (DivisionByZero on 0).
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) {
            if (is_zero()) throw DivisionByZero("Rational: 0 to a negative power");
            return (Rational(1) / *this).pow(-e);
        }
        Rational r(BigInt(int_pow(v_.get_num(), static_cast<unsigned long>(e))),
                   BigInt(int_pow(v_.get_den(), static_cast<unsigned long>(e))));
        return r;
    }

    std::string str() const { return v_.get_str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

} // namespace carlitzq

#endif // CARLITZQ_RATIONAL_HPP
