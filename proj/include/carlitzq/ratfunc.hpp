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

#ifndef CARLITZQ_RATFUNC_HPP
#define CARLITZQ_RATFUNC_HPP

#include <string>

#include "carlitzq/intpoly.hpp"

namespace carlitzq {

/// Element of the field Q(q), kept in the unique canonical form:
/// den != 0, gcd(num, den) = 1 as polynomials, gcd of the integer
/// contents of num and den is 1, and den has positive leading
/// coefficient. Structural equality therefore equals mathematical
/// equality, and every identity check in the library reduces to ==.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}                 // NOLINT: implicit by design
    RatFunc(const BigInt& c) : num_(c), den_(1) {}        // NOLINT: implicit by design
    RatFunc(IntPoly p) : num_(std::move(p)), den_(1) {}   // NOLINT: implicit by design
    RatFunc(const Rational& x) : num_(x.num()), den_(x.den()) {} // NOLINT: implicit by design

    /// The canonical representative of num/den. normalized(a*c, b*c) is
    /// structurally equal to normalized(a, b) for any nonzero c.
    static RatFunc normalized(IntPoly num, IntPoly den);

    /// q^k for any integer k (1/q^|k| when k < 0).
    static RatFunc q_power(long k);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;

    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;
    /// Integer power; negative exponents invert (DivisionByZero on 0).
    RatFunc pow(long e) const;

    /// Exact value at q = q0; PoleAtPoint when den(q0) = 0 (canonical
    /// form guarantees num(q0) != 0 there, so the pole is genuine).
    Rational eval(const Rational& q0) const;

    /// Canonical text form, e.g. `q/(q^3 + 2*q^2 + 2*q + 1)`; a
    /// denominator of 1 is omitted, a multi-term numerator gets parens.
    std::string str() const;

private:
    RatFunc(IntPoly num, IntPoly den, int /*canonical_tag*/)
        : num_(std::move(num)), den_(std::move(den)) {}
    IntPoly num_;
    IntPoly den_;
};

} // namespace carlitzq

#endif // CARLITZQ_RATFUNC_HPP
