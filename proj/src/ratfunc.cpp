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

#include "carlitzq/ratfunc.hpp"

#include <utility>

namespace carlitzq {

RatFunc RatFunc::normalized(IntPoly num, IntPoly den) {
    if (den.is_zero()) throw ZeroDenominator("RatFunc: zero denominator");
    if (num.is_zero()) return RatFunc();
    IntPoly g = poly_gcd(num, den);
    if (!g.is_one()) {
        num = num.div_exact(g);
        den = den.div_exact(g);
    }
    BigInt c = int_gcd(num.content(), den.content());
    if (c != 1) {
        num = num.div_content(c);
        den = den.div_content(c);
    }
    if (den.leading() < 0) {
        num = -num;
        den = -den;
    }
    return RatFunc(std::move(num), std::move(den), 0);
}

RatFunc RatFunc::q_power(long k) {
    if (k >= 0) return RatFunc(IntPoly::monomial(1, static_cast<std::size_t>(k)));
    RatFunc r;
    r.num_ = IntPoly(1);
    r.den_ = IntPoly::monomial(1, static_cast<std::size_t>(-k));
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc::normalized(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc::normalized(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc::normalized(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("RatFunc: division by zero");
    return RatFunc::normalized(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("RatFunc: inverse of zero");
    return normalized(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc base(*this), r(1);
    unsigned long u = static_cast<unsigned long>(e);
    while (u != 0) {
        if (u & 1ul) r *= base;
        u >>= 1;
        if (u != 0) base *= base;
    }
    return r;
}

Rational RatFunc::eval(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d.is_zero()) throw PoleAtPoint("RatFunc: pole at q = " + q0.str());
    return num_.eval(q0) / d;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    if (num_.term_count() > 1) n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
}

} // namespace carlitzq
