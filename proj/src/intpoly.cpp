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

#include "carlitzq/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace carlitzq {

namespace {
const BigInt kZero = 0;
} // namespace

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(const BigInt& coeff, std::size_t power) {
    IntPoly p;
    if (coeff == 0) return p;
    p.c_.assign(power + 1, kZero);
    p.c_[power] = coeff;
    return p;
}

const BigInt& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw Error("IntPoly: leading coefficient of zero polynomial");
    return c_.back();
}

std::size_t IntPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& c : c_)
        if (c != 0) ++n;
    return n;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), kZero);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), kZero);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly operator*(const IntPoly& a, const BigInt& s) {
    if (s == 0) return IntPoly();
    IntPoly r(a);
    for (auto& c : r.c_) c *= s;
    return r;
}

IntPoly IntPoly::pow(unsigned long e) const {
    IntPoly base(*this), r(1);
    while (e != 0) {
        if (e & 1ul) r *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return r;
}

Rational IntPoly::eval(const Rational& q0) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q0 + Rational(c_[i]);
    return acc;
}

BigInt IntPoly::eval_int(const BigInt& q0) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q0 + c_[i];
    return acc;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : c_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    return div_content(content());
}

IntPoly IntPoly::div_content(const BigInt& s) const {
    if (s == 1) return *this;
    IntPoly r(*this);
    for (auto& c : r.c_) {
        BigInt q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
        if (rem != 0) throw ConsistencyError("IntPoly: inexact content division");
        c = q;
    }
    return r;
}

IntPoly IntPoly::div_exact(const IntPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("IntPoly: division by zero polynomial");
    if (is_zero()) return IntPoly();
    IntPoly rem(*this);
    if (rem.degree() < d.degree()) throw ConsistencyError("IntPoly: inexact division (degree)");
    IntPoly quot;
    quot.c_.assign(static_cast<std::size_t>(rem.degree() - d.degree()) + 1, kZero);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        BigInt t, s;
        mpz_tdiv_qr(t.get_mpz_t(), s.get_mpz_t(), rem.leading().get_mpz_t(),
                    d.leading().get_mpz_t());
        if (s != 0) throw ConsistencyError("IntPoly: inexact division (leading coefficient)");
        std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
        quot.c_[shift] = t;
        rem -= IntPoly::monomial(t, shift) * d;
    }
    if (!rem.is_zero()) throw ConsistencyError("IntPoly: inexact division (remainder)");
    quot.trim();
    return quot;
}

namespace {

// Pseudo-remainder of a by b: some lc(b)^e multiple of a reduced below
// deg b. The multiplier is irrelevant to the gcd because the caller takes
// primitive parts.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        std::size_t shift = static_cast<std::size_t>(a.degree() - db);
        IntPoly t = IntPoly::monomial(a.leading(), shift) * b;
        a = a * lb - t;
    }
    return a;
}

IntPoly positive_leading(IntPoly p) {
    if (!p.is_zero() && p.leading() < 0) return -p;
    return p;
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return positive_leading(b.primitive_part());
    if (b.is_zero()) return positive_leading(a.primitive_part());
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    return positive_leading(std::move(u));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BigInt& c = c_[i];
        if (c == 0) continue;
        BigInt a = ::abs(c);
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << '*';
            out << 'q';
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

} // namespace carlitzq
