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

#ifndef CARLITZQ_INTPOLY_HPP
#define CARLITZQ_INTPOLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "carlitzq/rational.hpp"

namespace carlitzq {

/// Dense polynomial in the formal variable q with BigInt coefficients,
/// stored ascending. The zero polynomial is the empty coefficient list;
/// otherwise the highest-index coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c) { if (c != 0) c_.push_back(BigInt(c)); } // NOLINT: implicit by design
    IntPoly(const BigInt& c) { if (c != 0) c_.push_back(c); } // NOLINT: implicit by design
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly monomial(const BigInt& coeff, std::size_t power);
    /// The variable q itself.
    static IntPoly q() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    /// Degree as an int; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& coeff(std::size_t i) const;
    const BigInt& leading() const;
    const std::vector<BigInt>& coeffs() const { return c_; }
    std::size_t term_count() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    friend IntPoly operator*(const IntPoly& a, const BigInt& s);
    friend IntPoly operator*(const BigInt& s, const IntPoly& a) { return a * s; }

    IntPoly& operator+=(const IntPoly& o) { *this = *this + o; return *this; }
    IntPoly& operator-=(const IntPoly& o) { *this = *this - o; return *this; }
    IntPoly& operator*=(const IntPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly pow(unsigned long e) const;

    Rational eval(const Rational& q0) const;
    BigInt eval_int(const BigInt& q0) const;

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    BigInt content() const;
    /// this = content() * primitive_part(); the sign stays with the
    /// primitive part.
    IntPoly primitive_part() const;

    /// Exact quotient; throws ConsistencyError if the division leaves a
    /// remainder (callers only divide where exactness is guaranteed).
    IntPoly div_exact(const IntPoly& d) const;
    /// Divides every coefficient by s exactly.
    IntPoly div_content(const BigInt& s) const;

    /// Canonical text form: expanded, descending powers, explicit ^,
    /// `*` between coefficient and power, e.g. `q^3 + 2*q^2 + 2*q + 1`.
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// Primitive gcd with positive leading coefficient (primitive-part
/// Euclidean algorithm). gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

} // namespace carlitzq

#endif // CARLITZQ_INTPOLY_HPP
