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

#ifndef CARLITZQ_QEXPPOLY_HPP
#define CARLITZQ_QEXPPOLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "carlitzq/ratfunc.hpp"

namespace carlitzq {

/// q-polynomial: a polynomial in y = q^X with RatFunc coefficients,
/// stored ascending. Its degree is the degree in y, matching the degree
/// as a polynomial in [X] = (y - 1)/(q - 1).
class QExpPoly {
public:
    QExpPoly() = default;
    QExpPoly(RatFunc constant); // NOLINT: implicit by design
    explicit QExpPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QExpPoly monomial(RatFunc coeff, std::size_t power);
    /// The monomial y = q^X.
    static QExpPoly y() { return monomial(RatFunc(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const RatFunc& coeff(std::size_t i) const;
    const std::vector<RatFunc>& coeffs() const { return c_; }

    friend QExpPoly operator+(const QExpPoly& a, const QExpPoly& b);
    friend QExpPoly operator-(const QExpPoly& a, const QExpPoly& b);
    friend QExpPoly operator*(const QExpPoly& a, const QExpPoly& b);
    QExpPoly operator-() const;
    friend QExpPoly operator*(const QExpPoly& a, const RatFunc& s);
    friend QExpPoly operator*(const RatFunc& s, const QExpPoly& a) { return a * s; }

    QExpPoly& operator+=(const QExpPoly& o) { *this = *this + o; return *this; }
    QExpPoly& operator-=(const QExpPoly& o) { *this = *this - o; return *this; }
    QExpPoly& operator*=(const QExpPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const QExpPoly& a, const QExpPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QExpPoly& a, const QExpPoly& b) { return !(a == b); }

    QExpPoly pow(unsigned long e) const;

    /// Exact substitution y := q^N (X := N); N may be negative.
    RatFunc eval_int(long n) const;

    /// Substitution X := X + j, i.e. coefficient c_m becomes c_m * q^{j*m}.
    QExpPoly shift_x(long j) const;

    /// The Q with Q*y = *this; NonDivisible if the constant coefficient
    /// is nonzero (q^{-X} * this would leave the q-polynomial ring).
    QExpPoly divide_by_y() const;

    std::string str() const;

private:
    void trim();
    std::vector<RatFunc> c_;
};

} // namespace carlitzq

#endif // CARLITZQ_QEXPPOLY_HPP
